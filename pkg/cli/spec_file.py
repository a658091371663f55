"""
Manifold spec files: TOML text describing a chart and (g, F or A[, eta, xi]).

    name = "flat-kahler-4"

    [chart]
    coords = ["x1", "x2", "x3", "x4"]

    [metric]            # upper triangle, 1-based "i,j" keys
    "1,1" = "1"
    ...

    [two_form]          # strict upper triangle; or [endomorphism] with all "i,j" keys
    "1,2" = "-1"

    [contact]           # optional
    eta = ["0", "0", "1"]
    xi = ["0", "0", "1"]

    [domain]            # optional, default [-1, 1] per coordinate
    x1 = [-0.5, 0.5]

Values are expressions over the chart coordinates (numbers may be given bare).
"""

import logging
import re
import tomllib
from pathlib import Path
from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from exprlang import parse
from shared.config import NGTLAB_PROBE_POINTS, NGTLAB_STRUCTURE_TOL
from shared.errors import NgtLabError, ParseError, SpecFileError
from shared.models import ManifoldSpecFile
from tensor import Chart, GeneralizedMetric, from_expressions, skew_from_expressions

logger = logging.getLogger(__name__)

_KEY_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")
_TOML_LINE_RE = re.compile(r"line (\d+)")


def _line_of(text: str, section: Optional[str], key: Optional[str] = None) -> Optional[int]:
    """Best-effort 1-based line of a section header, or of a key inside it."""
    lines = text.splitlines()
    start = 0
    if section is not None:
        header = re.compile(rf"^\s*\[\s*{re.escape(section)}\s*\]")
        for number, line in enumerate(lines):
            if header.match(line):
                start = number
                break
        else:
            return None
        if key is None:
            return start + 1
    if key is None:
        return None
    pattern = re.compile(rf"""^\s*["']?{re.escape(key)}["']?\s*=""")
    for number in range(start, len(lines)):
        if number > start and section is not None and lines[number].lstrip().startswith("["):
            break
        if pattern.match(lines[number]):
            return number + 1
    return None


class _Loader:
    def __init__(self, text: str, path: str):
        self.text = text
        self.path = path

    def error(self, message: str, section: Optional[str] = None, key: Optional[str] = None) -> SpecFileError:
        return SpecFileError(self.path, message, _line_of(self.text, section, key))

    def read(self) -> ManifoldSpecFile:
        try:
            data = tomllib.loads(self.text)
        except tomllib.TOMLDecodeError as e:
            line = getattr(e, "lineno", None)
            if line is None:
                match = _TOML_LINE_RE.search(str(e))
                line = int(match.group(1)) if match else None
            raise SpecFileError(self.path, f"invalid TOML: {e}", line) from e
        data = self._stringify(data)
        try:
            return ManifoldSpecFile.model_validate(data)
        except ValidationError as e:
            first = e.errors()[0]
            location = [str(part) for part in first["loc"]]
            section = location[0] if location else None
            key = location[1] if len(location) > 1 else None
            raise self.error(
                f"{'.'.join(location) or 'file'}: {first['msg']}", section, key
            ) from e

    @staticmethod
    def _stringify(data: dict) -> dict:
        """Bare numbers in component tables are accepted as constant expressions."""
        for section in ("metric", "two_form", "endomorphism"):
            table = data.get(section)
            if isinstance(table, dict):
                data[section] = {
                    k: repr(v) if isinstance(v, (int, float)) and not isinstance(v, bool) else v
                    for k, v in table.items()
                }
        contact = data.get("contact")
        if isinstance(contact, dict):
            for part in ("eta", "xi"):
                if isinstance(contact.get(part), list):
                    contact[part] = [
                        repr(v) if isinstance(v, (int, float)) and not isinstance(v, bool) else v
                        for v in contact[part]
                    ]
        return data

    def index_table(self, section: str, table: Dict[str, str], n: int) -> Dict[Tuple[int, int], Tuple[str, str]]:
        """{(i, j) 0-based: (key, expression)}; keys outside 1..n are rejected."""
        entries = {}
        for key, value in table.items():
            match = _KEY_RE.match(key)
            if match is None:
                raise self.error(f"[{section}] key {key!r} is not of the form \"i,j\"", section, key)
            i, j = int(match.group(1)) - 1, int(match.group(2)) - 1
            if not (0 <= i < n and 0 <= j < n):
                raise self.error(f"[{section}] index {key!r} is outside 1..{n}", section, key)
            entries[(i, j)] = (key, value)
        return entries

    def parse_expr(self, text: str, chart: Chart, section: str, key: str):
        try:
            return parse(text, chart)
        except ParseError as e:
            raise self.error(f"[{section}] {key}: {e}", section, key) from e

    def triangle(self, section: str, table: Dict[str, str], chart: Chart, strict: bool):
        """Upper-triangle entries; a key given in both orientations is a duplicate."""
        upper = {}
        for (i, j), (key, value) in self.index_table(section, table, chart.dim).items():
            if strict and i == j:
                raise self.error(f"[{section}] diagonal entry {key!r} of a two-form must be absent", section, key)
            a, b = min(i, j), max(i, j)
            if (a, b) in upper:
                raise self.error(
                    f"[{section}] duplicate {'skew' if strict else 'symmetric'} key {key!r}", section, key
                )
            if strict and i > j:
                raise self.error(
                    f"[{section}] two-form keys must have i < j, got {key!r}", section, key
                )
            upper[(a, b)] = self.parse_expr(value, chart, section, key)
        return upper

    def chart(self, spec: ManifoldSpecFile) -> Chart:
        coords = spec.chart.coords
        unknown = sorted(set(spec.domain) - set(coords))
        if unknown:
            raise self.error(f"[domain] unknown coordinate(s) {', '.join(unknown)}", "domain", unknown[0])
        bounds = tuple(spec.domain.get(c, (-1.0, 1.0)) for c in coords)
        return Chart(tuple(coords), bounds)

    def build(self, spec: ManifoldSpecFile, name: str) -> GeneralizedMetric:
        chart = self.chart(spec)
        n = chart.dim

        upper = self.triangle("metric", spec.metric, chart, strict=False)
        table = [[0] * n for _ in range(n)]
        for (i, j), expr in upper.items():
            table[i][j] = table[j][i] = expr
        g = from_expressions(chart, table, (0, 2), "symmetric")

        F = A = None
        if spec.two_form is not None:
            F = skew_from_expressions(chart, self.triangle("two_form", spec.two_form, chart, strict=True))
        else:
            table = [[0] * n for _ in range(n)]
            for (i, j), (key, value) in self.index_table("endomorphism", spec.endomorphism, n).items():
                table[i][j] = self.parse_expr(value, chart, "endomorphism", key)
            A = from_expressions(chart, table, (1, 1))

        eta = xi = None
        if spec.contact is not None:
            for part in ("eta", "xi"):
                if len(getattr(spec.contact, part)) != n:
                    raise self.error(f"[contact] {part} needs {n} components", "contact", part)
            eta = from_expressions(
                chart, [self.parse_expr(v, chart, "contact", "eta") for v in spec.contact.eta], (0, 1)
            )
            xi = from_expressions(
                chart, [self.parse_expr(v, chart, "contact", "xi") for v in spec.contact.xi], (1, 0)
            )
        return GeneralizedMetric(g, F=F, A=A, eta=eta, xi=xi, name=name)

    def validate(self, manifold: GeneralizedMetric, probes: int = NGTLAB_PROBE_POINTS) -> None:
        """Evaluate every component at the probe points; g must invert and eta(xi) = 1."""
        for p in manifold.chart.probe_points(probes):
            where = np.array2string(p, precision=4)
            try:
                frame = manifold.frame(p)
            except NgtLabError as e:
                raise SpecFileError(self.path, f"at {where}: {type(e).__name__}: {e}") from e
            except ArithmeticError as e:
                raise SpecFileError(self.path, f"at {where}: {e}") from e
            if frame.has_contact:
                pairing = float(frame.eta @ frame.xi)
                if abs(pairing - 1.0) > NGTLAB_STRUCTURE_TOL:
                    raise self.error(f"[contact] eta(xi) = {pairing:.6g} at {where}, expected 1", "contact")


def parse_spec_text(text: str, path: str = "<spec>", name: Optional[str] = None) -> GeneralizedMetric:
    """Build and validate a generalized metric from spec-file text."""
    loader = _Loader(text, path)
    spec = loader.read()
    manifold = loader.build(spec, name or spec.name or Path(path).stem)
    loader.validate(manifold)
    logger.info("[SPEC] loaded %s (dim %d) from %s", manifold.name, manifold.chart.dim, path)
    return manifold


def load_spec(path) -> GeneralizedMetric:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpecFileError(str(path), f"cannot read file: {e.strerror or e}") from e
    return parse_spec_text(text, str(path))
