"""
Check suites: per-point residual functions folded into verdict records.

Every record carries an anchor describing the identity it checks. Conditional
families contribute their checks only at points where the family's condition
held; a check with no contributing point is left out.
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from geometry import (
    connection_from_torsion_and_nabla_g,
    cyclic_dF_identity_residual,
    eisenhart_connection,
    eisenhart_nijenhuis_residual,
    levi_civita,
    nabla_g,
    nijenhuis_via_nabla_a,
    nijenhuis_lowered,
)
from manifolds import random_skew_first_pair, random_symmetric_last_pair
from ngt import (
    AGREE,
    ERRATUM,
    admissible_torsion,
    closed_form_guard,
    ngt_general_decomposition,
    ngt_skew_condition_residual,
    ngt_skew_pipeline,
    ngt_torsion,
)
from shared.models import CheckRecord, Tolerances
from shared.utils import max_abs, verdict_for
from structures import (
    StructureKind,
    aggregate,
    contact_ngt_point,
    contact_skew_torsion,
    hermitian_ngt_equivalence,
    hermitian_skew_torsion,
    para_hermitian_ngt_point,
    para_hermitian_skew_torsion,
    paracontact_ngt_point,
    paracontact_skew_torsion,
    structure_residuals,
)
from tensor import PointFrame, d_two_form, torsion

logger = logging.getLogger(__name__)

ANCHORS: Dict[str, str] = {
    "structure": "compatibility of A, g (and eta, xi) with the detected structure class",
    "levi_civita": "the Levi-Civita connection is torsion free and preserves g",
    "round_trip": "connection built from prescribed torsion and nabla g reproduces both",
    "cyclic_dF_identity": "dF + cyclic T(X,Y,AZ) equals the cyclic sum of nabla F, for every connection",
    "levi_civita_nijenhuis": "N through nabla A and torsion, evaluated for the Levi-Civita connection",
    "eisenhart_torsion": "the Eisenhart connection has torsion dF",
    "eisenhart_nabla_g": "the Eisenhart connection preserves g",
    "eisenhart_nijenhuis": "N expressed through nabla^g F along A",
    "decomposition": "decomposition chain with torsion -dF/3 where the skew condition holds: nabla g, nabla F, Einstein metricity and N",
    "skew_ngt": "skew-torsion NGT connection: N in terms of dF, torsion -dF/3",
    "hermitian_corollary": "almost Hermitian: G-preserving skew connection iff N totally skew, T = N + dF(AX,AY,AZ)",
    "para_hermitian_corollary": "almost para-Hermitian: G-preserving skew connection iff N totally skew, T = -N + dF(AX,AY,AZ)",
    "contact_corollary": "almost contact: G-preserving skew connection iff N^ac totally skew and xi Killing",
    "paracontact_corollary": "almost paracontact: G-preserving skew connection iff N^apc totally skew and xi Killing",
    "nearly_kahler": "nearly Kaehler: (nabla^g_X A)X = 0",
    "hermitian_ngt": "almost Hermitian: skew NGT connection iff nearly Kaehler",
    "hermitian_ngt.biconditional": "no point satisfies exactly one side of the nearly Kaehler equivalence",
    "para_hermitian_ngt": "almost para-Hermitian: skew NGT connection iff N totally skew",
    "contact_ngt": "almost contact: skew NGT connection iff almost-nearly cosymplectic",
    "paracontact_ngt": "almost paracontact: skew NGT connection iff nabla^g A is the dF expression",
}


def anchor_for(name: str) -> str:
    if name in ANCHORS:
        return ANCHORS[name]
    family, _, check = name.partition(".")
    return f"{ANCHORS.get(family, family)} [{check}]"


class RecordCollector:
    """Accumulates check records for one suite run."""

    def __init__(self, tolerances: Tolerances):
        self.tolerances = tolerances
        self.records: List[CheckRecord] = []

    def add(self, name: str, values: Iterable[float], tolerance: Optional[float] = None):
        values = list(values)
        if not values:
            return
        tolerance = self.tolerances.identity if tolerance is None else tolerance
        residual = float(max(values))
        self.records.append(
            CheckRecord(
                name=name,
                anchor=anchor_for(name),
                max_residual=residual,
                tolerance=tolerance,
                verdict=verdict_for(residual, tolerance, self.tolerances.reject),
                samples=len(values),
            )
        )

    def add_conditional(self, family: str, results):
        """Condition over all points, then each check over the points where it held."""
        results = list(results)
        if not results:
            return
        self.add(family, [r.condition_residual for r in results])
        passing = [r for r in results if r.holds]
        names = sorted({name for r in passing for name in r.checks})
        for name in names:
            self.add(f"{family}.{name}", [r.checks[name] for r in passing if name in r.checks])
        summary = aggregate(results)
        for name, value in sorted(summary.info.items()):
            logger.info("[INFO] %s.%s max %.3e (informational)", family, name, value)


def _structure_record(collector: RecordCollector, frames, kind: StructureKind):
    values = [structure_residuals(f).get(kind, float("inf")) for f in frames]
    collector.add("structure", values, collector.tolerances.structure)


def _closed_form_guard(frames, seed: int, tol: float) -> str:
    """Closed Nijenhuis form against the substitution chain on random admissible torsions."""
    rng = np.random.default_rng(seed)
    guards = [
        closed_form_guard(admissible_torsion(random_skew_first_pair(frame.dim, rng), frame), frame, tol)
        for frame in frames
    ]
    logger.info("[INFO] closed Nijenhuis form guard: max residual %.3e", max(g.residual for g in guards))
    return ERRATUM if any(g.branch == ERRATUM for g in guards) else AGREE


def _decomposition(collector: RecordCollector, frames, seed: int) -> str:
    """Decomposition chain fed with the NGT torsion where the skew condition holds; returns the guard branch."""
    tol = collector.tolerances.identity
    results = [
        ngt_general_decomposition(ngt_torsion(frame), frame, tol)
        for frame in frames
        if ngt_skew_condition_residual(frame) <= tol
    ]
    for key in ("nabla_g_match", "nabla_F_match", "metricity", "nijenhuis"):
        collector.add(f"decomposition.{key}", [r.residuals[key] for r in results])
    return _closed_form_guard(frames, seed, tol)


def _round_trip(collector: RecordCollector, frames, seed: int):
    """Random (T, nabla g) pairs through the torsion-prescribed connection and back."""
    rng = np.random.default_rng(seed + 1)
    torsions, metric = [], []
    for frame in frames:
        T = random_skew_first_pair(frame.dim, rng)
        Q = random_symmetric_last_pair(frame.dim, rng)
        gamma = connection_from_torsion_and_nabla_g(T, Q, frame)
        torsions.append(max_abs(torsion(gamma, frame.g)[1] - T))
        metric.append(max_abs(nabla_g(gamma, frame) - Q))
    collector.add("round_trip.torsion", torsions)
    collector.add("round_trip.nabla_g", metric)


def generic_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int) -> Tuple[List[CheckRecord], Optional[str]]:
    collector = RecordCollector(tolerances)
    lc = [levi_civita(f) for f in frames]
    collector.add("levi_civita.torsion", [max_abs(torsion(g, f.g)[1]) for g, f in zip(lc, frames)])
    collector.add("levi_civita.nabla_g", [max_abs(nabla_g(g, f)) for g, f in zip(lc, frames)])
    collector.add("cyclic_dF_identity", [cyclic_dF_identity_residual(g, f) for g, f in zip(lc, frames)])
    collector.add(
        "levi_civita_nijenhuis",
        [max_abs(nijenhuis_via_nabla_a(g, f) - nijenhuis_lowered(f)) for g, f in zip(lc, frames)],
    )
    _round_trip(collector, frames, seed)
    erratum = _decomposition(collector, frames, seed)
    return collector.records, erratum


def eisenhart_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int):
    collector = RecordCollector(tolerances)
    torsions, metric = [], []
    for frame in frames:
        gamma = eisenhart_connection(frame)
        _, T = torsion(gamma, frame.g)
        torsions.append(max_abs(T - d_two_form(frame.dF)))
        metric.append(max_abs(nabla_g(gamma, frame)))
    collector.add("eisenhart_torsion", torsions)
    collector.add("eisenhart_nabla_g", metric)
    collector.add("eisenhart_nijenhuis", [eisenhart_nijenhuis_residual(f) for f in frames])
    return collector.records, None


def _skew_ngt(collector: RecordCollector, frames):
    results = [ngt_skew_pipeline(f, collector.tolerances.identity) for f in frames]
    collector.add("skew_ngt", [r.condition_residual for r in results])
    passing = [r for r in results if r.exists]
    for name in sorted({n for r in passing for n in r.checks}):
        collector.add(f"skew_ngt.{name}", [r.checks[name] for r in passing])


def ngt_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int):
    collector = RecordCollector(tolerances)
    _skew_ngt(collector, frames)
    erratum = _decomposition(collector, frames, seed)
    return collector.records, erratum


def hermitian_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int):
    collector = RecordCollector(tolerances)
    tol = tolerances.identity
    _structure_record(collector, frames, StructureKind.ALMOST_HERMITIAN)
    collector.add_conditional("hermitian_corollary", [hermitian_skew_torsion(f, tol) for f in frames])
    report = hermitian_ngt_equivalence(frames, tol, tolerances.reject)
    collector.add("nearly_kahler", [report.nearly_kahler])
    collector.add("hermitian_ngt.biconditional", [float(report.one_sided_points)], 0.0)
    collector.add("hermitian_ngt", [report.skew_condition.condition_residual])
    for name, value in sorted(report.checks.items()):
        collector.records.append(
            CheckRecord(
                name=f"hermitian_ngt.{name}",
                anchor=anchor_for(f"hermitian_ngt.{name}"),
                max_residual=value,
                tolerance=tol,
                verdict=verdict_for(value, tol, tolerances.reject),
                samples=report.skew_condition.passing_points,
            )
        )
    return collector.records, None


def para_hermitian_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int):
    collector = RecordCollector(tolerances)
    tol = tolerances.identity
    _structure_record(collector, frames, StructureKind.ALMOST_PARA_HERMITIAN)
    collector.add_conditional("para_hermitian_corollary", [para_hermitian_skew_torsion(f, tol) for f in frames])
    collector.add_conditional("para_hermitian_ngt", [para_hermitian_ngt_point(f, tol) for f in frames])
    return collector.records, None


def _cross_path(corollary, ngt_results):
    """Corollary torsion versus the NGT torsion -dF/3, reported side by side only."""
    gaps = [
        max_abs(c.torsion - n.torsion)
        for c, n in zip(corollary, ngt_results)
        if c.torsion is not None and n.torsion is not None
    ]
    if gaps:
        logger.info("[INFO] corollary torsion vs NGT torsion: max difference %.3e", max(gaps))


def contact_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int):
    collector = RecordCollector(tolerances)
    tol = tolerances.identity
    _structure_record(collector, frames, StructureKind.ALMOST_CONTACT)
    corollary = [contact_skew_torsion(f, tol) for f in frames]
    ngt_results = [contact_ngt_point(f, tol) for f in frames]
    collector.add_conditional("contact_corollary", corollary)
    collector.add_conditional("contact_ngt", ngt_results)
    _cross_path(corollary, ngt_results)
    return collector.records, None


def paracontact_suite(frames: List[PointFrame], tolerances: Tolerances, seed: int):
    collector = RecordCollector(tolerances)
    tol = tolerances.identity
    _structure_record(collector, frames, StructureKind.ALMOST_PARA_CONTACT)
    corollary = [paracontact_skew_torsion(f, tol) for f in frames]
    ngt_results = [paracontact_ngt_point(f, tol) for f in frames]
    collector.add_conditional("paracontact_corollary", corollary)
    collector.add_conditional("paracontact_ngt", ngt_results)
    _cross_path(corollary, ngt_results)
    return collector.records, None


SuiteFn = Callable[[List[PointFrame], Tolerances, int], Tuple[List[CheckRecord], Optional[str]]]

SUITES: Dict[str, SuiteFn] = {
    "generic": generic_suite,
    "eisenhart": eisenhart_suite,
    "ngt": ngt_suite,
    "hermitian": hermitian_suite,
    "para-hermitian": para_hermitian_suite,
    "contact": contact_suite,
    "paracontact": paracontact_suite,
}

SUITE_FOR_KIND: Dict[StructureKind, str] = {
    StructureKind.GENERIC: "generic",
    StructureKind.ALMOST_HERMITIAN: "hermitian",
    StructureKind.ALMOST_PARA_HERMITIAN: "para-hermitian",
    StructureKind.ALMOST_CONTACT: "contact",
    StructureKind.ALMOST_PARA_CONTACT: "paracontact",
}
