"""
Shared Pydantic models for ngtlab.
Consolidates report, tolerance and spec-file models used across packages.
"""

import json
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, TypedDict

from pydantic import BaseModel, Field, field_validator, model_validator


class Verdict(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


class Tolerances(BaseModel):
    """Tolerance tiers applied to residuals."""

    identity: float = 1e-8
    structure: float = 1e-9
    reject: float = 1e-3

    @model_validator(mode="after")
    def _ordered(self):
        if not (0 < self.identity < self.reject and 0 < self.structure < self.reject):
            raise ValueError("tolerances must be positive and below the rejection threshold")
        return self


class CheckRecord(BaseModel):
    """One named residual with its verdict."""

    name: str
    anchor: str = Field(min_length=1)
    max_residual: float
    tolerance: float
    verdict: Verdict
    samples: int = 0


class CheckReport(BaseModel):
    """Result of running a check suite on one manifold."""

    manifold: str
    suite: str
    structure: str
    seed: int
    points: int
    skipped: int = 0
    records: List[CheckRecord] = []
    erratum: Optional[str] = None
    wall_time: float = Field(default=0.0, exclude=True)

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(
            r.verdict == Verdict.PASS for r in self.records
        )

    def record(self, name: str) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> str:
        """Stable JSON: sorted keys, records in name order, no wall time."""
        payload = self.model_dump(mode="json")
        payload["records"] = sorted(payload["records"], key=lambda r: r["name"])
        return json.dumps(payload, sort_keys=True, indent=2)


class ChartSection(BaseModel):
    """Chart section of a manifold spec file."""

    coords: List[str]
    dim: Optional[int] = None

    @model_validator(mode="after")
    def _consistent(self):
        if len(set(self.coords)) != len(self.coords):
            raise ValueError("coordinate names must be distinct")
        if not self.coords:
            raise ValueError("chart needs at least one coordinate")
        if self.dim is not None and self.dim != len(self.coords):
            raise ValueError(
                f"dim = {self.dim} but {len(self.coords)} coordinates were given"
            )
        return self


class ContactSection(BaseModel):
    """Optional (eta, xi) pair of a spec file."""

    eta: List[str]
    xi: List[str]


class ManifoldSpecFile(BaseModel):
    """Parsed but not yet compiled manifold spec file."""

    name: Optional[str] = None
    chart: ChartSection
    metric: Dict[str, str]
    two_form: Optional[Dict[str, str]] = None
    endomorphism: Optional[Dict[str, str]] = None
    contact: Optional[ContactSection] = None
    domain: Dict[str, Tuple[float, float]] = {}

    @field_validator("domain")
    @classmethod
    def _boxes(cls, value):
        for coord, (low, high) in value.items():
            if not low < high:
                raise ValueError(f"empty domain interval for {coord}")
        return value

    @model_validator(mode="after")
    def _one_of_f_or_a(self):
        if (self.two_form is None) == (self.endomorphism is None):
            raise ValueError(
                "exactly one of [two_form] or [endomorphism] must be present"
            )
        return self


class CheckSuiteState(TypedDict, total=False):
    """State carried through the check-suite workflow graph."""

    manifold: Any
    manifold_name: str
    requested_suite: str
    count: int
    seed: int
    tolerances: Tolerances
    points: Any
    frames: List[Any]
    skipped: int
    structure: str
    suite: str
    records: List[CheckRecord]
    erratum: Optional[str]
    report: Optional[CheckReport]
    errors: List[str]
