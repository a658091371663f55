"""
Shared modules for ngtlab.
Consolidates configuration, models, errors and entry point handling.
"""

from .errors import (
    NgtLabError,
    ParseError,
    EvaluationError,
    SingularMetricError,
    SingularEndomorphismError,
    ShapeError,
    StructureError,
    SpecFileError,
    ConstraintError,
)
from .models import (
    Verdict,
    Tolerances,
    CheckRecord,
    CheckReport,
    ChartSection,
    ContactSection,
    ManifoldSpecFile,
    CheckSuiteState,
)
from .utils import (
    configure_logging,
    max_abs,
    verdict_for,
    passes,
    default_tolerances,
)
from .config import (
    NGTLAB_SYMBOLIC_TOL,
    NGTLAB_FD_TOL,
    NGTLAB_STRUCTURE_TOL,
    NGTLAB_REJECT_TOL,
    NGTLAB_FD_STEP,
    NGTLAB_COND_LIMIT,
    NGTLAB_DEFAULT_POINTS,
    NGTLAB_DEFAULT_SEED,
    NGTLAB_PROBE_POINTS,
    NGTLAB_LOG_LEVEL,
    validate_config,
)
from .entry_points import (
    EXIT_OK,
    EXIT_CHECKS_FAILED,
    EXIT_ERROR,
    run_with_error_handling,
)

__all__ = [
    # Errors
    "NgtLabError",
    "ParseError",
    "EvaluationError",
    "SingularMetricError",
    "SingularEndomorphismError",
    "ShapeError",
    "StructureError",
    "SpecFileError",
    "ConstraintError",
    # Models
    "Verdict",
    "Tolerances",
    "CheckRecord",
    "CheckReport",
    "ChartSection",
    "ContactSection",
    "ManifoldSpecFile",
    "CheckSuiteState",
    # Utils
    "configure_logging",
    "max_abs",
    "verdict_for",
    "passes",
    "default_tolerances",
    # Config
    "NGTLAB_SYMBOLIC_TOL",
    "NGTLAB_FD_TOL",
    "NGTLAB_STRUCTURE_TOL",
    "NGTLAB_REJECT_TOL",
    "NGTLAB_FD_STEP",
    "NGTLAB_COND_LIMIT",
    "NGTLAB_DEFAULT_POINTS",
    "NGTLAB_DEFAULT_SEED",
    "NGTLAB_PROBE_POINTS",
    "NGTLAB_LOG_LEVEL",
    "validate_config",
    # Entry points
    "EXIT_OK",
    "EXIT_CHECKS_FAILED",
    "EXIT_ERROR",
    "run_with_error_handling",
]
