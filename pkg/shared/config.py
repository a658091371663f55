"""
Shared configuration and environment setup for ngtlab.
Consolidates environment variable loading and numerical tolerances.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Identity tolerances
NGTLAB_SYMBOLIC_TOL = float(os.getenv("NGTLAB_SYMBOLIC_TOL", "1e-8"))
NGTLAB_FD_TOL = float(os.getenv("NGTLAB_FD_TOL", "1e-4"))
NGTLAB_STRUCTURE_TOL = float(os.getenv("NGTLAB_STRUCTURE_TOL", "1e-9"))
NGTLAB_REJECT_TOL = float(os.getenv("NGTLAB_REJECT_TOL", "1e-3"))

# Numerics
NGTLAB_FD_STEP = float(os.getenv("NGTLAB_FD_STEP", "1e-6"))
NGTLAB_COND_LIMIT = float(os.getenv("NGTLAB_COND_LIMIT", "1e12"))

# Sampling
NGTLAB_DEFAULT_POINTS = int(os.getenv("NGTLAB_DEFAULT_POINTS", "32"))
NGTLAB_DEFAULT_SEED = int(os.getenv("NGTLAB_DEFAULT_SEED", "42"))
NGTLAB_PROBE_POINTS = int(os.getenv("NGTLAB_PROBE_POINTS", "8"))

NGTLAB_LOG_LEVEL = os.getenv("NGTLAB_LOG_LEVEL", "INFO")


def validate_config():
    """Validate that all numeric settings are usable."""
    positive_vars = [
        "NGTLAB_SYMBOLIC_TOL",
        "NGTLAB_FD_TOL",
        "NGTLAB_STRUCTURE_TOL",
        "NGTLAB_REJECT_TOL",
        "NGTLAB_FD_STEP",
        "NGTLAB_COND_LIMIT",
        "NGTLAB_DEFAULT_POINTS",
        "NGTLAB_PROBE_POINTS",
    ]

    bad_vars = []
    for var in positive_vars:
        value = globals()[var]
        if not value > 0:
            bad_vars.append(var)

    for var in ("NGTLAB_SYMBOLIC_TOL", "NGTLAB_FD_TOL"):
        if globals()[var] >= NGTLAB_REJECT_TOL:
            bad_vars.append(f"{var} (must be below NGTLAB_REJECT_TOL)")

    if bad_vars:
        raise ValueError(f"Invalid ngtlab settings: {', '.join(bad_vars)}")

    return True
