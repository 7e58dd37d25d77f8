"""Nonclassicality of hole-burnt even coherent, binomial and Kerr states."""

from __future__ import annotations

from .const import VERSION
from .entanglement import linear_entropy, linear_entropy_closed_form
from .models import (
    Engineering,
    Family,
    FockVector,
    Measure,
    MomentTable,
    StateKind,
    StateSpec,
    WitnessReport,
)
from .moments import analytic_moment, analytic_moment_table
from .states import build_state
from .sweep import SweepConfig, run_sweep
from .witnesses import hoa, hos, hosps

__version__ = VERSION

__all__ = [
    "Engineering",
    "Family",
    "FockVector",
    "Measure",
    "MomentTable",
    "StateKind",
    "StateSpec",
    "SweepConfig",
    "WitnessReport",
    "__version__",
    "analytic_moment",
    "analytic_moment_table",
    "build_state",
    "hoa",
    "hos",
    "hosps",
    "linear_entropy",
    "linear_entropy_closed_form",
    "run_sweep",
]
