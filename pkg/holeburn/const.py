"""Constants for holeburn."""

import math
import os
from typing import Final

PACKAGE: Final = "holeburn"
VERSION: Final = "1.0.0"

# Truncation
DEFAULT_TAIL_TOL: Final = 1e-12
NORMALIZATION_TOL: Final = 1e-12
MAX_CUTOFF: Final = 4000
CUTOFF_SEARCH_START: Final = 32
# Remainder bound must sit this far below tail_tol before a cutoff is trusted
TAIL_SAFETY: Final = 1e-3
HOLE_TOL: Final = 1e-24
VACUUM_FILTER_MARGIN: Final = 1e-12

# Moments
# Sixth-order sub-Poissonian witnesses read the diagonal moment (7, 7)
DEFAULT_MAX_ORDER: Final = 14
SERIES_REL_TOL: Final = 1e-16
SERIES_PATIENCE: Final = 5
MAX_SERIES_TERMS: Final = 20000
DIAGONAL_IMAG_TOL: Final = 1e-10

# Witnesses
DISCREPANCY_REL_TOL: Final = 1e-8
HOS_READING_TOL: Final = 1e-8
HOS_VALIDATION_ORDERS: Final[tuple[int, ...]] = (2, 4, 6)
POISSON_TAIL: Final = 1e-15

# Normalization audit
PRINTED_NORMALIZATION_RTOL: Final = 1e-10
DEEP_TAIL_TOL: Final = 1e-16

# Entanglement
IMAG_RESIDUE_TOL: Final = 1e-10
ENTROPY_CLASSICAL_THRESHOLD: Final = 1e-10

# Sweep / output
CSV_PRECISION: Final = 12
# Enough digits for an exact float round trip
STATE_DUMP_PRECISION: Final = 17
DEFAULT_RESOLUTION: Final = 101
DEFAULT_KERR_CHI: Final = 0.02
DEFAULT_BS_PHOTONS: Final = 10

AXIS_ALPHA: Final[tuple[float, float]] = (0.0, 3.0)
AXIS_P: Final[tuple[float, float]] = (0.005, 0.995)
AXIS_CHI: Final[tuple[float, float]] = (0.0, 0.1)
AXIS_THETA: Final[tuple[float, float]] = (0.0, 2.0 * math.pi)

DEFAULT_HOA_ORDERS: Final[tuple[int, ...]] = (1, 2, 3)
DEFAULT_HOS_ORDERS: Final[tuple[int, ...]] = (2, 4)
DEFAULT_HOSPS_ORDERS: Final[tuple[int, ...]] = (2, 3, 4, 5)

# Status codes (CSV `status` column and CLI exit codes)
STATUS_OK: Final = 0
STATUS_FAILURE: Final = 1
STATUS_INVALID_PARAMETER: Final = 2
STATUS_NUMERICAL_FAILURE: Final = 3

# Logging Levels
LOG_LEVELS: Final[list[str]] = ["DEBUG", "INFO", "WARNING", "ERROR"]
DEFAULT_LOG_LEVEL: Final = os.getenv("HOLEBURN_LOG_LEVEL", "WARNING").upper()
