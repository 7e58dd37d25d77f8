#!/usr/bin/env python3
"""Build gate: squeezing-formula reading and normalization regressions."""

import sys

from holeburn.const import HOS_READING_TOL
from holeburn.exceptions import HoleBurnError
from holeburn.helpers.normalization import KNOWN_INCONSISTENT, audit_normalization
from holeburn.models import StateKind, StateSpec
from holeburn.witnesses import hos_reading_residuals

SAMPLE_PARAMETERS = (
    {"alpha_mag": 0.3, "p": 0.1, "chi": 0.01},
    {"alpha_mag": 1.0, "p": 0.5, "chi": 0.02},
    {"alpha_mag": 2.5, "p": 0.9, "chi": 0.05},
)


def validate_build() -> bool:
    """Run every gate and report all failures."""
    errors: list[str] = []

    # 1. Some reading of the squeezing coefficients must match the oracle
    residuals = hos_reading_residuals()
    if not any(r <= HOS_READING_TOL for r in residuals.values()):
        errors.append(f"no squeezing reading validates: {residuals}")
    for reading, residual in residuals.items():
        print(f"squeezing reading {reading}: residual {residual:.3e}")

    # 2. Closed-form normalizations
    for kind in StateKind:
        for params in SAMPLE_PARAMETERS:
            try:
                audit = audit_normalization(StateSpec.from_kind(kind, **params))
            except HoleBurnError as err:
                errors.append(f"{kind} {params}: {err}")
                continue
            expected = kind not in KNOWN_INCONSISTENT
            if audit.consistent != expected:
                errors.append(
                    f"{kind} {params}: relative deviation {audit.relative_deviation:.3e}"
                    f" (expected {'agreement' if expected else 'a mismatch'})"
                )

    if errors:
        for err in errors:
            sys.stderr.write(f"BUILD VALIDATION ERROR: {err}\n")
        return False

    return True


if __name__ == "__main__" and not validate_build():
    sys.exit(1)
