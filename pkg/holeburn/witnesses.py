"""Higher-order antibunching, squeezing and sub-Poissonian witnesses."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from functools import cache
from types import MappingProxyType
from typing import Final

import numpy as np
from scipy import stats

from .const import HOS_READING_TOL, HOS_VALIDATION_ORDERS, POISSON_TAIL
from .exceptions import HosReadingError, InvalidOrderError
from .fock_core import (
    number_central_moment_oracle,
    oracle_moment_table,
    quadrature_central_moment_oracle,
)
from .helpers.logging_utils import get_logger
from .helpers.special import (
    binomial,
    double_factorial,
    factorial_or_one,
    gaussian_quadrature_moment,
    pochhammer,
    stirling2,
)
from .models import (
    Family,
    FockVector,
    Measure,
    MomentKey,
    MomentTable,
    StateSpec,
    WitnessReport,
)
from .states import build_parent, coherent_state, fock_state

__all__ = [
    "HOS_READINGS",
    "double_factorial",
    "hoa",
    "hos",
    "hos_central_moment_formula",
    "hos_reading_residuals",
    "hosps",
    "pochhammer",
    "poisson_central_moment",
    "required_pairs",
    "select_hos_reading",
    "stirling2",
]

_LOGGER = get_logger(__name__)

# coefficient(r, i, k) multiplying <a^dag^k a^{r-2i-k}> inside the r-th power
type HosCoefficient = Callable[[int, int, int], float]

HOS_READINGS: Final[Mapping[str, HosCoefficient]] = MappingProxyType(
    {
        # (2i-1)! C(2i, k), with (-1)! = 1
        "printed": lambda r, i, k: factorial_or_one(2 * i - 1) * binomial(2 * i, k),
        # (2i-1)!! C(r-2i, k): normal ordering of (a + a^dag)^r
        "double_factorial": lambda r, i, k: double_factorial(2 * i - 1)
        * binomial(r - 2 * i, k),
    }
)


def _logged(report: WitnessReport) -> WitnessReport:
    if report.discrepancy:
        _LOGGER.debug(
            "%s(%d): formula %.12g and oracle %.12g disagree",
            report.kind,
            report.order,
            report.formula_value,
            report.oracle_value,
        )
    return report


def required_pairs(kind: Measure, order: int) -> set[MomentKey]:
    """Moments a witness of the given order reads from its table."""
    match kind:
        case Measure.HOA:
            return {(1, 1), (order + 1, order + 1)}
        case Measure.HOS:
            return {(j, k) for j in range(order + 1) for k in range(order + 1 - j)}
        case Measure.HOSPS:
            return {(v, v) for v in range(1, order + 2)}
        case Measure.ENTROPY:
            return set()
    raise AssertionError(kind)  # pragma: no cover


def hoa(m: MomentTable, xi: int) -> WitnessReport:
    """Antibunching witness <a^dag^{xi+1} a^{xi+1}> - <N>^{xi+1}."""
    if xi < 1:
        raise InvalidOrderError(f"antibunching order must be >= 1, got {xi}")
    m.require(required_pairs(Measure.HOA, xi))
    value = m.diagonal(xi + 1) - m.mean_photon_number ** (xi + 1)
    return WitnessReport(Measure.HOA, xi, value, value)


def hos_central_moment_formula(
    m: MomentTable,
    l: int,  # noqa: E741
    reading: str,
) -> float:
    """<(Delta X)^l> from normally ordered moments under a coefficient reading."""
    coefficient = HOS_READINGS[reading]
    m.require(required_pairs(Measure.HOS, l))
    mean_sum = m[(1, 0)] + m[(0, 1)]
    total = 0j
    for r in range(l + 1):
        outer = (-1) ** r * binomial(l, r) * mean_sum ** (l - r)
        inner = 0j
        for i in range(r // 2 + 1):
            for k in range(r - 2 * i + 1):
                inner += (
                    coefficient(r, i, k) * binomial(r, 2 * i) * m[(k, r - 2 * i - k)]
                )
        total += outer * inner
    return total.real / 2.0 ** (l / 2)


def _validation_states() -> dict[str, FockVector]:
    top = max(HOS_VALIDATION_ORDERS)
    return {
        "vacuum": fock_state(0, headroom=top),
        "fock1": fock_state(1, headroom=top),
        "fock2": fock_state(2, headroom=top),
        "coherent0.5": coherent_state(0.5, headroom=top),
        "coherent1.0": coherent_state(1.0, headroom=top),
        "ecs1.0": build_parent(StateSpec(Family.ECS, alpha_mag=1.0), headroom=top),
    }


def hos_reading_residuals() -> dict[str, float]:
    """Worst relative mismatch of each reading against the quadrature oracle."""
    top = max(HOS_VALIDATION_ORDERS)
    residuals = dict.fromkeys(HOS_READINGS, 0.0)
    for state in _validation_states().values():
        table = oracle_moment_table(state, required_pairs(Measure.HOS, top))
        for order in HOS_VALIDATION_ORDERS:
            oracle = quadrature_central_moment_oracle(state, order)
            for reading in HOS_READINGS:
                formula = hos_central_moment_formula(table, order, reading)
                mismatch = abs(formula - oracle) / max(1.0, abs(oracle))
                residuals[reading] = max(residuals[reading], mismatch)
    return residuals


@cache
def select_hos_reading() -> str:
    """Pick the coefficient reading that reproduces the quadrature oracle."""
    residuals = hos_reading_residuals()
    for reading, residual in residuals.items():
        if residual <= HOS_READING_TOL:
            _LOGGER.info("Squeezing formula reading: %s (residual %.2e)", reading, residual)
            return reading
    raise HosReadingError(f"no squeezing coefficient reading validates: {residuals}")


def hos(m: MomentTable, v: FockVector, l: int) -> WitnessReport:  # noqa: E741
    """Hong-Mandel squeezing witness S(l)."""
    if l < 2 or l % 2:
        raise InvalidOrderError(f"squeezing order must be even and >= 2, got {l}")
    reading = select_hos_reading()
    gaussian = gaussian_quadrature_moment(l)
    formula = (hos_central_moment_formula(m, l, reading) - gaussian) / gaussian
    oracle = (quadrature_central_moment_oracle(v, l) - gaussian) / gaussian
    return _logged(WitnessReport(Measure.HOS, l, formula, oracle, {"reading": reading}))


def poisson_central_moment(lam: float, l: int) -> float:  # noqa: E741
    """l-th central moment of Poisson(lam) by direct pmf summation."""
    if lam == 0.0:
        return 0.0
    top = int(stats.poisson.isf(POISSON_TAIL, lam)) + 4 * l + 20
    n = np.arange(top + 1, dtype=np.float64)
    return float(np.dot(stats.poisson.pmf(n, lam), (n - lam) ** l))


def hosps(m: MomentTable, v: FockVector, l: int) -> WitnessReport:  # noqa: E741
    """Sub-Poissonian witness D(l): Stirling-number sum and Poisson-moment oracle."""
    if l < 2:
        raise InvalidOrderError(f"sub-Poissonian order must be >= 2, got {l}")
    m.require(required_pairs(Measure.HOSPS, l))
    mean = m.mean_photon_number

    def antibunching(order: int) -> float:
        # A(0) vanishes identically
        if order == 0:
            return 0.0
        return m.diagonal(order + 1) - mean ** (order + 1)

    formula = 0.0
    for u in range(l + 1):
        for w in range(u + 1):
            formula += (
                stirling2(u, w)
                * binomial(l, u)
                * (-1) ** u
                * antibunching(w)
                * mean ** (l - u)
            )

    state_mean = float(np.dot(v.probabilities, np.arange(v.cutoff + 1)))
    oracle = number_central_moment_oracle(v, l) - poisson_central_moment(state_mean, l)
    return _logged(WitnessReport(Measure.HOSPS, l, formula, oracle))
