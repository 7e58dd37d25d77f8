"""Closed-form normally ordered moments of the nine states."""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable
from typing import Literal

from scipy import special

from .const import DEFAULT_MAX_ORDER
from .exceptions import InvalidOrderError, InvalidParameterError
from .helpers.logging_utils import get_logger
from .helpers.normalization import amplitude_norm_sq, printed_norm_sq
from .helpers.series import sum_series
from .models import Engineering, Family, MomentKey, MomentTable, StateKind, StateSpec

_LOGGER = get_logger(__name__)

type Normalization = Literal["amplitude", "printed"]


def series_prefactor(spec: StateSpec, normalization: Normalization = "amplitude") -> float:
    """N^2 multiplying a printed series body.

    ``amplitude`` sums the squared amplitudes; ``printed`` uses the closed-form
    constant. They differ only where the closed form is inconsistent.
    """
    if normalization == "printed":
        return printed_norm_sq(spec)
    return amplitude_norm_sq(spec)


def _check_orders(j: int, k: int, max_order: int) -> None:
    if j < 0 or k < 0:
        raise InvalidOrderError(f"moment indices must be >= 0, got {(j, k)}")
    if j + k > max_order:
        raise InvalidOrderError(f"moment order {j + k} exceeds maximum {max_order}")


def _power_term(alpha: complex, ket: int, bra: int, log_denominator: float) -> complex:
    """alpha^ket conj(alpha)^bra / exp(log_denominator), overflow-free."""
    mag, phase = cmath.polar(alpha)
    if mag == 0.0:
        return complex(math.exp(-log_denominator)) if ket + bra == 0 else 0j
    return cmath.exp(
        complex((ket + bra) * math.log(mag) - log_denominator, phase * (ket - bra))
    )


def _even(*indices: int) -> bool:
    return all(i % 2 == 0 for i in indices)


def _kerr_phase(chi: float, bra: int, ket: int) -> complex:
    """exp(i chi [bra(bra-1) - ket(ket-1)])."""
    return cmath.exp(1j * chi * (bra * (bra - 1) - ket * (ket - 1)))


def _lf(n: int) -> float:
    """log n!."""
    return math.lgamma(n + 1)


def _require_family(spec: StateSpec, family: Family) -> None:
    if spec.family is not family:
        raise InvalidParameterError(f"{spec.kind} is not in the {family} family")


def moment_ecs_family(
    variant: StateKind | str,
    j: int,
    k: int,
    alpha: complex,
    *,
    normalization: Normalization = "amplitude",
    max_order: int = DEFAULT_MAX_ORDER,
) -> complex:
    """<a^dag^j a^k> of ECS, VFECS or PAECS from the printed series."""
    spec = StateSpec.from_kind(variant, alpha_mag=abs(alpha), theta=cmath.phase(alpha))
    _require_family(spec, Family.ECS)
    _check_orders(j, k, max_order)
    prefactor = series_prefactor(spec, normalization)

    match spec.engineering:
        case Engineering.NONE:

            def term(n: int) -> complex:
                bra = n - k + j
                if not _even(n, bra):
                    return 0j
                return 4.0 * _power_term(alpha, n, bra, _lf(n - k))

            body = sum_series(term, k)
        case Engineering.VF if k <= j:

            def term(n: int) -> complex:
                bra = n - k + j
                if not _even(n, bra):
                    return 0j
                return 4.0 * _power_term(alpha, n, bra, _lf(n - k))

            body = sum_series(term, max(1, k))
        case Engineering.VF:

            def term(n: int) -> complex:
                ket = n + k - j
                if not _even(n, ket):
                    return 0j
                return 4.0 * _power_term(alpha, ket, n, _lf(n - j))

            body = sum_series(term, max(1, j))
        case _:

            def term(n: int) -> complex:
                bra = n - k + j
                if not _even(n, bra):
                    return 0j
                return (
                    4.0
                    * (n + 1)
                    * (bra + 1)
                    * _power_term(alpha, n, bra, _lf(n + 1 - k))
                )

            body = sum_series(term, max(k - 1, k - j, 0))
    return prefactor * body


def moment_bs_family(
    variant: StateKind | str,
    t: int,
    r: int,
    p: float,
    m: int,
    *,
    normalization: Normalization = "amplitude",
    max_order: int = DEFAULT_MAX_ORDER,
) -> float:
    """<a^dag^t a^r> of BS, VFBS or PABS from the printed finite sums."""
    spec = StateSpec.from_kind(variant, p=p, m=m)
    _require_family(spec, Family.BS)
    _check_orders(t, r, max_order)
    prefactor = series_prefactor(spec, normalization)
    q = 1.0 - p

    def root_weight(power_p: int, power_q: int, fact_a: int, fact_b: int) -> float:
        # log sqrt(p^a q^b / (fact_a! fact_b!))
        return 0.5 * float(
            special.xlogy(power_p, p)
            + special.xlogy(power_q, q)
            - _lf(fact_a)
            - _lf(fact_b)
        )

    def finite(*factorial_args: int) -> bool:
        return all(arg >= 0 for arg in factorial_args)

    match spec.engineering:
        case Engineering.NONE:

            def term(n: int) -> complex:
                if not finite(n - r, m - n, m - n + r - t):
                    return 0j
                log_term = (
                    _lf(m)
                    - _lf(n - r)
                    + root_weight(2 * n - r + t, 2 * m - 2 * n + r - t, m - n, m - n + r - t)
                )
                return complex(math.exp(log_term))

            body = sum_series(term, 0, stop=m)
        case Engineering.VF if r <= t:

            def term(n: int) -> complex:
                if not finite(n - r, m - n, m - n + r - t):
                    return 0j
                log_term = (
                    _lf(m)
                    - _lf(n - r)
                    + root_weight(2 * n - r + t, 2 * m - 2 * n + r - t, m - n, m - n + r - t)
                )
                return complex(math.exp(log_term))

            body = sum_series(term, 1, stop=m)
        case Engineering.VF:

            def term(n: int) -> complex:
                if not finite(n - t, m - n, m - n - r + t):
                    return 0j
                log_term = (
                    _lf(m)
                    - _lf(n - t)
                    + root_weight(2 * n + r - t, 2 * m - 2 * n - r + t, m - n, m - n - r + t)
                )
                return complex(math.exp(log_term))

            body = sum_series(term, 1, stop=m)
        case _:

            def term(n: int) -> complex:
                bra = n - r + t
                if not finite(n + 1 - r, bra, m - n, m - bra):
                    return 0j
                log_term = (
                    _lf(m)
                    - _lf(n + 1 - r)
                    + math.log((n + 1) * (bra + 1))
                    + root_weight(n + bra, 2 * m - n - bra, m - n, m - bra)
                )
                return complex(math.exp(log_term))

            body = sum_series(term, 0, stop=m)
    return prefactor * body.real


def moment_ks_family(
    variant: StateKind | str,
    q: int,
    s: int,
    alpha: complex,
    chi: float,
    *,
    normalization: Normalization = "amplitude",
    max_order: int = DEFAULT_MAX_ORDER,
) -> complex:
    """<a^dag^q a^s> of KS, VFKS or PAKS from the printed series."""
    spec = StateSpec.from_kind(
        variant, alpha_mag=abs(alpha), theta=cmath.phase(alpha), chi=chi
    )
    _require_family(spec, Family.KS)
    _check_orders(q, s, max_order)
    prefactor = series_prefactor(spec, normalization)

    match spec.engineering:
        case Engineering.NONE:

            def term(n: int) -> complex:
                bra = n - s + q
                return _power_term(alpha, n, bra, _lf(n - s)) * _kerr_phase(chi, bra, n)

            body = sum_series(term, s)
        case Engineering.VF if s <= q:

            def term(n: int) -> complex:
                bra = n - s + q
                return _power_term(alpha, n, bra, _lf(n - s)) * _kerr_phase(chi, bra, n)

            body = sum_series(term, max(1, s))
        case Engineering.VF:

            def term(n: int) -> complex:
                ket = n + s - q
                return _power_term(alpha, ket, n, _lf(n - q)) * _kerr_phase(chi, n, ket)

            body = sum_series(term, max(1, q))
        case _:

            def term(n: int) -> complex:
                bra = n - s + q
                return (
                    (n + 1)
                    * (bra + 1)
                    * _power_term(alpha, n, bra, _lf(n + 1 - s))
                    * _kerr_phase(chi, bra, n)
                )

            body = sum_series(term, max(s - 1, s - q, 0))
    return prefactor * body


def analytic_moment(
    spec: StateSpec,
    j: int,
    k: int,
    *,
    normalization: Normalization = "amplitude",
    max_order: int = DEFAULT_MAX_ORDER,
) -> complex:
    """Dispatch to the family series for ``spec``."""
    match spec.family:
        case Family.ECS:
            return moment_ecs_family(
                spec.kind, j, k, spec.alpha, normalization=normalization, max_order=max_order
            )
        case Family.BS:
            return complex(
                moment_bs_family(
                    spec.kind, j, k, spec.p, spec.m,
                    normalization=normalization, max_order=max_order,
                )
            )
        case Family.KS:
            return moment_ks_family(
                spec.kind, j, k, spec.alpha, spec.chi,
                normalization=normalization, max_order=max_order,
            )
    raise AssertionError(spec.family)  # pragma: no cover


def analytic_moment_table(
    spec: StateSpec,
    pairs: Iterable[MomentKey],
    max_order: int = DEFAULT_MAX_ORDER,
) -> MomentTable:
    """Moment table from the closed-form series, tagged with the state kind."""
    keys = sorted({(0, 0), *pairs})
    values = {
        (j, k): analytic_moment(spec, j, k, max_order=max_order) for j, k in keys
    }
    _LOGGER.debug("Analytic moments for %s: %d entries", spec.kind, len(values))
    return MomentTable.from_values(values, spec.kind.value)
