"""Truncated Fock-space representation and the numerical oracle."""

from __future__ import annotations

import math
from collections.abc import Iterable

import numpy as np
from scipy import special

from .const import (
    CUTOFF_SEARCH_START,
    DEFAULT_MAX_ORDER,
    DEFAULT_TAIL_TOL,
    MAX_CUTOFF,
    TAIL_SAFETY,
)
from .exceptions import (
    FiltrationUndefinedError,
    InvalidOrderError,
    InvalidParameterError,
    TruncationError,
)
from .helpers.amplitudes import log_weights
from .helpers.logging_utils import get_logger
from .models import (
    ORACLE_SOURCE,
    ComplexArray,
    Engineering,
    Family,
    FockVector,
    MomentKey,
    MomentTable,
    StateSpec,
)

_LOGGER = get_logger(__name__)


def certify_cutoff(
    spec: StateSpec, tail_tol: float = DEFAULT_TAIL_TOL, headroom: int = 0
) -> tuple[int, float]:
    """Return the smallest certified cutoff and the tail bound at cutoff + headroom.

    The weight sequence is summed out to a search horizon; the mass beyond
    the horizon is majorized by a geometric series once the envelope's term
    ratio drops below one. The horizon doubles until that remainder is
    negligible against ``tail_tol``.

    Args:
        spec: State to truncate
        tail_tol: Allowed probability mass above the cutoff
        headroom: Extra Fock levels that will be appended to the cutoff

    Returns:
        (cutoff, tail bound at cutoff + headroom)

    """
    if not 0.0 < tail_tol < 1.0:
        raise InvalidParameterError(f"tail_tol must lie in (0, 1), got {tail_tol}")

    shift = 1 if spec.engineering is Engineering.PA else 0
    if spec.family is Family.BS:
        return spec.m + shift, 0.0
    if spec.alpha_mag == 0.0:
        if spec.engineering is Engineering.VF:
            raise FiltrationUndefinedError(f"{spec.kind} is undefined at alpha = 0")
        return shift, 0.0

    x = spec.intensity
    horizon = max(CUTOFF_SEARCH_START, math.ceil(x + 12.0 * math.sqrt(x)) + 8)
    while horizon <= MAX_CUTOFF:
        n = np.arange(horizon + 2)
        log_w = log_weights(spec, n[: horizon + 1])
        log_env = log_weights(spec, n[horizon:], envelope=True)
        ratio = math.exp(log_env[1] - log_env[0])
        if ratio < 1.0:
            peak = float(np.max(log_w))
            weights = np.exp(log_w - peak)
            total = float(np.sum(weights))
            remainder = math.exp(log_env[1] - peak) / (1.0 - ratio) / total
            if remainder < tail_tol * TAIL_SAFETY:
                # tails[c] = mass above c, relative to the retained total
                above = np.concatenate([np.cumsum(weights[::-1])[::-1][1:], [0.0]])
                tails = above / total + remainder
                cutoff = int(np.argmax(tails < tail_tol))
                bound = float(tails[min(cutoff + headroom, horizon)])
                _LOGGER.debug(
                    "Certified cutoff %d for %s (tail %.3e, horizon %d)",
                    cutoff,
                    spec.kind,
                    bound,
                    horizon,
                )
                return cutoff, bound
        horizon *= 2
    raise TruncationError(
        f"no cutoff <= {MAX_CUTOFF} certifies tail < {tail_tol} for {spec}"
    )


def choose_cutoff(spec: StateSpec, tail_tol: float = DEFAULT_TAIL_TOL) -> int:
    """Smallest N whose un-truncated mass above N is below tail_tol."""
    return certify_cutoff(spec, tail_tol)[0]


def apply_creation(v: FockVector) -> FockVector:
    """Apply a^dag, extending the cutoff by one. The result is not normalized."""
    amps = np.zeros(v.cutoff + 2, dtype=np.complex128)
    amps[1:] = np.sqrt(np.arange(1, v.cutoff + 2)) * v.amplitudes
    return FockVector(amps, v.tail_bound)


def apply_annihilation(v: FockVector) -> FockVector:
    """Apply a, keeping the cutoff. The result is not normalized."""
    amps = np.zeros_like(v.amplitudes)
    amps[:-1] = np.sqrt(np.arange(1, v.cutoff + 1)) * v.amplitudes[1:]
    return FockVector(amps, v.tail_bound)


def _lowered(amps: ComplexArray, k: int) -> ComplexArray:
    """a^k applied to ``amps`` on the same index range."""
    out = np.zeros_like(amps)
    if k > amps.size - 1:
        return out
    n = np.arange(amps.size - k)
    # sqrt((n+k)!/n!)
    out[: amps.size - k] = np.sqrt(special.poch(n + 1, k)) * amps[k:]
    return out


def _check_order(v: FockVector, order: int, max_order: int) -> None:
    if order > max_order:
        raise InvalidOrderError(f"moment order {order} exceeds maximum {max_order}")
    if order >= v.cutoff:
        _LOGGER.warning(
            "Moment order %d reaches the cutoff %d; truncation bias grows",
            order,
            v.cutoff,
        )


def moment_oracle(
    v: FockVector, j: int, k: int, max_order: int = DEFAULT_MAX_ORDER
) -> complex:
    """Exact truncated <a^dag^j a^k> by direct summation over the amplitudes."""
    if j < 0 or k < 0:
        raise InvalidOrderError(f"moment indices must be >= 0, got {(j, k)}")
    v.require_normalized()
    _check_order(v, j + k, max_order)
    return complex(np.vdot(_lowered(v.amplitudes, j), _lowered(v.amplitudes, k)))


def oracle_moment_table(
    v: FockVector, pairs: Iterable[MomentKey], max_order: int = DEFAULT_MAX_ORDER
) -> MomentTable:
    """Moment table of ``v`` for the requested (j, k) pairs plus (0, 0)."""
    v.require_normalized()
    keys = {(0, 0), *pairs}
    top = max(j + k for j, k in keys)
    _check_order(v, top, max_order)
    lowered = {
        power: _lowered(v.amplitudes, power) for power in {i for key in keys for i in key}
    }
    values = {(j, k): complex(np.vdot(lowered[j], lowered[k])) for j, k in keys}
    return MomentTable.from_values(values, ORACLE_SOURCE)


def _apply_quadrature(amps: ComplexArray) -> ComplexArray:
    """X = (a + a^dag)/sqrt(2) on a fixed index range."""
    root = np.sqrt(np.arange(1, amps.size))
    out = np.zeros_like(amps)
    out[:-1] += root * amps[1:]
    out[1:] += root * amps[:-1]
    return out / math.sqrt(2.0)


def quadrature_central_moment_oracle(v: FockVector, l: int) -> float:  # noqa: E741
    """<(X - <X>)^l> by repeated application of the shifted quadrature."""
    if l < 2 or l % 2:
        raise InvalidOrderError(f"quadrature order must be even and >= 2, got {l}")
    v.require_normalized()
    amps = v.padded(l).amplitudes
    mean = float(np.vdot(amps, _apply_quadrature(amps)).real)
    shifted = amps
    for _ in range(l // 2):
        shifted = _apply_quadrature(shifted) - mean * shifted
    return float(np.vdot(shifted, shifted).real)


def number_central_moment_oracle(v: FockVector, l: int) -> float:  # noqa: E741
    """<(N - <N>)^l> from the photon-number distribution."""
    if l < 1:
        raise InvalidOrderError(f"number moment order must be >= 1, got {l}")
    v.require_normalized()
    probs = v.probabilities
    n = np.arange(probs.size, dtype=np.float64)
    mean = float(np.dot(probs, n))
    return float(np.dot(probs, (n - mean) ** l))
