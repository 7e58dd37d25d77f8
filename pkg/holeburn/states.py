"""Construction of the parent and hole-burnt states."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .const import DEFAULT_TAIL_TOL, VACUUM_FILTER_MARGIN
from .exceptions import FiltrationUndefinedError, InvalidParameterError
from .fock_core import apply_creation, certify_cutoff
from .helpers.amplitudes import parent_amplitudes
from .helpers.logging_utils import get_logger
from .helpers.normalization import check_printed_normalization
from .models import Engineering, Family, FockVector, StateSpec

_LOGGER = get_logger(__name__)

# Relative slack on the <N>+1 identity for photon addition
_ADDITION_NORM_RTOL = 1e-10


@dataclass(frozen=True, slots=True)
class PhotonStatistics:
    """Lower-order photon-number statistics of a state."""

    mean: float
    variance: float

    @property
    def mandel_q(self) -> float | None:
        """Q = (Var N - <N>)/<N>; None for the vacuum."""
        if self.mean == 0.0:
            return None
        return (self.variance - self.mean) / self.mean


def build_parent(
    spec: StateSpec, tail_tol: float = DEFAULT_TAIL_TOL, headroom: int = 0
) -> FockVector:
    """Even coherent, binomial or Kerr state, normalized numerically."""
    if spec.engineering is not Engineering.NONE:
        raise InvalidParameterError(f"build_parent needs a parent spec, got {spec.kind}")
    cutoff, bound = certify_cutoff(spec, tail_tol, headroom)
    amps = parent_amplitudes(spec, cutoff + headroom)
    return FockVector(amps, bound).normalized()


def vacuum_filter(v: FockVector) -> FockVector:
    """Remove the vacuum component and renormalize."""
    v.require_normalized()
    amps = v.amplitudes.copy()
    amps[0] = 0.0
    # summed directly; 1 - p0 cancels for near-vacuum parents
    rest = float(np.sum(np.abs(amps) ** 2))
    if rest <= VACUUM_FILTER_MARGIN:
        raise FiltrationUndefinedError(f"non-vacuum probability {rest:.3e} leaves nothing")
    amps /= math.sqrt(rest)
    return FockVector(amps, v.tail_bound / rest)


def photon_add(v: FockVector) -> FockVector:
    """Apply a^dag and renormalize."""
    v.require_normalized()
    raised = apply_creation(v)
    expected = photon_number_summary(v).mean + 1.0
    if abs(raised.norm_sq - expected) > _ADDITION_NORM_RTOL * expected:
        _LOGGER.warning(
            "Photon addition norm %.15g differs from <N>+1 = %.15g",
            raised.norm_sq,
            expected,
        )
    return raised.normalized()


def build_engineered(
    spec: StateSpec, tail_tol: float = DEFAULT_TAIL_TOL, headroom: int = 0
) -> FockVector:
    """Vacuum-filtered or photon-added state at a certified cutoff.

    Args:
        spec: Engineered state to build
        tail_tol: Allowed probability mass above the cutoff
        headroom: Extra Fock levels for high-order operator applications

    Returns:
        The normalized engineered state with p_0 = 0

    """
    if spec.engineering is Engineering.NONE:
        raise InvalidParameterError("build_engineered needs VF or PA engineering")
    check_printed_normalization(spec)
    cutoff, bound = certify_cutoff(spec, tail_tol, headroom)
    top = cutoff + headroom
    if spec.engineering is Engineering.VF:
        parent = FockVector(parent_amplitudes(spec.parent(), top)).normalized()
        engineered = vacuum_filter(parent)
    else:
        parent = FockVector(parent_amplitudes(spec.parent(), top - 1)).normalized()
        engineered = photon_add(parent)
    _LOGGER.debug("Built %s at cutoff %d (tail %.3e)", spec.kind, top, bound)
    return FockVector(engineered.amplitudes, bound)


def build_state(
    spec: StateSpec, tail_tol: float = DEFAULT_TAIL_TOL, headroom: int = 0
) -> FockVector:
    """Build any of the nine states."""
    if spec.engineering is Engineering.NONE:
        return build_parent(spec, tail_tol, headroom)
    return build_engineered(spec, tail_tol, headroom)


def fock_state(n: int, headroom: int = 0) -> FockVector:
    """Number state |n>."""
    return FockVector.basis(n, n + headroom)


def coherent_state(
    alpha: complex, tail_tol: float = DEFAULT_TAIL_TOL, headroom: int = 0
) -> FockVector:
    """Glauber coherent state, the Kerr state at chi = 0."""
    mag, phase = cmath.polar(complex(alpha))
    return build_parent(
        StateSpec(Family.KS, alpha_mag=mag, theta=phase, chi=0.0), tail_tol, headroom
    )


def photon_number_summary(v: FockVector) -> PhotonStatistics:
    """Mean and variance of the photon number."""
    probs = v.probabilities
    n = np.arange(probs.size, dtype=np.float64)
    mean = float(np.dot(probs, n))
    return PhotonStatistics(mean, float(np.dot(probs, (n - mean) ** 2)))
