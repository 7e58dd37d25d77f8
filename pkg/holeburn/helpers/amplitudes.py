"""Un-normalized amplitude and weight sequences of the nine states.

Magnitudes follow the closed-form convention of each family (no
normalization prefactor), so summing their squares reproduces the inverse
squared normalization constants.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray
from scipy import special, stats

from ..models import ComplexArray, Engineering, Family, StateSpec

type FloatArray = NDArray[np.float64]
type IndexArray = NDArray[np.int64]

_LOG4 = math.log(4.0)


def parent_log_magnitudes(
    spec: StateSpec, n: IndexArray, *, envelope: bool = False
) -> FloatArray:
    """Log of |amplitude| of the parent state at Fock indices ``n``.

    ``envelope`` drops the even-parity selection of the even coherent state,
    giving a smooth majorant with monotonically decreasing term ratios.
    """
    n = np.asarray(n, dtype=np.int64)
    if spec.family is Family.BS:
        with np.errstate(divide="ignore"):
            return 0.5 * stats.binom.logpmf(n, spec.m, spec.p)

    half_log_poisson = 0.5 * (
        special.xlogy(n, spec.intensity) - special.gammaln(n + 1)
    )
    if spec.family is Family.KS:
        return half_log_poisson

    # |1 + (-1)^n| = 2 on even n
    log_mag = half_log_poisson + 0.5 * _LOG4
    if envelope:
        return log_mag
    return np.where(n % 2 == 0, log_mag, -np.inf)


def parent_phases(spec: StateSpec, n: IndexArray) -> ComplexArray:
    """Phase factor of the parent amplitude at Fock indices ``n``."""
    n = np.asarray(n, dtype=np.float64)
    if spec.family is Family.BS:
        return np.ones(n.shape, dtype=np.complex128)
    phase = n * spec.theta
    if spec.family is Family.KS:
        phase = phase - spec.chi * n * (n - 1.0)
    return np.exp(1j * phase)


def parent_amplitudes(spec: StateSpec, cutoff: int) -> ComplexArray:
    """Parent amplitudes c_0..c_cutoff, scaled so the largest has unit modulus."""
    n = np.arange(cutoff + 1)
    log_mag = parent_log_magnitudes(spec, n)
    peak = np.max(log_mag)
    return np.exp(log_mag - peak) * parent_phases(spec, n)


def log_weights(
    spec: StateSpec, n: IndexArray, *, envelope: bool = False
) -> FloatArray:
    """Log of the un-normalized photon-number weight |c_n|^2 of ``spec``.

    Vacuum filtration removes n = 0; photon addition shifts the parent by one
    and multiplies by n.
    """
    n = np.asarray(n, dtype=np.int64)
    if spec.engineering is Engineering.PA:
        shifted = np.maximum(n - 1, 0)
        with np.errstate(divide="ignore"):
            log_w = np.log(n.astype(np.float64)) + 2.0 * parent_log_magnitudes(
                spec, shifted, envelope=envelope
            )
        return np.where(n >= 1, log_w, -np.inf)

    log_w = 2.0 * parent_log_magnitudes(spec, n, envelope=envelope)
    if spec.engineering is Engineering.VF:
        return np.where(n >= 1, log_w, -np.inf)
    return log_w
