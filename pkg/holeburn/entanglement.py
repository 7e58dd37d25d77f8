"""Entanglement potential of a single-mode state via a balanced beam splitter."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from scipy import special

from .const import DEFAULT_TAIL_TOL, IMAG_RESIDUE_TOL
from .exceptions import NumericalError
from .fock_core import choose_cutoff
from .helpers.amplitudes import log_weights, parent_phases
from .helpers.logging_utils import get_logger
from .helpers.normalization import amplitude_norm_sq, printed_norm_sq
from .models import Engineering, FockVector, StateKind, StateSpec, TwoModeVector

_LOGGER = get_logger(__name__)

_LOG2 = math.log(2.0)


def beamsplit_with_vacuum(v: FockVector) -> TwoModeVector:
    """Mix ``v`` with vacuum on a 50:50 splitter.

    |n>|0> goes to sum_j 2^{-n/2} sqrt(C(n, j)) |j, n-j>.
    """
    v.require_normalized()
    top = v.cutoff
    j = np.arange(top + 1)[:, None]
    m = np.arange(top + 1)[None, :]
    n = j + m
    inside = n <= top
    n_clipped = np.minimum(n, top)
    grid = (
        v.amplitudes[n_clipped]
        * np.exp2(-0.5 * n_clipped)
        * np.sqrt(special.comb(n_clipped, j))
    )
    return TwoModeVector(top, np.where(inside, grid, 0.0))


def reduced_purity(t: TwoModeVector, mode: Literal["A", "B"] = "B") -> float:
    """Tr(rho^2) of one output mode.

    The reduced density matrix is the Gram matrix of the conditional vectors
    of the other mode; its purity is the squared Frobenius norm.
    """
    d = t.amplitudes
    rho = d.T @ d.conj() if mode == "B" else d @ d.conj().T
    return float(np.sum(np.abs(rho) ** 2))


def linear_entropy(v: FockVector) -> float:
    """1 - Tr(rho_B^2) of the beam-splitter output; roundoff below 0 reads as 0."""
    return max(0.0, 1.0 - reduced_purity(beamsplit_with_vacuum(v)))


@lru_cache(maxsize=16)
def _binomial_overlap(top: int) -> NDArray[np.float64]:
    """T[n, r, m] = sum_k C(n, k) C(r, r + k - m) for indices up to ``top``."""
    idx = np.arange(top + 1)
    k = idx
    left = special.comb(idx[:, None], k[None, :])
    right = special.comb(
        idx[:, None, None], idx[:, None, None] + k[None, None, :] - idx[None, :, None]
    )
    table = np.einsum("nk,rmk->nrm", left, right)
    table.flags.writeable = False
    return table


def _purity_closed_form(spec: StateSpec, top: int, norm_sq: float) -> complex:
    """Triple sum over (n, m, r) with the fourth index fixed at n + r - m."""
    idx = np.arange(top + 1)
    half_log_c = 0.5 * log_weights(spec, idx)
    shift = 1 if spec.engineering is Engineering.PA else 0
    phases = parent_phases(spec.parent(), np.maximum(idx - shift, 0))
    log_fact = special.gammaln(idx + 1)

    n = idx[:, None, None]
    m = idx[None, :, None]
    r = idx[None, None, :]
    s = n + r - m
    inside = (s >= 0) & (s <= top)
    s = np.clip(s, 0, top)

    log_term = (
        half_log_c[n] + half_log_c[m] + half_log_c[r] + half_log_c[s]
        + 0.5 * (log_fact[n] + log_fact[m] + log_fact[r] + log_fact[s])
        - log_fact[n] - log_fact[r]
        - (n + r) * _LOG2
        + 2.0 * math.log(norm_sq)
    )
    phase = phases[n] * phases[m].conj() * phases[r] * phases[s].conj()
    overlap = _binomial_overlap(top).transpose(0, 2, 1)
    with np.errstate(invalid="ignore"):
        terms = np.where(inside, np.exp(log_term) * overlap * phase, 0.0)
    return complex(np.sum(terms))


def linear_entropy_closed_form(
    spec: StateSpec,
    tail_tol: float = DEFAULT_TAIL_TOL,
    normalization: Literal["amplitude", "printed"] = "amplitude",
) -> float:
    """Linear entropy from the closed-form triple sum at the certified cutoff.

    Args:
        spec: Any of the nine states
        tail_tol: Truncation tolerance fixing the summation range
        normalization: ``amplitude`` sums amplitudes at the same cutoff;
            ``printed`` uses the closed-form N^2

    Returns:
        1 - Tr(rho_B^2)

    """
    top = choose_cutoff(spec, tail_tol)
    norm_sq = (
        printed_norm_sq(spec)
        if normalization == "printed"
        else amplitude_norm_sq(spec, top)
    )
    purity = _purity_closed_form(spec, top, norm_sq)
    if abs(purity.imag) >= IMAG_RESIDUE_TOL:
        raise NumericalError(
            f"purity of {spec.kind} has imaginary residue {purity.imag:.3e}"
        )
    _LOGGER.debug("Closed-form purity of %s at cutoff %d: %.15g", spec.kind, top, purity.real)
    return max(0.0, 1.0 - purity.real)


@dataclass(frozen=True, slots=True)
class EntropyAudit:
    """Closed-form linear entropy under both normalizations."""

    kind: StateKind
    amplitude_derived: float
    printed: float

    @property
    def deviation(self) -> float:
        """|printed - amplitude-derived|."""
        return abs(self.printed - self.amplitude_derived)


def linear_entropy_audit(spec: StateSpec, tail_tol: float = DEFAULT_TAIL_TOL) -> EntropyAudit:
    """Report how far the literal closed-form prefactor moves the entropy."""
    return EntropyAudit(
        spec.kind,
        linear_entropy_closed_form(spec, tail_tol, "amplitude"),
        linear_entropy_closed_form(spec, tail_tol, "printed"),
    )
