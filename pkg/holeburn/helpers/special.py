"""Special-function helpers for the witness formulas."""

from __future__ import annotations

import math

from scipy import special

from ..exceptions import InvalidParameterError


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1).

    Args:
        x: Base
        n: Number of factors (nonnegative)

    Returns:
        (x)_n, with (x)_0 = 1

    """
    if n < 0:
        raise InvalidParameterError(f"pochhammer length must be >= 0, got {n}")
    return float(special.poch(x, n))


def double_factorial(n: int) -> float:
    """Return n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise InvalidParameterError(f"double factorial needs n >= -1, got {n}")
    if n <= 0:
        return 1.0
    return float(special.factorial2(n, exact=True))


def factorial_or_one(n: int) -> float:
    """Return n! for n >= 0 and 1 for n = -1."""
    if n < -1:
        raise InvalidParameterError(f"factorial needs n >= -1, got {n}")
    return float(math.factorial(max(n, 0)))


def stirling2(u: int, v: int) -> int:
    """Stirling number of the second kind S2(u, v)."""
    if u < 0 or v < 0:
        raise InvalidParameterError(f"stirling2 needs nonnegative arguments, got {(u, v)}")
    return int(special.stirling2(u, v, exact=True))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero when k is outside [0, n]."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gaussian_quadrature_moment(order: int) -> float:
    """Vacuum quadrature central moment (l-1)!!/2^{l/2} = (1/2)_{l/2}."""
    return pochhammer(0.5, order // 2)
