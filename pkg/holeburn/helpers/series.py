"""Summation of factorially damped moment series."""

from __future__ import annotations

from collections.abc import Callable

from ..const import MAX_SERIES_TERMS, SERIES_PATIENCE, SERIES_REL_TOL
from ..exceptions import ConvergenceError
from .logging_utils import get_logger

_LOGGER = get_logger(__name__)


def sum_series(
    term: Callable[[int], complex],
    start: int,
    *,
    stop: int | None = None,
    rel_tol: float = SERIES_REL_TOL,
    patience: int = SERIES_PATIENCE,
    max_terms: int = MAX_SERIES_TERMS,
) -> complex:
    """Sum term(n) for n = start, start+1, ... in ascending order.

    Infinite series stop once ``patience`` consecutive terms satisfy
    |term| <= rel_tol * |partial sum|. Finite series (``stop`` given) are
    summed through ``stop`` inclusive.

    Args:
        term: Term of index n
        start: First valid index
        stop: Last index for finite sums
        rel_tol: Relative smallness threshold
        patience: Consecutive small terms required
        max_terms: Hard cap on the number of evaluated terms

    Returns:
        The partial sum at the stopping point

    """
    total = 0j
    if stop is not None:
        for n in range(start, stop + 1):
            total += term(n)
        return total

    quiet = 0
    for n in range(start, start + max_terms):
        value = term(n)
        total += value
        if abs(value) <= rel_tol * abs(total):
            quiet += 1
            if quiet >= patience:
                _LOGGER.debug("Series converged after %d terms", n - start + 1)
                return total
        else:
            quiet = 0
    raise ConvergenceError(
        f"series starting at n={start} did not converge in {max_terms} terms"
    )
