"""Logging and series helpers."""

from __future__ import annotations

import logging
import math

import numpy as np
import pytest

from holeburn.exceptions import ConvergenceError
from holeburn.helpers.logging_utils import compact, get_logger, set_log_level
from holeburn.helpers.series import sum_series


class TestLogging:
    def test_compact_large_array(self):
        summary = compact(np.ones(100, dtype=np.complex128))
        assert summary.startswith("ndarray(shape=(100,)")
        assert "norm=10" in summary

    def test_compact_passthrough(self):
        assert compact(3) == 3
        assert compact("x") == "x"
        assert compact(1 + 2j) == "(1+2j)"

    def test_filter_shortens_arguments(self, caplog):
        logger = get_logger("holeburn.test_helpers")
        set_log_level("DEBUG")
        try:
            with caplog.at_level(logging.DEBUG, logger="holeburn.test_helpers"):
                logger.debug("state %s", np.zeros(50))
        finally:
            set_log_level("WARNING")
        assert "ndarray(shape=(50,)" in caplog.text

    def test_levels_are_synchronized(self):
        logger = get_logger("holeburn.test_levels")
        set_log_level("error")
        try:
            assert logger.level == logging.ERROR
            assert get_logger("holeburn.test_levels_new").level == logging.ERROR
        finally:
            set_log_level("WARNING")


class TestSeries:
    def test_exponential(self):
        value = sum_series(lambda n: 2.0**n / math.factorial(n), 0)
        assert value == pytest.approx(math.exp(2.0), rel=1e-14)

    def test_finite(self):
        assert sum_series(lambda n: n, 1, stop=4) == 10

    def test_all_zero_terms(self):
        assert sum_series(lambda n: 0.0, 0) == 0

    def test_divergent(self):
        with pytest.raises(ConvergenceError):
            sum_series(lambda n: 1.0, 0, max_terms=50)
