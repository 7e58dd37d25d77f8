"""Parameter sweeps of witnesses and the entanglement measure."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, InstanceOf, model_validator

from .const import (
    CSV_PRECISION,
    DEFAULT_TAIL_TOL,
    ENTROPY_CLASSICAL_THRESHOLD,
    STATUS_OK,
)
from .entanglement import linear_entropy, linear_entropy_closed_form
from .exceptions import HoleBurnError
from .helpers.logging_utils import get_logger
from .helpers.output import Cell, render_csv
from .models import (
    FAMILY_PARAMETERS,
    Engineering,
    Measure,
    MomentKey,
    StateSpec,
    WitnessReport,
)
from .moments import analytic_moment_table
from .states import build_state
from .witnesses import hoa, hos, hosps, required_pairs

_LOGGER = get_logger(__name__)

_REPORT_FIELDS = ("formula", "oracle", "nonclassical")


class GridSpec(BaseModel):
    """One swept axis."""

    model_config = ConfigDict(frozen=True)

    name: str
    start: float
    stop: float
    count: int = Field(ge=2)
    linear: bool = True

    @model_validator(mode="after")
    def _check_bounds(self) -> Self:
        if not self.start < self.stop:
            raise ValueError(f"sweep {self.name}: start must be < stop")
        if not self.linear and self.start <= 0:
            raise ValueError(f"sweep {self.name}: log spacing needs start > 0")
        return self

    def values(self) -> list[float]:
        """Grid points in ascending order."""
        space = np.linspace if self.linear else np.geomspace
        return [float(v) for v in space(self.start, self.stop, self.count)]


class MeasureRequest(BaseModel):
    """A witness and its orders; the entropy measure takes no order."""

    model_config = ConfigDict(frozen=True)

    kind: Measure
    orders: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_orders(self) -> Self:
        if self.kind is Measure.ENTROPY and self.orders:
            raise ValueError("the entropy measure takes no order")
        if self.kind is not Measure.ENTROPY and not self.orders:
            raise ValueError(f"{self.kind} needs at least one order")
        lowest = 1 if self.kind is Measure.HOA else 2
        for order in self.orders:
            if order < lowest or (self.kind is Measure.HOS and order % 2):
                raise ValueError(f"invalid {self.kind} order {order}")
        return self

    def columns(self, prefix: str) -> list[str]:
        """Column names for one state variant."""
        if self.kind is Measure.ENTROPY:
            return [f"{prefix}_entropy_{field}" for field in _REPORT_FIELDS]
        return [
            f"{prefix}_{self.kind}{order}_{field}"
            for order in self.orders
            for field in _REPORT_FIELDS
        ]

    @property
    def headroom(self) -> int:
        """Fock levels the highest requested order touches."""
        match self.kind:
            case Measure.HOA:
                return 2 * (max(self.orders) + 1)
            case Measure.HOS:
                return max(self.orders)
            case Measure.HOSPS:
                return 2 * (max(self.orders) + 1)
        return 0


class SweepConfig(BaseModel):
    """Everything needed to evaluate a grid of states."""

    model_config = ConfigDict(frozen=True)

    template: InstanceOf[StateSpec]
    engineerings: tuple[Engineering, ...] = ()
    grid: GridSpec | None = None
    grid_y: GridSpec | None = None
    measures: tuple[MeasureRequest, ...] = Field(min_length=1)
    output: Path | None = None
    tail_tol: float = Field(DEFAULT_TAIL_TOL, gt=0.0, lt=1.0)
    precision: int = Field(CSV_PRECISION, ge=2, le=17)
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _check_axes(self) -> Self:
        allowed = FAMILY_PARAMETERS[self.template.family]
        axes = [g for g in (self.grid, self.grid_y) if g is not None]
        if self.grid_y is not None and self.grid is None:
            raise ValueError("a second axis needs a first axis")
        for axis in axes:
            if axis.name not in allowed:
                raise ValueError(
                    f"{axis.name!r} is not a {self.template.family} parameter {allowed}"
                )
        if len({a.name for a in axes}) != len(axes):
            raise ValueError("sweep axes must differ")
        return self

    @property
    def variants(self) -> tuple[StateSpec, ...]:
        """Template specs, one per requested engineering."""
        engineerings = self.engineerings or (self.template.engineering,)
        return tuple(self.template.with_engineering(e) for e in engineerings)

    @property
    def axis_names(self) -> list[str]:
        """Names of the swept parameters."""
        return [g.name for g in (self.grid, self.grid_y) if g is not None]

    def points(self) -> list[tuple[float, ...]]:
        """Grid points, first axis outermost."""
        axes = [g.values() for g in (self.grid, self.grid_y) if g is not None]
        return list(itertools.product(*axes))

    def header(self) -> list[str]:
        """CSV header."""
        columns = list(self.axis_names)
        for variant in self.variants:
            prefix = variant.kind.value
            for request in self.measures:
                columns.extend(request.columns(prefix))
            columns.append(f"{prefix}_status")
        columns.append("status")
        return columns


@dataclass(frozen=True, slots=True)
class SweepResult:
    """Tabular sweep output in grid order."""

    header: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]

    def to_csv(self, precision: int = CSV_PRECISION) -> str:
        """Render as CSV text."""
        return render_csv(self.header, self.rows, precision)

    def records(self) -> list[dict[str, Cell]]:
        """Rows as header-keyed dicts."""
        return [dict(zip(self.header, row, strict=True)) for row in self.rows]

    def column(self, name: str) -> list[Cell]:
        """All values of one column."""
        index = self.header.index(name)
        return [row[index] for row in self.rows]


def _report_cells(report: WitnessReport) -> list[Cell]:
    return [report.formula_value, report.oracle_value, report.nonclassical]


def evaluate_variant(
    spec: StateSpec, measures: tuple[MeasureRequest, ...], tail_tol: float
) -> list[Cell]:
    """Cells of every requested measure for one state; raises on failure."""
    headroom = max(request.headroom for request in measures)
    state = build_state(spec, tail_tol, headroom)
    pairs: set[MomentKey] = set()
    for request in measures:
        for order in request.orders:
            pairs |= required_pairs(request.kind, order)
    table = analytic_moment_table(spec, pairs)

    cells: list[Cell] = []
    for request in measures:
        if request.kind is Measure.ENTROPY:
            formula = linear_entropy_closed_form(spec, tail_tol)
            cells.extend(
                [formula, linear_entropy(state), formula > ENTROPY_CLASSICAL_THRESHOLD]
            )
            continue
        for order in request.orders:
            match request.kind:
                case Measure.HOA:
                    report = hoa(table, order)
                case Measure.HOS:
                    report = hos(table, state, order)
                case _:
                    report = hosps(table, state, order)
            cells.extend(_report_cells(report))
    return cells


def _evaluate_point(task: tuple[SweepConfig, tuple[float, ...]]) -> tuple[Cell, ...]:
    cfg, point = task
    row: list[Cell] = list(point)
    statuses: list[int] = []
    for variant in cfg.variants:
        width = sum(len(request.columns("")) for request in cfg.measures)
        try:
            spec = variant
            for name, value in zip(cfg.axis_names, point, strict=True):
                spec = spec.with_param(name, value)
            cells = evaluate_variant(spec, cfg.measures, cfg.tail_tol)
            status = STATUS_OK
        except HoleBurnError as err:
            _LOGGER.debug("%s failed at %s: %s", variant.kind, point, err)
            cells = [None] * width
            status = err.status
        row.extend(cells)
        row.append(status)
        statuses.append(status)
    row.append(max(statuses))
    return tuple(row)


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Evaluate every grid point; rows keep grid order whatever the worker count."""
    points = cfg.points()
    _LOGGER.info(
        "Sweep over %s: %d points x %d variants, %d worker(s)",
        cfg.axis_names or "a single point",
        len(points),
        len(cfg.variants),
        cfg.workers,
    )
    tasks = [(cfg, point) for point in points]
    if cfg.workers > 1:
        chunk = max(1, len(tasks) // (4 * cfg.workers))
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = tuple(pool.map(_evaluate_point, tasks, chunksize=chunk))
    else:
        rows = tuple(_evaluate_point(task) for task in tasks)
    failed = sum(1 for row in rows if row[-1] != STATUS_OK)
    if failed:
        _LOGGER.info("Sweep finished with %d failed point(s)", failed)
    return SweepResult(tuple(cfg.header()), rows)

