"""State dumps and figure-panel reproduction."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Literal

import numpy as np
import orjson
from pydantic import BaseModel, ConfigDict

from .const import (
    DEFAULT_RESOLUTION,
    DEFAULT_TAIL_TOL,
    STATE_DUMP_PRECISION,
    VERSION,
)
from .definitions import AXIS_RANGES, FIGURE_PANELS
from .exceptions import InvalidParameterError, UnknownFigureError
from .helpers.logging_utils import get_logger
from .helpers.output import dumps_json, emit, render_csv
from .models import (
    FAMILY_PARAMETERS,
    Engineering,
    Family,
    FigurePanelDefinition,
    FockVector,
    Measure,
    StateKind,
    StateSpec,
)
from .states import build_state, photon_number_summary
from .sweep import GridSpec, MeasureRequest, SweepConfig, run_sweep
from .witnesses import select_hos_reading

_LOGGER = get_logger(__name__)

type DumpFormat = Literal["json", "csv"]

_CSV_FIELDS = ("n", "amplitude_re", "amplitude_im", "probability")


class StateDump(BaseModel):
    """Serializable snapshot of a truncated state."""

    model_config = ConfigDict(frozen=True)

    kind: StateKind
    family: Family
    engineering: Engineering
    parameters: dict[str, float]
    cutoff: int
    tail_bound: float
    amplitudes: list[tuple[float, float]]
    probabilities: list[float]
    mean_photon_number: float
    mandel_q: float | None
    version: str = VERSION

    @classmethod
    def from_state(cls, spec: StateSpec, v: FockVector) -> StateDump:
        """Snapshot ``v`` built from ``spec``."""
        stats = photon_number_summary(v)
        return cls(
            kind=spec.kind,
            family=spec.family,
            engineering=spec.engineering,
            parameters={k: float(x) for k, x in spec.parameters().items()},
            cutoff=v.cutoff,
            tail_bound=v.tail_bound,
            amplitudes=[(float(c.real), float(c.imag)) for c in v.amplitudes],
            probabilities=[float(p) for p in v.probabilities],
            mean_photon_number=stats.mean,
            mandel_q=stats.mandel_q,
        )

    def to_spec(self) -> StateSpec:
        """Rebuild the spec the dump was taken from."""
        return StateSpec.from_kind(self.kind, **self.parameters)

    def to_vector(self) -> FockVector:
        """Amplitudes as a Fock vector, exactly as dumped."""
        amps = np.array([complex(re, im) for re, im in self.amplitudes])
        return FockVector(amps, self.tail_bound)

    def to_json(self) -> bytes:
        """Indented JSON."""
        return dumps_json(self.model_dump(mode="json"))

    def to_csv(self) -> str:
        """One row per Fock level; state metadata repeated on every row."""
        header = [*_CSV_FIELDS, "kind", *self.parameters, "cutoff", "tail_bound"]
        meta = [self.kind.value, *self.parameters.values(), self.cutoff, self.tail_bound]
        rows = [
            [n, re, im, p, *meta]
            for n, ((re, im), p) in enumerate(
                zip(self.amplitudes, self.probabilities, strict=True)
            )
        ]
        return render_csv(header, rows, STATE_DUMP_PRECISION)


def dump_state(
    spec: StateSpec,
    fmt: DumpFormat = "json",
    out: Path | None = None,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> StateDump:
    """Build ``spec`` and write its dump to ``out`` (stdout when None)."""
    dump = StateDump.from_state(spec, build_state(spec, tail_tol))
    emit(dump.to_json() if fmt == "json" else dump.to_csv(), out)
    _LOGGER.debug("Dumped %s at cutoff %d", spec.kind, dump.cutoff)
    return dump


def _parse_csv_dump(text: str) -> StateDump:
    rows = list(csv.DictReader(io.StringIO(text)))
    if not rows:
        raise InvalidParameterError("state dump has no rows")
    first = rows[0]
    kind = StateKind(first["kind"])
    spec = StateSpec.from_kind(
        kind, **{name: float(first[name]) for name in FAMILY_PARAMETERS[kind.family]}
    )
    amps = np.array(
        [complex(float(r["amplitude_re"]), float(r["amplitude_im"])) for r in rows]
    )
    return StateDump.from_state(spec, FockVector(amps, float(first["tail_bound"])))


def load_state_dump(path: Path) -> StateDump:
    """Read a dump written by ``dump_state`` in either format."""
    raw = path.read_bytes()
    if path.suffix.lower() == ".csv":
        return _parse_csv_dump(raw.decode())
    try:
        return StateDump.model_validate(orjson.loads(raw))
    except orjson.JSONDecodeError as err:
        raise InvalidParameterError(f"{path} is not a JSON state dump") from err


class FigureManifest(BaseModel):
    """Fixed and declared parameters behind one reproduced panel."""

    model_config = ConfigDict(frozen=True)

    figure_id: str
    title: str
    variants: list[StateKind]
    measure: Measure
    orders: list[int]
    x_axis: GridSpec | None
    y_axis: GridSpec | None
    caption_parameters: dict[str, float | int]
    defaults: dict[str, float | int]
    hos_reading: str | None
    tail_tol: float
    columns: list[str]
    version: str = VERSION


def panel_config(
    panel: FigurePanelDefinition,
    resolution: int = DEFAULT_RESOLUTION,
    workers: int = 1,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> SweepConfig:
    """Sweep configuration of a panel with its fixed parameters applied."""
    family = panel["family"]
    fixed = {**panel["defaults"], **panel["caption_parameters"]}
    template = StateSpec.from_kind(
        StateKind.of(family, Engineering.NONE),
        **{k: v for k, v in fixed.items() if k in FAMILY_PARAMETERS[family]},
    )

    def axis(name: str) -> GridSpec:
        start, stop = AXIS_RANGES[name]
        return GridSpec(name=name, start=start, stop=stop, count=resolution)

    y_axis = panel["y_axis"]
    return SweepConfig(
        template=template,
        engineerings=panel["variants"],
        grid=axis(panel["x_axis"]),
        grid_y=axis(y_axis) if y_axis else None,
        measures=(MeasureRequest(kind=panel["measure"], orders=panel["orders"]),),
        tail_tol=tail_tol,
        workers=workers,
    )


def reproduce(
    figure_id: str,
    out_dir: Path,
    resolution: int = DEFAULT_RESOLUTION,
    workers: int = 1,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> tuple[Path, Path]:
    """Write ``<figure_id>.csv`` and ``<figure_id>_manifest.json`` into ``out_dir``.

    Args:
        figure_id: Panel id such as ``fig3a``
        out_dir: Destination directory, created if missing
        resolution: Grid points per axis
        workers: Worker processes for the sweep
        tail_tol: Truncation tolerance

    Returns:
        Paths of the data file and the manifest

    """
    if (panel := FIGURE_PANELS.get(figure_id)) is None:
        raise UnknownFigureError(
            f"unknown figure {figure_id!r}; choose from {sorted(FIGURE_PANELS)}"
        )
    cfg = panel_config(panel, resolution, workers, tail_tol)
    _LOGGER.info("Reproducing %s: %s", figure_id, panel["title"])
    result = run_sweep(cfg)

    manifest = FigureManifest(
        figure_id=figure_id,
        title=panel["title"],
        variants=[variant.kind for variant in cfg.variants],
        measure=panel["measure"],
        orders=list(panel["orders"]),
        x_axis=cfg.grid,
        y_axis=cfg.grid_y,
        caption_parameters=panel["caption_parameters"],
        defaults=panel["defaults"],
        hos_reading=select_hos_reading() if panel["measure"] is Measure.HOS else None,
        tail_tol=tail_tol,
        columns=list(result.header),
    )

    data_path = out_dir / f"{figure_id}.csv"
    manifest_path = out_dir / f"{figure_id}_manifest.json"
    emit(result.to_csv(), data_path)
    emit(dumps_json(manifest.model_dump(mode="json")), manifest_path)
    return data_path, manifest_path
