"""Sweep configuration, evaluation and tabular output."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from holeburn.const import STATUS_INVALID_PARAMETER, STATUS_OK
from holeburn.exceptions import InvalidParameterError
from holeburn.helpers.output import format_cell, render_csv
from holeburn.helpers.parsers import parse_sweep
from holeburn.models import Engineering, Family, Measure, StateSpec
from holeburn.sweep import (
    GridSpec,
    MeasureRequest,
    SweepConfig,
    evaluate_variant,
    run_sweep,
)

ALL = (Engineering.NONE, Engineering.VF, Engineering.PA)


def hoa_config(template: StateSpec, grid: GridSpec | None = None, **kwargs) -> SweepConfig:
    return SweepConfig(
        template=template,
        engineerings=ALL,
        grid=grid,
        measures=(MeasureRequest(kind=Measure.HOA, orders=(1, 2, 3)),),
        **kwargs,
    )


class TestGridSpec:
    def test_linear_values(self):
        grid = GridSpec(name="p", start=0.0, stop=1.0, count=5)
        assert grid.values() == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_log_values(self):
        grid = GridSpec(name="chi", start=1e-3, stop=1e-1, count=3, linear=False)
        assert grid.values() == pytest.approx([1e-3, 1e-2, 1e-1])

    @pytest.mark.parametrize(
        "fields",
        [
            {"start": 1.0, "stop": 0.0, "count": 3},
            {"start": 0.0, "stop": 1.0, "count": 1},
            {"start": 0.0, "stop": 1.0, "count": 3, "linear": False},
        ],
    )
    def test_invalid(self, fields):
        with pytest.raises(ValidationError):
            GridSpec(name="p", **fields)


class TestMeasureRequest:
    def test_columns(self):
        request = MeasureRequest(kind=Measure.HOS, orders=(2, 4))
        assert request.columns("PAKS") == [
            "PAKS_hos2_formula",
            "PAKS_hos2_oracle",
            "PAKS_hos2_nonclassical",
            "PAKS_hos4_formula",
            "PAKS_hos4_oracle",
            "PAKS_hos4_nonclassical",
        ]
        assert request.headroom == 4

    def test_entropy_columns(self):
        request = MeasureRequest(kind=Measure.ENTROPY)
        assert request.columns("BS") == [
            "BS_entropy_formula",
            "BS_entropy_oracle",
            "BS_entropy_nonclassical",
        ]

    def test_entropy_takes_no_order(self):
        with pytest.raises(ValidationError):
            MeasureRequest(kind=Measure.ENTROPY, orders=(2,))

    def test_witness_needs_order(self):
        with pytest.raises(ValidationError):
            MeasureRequest(kind=Measure.HOSPS)

    @pytest.mark.parametrize(
        ("kind", "order"),
        [(Measure.HOA, 0), (Measure.HOS, 3), (Measure.HOS, 0), (Measure.HOSPS, 1)],
    )
    def test_order_range(self, kind, order):
        with pytest.raises(ValidationError):
            MeasureRequest(kind=kind, orders=(order,))


class TestSweepConfig:
    def test_axis_must_belong_to_family(self):
        with pytest.raises(ValidationError):
            hoa_config(StateSpec(Family.KS), GridSpec(name="p", start=0.1, stop=0.9, count=3))

    def test_second_axis_needs_first(self):
        with pytest.raises(ValidationError):
            SweepConfig(
                template=StateSpec(Family.KS),
                grid_y=GridSpec(name="chi", start=0.0, stop=0.1, count=3),
                measures=(MeasureRequest(kind=Measure.ENTROPY),),
            )

    def test_axes_must_differ(self):
        grid = GridSpec(name="chi", start=0.0, stop=0.1, count=3)
        with pytest.raises(ValidationError):
            SweepConfig(
                template=StateSpec(Family.KS),
                grid=grid,
                grid_y=grid,
                measures=(MeasureRequest(kind=Measure.ENTROPY),),
            )

    def test_tolerance_range(self, bs10):
        with pytest.raises(ValidationError):
            hoa_config(bs10, tail_tol=0.0)

    def test_header(self, bs10):
        cfg = hoa_config(bs10, GridSpec(name="p", start=0.1, stop=0.9, count=3))
        header = cfg.header()
        assert header[0] == "p"
        assert header[-1] == "status"
        assert "VFBS_hoa2_oracle" in header
        assert "PABS_status" in header
        assert len(header) == 1 + 3 * (9 + 1) + 1

    def test_single_point_without_grid(self, bs10):
        assert hoa_config(bs10).points() == [()]


class TestRunSweep:
    def test_binomial_antibunching(self, bs10):
        cfg = hoa_config(bs10, GridSpec(name="p", start=0.01, stop=0.99, count=99))
        result = run_sweep(cfg)
        assert len(result.rows) == 99
        assert set(result.column("status")) == {STATUS_OK}
        for kind in ("BS", "VFBS", "PABS"):
            values = result.column(f"{kind}_hoa1_formula")
            assert all(v is not None and v < 0 for v in values)
            assert all(result.column(f"{kind}_hoa1_nonclassical"))
        assert result.column("p")[0] == pytest.approx(0.01)

    def test_failed_variant_keeps_row(self):
        cfg = SweepConfig(
            template=StateSpec(Family.KS, chi=0.02),
            engineerings=ALL,
            grid=GridSpec(name="alpha_mag", start=0.0, stop=1.0, count=3),
            measures=(MeasureRequest(kind=Measure.ENTROPY),),
        )
        first, *rest = run_sweep(cfg).records()
        assert first["VFKS_status"] == STATUS_INVALID_PARAMETER
        assert first["VFKS_entropy_formula"] is None
        assert first["KS_status"] == STATUS_OK
        assert first["PAKS_entropy_formula"] == pytest.approx(0.5, abs=1e-12)
        assert first["status"] == STATUS_INVALID_PARAMETER
        assert all(row["status"] == STATUS_OK for row in rest)

    def test_two_dimensional_order(self):
        cfg = SweepConfig(
            template=StateSpec(Family.KS, alpha_mag=1.0),
            engineerings=(Engineering.PA,),
            grid=GridSpec(name="chi", start=0.0, stop=0.1, count=2),
            grid_y=GridSpec(name="theta", start=0.0, stop=1.0, count=3),
            measures=(MeasureRequest(kind=Measure.HOS, orders=(4,)),),
        )
        result = run_sweep(cfg)
        assert [row[:2] for row in result.rows] == [
            (0.0, 0.0),
            (0.0, 0.5),
            (0.0, 1.0),
            (0.1, 0.0),
            (0.1, 0.5),
            (0.1, 1.0),
        ]

    @pytest.mark.slow
    def test_parallel_matches_serial(self, bs10):
        grid = GridSpec(name="p", start=0.05, stop=0.95, count=8)
        serial = run_sweep(hoa_config(bs10, grid))
        parallel = run_sweep(hoa_config(bs10, grid, workers=2))
        assert parallel.to_csv() == serial.to_csv()

    def test_sixth_order_sub_poissonian(self):
        cfg = SweepConfig(
            template=StateSpec(Family.KS, alpha_mag=1.0),
            engineerings=(Engineering.NONE,),
            measures=(MeasureRequest(kind=Measure.HOSPS, orders=(6,)),),
        )
        (row,) = run_sweep(cfg).records()
        assert row["status"] == STATUS_OK
        assert abs(row["KS_hosps6_formula"]) < 1e-10

    def test_evaluate_variant_width(self, bs10):
        measures = (
            MeasureRequest(kind=Measure.HOSPS, orders=(2, 3)),
            MeasureRequest(kind=Measure.ENTROPY),
        )
        cells = evaluate_variant(bs10, measures, 1e-12)
        assert len(cells) == 9
        assert isinstance(cells[2], bool)


class TestParseSweep:
    def test_alias(self):
        assert parse_sweep("alpha=0:2:5") == {
            "name": "alpha_mag",
            "start": 0.0,
            "stop": 2.0,
            "count": 5,
            "linear": True,
        }

    def test_log_spacing(self):
        parsed = parse_sweep(" chi = 1e-3:1e-1:7:log ")
        assert parsed["linear"] is False
        assert GridSpec.model_validate(parsed).count == 7

    @pytest.mark.parametrize("text", ["p=0.1:0.9", "p:0.1:0.9:3", "p=a:b:3", "p=0:1:3:cubic"])
    def test_rejects_malformed(self, text):
        with pytest.raises(InvalidParameterError):
            parse_sweep(text)


class TestOutput:
    @pytest.mark.parametrize(
        ("cell", "expected"),
        [(None, ""), (True, "1"), (False, "0"), (3, "3"), (0.5, "5.00e-01"), ("x", "x")],
    )
    def test_format_cell(self, cell, expected):
        assert format_cell(cell, 3) == expected

    def test_render_csv(self):
        assert render_csv(["a", "b"], [(1, None)]) == "a,b\n1,\n"
