"""Declarative panel definitions for figure reproduction."""

from __future__ import annotations

from collections.abc import Mapping
from types import MappingProxyType
from typing import Final

from .const import (
    AXIS_ALPHA,
    AXIS_CHI,
    AXIS_P,
    AXIS_THETA,
    DEFAULT_BS_PHOTONS,
    DEFAULT_HOA_ORDERS,
    DEFAULT_HOS_ORDERS,
    DEFAULT_HOSPS_ORDERS,
    DEFAULT_KERR_CHI,
)
from .models import Engineering, Family, FigurePanelDefinition, Measure

ALL_VARIANTS: Final = (Engineering.NONE, Engineering.VF, Engineering.PA)

AXIS_RANGES: Final[Mapping[str, tuple[float, float]]] = MappingProxyType(
    {
        "alpha_mag": AXIS_ALPHA,
        "p": AXIS_P,
        "chi": AXIS_CHI,
        "theta": AXIS_THETA,
    }
)


def create_panel(
    figure_id: str,
    title: str,
    family: Family,
    measure: Measure,
    x_axis: str,
    *,
    orders: tuple[int, ...] = (),
    y_axis: str | None = None,
    variants: tuple[Engineering, ...] = ALL_VARIANTS,
    caption_parameters: dict[str, float | int] | None = None,
    defaults: dict[str, float | int] | None = None,
) -> FigurePanelDefinition:
    """Build a panel definition."""
    return FigurePanelDefinition(
        figure_id=figure_id,
        title=title,
        family=family,
        variants=variants,
        measure=measure,
        orders=orders,
        x_axis=x_axis,
        y_axis=y_axis,
        caption_parameters=caption_parameters or {},
        defaults=defaults or {},
    )


_PANELS: Final[list[FigurePanelDefinition]] = [
    # Antibunching
    create_panel(
        "fig1a",
        "HOA of ECS, PAECS and VFECS against |alpha|",
        Family.ECS,
        Measure.HOA,
        "alpha_mag",
        orders=DEFAULT_HOA_ORDERS,
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig1b",
        "HOA of BS, PABS and VFBS against p",
        Family.BS,
        Measure.HOA,
        "p",
        orders=DEFAULT_HOA_ORDERS,
        caption_parameters={"m": DEFAULT_BS_PHOTONS},
    ),
    create_panel(
        "fig1c",
        "HOA of KS, PAKS and VFKS against |alpha|",
        Family.KS,
        Measure.HOA,
        "alpha_mag",
        orders=DEFAULT_HOA_ORDERS,
        defaults={"chi": DEFAULT_KERR_CHI, "theta": 0.0},
    ),
    # Squeezing
    create_panel(
        "fig2a",
        "HOS of BS, PABS and VFBS against p",
        Family.BS,
        Measure.HOS,
        "p",
        orders=DEFAULT_HOS_ORDERS,
        defaults={"m": DEFAULT_BS_PHOTONS},
    ),
    create_panel(
        "fig2b",
        "HOS of KS, PAKS and VFKS against |alpha|",
        Family.KS,
        Measure.HOS,
        "alpha_mag",
        orders=DEFAULT_HOS_ORDERS,
        caption_parameters={"chi": DEFAULT_KERR_CHI},
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig2c",
        "HOS of KS, PAKS and VFKS against chi",
        Family.KS,
        Measure.HOS,
        "chi",
        orders=DEFAULT_HOS_ORDERS,
        caption_parameters={"alpha_mag": 1.0},
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig3a",
        "Fourth-order HOS of PAKS over (chi, theta)",
        Family.KS,
        Measure.HOS,
        "chi",
        y_axis="theta",
        orders=(4,),
        variants=(Engineering.PA,),
        caption_parameters={"alpha_mag": 3.0, "l": 4},
    ),
    create_panel(
        "fig3b",
        "Fourth-order HOS of PAKS over (|alpha|, theta)",
        Family.KS,
        Measure.HOS,
        "alpha_mag",
        y_axis="theta",
        orders=(4,),
        variants=(Engineering.PA,),
        caption_parameters={"chi": DEFAULT_KERR_CHI, "l": 4},
    ),
    create_panel(
        "fig3c",
        "Fourth-order HOS of PAKS over (|alpha|, chi)",
        Family.KS,
        Measure.HOS,
        "alpha_mag",
        y_axis="chi",
        orders=(4,),
        variants=(Engineering.PA,),
        caption_parameters={"theta": 0.0, "l": 4},
    ),
    # Sub-Poissonian statistics
    create_panel(
        "fig4a",
        "HOSPS of ECS and its engineered states against |alpha|",
        Family.ECS,
        Measure.HOSPS,
        "alpha_mag",
        orders=DEFAULT_HOSPS_ORDERS,
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig4b",
        "HOSPS of BS and its engineered states against p",
        Family.BS,
        Measure.HOSPS,
        "p",
        orders=DEFAULT_HOSPS_ORDERS,
        defaults={"m": DEFAULT_BS_PHOTONS},
    ),
    create_panel(
        "fig4c",
        "HOSPS of KS and its engineered states against |alpha|",
        Family.KS,
        Measure.HOSPS,
        "alpha_mag",
        orders=DEFAULT_HOSPS_ORDERS,
        defaults={"chi": DEFAULT_KERR_CHI, "theta": 0.0},
    ),
    # Linear entropy
    create_panel(
        "fig5a",
        "Linear entropy of ECS, PAECS and VFECS against |alpha|",
        Family.ECS,
        Measure.ENTROPY,
        "alpha_mag",
        caption_parameters={"chi": DEFAULT_KERR_CHI},
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig5b",
        "Linear entropy of BS, PABS and VFBS against p",
        Family.BS,
        Measure.ENTROPY,
        "p",
        caption_parameters={"chi": DEFAULT_KERR_CHI},
        defaults={"m": DEFAULT_BS_PHOTONS},
    ),
    create_panel(
        "fig5c",
        "Linear entropy of KS, PAKS and VFKS against |alpha|",
        Family.KS,
        Measure.ENTROPY,
        "alpha_mag",
        caption_parameters={"chi": DEFAULT_KERR_CHI},
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig5d",
        "Linear entropy of KS, PAKS and VFKS against chi",
        Family.KS,
        Measure.ENTROPY,
        "chi",
        caption_parameters={"alpha_mag": 1.0},
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig6a",
        "Linear entropy of KS over (|alpha|, chi)",
        Family.KS,
        Measure.ENTROPY,
        "alpha_mag",
        y_axis="chi",
        variants=(Engineering.NONE,),
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig6b",
        "Linear entropy of VFKS over (|alpha|, chi)",
        Family.KS,
        Measure.ENTROPY,
        "alpha_mag",
        y_axis="chi",
        variants=(Engineering.VF,),
        defaults={"theta": 0.0},
    ),
    create_panel(
        "fig6c",
        "Linear entropy of PAKS over (|alpha|, chi)",
        Family.KS,
        Measure.ENTROPY,
        "alpha_mag",
        y_axis="chi",
        variants=(Engineering.PA,),
        defaults={"theta": 0.0},
    ),
]

FIGURE_PANELS: Final[Mapping[str, FigurePanelDefinition]] = MappingProxyType(
    {panel["figure_id"]: panel for panel in _PANELS}
)
