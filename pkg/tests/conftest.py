"""Shared fixtures and strategies for the holeburn tests."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from holeburn.models import Engineering, Family, StateKind, StateSpec

settings.register_profile(
    "default",
    max_examples=15,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Five representative points per family
FAMILY_GRIDS: dict[Family, list[dict[str, float]]] = {
    Family.ECS: [
        {"alpha_mag": a, "theta": t}
        for a, t in ((0.3, 0.0), (0.8, 0.4), (1.2, 1.1), (1.6, 2.5), (2.0, 0.7))
    ],
    Family.BS: [
        {"p": p, "m": m}
        for p, m in ((0.1, 10), (0.3, 10), (0.5, 6), (0.75, 10), (0.95, 4))
    ],
    Family.KS: [
        {"alpha_mag": a, "theta": t, "chi": c}
        for a, t, c in (
            (0.3, 0.0, 0.02),
            (0.8, 0.4, 0.05),
            (1.2, 1.1, 0.0),
            (1.6, 2.5, 0.08),
            (2.0, 0.7, 0.02),
        )
    ],
}

ENGINEERED_KINDS = [k for k in StateKind if k.engineering is not Engineering.NONE]


def grid_specs(kinds: list[StateKind] | None = None) -> list[StateSpec]:
    """Every kind at every grid point of its family."""
    return [
        StateSpec.from_kind(kind, **params)
        for kind in kinds or list(StateKind)
        for params in FAMILY_GRIDS[kind.family]
    ]


def spec_id(spec: StateSpec) -> str:
    """Readable pytest id."""
    params = ",".join(f"{k}={v:g}" for k, v in spec.parameters().items())
    return f"{spec.kind}({params})"


@st.composite
def state_specs(draw: st.DrawFn, kinds: list[StateKind] | None = None) -> StateSpec:
    """Random valid spec of one of ``kinds``."""
    kind = draw(st.sampled_from(kinds or list(StateKind)))
    if kind.family is Family.BS:
        return StateSpec.from_kind(
            kind,
            p=draw(st.floats(0.02, 0.98)),
            m=draw(st.integers(1, 12)),
        )
    params = {
        "alpha_mag": draw(st.floats(0.2, 2.0)),
        "theta": draw(st.floats(0.0, 6.283)),
    }
    if kind.family is Family.KS:
        params["chi"] = draw(st.floats(0.0, 0.1))
    return StateSpec.from_kind(kind, **params)


def rel_close(a: complex, b: complex, tol: float) -> bool:
    """|a - b| <= tol * max(1, |b|)."""
    return abs(a - b) <= tol * max(1.0, abs(b))


@pytest.fixture
def bs10() -> StateSpec:
    """Binomial state at M = 10, p = 0.3."""
    return StateSpec(Family.BS, p=0.3, m=10)
