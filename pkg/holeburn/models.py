"""Models for holeburn."""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from enum import StrEnum
from types import MappingProxyType
from typing import Any, Final, TypedDict

import numpy as np
from numpy.typing import NDArray

from .const import (
    DEFAULT_BS_PHOTONS,
    DIAGONAL_IMAG_TOL,
    DISCREPANCY_REL_TOL,
    NORMALIZATION_TOL,
)
from .exceptions import (
    DegenerateStateError,
    InvalidParameterError,
    MissingMomentError,
    NumericalError,
)

type ComplexArray = NDArray[np.complex128]
type MomentKey = tuple[int, int]

ORACLE_SOURCE: Final = "oracle"


class Family(StrEnum):
    """Parent state families."""

    ECS = "ecs"
    BS = "bs"
    KS = "ks"


class Engineering(StrEnum):
    """Hole-burning operation applied to the parent."""

    NONE = "none"
    VF = "vf"
    PA = "pa"


class StateKind(StrEnum):
    """The nine parent and engineered states."""

    ECS = "ECS"
    VFECS = "VFECS"
    PAECS = "PAECS"
    BS = "BS"
    VFBS = "VFBS"
    PABS = "PABS"
    KS = "KS"
    VFKS = "VFKS"
    PAKS = "PAKS"

    @classmethod
    def of(cls, family: Family, engineering: Engineering) -> StateKind:
        """Return the kind for a family/engineering pair."""
        prefix = "" if engineering is Engineering.NONE else engineering.upper()
        return cls(f"{prefix}{family.upper()}")

    @property
    def family(self) -> Family:
        """Parent family."""
        return Family(self.value.removeprefix("VF").removeprefix("PA").lower())

    @property
    def engineering(self) -> Engineering:
        """Engineering applied to the parent."""
        if self.value.startswith("VF"):
            return Engineering.VF
        if self.value.startswith("PA"):
            return Engineering.PA
        return Engineering.NONE


class Measure(StrEnum):
    """Nonclassicality witnesses and measures."""

    HOA = "hoa"
    HOS = "hos"
    HOSPS = "hosps"
    ENTROPY = "entropy"


FAMILY_PARAMETERS: Final[Mapping[Family, tuple[str, ...]]] = MappingProxyType(
    {
        Family.ECS: ("alpha_mag", "theta"),
        Family.BS: ("p", "m"),
        Family.KS: ("alpha_mag", "theta", "chi"),
    }
)


@dataclass(frozen=True, slots=True)
class StateSpec:
    """Parameters selecting one of the nine states.

    Parameters a family does not use are carried but ignored.
    """

    family: Family
    engineering: Engineering = Engineering.NONE
    alpha_mag: float = 0.0
    theta: float = 0.0
    p: float = 0.5
    m: int = DEFAULT_BS_PHOTONS
    chi: float = 0.0

    def __post_init__(self) -> None:
        """Coerce enum fields and validate ranges."""
        try:
            object.__setattr__(self, "family", Family(self.family))
            object.__setattr__(self, "engineering", Engineering(self.engineering))
        except ValueError as err:
            raise InvalidParameterError(str(err)) from err

        for name in ("alpha_mag", "theta", "p", "chi"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

        if self.alpha_mag < 0:
            raise InvalidParameterError(f"alpha_mag must be >= 0, got {self.alpha_mag}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameterError(f"p must lie in [0, 1], got {self.p}")
        if isinstance(self.m, bool) or int(self.m) != self.m or self.m < 0:
            raise InvalidParameterError(f"m must be a nonnegative integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))

    @classmethod
    def from_kind(cls, kind: StateKind | str, **params: Any) -> StateSpec:
        """Build a spec from a kind label such as "PAKS"."""
        kind = StateKind(kind)
        return cls(family=kind.family, engineering=kind.engineering, **params)

    @property
    def kind(self) -> StateKind:
        """Kind label of this spec."""
        return StateKind.of(self.family, self.engineering)

    @property
    def alpha(self) -> complex:
        """Complex displacement |alpha| e^{i theta}."""
        return cmath.rect(self.alpha_mag, self.theta)

    @property
    def intensity(self) -> float:
        """|alpha|^2."""
        return self.alpha_mag * self.alpha_mag

    def parent(self) -> StateSpec:
        """Same parameters with engineering removed."""
        return replace(self, engineering=Engineering.NONE)

    def with_engineering(self, engineering: Engineering) -> StateSpec:
        """Same parameters with another engineering."""
        return replace(self, engineering=engineering)

    def with_param(self, name: str, value: float) -> StateSpec:
        """Return a copy with one family parameter replaced."""
        if name not in FAMILY_PARAMETERS[self.family]:
            raise InvalidParameterError(
                f"parameter {name!r} does not belong to family {self.family}"
            )
        if name == "m":
            if float(value) != round(value):
                raise InvalidParameterError(f"m must be an integer, got {value}")
            return replace(self, m=round(value))
        return replace(self, **{name: value})

    def parameters(self) -> dict[str, float | int]:
        """Family-relevant parameters."""
        return {name: getattr(self, name) for name in FAMILY_PARAMETERS[self.family]}


@dataclass(frozen=True, slots=True, eq=False)
class FockVector:
    """Truncated amplitude vector c_0..c_N with a certified tail bound."""

    amplitudes: ComplexArray
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        """Freeze a private copy of the amplitudes."""
        arr = np.array(self.amplitudes, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidParameterError("amplitudes must be a non-empty 1-D sequence")
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @classmethod
    def basis(cls, n: int, cutoff: int | None = None) -> FockVector:
        """Fock state |n>."""
        if n < 0:
            raise InvalidParameterError(f"Fock index must be >= 0, got {n}")
        amps = np.zeros((cutoff if cutoff is not None else n) + 1, dtype=np.complex128)
        amps[n] = 1.0
        return cls(amps)

    @property
    def cutoff(self) -> int:
        """Highest retained Fock index."""
        return int(self.amplitudes.size - 1)

    @property
    def norm_sq(self) -> float:
        """Squared norm."""
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    @property
    def probabilities(self) -> NDArray[np.float64]:
        """Photon-number distribution p_n = |c_n|^2."""
        return np.abs(self.amplitudes) ** 2

    def is_normalized(self, tol: float = NORMALIZATION_TOL) -> bool:
        """Check |sum p_n - 1| < tol."""
        return abs(self.norm_sq - 1.0) < tol

    def require_normalized(self, tol: float = NORMALIZATION_TOL) -> None:
        """Raise unless the vector is normalized."""
        if not self.is_normalized(tol):
            raise DegenerateStateError(
                f"normalized state required, squared norm is {self.norm_sq:.3e}"
            )

    def normalized(self) -> FockVector:
        """Return the vector scaled to unit norm."""
        norm_sq = self.norm_sq
        if norm_sq == 0.0:
            raise DegenerateStateError("cannot normalize the zero vector")
        return FockVector(self.amplitudes / math.sqrt(norm_sq), self.tail_bound)

    def padded(self, extra: int) -> FockVector:
        """Extend the cutoff with zero amplitudes."""
        if extra <= 0:
            return self
        return FockVector(
            np.concatenate([self.amplitudes, np.zeros(extra, dtype=np.complex128)]),
            self.tail_bound,
        )


@dataclass(frozen=True, slots=True)
class MomentTable:
    """Normally ordered moments <a^dag^j a^k> with per-entry provenance."""

    entries: Mapping[MomentKey, complex]
    sources: Mapping[MomentKey, str]

    @classmethod
    def from_values(
        cls, values: Mapping[MomentKey, complex], source: str
    ) -> MomentTable:
        """Build a table whose entries share one source tag."""
        return cls(
            MappingProxyType(dict(values)),
            MappingProxyType(dict.fromkeys(values, source)),
        )

    def __contains__(self, key: object) -> bool:
        """Check whether (j, k) is tabulated."""
        return key in self.entries

    def __getitem__(self, key: MomentKey) -> complex:
        """Return <a^dag^j a^k>."""
        try:
            return self.entries[key]
        except KeyError:
            raise MissingMomentError(f"moment {key} not in table") from None

    def require(self, keys: Iterable[MomentKey]) -> None:
        """Raise if any key is missing."""
        if missing := sorted(set(keys) - set(self.entries)):
            raise MissingMomentError(f"moments {missing} not in table")

    def diagonal(self, order: int) -> float:
        """Real diagonal moment <a^dag^n a^n>.

        The imaginary residue is bounded relative to max(1, |Re|).
        """
        value = self[(order, order)]
        if abs(value.imag) > DIAGONAL_IMAG_TOL * max(1.0, abs(value.real)):
            raise NumericalError(
                f"diagonal moment ({order},{order}) has imaginary part {value.imag:.3e}"
            )
        return value.real

    @property
    def mean_photon_number(self) -> float:
        """<N>."""
        return self.diagonal(1)

    def merged(self, other: MomentTable) -> MomentTable:
        """Union of two tables; entries of ``other`` win."""
        return MomentTable(
            MappingProxyType({**self.entries, **other.entries}),
            MappingProxyType({**self.sources, **other.sources}),
        )


@dataclass(frozen=True, slots=True)
class WitnessReport:
    """Formula and oracle values of one witness at one order."""

    kind: Measure
    order: int
    formula_value: float
    oracle_value: float
    metadata: Mapping[str, str] = field(default_factory=dict)

    @property
    def nonclassical(self) -> bool:
        """Nonclassicality flag, read from the formula path only."""
        return self.formula_value < 0

    @property
    def discrepancy(self) -> bool:
        """Formula and oracle disagree beyond the relative tolerance."""
        scale = max(1.0, abs(self.oracle_value))
        return abs(self.formula_value - self.oracle_value) > DISCREPANCY_REL_TOL * scale


@dataclass(frozen=True, slots=True, eq=False)
class TwoModeVector:
    """Amplitudes d_{j,m} of a two-mode state, zero outside j + m <= cutoff."""

    cutoff: int
    amplitudes: ComplexArray

    def __post_init__(self) -> None:
        """Freeze a private copy of the amplitude grid."""
        arr = np.array(self.amplitudes, dtype=np.complex128)
        if arr.shape != (self.cutoff + 1, self.cutoff + 1):
            raise InvalidParameterError(
                f"amplitude grid must be {(self.cutoff + 1,) * 2}, got {arr.shape}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @property
    def norm_sq(self) -> float:
        """Squared norm."""
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def get(self, j: int, m: int) -> complex:
        """Amplitude of |j, m>, zero outside the support."""
        if j < 0 or m < 0 or j + m > self.cutoff:
            return 0j
        return complex(self.amplitudes[j, m])


class FigurePanelDefinition(TypedDict, total=False):
    """Fixed parameters and axes of one reproducible figure panel."""

    figure_id: str
    title: str
    family: Family
    variants: tuple[Engineering, ...]
    measure: Measure
    orders: tuple[int, ...]
    x_axis: str
    y_axis: str | None

    # Values quoted in the panel caption; the manifest reports them verbatim.
    # Keys outside the family parameters (the squeezing order "l") are
    # informational only.
    caption_parameters: dict[str, float | int]
    # Values the caption leaves unstated
    defaults: dict[str, float | int]
