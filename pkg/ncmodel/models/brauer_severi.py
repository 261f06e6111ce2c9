"""
Brauer-Severi Models

Extended quiver settings, thin representations and the nullcone data of
the Brauer-Severi fibration over a point of a surface.
"""

from dataclasses import dataclass

import sympy

from ncmodel.models.enums import PointType
from ncmodel.models.quiver import DimVector, MarkedQuiver
from ncmodel.models.surface import LocalTriple


@dataclass(frozen=True)
class ExtendedSetting:
    """
    The base quiver plus a vertex v0 (index 0) with d_i arrows v0 -> v_i.

    Base vertex i becomes vertex i + 1.
    """
    base: LocalTriple
    quiver: MarkedQuiver
    alpha_tilde: DimVector
    theta: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count


@dataclass(frozen=True)
class ThinRep:
    """One exact rational scalar per arrow; every vertex space is C^1."""
    scalars: tuple[sympy.Rational, ...]

    @classmethod
    def ones(cls, arrow_count: int) -> "ThinRep":
        return cls((sympy.Integer(1),) * arrow_count)

    def scaled(self, factor) -> "ThinRep":
        return ThinRep(tuple(sympy.Rational(factor) * s for s in self.scalars))

    def support(self) -> frozenset[int]:
        """Indices of arrows with nonzero scalar."""
        return frozenset(i for i, s in enumerate(self.scalars) if s != 0)


@dataclass(frozen=True)
class HesselinkStratum:
    index: int
    saturated_set: tuple[str, ...]
    level_quiver: MarkedQuiver
    theta_i: tuple[int, ...]
    level_moduli_dim: int
    stratum_dim: int


@dataclass(frozen=True)
class FiberComponent:
    label: str
    dim: int


@dataclass(frozen=True)
class FiberReport:
    point_type: PointType
    k: int
    n: int
    components: tuple[FiberComponent, ...]
    flat: bool
    strata: tuple[HesselinkStratum, ...] = ()


@dataclass(frozen=True)
class StabilityCensus:
    samples: int
    seed: int
    stable: int
    strictly_semistable: int
    unstable: int
