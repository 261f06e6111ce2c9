"""
Divisor Models

Ramification divisors on a smooth surface, recorded combinatorially:
curves, normal crossings with Z_n branch classes, and blow-up traces.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Curve:
    """An irreducible curve of the divisor."""
    id: str
    smooth: bool = True
    ramified: bool = True


@dataclass(frozen=True)
class Branch:
    """One branch of a crossing: the curve and its local class in Z_n."""
    curve: str
    cls: int


@dataclass(frozen=True)
class Crossing:
    """A normal crossing: exactly two branches whose classes sum to 0."""
    id: str
    branches: tuple[Branch, Branch]

    @property
    def is_self_crossing(self) -> bool:
        return self.branches[0].curve == self.branches[1].curve

    @property
    def b(self) -> int:
        """Class of the first branch; the second carries -b."""
        return self.branches[0].cls


@dataclass(frozen=True)
class DivisorConfig:
    n: int
    curves: tuple[Curve, ...]
    points: tuple[Crossing, ...]

    def curve(self, curve_id: str) -> Curve | None:
        return next((c for c in self.curves if c.id == curve_id), None)

    def point(self, point_id: str) -> Crossing | None:
        return next((p for p in self.points if p.id == point_id), None)

    @property
    def obstructed_points(self) -> tuple[Crossing, ...]:
        return tuple(p for p in self.points if p.b % self.n != 0)


@dataclass(frozen=True)
class BlowUpStep:
    point: str
    exceptional_curve: str
    b: int
    new_points: tuple[Crossing, ...] = ()


@dataclass(frozen=True)
class ResolutionTrace:
    steps: tuple[BlowUpStep, ...]
    final: DivisorConfig


@dataclass(frozen=True)
class SmoothModelVerdict:
    exists: bool
    witness: ResolutionTrace | None = None
    obstructions: tuple[Crossing, ...] = ()
    warnings: tuple[str, ...] = field(default_factory=tuple)
