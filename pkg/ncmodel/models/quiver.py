"""
Quiver Models

Marked quivers, dimension vectors and Euler forms. All values are immutable
and hashable so services can memoize on them.
"""

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ncmodel.core.exceptions import DimensionVectorError


Arrow = tuple[int, int]


@dataclass(frozen=True)
class MarkedQuiver:
    """
    Directed multigraph with labelled arrows and a set of marked loops.

    Arrow order is part of the identity: marks and thin representations
    address arrows by index. Construct through
    ``quiver_service.validate_quiver`` to get the invariants checked.
    """
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()
    marked: frozenset[int] = field(default_factory=frozenset)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def loops_at(self, vertex: int) -> list[int]:
        """Indices of the loops at a vertex."""
        return [i for i, (s, t) in enumerate(self.arrows) if s == t == vertex]

    def unmarked(self) -> "MarkedQuiver":
        return MarkedQuiver(self.vertex_count, self.arrows)


@dataclass(frozen=True)
class DimVector:
    """Nonnegative integer vector indexed by the vertices of a quiver."""
    entries: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise DimensionVectorError(f"Negative entry in dimension vector {self.entries}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "DimVector":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def zero(cls, n: int) -> "DimVector":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "DimVector":
        return cls(tuple(1 if j == i else 0 for j in range(n)))

    @classmethod
    def ones(cls, n: int) -> "DimVector":
        return cls((1,) * n)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector(tuple(a - b for a, b in zip(self.entries, other.entries, strict=True)))

    def scale(self, m: int) -> "DimVector":
        return DimVector(tuple(m * a for a in self.entries))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.entries) if e > 0)

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    @property
    def colex_key(self) -> tuple[int, ...]:
        """Sort key comparing from the last vertex backwards."""
        return tuple(reversed(self.entries))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


@dataclass(frozen=True)
class EulerForm:
    """Integer matrix chi_ij = delta_ij - #(arrows i -> j)."""
    matrix: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.size, self.size)
