"""
Surface Models

Local data of smooth orders over a surface: the A_klm quiver settings, the
local triples built on them and the block pictures of the completed stalks.
"""

from dataclasses import dataclass

from ncmodel.models.enums import IdealLabel
from ncmodel.models.quiver import DimVector, MarkedQuiver


@dataclass(frozen=True)
class AklmSetting:
    """
    The quiver setting A_klm with the all-ones dimension vector.

    Vertices 0..k-1 form the x-tail, k..k+l-1 the y-tail and the last m
    vertices the shared chain. Arrow 0 is x and arrow 1 is y.
    """
    k: int
    l: int
    m: int
    quiver: MarkedQuiver
    alpha: DimVector

    X_ARROW = 0
    Y_ARROW = 1

    @property
    def p(self) -> int:
        return self.k + self.l + self.m

    @property
    def label(self) -> str:
        return f"A_{{{self.k}{self.l}{self.m}}}"

    @property
    def klm(self) -> tuple[int, int, int]:
        return (self.k, self.l, self.m)


@dataclass(frozen=True)
class LocalTriple:
    """
    The etale-local datum (A_klm, (1,...,1), gamma) of a smooth order.

    ``gamma[i]`` is the dimension of the simple component sitting at vertex i.
    """
    setting: AklmSetting
    gamma: tuple[int, ...]
    n: int

    @property
    def canonical_gamma(self) -> tuple[int, ...]:
        """gamma as an unordered partition, sorted descending."""
        return tuple(sorted(self.gamma, reverse=True))


@dataclass(frozen=True)
class BlockStructure:
    """p x p grid of ideal labels; block (i, j) has size sizes[i] x sizes[j]."""
    sizes: tuple[int, ...]
    labels: tuple[tuple[IdealLabel, ...], ...]

    @property
    def p(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def label(self, i: int, j: int) -> IdealLabel:
        return self.labels[i][j]


@dataclass(frozen=True)
class QuantumBlockStructure:
    """
    a x a grid of M_c(C_q[[u,v]]) blocks at a normal crossing, q a primitive
    b-th root of unity.
    """
    a: int
    b: int
    c: int
    labels: tuple[tuple[IdealLabel, ...], ...]

    @property
    def n(self) -> int:
        return self.a * self.b * self.c

    @property
    def is_commutative(self) -> bool:
        return self.b == 1
