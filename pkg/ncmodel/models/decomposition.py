"""
Decomposition Models

Decompositions alpha = m_1 beta_1 + ... + m_l beta_l of a dimension vector
into simple dimension vectors.
"""

from dataclasses import dataclass

from ncmodel.models.quiver import DimVector


@dataclass(frozen=True)
class SimpleDecomposition:
    """Multiset of (multiplicity, simple beta) parts, betas pairwise distinct."""
    parts: tuple[tuple[int, DimVector], ...]

    @property
    def total(self) -> DimVector:
        vectors = [beta.scale(m) for m, beta in self.parts]
        result = vectors[0]
        for v in vectors[1:]:
            result = result + v
        return result

    @property
    def length(self) -> int:
        """The number l of distinct simple summands."""
        return len(self.parts)

    @property
    def is_trivial(self) -> bool:
        return len(self.parts) == 1 and self.parts[0][0] == 1

    def as_set(self) -> frozenset[tuple[int, tuple[int, ...]]]:
        return frozenset((m, beta.entries) for m, beta in self.parts)


@dataclass(frozen=True)
class RamificationComponent:
    """A nontrivial decomposition with its component dimension sum d(beta_j)."""
    decomposition: SimpleDecomposition
    dimension: int


@dataclass(frozen=True)
class RamificationProfile:
    """Azumaya stratum dimension d(alpha) plus the nontrivial components."""
    azumaya_dimension: int
    components: tuple[RamificationComponent, ...]

    @property
    def component_dimensions(self) -> frozenset[int]:
        return frozenset(c.dimension for c in self.components)
