"""
Quantum Plane Models

Results of the exact checks on trep_2 of the quantum plane of order two.
"""

from dataclasses import dataclass

from sympy import Matrix


@dataclass(frozen=True)
class QuadraticForm6:
    """Symmetric 6x6 rational matrix of a quadratic form in x_1..x_6."""
    matrix: Matrix

    def __hash__(self):
        return hash(tuple(self.matrix))


@dataclass(frozen=True)
class SingularityReport:
    dimension: int
    rank: int
    kernel_dimension: int
    isolated_singularity: bool
    singular_locus: str


# Stabilizer order of a positive-dimensional stabilizer.
INFINITE = "Infinite"


@dataclass(frozen=True)
class StabilizerResult:
    """Order of Stab(x) in PGL_2 with generator classes (identity omitted)."""
    order: int | str
    generators: tuple[Matrix, ...] = ()
    multipliers: tuple[int, ...] = ()

    @property
    def is_infinite(self) -> bool:
        return self.order == INFINITE


@dataclass(frozen=True)
class QuantumPlaneReport:
    dim: int
    rank: int
    isolated_singularity: bool
    strict_transform_smooth: bool
    stabilizer_order: int | str
    stabilizer_generator: tuple[tuple[str, ...], ...] | None
    obstructed: bool
