"""
Quiver Schemas

Pydantic models for marked quivers, Euler matrices and simplicity results.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ncmodel.models.decomposition import RamificationProfile
from ncmodel.models.quiver import EulerForm


class QuiverSchema(BaseModel):
    """Quiver JSON: vertex count, arrows in input order, marked arrow indices."""

    vertices: int = Field(..., ge=1)
    arrows: List[Tuple[int, int]] = []
    marked: List[int] = []


class EulerResponse(BaseModel):
    matrix: List[List[int]]

    @classmethod
    def from_domain(cls, f: EulerForm) -> "EulerResponse":
        return cls(matrix=[list(row) for row in f.matrix])


class SimpleResponse(BaseModel):
    """Simplicity of a dimension vector and, when simple, d(alpha)."""

    alpha: List[int]
    simple: bool
    dimension: Optional[int] = None


class DecompositionPart(BaseModel):
    multiplicity: int
    beta: List[int]


class ComponentSchema(BaseModel):
    parts: List[DecompositionPart]
    dimension: int


class RamificationResponse(BaseModel):
    """Azumaya dimension plus every nontrivial decomposition component."""

    alpha: List[int]
    azumaya_dimension: int
    components: List[ComponentSchema]

    @classmethod
    def from_domain(cls, alpha: List[int], profile: RamificationProfile) -> "RamificationResponse":
        return cls(
            alpha=alpha,
            azumaya_dimension=profile.azumaya_dimension,
            components=[
                ComponentSchema(
                    parts=[
                        DecompositionPart(multiplicity=m, beta=list(beta.entries))
                        for m, beta in c.decomposition.parts
                    ],
                    dimension=c.dimension,
                )
                for c in profile.components
            ],
        )
