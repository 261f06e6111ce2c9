"""
Triple Schemas

Pydantic models for local triples, A_klm settings and block pictures.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ncmodel.models.enums import IdealLabel, RamificationType
from ncmodel.models.surface import BlockStructure, LocalTriple, QuantumBlockStructure
from ncmodel.schemas.quiver import QuiverSchema


# ============== Setting Schemas ==============

class AklmResponse(BaseModel):
    """An A_klm setting with its quiver and invariant cycles."""

    k: int
    l: int
    m: int
    quiver: QuiverSchema
    alpha: List[int]
    cycles: Tuple[List[int], List[int]]


class TripleSchema(BaseModel):
    """Triple JSON: {"k", "l", "m", "gamma", "n"}."""

    k: int = Field(..., ge=0)
    l: int = Field(..., ge=0)
    m: int = Field(..., ge=1)
    gamma: List[int]
    n: int

    @classmethod
    def from_domain(cls, t: LocalTriple) -> "TripleSchema":
        k, l, m = t.setting.klm
        return cls(k=k, l=l, m=m, gamma=list(t.gamma), n=t.n)


class ClassificationResponse(BaseModel):
    n: int
    count: int
    triples: List[TripleSchema]


class RamificationTypeResponse(BaseModel):
    k: int
    l: int
    m: int
    type: RamificationType


# ============== Block Schemas ==============

class BlockStructureSchema(BaseModel):
    """BlockStructure JSON: block sizes and the grid of ideal labels."""

    sizes: List[int]
    labels: List[List[IdealLabel]]

    @classmethod
    def from_domain(cls, bs: BlockStructure) -> "BlockStructureSchema":
        return cls(sizes=list(bs.sizes), labels=[list(row) for row in bs.labels])


class QuantumBlockStructureSchema(BaseModel):
    """a x a grid of M_c(C_q[[u,v]]) blocks, q of order b."""

    a: int
    b: int
    c: int
    n: int
    commutative: bool
    labels: List[List[IdealLabel]]

    @classmethod
    def from_domain(cls, qs: QuantumBlockStructure) -> "QuantumBlockStructureSchema":
        return cls(
            a=qs.a,
            b=qs.b,
            c=qs.c,
            n=qs.n,
            commutative=qs.is_commutative,
            labels=[list(row) for row in qs.labels],
        )


class LocalModelResponse(BaseModel):
    """Local block picture; exactly one of the two fields is set."""

    blocks: Optional[BlockStructureSchema] = None
    quantum: Optional[QuantumBlockStructureSchema] = None
