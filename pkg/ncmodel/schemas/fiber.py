"""
Fiber Schemas

Pydantic models for Brauer-Severi fiber reports.
"""

from typing import List, Optional

from pydantic import BaseModel

from ncmodel.models.brauer_severi import FiberReport, HesselinkStratum, StabilityCensus
from ncmodel.models.enums import PointType


class FiberComponentSchema(BaseModel):
    label: str
    dim: int


class HesselinkStratumSchema(BaseModel):
    index: int
    saturated_set: List[str]
    level_arrows: int
    theta_i: List[int]
    level_moduli_dim: int
    stratum_dim: int

    @classmethod
    def from_domain(cls, s: HesselinkStratum) -> "HesselinkStratumSchema":
        return cls(
            index=s.index,
            saturated_set=list(s.saturated_set),
            level_arrows=s.level_quiver.arrow_count,
            theta_i=list(s.theta_i),
            level_moduli_dim=s.level_moduli_dim,
            stratum_dim=s.stratum_dim,
        )


class StabilityCensusSchema(BaseModel):
    samples: int
    seed: int
    stable: int
    strictly_semistable: int
    unstable: int

    @classmethod
    def from_domain(cls, c: StabilityCensus) -> "StabilityCensusSchema":
        return cls(
            samples=c.samples,
            seed=c.seed,
            stable=c.stable,
            strictly_semistable=c.strictly_semistable,
            unstable=c.unstable,
        )


class FiberReportSchema(BaseModel):
    """Fiber JSON: {"components": [{"label", "dim"}], "flat": bool, ...}."""

    point_type: PointType
    k: int
    n: int
    components: List[FiberComponentSchema]
    flat: bool
    moduli_dimension: Optional[int] = None
    strata: List[HesselinkStratumSchema] = []
    census: Optional[StabilityCensusSchema] = None

    @classmethod
    def from_domain(
        cls,
        report: FiberReport,
        moduli_dimension: Optional[int] = None,
        census: Optional[StabilityCensus] = None,
    ) -> "FiberReportSchema":
        return cls(
            point_type=report.point_type,
            k=report.k,
            n=report.n,
            components=[FiberComponentSchema(label=c.label, dim=c.dim) for c in report.components],
            flat=report.flat,
            moduli_dimension=moduli_dimension,
            strata=[HesselinkStratumSchema.from_domain(s) for s in report.strata],
            census=StabilityCensusSchema.from_domain(census) if census else None,
        )
