"""
Divisor Schemas

Pydantic models for ramification divisor configurations and smooth-model
verdicts.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ncmodel.models.divisor import (
    BlowUpStep,
    Crossing,
    DivisorConfig,
    ResolutionTrace,
    SmoothModelVerdict,
)


# ============== Config Schemas ==============

class CurveSchema(BaseModel):
    """A curve of the divisor."""

    id: str = Field(..., min_length=1)
    smooth: bool = True
    ramified: bool = True


class CrossingSchema(BaseModel):
    """A crossing with its [curve id, class] branch entries."""

    id: str = Field(..., min_length=1)
    branches: List[Tuple[str, int]]

    @classmethod
    def from_domain(cls, p: Crossing) -> "CrossingSchema":
        return cls(id=p.id, branches=[(br.curve, br.cls) for br in p.branches])


class DivisorConfigSchema(BaseModel):
    """Config JSON: n, curves and crossing points."""

    n: int = Field(..., ge=1, description="Order of the Brauer class")
    curves: List[CurveSchema] = []
    points: List[CrossingSchema] = []

    @classmethod
    def from_domain(cls, c: DivisorConfig) -> "DivisorConfigSchema":
        return cls(
            n=c.n,
            curves=[CurveSchema(id=cv.id, smooth=cv.smooth, ramified=cv.ramified) for cv in c.curves],
            points=[CrossingSchema.from_domain(p) for p in c.points],
        )


# ============== Verdict Schemas ==============

class BlowUpStepSchema(BaseModel):
    point: str
    exceptional_curve: str
    b: int
    new_points: List[CrossingSchema] = []

    @classmethod
    def from_domain(cls, step: BlowUpStep) -> "BlowUpStepSchema":
        return cls(
            point=step.point,
            exceptional_curve=step.exceptional_curve,
            b=step.b,
            new_points=[CrossingSchema.from_domain(p) for p in step.new_points],
        )


class ResolutionTraceSchema(BaseModel):
    steps: List[BlowUpStepSchema]
    final: DivisorConfigSchema

    @classmethod
    def from_domain(cls, trace: ResolutionTrace) -> "ResolutionTraceSchema":
        return cls(
            steps=[BlowUpStepSchema.from_domain(s) for s in trace.steps],
            final=DivisorConfigSchema.from_domain(trace.final),
        )


class SmoothModelVerdictSchema(BaseModel):
    """Verdict payload; exit code stays 0 whatever the answer."""

    exists: bool
    witness: Optional[ResolutionTraceSchema] = None
    obstructions: List[CrossingSchema] = []
    warnings: List[str] = []

    @classmethod
    def from_domain(cls, verdict: SmoothModelVerdict) -> "SmoothModelVerdictSchema":
        return cls(
            exists=verdict.exists,
            witness=ResolutionTraceSchema.from_domain(verdict.witness) if verdict.witness else None,
            obstructions=[CrossingSchema.from_domain(p) for p in verdict.obstructions],
            warnings=list(verdict.warnings),
        )
