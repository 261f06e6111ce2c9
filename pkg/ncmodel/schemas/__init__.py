"""
ncmodel - Schemas Module

Pydantic models for JSON input and output.
"""

from ncmodel.schemas.quiver import (
    QuiverSchema,
    EulerResponse,
    SimpleResponse,
    DecompositionPart,
    ComponentSchema,
    RamificationResponse,
)
from ncmodel.schemas.triple import (
    AklmResponse,
    TripleSchema,
    ClassificationResponse,
    RamificationTypeResponse,
    BlockStructureSchema,
    QuantumBlockStructureSchema,
    LocalModelResponse,
)
from ncmodel.schemas.divisor import (
    CurveSchema,
    CrossingSchema,
    DivisorConfigSchema,
    BlowUpStepSchema,
    ResolutionTraceSchema,
    SmoothModelVerdictSchema,
)
from ncmodel.schemas.fiber import (
    FiberComponentSchema,
    HesselinkStratumSchema,
    StabilityCensusSchema,
    FiberReportSchema,
)
from ncmodel.schemas.qplane import QuantumPlaneReportSchema

__all__ = [
    # Quiver
    "QuiverSchema",
    "EulerResponse",
    "SimpleResponse",
    "DecompositionPart",
    "ComponentSchema",
    "RamificationResponse",
    # Triple
    "AklmResponse",
    "TripleSchema",
    "ClassificationResponse",
    "RamificationTypeResponse",
    "BlockStructureSchema",
    "QuantumBlockStructureSchema",
    "LocalModelResponse",
    # Divisor
    "CurveSchema",
    "CrossingSchema",
    "DivisorConfigSchema",
    "BlowUpStepSchema",
    "ResolutionTraceSchema",
    "SmoothModelVerdictSchema",
    # Fiber
    "FiberComponentSchema",
    "HesselinkStratumSchema",
    "StabilityCensusSchema",
    "FiberReportSchema",
    # Quantum plane
    "QuantumPlaneReportSchema",
]
