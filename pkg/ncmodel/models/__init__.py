"""
ncmodel - Models Module

Immutable domain values shared by the services.
"""

from ncmodel.models.enums import IdealLabel, PointType, RamificationType
from ncmodel.models.quiver import DimVector, EulerForm, MarkedQuiver
from ncmodel.models.decomposition import (
    RamificationComponent,
    RamificationProfile,
    SimpleDecomposition,
)
from ncmodel.models.surface import (
    AklmSetting,
    BlockStructure,
    LocalTriple,
    QuantumBlockStructure,
)
from ncmodel.models.divisor import (
    BlowUpStep,
    Branch,
    Crossing,
    Curve,
    DivisorConfig,
    ResolutionTrace,
    SmoothModelVerdict,
)
from ncmodel.models.brauer_severi import (
    ExtendedSetting,
    FiberComponent,
    FiberReport,
    HesselinkStratum,
    StabilityCensus,
    ThinRep,
)
from ncmodel.models.quantum_plane import (
    INFINITE,
    QuadraticForm6,
    QuantumPlaneReport,
    SingularityReport,
    StabilizerResult,
)

__all__ = [
    # Enums
    "IdealLabel",
    "PointType",
    "RamificationType",
    # Quiver
    "DimVector",
    "EulerForm",
    "MarkedQuiver",
    # Rep theory
    "RamificationComponent",
    "RamificationProfile",
    "SimpleDecomposition",
    # Surface
    "AklmSetting",
    "BlockStructure",
    "LocalTriple",
    "QuantumBlockStructure",
    # Divisor
    "BlowUpStep",
    "Branch",
    "Crossing",
    "Curve",
    "DivisorConfig",
    "ResolutionTrace",
    "SmoothModelVerdict",
    # Brauer-Severi
    "ExtendedSetting",
    "FiberComponent",
    "FiberReport",
    "HesselinkStratum",
    "StabilityCensus",
    "ThinRep",
    # Quantum plane
    "INFINITE",
    "QuadraticForm6",
    "QuantumPlaneReport",
    "SingularityReport",
    "StabilizerResult",
]
