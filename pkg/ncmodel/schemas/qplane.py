"""
Quantum Plane Schemas
"""

from typing import List, Optional, Union

from pydantic import BaseModel

from ncmodel.models.quantum_plane import QuantumPlaneReport


class QuantumPlaneReportSchema(BaseModel):
    """Report of `qplane verify`."""

    dim: int
    rank: int
    isolated_singularity: bool
    strict_transform_smooth: bool
    stabilizer_order: Union[int, str]
    stabilizer_generator: Optional[List[List[str]]] = None
    obstructed: bool

    @classmethod
    def from_domain(cls, report: QuantumPlaneReport) -> "QuantumPlaneReportSchema":
        generator = report.stabilizer_generator
        return cls(
            dim=report.dim,
            rank=report.rank,
            isolated_singularity=report.isolated_singularity,
            strict_transform_smooth=report.strict_transform_smooth,
            stabilizer_order=report.stabilizer_order,
            stabilizer_generator=[list(row) for row in generator] if generator else None,
            obstructed=report.obstructed,
        )
