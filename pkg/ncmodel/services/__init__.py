"""
ncmodel - Services Module

Computation layer, one module per domain area.
"""

from ncmodel.services import quiver_service
from ncmodel.services import rep_service
from ncmodel.services import surface_service
from ncmodel.services import divisor_service
from ncmodel.services import brauer_severi_service
from ncmodel.services import quantum_plane_service

__all__ = [
    "quiver_service",
    "rep_service",
    "surface_service",
    "divisor_service",
    "brauer_severi_service",
    "quantum_plane_service",
]
