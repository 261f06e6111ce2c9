"""
Domain Enums

String-valued enums so they serialize verbatim into JSON payloads.
"""

import enum


class IdealLabel(str, enum.Enum):
    """Ideals of C[[x,y]] labelling the blocks of a completed order.

    ``U`` labels the ideal u.C_q[[u,v]] of a quantum-plane block.
    """
    ONE = "1"
    X = "x"
    Y = "y"
    XY = "xy"
    U = "u"

    @property
    def generators(self) -> tuple[tuple[int, int], ...]:
        """Monomial generators as (x-exponent, y-exponent) pairs."""
        return _GENERATORS[self]


_GENERATORS = {
    IdealLabel.ONE: ((0, 0),),
    IdealLabel.X: ((1, 0),),
    IdealLabel.Y: ((0, 1),),
    IdealLabel.XY: ((1, 0), (0, 1)),
    # u plays the role of x in the quantum chart
    IdealLabel.U: ((1, 0),),
}


class RamificationType(str, enum.Enum):
    """Local shape of the ramification locus at a point of the surface."""
    AZUMAYA = "Azumaya"
    ISOLATED_POINT = "IsolatedPoint"
    SMOOTH_BRANCH_POINT = "SmoothBranchPoint"
    NORMAL_CROSSING = "NormalCrossing"


class PointType(str, enum.Enum):
    """Kind of point a Brauer-Severi fiber sits over."""
    AZUMAYA = "Azumaya"
    RAMIFIED = "Ramified"
