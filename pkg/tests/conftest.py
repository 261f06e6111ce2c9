"""
Pytest Configuration and Fixtures

Provides reusable quivers, divisor configurations and triples for the
ncmodel test suite.
"""

import json
from pathlib import Path

import pytest

from ncmodel.models.quiver import DimVector, MarkedQuiver
from ncmodel.services import divisor_service, quiver_service, surface_service


# ==================== Quiver Fixtures ====================

@pytest.fixture
def two_loop_quiver() -> MarkedQuiver:
    """One vertex with two loops: the A_001 quiver."""
    return quiver_service.validate_quiver({"vertices": 1, "arrows": [[0, 0], [0, 0]]})


@pytest.fixture
def a101_quiver() -> MarkedQuiver:
    """v0 -> v1, x: v1 -> v0 and the loop y at v1."""
    return surface_service.build_aklm(1, 0, 1).quiver


@pytest.fixture
def three_cycle() -> MarkedQuiver:
    """The oriented 3-cycle."""
    return quiver_service.validate_quiver({"vertices": 3, "arrows": [[0, 1], [1, 2], [2, 0]]})


@pytest.fixture
def two_cycle() -> MarkedQuiver:
    return quiver_service.validate_quiver({"vertices": 2, "arrows": [[0, 1], [1, 0]]})


@pytest.fixture
def point_quiver() -> MarkedQuiver:
    """A single vertex without arrows."""
    return quiver_service.validate_quiver({"vertices": 1, "arrows": []})


@pytest.fixture
def marked_loop_quiver() -> MarkedQuiver:
    return quiver_service.validate_quiver({"vertices": 1, "arrows": [[0, 0]], "marked": [0]})


@pytest.fixture
def ones():
    """Factory for all-ones dimension vectors."""
    return DimVector.ones


# ==================== Divisor Fixtures ====================

@pytest.fixture
def triangle_config():
    """Three lines crossing pairwise with nonzero Z_3 classes."""
    return divisor_service.triangle_config(3)


@pytest.fixture
def elliptic_config():
    """A single smooth elliptic ramification curve."""
    return divisor_service.sklyanin_config(2)


@pytest.fixture
def make_config():
    """
    Factory fixture building a validated configuration.

    Usage:
        config = make_config(4, [("p1", ("C1", 1), ("C2", 3))])
    """
    def _create(n: int, points: list, curves: list | None = None):
        curve_ids = curves
        if curve_ids is None:
            curve_ids = sorted({cid for _, *branches in points for cid, _ in branches})
        return divisor_service.validate_config({
            "n": n,
            "curves": [{"id": cid} for cid in curve_ids],
            "points": [
                {"id": pid, "branches": [list(br) for br in branches]}
                for pid, *branches in points
            ],
        })
    return _create


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a payload to a temporary JSON file and return its path."""
    def _write(payload: dict, name: str = "input.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)
    return _write


# ==================== Triple Fixtures ====================

@pytest.fixture
def make_triple():
    """Factory for local triples: make_triple(k, l, m, gamma)."""
    def _create(k: int, l: int, m: int, gamma):
        return surface_service.make_triple(surface_service.build_aklm(k, l, m), gamma)
    return _create
