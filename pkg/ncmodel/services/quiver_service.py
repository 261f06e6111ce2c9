"""
Quiver Service

Validation of marked quivers, the Euler form and the connectivity tests the
rest of the library builds on.
"""

import logging
from collections import Counter
from typing import Any, Iterable, Mapping

import networkx as nx
import numpy as np

from ncmodel.core.exceptions import DimensionVectorError, QuiverError
from ncmodel.models.quiver import DimVector, EulerForm, MarkedQuiver


logger = logging.getLogger(__name__)


# ============== Construction ==============

def validate_quiver(raw: Mapping[str, Any] | MarkedQuiver) -> MarkedQuiver:
    """
    Build a MarkedQuiver from its JSON description and check its invariants.

    Args:
        raw: {"vertices": int, "arrows": [[from, to], ...], "marked": [idx, ...]}
            or an already constructed quiver.

    Returns:
        The validated quiver.

    Raises:
        QuiverError: out-of-range vertex, mark on a non-loop, mark out of range.
    """
    if isinstance(raw, MarkedQuiver):
        vertex_count, arrows, marked = raw.vertex_count, list(raw.arrows), list(raw.marked)
    else:
        try:
            vertex_count = int(raw["vertices"])
            arrows = [(int(s), int(t)) for s, t in raw.get("arrows", [])]
            marked = [int(i) for i in raw.get("marked", [])]
        except (KeyError, TypeError, ValueError) as e:
            raise QuiverError(f"Malformed quiver description: {e}") from e

    if vertex_count < 1:
        raise QuiverError(f"A quiver needs at least one vertex, got {vertex_count}")

    for index, (s, t) in enumerate(arrows):
        if not (0 <= s < vertex_count and 0 <= t < vertex_count):
            raise QuiverError(
                f"Arrow {index} = ({s}, {t}) leaves the vertex range [0, {vertex_count})"
            )

    for index in marked:
        if not 0 <= index < len(arrows):
            raise QuiverError(f"Marked arrow index {index} out of range")
        s, t = arrows[index]
        if s != t:
            raise QuiverError(f"Marked arrow {index} = ({s}, {t}) is not a loop")

    return MarkedQuiver(vertex_count, tuple(arrows), frozenset(marked))


def quiver_to_json(q: MarkedQuiver) -> dict:
    """Deterministic JSON form with arrows in input order."""
    return {
        "vertices": q.vertex_count,
        "arrows": [[s, t] for s, t in q.arrows],
        "marked": sorted(q.marked),
    }


def quiver_to_graph(q: MarkedQuiver) -> nx.MultiDiGraph:
    """networkx view of a quiver; the arrow index is the edge key."""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(q.vertices)
    for index, (s, t) in enumerate(q.arrows):
        graph.add_edge(s, t, key=index)
    return graph


def support_subquiver(q: MarkedQuiver, support: Iterable[int]) -> tuple[MarkedQuiver, list[int]]:
    """
    Induced subquiver on a vertex set, relabelled 0..len(support)-1.

    Returns:
        (subquiver, old vertex index of each new vertex).
    """
    old = sorted(set(support))
    new_index = {v: i for i, v in enumerate(old)}
    arrows = []
    marked = []
    for index, (s, t) in enumerate(q.arrows):
        if s in new_index and t in new_index:
            if index in q.marked:
                marked.append(len(arrows))
            arrows.append((new_index[s], new_index[t]))
    return MarkedQuiver(len(old), tuple(arrows), frozenset(marked)), old


# ============== Euler Form ==============

def euler_matrix(q: MarkedQuiver) -> EulerForm:
    """chi_ij = delta_ij - #(arrows i -> j); markings are ignored."""
    chi = np.eye(q.vertex_count, dtype=np.int64)
    for s, t in q.arrows:
        chi[s, t] -= 1
    return EulerForm(tuple(tuple(int(v) for v in row) for row in chi))


def euler_pairing(f: EulerForm, a: DimVector, b: DimVector) -> int:
    """chi(a, b) = sum_ij a_i chi_ij b_j."""
    if len(a) != f.size or len(b) != f.size:
        raise DimensionVectorError(
            f"Vector lengths {len(a)}, {len(b)} do not match the {f.size}-vertex Euler form"
        )
    return int(a.as_array() @ f.as_array() @ b.as_array())


# ============== Connectivity ==============

def is_strongly_connected(q: MarkedQuiver, support: Iterable[int]) -> bool:
    """
    Strong connectivity of the arrow-induced subquiver on a vertex set.

    A single vertex counts as strongly connected with or without loops.

    Raises:
        QuiverError: empty support or vertex outside the quiver.
    """
    vertices = set(support)
    if not vertices:
        raise QuiverError("Strong connectivity is undefined on an empty support")
    if not vertices <= set(q.vertices):
        raise QuiverError(f"Support {sorted(vertices)} leaves the quiver")
    if len(vertices) == 1:
        return True
    return nx.is_strongly_connected(quiver_to_graph(q).subgraph(vertices))


def is_oriented_cycle(q: MarkedQuiver, support: Iterable[int]) -> bool:
    """True when the support carries an oriented cycle and nothing else."""
    sub, _ = support_subquiver(q, support)
    out_degree = Counter(s for s, _ in sub.arrows)
    in_degree = Counter(t for _, t in sub.arrows)
    if any(out_degree[v] != 1 or in_degree[v] != 1 for v in sub.vertices):
        return False
    return is_strongly_connected(sub, sub.vertices)


def check_vector(q: MarkedQuiver, a: DimVector) -> None:
    """Raise unless a is indexed by the vertices of q."""
    if len(a) != q.vertex_count:
        raise DimensionVectorError(
            f"Dimension vector {a.entries} has length {len(a)}, quiver has {q.vertex_count} vertices"
        )
