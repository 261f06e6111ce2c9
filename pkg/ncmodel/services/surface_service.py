"""
Surface Classification Service

The d = 2 classification of local data of smooth orders: the A_klm quiver
settings, admissible triples for a given index n, and the block pictures of
the completed stalk at a point (generic point of the family, a smooth point
of the ramification divisor, and a normal crossing).
"""

import itertools
import logging
from typing import Iterable

import networkx as nx
from sympy.utilities.iterables import ordered_partitions

from ncmodel.core.config import settings
from ncmodel.core.exceptions import (
    BoundExceededError,
    DimensionVectorError,
    InputError,
    InvariantViolation,
)
from ncmodel.models.enums import IdealLabel, RamificationType
from ncmodel.models.quiver import DimVector, MarkedQuiver
from ncmodel.models.surface import (
    AklmSetting,
    BlockStructure,
    LocalTriple,
    QuantumBlockStructure,
)
from ncmodel.services.quiver_service import quiver_to_graph
from ncmodel.services.rep_service import (
    classify_from_components,
    is_simple_dimvector,
    quotient_dimension,
    ramification_profile,
)


logger = logging.getLogger(__name__)


# ============== A_klm Settings ==============

def build_aklm(k: int, l: int, m: int) -> AklmSetting:
    """
    Construct the quiver setting A_klm with the all-ones dimension vector.

    Vertices 0..k-1 are the x-tail, k..k+l-1 the y-tail, k+l..k+l+m-1 the
    shared chain. Arrow order: x, y, x-tail chain, y-tail chain, shared chain.
    An empty tail sends its arrow straight to the head of the shared chain,
    which turns x or y into a loop when m = 1.

    Raises:
        InputError: k or l negative, m < 1.
    """
    if k < 0 or l < 0 or m < 1:
        raise InputError(f"A_klm needs k, l >= 0 and m >= 1, got ({k}, {l}, {m})")

    p = k + l + m
    head = k + l
    last = p - 1
    x_target = 0 if k else head
    y_target = k if l else head

    arrows = [(last, x_target), (last, y_target)]
    x_tail = list(range(k)) + [head] if k else []
    y_tail = list(range(k, k + l)) + [head] if l else []
    shared = list(range(head, p))
    for chain in (x_tail, y_tail, shared):
        arrows.extend(zip(chain, chain[1:]))

    setting = AklmSetting(
        k=k,
        l=l,
        m=m,
        quiver=MarkedQuiver(p, tuple(arrows)),
        alpha=DimVector.ones(p),
    )
    _check_aklm(setting)
    return setting


def _check_aklm(setting: AklmSetting) -> None:
    q = setting.quiver
    if q.arrow_count != setting.p + 1:
        raise InvariantViolation(f"{setting.label} has {q.arrow_count} arrows, expected {setting.p + 1}")
    if not is_simple_dimvector(q, setting.alpha):
        raise InvariantViolation(f"All-ones is not simple on {setting.label}")
    d = quotient_dimension(q, setting.alpha)
    if d != 2:
        raise InvariantViolation(f"{setting.label} has quotient dimension {d}, expected 2")


def aklm_settings(p: int) -> list[AklmSetting]:
    """All A_klm with k + l + m = p, in lexicographic (k, l, m) order."""
    return [
        build_aklm(k, l, p - k - l)
        for k in range(p)
        for l in range(p - k)
    ]


def aklm_invariant_cycles(s: AklmSetting) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    The two primitive oriented cycles through x and through y.

    Traces along them generate the invariant ring, giving the two coordinates
    of C[[x,y]]. Each cycle is listed from the source of its arrow.
    """
    graph = quiver_to_graph(s.quiver)
    cycles = []
    for arrow in (s.X_ARROW, s.Y_ARROW):
        source, target = s.quiver.arrows[arrow]
        path = nx.shortest_path(graph, target, source)
        cycles.append((source,) + tuple(path[:-1]))
    return cycles[0], cycles[1]


def aklm_match(q: MarkedQuiver, a: DimVector) -> tuple[int, int, int] | None:
    """
    Recognize an arbitrarily labelled A_klm setting.

    A_klm and A_lkm are isomorphic; the representative with k >= l is
    returned.

    Returns:
        (k, l, m), or None when (q, a) is not in the family.

    Raises:
        BoundExceededError: more vertices than the matching bound.
    """
    if q.vertex_count > settings.MATCH_MAX_VERTICES:
        raise BoundExceededError(
            f"aklm_match handles at most {settings.MATCH_MAX_VERTICES} vertices, got {q.vertex_count}"
        )
    if len(a) != q.vertex_count or any(e != 1 for e in a.entries):
        return None
    if q.marked or q.arrow_count != q.vertex_count + 1:
        return None

    graph = quiver_to_graph(q)
    for setting in sorted(aklm_settings(q.vertex_count), key=lambda s: (-s.k, s.l, s.m)):
        if setting.k < setting.l:
            continue
        if nx.is_isomorphic(graph, quiver_to_graph(setting.quiver)):
            return setting.klm
    return None


# ============== Local Triples ==============

def partitions_exact(n: int, p: int) -> list[tuple[int, ...]]:
    """Partitions of n into exactly p parts, each descending, listed descending."""
    if p < 1 or p > n:
        return []
    parts = [tuple(sorted(part, reverse=True)) for part in ordered_partitions(n, p)]
    return sorted(set(parts), reverse=True)


def make_triple(setting: AklmSetting, gamma: Iterable[int], n: int | None = None) -> LocalTriple:
    """
    Attach simple-component dimensions to a setting.

    gamma keeps the vertex order it is given in.

    Raises:
        DimensionVectorError: wrong length, nonpositive part or sum != n.
    """
    gamma = tuple(int(d) for d in gamma)
    if len(gamma) != setting.p:
        raise DimensionVectorError(f"gamma {gamma} must have {setting.p} parts for {setting.label}")
    if any(d < 1 for d in gamma):
        raise DimensionVectorError(f"gamma {gamma} has a nonpositive part")
    total = sum(gamma)
    if n is not None and n != total:
        raise DimensionVectorError(f"gamma {gamma} sums to {total}, not n = {n}")
    return LocalTriple(setting=setting, gamma=gamma, n=total)


def classify_triples(n: int) -> list[LocalTriple]:
    """
    Every admissible triple (A_klm, (1,...,1), gamma) of index n.

    Raises:
        BoundExceededError: n outside 1..CLASSIFY_MAX_N.
    """
    if not 1 <= n <= settings.CLASSIFY_MAX_N:
        raise BoundExceededError(f"classify_triples needs 1 <= n <= {settings.CLASSIFY_MAX_N}, got {n}")

    settings_by_klm = sorted(
        (s for p in range(1, n + 1) for s in aklm_settings(p)),
        key=lambda s: s.klm,
    )
    triples = [
        LocalTriple(setting=s, gamma=gamma, n=n)
        for s in settings_by_klm
        for gamma in partitions_exact(n, s.p)
    ]
    logger.info(f"Classified {len(triples)} local triples of index {n}")
    return triples


def count_triples(n: int) -> int:
    """sum over p of #(k,l,m with k+l+m=p) x #(partitions of n into p parts)."""
    return sum(p * (p + 1) // 2 * len(partitions_exact(n, p)) for p in range(1, n + 1))


# ============== Ideal Arithmetic ==============

Monomial = tuple[int, int]


def _divides(small: Monomial, big: Monomial) -> bool:
    return small[0] <= big[0] and small[1] <= big[1]


def ideal_product(a: IdealLabel, b: IdealLabel) -> frozenset[Monomial]:
    """Monomial generators of the product ideal a.b."""
    return frozenset(
        (g[0] + h[0], g[1] + h[1]) for g in a.generators for h in b.generators
    )


def ideal_contains(big: IdealLabel, generators: Iterable[Monomial]) -> bool:
    """Whether the monomial ideal spanned by generators lies in big."""
    return all(any(_divides(g, m) for g in big.generators) for m in generators)


def check_block_closure(bs: BlockStructure) -> tuple[int, int, int] | None:
    """
    First index triple (i, j, h) with label(i,j).label(j,h) not inside
    label(i,h), or None when the grid is multiplicatively closed.
    """
    for i, j, h in itertools.product(range(bs.p), repeat=3):
        product = ideal_product(bs.label(i, j), bs.label(j, h))
        if not ideal_contains(bs.label(i, h), product):
            return i, j, h
    return None


# ============== Block Pictures ==============

def _group(index: int, k: int, l: int) -> str:
    if index < k:
        return "K"
    if index < k + l:
        return "L"
    return "M"


# Off-diagonal group pairs; diagonal groups use upper ONE / lower below.
_MIXED = {
    ("K", "L"): IdealLabel.Y,
    ("K", "M"): IdealLabel.ONE,
    ("L", "K"): IdealLabel.X,
    ("L", "M"): IdealLabel.ONE,
    ("M", "K"): IdealLabel.X,
    ("M", "L"): IdealLabel.Y,
}
_LOWER = {"K": IdealLabel.X, "L": IdealLabel.Y, "M": IdealLabel.XY}


def etale_local_structure(t: LocalTriple) -> BlockStructure:
    """
    Block picture of the completed stalk for a local triple.

    Rows and columns are grouped K (x-tail), L (y-tail), M (shared chain).
    Inside a group the diagonal and above are (1) and below is (x), (y),
    (x,y) respectively; mixed groups follow the fixed table above.
    """
    k, l = t.setting.k, t.setting.l
    p = t.setting.p
    rows = []
    for i in range(p):
        row = []
        for j in range(p):
            gi, gj = _group(i, k, l), _group(j, k, l)
            if gi == gj:
                row.append(IdealLabel.ONE if i <= j else _LOWER[gi])
            else:
                row.append(_MIXED[gi, gj])
        rows.append(tuple(row))
    structure = BlockStructure(sizes=t.gamma, labels=tuple(rows))

    violation = check_block_closure(structure)
    if violation is not None:
        raise InvariantViolation(f"Block picture of {t.setting.label} not closed at {violation}")
    return structure


def artin_smooth_point_structure(a: int, b: int) -> BlockStructure:
    """
    Completed stalk at a smooth point of the ramification divisor, n = a.b:
    b x b blocks of size a, (1) on and above the diagonal, (x) below.

    Cross-checked against the triple (A_{b-1,0,1}, (1,...,1), (a,...,a)).
    """
    if a < 1 or b < 1:
        raise InputError(f"artin_smooth_point_structure needs a, b >= 1, got ({a}, {b})")
    labels = tuple(
        tuple(IdealLabel.ONE if i <= j else IdealLabel.X for j in range(b))
        for i in range(b)
    )
    structure = BlockStructure(sizes=(a,) * b, labels=labels)

    triple = make_triple(build_aklm(b - 1, 0, 1), (a,) * b)
    if etale_local_structure(triple) != structure:
        raise InvariantViolation(f"Smooth point picture ({a}, {b}) differs from A_{{{b - 1}01}}")
    return structure


def quantum_crossing_structure(a: int, b: int, c: int) -> QuantumBlockStructure:
    """
    Completed stalk at a normal crossing with branch classes of order b:
    an a x a grid of M_c(C_q[[u,v]]) blocks, u.C_q[[u,v]] strictly below
    the diagonal, q a primitive b-th root of unity, n = a.b.c.
    """
    if a < 1 or b < 1 or c < 1:
        raise InputError(f"quantum_crossing_structure needs a, b, c >= 1, got ({a}, {b}, {c})")
    labels = tuple(
        tuple(IdealLabel.ONE if i <= j else IdealLabel.U for j in range(a))
        for i in range(a)
    )
    return QuantumBlockStructure(a=a, b=b, c=c, labels=labels)


# ============== Ramification Type ==============

def ramification_type(k: int, l: int, m: int) -> RamificationType:
    """
    Local shape of the ramification locus at a point of type A_klm,
    cross-checked against the decomposition-derived components.
    """
    if (k, l, m) == (0, 0, 1):
        kind = RamificationType.AZUMAYA
    elif k == 0 and l == 0:
        kind = RamificationType.ISOLATED_POINT
    elif m == 1 and (k == 0 or l == 0):
        kind = RamificationType.SMOOTH_BRANCH_POINT
    else:
        kind = RamificationType.NORMAL_CROSSING

    setting = build_aklm(k, l, m)
    derived = classify_from_components(
        ramification_profile(setting.quiver, setting.alpha).component_dimensions
    )
    if derived != kind:
        raise InvariantViolation(
            f"{setting.label}: closed-form type {kind.value} but components give {derived.value}"
        )
    return kind
