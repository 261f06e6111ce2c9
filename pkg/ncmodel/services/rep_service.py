"""
Representation Theory Service

Simplicity of dimension vectors, dimensions of quotient varieties and the
decompositions of a dimension vector into simples that index the
components of the ramification locus.
"""

import itertools
import logging
from functools import lru_cache

from ncmodel.core.config import settings
from ncmodel.core.exceptions import BoundExceededError, DimensionVectorError
from ncmodel.models.decomposition import (
    RamificationComponent,
    RamificationProfile,
    SimpleDecomposition,
)
from ncmodel.models.enums import RamificationType
from ncmodel.models.quiver import DimVector, MarkedQuiver
from ncmodel.services.quiver_service import (
    check_vector,
    euler_matrix,
    euler_pairing,
    is_oriented_cycle,
    is_strongly_connected,
    support_subquiver,
)


logger = logging.getLogger(__name__)


# ============== Simplicity ==============

def marked_loop_count(q: MarkedQuiver, support: frozenset[int] | None = None) -> int:
    """Number of marked loops, optionally only those at vertices of a support."""
    vertices = q.vertices if support is None else support
    return sum(1 for v in vertices for i in q.loops_at(v) if i in q.marked)


def is_simple_dimvector(
    q: MarkedQuiver,
    a: DimVector,
    respect_markings: bool = False,
) -> bool:
    """
    Decide whether a is the dimension vector of a simple representation.

    Evaluated on the support subquiver:
    1. a single vertex with a = epsilon there is always simple;
    2. an oriented cycle is simple only for a = (1,...,1);
    3. otherwise the support must be strongly connected with
       chi(a, e_i) <= 0 and chi(e_i, a) <= 0 for every support vertex i.

    Args:
        q: The quiver.
        a: Nonzero dimension vector.
        respect_markings: Drop marked loops before applying the criterion.

    Raises:
        DimensionVectorError: a is zero or of the wrong length.
    """
    check_vector(q, a)
    if a.is_zero:
        raise DimensionVectorError("The zero vector is not a simplicity candidate")
    return _is_simple(q.unmarked() if not respect_markings else _drop_marked(q), a)


def _drop_marked(q: MarkedQuiver) -> MarkedQuiver:
    arrows = tuple(a for i, a in enumerate(q.arrows) if i not in q.marked)
    return MarkedQuiver(q.vertex_count, arrows)


@lru_cache(maxsize=65536)
def _is_simple(q: MarkedQuiver, a: DimVector) -> bool:
    # Only arrows inside the support enter the criterion.
    sub, old = support_subquiver(q, a.support)
    b = DimVector(tuple(a[v] for v in old))
    if sub.vertex_count == 1 and b[0] == 1:
        return True
    if is_oriented_cycle(sub, sub.vertices):
        return all(e == 1 for e in b)

    chi = euler_matrix(sub)
    for i in sub.vertices:
        unit = DimVector.unit(sub.vertex_count, i)
        if euler_pairing(chi, b, unit) > 0 or euler_pairing(chi, unit, b) > 0:
            return False
    return is_strongly_connected(sub, sub.vertices)


def quotient_dimension(q: MarkedQuiver, a: DimVector) -> int:
    """
    d(a) = 1 - chi(a, a) - #(marked loops at the support of a).

    Raises:
        DimensionVectorError: a is not simple; the formula holds only there.
    """
    if not is_simple_dimvector(q, a):
        raise DimensionVectorError(f"{a.entries} is not a simple dimension vector")
    return 1 - euler_pairing(euler_matrix(q), a, a) - marked_loop_count(q, a.support)


# ============== Enumeration ==============

def _check_bound(a: DimVector, bound: int | None) -> int:
    limit = settings.ENUM_ENTRY_BOUND if bound is None else bound
    if any(e > limit for e in a.entries):
        raise BoundExceededError(
            f"Entries of {a.entries} exceed the enumeration bound {limit}"
        )
    return limit


def enumerate_simple_subvectors(
    q: MarkedQuiver,
    a: DimVector,
    bound: int | None = None,
) -> list[DimVector]:
    """
    All nonzero simple b <= a componentwise.

    Ordered colexicographically (the last vertex is the most significant),
    which lists (1,0), (0,1), (1,1) for a = (1,1).

    Raises:
        BoundExceededError: an entry of a exceeds the desk-scale bound.
    """
    check_vector(q, a)
    _check_bound(a, bound)
    candidates = (
        DimVector(entries)
        for entries in itertools.product(*(range(e + 1) for e in a.entries))
    )
    simples = [b for b in candidates if not b.is_zero and _is_simple(q.unmarked(), b)]
    simples.sort(key=lambda b: b.colex_key)
    logger.debug(f"{len(simples)} simple subvectors below {a.entries}")
    return simples


def enumerate_decompositions(
    q: MarkedQuiver,
    a: DimVector,
    bound: int | None = None,
) -> list[SimpleDecomposition]:
    """
    Every way of writing a = m_1 beta_1 + ... + m_l beta_l with distinct simple
    beta_j.

    Simples are consumed largest first with multiplicities tried in descending
    order, so the trivial decomposition {(1, a)} (when a is simple) comes first
    and no multiset is produced twice. Parts inside a decomposition are listed
    in ascending colexicographic order of beta.
    """
    simples = enumerate_simple_subvectors(q, a, bound)
    ordered = list(reversed(simples))
    n = len(a)

    # Union of the supports still reachable from position i, for pruning.
    reach = [frozenset()] * (len(ordered) + 1)
    for i in range(len(ordered) - 1, -1, -1):
        reach[i] = reach[i + 1] | ordered[i].support

    @lru_cache(maxsize=None)
    def solve(remainder: tuple[int, ...], start: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        rest = DimVector(remainder)
        if rest.is_zero:
            return ((),)
        if start == len(ordered) or not rest.support <= reach[start]:
            return ()
        beta = ordered[start]
        ratios = [rest[i] // beta[i] for i in beta.support]
        found = []
        for m in range(min(ratios), -1, -1):
            left = rest - beta.scale(m)
            for tail in solve(left.entries, start + 1):
                found.append(((m, start),) + tail if m else tail)
        return tuple(found)

    decompositions = []
    for combo in solve(a.entries, 0):
        parts = sorted(
            ((m, ordered[idx]) for m, idx in combo),
            key=lambda part: part[1].colex_key,
        )
        decompositions.append(SimpleDecomposition(tuple(parts)))

    logger.debug(f"{len(decompositions)} decompositions of {a.entries} over {n} vertices")
    return decompositions


# ============== Ramification ==============

def ramification_profile(q: MarkedQuiver, a: DimVector, bound: int | None = None) -> RamificationProfile:
    """
    The Azumaya stratum d(a) together with every nontrivial decomposition
    and its component dimension d(beta_1) + ... + d(beta_l).

    Raises:
        DimensionVectorError: a is not simple.
    """
    azumaya = quotient_dimension(q, a)
    components = []
    for decomposition in enumerate_decompositions(q, a, bound):
        if decomposition.is_trivial:
            continue
        dimension = sum(quotient_dimension(q, beta) for _, beta in decomposition.parts)
        components.append(RamificationComponent(decomposition, dimension))
    return RamificationProfile(azumaya, tuple(components))


def ramification_components(
    q: MarkedQuiver,
    a: DimVector,
    bound: int | None = None,
) -> list[tuple[SimpleDecomposition, int]]:
    """Nontrivial (decomposition, dimension) pairs of a simple vector a."""
    profile = ramification_profile(q, a, bound)
    return [(c.decomposition, c.dimension) for c in profile.components]


def classify_from_components(dimensions: frozenset[int] | set[int]) -> RamificationType:
    """
    Read the local shape of the ramification locus off the set of nontrivial
    component dimensions of a surface setting.
    """
    dims = frozenset(dimensions)
    if not dims:
        return RamificationType.AZUMAYA
    if dims == {0}:
        return RamificationType.ISOLATED_POINT
    if dims == {1}:
        return RamificationType.SMOOTH_BRANCH_POINT
    return RamificationType.NORMAL_CROSSING
