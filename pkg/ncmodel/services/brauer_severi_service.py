"""
Brauer-Severi Service

Extended quiver settings with the theta character, stability of thin
representations by closed-subset scans, the Hesselink strata of the
nullcone over a smooth branch point and the resulting fiber report.
"""

import logging
from typing import Sequence

import numpy as np
import sympy

from ncmodel.core.config import settings
from ncmodel.core.exceptions import (
    BoundExceededError,
    DimensionVectorError,
    InvariantViolation,
    UnsupportedSettingError,
)
from ncmodel.models.brauer_severi import (
    ExtendedSetting,
    FiberComponent,
    FiberReport,
    HesselinkStratum,
    StabilityCensus,
    ThinRep,
)
from ncmodel.models.enums import PointType
from ncmodel.models.quiver import DimVector, MarkedQuiver
from ncmodel.models.surface import LocalTriple


logger = logging.getLogger(__name__)


# ============== Extended Settings ==============

def extend_setting(t: LocalTriple) -> ExtendedSetting:
    """
    Add a vertex v0 with d_i arrows v0 -> v_i and the character
    theta = (-n, d_1, ..., d_p).

    v0 is vertex 0 and base vertex i becomes i + 1. Base arrows keep their
    indices (and markings); the v0 arrows follow.
    """
    base = t.setting.quiver
    arrows = [(s + 1, e + 1) for s, e in base.arrows]
    for i, d in enumerate(t.gamma):
        arrows.extend([(0, i + 1)] * d)

    quiver = MarkedQuiver(base.vertex_count + 1, tuple(arrows), base.marked)
    alpha_tilde = DimVector.ones(quiver.vertex_count)
    theta = (-t.n,) + tuple(t.gamma)

    if sum(th * a for th, a in zip(theta, alpha_tilde)) != 0:
        raise InvariantViolation(f"theta {theta} does not annihilate alpha~")
    if quiver.arrow_count != base.arrow_count + t.n:
        raise InvariantViolation(f"Extended quiver has {quiver.arrow_count} arrows")
    return ExtendedSetting(base=t, quiver=quiver, alpha_tilde=alpha_tilde, theta=theta)


# ============== Thin Stability ==============

def _check_rep(q: MarkedQuiver, r: ThinRep) -> None:
    if len(r.scalars) != q.arrow_count:
        raise DimensionVectorError(
            f"Thin representation has {len(r.scalars)} scalars for {q.arrow_count} arrows"
        )


def _subset(mask: int, size: int) -> frozenset[int]:
    return frozenset(v for v in range(size) if mask >> v & 1)


def thin_closed_subsets(q: MarkedQuiver, r: ThinRep) -> list[frozenset[int]]:
    """
    Vertex sets closed under the arrows with nonzero scalar, in bitmask order.

    For a thin representation these are exactly the dimension supports of
    its subrepresentations.
    """
    _check_rep(q, r)
    live = [q.arrows[i] for i in sorted(r.support())]
    closed = []
    for mask in range(1 << q.vertex_count):
        if all(mask >> t & 1 for s, t in live if mask >> s & 1):
            closed.append(_subset(mask, q.vertex_count))
    return closed


def theta_weight(theta: Sequence[int], subset: frozenset[int]) -> int:
    return sum(theta[v] for v in subset)


def thin_is_semistable(q: MarkedQuiver, theta: Sequence[int], r: ThinRep, strict: bool = False) -> bool:
    """King's criterion: theta(S) >= 0 (or > 0) on every proper nonzero closed S."""
    full = frozenset(q.vertices)
    for subset in thin_closed_subsets(q, r):
        if not subset or subset == full:
            continue
        weight = theta_weight(theta, subset)
        if weight < 0 or (strict and weight == 0):
            return False
    return True


def closed_subsets(e: ExtendedSetting, r: ThinRep) -> list[frozenset[int]]:
    """Subrepresentation supports of a thin representation of the extended quiver."""
    return thin_closed_subsets(e.quiver, r)


def is_theta_semistable(e: ExtendedSetting, r: ThinRep) -> bool:
    return thin_is_semistable(e.quiver, e.theta, r)


def is_theta_stable(e: ExtendedSetting, r: ThinRep) -> bool:
    return thin_is_semistable(e.quiver, e.theta, r, strict=True)


def check_semistable_equals_stable(e: ExtendedSetting) -> bool:
    """
    True when no proper nonempty vertex set has theta(S) = 0, so no thin
    representation can be strictly semistable.

    Raises:
        BoundExceededError: more base vertices than the subset-scan bound.
    """
    p = e.vertex_count - 1
    if p > settings.SUBSET_SCAN_MAX_P:
        raise BoundExceededError(f"Subset scan needs p <= {settings.SUBSET_SCAN_MAX_P}, got {p}")
    size = e.vertex_count
    full = (1 << size) - 1
    return all(
        theta_weight(e.theta, _subset(mask, size)) != 0
        for mask in range(1, full)
    )


def moduli_dimension(e: ExtendedSetting) -> int:
    """
    Dimension of the theta-stable moduli space: arrows - vertices + 1.

    Raises:
        InvariantViolation: the all-ones representation is not stable, so the
            stable locus is not witnessed.
    """
    if not is_theta_stable(e, ThinRep.ones(e.quiver.arrow_count)):
        raise InvariantViolation(f"No stable point found for theta {e.theta}")
    return e.quiver.arrow_count - e.vertex_count + 1


# ============== Brauer Stability ==============

def generated_subset(e: ExtendedSetting, r: ThinRep) -> frozenset[int]:
    """Support of the subrepresentation generated by the vector at v0."""
    _check_rep(e.quiver, r)
    live = [e.quiver.arrows[i] for i in sorted(r.support())]
    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for s, t in live:
            if s == v and t not in reached:
                reached.add(t)
                frontier.append(t)
    return frozenset(reached)


def brauer_stable_check(e: ExtendedSetting, r: ThinRep) -> bool:
    """
    Brauer stability (the v0 vector generates the whole representation),
    certified equal to theta-stability.

    Raises:
        InvariantViolation: the two notions disagree.
    """
    brauer = generated_subset(e, r) == frozenset(e.quiver.vertices)
    stable = is_theta_stable(e, r)
    if brauer != stable:
        raise InvariantViolation(
            f"Brauer stability {brauer} differs from theta-stability {stable} for {r.scalars}"
        )
    return stable


def sample_stability(
    e: ExtendedSetting,
    samples: int | None = None,
    seed: int | None = None,
) -> StabilityCensus:
    """
    Classify random thin representations with small exact rational scalars.

    Numerators are drawn from -2..2 so that zero scalars, and with them
    unstable representations, occur regularly.
    """
    samples = settings.SAMPLER_SIZE if samples is None else samples
    seed = settings.SAMPLER_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    arrow_count = e.quiver.arrow_count

    stable = strictly_semistable = unstable = 0
    for _ in range(samples):
        numerators = rng.integers(-2, 3, size=arrow_count)
        denominators = rng.integers(1, 4, size=arrow_count)
        r = ThinRep(tuple(sympy.Rational(int(a), int(b)) for a, b in zip(numerators, denominators)))
        if is_theta_stable(e, r):
            stable += 1
        elif is_theta_semistable(e, r):
            strictly_semistable += 1
        else:
            unstable += 1

    logger.info(
        f"Sampled {samples} thin reps (seed {seed}): "
        f"{stable} stable, {strictly_semistable} strictly semistable, {unstable} unstable"
    )
    return StabilityCensus(
        samples=samples,
        seed=seed,
        stable=stable,
        strictly_semistable=strictly_semistable,
        unstable=unstable,
    )


# ============== Hesselink Strata ==============

def _cycle_vertex(i: int, k: int) -> int:
    """Vertex index 1..k+1 read cyclically."""
    return (i - 1) % (k + 1) + 1


def level_quiver(k: int, d: int) -> MarkedQuiver:
    """v0 with d arrows to v_1, then the path v_1 -> ... -> v_{k+1}."""
    arrows = [(0, 1)] * d + [(t, t + 1) for t in range(1, k + 1)]
    return MarkedQuiver(k + 2, tuple(arrows))


def hesselink_strata(k: int, gamma: Sequence[int]) -> list[HesselinkStratum]:
    """
    The k + 1 strata of the nullcone over a point of type A_{k01}.

    Stratum i is labelled by the saturated set of all weights pi_0j and all
    cycle weights except pi_{i-1,i}; the loop has weight zero and is never
    listed. Its level quiver is a path starting with d_i arrows out of v0,
    with character (-k-1, -k+1, ..., k+1).

    Raises:
        DimensionVectorError: gamma does not have k + 1 positive parts.
        InvariantViolation: a level quiver has no semistable point or the
            wrong moduli dimension.
    """
    gamma = tuple(int(d) for d in gamma)
    if k < 0 or len(gamma) != k + 1 or any(d < 1 for d in gamma):
        raise DimensionVectorError(f"gamma {gamma} must have {k + 1} positive parts")
    n = sum(gamma)

    v0_weights = [f"pi_0_{j}" for j in range(1, k + 2)]
    cycle_weights = [(a, _cycle_vertex(a + 1, k)) for a in range(1, k + 2)]
    theta_i = tuple(-k - 1 + 2 * t for t in range(k + 2))

    strata = []
    for i in range(1, k + 2):
        excluded = (_cycle_vertex(i - 1, k), i)
        saturated = tuple(v0_weights) + tuple(
            f"pi_{a}_{b}" for a, b in cycle_weights if (a, b) != excluded
        )
        d = gamma[i - 1]
        quiver = level_quiver(k, d)
        if not thin_is_semistable(quiver, theta_i, ThinRep.ones(quiver.arrow_count)):
            raise InvariantViolation(f"Level quiver of stratum {i} has no semistable point")
        level_dim = quiver.arrow_count - quiver.vertex_count + 1
        if level_dim != d - 1:
            raise InvariantViolation(f"Level moduli of stratum {i} has dimension {level_dim}, not {d - 1}")
        strata.append(HesselinkStratum(
            index=i,
            saturated_set=saturated,
            level_quiver=quiver,
            theta_i=theta_i,
            level_moduli_dim=level_dim,
            stratum_dim=n + k,
        ))

    logger.debug(f"{len(strata)} Hesselink strata for k={k}, gamma={gamma}")
    return strata


# ============== Fiber Report ==============

def fiber_report(t: LocalTriple) -> FiberReport:
    """
    Components of the Brauer-Severi fiber over a point.

    An Azumaya point carries P^{n-1}. Over a smooth branch point of type
    A_{k01} (or A_{0k1}) the fiber has one component per Hesselink stratum,
    each of dimension stratum_dim - (k + 1) = n - 1.

    Raises:
        UnsupportedSettingError: crossings and isolated points.
        InvariantViolation: a component of the wrong dimension.
    """
    k, l, m = t.setting.klm
    n = t.n
    if (k, l, m) == (0, 0, 1):
        return FiberReport(
            point_type=PointType.AZUMAYA,
            k=0,
            n=n,
            components=(FiberComponent(f"P^{n - 1}", n - 1),),
            flat=True,
        )
    if m != 1 or (k and l):
        raise UnsupportedSettingError(
            f"Fiber reports cover Azumaya and smooth branch points, not {t.setting.label}"
        )

    branch = k or l
    strata = hesselink_strata(branch, t.gamma)
    components = tuple(
        FiberComponent(f"stratum-{s.index}", s.stratum_dim - (branch + 1))
        for s in strata
    )
    flat = all(c.dim == n - 1 for c in components)
    if not flat:
        raise InvariantViolation(f"Fiber over {t.setting.label} is not equidimensional of dimension {n - 1}")

    logger.info(f"Fiber over {t.setting.label}, n={n}: {len(components)} components of dimension {n - 1}")
    return FiberReport(
        point_type=PointType.RAMIFIED,
        k=branch,
        n=n,
        components=components,
        flat=flat,
        strata=tuple(strata),
    )
