"""
Divisor Service

Artin-Mumford bookkeeping on a surface: validation of ramification data
against the local sum-zero law, blow-ups of crossings, the smooth-model
decision and the local model of the order at a point.
"""

import logging
import math
import re
from collections import Counter
from dataclasses import replace
from typing import Any, Mapping

from pydantic import ValidationError

from ncmodel.core.config import settings
from ncmodel.core.exceptions import (
    BoundExceededError,
    DivisorConfigError,
    FactorizationError,
    InvariantViolation,
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
from ncmodel.models.surface import BlockStructure, QuantumBlockStructure
from ncmodel.schemas.divisor import DivisorConfigSchema
from ncmodel.services.surface_service import (
    artin_smooth_point_structure,
    quantum_crossing_structure,
)


logger = logging.getLogger(__name__)

_EXCEPTIONAL_ID = re.compile(r"^E(\d+)$")


# ============== Validation ==============

def validate_config(raw: Mapping[str, Any] | DivisorConfig) -> DivisorConfig:
    """
    Parse a divisor configuration and check the local laws.

    Branch classes are reduced mod n and every curve carrying a self-crossing
    is marked non-smooth.

    Raises:
        DivisorConfigError: malformed JSON shape, duplicate ids, a point
            without exactly two branches, a dangling curve id, a nonzero
            class on an unramified curve, branch classes not summing to
            0 mod n, or a ramified curve flagged singular without a node.
    """
    if isinstance(raw, DivisorConfig):
        raw = DivisorConfigSchema.from_domain(raw).model_dump()
    try:
        schema = DivisorConfigSchema.model_validate(raw)
    except ValidationError as e:
        raise DivisorConfigError(f"Malformed divisor configuration: {e.errors()[0]['msg']}") from e

    n = schema.n
    _reject_duplicates("curve", [cv.id for cv in schema.curves])
    _reject_duplicates("point", [p.id for p in schema.points])
    known = {cv.id: cv for cv in schema.curves}

    points = []
    nodal = set()
    for p in schema.points:
        if len(p.branches) != 2:
            raise DivisorConfigError(
                f"Point {p.id} has {len(p.branches)} branches; normal crossings required, resolve first"
            )
        branches = []
        for curve_id, cls in p.branches:
            if curve_id not in known:
                raise DivisorConfigError(f"Point {p.id} refers to unknown curve {curve_id}")
            cls %= n
            if cls and not known[curve_id].ramified:
                raise DivisorConfigError(
                    f"Point {p.id} gives unramified curve {curve_id} the class {cls}"
                )
            branches.append(Branch(curve_id, cls))
        total = (branches[0].cls + branches[1].cls) % n
        if total:
            raise DivisorConfigError(
                f"Branch classes at {p.id} sum to {total} mod {n}; not a Brauer class"
            )
        crossing = Crossing(p.id, (branches[0], branches[1]))
        if crossing.is_self_crossing:
            nodal.add(branches[0].curve)
        points.append(crossing)

    for cv in schema.curves:
        if cv.ramified and not cv.smooth and cv.id not in nodal:
            raise DivisorConfigError(
                f"Ramified curve {cv.id} is singular without a node; only normal crossings are modelled"
            )

    curves = tuple(
        Curve(cv.id, smooth=cv.smooth and cv.id not in nodal, ramified=cv.ramified)
        for cv in schema.curves
    )
    return DivisorConfig(n=n, curves=curves, points=tuple(points))


def _reject_duplicates(kind: str, ids: list[str]) -> None:
    repeated = sorted(i for i, count in Counter(ids).items() if count > 1)
    if repeated:
        raise DivisorConfigError(f"Duplicate {kind} ids: {', '.join(repeated)}")


def curve_sum_warnings(c: DivisorConfig) -> list[str]:
    """
    Global compatibility check: the classes a curve carries at its points
    should add up to 0 mod n. Reported, never enforced.
    """
    sums = {cv.id: 0 for cv in c.curves}
    for p in c.points:
        for br in p.branches:
            sums[br.curve] += br.cls
    return [
        f"Curve {curve_id}: branch classes sum to {total % c.n} mod {c.n}"
        for curve_id, total in sums.items()
        if total % c.n
    ]


def ramified_components_disjoint(c: DivisorConfig) -> bool:
    """Every ramified curve is smooth and no crossing joins two ramified branches."""
    ramified = {cv.id for cv in c.curves if cv.ramified}
    if any(not c.curve(cid).smooth for cid in ramified):
        return False
    return not any(
        all(br.curve in ramified for br in p.branches)
        for p in c.points
    )


# ============== Blow-ups ==============

def _next_exceptional_id(c: DivisorConfig) -> str:
    """First E<k> past every existing E<int> curve whose name and crossing names are free."""
    used = [int(m.group(1)) for cv in c.curves if (m := _EXCEPTIONAL_ID.match(cv.id))]
    curve_ids = {cv.id for cv in c.curves}
    point_ids = {p.id for p in c.points}
    k = max(used, default=0) + 1
    while f"E{k}" in curve_ids or {f"E{k}.1", f"E{k}.2"} & point_ids:
        k += 1
    return f"E{k}"


def _blow_up(c: DivisorConfig, point_id: str) -> tuple[DivisorConfig, BlowUpStep]:
    point = c.point(point_id)
    if point is None:
        raise DivisorConfigError(f"Unknown point {point_id}")

    n = c.n
    b = point.b % n
    first, second = point.branches[0].curve, point.branches[1].curve
    exceptional = _next_exceptional_id(c)

    if b:
        new_points = (
            Crossing(f"{exceptional}.1", (Branch(first, b), Branch(exceptional, -b % n))),
            Crossing(f"{exceptional}.2", (Branch(exceptional, b), Branch(second, -b % n))),
        )
    else:
        new_points = ()

    remaining = tuple(p for p in c.points if p.id != point_id) + new_points
    still_nodal = {p.branches[0].curve for p in remaining if p.is_self_crossing}
    curves = []
    for cv in c.curves:
        if point.is_self_crossing and cv.id == first and cv.id not in still_nodal:
            cv = replace(cv, smooth=True)
        curves.append(cv)
    curves.append(Curve(exceptional, smooth=True, ramified=bool(b)))

    blown_up = DivisorConfig(n=n, curves=tuple(curves), points=remaining)
    step = BlowUpStep(point=point_id, exceptional_curve=exceptional, b=b, new_points=new_points)
    logger.info(f"Blew up {point_id} (b={b}) into {exceptional}, {len(new_points)} new crossings")
    return validate_config(blown_up), step


def blow_up_crossing(c: DivisorConfig, point_id: str) -> DivisorConfig:
    """
    Blow up a crossing.

    The exceptional curve E is smooth and rational. For b != 0 it is
    ramified and meets the strict transforms in (C1:b, E:-b) and
    (E:b, C2:-b); for b = 0 the transforms separate and E is unramified.

    Raises:
        DivisorConfigError: unknown point.
    """
    blown_up, _ = _blow_up(c, point_id)
    return blown_up


def resolve_all(c: DivisorConfig, max_blowups: int | None = None) -> ResolutionTrace:
    """
    Blow up every crossing of class 0; crossings with b != 0 are left alone.

    Raises:
        BoundExceededError: more than max_blowups blow-ups required.
    """
    limit = settings.MAX_BLOWUPS if max_blowups is None else max_blowups
    steps = []
    current = c
    while True:
        pending = [p for p in current.points if p.b % current.n == 0]
        if not pending:
            break
        if len(steps) >= limit:
            raise BoundExceededError(f"Resolution needs more than {limit} blow-ups")
        current, step = _blow_up(current, pending[0].id)
        steps.append(step)
    return ResolutionTrace(steps=tuple(steps), final=current)


# ============== Smooth Model Decision ==============

def decide_smooth_model(c: DivisorConfig, max_blowups: int | None = None) -> SmoothModelVerdict:
    """
    Decide whether the ramification data admits a noncommutative smooth model.

    The answer is yes exactly when every crossing has class 0 mod n: those
    crossings separate after one blow-up each, leaving disjoint smooth
    ramified curves. A crossing with b != 0 reappears twice on every
    exceptional curve over it, so it is a permanent obstruction.

    Args:
        c: A validated configuration.
        max_blowups: Cap on the witness trace (settings.MAX_BLOWUPS by default).

    Returns:
        The verdict with a witness trace or the list of obstructed points,
        plus any per-curve global sum warnings.

    Raises:
        BoundExceededError: the witness trace exceeds max_blowups.
    """
    warnings = curve_sum_warnings(c)
    for message in warnings:
        logger.warning(message)

    obstructions = c.obstructed_points
    if obstructions:
        logger.info(f"No smooth model: {len(obstructions)} crossings with nonzero class")
        return SmoothModelVerdict(exists=False, obstructions=obstructions, warnings=tuple(warnings))

    trace = resolve_all(c, max_blowups)
    if not ramified_components_disjoint(trace.final):
        raise InvariantViolation("Resolution left intersecting or singular ramified curves")
    logger.info(f"Smooth model exists after {len(trace.steps)} blow-ups")
    return SmoothModelVerdict(exists=True, witness=trace, warnings=tuple(warnings))


# ============== Local Models ==============

def _azumaya(n: int) -> BlockStructure:
    return artin_smooth_point_structure(n, 1)


def local_model_at_point(
    c: DivisorConfig,
    locus: str | None = None,
    cover_degree: int | None = None,
    a: int | None = None,
) -> BlockStructure | QuantumBlockStructure:
    """
    Block picture of the order at a point of the surface.

    Args:
        c: The divisor configuration.
        locus: A crossing id, a curve id (a smooth point of that curve) or
            None for a point off the ramification locus.
        cover_degree: b, the degree of the cyclic cover along a curve, or the
            order of the crossing class; defaults to n / a on a curve (n when
            a is omitted) and to the class order at a crossing.
        a: Number of diagonal blocks at a crossing, so n = a.b.c (default 1).
            On a curve, n = a.b.

    Raises:
        DivisorConfigError: unknown locus.
        FactorizationError: n does not factor as requested.
    """
    n = c.n
    if locus is None:
        return _azumaya(n)

    point = c.point(locus)
    if point is not None:
        b = n // math.gcd(point.b % n, n)
        if cover_degree is not None and cover_degree != b:
            raise FactorizationError(f"Class {point.b} has order {b} in Z_{n}, not {cover_degree}")
        a = 1 if a is None else a
        if a < 1 or n % (a * b):
            raise FactorizationError(f"n = {n} is not divisible by a.b = {a}.{b}")
        return quantum_crossing_structure(a, b, n // (a * b))

    curve = c.curve(locus)
    if curve is None:
        raise DivisorConfigError(f"Unknown locus {locus}")
    if not curve.ramified:
        return _azumaya(n)
    if cover_degree is None and a is not None:
        if a < 1 or n % a:
            raise FactorizationError(f"a = {a} does not divide n = {n}")
        cover_degree = n // a
    b = n if cover_degree is None else cover_degree
    if b < 1 or n % b:
        raise FactorizationError(f"Cover degree {b} does not divide n = {n}")
    if a is not None and a * b != n:
        raise FactorizationError(f"n = {n} is not a.b = {a}.{b}")
    return artin_smooth_point_structure(n // b, b)


# ============== Presets ==============

def sklyanin_config(n: int = 2) -> DivisorConfig:
    """A single smooth elliptic ramification curve, no crossings."""
    return validate_config({"n": n, "curves": [{"id": "C1", "smooth": True}], "points": []})


def triangle_config(n: int = 3) -> DivisorConfig:
    """Three lines crossing pairwise with classes (1, -1) at every corner."""
    return validate_config({
        "n": n,
        "curves": [{"id": f"L{i}"} for i in (1, 2, 3)],
        "points": [
            {"id": "p12", "branches": [["L1", 1], ["L2", -1]]},
            {"id": "p23", "branches": [["L2", 1], ["L3", -1]]},
            {"id": "p31", "branches": [["L3", 1], ["L1", -1]]},
        ],
    })
