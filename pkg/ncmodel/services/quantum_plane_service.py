"""
Quantum Plane Service

Exact checks on the quantum plane C<x,y>/(xy + yx): its trace map, the
trep_2 hypersurface with its isolated singularity, smoothness of the strict
transform of the blow-up, and the finite disconnected stabilizer that rules
out a trep_2 chart.
"""

import logging
from typing import Sequence

import sympy
from sympy import I, Matrix, Rational, symbols

from ncmodel.core.exact import (
    exact_nullspace,
    exact_rank,
    expand_matrix,
    is_gauss_rational,
    is_zero,
    mat2,
    matrix_is_zero,
    rational,
    to_json_scalar,
)
from ncmodel.core.exceptions import InputError, InvariantViolation
from ncmodel.models.quantum_plane import (
    INFINITE,
    QuadraticForm6,
    QuantumPlaneReport,
    SingularityReport,
    StabilizerResult,
)


logger = logging.getLogger(__name__)

X_SYMBOLS = symbols("x1:7")
U, V = symbols("u v")

Monomial = tuple[int, int]


# ============== Quantum Plane Algebra ==============

def quantum_plane_multiply(left: Monomial, right: Monomial) -> tuple[int, Monomial]:
    """x^a y^b . x^c y^d = (-1)^(bc) x^(a+c) y^(b+d)."""
    (a, b), (c, d) = left, right
    sign = -1 if (b * c) % 2 else 1
    return sign, (a + c, b + d)


def is_central_monomial(i: int, j: int) -> bool:
    """x^i y^j is central exactly when both exponents are even."""
    return i % 2 == 0 and j % 2 == 0


def quantum_plane_basis() -> list[Monomial]:
    """Basis 1, x, y, xy of the quantum plane over its center C[u, v]."""
    return [(0, 0), (1, 0), (0, 1), (1, 1)]


def quantum_plane_trace(i: int, j: int) -> sympy.Expr:
    """
    Reduced trace of x^i y^j over the center, with u = x^2 and v = y^2.

    Zero if either exponent is odd, otherwise 2 u^(i/2) v^(j/2).
    """
    if i < 0 or j < 0:
        raise InputError(f"Exponents must be nonnegative, got ({i}, {j})")
    if i % 2 or j % 2:
        return sympy.Integer(0)
    return 2 * U ** (i // 2) * V ** (j // 2)


# ============== The trep_2 Hypersurface ==============

def trace_form_polynomial() -> sympy.Expr:
    """
    tr(X.Y) for the traceless pair X = [[x1, x2], [x3, -x1]],
    Y = [[x4, x5], [x6, -x4]]; its vanishing cuts out trep_2.
    """
    x1, x2, x3, x4, x5, x6 = X_SYMBOLS
    first = Matrix([[x1, x2], [x3, -x1]])
    second = Matrix([[x4, x5], [x6, -x4]])
    return sympy.expand((first * second).trace())


def quadric_matrix(expr: sympy.Expr, variables: Sequence[sympy.Symbol] = X_SYMBOLS) -> QuadraticForm6:
    """Symmetric matrix M with expr = v^T M v, read off the Hessian."""
    matrix = sympy.hessian(sympy.expand(expr), list(variables)) / 2
    if matrix != matrix.T:
        raise InvariantViolation("Hessian of a quadratic form is not symmetric")
    return QuadraticForm6(matrix)


def trep2_form() -> QuadraticForm6:
    """The form 2 x1 x4 + x2 x6 + x3 x5."""
    return quadric_matrix(trace_form_polynomial())


def evaluate_form(form: QuadraticForm6, point: Sequence) -> Rational:
    vector = Matrix([rational(v) for v in point])
    return (vector.T * form.matrix * vector)[0, 0]


def singularity_report(form: QuadraticForm6 | None = None) -> SingularityReport:
    """
    Singular locus of the affine quadric cone V(form) in C^6.

    The gradient of a quadratic form is 2 M v, so the singular locus is the
    kernel of M; full rank leaves only the origin.
    """
    form = trep2_form() if form is None else form
    rank = exact_rank(form.matrix)
    kernel = form.matrix.shape[0] - rank
    isolated = kernel == 0
    locus = "origin" if isolated else f"linear subspace of dimension {kernel}"
    return SingularityReport(
        dimension=form.matrix.shape[0] - 1,
        rank=rank,
        kernel_dimension=kernel,
        isolated_singularity=isolated,
        singular_locus=locus,
    )


def strict_transform_smooth(form: QuadraticForm6 | None = None) -> bool:
    """
    Smoothness of the strict transform after blowing up the origin.

    The strict transform is a line bundle over the projective quadric
    V(form) in P^5, so it is smooth iff the quadric is nondegenerate.
    """
    form = trep2_form() if form is None else form
    return exact_rank(form.matrix) == form.matrix.shape[0]


# ============== Stabilizer ==============

def reference_point(a=1) -> tuple[Matrix, Matrix]:
    """The point (diag(i, -i), [[0, a], [-a, 0]]) of trep_2, a nonzero rational."""
    a = rational(a)
    if a == 0:
        raise InputError("The parameter a must be nonzero")
    return mat2([[I, 0], [0, -I]]), mat2([[0, a], [-a, 0]])


def _multiplier_candidates(m3: Matrix, m4: Matrix) -> list[int] | None:
    """
    Scalars lambda with g m g^-1 = lambda m possible for both matrices.

    A nonzero trace forces lambda = 1; a nonzero degree-two invariant forces
    lambda^2 = 1. None means every invariant vanishes.
    """
    if not (is_zero(m3.trace()) and is_zero(m4.trace())):
        return [1]
    quadratic = [m3.det(), m4.det(), (m3 * m4).trace(), (m3 * m3).trace(), (m4 * m4).trace()]
    if any(not is_zero(v) for v in quadratic):
        return [1, -1]
    return None


def _twisted_commutant(m3: Matrix, m4: Matrix, multiplier: int) -> list[Matrix]:
    """Basis of {g : g m = lambda m g for m in (m3, m4)} as 2x2 matrices."""
    g_symbols = symbols("g0:4")
    g = Matrix(2, 2, g_symbols)
    equations = [
        sympy.expand(entry)
        for m in (m3, m4)
        for entry in (g * m - multiplier * m * g)
    ]
    system, _ = sympy.linear_eq_to_matrix(equations, g_symbols)
    return [Matrix(2, 2, list(v)) for v in exact_nullspace(system)]


def _normalize(g: Matrix) -> Matrix:
    """Scale so that the first nonzero entry (row-major) is 1."""
    pivot = next(v for v in g if not is_zero(v))
    return expand_matrix(g / pivot)


def projective_stabilizer(m3: Matrix, m4: Matrix) -> StabilizerResult:
    """
    Stabilizer in PGL_2 of the point (m3, m4) of projective trep_2.

    Classes g with g m g^-1 = lambda m for one common lambda. The lambda = 1
    part is the commutant; more than the scalars there makes the group
    infinite. For lambda = -1 an invertible solution adds an element of
    order two.

    Raises:
        InputError: both matrices are zero.
        InvariantViolation: the lambda = -1 part has unexpected size.
    """
    m3, m4 = expand_matrix(Matrix(m3)), expand_matrix(Matrix(m4))
    if matrix_is_zero(m3) and matrix_is_zero(m4):
        raise InputError("The zero pair has no projective class")

    candidates = _multiplier_candidates(m3, m4)
    if candidates is None:
        logger.debug("All invariants vanish; a torus rescales both matrices")
        return StabilizerResult(order=INFINITE)

    commutant = _twisted_commutant(m3, m4, 1)
    if len(commutant) >= 2:
        return StabilizerResult(order=INFINITE)

    generators = []
    multipliers = []
    if -1 in candidates:
        twisted = _twisted_commutant(m3, m4, -1)
        if len(twisted) == 1 and not is_zero(twisted[0].det()):
            generators.append(_normalize(twisted[0]))
            multipliers.append(-1)
        elif len(twisted) >= 2:
            coefficients = symbols(f"c0:{len(twisted)}")
            generic = sum((c * w for c, w in zip(coefficients, twisted)), Matrix.zeros(2, 2))
            if not is_zero(generic.det()):
                raise InvariantViolation("Anti-commutant with invertible elements beyond a line")

    order = 1 + len(generators)
    logger.info(f"Projective stabilizer of order {order}")
    return StabilizerResult(order=order, generators=tuple(generators), multipliers=tuple(multipliers))


def verify_stabilizer_certificate(m3: Matrix, m4: Matrix, result: StabilizerResult) -> bool:
    """Check g m g^-1 = lambda m exactly for every returned generator."""
    for g, multiplier in zip(result.generators, result.multipliers):
        if not all(is_gauss_rational(v) for v in g):
            return False
        det = g.det()
        if is_zero(det):
            return False
        for m in (m3, m4):
            if not matrix_is_zero(g * m * g.adjugate() - multiplier * det * m):
                return False
    return True


def obstruction_verdict(result: StabilizerResult) -> bool:
    """A finite nontrivial stabilizer is disconnected, which no trep_2 chart allows."""
    return not result.is_infinite and result.order > 1


# ============== Report ==============

def quantum_plane_report(a=1) -> QuantumPlaneReport:
    """Everything `qplane verify` prints, for the point with parameter a."""
    form = trep2_form()
    singularity = singularity_report(form)
    m3, m4 = reference_point(a)
    stabilizer = projective_stabilizer(m3, m4)
    if not verify_stabilizer_certificate(m3, m4, stabilizer):
        raise InvariantViolation("Stabilizer generator fails its certificate")

    generator = None
    if stabilizer.generators:
        g = stabilizer.generators[0]
        generator = tuple(
            tuple(to_json_scalar(g[r, c]) for c in range(2))
            for r in range(2)
        )
    return QuantumPlaneReport(
        dim=singularity.dimension,
        rank=singularity.rank,
        isolated_singularity=singularity.isolated_singularity,
        strict_transform_smooth=strict_transform_smooth(form),
        stabilizer_order=stabilizer.order,
        stabilizer_generator=generator,
        obstructed=obstruction_verdict(stabilizer),
    )
