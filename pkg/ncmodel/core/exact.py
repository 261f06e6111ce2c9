"""
Exact Scalars

Thin helpers over sympy for the two scalar fields the library computes in:
the rationals (thin representations, quadratic forms) and the Gaussian
rationals Q(i) (the quantum-plane stabilizer). Equality is always decided
after full expansion, never numerically.
"""

from typing import Sequence, Union

import sympy
from sympy import Matrix, Rational

ScalarLike = Union[int, str, Rational, sympy.Expr]

# Elements of Q(i) are sympy expressions re + im*I with rational parts.
GaussRational = sympy.Expr


def rational(value: ScalarLike) -> Rational:
    """Parse an int, a "p/q" string or a sympy number into an exact rational."""
    try:
        return Rational(value)
    except (TypeError, ValueError) as e:
        raise ValueError(f"{value!r} is not an exact rational") from e


def is_gauss_rational(value: GaussRational) -> bool:
    """True when value expands to p + q*i with p, q rational."""
    re, im = sympy.expand(value).as_real_imag()
    return bool(re.is_Rational and im.is_Rational)


def is_zero(value: sympy.Expr) -> bool:
    """Exact zero test for expressions over Q(i)."""
    return sympy.expand(value) == 0


def expand_matrix(m: Matrix) -> Matrix:
    """Expand every entry so products of Gaussian rationals normalize."""
    return m.applyfunc(sympy.expand)


def mat2(rows: Sequence[Sequence[ScalarLike]]) -> Matrix:
    """A 2x2 matrix over Q(i) from nested rows of entries."""
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("expected a 2x2 matrix")
    return expand_matrix(Matrix([[sympy.sympify(v) for v in r] for r in rows]))


def matrix_is_zero(m: Matrix) -> bool:
    return all(is_zero(v) for v in m)


def exact_rank(m: Matrix) -> int:
    return expand_matrix(m).rank(iszerofunc=is_zero)


def exact_nullspace(m: Matrix) -> list[Matrix]:
    """Nullspace basis with expanded entries."""
    return [expand_matrix(v) for v in expand_matrix(m).nullspace(iszerofunc=is_zero)]


def to_json_scalar(value: sympy.Expr) -> str:
    """Stable string form of an exact scalar for JSON payloads."""
    return str(sympy.expand(value))
