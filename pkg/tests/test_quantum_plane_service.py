"""
Quantum Plane Service Unit Tests

Tests for the quantum plane algebra, the trep_2 quadric and the stabilizer
obstruction.
"""

import pytest
import sympy
from sympy import I, Matrix, Rational

from ncmodel.core.exact import mat2
from ncmodel.core.exceptions import InputError
from ncmodel.models.quantum_plane import INFINITE, StabilizerResult
from ncmodel.services import quantum_plane_service
from ncmodel.services.quantum_plane_service import U, V, X_SYMBOLS


class TestAlgebra:
    """Tests for multiplication, centrality and the trace."""

    def test_anticommutation(self):
        """Verify yx = -xy."""
        assert quantum_plane_service.quantum_plane_multiply((1, 0), (0, 1)) == (1, (1, 1))
        assert quantum_plane_service.quantum_plane_multiply((0, 1), (1, 0)) == (-1, (1, 1))

    @pytest.mark.parametrize("i", range(0, 7))
    @pytest.mark.parametrize("j", range(0, 7))
    def test_central_iff_commutes_with_generators(self, i, j):
        """Verify centrality agrees with commuting past x and y."""
        multiply = quantum_plane_service.quantum_plane_multiply
        commutes = all(
            multiply((i, j), g) == multiply(g, (i, j))
            for g in ((1, 0), (0, 1))
        )

        assert quantum_plane_service.is_central_monomial(i, j) == commutes

    @pytest.mark.parametrize("i", range(0, 7))
    @pytest.mark.parametrize("j", range(0, 7))
    def test_trace_table(self, i, j):
        """Verify tr(x^i y^j) is 2 u^(i/2) v^(j/2) for even exponents and 0 otherwise."""
        trace = quantum_plane_service.quantum_plane_trace(i, j)

        if i % 2 == 0 and j % 2 == 0:
            assert sympy.expand(trace - 2 * U ** (i // 2) * V ** (j // 2)) == 0
        else:
            assert trace == 0

    def test_trace_of_one(self):
        """Verify the reduced trace of 1 is the degree 2."""
        assert quantum_plane_service.quantum_plane_trace(0, 0) == 2

    def test_negative_exponent(self):
        """Verify exponents must be nonnegative."""
        with pytest.raises(InputError):
            quantum_plane_service.quantum_plane_trace(-1, 0)

    def test_basis(self):
        """Verify the basis 1, x, y, xy over the center."""
        assert quantum_plane_service.quantum_plane_basis() == [(0, 0), (1, 0), (0, 1), (1, 1)]


class TestQuadric:
    """Tests for the trep_2 hypersurface."""

    def test_polynomial(self):
        """Verify tr(XY) = 2 x1 x4 + x2 x6 + x3 x5."""
        x1, x2, x3, x4, x5, x6 = X_SYMBOLS

        expected = 2 * x1 * x4 + x2 * x6 + x3 * x5
        assert sympy.expand(quantum_plane_service.trace_form_polynomial() - expected) == 0

    def test_matrix(self):
        """Verify the form matrix has rank 6 and determinant -1/16."""
        form = quantum_plane_service.trep2_form()

        assert form.matrix.det() == Rational(-1, 16)
        assert form.matrix[0, 3] == 1
        assert form.matrix[1, 5] == Rational(1, 2)
        assert form.matrix == form.matrix.T

    def test_evaluate(self):
        """Verify the form at (1, 0, 0, 1, 0, 0)."""
        form = quantum_plane_service.trep2_form()

        assert quantum_plane_service.evaluate_form(form, (1, 0, 0, 1, 0, 0)) == 2
        assert quantum_plane_service.evaluate_form(form, (0, 1, 0, 0, 0, "1/3")) == Rational(1, 3)

    def test_isolated_singularity(self):
        """Verify the cone is a 5-fold singular only at the origin."""
        report = quantum_plane_service.singularity_report()

        assert report.dimension == 5
        assert report.rank == 6
        assert report.isolated_singularity
        assert report.singular_locus == "origin"

    def test_degenerate_form(self):
        """Verify a rank-2 form has a 4-dimensional singular locus."""
        x1, x2 = X_SYMBOLS[:2]
        form = quantum_plane_service.quadric_matrix(x1 * x2)

        report = quantum_plane_service.singularity_report(form)

        assert report.rank == 2
        assert report.singular_locus == "linear subspace of dimension 4"
        assert not quantum_plane_service.strict_transform_smooth(form)

    def test_strict_transform_smooth(self):
        """Verify the blow-up of the origin has smooth strict transform."""
        assert quantum_plane_service.strict_transform_smooth()

    def test_control_forms(self):
        """Verify X1 X4 is degenerate while 2 X1 X4 + X2 X5 + X3 X6 is not."""
        x1, x2, x3, x4, x5, x6 = X_SYMBOLS

        degenerate = quantum_plane_service.quadric_matrix(x1 * x4)
        swapped = quantum_plane_service.quadric_matrix(2 * x1 * x4 + x2 * x5 + x3 * x6)

        assert not quantum_plane_service.strict_transform_smooth(degenerate)
        assert quantum_plane_service.strict_transform_smooth(swapped)
        assert quantum_plane_service.singularity_report(swapped).kernel_dimension == 0


class TestStabilizer:
    """Tests for projective_stabilizer and its certificate."""

    def test_reference_point(self):
        """Verify the stabilizer is Z_2 generated by the swap."""
        m3, m4 = quantum_plane_service.reference_point()

        result = quantum_plane_service.projective_stabilizer(m3, m4)

        assert result.order == 2
        assert result.generators == (Matrix([[0, 1], [1, 0]]),)
        assert result.multipliers == (-1,)
        assert quantum_plane_service.verify_stabilizer_certificate(m3, m4, result)
        assert quantum_plane_service.obstruction_verdict(result)

    @pytest.mark.parametrize("a", [2, -1, "1/2", "-7/3"])
    def test_independent_of_parameter(self, a):
        """Verify the order stays two for every nonzero a."""
        m3, m4 = quantum_plane_service.reference_point(a)

        result = quantum_plane_service.projective_stabilizer(m3, m4)

        assert result.order == 2
        assert result.generators == (Matrix([[0, 1], [1, 0]]),)

    def test_reference_point_is_on_trep2(self):
        """Verify tr(m3) = tr(m4) = tr(m3 m4) = 0."""
        m3, m4 = quantum_plane_service.reference_point(3)

        assert sympy.expand(m3.trace()) == 0
        assert sympy.expand(m4.trace()) == 0
        assert sympy.expand((m3 * m4).trace()) == 0

    def test_zero_parameter(self):
        """Verify a = 0 is refused."""
        with pytest.raises(InputError):
            quantum_plane_service.reference_point(0)

    def test_commuting_pair_is_infinite(self):
        """Verify diag(1, -1) twice is fixed by the diagonal torus."""
        m = mat2([[1, 0], [0, -1]])

        result = quantum_plane_service.projective_stabilizer(m, m)

        assert result.order == INFINITE
        assert result.is_infinite
        assert not quantum_plane_service.obstruction_verdict(result)

    def test_trivial_stabilizer(self):
        """Verify a pair whose anti-commutant is singular has trivial stabilizer."""
        m3 = mat2([[1, 0], [0, -1]])
        m4 = mat2([[1, 2], [0, -1]])

        result = quantum_plane_service.projective_stabilizer(m3, m4)

        assert result.order == 1
        assert result.generators == ()
        assert not quantum_plane_service.obstruction_verdict(result)

    def test_nilpotent_pair_is_infinite(self):
        """Verify vanishing invariants leave a torus in the stabilizer."""
        result = quantum_plane_service.projective_stabilizer(
            mat2([[0, 1], [0, 0]]),
            mat2([[0, 0], [0, 0]]),
        )

        assert result.is_infinite

    def test_zero_pair(self):
        """Verify the zero pair has no projective class."""
        zero = mat2([[0, 0], [0, 0]])

        with pytest.raises(InputError):
            quantum_plane_service.projective_stabilizer(zero, zero)

    def test_certificate_rejects_wrong_multiplier(self):
        """Verify a tampered multiplier fails the exact check."""
        m3, m4 = quantum_plane_service.reference_point()
        forged = StabilizerResult(order=2, generators=(Matrix([[0, 1], [1, 0]]),), multipliers=(1,))

        assert not quantum_plane_service.verify_stabilizer_certificate(m3, m4, forged)

    def test_certificate_rejects_irrational_entries(self):
        """Verify generators must have entries in Q(i)."""
        m3, m4 = quantum_plane_service.reference_point()
        root = sympy.sqrt(2)
        forged = StabilizerResult(order=2, generators=(Matrix([[0, root], [root, 0]]),), multipliers=(-1,))

        assert not quantum_plane_service.verify_stabilizer_certificate(m3, m4, forged)

    def test_gaussian_entries(self):
        """Verify generators stay exact over Q(i)."""
        m3 = mat2([[I, 1], [0, -I]])
        m4 = mat2([[0, 1], [1, 0]])

        result = quantum_plane_service.projective_stabilizer(m3, m4)

        assert quantum_plane_service.verify_stabilizer_certificate(m3, m4, result)


class TestReport:
    """Tests for quantum_plane_report."""

    def test_report(self):
        """Verify the full payload of the check."""
        report = quantum_plane_service.quantum_plane_report()

        assert report.dim == 5
        assert report.rank == 6
        assert report.isolated_singularity
        assert report.strict_transform_smooth
        assert report.stabilizer_order == 2
        assert report.stabilizer_generator == (("0", "1"), ("1", "0"))
        assert report.obstructed

    def test_rational_parameter(self):
        """Verify a string rational is accepted."""
        assert quantum_plane_service.quantum_plane_report("5/2").stabilizer_order == 2
