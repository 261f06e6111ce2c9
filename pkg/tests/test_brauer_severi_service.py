"""
Brauer-Severi Service Unit Tests

Tests for extended settings, thin stability and the fiber report.
"""

import pytest
import sympy
from hypothesis import given, settings as hypothesis_settings, strategies as st

from ncmodel.core.exceptions import (
    BoundExceededError,
    DimensionVectorError,
    UnsupportedSettingError,
)
from ncmodel.models.brauer_severi import ThinRep
from ncmodel.models.enums import PointType
from ncmodel.services import brauer_severi_service


def rep(*values) -> ThinRep:
    return ThinRep(tuple(sympy.Rational(v) for v in values))


@pytest.fixture
def a101_extended(make_triple):
    """A_101 with gamma = (1, 2): theta = (-3, 1, 2) on six arrows."""
    return brauer_severi_service.extend_setting(make_triple(1, 0, 1, (1, 2)))


class TestExtendSetting:
    """Tests for extend_setting."""

    def test_a101_layout(self, a101_extended):
        """Verify v0 comes first with d_i arrows to the shifted base vertices."""
        assert a101_extended.theta == (-3, 1, 2)
        assert a101_extended.quiver.arrows == (
            (2, 1), (2, 2), (1, 2),
            (0, 1), (0, 2), (0, 2),
        )
        assert a101_extended.alpha_tilde.entries == (1, 1, 1)

    def test_a001_adds_n_arrows(self, make_triple):
        """Verify the Azumaya setting gains n arrows from v0."""
        e = brauer_severi_service.extend_setting(make_triple(0, 0, 1, (4,)))

        assert e.quiver.arrow_count == 6
        assert e.theta == (-4, 4)


class TestThinStability:
    """Tests for closed subsets and theta-(semi)stability."""

    def test_all_ones_closed_subsets(self, a101_extended):
        """Verify only the empty set, the base and everything are closed."""
        subsets = brauer_severi_service.closed_subsets(a101_extended, ThinRep.ones(6))

        assert subsets == [frozenset(), frozenset({1, 2}), frozenset({0, 1, 2})]

    def test_zero_rep_has_every_subset(self, a101_extended):
        """Verify every vertex set is closed for the zero representation."""
        assert len(brauer_severi_service.closed_subsets(a101_extended, rep(0, 0, 0, 0, 0, 0))) == 8

    def test_dead_v0_arrows(self, a101_extended):
        """Verify {v0} becomes closed when its arrows vanish."""
        r = rep(1, 1, 1, 0, 0, 0)

        assert brauer_severi_service.closed_subsets(a101_extended, r) == [
            frozenset(),
            frozenset({0}),
            frozenset({1, 2}),
            frozenset({0, 1, 2}),
        ]
        assert not brauer_severi_service.is_theta_semistable(a101_extended, r)

    def test_all_ones_stable(self, a101_extended):
        """Verify the all-ones representation is stable."""
        assert brauer_severi_service.is_theta_stable(a101_extended, ThinRep.ones(6))

    def test_single_v0_arrow_suffices(self, a101_extended):
        """Verify one live arrow into the cycle generates everything."""
        r = rep(1, 1, 1, 0, sympy.Rational(-1, 2), 0)

        assert brauer_severi_service.brauer_stable_check(a101_extended, r)

    def test_wrong_scalar_count(self, a101_extended):
        """Verify a representation must give one scalar per arrow."""
        with pytest.raises(DimensionVectorError):
            brauer_severi_service.closed_subsets(a101_extended, ThinRep.ones(5))

    def test_semistable_equals_stable(self, a101_extended, make_triple):
        """Verify no proper vertex set has theta weight zero."""
        assert brauer_severi_service.check_semistable_equals_stable(a101_extended)
        assert brauer_severi_service.check_semistable_equals_stable(
            brauer_severi_service.extend_setting(make_triple(2, 1, 1, (1, 2, 1, 3)))
        )

    def test_subset_scan_bound(self, a101_extended, monkeypatch):
        """Verify the subset scan honours the settings bound."""
        from ncmodel.core.config import settings

        monkeypatch.setattr(settings, "SUBSET_SCAN_MAX_P", 1)

        with pytest.raises(BoundExceededError):
            brauer_severi_service.check_semistable_equals_stable(a101_extended)

    @pytest.mark.parametrize("k", range(0, 4))
    def test_no_zero_weight_subset_on_branch_settings(self, k):
        """Verify semistable equals stable on every A_k01 extension with n <= 6."""
        from ncmodel.services.surface_service import build_aklm, make_triple, partitions_exact

        setting = build_aklm(k, 0, 1)
        for n in range(k + 1, 7):
            for gamma in partitions_exact(n, k + 1):
                e = brauer_severi_service.extend_setting(make_triple(setting, gamma))
                assert brauer_severi_service.check_semistable_equals_stable(e)
                assert brauer_severi_service.moduli_dimension(e) == n + 1

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(
        st.lists(st.integers(min_value=-2, max_value=2), min_size=6, max_size=6),
        st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda f: f != 0),
    )
    def test_scaling_keeps_closed_subsets(self, values, factor):
        """Verify rescaling every scalar by a nonzero rational changes nothing."""
        from ncmodel.services.surface_service import build_aklm, make_triple

        e = brauer_severi_service.extend_setting(make_triple(build_aklm(1, 0, 1), (1, 2)))
        r = rep(*values)
        scaled = r.scaled(sympy.Rational(factor.numerator, factor.denominator))

        assert brauer_severi_service.closed_subsets(e, scaled) == brauer_severi_service.closed_subsets(e, r)
        assert brauer_severi_service.is_theta_stable(e, scaled) == brauer_severi_service.is_theta_stable(e, r)

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(min_value=-2, max_value=2), min_size=6, max_size=6))
    def test_brauer_stability_is_theta_stability(self, values):
        """Verify generation from v0 agrees with theta-stability."""
        from ncmodel.services.surface_service import build_aklm, make_triple

        e = brauer_severi_service.extend_setting(make_triple(build_aklm(1, 0, 1), (1, 2)))
        r = rep(*values)

        assert brauer_severi_service.brauer_stable_check(e, r) == (
            brauer_severi_service.generated_subset(e, r) == frozenset({0, 1, 2})
        )


class TestModuliDimension:
    """Tests for moduli_dimension."""

    @pytest.mark.parametrize(
        "klm, gamma, expected",
        [
            ((1, 0, 1), (1, 2), 4),
            ((0, 0, 1), (3,), 4),
            ((0, 0, 1), (5,), 6),
            ((2, 0, 1), (1, 1, 1), 4),
        ],
    )
    def test_arrows_minus_vertices_plus_one(self, make_triple, klm, gamma, expected):
        """Verify the moduli dimension of the stable locus."""
        e = brauer_severi_service.extend_setting(make_triple(*klm, gamma))

        assert brauer_severi_service.moduli_dimension(e) == expected


class TestSampler:
    """Tests for sample_stability."""

    def test_seed_is_reproducible(self, a101_extended):
        """Verify equal seeds give equal censuses."""
        first = brauer_severi_service.sample_stability(a101_extended, samples=50, seed=7)
        second = brauer_severi_service.sample_stability(a101_extended, samples=50, seed=7)

        assert first == second

    def test_counts_add_up(self, a101_extended):
        """Verify every sample lands in exactly one class and none is strictly semistable."""
        census = brauer_severi_service.sample_stability(a101_extended, samples=40, seed=1)

        assert census.stable + census.strictly_semistable + census.unstable == 40
        assert census.strictly_semistable == 0

    @pytest.mark.parametrize("k", range(0, 4))
    def test_default_census_has_no_strictly_semistable(self, k):
        """Verify seeded 1000-sample censuses over A_k01 extensions with n <= 6 have no strictly semistable rep."""
        from ncmodel.services.surface_service import build_aklm, make_triple, partitions_exact

        setting = build_aklm(k, 0, 1)
        for n in range(k + 1, 7):
            for gamma in partitions_exact(n, k + 1):
                e = brauer_severi_service.extend_setting(make_triple(setting, gamma))

                census = brauer_severi_service.sample_stability(e)

                assert census.samples == 1000
                assert census.seed == 0
                assert census.stable + census.unstable == 1000
                assert census.strictly_semistable == 0

    def test_zero_samples(self, a101_extended):
        """Verify an empty census."""
        census = brauer_severi_service.sample_stability(a101_extended, samples=0, seed=3)

        assert (census.stable, census.unstable, census.seed) == (0, 0, 3)


class TestHesselinkStrata:
    """Tests for hesselink_strata and level_quiver."""

    def test_k1(self):
        """Verify the two strata over A_101 with gamma = (1, 2)."""
        strata = brauer_severi_service.hesselink_strata(1, (1, 2))

        assert [s.theta_i for s in strata] == [(-2, 0, 2)] * 2
        assert [s.level_moduli_dim for s in strata] == [0, 1]
        assert [s.stratum_dim for s in strata] == [4, 4]
        assert strata[0].saturated_set == ("pi_0_1", "pi_0_2", "pi_1_2")
        assert strata[1].saturated_set == ("pi_0_1", "pi_0_2", "pi_2_1")

    def test_k2(self):
        """Verify three strata with trivial level moduli for gamma = (1, 1, 1)."""
        strata = brauer_severi_service.hesselink_strata(2, (1, 1, 1))

        assert len(strata) == 3
        assert strata[0].theta_i == (-3, -1, 1, 3)
        assert {s.level_moduli_dim for s in strata} == {0}
        assert {s.stratum_dim for s in strata} == {5}

    def test_k1_equal_parts(self):
        """Verify gamma = (2, 2) gives projective lines at both levels."""
        strata = brauer_severi_service.hesselink_strata(1, (2, 2))

        assert [s.level_moduli_dim for s in strata] == [1, 1]
        assert [s.stratum_dim for s in strata] == [5, 5]

    def test_level_quiver_shape(self):
        """Verify d arrows out of v0 followed by the path."""
        q = brauer_severi_service.level_quiver(2, 3)

        assert q.vertex_count == 4
        assert q.arrows == ((0, 1), (0, 1), (0, 1), (1, 2), (2, 3))

    @pytest.mark.parametrize("k, gamma", [(1, (1,)), (1, (0, 2)), (-1, ())])
    def test_bad_gamma(self, k, gamma):
        """Verify gamma must have k + 1 positive parts."""
        with pytest.raises(DimensionVectorError):
            brauer_severi_service.hesselink_strata(k, gamma)


class TestFiberReport:
    """Tests for fiber_report."""

    def test_azumaya_fiber(self, make_triple):
        """Verify a projective space over an Azumaya point."""
        report = brauer_severi_service.fiber_report(make_triple(0, 0, 1, (5,)))

        assert report.point_type == PointType.AZUMAYA
        assert [(c.label, c.dim) for c in report.components] == [("P^4", 4)]
        assert report.flat

    def test_branch_point_fiber(self, make_triple):
        """Verify k + 1 components of dimension n - 1 over A_101."""
        report = brauer_severi_service.fiber_report(make_triple(1, 0, 1, (1, 2)))

        assert report.point_type == PointType.RAMIFIED
        assert [(c.label, c.dim) for c in report.components] == [("stratum-1", 2), ("stratum-2", 2)]
        assert report.flat
        assert len(report.strata) == 2

    def test_y_tail_branch(self, make_triple):
        """Verify A_011 is read as a branch of length one."""
        report = brauer_severi_service.fiber_report(make_triple(0, 1, 1, (2, 2)))

        assert report.k == 1
        assert {c.dim for c in report.components} == {3}

    @pytest.mark.parametrize("klm, gamma", [((1, 1, 1), (1, 1, 1)), ((0, 0, 2), (1, 1))])
    def test_unsupported(self, make_triple, klm, gamma):
        """Verify crossings and isolated points are refused."""
        with pytest.raises(UnsupportedSettingError):
            brauer_severi_service.fiber_report(make_triple(*klm, gamma))

    def test_a301(self, make_triple):
        """Verify four components of dimension three over A_301."""
        report = brauer_severi_service.fiber_report(make_triple(3, 0, 1, (1, 1, 1, 1)))

        assert [c.dim for c in report.components] == [3, 3, 3, 3]
        assert report.flat

    @pytest.mark.parametrize("k", range(0, 5))
    def test_flat_at_desk_scale(self, k):
        """Verify k + 1 components of dimension n - 1 for every gamma with n <= 8."""
        from ncmodel.services.surface_service import build_aklm, make_triple, partitions_exact

        setting = build_aklm(k, 0, 1)
        for n in range(k + 1, 9):
            for gamma in partitions_exact(n, k + 1):
                report = brauer_severi_service.fiber_report(make_triple(setting, gamma))
                assert len(report.components) == k + 1
                assert {c.dim for c in report.components} == {n - 1}
                assert report.flat
                if k:
                    assert all(s.stratum_dim == n + k for s in report.strata)
                    assert [s.level_moduli_dim for s in report.strata] == [d - 1 for d in gamma]
