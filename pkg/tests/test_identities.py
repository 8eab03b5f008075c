"""Recurrence and series identities checked as independent two-sided pairs."""

import math

import pytest

from lerchkit.errors import DomainError
from lerchkit.identities import (
    beta_even_series,
    beta_recurrence,
    companion_beta_series,
    even_zeta_power_sum,
    l_series_relations,
    master_bernoulli,
    master_euler,
    omega4_real_part_even,
    omega4_real_part_odd,
    reflection_pair,
    zeta_from_beta,
    zeta_odd_series,
)


class TestMasterRecurrences:
    @pytest.mark.parametrize("n,phi,b", [(1, math.pi / 2, 1.0), (3, -2 * math.pi / 3, 0.5), (5, math.pi / 4, 0.25)])
    def test_bernoulli_points(self, n, phi, b):
        check = master_bernoulli(n, phi, b)
        assert check.passed, check.describe()
        assert check.name == "master_bernoulli"

    @pytest.mark.parametrize("n,phi,b", [(0, math.pi / 2, 1.0), (2, -2 * math.pi / 3, 0.5), (4, math.pi / 4, 0.25)])
    def test_euler_points(self, n, phi, b):
        check = master_euler(n, phi, b)
        assert check.passed, check.describe()

    def test_sides_are_nontrivial(self):
        check = master_bernoulli(2, math.pi / 2, 0.5)
        assert abs(check.lhs) > 1e-3 and abs(check.rhs) > 1e-3

    def test_tolerance_is_respected(self):
        loose = master_bernoulli(2, math.pi / 2, 0.5, tol=1e-3)
        assert loose.tol == 1e-3 and loose.passed

    def test_domain_validation(self):
        with pytest.raises(DomainError):
            master_bernoulli(0, 1.0, 0.5)  # needs n >= 1
        with pytest.raises(DomainError):
            master_euler(-1, 1.0, 0.5)
        with pytest.raises(DomainError):
            master_bernoulli(2, 7.0, 0.5)  # |phi| must stay below 2 pi
        with pytest.raises(DomainError):
            master_bernoulli(2, 1.0, 1.5)  # b in (0, 1]

    def test_stress_near_radius(self):
        check = master_bernoulli(3, 1.9 * math.pi, 1.0, tol=1e-7)
        assert check.passed, check.describe()
        check = master_euler(2, 0.95 * math.pi, 1.0, tol=1e-7)
        assert check.passed, check.describe()


class TestUnificationConsistency:
    @pytest.mark.parametrize("n,omega", [(1, 4), (2, 3), (3, 8), (4, 2), (2, -2)])
    def test_master_at_b_one_reproduces_power_sum(self, n, omega):
        # Both routes compute the same analytic object: with phi = -2 pi/omega
        # and b = 1, each side of the power-sum form is an affine image of the
        # opposite side of the master recurrence.
        phi = -2.0 * math.pi / omega
        m = master_bernoulli(n, phi, 1.0)
        u = even_zeta_power_sum(n, omega)
        corr = 1j * math.pi / (2.0 * (n + 1) * omega)
        scale = max(1.0, abs(u.lhs), abs(u.rhs))
        assert abs(u.lhs - (corr - 0.5 * m.rhs)) / scale < 1e-11
        assert abs(u.rhs - (corr - 0.5 * m.lhs)) / scale < 1e-11

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("omega", [2, 3, 4, 8])
    def test_power_sum_grid(self, n, omega):
        check = even_zeta_power_sum(n, omega)
        assert check.passed, check.describe()
        assert check.name == "even_zeta_power_sum"

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("omega", [2, 3, 4, 8])
    def test_uncorrected_variant_fails(self, n, omega):
        # Dropping the polylogarithm order correction leaves a defect far
        # above double-precision noise for every n >= 2.
        check = even_zeta_power_sum(n, omega, corrected=False)
        assert check.name == "even_zeta_power_sum_uncorrected"
        assert not check.passed
        assert check.rel_err > 1e-3

    def test_uncorrected_variant_near_miss_at_n_one(self):
        # At n = 1 the uncorrected variant is closer but still not exact.
        check = even_zeta_power_sum(1, 4, corrected=False)
        assert check.rel_err > 1e-9

    def test_domain_validation(self):
        with pytest.raises(DomainError):
            even_zeta_power_sum(0, 4)
        with pytest.raises(DomainError):
            even_zeta_power_sum(2, 1)  # |omega| > 1 required
        with pytest.raises(DomainError):
            even_zeta_power_sum(2, 0)


class TestOmegaFourRealParts:
    @pytest.mark.parametrize("n", range(6))
    def test_odd_family(self, n):
        check = omega4_real_part_odd(n)
        assert check.passed, check.describe()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_even_family(self, n):
        check = omega4_real_part_even(n)
        assert check.passed, check.describe()

    @pytest.mark.parametrize(
        "site", ["lhs_beta", "rhs_log2", "rhs_sum"]
    )
    def test_odd_perturbation_breaks(self, site):
        check = omega4_real_part_odd(2, perturb={site: 1 + 1e-6})
        assert not check.passed

    @pytest.mark.parametrize(
        "site", ["lhs_zeta_lead", "lhs_beta", "lhs_zeta", "rhs_log2", "rhs_sum"]
    )
    def test_even_perturbation_breaks(self, site):
        check = omega4_real_part_even(2, perturb={site: 1 + 1e-6})
        assert not check.passed

    def test_unknown_site_rejected(self):
        with pytest.raises(DomainError):
            omega4_real_part_odd(2, perturb={"nonsite": 1.1})


class TestExactBetaChain:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_beta_recurrence_is_exact_zero(self, n):
        check = beta_recurrence(n)
        assert check.passed, check.describe()
        assert check.absolute
        assert check.params.get("exact_zero") is True

    @pytest.mark.parametrize("n", range(6))
    def test_zeta_from_beta(self, n):
        check = zeta_from_beta(n)
        assert check.passed, check.describe()

    def test_zeta_from_beta_n_zero_is_pi_squared_over_six(self):
        check = zeta_from_beta(0)
        assert abs(check.lhs - math.pi**2 / 6.0) < 1e-14


class TestRapidSeries:
    @pytest.mark.parametrize("n", range(6))
    def test_beta_even(self, n):
        check = beta_even_series(n)
        assert check.passed, check.describe()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_zeta_odd(self, n):
        check = zeta_odd_series(n)
        assert check.passed, check.describe()

    @pytest.mark.parametrize("omega", [-2, 3, 4, 8])
    def test_companion(self, omega):
        check = companion_beta_series(2, omega)
        assert check.passed, check.describe()

    def test_companion_domain(self):
        with pytest.raises(DomainError):
            companion_beta_series(2, 1)
        with pytest.raises(DomainError):
            companion_beta_series(0, 4)


class TestLSeriesRelations:
    @pytest.mark.parametrize("parity", ["odd", "even"])
    @pytest.mark.parametrize("n", range(5))
    def test_grid(self, parity, n):
        check = l_series_relations(n, parity)
        assert check.passed, check.describe()
        assert check.name == f"l_series_relation_{parity}"

    def test_odd_base_case_value(self):
        # n = 0: the left side is sqrt(2) * L(1, chi2).
        from lerchkit.special import l_series

        check = l_series_relations(0, "odd")
        expected = math.sqrt(2.0) * l_series(2, 1).value.real
        assert abs(check.lhs - expected) < 1e-13

    def test_parity_validated(self):
        with pytest.raises(DomainError):
            l_series_relations(1, "sideways")


class TestReflections:
    @pytest.mark.parametrize("kind", ["bernoulli", "euler"])
    def test_pair_passes(self, kind):
        conj_check, flip_check = reflection_pair(kind, 2, math.pi / 4, 0.25)
        for check in (conj_check, flip_check):
            assert check.passed, check.describe()
            assert check.absolute

    def test_symmetric_point_forces_real_or_imaginary(self):
        # At b = 1/2 the flip maps the sum to itself: the geometric-kernel
        # sum must be real, the alternating-kernel sum purely imaginary-free
        # under conjugation with its sign.
        conj_check, _ = reflection_pair("bernoulli", 2, math.pi / 3, 0.5)
        assert conj_check.passed
        assert abs(conj_check.lhs.imag) < 1e-10

    def test_b_range_enforced(self):
        with pytest.raises(DomainError):
            reflection_pair("bernoulli", 2, math.pi / 4, 1.0)
