import random
from fractions import Fraction

import pytest

from betticone import hyper_fixed, hyper_total, oracle, verification
from betticone.errors import ConeInputError, NotInConeError
from betticone.hyper_fixed import (ContainmentReport, FixedConeParams,
                                   containment_report, decompose, member, rays)
from betticone.oracle import ConeDescription
from betticone.sequences import (TailPeriodicSequence, embed, ray, rho_vector,
                                 xi)


def tail_const(head, value):
    return TailPeriodicSequence.constant_tail(head, value)


class TestParams:
    def test_validation(self):
        with pytest.raises(ConeInputError):
            FixedConeParams(1, 3)
        with pytest.raises(ConeInputError):
            FixedConeParams(3, 1)


class TestRays:
    def test_n2_d3(self):
        listed = rays(FixedConeParams(2, 3))
        assert ray("tau_d", 0, 2, 3) in listed and ray("tau_d", 1, 2, 3) in listed
        assert listed[2].prefix(3) == (Fraction(2, 3), 1, 1)
        assert listed[3].prefix(3) == (Fraction(1, 3), 1, 1)

    def test_d2_deduplicates(self):
        p = FixedConeParams(4, 2)
        listed = rays(p)
        assert len(listed) == 5  # n+1 instead of n+2
        assert hyper_fixed.ray_names(p) == [
            "rho[-1]", "rho[0]", "rho[1]", "rho[2]", "tau_d[2]"]
        assert listed[-1].entry(2) == Fraction(1, 2)

    def test_every_ray_in_total_cone(self):
        for n in (2, 3, 5):
            for d in (2, 3, 7):
                for r in rays(FixedConeParams(n, d)):
                    assert hyper_total.facets_check(r, n).ok


class TestMember:
    def test_scaled_tail_ray(self):
        for d in range(2, 11):
            w = tail_const([1], d)  # (1, d, d, ...)
            assert member(w, FixedConeParams(2, d)).ok
            w0 = tail_const([d - 1], d)  # (d-1, d, d, ...)
            assert member(w0, FixedConeParams(2, d)).ok

    def test_zero_is_member(self):
        assert member(TailPeriodicSequence.zero(), FixedConeParams(3, 2)).ok

    def test_total_tail_rays_excluded_at_small_multiplicity(self):
        p = FixedConeParams(3, 2)
        report = member(ray("tau_inf", 2, 3), p)
        assert not report.ok
        assert ("xi[1,3]", Fraction(-1)) in report.violations
        # the same for the sequence starting one step later
        report2 = member(tail_const([0, 0, 0], 1), p)
        assert not report2.ok
        assert ("xi[2,3]", Fraction(-1)) in report2.violations

    def test_xi_values_on_rays(self):
        # xi[0,2] at d=3 takes values (3, 0, 1, 0) on the four generators
        p = FixedConeParams(2, 3)
        f = xi(0, 2, 3)
        values = [f(r) for r in rays(p)]
        assert values == [3, 0, 1, 0]


class TestDecompose:
    def test_ray_multiple(self):
        p = FixedConeParams(2, 3)
        dec = decompose(ray("tau_d", 1, 2, 3).scale(3), p)
        assert dec.supported() == [("tau_d[1]", Fraction(3))]

    def test_two_ray_combination(self):
        p = FixedConeParams(2, 3)
        w = embed(rho_vector(-1, 2)) + ray("tau_d", 0, 2, 3)
        dec = decompose(w, p)
        total = TailPeriodicSequence.zero()
        for c, r in zip(dec.coefficients, rays(p)):
            total = total + r.scale(c)
        assert total == w

    def test_round_trips(self):
        rng = random.Random(55)
        for _ in range(300):
            n = rng.randint(2, 6)
            d = rng.randint(2, 6)
            p = FixedConeParams(n, d)
            listed = rays(p)
            w = TailPeriodicSequence.zero()
            for r in listed:
                w = w + r.scale(Fraction(rng.randint(0, 9)))
            dec = decompose(w, p)
            total = TailPeriodicSequence.zero()
            for c, r in zip(dec.coefficients, listed):
                total = total + r.scale(c)
            assert total == w
            assert all(c >= 0 for c in dec.coefficients)

    def test_not_in_cone(self):
        with pytest.raises(NotInConeError):
            decompose(ray("tau_inf", 2, 3), FixedConeParams(3, 2))

    @pytest.mark.parametrize("n", range(3, 6))
    @pytest.mark.parametrize("d", range(3, 6))
    def test_parity_triangulations_valid_for_fixed_rays(self, n, d):
        p = FixedConeParams(n, d)
        projected = tuple(r.prefix(n + 1) for r in rays(p))
        cone = ConeDescription(n + 1, rays=projected)
        for label in ("omit_odd", "omit_even"):
            tri = hyper_total._parity_triangulation(n, label)
            report = oracle.validate_triangulation(cone, tri)
            assert report.valid, (n, d, label, report.problems)


class TestContainment:
    def test_within_total(self):
        for n in (2, 4):
            for d in (2, 5):
                report = containment_report(FixedConeParams(n, d))
                assert isinstance(report, ContainmentReport) and report.ok
                assert all(e.in_larger is None for e in report.entries)

    def test_monotone_in_multiplicity(self):
        report = containment_report(FixedConeParams(3, 2), FixedConeParams(3, 5))
        assert report.ok
        by_name = {e.name: e for e in report.entries}
        # the merged d=2 tail ray splits evenly across the two d=5 tail rays
        assert dict(by_name["tau_d[1]"].certificate) == {
            "tau_d[1]": Fraction(1, 2), "tau_d[2]": Fraction(1, 2)}

    def test_larger_multiplicity_required(self):
        with pytest.raises(ConeInputError):
            containment_report(FixedConeParams(3, 5), FixedConeParams(3, 2))
        with pytest.raises(ConeInputError):
            containment_report(FixedConeParams(3, 2), FixedConeParams(4, 5))

    def test_sweep_over_grid(self):
        for n in (2, 3, 4):
            for d in range(2, 6):
                for d2 in range(d, 7):
                    assert containment_report(
                        FixedConeParams(n, d), FixedConeParams(n, d2)).ok


class TestSweepIntegration:
    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("d", range(2, 7))
    def test_ray_facet_equivalence(self, n, d):
        assert verification.check_fixed(n, d).ok

    def test_functional_list_recovers_exact_ray_list(self):
        # at n=3, d=3 every listed generator is extremal, so enumerating
        # the functional cone's rays must reproduce the list exactly
        from betticone.linalg import primitive
        n, d = 3, 3
        facets = tuple(verification.fixed_facet_vectors(n, d))
        found = oracle.canonical_rays(ConeDescription(n + 1, facets=facets))
        expected = sorted(primitive(r.prefix(n + 1))
                          for r in rays(FixedConeParams(n, d)))
        assert found == expected
