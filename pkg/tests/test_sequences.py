from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betticone.errors import ConeInputError, MalformedInputError
from betticone.sequences import (BettiVector, LinearFunctional,
                                 TailPeriodicSequence, as_fraction, chi, embed,
                                 rational_str, ray, rho_vector,
                                 sequence_from_json, sequence_to_json,
                                 shape_equal, truncate, xi)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def tail_seq(head, even, odd):
    return TailPeriodicSequence(len(head), tuple(map(Fraction, head)),
                                Fraction(even), Fraction(odd))


class TestRationalStrings:
    def test_round_trip(self):
        for text in ["0", "-7", "19/20", "-3/4"]:
            assert rational_str(as_fraction(text)) == text

    def test_rejects_floats_and_garbage(self):
        for bad in ["0.5", "1e3", "1/0x2", "", "one", 1.5, None]:
            with pytest.raises(MalformedInputError):
                as_fraction(bad)


class TestTailPeriodicSequence:
    def test_entry_by_convention(self):
        s = tail_seq([1, 3], 4, 5)
        assert [s.entry(i) for i in range(6)] == [1, 3, 4, 5, 4, 5]

    def test_entry_example_from_prefix_sums(self):
        # expansion of the prefix-sum transform of (1,3,3,1): 1,3,4,4,4,...
        s = tail_seq([1, 3], 4, 4)
        assert s.entry(7) == 4

    def test_entry_below_stab_is_head(self):
        s = tail_seq([7, 9, 11], 0, 0)
        assert s.entry(0) == 7 and s.entry(2) == 11

    def test_entry_rejects_negative_index(self):
        with pytest.raises(ConeInputError):
            tail_seq([1], 2, 3).entry(-1)

    def test_canonical_minimal_stab(self):
        # head entries that the tail reproduces get absorbed
        s = TailPeriodicSequence(4, (Fraction(1), Fraction(0), Fraction(1), Fraction(0)),
                                 Fraction(1), Fraction(0))
        assert s.stab == 0 and s.head == ()
        assert [s.entry(i) for i in range(4)] == [1, 0, 1, 0]

    def test_canonicalization_is_idempotent_and_preserves_entries(self):
        raw = TailPeriodicSequence(3, (Fraction(2), Fraction(5), Fraction(5)),
                                   Fraction(7), Fraction(5))
        again = TailPeriodicSequence(raw.stab, raw.head, raw.tail_even, raw.tail_odd)
        assert raw == again
        assert raw.prefix(8) == (2, 5, 5, 5, 7, 5, 7, 5)

    def test_addition_and_scaling(self):
        a = tail_seq([1], 2, 3)
        b = tail_seq([0, 1, 5], 0, 1)
        total = a + b
        assert total.prefix(6) == tuple(
            a.entry(i) + b.entry(i) for i in range(6))
        assert (Fraction(1, 2) * a).entry(3) == Fraction(3, 2)

    def test_structural_equality_is_value_equality(self):
        assert tail_seq([], 1, 1) == TailPeriodicSequence.constant_tail([], 1)
        assert tail_seq([1], 1, 1) == tail_seq([], 1, 1)


class TestBettiVector:
    def test_length_checked(self):
        with pytest.raises(ConeInputError):
            BettiVector(2, (Fraction(1), Fraction(1)))

    def test_embed_truncate_round_trip(self):
        v = BettiVector.of(["1", "3", "3", "1"])
        s = embed(v)
        assert s.tail_even == 0 and s.tail_odd == 0
        assert truncate(s, 4) == v
        assert truncate(s, 6).entries == (1, 3, 3, 1, 0, 0)


class TestChi:
    def test_alternating_signs(self):
        f = chi(1, 4)
        assert f.coeffs == ((1, 1), (2, -1), (3, 1), (4, -1))

    def test_hand_values(self):
        assert chi(0, 2)(BettiVector.of([1, 2, 1])) == 0
        assert chi(1, 3)(BettiVector.of([1, 3, 3, 1])) == 1

    def test_kronecker_pairing_with_rays(self):
        # chi[j+1, n] picks out the rho_j coefficient
        n = 5
        for i in range(-1, n):
            for j in range(0, n + 1):
                expected = 1 if j == i + 1 else 0
                assert chi(j, n)(rho_vector(i, n)) == expected

    def test_empty_range_is_zero(self):
        assert chi(3, 2).coeffs == ()

    def test_invalid_range(self):
        with pytest.raises(ConeInputError):
            chi(3, 1)
        with pytest.raises(ConeInputError):
            chi(-1, 2)

    @given(st.lists(rationals, min_size=5, max_size=9),
           st.integers(0, 3), st.integers(0, 4))
    def test_recursion(self, entries, i, extra):
        j = i + extra
        w = BettiVector.of(entries)
        assert chi(i, j)(w) == w[i] - chi(i + 1, j)(w)


class TestXi:
    def test_definition_odd_and_even(self):
        # i - j odd: -eps_j + d*chi[i, j-1]
        f = xi(0, 3, 2)
        assert f.coefficient(3) == -1 and f.coefficient(0) == 2
        # i - j even: (d-1) eps_j + d*chi[i, j-1]
        g = xi(0, 2, 3)
        assert g.coefficient(2) == 2 and g.coefficient(0) == 3 and g.coefficient(1) == -3

    def test_hand_values(self):
        assert xi(0, 2, 3)(ray("tau_d", 1, 2, 3)) == 0
        assert xi(0, 2, 3)(embed(rho_vector(-1, 2))) == 3

    def test_degenerate_range_leaves_endpoint(self):
        w = tail_seq([1, 2], 7, 7)
        assert xi(2, 2, 5)(w) == 4 * 7

    def test_requires_multiplicity(self):
        with pytest.raises(ConeInputError):
            xi(0, 2, 1)

    @given(st.integers(0, 3), st.integers(0, 4), st.integers(2, 7))
    def test_chi_identity(self, i, extra, d):
        # xi = d*chi[i,j] + (d-1)*eps_j (odd gap) or d*chi[i,j] - eps_j (even)
        j = i + extra
        end = {j: d - 1} if (j - i) % 2 == 1 else {j: -1}
        expected = chi(i, j).scale(d) + LinearFunctional.from_map(end)
        assert xi(i, j, d) == expected


class TestLinearFunctional:
    @given(st.lists(rationals, min_size=6, max_size=6),
           st.lists(rationals, min_size=6, max_size=6),
           rationals, rationals)
    @settings(max_examples=60)
    def test_linearity(self, xs, ys, a, b):
        f = chi(0, 5) + xi(1, 4, 3).scale(Fraction(1, 2))
        x = BettiVector.of(xs)
        y = BettiVector.of(ys)
        assert f(x.scale(a) + y.scale(b)) == a * f(x) + b * f(y)

    def test_evaluation_on_tail(self):
        f = LinearFunctional.from_map({0: 1, 5: 2})
        assert f(tail_seq([3], 10, 20)) == 3 + 2 * 20


class TestRays:
    def test_rho_minus_one(self):
        assert ray("rho", -1, 4).prefix(6) == (1, 0, 0, 0, 0, 0)

    def test_tau_inf(self):
        assert ray("tau_inf", 2, 4).prefix(6) == (0, 0, 1, 1, 1, 1)

    def test_tau_d(self):
        s = ray("tau_d", 1, 2, 3)
        assert s.prefix(4) == (Fraction(1, 3), 1, 1, 1)
        t = ray("tau_d", 0, 2, 3)
        assert t.prefix(4) == (Fraction(2, 3), 1, 1, 1)

    def test_range_validation(self):
        with pytest.raises(ConeInputError):
            ray("rho", 4, 4)
        with pytest.raises(ConeInputError):
            ray("tau_inf", 0, 4)
        with pytest.raises(ConeInputError):
            ray("tau_d", 1, 2, 1)
        with pytest.raises(ConeInputError):
            ray("sigma", 0, 4)

    @given(st.integers(2, 8), st.integers(2, 40), st.booleans())
    def test_tau_d_approaches_tau_inf(self, n, d, upper):
        i = n - 2 if upper else n - 1
        td = ray("tau_d", i, n, d)
        ti = ray("tau_inf", i, n)
        diffs = [(k, td.entry(k) - ti.entry(k))
                 for k in range(n + 3) if td.entry(k) != ti.entry(k)]
        assert [k for k, _ in diffs] == [n - 2]
        assert abs(diffs[0][1]) == Fraction(1, d)


class TestShapeEqual:
    def test_positive_scalar(self):
        assert shape_equal(BettiVector.of(["1/2", "1", "1/2"]),
                           BettiVector.of([1, 2, 1]))

    def test_not_proportional(self):
        assert not shape_equal(BettiVector.of([1, 2, 1]), BettiVector.of([1, 2, 2]))

    def test_negative_scalar_rejected(self):
        assert not shape_equal(BettiVector.of([1, 1]), BettiVector.of([-1, -1]))

    def test_zero_class(self):
        zero = BettiVector.of([0, 0])
        assert shape_equal(zero, zero)
        assert not shape_equal(zero, BettiVector.of([0, 1]))

    def test_tail_sequences(self):
        assert shape_equal(tail_seq([1], 2, 2), tail_seq([3], 6, 6))
        assert not shape_equal(tail_seq([1], 2, 2), tail_seq([1], 2, 3))

    @given(st.lists(rationals, min_size=3, max_size=6),
           st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=7))
    def test_scaling_always_shape_equal(self, entries, lam):
        v = BettiVector.of(entries)
        assert shape_equal(v, v.scale(lam)) or v.is_zero


class TestJsonSchema:
    def test_finite_round_trip(self):
        v = BettiVector.of(["1", "3", "3", "1"])
        data = sequence_to_json(v)
        assert data == {"kind": "finite", "n": 3, "entries": ["1", "3", "3", "1"]}
        assert sequence_from_json(data) == v

    def test_tail_round_trip(self):
        s = tail_seq([1, 3], 4, 5)
        data = sequence_to_json(s)
        assert data == {"kind": "tail", "stab": 2, "head": ["1", "3"],
                        "tail_even": "4", "tail_odd": "5"}
        assert sequence_from_json(data) == s

    def test_non_canonical_tail_input_is_canonicalized(self):
        data = {"kind": "tail", "stab": 2, "head": ["1", "4"],
                "tail_even": "1", "tail_odd": "4"}
        assert sequence_from_json(data).stab == 0

    @pytest.mark.parametrize("bad", [
        42,
        {"kind": "finite", "entries": "1,2"},
        {"kind": "finite", "n": 5, "entries": ["1", "2"]},
        {"kind": "finite", "entries": ["0.5"]},
        {"kind": "tail", "head": ["1"], "tail_even": "1"},
        {"kind": "tail", "stab": 3, "head": ["1"], "tail_even": "1", "tail_odd": "1"},
        {"kind": "spiral"},
    ])
    def test_malformed(self, bad):
        with pytest.raises(MalformedInputError):
            sequence_from_json(bad)
