from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from occpoly import (
    LengthError,
    ParityError,
    RangeError,
    Spectrum,
    majorizes,
    rational,
    sort_descending,
    validate_system,
)

F = Fraction


class TestValidateSystem:
    def test_accepts_quartet(self):
        system = validate_system(7, 3, 7)
        assert (system.N, system.two_S, system.d) == (7, 3, 7)
        assert (system.K, system.J) == (2, 5)

    def test_parity_mismatch(self):
        with pytest.raises(ParityError):
            validate_system(4, 1, 4)

    def test_occupied_window_must_fit(self):
        # (N + 2S)/2 = 3 orbitals needed but only two available.
        with pytest.raises(RangeError):
            validate_system(4, 2, 2)

    def test_capacity(self):
        with pytest.raises(RangeError):
            validate_system(5, 1, 2)

    def test_spin_bounded_by_particle_number(self):
        with pytest.raises(RangeError):
            validate_system(2, 4, 5)

    def test_magnetization_range(self):
        with pytest.raises(RangeError):
            validate_system(3, 1, 3, twoM=3)
        with pytest.raises(ParityError):
            validate_system(3, 1, 3, twoM=0)
        assert validate_system(3, 1, 3, twoM=-1).two_M == -1


class TestRational:
    def test_parses_fraction_strings(self):
        assert rational("7/10") == F(7, 10)
        assert rational("-3") == -3

    def test_rejects_decimals(self):
        with pytest.raises(ValueError):
            rational("0.7")
        with pytest.raises(ValueError):
            rational("1e-3")


class TestMajorizes:
    def test_pure_tops_uniform(self):
        assert majorizes([1, 0], [F(1, 2), F(1, 2)])
        assert not majorizes([F(1, 2), F(1, 2)], [1, 0])

    def test_rational_triple(self):
        x = [F(1, 2), F(3, 10), F(1, 5)]
        y = [F(2, 5), F(7, 20), F(1, 4)]
        # partial sums: (1/2, 4/5, 1) dominates (2/5, 3/4, 1)
        assert majorizes(x, y)
        assert not majorizes(y, x)

    def test_total_mismatch(self):
        with pytest.raises(LengthError):
            majorizes([1, 0], [1, 1])

    def test_zero_padding(self):
        assert majorizes([1], [F(1, 2), F(1, 2)])


rational_lists = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=12), min_size=1, max_size=6
)


@settings(max_examples=60, deadline=None)
@given(rational_lists)
def test_majorization_reflexive(xs):
    assert majorizes(xs, xs)


@settings(max_examples=60, deadline=None)
@given(rational_lists)
def test_uniform_is_minimum(xs):
    n = len(xs)
    total = sum(xs, F(0))
    uniform = [total / n] * n
    assert majorizes(xs, uniform)


@settings(max_examples=40, deadline=None)
@given(rational_lists, st.randoms(use_true_random=False))
def test_majorization_invariant_under_permutation(xs, rng):
    shuffled = list(xs)
    rng.shuffle(shuffled)
    assert majorizes(xs, shuffled)
    assert majorizes(shuffled, xs)


@settings(max_examples=40, deadline=None)
@given(rational_lists, rational_lists, rational_lists)
def test_majorization_transitive(xs, ys, zs):
    n = max(len(xs), len(ys), len(zs))
    pad = lambda v: v + [F(0)] * (n - len(v))
    xs, ys, zs = pad(xs), pad(ys), pad(zs)
    shift = lambda v: [x + (sum(xs, F(0)) - sum(v, F(0))) / n for x in v]
    ys, zs = shift(ys), shift(zs)
    if majorizes(xs, ys) and majorizes(ys, zs):
        assert majorizes(xs, zs)


class TestSortDescending:
    def test_example(self):
        values, perm = sort_descending([0, 2, 1])
        assert values == (2, 1, 0)
        assert perm == (2, 0, 1)

    def test_ties_keep_input_order(self):
        values, perm = sort_descending([1, 1, 1])
        assert values == (1, 1, 1)
        assert perm == (0, 1, 2)

    def test_weights(self):
        values, _ = sort_descending([F(7, 10), F(3, 10)])
        assert values == (F(7, 10), F(3, 10))

    @settings(max_examples=60, deadline=None)
    @given(rational_lists)
    def test_is_sorted_permutation(self, xs):
        values, perm = sort_descending(xs)
        assert sorted(values, reverse=True) == list(values)
        assert sorted(perm) == list(range(len(xs)))
        for i, x in enumerate(xs):
            assert values[perm[i]] == x


class TestSpectrum:
    def test_total_and_sort(self):
        spec = Spectrum((F(1, 2), F(5, 2), 1))
        assert spec.total == 4
        assert spec.sorted_descending() == (F(5, 2), 1, F(1, 2))
