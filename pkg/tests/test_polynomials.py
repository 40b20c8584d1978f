import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerian_alexander.errors import PreconditionError
from eulerian_alexander.polynomials import (
    ONE,
    T,
    ZERO,
    IntPoly,
    canonical,
    equiv_up_to_units,
    is_log_concave_no_internal_zeros,
    is_palindromic,
    is_trapezoidal,
    is_ultra_log_concave,
    substitute_neg_t,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=7)
polys = coeff_lists.map(IntPoly)
nonneg = st.lists(st.integers(0, 30), min_size=1, max_size=8)


def test_square_of_one_plus_t():
    assert IntPoly([1, 1]) * IntPoly([1, 1]) == IntPoly([1, 2, 1])


def test_times_zero():
    assert IntPoly([4, -1, 7]) * ZERO == ZERO
    assert (IntPoly([4, -1, 7]) * 0).is_zero


def test_expansion_in_t_minus_one():
    s = T - 1
    assert s**2 + s.scale(3) + 3 == IntPoly([1, 1, 1])


def test_evaluation_and_trimming():
    p = IntPoly([2, 0, 3, 0, 0])
    assert p.coeffs == (2, 0, 3)
    assert p.degree == 2
    assert p(2) == 14
    assert p(-1) == 5


def test_zero_polynomial_has_no_coefficients():
    assert ZERO.coeffs == ()
    assert not ZERO
    assert ONE.coeffs == (1,)


def test_division():
    p = IntPoly([3, 6, 3])
    q, r = p.divmod(IntPoly([1, 1]))
    assert q == IntPoly([3, 3]) and r.is_zero
    assert p.exact_div(3) == IntPoly([1, 2, 1])


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(polys)
def test_substitution_is_an_involution(p):
    assert substitute_neg_t(substitute_neg_t(p)) == p
    assert substitute_neg_t(p)(3) == p(-3)


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 1, 1], True), ([2, 2], True), ([1, 2], False), ([3, 6, 3], True), ([1], True)],
)
def test_palindromic(coeffs, expected):
    assert is_palindromic(coeffs) is expected


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 1, 1], True), ([1, 0, 1], False), ([3, 6, 3], True), ([0, 0, 1, 2], True), ([1, 3, 1, 3], False)],
)
def test_log_concave(coeffs, expected):
    assert is_log_concave_no_internal_zeros(coeffs) is expected


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 3, 3, 1], True), ([1, 2, 1, 2], False), ([1, 1, 1], True), ([5], True), ([1, 2, 2, 1], True), ([2, 1, 2], False)],
)
def test_trapezoidal(coeffs, expected):
    assert is_trapezoidal(coeffs) is expected


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 1, 1], False), ([1, 2, 1], True), ([3, 6, 3], True), ([1, 3, 3, 1], True), ([1, 0, 1], False)],
)
def test_ultra_log_concave(coeffs, expected):
    assert is_ultra_log_concave(coeffs) is expected


@pytest.mark.parametrize("check", [is_log_concave_no_internal_zeros, is_trapezoidal, is_ultra_log_concave])
def test_negative_coefficients_are_rejected(check):
    with pytest.raises(PreconditionError):
        check([1, -1, 1])


@given(nonneg)
def test_ultra_implies_plain_log_concavity(seq):
    if is_ultra_log_concave(seq):
        assert is_log_concave_no_internal_zeros(seq)


@given(st.lists(st.integers(1, 30), min_size=1, max_size=8))
def test_positive_log_concave_is_unimodal(seq):
    if is_log_concave_no_internal_zeros(seq):
        peak = seq.index(max(seq))
        assert all(seq[i] <= seq[i + 1] for i in range(peak))
        assert all(seq[i] >= seq[i + 1] for i in range(peak, len(seq) - 1))


@given(st.integers(1, 6), st.integers(1, 5))
def test_binomial_rows_are_ultra_log_concave(n, c):
    assert is_ultra_log_concave((IntPoly([1, 1]) ** n).scale(c))


@pytest.mark.parametrize(
    "p, q, expected",
    [([0, 0, 1, -1, 1], [1, -1, 1], True), ([-1, 1, -1], [1, -1, 1], True), ([1, 1], [1, -1], False)],
)
def test_equivalence_up_to_units(p, q, expected):
    assert equiv_up_to_units(p, q) is expected


@given(polys, st.integers(0, 4), st.sampled_from([1, -1]))
def test_canonical_forgets_units(p, k, sign):
    assert canonical(p.shift(k).scale(sign)) == canonical(p)
    c = canonical(p)
    assert c.is_zero or (c.coeffs[0] > 0)
