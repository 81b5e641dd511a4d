"""Antisymmetrization, kernel symmetrization, and gamma expansions."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from asmkit.laurent import LaurentPolynomial, vandermonde
from asmkit.symmetrize import (
    GammaExpandError,
    OverVandermonde,
    asym,
    asym_classes,
    asym_from_classes,
    build_P,
    build_R,
    check_inversion_invariance,
    gamma_combine,
    gamma_expand,
    perm_sign,
    sym_over_vandermonde,
)


def lp(nvars, terms):
    return LaurentPolynomial(nvars, terms)


def dense_asym(f):
    """Oracle: literal signed sum over all variable permutations."""
    total = LaurentPolynomial.zero(f.nvars)
    for p in permutations(range(f.nvars)):
        total = total + perm_sign(p) * f.permute(p)
    return total


coeffs = st.integers(min_value=-6, max_value=6)


def polys(nvars, max_exp=3, max_terms=5):
    expo = st.tuples(*[st.integers(-max_exp, max_exp)] * nvars)
    return st.dictionaries(expo, coeffs, max_size=max_terms).map(
        lambda d: LaurentPolynomial(nvars, d))


# -- permutation sign ---------------------------------------------------------


def test_perm_sign_small_cases():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((1, 2, 0)) == 1
    assert perm_sign((2, 1, 0)) == -1


def test_perm_sign_is_multiplicative():
    for s in permutations(range(4)):
        for t in ((1, 0, 2, 3), (3, 1, 2, 0)):
            st_ = tuple(t[s[i]] for i in range(4))
            assert perm_sign(st_) == perm_sign(s) * perm_sign(t)


# -- antisymmetrization -------------------------------------------------------


def test_asym_of_single_variable():
    z1 = LaurentPolynomial.variable(2, 0)
    z2 = LaurentPolynomial.variable(2, 1)
    assert asym(z1) == z1 - z2


def test_asym_kills_symmetric_exponents():
    assert asym(lp(2, {(1, 1): 5})).is_zero()
    assert asym(lp(3, {(2, 0, 2): 1})).is_zero()
    assert asym(LaurentPolynomial.const(2, 7)).is_zero()


def test_asym_classes_merge_orbit_terms():
    # both terms sit in the class (1, 0); the second enters with sign -1
    f = lp(2, {(1, 0): 3, (0, 1): 1})
    assert asym_classes(f) == {(1, 0): 2}
    assert asym(f) == lp(2, {(1, 0): 2, (0, 1): -2})


@given(polys(3))
def test_asym_matches_dense_oracle(f):
    assert asym(f) == dense_asym(f)


@given(polys(3))
def test_asym_expansion_round_trip(f):
    assert asym_from_classes(asym_classes(f), 3) == asym(f)


@given(polys(3), st.permutations(range(3)))
def test_asym_is_alternating(f, p):
    assert asym(f.permute(tuple(p))) == perm_sign(tuple(p)) * asym(f)


@given(polys(3, max_exp=2, max_terms=4))
def test_asym_is_divisible_by_vandermonde(f):
    q = sym_over_vandermonde(f)
    assert q * vandermonde(3) == asym(f)


@given(polys(3, max_exp=2, max_terms=4), st.permutations(range(3)))
def test_sym_over_vandermonde_is_symmetric(f, p):
    q = sym_over_vandermonde(f)
    assert q.permute(tuple(p)) == q


def test_sym_over_vandermonde_hand_value():
    z1 = LaurentPolynomial.variable(2, 0)
    assert sym_over_vandermonde(z1) == LaurentPolynomial.const(2, -1)


def test_sym_over_vandermonde_single_variable_is_identity():
    f = lp(1, {(2,): 3, (-1,): 1})
    assert sym_over_vandermonde(f) == f


# -- the product kernel -------------------------------------------------------


def test_kernel_numerator_small_case():
    num = build_P(1, 2).numerator
    assert num == lp(2, {(-1, 0): 1, (0, 0): -2, (0, 1): 1,
                         (-1, -1): -1, (0, -1): 1})


def test_kernel_trivial_parameters():
    assert build_P(1, 1).numerator == LaurentPolynomial.const(1, 1)
    assert build_R(1, 1) == LaurentPolynomial.const(1, 1)


def test_symmetrized_kernel_small_values():
    assert build_R(1, 2) == LaurentPolynomial.const(2, 1)


@pytest.mark.parametrize("s,t", [(1, 2), (2, 2), (1, 3), (2, 3)])
def test_symmetrized_kernel_matches_rational_evaluation(s, t):
    # oracle: evaluate the kernel at an exact point and sum over all
    # argument orders, bypassing asym and polynomial division entirely
    m = s + t - 1
    ov = build_P(s, t)
    r = build_R(s, t)
    pt = [Fraction(k + 2, 2 * k + 1) for k in range(m)]
    want = Fraction(0)
    for p in permutations(range(m)):
        arranged = [pt[p[i]] for i in range(m)]
        v = vandermonde(m).eval(arranged) if m > 1 else Fraction(1)
        want += Fraction(ov.numerator.eval(arranged)) / v
    assert r.eval(pt) == want


def test_kernel_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_P(0, 1)
    with pytest.raises(ValueError):
        build_P(1, 0)
    with pytest.raises(ValueError):
        build_P(-1, 3)


def test_one_sided_kernel_matches_pair_construction():
    # s = 0 collapses the per-variable binomials; the leftover agrees with
    # the dedicated pairwise kernel of the generating-function module
    from asmkit.genfun import s0_kernel_sym
    for t in (2, 3, 4):
        assert build_R(0, t) == s0_kernel_sym(t - 1)


# -- inversion invariance -----------------------------------------------------


def test_inversion_invariance_detects_invariant_and_not():
    z = LaurentPolynomial.variable(1, 0)
    zinv = LaurentPolynomial.monomial(1, {0: -1})
    ok, witness = check_inversion_invariance(z + zinv)
    assert ok and witness is None
    bad, witness = check_inversion_invariance(z + 1)
    assert not bad and witness is not None


def test_inversion_invariance_single_slot():
    p = lp(2, {(1, 1): 1, (-1, 1): 1})
    ok, _ = check_inversion_invariance(p, var=0)
    assert ok
    ok, _ = check_inversion_invariance(p, var=1)
    assert not ok


def test_symmetrized_kernel_is_inversion_invariant_small():
    for s, t in ((1, 2), (2, 2), (1, 3), (2, 3)):
        ok, witness = check_inversion_invariance(build_R(s, t))
        assert ok, (s, t, witness)


# -- gamma expansion ----------------------------------------------------------


def gamma(nvars, var):
    return lp(nvars, {tuple(1 if i == var else 0 for i in range(nvars)): 1,
                      (0,) * nvars: -2,
                      tuple(-1 if i == var else 0 for i in range(nvars)): 1})


def test_gamma_expand_of_gamma_itself():
    g = gamma(1, 0)
    assert gamma_expand(g) == {(1,): 1}
    assert gamma_expand(g * g) == {(2,): 1}


def test_gamma_expand_multivariate():
    g1, g2 = gamma(2, 0), gamma(2, 1)
    p = 2 * g1 * g1 * g2 + 3 * g2 + LaurentPolynomial.const(2, 4)
    assert gamma_expand(p) == {(2, 1): 2, (0, 1): 3, (0, 0): 4}


def test_gamma_expand_round_trip_on_kernel():
    r = build_R(2, 2)
    coeffs = gamma_expand(r)
    assert gamma_combine(coeffs, r.nvars) == r
    assert all(isinstance(c, int) and c >= 0 for c in coeffs.values())


def test_gamma_expand_rejects_plain_variable():
    z = LaurentPolynomial.variable(1, 0)
    with pytest.raises(GammaExpandError):
        gamma_expand(z)
    with pytest.raises(GammaExpandError):
        gamma_expand(lp(1, {(-2,): 1}))


@given(st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.integers(-5, 5), max_size=4))
def test_gamma_expand_inverts_gamma_combine(d):
    p = gamma_combine(d, 2)
    assert gamma_combine(gamma_expand(p), 2) == p


def test_over_vandermonde_wrapper():
    ov = OverVandermonde(LaurentPolynomial.variable(2, 0))
    assert ov.nvars == 2
    assert ov.symmetrized() == LaurentPolynomial.const(2, -1)
    assert ov.classes() == {(1, 0): 1}
