"""Difference operators, extended sums, right inverses, and V/W calculus."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmkit.shiftcalc import (
    Bound,
    ConstantVector,
    OperatorSpec,
    OrdinaryPolynomial,
    antisym_seed_to_a,
    apply_inverse,
    apply_laurent_stencil,
    apply_operator,
    apply_shift,
    apply_vw,
    binom_ext,
    check_inverse_clauses,
    check_iterated_inverse_conversion,
    delta_lower,
    delta_upper,
    diagonal,
    ext_sum,
    interpolate_on_grid,
    inv_delta_lower,
    inv_delta_upper,
    inv_power,
    op_v,
    op_w,
    op_w_inverse,
    random_polynomial,
    rename_slots,
    shift,
    swap_vars,
    verify_antisymmetry,
    verify_shift_antisymmetry,
    verify_transfer_conjecture,
)
from asmkit.laurent import LaurentPolynomial


def P(vars_, terms):
    return OrdinaryPolynomial(vars_, terms)


X1 = OrdinaryPolynomial.variable("x")
Y1 = OrdinaryPolynomial.variable("y")


def poly_strategy(names=("x", "y"), max_deg=3):
    expo = st.tuples(*[st.integers(0, max_deg)] * len(names))
    return st.dictionaries(expo, st.integers(-6, 6), max_size=5).map(
        lambda d: OrdinaryPolynomial(tuple(sorted(names)), d))


# -- binomials ---------------------------------------------------------------


def test_binom_ext_values():
    assert binom_ext(5, 2) == 10
    assert binom_ext(-3, 2) == 6
    assert binom_ext(-1, 3) == -1
    assert binom_ext(4, 0) == 1
    assert binom_ext(3, -1) == 0
    assert binom_ext(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_ext(2, 5) == 0


# -- polynomial basics --------------------------------------------------------


def test_construction_checks():
    with pytest.raises(ValueError):
        OrdinaryPolynomial(("y", "x"), {})
    with pytest.raises(ValueError):
        OrdinaryPolynomial(("x",), {(-1,): 1})
    with pytest.raises(ValueError):
        OrdinaryPolynomial(("x",), {(1, 2): 1})


def test_equality_ignores_unused_variables():
    a = P(("x", "y"), {(1, 0): 2})
    b = P(("x",), {(1,): 2})
    assert a == b
    assert P(("x",), {}) == 0
    assert OrdinaryPolynomial.const(4) == 4


def test_arithmetic_and_eval():
    p = (X1 + Y1) * (X1 - Y1)
    assert p == X1 * X1 - Y1 * Y1
    assert p.eval({"x": 5, "y": 3}) == 16
    part = p.eval({"y": 2})
    assert part == X1 * X1 - 4
    assert (X1 ** 3).eval({"x": Fraction(1, 2)}) == Fraction(1, 8)


def test_subs_affine_shifts_and_renames():
    p = X1 * X1 + 3 * X1
    assert p.subs_affine("x", "x", 1) == X1 * X1 + 5 * X1 + 4
    assert p.subs_affine("x", "y", 0) == Y1 * Y1 + 3 * Y1
    assert p.subs_affine("x", None, 2) == 10
    q = (X1 + Y1).subs_affine("x", "y", 3)
    assert q == 2 * Y1 + 3


@given(poly_strategy(), st.integers(-3, 3), st.integers(-4, 4))
def test_subs_affine_agrees_with_evaluation(p, c, a):
    shifted = p.subs_affine("x", "x", c)
    assert shifted.eval({"x": a, "y": 2}) == p.eval({"x": a + c, "y": 2})


def test_coefficients_in_splits_by_power():
    p = X1 * X1 * Y1 + 2 * X1 * X1 + 5 * Y1
    split = p.coefficients_in("x")
    assert split[2] == Y1 + 2
    assert split[0] == 5 * Y1


def test_render():
    assert (X1 * X1 - Y1 + 1).render() == "x^2 - y + 1"
    assert OrdinaryPolynomial.zero().render() == "0"


# -- extended sums -------------------------------------------------------------


def brute_ext_sum(p, var, lo, hi, env):
    if hi >= lo:
        return sum(p.eval({**env, var: v}) for v in range(lo, hi + 1))
    if hi == lo - 1:
        return 0
    return -sum(p.eval({**env, var: v}) for v in range(hi + 1, lo))


def test_ext_sum_frozen_values():
    assert ext_sum(X1, "x", 1, 3) == 6
    assert ext_sum(X1, "x", 4, 3) == 0
    assert ext_sum(X1, "x", 5, 3) == -4
    assert ext_sum(OrdinaryPolynomial.const(1), "x", 0, ("x", 0)) == X1 + 1


@given(poly_strategy(("x",), max_deg=4), st.integers(-5, 5),
       st.integers(-5, 5))
def test_ext_sum_matches_brute_force(p, lo, hi):
    got = ext_sum(p, "x", lo, hi)
    val = got if isinstance(got, int) else got.eval({})
    assert val == brute_ext_sum(p, "x", lo, hi, {})


@given(poly_strategy(max_deg=3), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-3, 3))
def test_ext_sum_symbolic_bounds_specialize(p, lo, hi, y):
    # sum with a variable upper bound, then pin the bound variable
    sym = ext_sum(p, "x", lo, ("b", 0))
    assert sym.eval({"b": hi, "y": y}) == brute_ext_sum(
        p, "x", lo, hi, {"y": y})


def test_ext_sum_variable_absent_from_summand():
    assert ext_sum(Y1, "x", 2, 5) == 4 * Y1
    assert ext_sum(Y1, "x", 2, ("z", 0)) == \
        Y1 * (OrdinaryPolynomial.variable("z") - 1)


# -- right inverses -------------------------------------------------------------


@given(poly_strategy(("x",), max_deg=4), st.integers(-4, 6))
def test_forward_inverse_sections(p, z):
    assert delta_upper(inv_delta_upper(p, "x", z), "x") == p
    back = inv_delta_upper(delta_upper(p, "x"), "x", z)
    assert back == p - p.eval({"x": z + 1})


@given(poly_strategy(("x",), max_deg=4), st.integers(-4, 6))
def test_backward_inverse_sections(p, z):
    assert delta_lower(inv_delta_lower(p, "x", z), "x") == p
    back = inv_delta_lower(delta_lower(p, "x"), "x", z)
    assert back == p - p.eval({"x": z - 1})


def test_inverse_sections_with_symbolic_bound():
    p = X1 ** 2
    got = inv_delta_lower(delta_lower(p, "x"), "x", ("z", 0))
    z = OrdinaryPolynomial.variable("z")
    assert got == p - (z - 1) ** 2


@given(poly_strategy(("x",), max_deg=3))
def test_forward_from_backward_inverse(p):
    # the forward inverse equals shifting both the variable and the bound
    # of the backward inverse
    lhs = inv_delta_upper(p, "x", ("z", 0))
    rhs = inv_delta_lower(p, "x", ("z", 0))
    rhs = shift(shift(rhs, "x", -1), "z", 1)
    assert lhs == rhs


@given(poly_strategy(max_deg=3), st.integers(-3, 3))
def test_inverse_commutes_with_unrelated_difference(p, z):
    a = delta_upper(inv_delta_upper(p, "x", z), "y")
    b = inv_delta_upper(delta_upper(p, "y"), "x", z)
    assert a == b


@given(poly_strategy(("x",), max_deg=3))
def test_backward_inverse_shift_commutation(p):
    # moving E^{-1} through the backward inverse also steps the bound
    lhs = inv_delta_lower(shift(p, "x", -1), "x", ("z", 0))
    rhs = shift(shift(inv_delta_lower(p, "x", ("z", 0)), "x", -1), "z", -1)
    assert lhs == rhs


def test_constant_vector_shape_and_indexing():
    cv = ConstantVector(-3, (7, 5, 3))
    assert len(cv) == 3
    assert cv.value_at(-3) == 7 and cv.value_at(-1) == 3
    with pytest.raises(IndexError):
        cv.value_at(0)
    with pytest.raises(ValueError):
        ConstantVector(-2, (1,))
    fn = ConstantVector.from_function(-2, lambda j: -2 * j + 1)
    assert fn.values == (5, 3)


@given(poly_strategy(("x",), max_deg=3), st.integers(-2, -1),
       st.data())
def test_iterated_inverse_order_matches_composition(p, i, data):
    vals = tuple(
        data.draw(st.integers(-3, 3)) for _ in range(-i))
    cv = ConstantVector(i, vals)
    manual = p
    for j in range(-1, i - 1, -1):
        manual = inv_delta_upper(manual, "x", cv.value_at(j))
    assert inv_power(p, "x", cv, "Delta") == manual


@given(poly_strategy(("x",), max_deg=3), st.integers(-2, -1), st.data())
def test_iterated_forward_to_backward_pointwise(p, i, data):
    # forward-inverse towers match backward ones after shifting the
    # variable by the power and each constant by position plus two
    vals = tuple(data.draw(st.integers(-3, 3)) for _ in range(-i))
    cv = ConstantVector(i, vals)
    cv2 = ConstantVector(
        i, tuple(v + j + 2 for v, j in zip(vals, range(i, 0))))
    lhs = inv_power(p, "x", cv, "Delta")
    rhs = shift(inv_power(p, "x", cv2, "delta"), "x", i)
    assert lhs == rhs


# -- operator specs ----------------------------------------------------------------


def test_apply_shift_specs():
    p = X1 ** 2
    assert apply_shift(p, OperatorSpec("E", "x", shift=2)) == \
        (X1 + 2) ** 2
    assert apply_shift(p, OperatorSpec("E", "x", shift=1, power=3)) == \
        (X1 + 3) ** 2
    assert apply_shift(p, OperatorSpec("Delta", "x")) == 2 * X1 + 1
    assert apply_shift(p, OperatorSpec("delta", "x")) == 2 * X1 - 1
    with pytest.raises(ValueError):
        apply_shift(p, OperatorSpec("V", "x", "y"))


def test_apply_inverse_specs():
    one = OrdinaryPolynomial.const(1)
    spec = OperatorSpec("InvDelta", "x", constant=("z", 0))
    z = OrdinaryPolynomial.variable("z")
    assert apply_inverse(one, spec) == X1 - z - 1
    spec2 = OperatorSpec("Invdelta", "x", constant=2)
    assert apply_inverse(one, spec2) == X1 - 1
    with pytest.raises(ValueError):
        apply_inverse(one, OperatorSpec("InvDelta", "x"))
    cv = ConstantVector(-1, (4,))
    assert apply_inverse(one, OperatorSpec(
        "InvDelta", "x", constants=cv)) == X1 - 5


def test_apply_operator_dispatch():
    p = X1 * Y1
    assert apply_operator(p, OperatorSpec("Swap", "x", "y")) == p
    q = X1 ** 2 * Y1
    assert apply_operator(q, OperatorSpec("Swap", "x", "y")) == Y1 ** 2 * X1


# -- V and W ------------------------------------------------------------------------


def test_w_is_shifted_v():
    p = X1 ** 2 * Y1 + 3 * Y1
    assert op_w(p, "x", "y") == shift(op_v(p, "x", "y"), "x", 1)


@given(poly_strategy(max_deg=3))
def test_w_inverse_round_trip(p):
    assert op_w_inverse(op_w(p, "x", "y"), "x", "y") == p
    assert op_w(op_w_inverse(p, "x", "y"), "x", "y") == p


def test_w_factors_commute():
    p = P(("u", "x", "y"), {(1, 2, 0): 1, (0, 1, 1): -2})
    a = op_w(op_w(p, "x", "y"), "y", "u")
    b = op_w(op_w(p, "y", "u"), "x", "y")
    assert a == b


def test_swap_vars_is_involution():
    p = X1 ** 2 * Y1 - 4 * X1
    assert swap_vars(swap_vars(p, "x", "y"), "x", "y") == p


def dense_antisym(p, slots):
    from itertools import permutations as perms
    total = OrdinaryPolynomial.zero()
    for pi in perms(range(len(slots))):
        inv = sum(1 for a in range(len(pi)) for b in range(a + 1, len(pi))
                  if pi[a] > pi[b])
        q = rename_slots(p, list(slots), [slots[j] for j in pi])
        total = total + ((-1) ** inv) * q
    return total


def test_verify_antisymmetry():
    seed = P(("x", "y"), {(2, 0): 1, (1, 1): 3})
    anti = dense_antisym(seed, ("x", "y"))
    assert verify_antisymmetry(anti, ("x", "y"))
    assert not verify_antisymmetry(X1 + Y1, ("x", "y"))


@given(poly_strategy(("u", "x", "y"), max_deg=2))
def test_seed_to_shift_antisymmetric(b):
    slots = ("u", "x", "y")
    anti = dense_antisym(b, slots)
    a = antisym_seed_to_a(anti, slots)
    ok, witness = verify_shift_antisymmetry(a, slots)
    assert ok, witness


def test_shift_antisymmetry_counterexample():
    ok, pair = verify_shift_antisymmetry(X1 ** 2 * Y1, ("x", "y"))
    assert not ok and pair == ("x", "y")


# -- slot plumbing -------------------------------------------------------------------


def test_rename_slots_handles_overlap():
    p = X1 ** 2 * Y1
    q = rename_slots(p, ("x", "y"), ("y", "x"))
    assert q == Y1 ** 2 * X1


def test_diagonal_substitution():
    p = X1 * Y1 + X1
    w = OrdinaryPolynomial.variable("w")
    assert diagonal(p, ("x", "y"), "w") == w * w + w


def test_laurent_stencil_application():
    op = LaurentPolynomial(2, {(1, 0): 1, (0, -1): -1})
    p = X1 ** 2 + Y1
    got = apply_laurent_stencil(op, p, ("x", "y"))
    want = (X1 + 1) ** 2 + Y1 - (X1 ** 2 + Y1 - 1)
    assert got == want


# -- interpolation --------------------------------------------------------------------


@given(poly_strategy(max_deg=3))
def test_interpolation_recovers_polynomial(p):
    got = interpolate_on_grid(
        lambda t: p.eval({"x": t[0], "y": t[1]}), ("x", "y"), (3, 3))
    assert got == p


# -- the transfer identity =------------------------------------------------------------


def test_transfer_trivial_when_one_sided():
    # a single slot: both operator products reduce to the same triple shift
    a = X1 ** 3 - 2 * X1
    ok, diff = verify_transfer_conjecture(a, ("x",), 1, 1)
    assert ok, diff


def test_transfer_rejects_generic_polynomial():
    a = P(("x", "y"), {(2, 1): 1})
    ok, _ = verify_transfer_conjecture(a, ("x", "y"), 1, 2)
    assert not ok


def test_transfer_holds_on_counting_polynomials():
    from asmkit.mt import alpha_poly, alpha_slot_names
    for s, t in ((1, 2), (2, 2)):
        n = s + t - 1
        a = alpha_poly(n)
        ok, diff = verify_transfer_conjecture(a, alpha_slot_names(n), s, t)
        assert ok, (s, t)


# -- randomized clause checks =----------------------------------------------------------


def test_random_polynomial_respects_bounds():
    rng = random.Random(5)
    p = random_polynomial(rng, ("x", "y"), degree=2, terms=3, bound=4)
    assert set(p.vars) <= {"x", "y"}
    assert all(max(e, default=0) <= 2 for e in p.terms)


def test_inverse_clauses_on_many_seeds():
    for seed in range(25):
        ok, witness = check_inverse_clauses(random.Random(seed))
        assert ok, witness


def test_iterated_inverse_conversion_on_many_seeds():
    for seed in range(25):
        ok, witness = check_iterated_inverse_conversion(random.Random(seed))
        assert ok, witness


def test_iterated_inverse_conversion_needs_the_shift():
    # dropping the +j+2 adjustment on the constants breaks the conversion
    p = P(("x",), {(2,): 1})
    lhs = inv_power(p, "x", ConstantVector(-1, (3,)), "Delta")
    rhs = shift(inv_power(p, "x", ConstantVector(-1, (3,)), "delta"),
                "x", -1)
    assert lhs != rhs
