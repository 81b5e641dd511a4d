"""Monotone triangles, their counting function, and its deformations."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from asmkit.laurent import X, XPoly
from asmkit.mt import (
    MTStatistics,
    MonotoneTriangle,
    _difference_stencil,
    alpha_eval,
    alpha_eval_sum_op,
    alpha_m_eval,
    alpha_poly,
    alpha_poly_first,
    alpha_poly_last,
    alpha_slot_names,
    check_cyclic_rotation,
    check_profile_reflection,
    check_prolongation,
    count_mt,
    enumerate_mt,
    ext_range,
    pattern_genfun,
)
from asmkit.shiftcalc import (
    ConstantVector,
    interpolate_on_grid,
    inv_power,
    rename_slots,
    shift,
)

ASM_TOTALS = [1, 2, 7, 42, 429, 7436]


def strict_bottom(n, span=8):
    return st.lists(
        st.integers(-span, span), min_size=n, max_size=n, unique=True,
    ).map(lambda v: tuple(sorted(v)))


def any_ints(n, span=5):
    return st.tuples(*[st.integers(-span, span)] * n)


# -- triangle objects -----------------------------------------------------------


def test_triangle_shape_validation():
    with pytest.raises(ValueError):
        MonotoneTriangle(((1, 2), (1, 2, 3)))
    with pytest.raises(ValueError):
        MonotoneTriangle(((1,), (2, 2)))
    with pytest.raises(ValueError):
        MonotoneTriangle(((3,), (1, 2)))


def test_triangle_statistics():
    t = MonotoneTriangle(((2,), (1, 3), (1, 2, 3)))
    assert t.order == 3
    assert t.bottom == (1, 2, 3)
    assert t.top_entry == 2
    assert t.left_diag_eq_first() == 2
    assert t.right_diag_eq_last() == 2
    assert t.pattern_count() == 1
    assert t.statistics() == MTStatistics(2, 2, 1)


def test_mirror_swaps_diagonal_statistics():
    t = MonotoneTriangle(((2,), (1, 3), (1, 2, 3)))
    m = t.mirrored()
    assert m.bottom == (-3, -2, -1)
    assert m.left_diag_eq_first() == t.right_diag_eq_last()
    assert m.right_diag_eq_last() == t.left_diag_eq_first()
    assert m.pattern_count() == t.pattern_count()
    assert m.mirrored() == t


# -- enumeration ------------------------------------------------------------------


def test_enumerate_small_cases():
    assert len(enumerate_mt((1, 2, 3))) == 7
    tops = sorted(t.top_entry for t in enumerate_mt((1, 2, 3)))
    assert tops == [1, 1, 2, 2, 2, 3, 3]
    assert len(enumerate_mt((5,))) == 1


def test_enumerate_rejects_weak_bottom():
    with pytest.raises(ValueError):
        enumerate_mt((1, 1, 2))
    with pytest.raises(ValueError):
        enumerate_mt((3, 1))


@given(strict_bottom(3))
def test_count_matches_enumeration(bottom):
    assert count_mt(bottom) == len(enumerate_mt(bottom))


def test_asm_totals():
    for n, total in enumerate(ASM_TOTALS, start=1):
        assert count_mt(tuple(range(1, n + 1))) == total


# -- the counting function ----------------------------------------------------------


def test_alpha_on_increasing_bottoms():
    assert alpha_eval(3, (1, 2, 3)) == 7
    assert alpha_eval(4, (1, 3, 5, 7)) == count_mt((1, 3, 5, 7))
    assert alpha_eval(3, (1, 3, 6)) == count_mt((1, 3, 6))
    for n, total in enumerate(ASM_TOTALS, start=1):
        assert alpha_eval(n, tuple(range(1, n + 1))) == total


def test_alpha_outside_increasing_region():
    assert alpha_eval(2, (5, 3)) == -1
    assert alpha_eval(1, (9,)) == 1


@given(any_ints(2))
def test_alpha_two_slots_closed_form(k):
    assert alpha_eval(2, k) == k[1] - k[0] + 1


@given(any_ints(3))
@settings(max_examples=30)
def test_alpha_matches_summation_recursions(k):
    v = alpha_eval(3, k)
    assert alpha_eval_sum_op(3, k, variant="last") == v
    assert alpha_eval_sum_op(3, k, variant="first") == v


def test_summation_recursions_larger_case():
    k = (2, -1, 3, 0)
    v = alpha_eval(4, k)
    assert alpha_eval_sum_op(4, k, variant="last") == v
    assert alpha_eval_sum_op(4, k, variant="first") == v


@given(any_ints(3), st.integers(-3, 3))
@settings(max_examples=25)
def test_alpha_shift_invariance(k, c):
    assert alpha_eval(3, tuple(v + c for v in k)) == alpha_eval(3, k)


@given(any_ints(3))
@settings(max_examples=25)
def test_alpha_rotation_identity(k):
    rotated = k[1:] + (k[0] - 3,)
    assert alpha_eval(3, k) == alpha_eval(3, rotated)


@given(any_ints(4, span=4))
@settings(max_examples=15)
def test_alpha_rotation_identity_even_order(k):
    rotated = k[1:] + (k[0] - 4,)
    assert alpha_eval(4, k) == -alpha_eval(4, rotated)


def test_ext_range_orientations():
    assert ext_range(1, 3) == [(1, 1), (2, 1), (3, 1)]
    assert ext_range(4, 3) == []
    assert ext_range(6, 3) == [(4, -1), (5, -1)]


# -- polynomial forms -----------------------------------------------------------------


def test_alpha_poly_first_golden():
    p = alpha_poly_first(2, (4,))
    assert p.render() == "-k1 + 5"
    assert p.eval({"k1": 2}) == 3


def test_alpha_poly_matches_pointwise():
    p = alpha_poly(3)
    names = alpha_slot_names(3)
    assert names == ("k1", "k2", "k3")
    for k in ((1, 2, 3), (0, 4, 2), (-2, -2, -2), (3, 0, 5)):
        assert p.eval(dict(zip(names, k))) == alpha_eval(3, k)


def test_alpha_poly_degree_bound():
    p = alpha_poly(3)
    assert all(p.degree_in(v) <= 2 for v in ("k1", "k2", "k3"))


# -- deformation ------------------------------------------------------------------------


def test_alpha_m_reduces_to_alpha():
    got = alpha_m_eval(2, (0, 2), 0)
    assert got == 2 + X
    assert got.subs(1) == alpha_eval(2, (0, 2))
    for k in ((1, 2, 3), (0, 2, 5)):
        assert alpha_m_eval(3, k, 0).subs(1) == alpha_eval(3, k)


def test_alpha_m_single_slot_is_binomial():
    assert alpha_m_eval(1, (4,), 2) == XPoly((6,))
    assert alpha_m_eval(1, (-1,), 3) == XPoly((-1,))


def test_alpha_m_top_row_grading():
    assert alpha_m_eval(2, (0, 3), 0) == 2 + 2 * X
    assert alpha_m_eval(2, (0, 3), 1) == 3 + 3 * X
    assert alpha_m_eval(2, (0, 3), 2) == 3 + X


def test_alpha_m_is_binomial_weighted_triangle_sum():
    from asmkit.shiftcalc import binom_ext
    for bottom, m in (((0, 2), 1), ((0, 3), 2), ((1, 3, 4), 1),
                      ((1, 2, 3), 2)):
        want = XPoly(())
        for t in enumerate_mt(bottom):
            want = want + X ** t.pattern_count() * binom_ext(t.top_entry, m)
        assert alpha_m_eval(len(bottom), bottom, m) == want


# -- pattern statistics -------------------------------------------------------------------


def test_pattern_genfun_goldens():
    assert pattern_genfun((1, 2, 3)) == 6 + X
    assert pattern_genfun((0, 2)) == 2 + X
    assert pattern_genfun((0, 2), top=1) == X
    assert pattern_genfun((5,)) == XPoly((1,))


def test_pattern_genfun_total_is_count():
    for bottom in ((1, 2, 3), (0, 2, 4), (1, 3, 4, 6)):
        assert pattern_genfun(bottom).subs(1) == count_mt(bottom)


@given(strict_bottom(3, span=5))
@settings(max_examples=20)
def test_pattern_genfun_matches_enumeration(bottom):
    triangles = enumerate_mt(bottom)
    by_top = {}
    for t in triangles:
        poly = by_top.setdefault(t.top_entry, [0] * 16)
        poly[t.pattern_count()] += 1
    total = pattern_genfun(bottom)
    assert total == sum((XPoly(tuple(v)) for v in by_top.values()),
                        XPoly(()))
    for top, vec in by_top.items():
        assert pattern_genfun(bottom, top=top) == XPoly(tuple(vec))


# -- operator identity checks ---------------------------------------------------------


class TestProfileReflection:
    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            check_profile_reflection(0, 1, 0)
        with pytest.raises(ValueError):
            check_profile_reflection(3, 1, -2, xs=(1,))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_forward_orders(self, n, d):
        for i in range(min(3, n)):
            ok, witness = check_profile_reflection(n, d, i)
            assert ok, witness

    @pytest.mark.parametrize("n,d", [(2, 1), (3, 2), (4, 1), (4, 3)])
    def test_inverse_orders(self, n, d):
        rng = random.Random(10 * n + d)
        for i in (-1, -2):
            xs = tuple(rng.randint(-5, 8) for _ in range(-i))
            ok, witness = check_profile_reflection(n, d, i, xs)
            assert ok, witness

    def test_hand_value_order_one(self):
        # n=1, d=1, i=-1: both profiles reduce to x-1 at the stated points
        for x in (-3, 0, 4):
            ok, witness = check_profile_reflection(1, 1, -1, (x,))
            assert ok, witness


class TestCyclicRotation:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_forward_orders(self, n):
        for i in range(3):
            ok, witness = check_cyclic_rotation(n, i)
            assert ok, witness

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_inverse_orders(self, n):
        rng = random.Random(n)
        for i in (-1, -2):
            xs = tuple(rng.randint(-5, 8) for _ in range(-i))
            ok, witness = check_cyclic_rotation(n, i, xs)
            assert ok, witness

    def test_detects_wrong_constants(self):
        # shifting one backward constant off its mate breaks the identity
        p = alpha_poly(2)
        names = alpha_slot_names(2)
        q = rename_slots(p, names, names[1:] + names[:1])
        lhs = inv_power(p, "k1", ConstantVector(-1, (3,)), "Delta")
        bad = inv_power(q, "k1", ConstantVector(-1, (4,)), "delta")
        assert lhs != -shift(bad, "k1", -3)


class TestProlongation:
    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            check_prolongation(2, 0, 1, ())
        with pytest.raises(ValueError):
            check_prolongation(2, -1, 3, (1,))
        with pytest.raises(ValueError):
            check_prolongation(2, -1, 1, (1, 2))
        with pytest.raises(ValueError):
            check_prolongation(2, -1, 1, (1,), kind="up")

    def test_hand_case_order_one(self):
        # n=1, i=-1: forward side is k-x-1 against -(order-2 value),
        # backward side is k-x+1 against the plain order-2 value
        for x in (-2, 0, 5):
            for kind in ("Delta", "delta"):
                ok, witness = check_prolongation(
                    1, -1, 1, (x,), kind, random.Random(x))
                assert ok, witness

    @pytest.mark.parametrize("n,i,j", [
        (2, -1, 1), (2, -1, 2), (2, -2, 1),
        (3, -1, 2), (3, -2, 3), (3, -2, 1),
    ])
    @pytest.mark.parametrize("kind", ["Delta", "delta"])
    def test_small_orders(self, n, i, j, kind):
        rng = random.Random(1000 * n + 100 * j + len(kind))
        xs = tuple(rng.randint(-4, 7) for _ in range(-i))
        ok, witness = check_prolongation(n, i, j, xs, kind, rng)
        assert ok, witness

    def test_mismatched_splice_fails(self):
        # splicing the constants on the wrong side must be caught
        rng = random.Random(3)
        base = [rng.randint(-4, 6) for _ in range(2)]
        xs = (2,)
        slot = interpolate_on_grid(
            lambda t: alpha_eval(2, (t[0], base[1])), ("kj",), (1,))
        lhs = inv_power(slot, "kj", ConstantVector(-1, xs), "Delta")
        vals = []
        for v in (0, 1, 2):
            point = (xs[0], v, base[1])
            stencil = _difference_stencil([(2, "delta", 1)], point)
            vals.append(lhs.eval({"kj": v})
                        == -sum(w * alpha_eval(3, pt) for w, pt in stencil))
        assert not all(vals)
