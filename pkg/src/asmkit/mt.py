"""Monotone triangles: enumeration, statistics, and the counting polynomial.

A monotone triangle is a triangular integer array, one entry wider per row,
strictly increasing along rows and weakly increasing along both diagonal
directions.  The number of triangles with a fixed strictly increasing
bottom row extends to a polynomial in the bottom entries; this module
evaluates that polynomial anywhere by three independent routes:

* honest enumeration (strictly increasing bottoms only),
* the recursive summation operator in its two variants, built on extended
  interval sums,
* a closed operator form: a product of two-variable shift operators applied
  to a binomial determinant.

The third route is the fast engine; the others serve as oracles against it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .laurent import XPoly
from .shiftcalc import (
    ConstantVector,
    OrdinaryPolynomial,
    binom_ext,
    delta_lower,
    delta_upper,
    interpolate_on_grid,
    inv_power,
    rename_slots,
    shift,
)


@dataclass(frozen=True)
class MTStatistics:
    """The three statistics the verification suites track per triangle."""

    left_diag_eq_first: int
    top_entry: int
    pattern_count: int


@dataclass(frozen=True)
class MonotoneTriangle:
    """Rows from top (one entry) to bottom; validated on construction."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a triangle needs at least one row")
        for r, row in enumerate(self.rows):
            if len(row) != r + 1:
                raise ValueError(f"row {r + 1} must have {r + 1} entries")
            if any(row[j] >= row[j + 1] for j in range(r)):
                raise ValueError("rows must increase strictly")
        for r in range(len(self.rows) - 1):
            up, low = self.rows[r], self.rows[r + 1]
            for j in range(len(up)):
                if not low[j] <= up[j] <= low[j + 1]:
                    raise ValueError("diagonal monotonicity violated")

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> Tuple[int, ...]:
        return self.rows[-1]

    @property
    def top_entry(self) -> int:
        return self.rows[0][0]

    def left_diag_eq_first(self) -> int:
        """How many first-of-row entries equal the bottom-left entry."""
        v = self.rows[-1][0]
        return sum(1 for row in self.rows if row[0] == v)

    def right_diag_eq_last(self) -> int:
        v = self.rows[-1][-1]
        return sum(1 for row in self.rows if row[-1] == v)

    def pattern_count(self) -> int:
        """Occurrences of a strictly pinched entry between its supports."""
        total = 0
        for r in range(len(self.rows) - 1):
            up, low = self.rows[r], self.rows[r + 1]
            for j in range(len(up)):
                if low[j] < up[j] < low[j + 1]:
                    total += 1
        return total

    def statistics(self) -> MTStatistics:
        return MTStatistics(self.left_diag_eq_first(), self.top_entry,
                            self.pattern_count())

    def mirrored(self) -> "MonotoneTriangle":
        """Reflect left to right (negating entries keeps rows increasing)."""
        return MonotoneTriangle(
            tuple(tuple(-x for x in reversed(row)) for row in self.rows))


def _interlacings(row: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Strictly increasing rows fitting between consecutive entries of row."""
    m = len(row) - 1

    def rec(j: int, lo: int):
        if j == m:
            yield ()
            return
        for v in range(max(row[j], lo), row[j + 1] + 1):
            for rest in rec(j + 1, v + 1):
                yield (v,) + rest

    yield from rec(0, min(row))


def enumerate_mt(bottom: Sequence[int]) -> List[MonotoneTriangle]:
    """All monotone triangles with the given strictly increasing bottom row."""
    bottom = tuple(bottom)
    if any(bottom[j] >= bottom[j + 1] for j in range(len(bottom) - 1)):
        raise ValueError("bottom row must increase strictly")
    if len(bottom) == 1:
        return [MonotoneTriangle((bottom,))]
    out = []
    for mid in _interlacings(bottom):
        for sub in enumerate_mt(mid):
            out.append(MonotoneTriangle(sub.rows + (bottom,)))
    return out


@lru_cache(maxsize=None)
def count_mt(bottom: Tuple[int, ...]) -> int:
    """Triangle count by dynamic programming over penultimate rows."""
    if len(bottom) == 1:
        return 1
    return sum(count_mt(mid) for mid in _interlacings(bottom))


# -- the closed operator form ---------------------------------------------------


@lru_cache(maxsize=None)
def _pair_op_expansion(n: int, deformed: bool):
    """Expansion of the product over pairs p < q of (id + E_p E_q + c E_p).

    c is -1 for the plain count and the linear statistic polynomial minus 2
    in the deformed case.  Returns a dict from shift-exponent tuples to
    coefficients (ints, or XPoly when deformed).
    """
    c = XPoly((-2, 1)) if deformed else -1
    terms: Dict[Tuple[int, ...], object] = {(0,) * n: 1}
    for p in range(n):
        for q in range(p + 1, n):
            new: Dict[Tuple[int, ...], object] = {}

            def put(e, v):
                s = new.get(e)
                if s is None:
                    new[e] = v
                else:
                    s = s + v
                    if s:
                        new[e] = s
                    else:
                        del new[e]

            for e, v in terms.items():
                put(e, v)
                both = list(e)
                both[p] += 1
                both[q] += 1
                put(tuple(both), v)
                single = list(e)
                single[p] += 1
                put(tuple(single), v * c)
            terms = new
    return terms


@lru_cache(maxsize=None)
def _det_denominator(n: int) -> int:
    out = 1
    f = 1
    for j in range(1, n):
        f *= j
        out *= f
    return out


@lru_cache(maxsize=300000)
def alpha_eval(n: int, k: Tuple[int, ...]) -> int:
    """The counting polynomial at an arbitrary integer bottom row.

    Computed from the operator form: the pair-operator expansion applied to
    the Vandermonde-like binomial determinant, which reduces to a product
    of pairwise differences.
    """
    k = tuple(k)
    if len(k) != n:
        raise ValueError("bottom row length must match the order")
    if n == 1:
        return 1
    ops = _pair_op_expansion(n, False)
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    total = 0
    for a, c in ops.items():
        shifted = tuple(k[i] + a[i] for i in range(n))
        prod = c
        for p, q in pairs:
            d = shifted[q] - shifted[p]
            if not d:
                prod = 0
                break
            prod *= d
        total += prod
    den = _det_denominator(n)
    q, r = divmod(total, den)
    if r:
        raise ArithmeticError("operator form gave a non-integer value")
    return q


def _bareiss_det(mat) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(mat)
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col]:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                m[i][j] = (m[i][j] * m[col][col]
                           - m[i][col] * m[col][j]) // prev
            m[i][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def alpha_m_eval(n: int, k: Sequence[int], m: int) -> XPoly:
    """Deformed counting value: a polynomial in the statistic variable.

    The final determinant column is raised by m; the pair operators carry
    the statistic variable.  At m = 0 the value specialized at 1 equals
    alpha_eval.
    """
    k = tuple(k)
    if len(k) != n:
        raise ValueError("bottom row length must match the order")
    if m < 0:
        raise ValueError("the deformation index must be non-negative")
    if n == 1:
        return XPoly((binom_ext(k[0], m),))
    ops = _pair_op_expansion(n, True)
    total = XPoly()
    for a, c in ops.items():
        shifted = [k[i] + a[i] for i in range(n)]
        mat = [[binom_ext(shifted[i], j + (m if j == n - 1 else 0))
                for j in range(n)] for i in range(n)]
        d = _bareiss_det(mat)
        if d:
            total = total + c * d
    return total


# -- the recursive summation operator --------------------------------------------


def ext_range(a: int, b: int):
    """Extended integer range: empty at b = a - 1, negated gap below that."""
    if b >= a:
        return [(v, 1) for v in range(a, b + 1)]
    if b == a - 1:
        return []
    return [(v, -1) for v in range(b + 1, a)]


def alpha_eval_sum_op(n: int, k: Sequence[int], variant: str = "last") -> int:
    """Counting value via the recursive summation operator.

    variant chooses which bound variable the recursion peels off; the two
    recursions define the same polynomial, so their agreement is a real
    consistency check.  Exponentially slower than alpha_eval; oracle use
    only.
    """
    if variant not in ("last", "first"):
        raise ValueError("variant must be 'last' or 'first'")
    memo: Dict[Tuple[int, Tuple[int, ...]], int] = {}

    def alpha(order: int, kt: Tuple[int, ...]) -> int:
        if order == 1:
            return 1
        key = (order, kt)
        got = memo.get(key)
        if got is None:
            got = sum_op(kt, lambda ls: alpha(order - 1, ls))
            memo[key] = got
        return got

    def sum_op(kvec: Tuple[int, ...], fn) -> int:
        if len(kvec) == 1:
            return fn(())
        total = 0
        if variant == "last":
            for val, sgn in ext_range(kvec[-2] + 1, kvec[-1]):
                total += sgn * sum_op(
                    kvec[:-1], lambda ls, _v=val: fn(ls + (_v,)))
            total += sum_op(
                kvec[:-2] + (kvec[-2] - 1,),
                lambda ls: fn(ls + (kvec[-2],)))
        else:
            for val, sgn in ext_range(kvec[0], kvec[1] - 1):
                total += sgn * sum_op(
                    kvec[1:], lambda ls, _v=val: fn((_v,) + ls))
            total += sum_op(
                (kvec[1] + 1,) + kvec[2:],
                lambda ls: fn((kvec[1],) + ls))
        return total

    return alpha(n, tuple(k))


# -- polynomial forms -------------------------------------------------------------


def alpha_poly_first(n: int, rest: Sequence[int]) -> OrdinaryPolynomial:
    """The counting polynomial in the first bottom entry, others fixed.

    Returns a polynomial in the variable k1 of degree at most n - 1.
    """
    rest = tuple(rest)
    if len(rest) != n - 1:
        raise ValueError("rest must fix all entries but the first")
    return interpolate_on_grid(
        lambda t: alpha_eval(n, (t[0],) + rest), ("k1",), (n - 1,))


@lru_cache(maxsize=None)
def alpha_poly(n: int) -> OrdinaryPolynomial:
    """The full counting polynomial in variables k1..kn."""
    names = tuple(f"k{i}" for i in range(1, n + 1))
    return interpolate_on_grid(
        lambda t: alpha_eval(n, t), names, (n - 1,) * n)


def alpha_slot_names(n: int) -> Tuple[str, ...]:
    return tuple(f"k{i}" for i in range(1, n + 1))


# -- pattern generating function ---------------------------------------------------


def pattern_genfun(bottom: Sequence[int], top: Optional[int] = None) -> XPoly:
    """Statistic generating function over triangles with the given bottom.

    Coefficient of the d-th power counts triangles with exactly d strictly
    pinched entries, optionally restricted to a fixed top entry.
    """
    coeffs: Dict[int, int] = {}
    for tri in enumerate_mt(bottom):
        if top is not None and tri.top_entry != top:
            continue
        d = tri.pattern_count()
        coeffs[d] = coeffs.get(d, 0) + 1
    if not coeffs:
        return XPoly()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return XPoly(out)


# -- operator identity checks -------------------------------------------------------


CheckOutcome = Tuple[bool, Optional[tuple]]


def _parity(i: int) -> int:
    return -1 if i % 2 else 1


def alpha_poly_last(n: int, rest: Sequence[int]) -> OrdinaryPolynomial:
    """The counting polynomial in the last bottom entry, others fixed."""
    rest = tuple(rest)
    if len(rest) != n - 1:
        raise ValueError("rest must fix all entries but the last")
    return interpolate_on_grid(
        lambda t: alpha_eval(n, rest + (t[0],)), ("kn",), (n - 1,))


def check_profile_reflection(n: int, d: int, i: int,
                             xs: Optional[Sequence[int]] = None
                             ) -> CheckOutcome:
    """Left forward profile against right backward profile on grid rows.

    With the other entries pinned to multiples of d, the signed forward
    differences of the counting polynomial in its first entry, taken at
    d+1, match the backward differences in the last entry at nd-1.  For
    negative order the right inverses take over, with the constants on the
    backward side reflected to (n+1)d - x.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    p1 = alpha_poly_first(n, tuple(j * d for j in range(2, n + 1)))
    p2 = alpha_poly_last(n, tuple(j * d for j in range(1, n)))
    if i >= 0:
        lhs = _parity(i) * delta_upper(p1, "k1", i).eval({"k1": d + 1})
        rhs = delta_lower(p2, "kn", i).eval({"kn": n * d - 1})
    else:
        if xs is None or len(xs) != -i:
            raise ValueError("negative order needs -i constants")
        ys = tuple((n + 1) * d - x for x in xs)
        lhs = _parity(i) * inv_power(
            p1, "k1", ConstantVector(i, tuple(xs)), "Delta"
        ).eval({"k1": d + 1})
        rhs = inv_power(
            p2, "kn", ConstantVector(i, ys), "delta"
        ).eval({"kn": n * d - 1})
    if lhs == rhs:
        return True, None
    return False, (n, d, i, tuple(xs) if xs else None, lhs, rhs)


def check_cyclic_rotation(n: int, i: int,
                          xs: Optional[Sequence[int]] = None) -> CheckOutcome:
    """Forward profile in the first slot via rotation to the last slot.

    The i-th forward difference of the counting polynomial in its first
    entry matches, up to the sign (-1)^(n-1) and a shift by i-n, the i-th
    backward difference in the rotated argument list that moves the first
    entry to the end.  For negative order the backward constants move to
    x + j - n + 2; the comparison is between full polynomials.
    """
    if n < 1:
        raise ValueError("the order must be positive")
    p = alpha_poly(n)
    names = alpha_slot_names(n)
    q = rename_slots(p, names, names[1:] + names[:1])
    if i >= 0:
        lhs = delta_upper(p, "k1", i)
        r = delta_lower(q, "k1", i)
    else:
        if xs is None or len(xs) != -i:
            raise ValueError("negative order needs -i constants")
        ys = tuple(x + j - n + 2 for x, j in zip(xs, range(i, 0)))
        lhs = inv_power(p, "k1", ConstantVector(i, tuple(xs)), "Delta")
        r = inv_power(q, "k1", ConstantVector(i, ys), "delta")
    rhs = _parity(n - 1) * shift(r, "k1", i - n)
    if lhs == rhs:
        return True, None
    return False, (n, i, tuple(xs) if xs else None)


def _difference_stencil(ops, point):
    """Weighted evaluation points of composed single-slot differences.

    ops is a list of (slot, kind, power) with kind "Delta" (forward) or
    "delta" (backward); the result lists (weight, shifted point) pairs.
    """
    pairs = [(1, tuple(point))]
    for slot, kind, power in ops:
        if power == 0:
            continue
        nxt = []
        for w, pt in pairs:
            for r in range(power + 1):
                c = binom_ext(power, r)
                if kind == "Delta":
                    wt = w * c * _parity(power - r)
                    off = r
                else:
                    wt = w * c * _parity(r)
                    off = -r
                moved = list(pt)
                moved[slot] += off
                nxt.append((wt, tuple(moved)))
        pairs = nxt
    return pairs


def check_prolongation(n: int, i: int, j: int, xs: Sequence[int],
                       kind: str = "Delta", rng=None,
                       samples: int = 3) -> CheckOutcome:
    """Right inverses at one slot against differences at a prolonged row.

    The iterated right inverse in slot j of the order-n counting
    polynomial, with constants xs, is compared against a signed product of
    plain difference operators applied to the order n-i polynomial whose
    argument list carries the constants spliced in around slot j.  kind
    "Delta" splices them after the slot with backward operators of rising
    power; kind "delta" splices them before the slot, reversed, with
    forward operators of falling power.  Sampled pointwise in the
    remaining entries; inverses act on the interpolated slot polynomial.
    """
    if i >= 0:
        raise ValueError("the order must be negative")
    if not 1 <= j <= n:
        raise ValueError("slot out of range")
    xs = tuple(xs)
    if len(xs) != -i:
        raise ValueError("need -i constants")
    if kind not in ("Delta", "delta"):
        raise ValueError("kind must be 'Delta' or 'delta'")
    if rng is None:
        rng = random.Random(0)
    base = [rng.randint(-4, 6) for _ in range(n)]
    slot_poly = interpolate_on_grid(
        lambda t: alpha_eval(n, tuple(base[:j - 1]) + (t[0],)
                             + tuple(base[j:])),
        ("kj",), (n - 1,))
    inverted = inv_power(slot_poly, "kj", ConstantVector(i, xs), kind)

    before = [(t, "Delta", -i) for t in range(j - 1)]
    if kind == "Delta":
        sign = _parity(i * j)
        middle = [(j + u, "delta", u) for u in range(-i)]
        spliced = list(xs)
    else:
        sign = _parity((j - 1) * i + (-i) * (-i - 1) // 2)
        middle = [(j - 1 + u, "Delta", -i - 1 - u) for u in range(-i)]
        spliced = list(reversed(xs))
    after = [(t, "delta", -i) for t in range(j - i, n - i)]
    ops = before + middle + after

    for v in rng.sample(range(-5, 9), samples):
        lhs = inverted.eval({"kj": v})
        if kind == "Delta":
            point = base[:j - 1] + [v] + spliced + base[j:]
        else:
            point = base[:j - 1] + spliced + [v] + base[j:]
        rhs = sign * sum(w * alpha_eval(n - i, pt)
                         for w, pt in _difference_stencil(ops, point))
        if lhs != rhs:
            return False, (kind, n, i, j, xs, v, lhs, rhs)
    return True, None
