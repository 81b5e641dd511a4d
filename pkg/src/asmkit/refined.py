"""Refined counting families and the linear systems tying them together.

The module houses five families of exact rational numbers. A counts square
matrices by the position of the first row's 1, B and Bstar count the
vertically symmetric ones by two different distinguished positions, and the
C/D families extend B to negative indices through difference operators
applied to the triangle-counting polynomial. Everything downstream (linear
systems, rank statements, symmetry and equality checks) is verified in
exact arithmetic with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from .mt import alpha_poly_first, count_mt, enumerate_mt
from .shiftcalc import (
    ConstantVector,
    OrdinaryPolynomial,
    binom_ext,
    delta_upper,
    inv_power,
)

Scalar = Union[int, Fraction]
CheckOutcome = Tuple[bool, Optional[tuple]]

FAMILIES = ("A", "B", "Bstar", "C", "D")


class BinomialExt:
    """Binomial coefficient extended to arbitrary rational upper argument.

    Zero whenever the lower index is negative, otherwise the usual falling
    factorial divided by a factorial, which is a polynomial of that degree
    in the upper argument.
    """

    __slots__ = ()

    def __call__(self, x: Scalar, j: int) -> Scalar:
        return binom_ext(x, j)

    value = staticmethod(binom_ext)


@dataclass(frozen=True)
class RefinedFamily:
    """One indexed family of exact values."""

    family: str
    n: int
    d: Optional[int]
    values: Dict[int, Scalar]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("C", "D"):
            if self.d is None:
                raise ValueError("C/D families carry the parameter d")
            bad = [i for i in self.values
                   if not -self.n <= i <= self.n - 1]
            if bad:
                raise ValueError(f"index out of range: {bad[0]}")

    def value_at(self, i: int) -> Scalar:
        return self.values[i]

    def indices(self):
        return sorted(self.values)


def _sgn(i: int) -> int:
    return -1 if i % 2 else 1


def _normalize(v: Scalar) -> Scalar:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


# -- closed-form families -------------------------------------------------------


@lru_cache(maxsize=None)
def _product_factor(n: int) -> Fraction:
    out = Fraction(1)
    for j in range(1, n):
        out *= Fraction(
            (3 * j - 1) * factorial(2 * j - 1) * factorial(6 * j - 3),
            factorial(4 * j - 2) * factorial(4 * j - 1))
    return out


def _ratio(n: int, r: int) -> Fraction:
    return Fraction(
        binom_ext(2 * n + r - 2, 2 * n - 1)
        * binom_ext(4 * n - r - 1, 2 * n - 1),
        binom_ext(4 * n - 2, 2 * n - 1))


def b_formula(n: int, i: int) -> Fraction:
    """Refined count of vertically symmetric matrices by the second row.

    Defined for every integer i; the combinatorial meaning is restricted
    to 1 <= i <= n but the analytic continuation is what the linear
    systems consume.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return _normalize(_ratio(n, i) * _product_factor(n))


def bstar_formula(n: int, i: int) -> Fraction:
    """Refined count of vertically symmetric matrices by the first column."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= i <= 2 * n + 1:
        raise ValueError("index must lie in 1..2n+1")
    tail = sum((_sgn(i + r - 1) * _ratio(n, r) for r in range(1, i)),
               Fraction(0))
    return _normalize(_product_factor(n) * tail)


# -- brute-force families ----------------------------------------------------------


def a_numbers(n: int, source: str = "brute") -> RefinedFamily:
    """Refined ordinary counts A_{n,i}, indexed 1..n.

    source "brute" filters the enumeration by apex entry; "cd" reads the
    d=1 difference family, which matches with an index shift of one.
    """
    if source == "brute":
        values: Dict[int, Scalar] = {i: 0 for i in range(1, n + 1)}
        for t in enumerate_mt(tuple(range(1, n + 1))):
            values[t.top_entry] += 1
    elif source == "cd":
        fam = cd_numbers(n, 1, "C")
        values = {i: _normalize(fam.values[i - 1]) for i in range(1, n + 1)}
    else:
        raise ValueError("source must be 'brute' or 'cd'")
    return RefinedFamily("A", n, None, values)


def b_numbers(n: int, source: str = "formula",
              hi: Optional[int] = None) -> RefinedFamily:
    """Refined symmetric counts B_{n,i}.

    source "formula" evaluates the closed form for 1..hi (default 1..n),
    "cd" reads the d=2 difference family through B_{n,n-i} = C_{n,i}, and
    "brute" counts triangles with bottom row (2,4,...,2n) by the number of
    left-diagonal entries equal to the first one.
    """
    if source == "formula":
        hi = n if hi is None else hi
        values: Dict[int, Scalar] = {
            i: b_formula(n, i) for i in range(1, hi + 1)}
    elif source == "cd":
        fam = cd_numbers(n, 2, "C")
        values = {n - i: fam.values[i] for i in range(-n, n)}
    elif source == "brute":
        counts = {i: 0 for i in range(n)}
        for t in enumerate_mt(tuple(range(2, 2 * n + 1, 2))):
            stat = t.left_diag_eq_first() - 1
            if stat in counts:
                counts[stat] += 1
        values = {n - i: c for i, c in counts.items()}
    else:
        raise ValueError("source must be 'formula', 'cd' or 'brute'")
    return RefinedFamily("B", n, None, values)


def bstar_numbers(n: int) -> RefinedFamily:
    return RefinedFamily(
        "Bstar", n, None,
        {i: bstar_formula(n, i) for i in range(1, 2 * n + 2)})


# -- difference-operator families -----------------------------------------------------


def _x_constant(j: int) -> int:
    return -2 * j + 1


def _z_constant(n: int, d: int, j: int) -> int:
    return (n + 2) * (d + 1) + j - 5


def cd_numbers(n: int, d: int, which: str = "C") -> RefinedFamily:
    """The difference families on indices -n..n-1.

    For i >= 0 apply the forward difference i times to the counting
    polynomial in its first slot (remaining slots pinned to 2d,...,nd),
    evaluate at d+1 and attach the sign (-1)^i. For i < 0 apply the right
    inverses instead, with constants -2j+1 for C and (n+2)(d+1)+j-5 for D.
    The two branches agree at i >= 0.
    """
    if which not in ("C", "D"):
        raise ValueError("which must be 'C' or 'D'")
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    p = alpha_poly_first(n, tuple(j * d for j in range(2, n + 1)))
    point = d + 1
    values: Dict[int, Scalar] = {}
    q = p
    for i in range(n):
        values[i] = _normalize(_sgn(i) * q.eval({"k1": point}))
        q = delta_upper(q, "k1")
    for i in range(-1, -n - 1, -1):
        if which == "C":
            cv = ConstantVector.from_function(i, _x_constant)
        else:
            cv = ConstantVector.from_function(
                i, lambda j: _z_constant(n, d, j))
        q = inv_power(p, "k1", cv, "Delta")
        values[i] = _normalize(_sgn(i) * q.eval({"k1": point}))
    return RefinedFamily(which, n, d, values)


def c_profile(p: OrdinaryPolynomial, var: str, imax: int,
              point: int = 3) -> Dict[int, Scalar]:
    """Signed difference profile of a univariate polynomial.

    c_i for i in -imax..imax-1: forward differences for i >= 0, right
    inverses with constants -2j+1 for i < 0, all evaluated at the point
    and signed by parity.
    """
    out: Dict[int, Scalar] = {}
    q = p
    for i in range(imax):
        out[i] = _normalize(_sgn(i) * q.eval({var: point}))
        q = delta_upper(q, var)
    for i in range(-1, -imax - 1, -1):
        cv = ConstantVector.from_function(i, _x_constant)
        q = inv_power(p, var, cv, "Delta")
        out[i] = _normalize(_sgn(i) * q.eval({var: point}))
    return out


# -- linear systems ----------------------------------------------------------------------


def _les_b_row(values: Dict[int, Scalar], n: int, i: int) -> Scalar:
    return sum(
        binom_ext(3 * n - i - 2, j - i) * _sgn(j + n + 1) * values[j]
        for j in range(i, n))


def verify_les(family: str, n: int, source: str) -> CheckOutcome:
    """Substitute a value source into one of the three linear systems.

    family "A": the order-n system with its mirror lines, sources "brute"
    or "cd". family "B": the symmetric system on indices -n..n-1 with its
    mirror lines, sources "formula" or "cd". family "B-alt": the
    alternative square system, sources "formula" or "cd". Returns the
    first non-zero residual as a witness.
    """
    if family == "A":
        vals = a_numbers(n, source).values
        for i in range(1, n + 1):
            rhs = sum(
                binom_ext(2 * n - i - 1, j - i) * _sgn(j + n) * vals[j]
                for j in range(i, n + 1))
            if vals[i] != rhs:
                return False, ("A", i, vals[i], rhs)
            if vals[i] != vals[n + 1 - i]:
                return False, ("A-mirror", i, vals[i], vals[n + 1 - i])
        return True, None

    if family == "B":
        if source == "formula":
            y = {i: b_formula(n, n - i) for i in range(-n, n)}
        elif source == "cd":
            y = cd_numbers(n, 2, "C").values
        else:
            raise ValueError("source must be 'formula' or 'cd'")
        for i in range(-n, n):
            rhs = _les_b_row(y, n, i)
            if y[i] != rhs:
                return False, ("B", i, y[i], rhs)
            if y[i] != y[-i - 1]:
                return False, ("B-mirror", i, y[i], y[-i - 1])
        return True, None

    if family == "B-alt":
        if source == "formula":
            b = {j: b_formula(n, n - j) for j in range(n)}
        elif source == "cd":
            fam = cd_numbers(n, 2, "C")
            b = {j: fam.values[j] for j in range(n)}
        else:
            raise ValueError("source must be 'formula' or 'cd'")
        for i in range(n):
            row = sum(
                (binom_ext(3 * n - i - 2, i + j + 1)
                 - binom_ext(3 * n - i - 2, i - j)) * _sgn(j) * b[j]
                for j in range(n))
            if row != 0:
                return False, ("B-alt", i, row, 0)
        return True, None

    raise ValueError("family must be 'A', 'B' or 'B-alt'")


def exact_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank over the rationals by fraction-free elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = Fraction(1)
    for c in range(ncols):
        piv = next((k for k in range(rank, nrows) if m[k][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for k in range(rank + 1, nrows):
            f = m[k][c]
            for j in range(ncols):
                m[k][j] = (m[k][j] * p - m[rank][j] * f) / prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def exact_det(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant over the rationals, exact Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for c in range(size):
        piv = next((k for k in range(c, size) if m[k][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for k in range(c + 1, size):
            f = m[k][c] / m[c][c]
            if not f:
                continue
            for j in range(c, size):
                m[k][j] -= f * m[c][j]
    return det


def les_rank(n: int, which: str = "B") -> Dict[str, object]:
    """Dimension report for the two homogeneous systems.

    which "B": the fixed-point matrix of the symmetric system after
    eliminating the mirror lines; its corank must be exactly one, which
    is asserted. which "B-alt": the alternative square system; its corank
    is reported without assertion.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if which == "B":
        size = 2 * n
        mat = [[binom_ext(4 * n - i - 1, 2 * n - i - j + 1) * _sgn(j + 1)
                - (1 if i == j else 0)
                for j in range(1, size + 1)] for i in range(1, size + 1)]
        rank = exact_rank(mat)
        report = {
            "which": which, "n": n, "size": size, "rank": rank,
            "corank": size - rank, "expected_rank": size - 1,
            "matches": rank == size - 1,
        }
        if not report["matches"]:
            raise ArithmeticError(f"solution space is not a line: {report}")
        return report
    if which == "B-alt":
        mat = [[(binom_ext(3 * n - i - 2, i + j + 1)
                 - binom_ext(3 * n - i - 2, i - j)) * _sgn(j)
                for j in range(n)] for i in range(n)]
        rank = exact_rank(mat)
        return {
            "which": which, "n": n, "size": n, "rank": rank,
            "corank": n - rank, "expected_rank": n - 1,
            "matches": rank == n - 1,
        }
    raise ValueError("which must be 'B' or 'B-alt'")


def dpp_determinant(m: int) -> Dict[str, object]:
    """Two determinant evaluations against the plain counting sequence.

    For m >= 3: the (m-1)-sized signed binomial determinant, the
    (m-2)-sized shifted binomial determinant, and the triangle count of
    order m-1 must all coincide.
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    large = [[binom_ext(2 * m - i - 1, m - i - j + 1) * _sgn(j)
              + (1 if i == j else 0)
              for j in range(2, m + 1)] for i in range(2, m + 1)]
    small = [[binom_ext(i + j, j - 1) + (1 if i == j else 0)
              for j in range(1, m - 1)] for i in range(1, m - 1)]
    det_large = exact_det(large)
    det_small = exact_det(small)
    asm = count_mt(tuple(range(1, m)))
    return {
        "m": m, "det_large": det_large, "det_small": det_small,
        "count": asm,
        "matches": det_large == det_small == asm,
    }


# -- single identities ---------------------------------------------------------------------


def coefficient_sum_identity(i: int, d1: int) -> CheckOutcome:
    """Closed form of the signed double-binomial sum.

    The sum over l of (-1)^l binom(i+l, i-l) binom(2l+2-d1, l+3-d1)
    (d1-3)/l collapses to a single signed binomial; valid for d1 >= 4 and
    i >= 0.
    """
    if d1 < 4 or i < 0:
        raise ValueError("requires d1 >= 4 and i >= 0")
    lhs = sum(
        (Fraction(_sgn(l) * binom_ext(i + l, i - l)
                  * binom_ext(2 * l + 2 - d1, l + 3 - d1) * (d1 - 3), l)
         for l in range(1, i + 1)),
        Fraction(0))
    rhs = binom_ext(i, d1 - 3) * _sgn(d1 + 1)
    return lhs == rhs, (lhs, rhs)


def verify_les_c(n: int, d: int) -> CheckOutcome:
    """One-sided linear system for the difference family at one d.

    Every value must reproduce itself under the signed binomial sum over
    the indices at or above it; witnessed by the first failing index.
    """
    fam = cd_numbers(n, d, "C")
    for i in range(n):
        rhs = sum(
            binom_ext(n * (d + 1) - i - 2, j - i) * _sgn(j + n + 1)
            * fam.values[j]
            for j in range(i, n))
        if fam.values[i] != rhs:
            return False, (d, i, fam.values[i], rhs)
    return True, None


def verify_symmetry_c(n: int, d: int = 2) -> CheckOutcome:
    """Index symmetry C_{n,i} == C_{n,-i-1} of the difference family.

    Holds for d=2, where the evaluation point 3 pairs with the inverse
    constants -2j+1; other d are reported exploratorily.
    """
    fam = cd_numbers(n, d, "C")
    for i in range(n):
        if fam.values[i] != fam.values[-i - 1]:
            return False, (i, fam.values[i], fam.values[-i - 1])
    return True, None


def verify_cd_equal(n: int) -> CheckOutcome:
    """The d=2 difference family is blind to the constant choice.

    Checks, for every negative index: C equals D; the C-polynomial in the
    first slot vanishes at 3n+2+i; and the full polynomial identity
    between the two constant choices. Also re-derives the mixed linear
    system relating C on the left to D on the right for d <= 3, over the
    whole index range.
    """
    p = alpha_poly_first(n, tuple(2 * j for j in range(2, n + 1)))
    c = cd_numbers(n, 2, "C")
    dd = cd_numbers(n, 2, "D")
    for i in range(-n, 0):
        if c.values[i] != dd.values[i]:
            return False, ("equal", i, c.values[i], dd.values[i])
        cv_x = ConstantVector.from_function(i, _x_constant)
        cv_z = ConstantVector.from_function(
            i, lambda j: _z_constant(n, 2, j))
        qx = inv_power(p, "k1", cv_x, "Delta")
        at = qx.eval({"k1": 3 * n + 2 + i})
        if at != 0:
            return False, ("vanishing", i, at, 0)
        if qx != inv_power(p, "k1", cv_z, "Delta"):
            return False, ("polynomial", i, None, None)
    for d in (1, 2, 3):
        cf = cd_numbers(n, d, "C")
        df = cd_numbers(n, d, "D")
        for i in range(-n, n):
            rhs = sum(
                binom_ext(n * (d + 1) - i - 2, j - i) * _sgn(j + n + 1)
                * df.values[j]
                for j in range(i, n))
            if cf.values[i] != rhs:
                return False, ("mixed-les", d, i, cf.values[i], rhs)
    return True, None


def verify_cross_identities(n: int) -> CheckOutcome:
    """Identities linking the families across definitions and sizes.

    Formula level: B_{n,i} = Bstar_{n,i} + Bstar_{n,i+1} and the size
    recursion B_{n,1} = sum of the previous row. Brute level (n <= 5):
    the same size recursion for A. Operator level (n <= 5): the one-sided
    linear system for the difference family at d <= 3.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    for i in range(1, n + 1):
        lhs = b_formula(n, i)
        rhs = bstar_formula(n, i) + bstar_formula(n, i + 1)
        if lhs != rhs:
            return False, ("split", i, lhs, rhs)
    total = sum(b_formula(n - 1, i) for i in range(1, n))
    if b_formula(n, 1) != total:
        return False, ("B-recursion", n, b_formula(n, 1), total)
    if n <= 5:
        a_now = a_numbers(n).values
        a_prev = a_numbers(n - 1).values
        if a_now[1] != sum(a_prev.values()):
            return False, ("A-recursion", n, a_now[1],
                           sum(a_prev.values()))
        for d in (1, 2, 3):
            ok, witness = verify_les_c(n, d)
            if not ok:
                return False, ("one-sided",) + witness
    return True, None
