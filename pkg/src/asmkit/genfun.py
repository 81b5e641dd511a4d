"""Generating functions with the pattern statistic, and related experiments.

The central object is the symmetrized product Q built from a bottom row:
its one-variable specialization stores, per top entry, the distribution
of a local pattern over all monotone triangles with that bottom row.
Everything is exact; the statistic variable X lives in the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .laurent import LaurentPolynomial, XPoly, X, divide_by_vandermonde
from .mt import alpha_m_eval, pattern_genfun
from .shiftcalc import binom_ext
from .symmetrize import check_inversion_invariance, sym_over_vandermonde

Scalar = Union[int, Fraction]
CheckOutcome = Tuple[bool, Optional[tuple]]


def _x_pair(nvars: int, i: int, j: int) -> LaurentPolynomial:
    # 1 + z_i z_j + (X-2) z_i
    e_i = [0] * nvars
    e_i[i] = 1
    e_ij = list(e_i)
    e_ij[j] += 1
    return LaurentPolynomial(nvars, {
        tuple([0] * nvars): 1,
        tuple(e_i): X - 2,
        tuple(e_ij): 1,
    })


def _weighted_kernel_numerator(weights: Sequence[int]) -> LaurentPolynomial:
    n = len(weights)
    out = LaurentPolynomial.monomial(n, dict(enumerate(weights)))
    for i in range(n):
        for j in range(i + 1, n):
            out = out * _x_pair(n, i, j)
    return out


def specialize_x(f: LaurentPolynomial, value) -> LaurentPolynomial:
    """Replace the coefficient-ring statistic variable by a number."""
    terms = {}
    for e, c in f.terms.items():
        terms[e] = c.subs(value) if isinstance(c, XPoly) else c
    return LaurentPolynomial(f.nvars, terms)


@dataclass(frozen=True)
class PatternGenFun:
    """Symmetrized weighted kernel for one bottom row."""

    n: int
    k: Tuple[int, ...]
    Q: LaurentPolynomial

    def one_z_coefficients(self) -> Dict[int, XPoly]:
        """Coefficients of Q(1, ..., 1, z) by the power of z."""
        out: Dict[int, XPoly] = {}
        for e, c in self.Q.terms.items():
            s = e[-1]
            prev = out.get(s)
            out[s] = c if prev is None else prev + c
        return {s: c for s, c in out.items()
                if (c if isinstance(c, XPoly) else XPoly.const(c))}

    def all_ones_total(self):
        """Evaluation at every variable 1 and statistic 1: a triangle count."""
        total = 0
        for c in self.Q.terms.values():
            total = total + (c.subs(1) if isinstance(c, XPoly) else c)
        return total


def build_Q(n: int, k: Sequence[int]) -> PatternGenFun:
    """Symmetrize the weighted kernel for bottom row k.

    Computed as an antisymmetrization divided exactly by the Vandermonde
    product; a division failure would falsify the construction.
    """
    k = tuple(k)
    if len(k) != n:
        raise ValueError("bottom row length must equal n")
    num = _weighted_kernel_numerator(k)
    return PatternGenFun(n, k, sym_over_vandermonde(num))


def check_genfun_vs_alpha(n: int, k: Sequence[int], m: int) -> CheckOutcome:
    """One-variable specialization against the deformed operator count.

    Expands Q(1,...,1,z) into powers of z, pairs each with a binomial in
    its exponent, and compares the sum exactly, as a polynomial in the
    statistic, with the direct operator evaluation.
    """
    k = tuple(k)
    pg = build_Q(n, k)
    rhs = XPoly()
    for s, c in pg.one_z_coefficients().items():
        w = binom_ext(s, m)
        if w:
            rhs = rhs + c * w
    lhs = alpha_m_eval(n, k, m)
    if lhs == rhs:
        return True, None
    return False, (n, k, m, lhs.render(), rhs.render())


def check_pattern_coefficients(bottom: Sequence[int], top: int) -> CheckOutcome:
    """One z-coefficient of the specialized Q against the triangle statistic.

    The coefficient of z^top in Q(1,...,1,z) must equal, exactly as a
    polynomial in the statistic, the generating function of monotone
    triangles with the given bottom row and top entry.
    """
    bottom = tuple(bottom)
    if any(a >= b for a, b in zip(bottom, bottom[1:])):
        raise ValueError("bottom row must be strictly increasing")
    if not bottom[0] <= top <= bottom[-1]:
        raise ValueError("top entry out of range")
    pg = build_Q(len(bottom), bottom)
    got = pg.one_z_coefficients().get(top, XPoly())
    expected = pattern_genfun(bottom, top)
    if got == expected:
        return True, None
    return False, (bottom, top, expected.render(),
                   got.render() if isinstance(got, XPoly) else got)


def _embed_to_slots(f: LaurentPolynomial, nvars: int,
                    slots: Sequence[int]) -> LaurentPolynomial:
    terms = {}
    for e, c in f.terms.items():
        e2 = [0] * nvars
        for idx, slot in enumerate(slots):
            e2[slot] = e[idx]
        terms[tuple(e2)] = c
    return LaurentPolynomial(nvars, terms, _canonical=True)


def _pair_product(nvars: int, slots: Sequence[int]) -> LaurentPolynomial:
    out = LaurentPolynomial.const(nvars, 1)
    for a in range(len(slots)):
        for b in range(a + 1, len(slots)):
            out = out * (LaurentPolynomial.monomial(nvars, {slots[b]: 1})
                         - LaurentPolynomial.monomial(nvars, {slots[a]: 1}))
    return out


GENFUN_KINDS = ("ASM", "VSASM")


def build_recursive_genfun(kind: str, n: int) -> LaurentPolynomial:
    """The symmetrized counting function, built two ways and compared.

    The direct route symmetrizes the defining weighted kernel. The
    recursive route removes one variable at a time, with all denominators
    cleared symbolically. Disagreement raises, since it would falsify the
    recursion itself rather than any particular input.
    """
    if kind not in GENFUN_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if n < 1:
        raise ValueError("need n >= 1")

    def weights(sz: int) -> List[int]:
        return [2 * i for i in range(sz)] if kind == "VSASM" else \
            list(range(sz))

    direct = sym_over_vandermonde(_weighted_kernel_numerator(weights(n)))
    if n == 1:
        return direct

    prev = sym_over_vandermonde(_weighted_kernel_numerator(weights(n - 1)))
    top_exp = 2 * n - 2 if kind == "VSASM" else n - 1
    cleared = LaurentPolynomial.zero(n)
    for j in range(n):
        others = [i for i in range(n) if i != j]
        term = LaurentPolynomial.monomial(n, {j: top_exp})
        for i in others:
            term = term * _x_pair(n, i, j)
        term = term * _pair_product(n, others)
        term = term * _embed_to_slots(prev, n, others)
        if (n - 1 - j) % 2:
            term = -term
        cleared = cleared + term
    recursive = divide_by_vandermonde(cleared)
    if recursive != direct:
        raise ArithmeticError(f"recursion mismatch for {kind} at n={n}")
    return direct


def genfun_total(kind: str, n: int):
    """All-ones, statistic-1 specialization: the plain object count."""
    g = build_recursive_genfun(kind, n)
    total = 0
    for c in g.terms.values():
        total = total + (c.subs(1) if isinstance(c, XPoly) else c)
    return total


@dataclass(frozen=True)
class TFamilyParams:
    """Coefficients of the two-variable rational factor under study."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    @property
    def is_limit_case(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 0)


def _t_pair_numerator(params: TFamilyParams, nvars: int, i: int,
                      j: int) -> LaurentPolynomial:
    """Numerator of T(z_i, z_j) over the denominator (z_j - z_i).

    Uses 1 - x y^{-1} = y^{-1}(y - x): the displayed factor times z_j
    clears to a Laurent numerator; the additive terms pick up the
    denominator.
    """
    zi = LaurentPolynomial.monomial(nvars, {i: 1})
    zj = LaurentPolynomial.monomial(nvars, {j: 1})
    zi_inv = LaurentPolynomial.monomial(nvars, {i: -1})
    zj_inv = LaurentPolynomial.monomial(nvars, {j: -1})
    one = LaurentPolynomial.const(nvars, 1)
    if params.is_limit_case:
        # T = (x^-1 + y)/(1 - x y^-1): numerator (x^-1 + y) y
        return (zi_inv + zj) * zj
    first = (zi_inv + zj) * params.a + one * params.c
    second = (zi + zj_inv) * params.b + one * params.c
    extra = zi_inv * zj * (params.a * params.b) + one * params.d
    return first * second * zj + extra * (zj - zi)


def _limit_case_closed_form(n: int) -> LaurentPolynomial:
    out = LaurentPolynomial.monomial(n, {i: -(n - 1) for i in range(n)})
    one = LaurentPolynomial.const(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            zi = LaurentPolynomial.monomial(n, {i: 1})
            zj = LaurentPolynomial.monomial(n, {j: 1})
            out = out * (one + zi * zj) * (zi + zj)
    return out


def t_family_check(params: TFamilyParams, n: int) -> CheckOutcome:
    """Symmetrize the pairwise product for one parameter choice.

    Checks that the result is Laurent (exact division), that it is
    invariant under inverting each single variable, that a vanishing
    first parameter makes it constant, and that the limit case matches
    its displayed closed form. Inversion invariance holds as observed
    instances of an experimental claim, never as a theorem.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    num = LaurentPolynomial.const(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            num = num * _t_pair_numerator(params, n, i, j)
    result = sym_over_vandermonde(num)
    ok, witness = check_inversion_invariance(result)
    if not ok:
        return False, ("inversion", params, witness)
    if params.a == 0 and not params.is_limit_case:
        if not result.is_zero() and set(result.terms) != {(0,) * n}:
            return False, ("constant", params, sorted(result.terms)[0])
    if params.is_limit_case:
        if result != _limit_case_closed_form(n):
            return False, ("closed-form", params)
    return True, None


def s0_kernel_sym(n: int) -> LaurentPolynomial:
    """Symmetrization of the inversion-kernel specialization at s = 0.

    The pairwise factor (z_i^-1 + z_j - 1)/(1 - z_i z_j^-1) clears to
    the numerator (z_i^-1 + z_j - 1) z_j over (z_j - z_i).
    """
    num = LaurentPolynomial.const(n, 1)
    one = LaurentPolynomial.const(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            zi_inv = LaurentPolynomial.monomial(n, {i: -1})
            zj = LaurentPolynomial.monomial(n, {j: 1})
            num = num * (zi_inv + zj - one) * zj
    return sym_over_vandermonde(num)
