"""Symmetrization over the Vandermonde and inversion-invariance checks.

Everything here works with symmetric rational functions represented as an
exact Laurent numerator over the Vandermonde determinant.  Symmetrizing
``num / vandermonde`` only needs the antisymmetrization of ``num``, and
antisymmetrization is computed per orbit of the symmetric group: a term
with exponent vector e contributes (with a sign) to the class of the sorted
vector, classes with a repeated exponent vanish, and distinct classes have
disjoint monomial supports.  That keeps equality tests between symmetrized
values free of any factorial-size expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Optional, Tuple

from .laurent import LaurentPolynomial, divide_by_vandermonde, vandermonde

#: Permutations are tuples of 0-based images: slot i maps to perm[i].
Permutation = Tuple[int, ...]


def perm_sign(perm: Permutation) -> int:
    """Parity sign of a permutation given as a tuple of images."""
    n = len(perm)
    inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


@lru_cache(maxsize=None)
def _signed_perms(n: int):
    return tuple((p, perm_sign(p)) for p in permutations(range(n)))


def _class_sign(e: Tuple[int, ...]) -> int:
    # parity of inversions relative to the descending representative
    inv = 0
    n = len(e)
    for i in range(n):
        for j in range(i + 1, n):
            if e[i] < e[j]:
                inv += 1
    return -1 if inv & 1 else 1


def asym_classes(f: LaurentPolynomial) -> Dict[Tuple[int, ...], object]:
    """Grouped form of the antisymmetrization of f.

    Returns a map from strictly decreasing exponent vectors d to the signed
    sum of coefficients of the terms in that orbit.  The antisymmetrization
    itself is the sum over classes of coefficient times the alternant of d;
    two polynomials have equal antisymmetrizations iff these maps are equal.
    """
    classes: Dict[Tuple[int, ...], object] = {}
    for e, c in f.terms.items():
        d = tuple(sorted(e, reverse=True))
        if len(set(d)) != len(d):
            continue
        if _class_sign(e) < 0:
            c = -c
        s = classes.get(d)
        if s is None:
            classes[d] = c
        else:
            s = s + c
            if s:
                classes[d] = s
            else:
                del classes[d]
    return classes


def asym_from_classes(classes: Dict[Tuple[int, ...], object], nvars: int
                      ) -> LaurentPolynomial:
    """Expand a grouped antisymmetrization into an explicit polynomial."""
    out = {}
    perms = _signed_perms(nvars)
    for d in sorted(classes):
        c = classes[d]
        neg = -c
        # distinct entries: the n! arrangements are distinct monomials and
        # no other class touches them, so plain insertion is safe
        for p, sign in perms:
            e = tuple(d[i] for i in p)
            out[e] = c if sign > 0 else neg
    return LaurentPolynomial(nvars, out, _canonical=True)


def asym(f: LaurentPolynomial) -> LaurentPolynomial:
    """Antisymmetrization: the signed sum of f over all variable permutations."""
    return asym_from_classes(asym_classes(f), f.nvars)


def sym_over_vandermonde(num: LaurentPolynomial) -> LaurentPolynomial:
    """Symmetrize num / vandermonde, returned as an exact Laurent polynomial.

    Each permutation carries the Vandermonde to its sign times itself, so
    the symmetrization equals asym(num) / vandermonde, and that quotient is
    always exact.
    """
    if num.nvars == 1:
        return num
    return divide_by_vandermonde(asym(num))


@dataclass(frozen=True)
class OverVandermonde:
    """A rational function numerator / vandermonde(nvars), kept unexpanded."""

    numerator: LaurentPolynomial

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def symmetrized(self) -> LaurentPolynomial:
        return sym_over_vandermonde(self.numerator)

    def classes(self) -> Dict[Tuple[int, ...], object]:
        return asym_classes(self.numerator)


def build_P(s: int, t: int) -> OverVandermonde:
    """The product kernel on s + t - 1 variables, over the Vandermonde.

    The numerator multiplies one Laurent monomial and reciprocal-binomial
    power per variable with one trinomial per variable pair; the Vandermonde
    denominator stays implicit.
    """
    if s < 0 or t < 1 or s + t < 2:
        raise ValueError("needs s >= 0, t >= 1 and at least one variable")
    m = s + t - 1
    num = LaurentPolynomial.const(m, 1)
    one = LaurentPolynomial.const(m, 1)
    for i in range(1, m + 1):
        zi = LaurentPolynomial.variable(m, i - 1)
        zi_inv = LaurentPolynomial.monomial(m, {i - 1: -1})
        if i <= s:
            expo, power = 2 * s - 2 * i - t + 1, i - 1
        else:
            expo, power = 2 * i - 2 * s - t, s
        num = num * LaurentPolynomial.monomial(m, {i - 1: expo})
        num = num * (one - zi_inv) ** power
    for p in range(1, m + 1):
        zp = LaurentPolynomial.variable(m, p - 1)
        for q in range(p + 1, m + 1):
            zq = LaurentPolynomial.variable(m, q - 1)
            num = num * (one - zp + zp * zq)
    return OverVandermonde(num)


@lru_cache(maxsize=None)
def build_R(s: int, t: int) -> LaurentPolynomial:
    """Symmetrization of the product kernel, as an exact Laurent polynomial."""
    return build_P(s, t).symmetrized()


def check_inversion_invariance(
        r: LaurentPolynomial, var: Optional[int] = None):
    """Is r unchanged when one variable is replaced by its reciprocal?

    Checks the given slot, or every slot when var is None.  Returns
    (True, None) on invariance and (False, witness_monomial) otherwise.
    """
    slots = range(r.nvars) if var is None else (var,)
    for i in slots:
        flipped = r.invert_vars([i])
        if flipped != r:
            diff = flipped - r
            witness = max(diff.terms)
            return False, witness
    return True, None


class GammaExpandError(ValueError):
    """The polynomial is not a combination of gamma powers.

    ``witness`` carries (variable_slot, offending_exponent_vector).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@lru_cache(maxsize=None)
def _gamma_power(nvars: int, var: int, d: int) -> LaurentPolynomial:
    base = LaurentPolynomial(
        nvars, {_unit(nvars, var, 1): 1,
                (0,) * nvars: -2,
                _unit(nvars, var, -1): 1})
    return base ** d


def _unit(nvars: int, var: int, v: int) -> Tuple[int, ...]:
    e = [0] * nvars
    e[var] = v
    return tuple(e)


def _coeff_of_power(q: LaurentPolynomial, var: int, d: int
                    ) -> LaurentPolynomial:
    out = {}
    for e, c in q.terms.items():
        if e[var] == d:
            out[e[:var] + (0,) + e[var + 1:]] = c
    return LaurentPolynomial(q.nvars, out, _canonical=True)


def gamma_expand(r: LaurentPolynomial) -> Dict[Tuple[int, ...], object]:
    """Write r as a combination of products of gamma(z_i) = z_i - 2 + 1/z_i.

    Returns a map from gamma-exponent vectors to coefficients; raises
    GammaExpandError when no such expansion exists.  Variables are
    eliminated in slot order by repeatedly stripping the top degree, which
    terminates because each step strictly lowers it.
    """
    n = r.nvars
    out: Dict[Tuple[int, ...], object] = {}

    def expand(q: LaurentPolynomial, var: int, prefix: Tuple[int, ...]):
        if q.is_zero():
            return
        if var == n:
            out[prefix] = q.constant_value()
            return
        while not q.is_zero():
            d = q.deg_in(var)
            if d < 0:
                raise GammaExpandError(
                    "leftover negative powers; not gamma-expressible",
                    witness=(var, max(q.terms)))
            if d == 0:
                if q.min_in(var) < 0:
                    raise GammaExpandError(
                        "leftover negative powers; not gamma-expressible",
                        witness=(var, min(q.terms)))
                expand(q, var + 1, prefix + (0,))
                return
            top = _coeff_of_power(q, var, d)
            expand(top, var + 1, prefix + (d,))
            q = q - top * _gamma_power(n, var, d)

    expand(r, 0, ())
    return out


def gamma_combine(coeffs: Dict[Tuple[int, ...], object], nvars: int
                  ) -> LaurentPolynomial:
    """Inverse of gamma_expand: rebuild the polynomial from gamma powers."""
    total = LaurentPolynomial.zero(nvars)
    for expo, c in coeffs.items():
        term = LaurentPolynomial.const(nvars, c)
        for var, d in enumerate(expo):
            if d:
                term = term * _gamma_power(nvars, var, d)
        total = total + term
    return total
