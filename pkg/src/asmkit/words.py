"""Operator words over the four-letter alphabet and their rational functions.

Each letter multiplies by a fixed rational factor and embeds the previous
function into one more variable. All functions here are kept as Laurent
numerators over the full Vandermonde product, so applying a letter is a
single sparse multiplication and symmetrizing is one antisymmetrization
plus one exact division.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .laurent import LaurentPolynomial
from .symmetrize import OverVandermonde, asym, asym_classes, sym_over_vandermonde

LETTERS = ("PS", "PT", "QS", "QT")

CheckOutcome = Tuple[bool, Optional[tuple]]


@dataclass(frozen=True)
class WordLetter:
    """One letter: P/Q label times S/T step direction."""

    kind: str

    def __post_init__(self):
        if self.kind not in LETTERS:
            raise ValueError(f"unknown letter {self.kind!r}")

    @property
    def is_s(self) -> bool:
        return self.kind[1] == "S"

    @property
    def is_q(self) -> bool:
        return self.kind[0] == "Q"


@dataclass(frozen=True)
class OperatorWord:
    """A finite word; reads left to right, letters apply in that order."""

    letters: Tuple[WordLetter, ...]

    def __init__(self, letters: Iterable[Union[WordLetter, str]]):
        norm = tuple(
            l if isinstance(l, WordLetter) else WordLetter(l)
            for l in letters)
        object.__setattr__(self, "letters", norm)

    @classmethod
    def parse(cls, text: str) -> "OperatorWord":
        text = text.strip()
        return cls(text.split(",")) if text else cls(())

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def s_count(self) -> int:
        return sum(1 for l in self.letters if l.is_s)

    @property
    def t_count(self) -> int:
        return len(self.letters) - self.s_count

    @property
    def endpoint(self) -> Tuple[int, int]:
        return (self.s_count, self.t_count)

    def failing_prefix(self) -> Optional[int]:
        """Length of the shortest prefix with more S than T steps, if any."""
        s = t = 0
        for pos, letter in enumerate(self.letters, start=1):
            if letter.is_s:
                s += 1
            else:
                t += 1
            if s > t:
                return pos
        return None

    def is_valid(self) -> bool:
        return self.failing_prefix() is None

    def render(self) -> str:
        return ",".join(l.kind for l in self.letters)


# -- shared product pieces ------------------------------------------------------


def _monomial(nvars: int, slot: int, power: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(nvars, {slot: power})


def _one_minus_recip(nvars: int, slot: int) -> LaurentPolynomial:
    # 1 - z_slot^-1
    return LaurentPolynomial.const(nvars, 1) - _monomial(nvars, slot, -1)


def _one_minus(nvars: int, slot: int) -> LaurentPolynomial:
    return LaurentPolynomial.const(nvars, 1) - _monomial(nvars, slot, 1)


def _kernel_pair(nvars: int, p: int, q: int) -> LaurentPolynomial:
    # 1 - z_p + z_p z_q
    e_p = [0] * nvars
    e_p[p] = 1
    e_pq = list(e_p)
    e_pq[q] += 1
    return LaurentPolynomial(nvars, {
        tuple([0] * nvars): 1,
        tuple(e_p): -1,
        tuple(e_pq): 1,
    })


def _shift_up(f: LaurentPolynomial) -> LaurentPolynomial:
    """Embed an m-variable function into slots 2..m+1 of m+1 variables."""
    n = f.nvars + 1
    return LaurentPolynomial(n, {
        (0,) + e: c for e, c in f.terms.items()}, _canonical=True)


def _keep_low(f: LaurentPolynomial) -> LaurentPolynomial:
    """Embed an m-variable function into slots 1..m of m+1 variables."""
    n = f.nvars + 1
    return LaurentPolynomial(n, {
        e + (0,): c for e, c in f.terms.items()}, _canonical=True)


def _letter_factors(kind: str, s: int, t: int) -> List[LaurentPolynomial]:
    """The letter's numerator factor, as a list of small unexpanded pieces.

    Their product is the rational factor of the letter times the new
    Vandermonde pair factors its denominator consumes, with all unit
    monomials folded in. Kept factored: applying six-term pieces one at
    a time beats expanding the full multiplier first.
    """
    m = s + t - 1
    if kind == "PS":
        out = [_monomial(m, 0, 2 * s - t - 1)]
        for i in range(1, m):
            out.append(_kernel_pair(m, 0, i) * _one_minus_recip(m, i))
        return out
    if kind == "PT":
        out = [_one_minus_recip(m, m - 1) ** s * _monomial(m, m - 1, t - 2)]
        for i in range(m - 1):
            out.append(_kernel_pair(m, i, m - 1) * _monomial(m, i, -1))
        return out
    if kind == "QS":
        out = [_monomial(m, m - 1, t + 1 - 2 * s)]
        for i in range(m - 1):
            out.append(_kernel_pair(m, i, m - 1) * _one_minus(m, i))
        return out
    if kind == "QT":
        out = [_one_minus(m, 0) ** s * _monomial(m, 0, 2 - t)]
        for i in range(1, m):
            out.append(_kernel_pair(m, 0, i) * _monomial(m, i, 1))
        return out
    raise ValueError(f"unknown letter {kind!r}")


def letter_multiplier(kind: str, s: int, t: int) -> LaurentPolynomial:
    """Numerator factor contributed by one letter, in s+t-1 variables."""
    out = None
    for piece in _letter_factors(kind, s, t):
        out = piece if out is None else out * piece
    return out


def _apply_letter(num: LaurentPolynomial, kind: str, s: int,
                  t: int) -> LaurentPolynomial:
    if kind in ("PS", "QT"):
        out = _shift_up(num)
    else:
        out = _keep_low(num)
    for piece in _letter_factors(kind, s, t):
        out = out * piece
    return out


def build_F(w: OperatorWord) -> OverVandermonde:
    """The rational function of a word, as numerator over the Vandermonde."""
    num = LaurentPolynomial.const(1, 1)
    s = t = 1
    for letter in w.letters:
        if letter.is_s:
            s += 1
        else:
            t += 1
        num = _apply_letter(num, letter.kind, s, t)
    return OverVandermonde(num)


def sym_of_word(w: OperatorWord) -> LaurentPolynomial:
    """Symmetrization of the word's rational function, a Laurent polynomial."""
    return sym_over_vandermonde(build_F(w).numerator)


def check_word_pair(w1: OperatorWord, w2: OperatorWord) -> CheckOutcome:
    """Same endpoint implies equal symmetrizations, for valid words.

    Compared without expanding the symmetrization: grouped
    antisymmetrization classes are already a canonical form.
    """
    for w in (w1, w2):
        bad = w.failing_prefix()
        if bad is not None:
            raise ValueError(
                f"word {w.render()!r} invalid at prefix length {bad}")
    if w1.endpoint != w2.endpoint:
        raise ValueError("words must share the endpoint")
    c1 = asym_classes(build_F(w1).numerator)
    c2 = asym_classes(build_F(w2).numerator)
    if c1 == c2:
        return True, None
    keys = (set(c1) | set(c2))
    first = min(k for k in keys if c1.get(k, 0) != c2.get(k, 0))
    return False, (w1.render(), w2.render(), first)


def enumerate_words(maxlen: int) -> List[OperatorWord]:
    """All valid words of length up to maxlen, in generation order."""
    out: List[OperatorWord] = [OperatorWord(())]
    frontier: List[Tuple[Tuple[str, ...], int, int]] = [((), 0, 0)]
    for _ in range(maxlen):
        nxt = []
        for word, s, t in frontier:
            for kind in LETTERS:
                s2 = s + (kind[1] == "S")
                t2 = t + (kind[1] == "T")
                if s2 > t2:
                    continue
                nxt.append((word + (kind,), s2, t2))
        for word, _, _ in nxt:
            out.append(OperatorWord(word))
        frontier = nxt
    return out


def sweep_word_classes(maxlen: int):
    """Group every valid word by endpoint, sharing prefix computations.

    Yields (word, endpoint, last_letter, classes) tuples; the classes dict
    is the canonical form of the word's symmetrization.
    """
    stack = [(OperatorWord(()), LaurentPolynomial.const(1, 1), 1, 1)]
    while stack:
        w, num, s, t = stack.pop()
        last = w.letters[-1].kind if w.letters else None
        yield w, (s - 1, t - 1), last, asym_classes(num)
        if len(w) == maxlen:
            continue
        for kind in LETTERS:
            s2 = s + (kind[1] == "S")
            t2 = t + (kind[1] == "T")
            if s2 - 1 > t2 - 1:
                continue
            child = OperatorWord(w.letters + (WordLetter(kind),))
            stack.append(
                (child, _apply_letter(num, kind, s2, t2), s2, t2))


# -- the displayed rational factors, for the expansion identities -----------------


@dataclass(frozen=True)
class StFactor:
    """One of the two displayed factors, with its subscripts."""

    kind: str
    s: int
    t: int

    def __post_init__(self):
        if self.kind not in ("S", "T"):
            raise ValueError("kind must be 'S' or 'T'")

    def numerator(self, nvars: int, z: int, others: Sequence[int],
                  invert: bool = False) -> LaurentPolynomial:
        """Numerator of the factor at the given slots.

        invert=True evaluates the factor at the reciprocals of all its
        arguments (the Q-labelled usage); the result stays Laurent.
        """
        sign = -1 if invert else 1
        if self.kind == "S":
            out = _monomial(nvars, z, sign * (2 * self.s - self.t - 1))
            for i in others:
                tri = (_kernel_pair_inv(nvars, z, i) if invert
                       else _kernel_pair(nvars, z, i))
                rec = (_one_minus(nvars, i) if invert
                       else _one_minus_recip(nvars, i))
                out = out * tri * rec
            return out
        out = (_one_minus(nvars, z) if invert
               else _one_minus_recip(nvars, z)) ** self.s
        out = out * _monomial(nvars, z, sign * (self.t - 2))
        for i in others:
            tri = (_kernel_pair_inv(nvars, i, z) if invert
                   else _kernel_pair(nvars, i, z))
            out = out * tri
        return out

    def denominator_value(self, point: Sequence, z: int,
                          others: Sequence[int], invert: bool = False):
        """Exact value of the factor's denominator at a rational point."""
        from fractions import Fraction
        val = Fraction(1)
        pz = Fraction(point[z]) ** (-1 if invert else 1)
        for i in others:
            pi = Fraction(point[i]) ** (-1 if invert else 1)
            if self.kind == "S":
                val *= pi - pz
            else:
                val *= (pz - pi) * pi
        return val

    def value(self, point: Sequence, z: int, others: Sequence[int],
              invert: bool = False):
        num = self.numerator(len(point), z, others, invert)
        return num.eval(tuple(point)) / self.denominator_value(
            point, z, others, invert)


def _kernel_pair_inv(nvars: int, p: int, q: int) -> LaurentPolynomial:
    # 1 - z_p^-1 + z_p^-1 z_q^-1
    e_p = [0] * nvars
    e_p[p] = -1
    e_pq = list(e_p)
    e_pq[q] -= 1
    return LaurentPolynomial(nvars, {
        tuple([0] * nvars): 1,
        tuple(e_p): -1,
        tuple(e_pq): 1,
    })


def plain_sym(f: LaurentPolynomial) -> LaurentPolynomial:
    """Unsigned symmetrization by explicit summation over all orders."""
    total = LaurentPolynomial.zero(f.nvars)
    for perm in permutations(range(f.nvars)):
        total = total + f.permute(perm)
    return total


def _pair_product(nvars: int, slots: Sequence[int]) -> LaurentPolynomial:
    out = LaurentPolynomial.const(nvars, 1)
    for a in range(len(slots)):
        for b in range(a + 1, len(slots)):
            out = out * (_monomial(nvars, slots[b], 1)
                         - _monomial(nvars, slots[a], 1))
    return out


def _embed_to_slots(f: LaurentPolynomial, nvars: int,
                    slots: Sequence[int]) -> LaurentPolynomial:
    terms = {}
    for e, c in f.terms.items():
        e2 = [0] * nvars
        for k, slot in enumerate(slots):
            e2[slot] = e[k]
        terms[tuple(e2)] = c
    return LaurentPolynomial(nvars, terms, _canonical=True)


def check_sym_recursion(kind: str, s: int, t: int,
                        f: LaurentPolynomial) -> CheckOutcome:
    """One expansion identity: Sym of a letter application, re-grouped.

    For a test function f of s+t-2 variables, the symmetrization of the
    letter applied to f equals the sum over which variable plays the
    distinguished role, each term weighting the symmetrization of f in
    the remaining variables. Checked exactly after clearing every
    denominator against the full pair product.
    """
    if kind not in LETTERS:
        raise ValueError(f"unknown letter {kind!r}")
    m = s + t - 1
    if f.nvars != m - 1:
        raise ValueError("f must have one variable less")
    base = StFactor(kind[1], s, t)
    invert = kind[0] == "Q"

    pivot_rest = (list(range(1, m)) if kind in ("PS", "QT")
                  else list(range(m - 1)))
    lhs = asym(_apply_letter(f, kind, s, t) * _pair_product(m, pivot_rest))

    symf = plain_sym(f)
    rhs = LaurentPolynomial.zero(m)
    for i in range(m):
        others = [j for j in range(m) if j != i]
        num = base.numerator(m, i, others, invert)
        cleared = _clear_factor(base.kind, m, i, others, invert)
        term = num * cleared * _embed_to_slots(symf, m, others)
        rhs = rhs + term
    if lhs == rhs:
        return True, None
    return False, (kind, s, t)


def _clear_factor(kind: str, m: int, i: int, others: Sequence[int],
                  invert: bool) -> LaurentPolynomial:
    """Vandermonde divided by the factor's denominator, as a Laurent poly."""
    out = _pair_product(m, others)
    below = sum(1 for j in others if j < i)
    above = len(others) - below
    if kind == "S" and not invert:
        # den prod_j (z_j - z_i); V / den = (-1)^below * pairs(others)
        if below % 2:
            out = -out
        return out
    if kind == "T" and not invert:
        # den prod_j (z_i - z_j) z_j
        sign = -1 if above % 2 else 1
        for j in others:
            out = out * _monomial(m, j, -1)
        return -out if sign < 0 else out
    if kind == "S" and invert:
        # den prod_j (z_j^-1 - z_i^-1) = prod_j (z_i - z_j)/(z_i z_j)
        sign = -1 if above % 2 else 1
        out = out * _monomial(m, i, len(others))
        for j in others:
            out = out * _monomial(m, j, 1)
        return -out if sign < 0 else out
    # T inverted: den prod_j (z_i^-1 - z_j^-1) z_j^-1
    #           = prod_j (z_j - z_i) z_i^-1 z_j^-2
    sign = -1 if below % 2 else 1
    out = out * _monomial(m, i, len(others))
    for j in others:
        out = out * _monomial(m, j, 2)
    return -out if sign < 0 else out


def check_commutations(s: int, t: int, f: LaurentPolynomial) -> CheckOutcome:
    """Adjacent-letter exchange identities at one index pair.

    Verifies, on the given test function: same-label S/T exchange for both
    labels, and the P/Q exchange of two T letters (t >= 2). Each identity
    is an exact equality of numerators in s+t-1 variables.
    """
    if s + t < 3:
        raise ValueError("needs s+t >= 3")
    if f.nvars != s + t - 3:
        raise ValueError("f must have s+t-3 variables")
    checks = [
        ("PS", s, t, "PT", s - 1, t, "PT", s, t, "PS", s, t - 1),
        ("QS", s, t, "QT", s - 1, t, "QT", s, t, "QS", s, t - 1),
    ]
    for (k1, s1, t1, k2, s2, t2, k3, s3, t3, k4, s4, t4) in checks:
        lhs = _apply_letter(_apply_letter(f, k2, s2, t2), k1, s1, t1)
        rhs = _apply_letter(_apply_letter(f, k4, s4, t4), k3, s3, t3)
        if lhs != rhs:
            return False, (k1, s, t)
    if t >= 2:
        lhs = _apply_letter(_apply_letter(f, "QT", s, t - 1), "PT", s, t)
        rhs = _apply_letter(_apply_letter(f, "PT", s, t - 1), "QT", s, t)
        if lhs != rhs:
            return False, ("PT/QT", s, t)
    return True, None
