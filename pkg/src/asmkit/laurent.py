"""Sparse multivariate Laurent polynomials with exact coefficients.

A polynomial is a map from exponent vectors (tuples of signed integers, one
slot per variable) to coefficients.  Coefficients are ``int``,
``fractions.Fraction`` or :class:`XPoly`, a dense univariate polynomial in
the statistic variable X; the three kinds interoperate freely and stay
exact.  Zero coefficients are never stored, so equality of polynomials is
equality of their term maps.

Values are immutable by convention: every operation returns a new object and
nothing here mutates a polynomial after construction, so instances can be
shared freely between worker processes.

Variable slots are 0-based in code and render as ``z1, z2, ...``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union


class NotDivisibleError(ArithmeticError):
    """Exact division left a nonzero remainder.

    ``witness`` holds the exponent tuple of the remainder's leading term so
    failed divisibility claims can be reported with a concrete monomial.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def _normalize_scalar(c):
    """Collapse integral Fractions back to int (keeps hot paths on ints)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class XPoly:
    """Dense univariate polynomial in X over exact rationals.

    ``coeffs[i]`` is the coefficient of ``X**i``.  Trailing zeros are
    stripped on construction; the zero polynomial stores an empty tuple and
    has ``degree() is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "XPoly":
        return cls((c,))

    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant X-polynomial")
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return XPoly((other,))
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return XPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of an X-polynomial")
        out = XPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def subs(self, value):
        """Evaluate at X = value, exactly (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _normalize_scalar(acc)

    def scale(self, factor):
        return XPoly(tuple(c * factor for c in self.coeffs))

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            if i == 0:
                body = str(a)
            elif i == 1:
                body = "X" if a == 1 else f"{a}*X"
            else:
                body = f"X^{i}" if a == 1 else f"{a}*X^{i}"
            pieces.append((neg, body))
        out = []
        for idx, (neg, body) in enumerate(pieces):
            if idx == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"XPoly({self.render()})"


#: The statistic variable itself.
X = XPoly((0, 1))

Scalar = Union[int, Fraction, XPoly]


def _coeff_quot(a: Scalar, b: Scalar) -> Scalar:
    """Exact coefficient quotient a / b; b must be a nonzero scalar."""
    if isinstance(b, XPoly):
        if not b.is_constant():
            raise NotDivisibleError(
                "division by a non-constant X-polynomial coefficient")
        b = b.constant_value()
    if isinstance(a, XPoly):
        return a.scale(Fraction(1, 1) / Fraction(b))
    return _normalize_scalar(Fraction(a) / Fraction(b))


class LaurentPolynomial:
    """Sparse exact Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping = None, *, _canonical=False):
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        elif _canonical:
            # trusted internal path: terms already zero-free with good keys
            self.terms = dict(terms)
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(
                        f"exponent vector {e} has length {len(e)}, "
                        f"expected {nvars}")
                if c:
                    clean[e] = c
            self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {}, _canonical=True)

    @classmethod
    def const(cls, nvars: int, c) -> "LaurentPolynomial":
        if not c:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c}, _canonical=True)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPolynomial":
        """The monomial z_{i+1} (slot i, 0-based)."""
        return cls.monomial(nvars, {i: 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Mapping[int, int], coeff=1
                 ) -> "LaurentPolynomial":
        """coeff * prod z_{i+1}^e for (i, e) in exps."""
        if not coeff:
            return cls.zero(nvars)
        e = [0] * nvars
        for i, p in exps.items():
            if not 0 <= i < nvars:
                raise IndexError(f"variable index {i} out of range")
            e[i] = p
        return cls(nvars, {tuple(e): coeff}, _canonical=True)

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, XPoly)):
            return self == LaurentPolynomial.const(self.nvars, other)
        return NotImplemented

    def constant_value(self):
        """The value of a polynomial with no variable occurrences."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            ((e, c),) = self.terms.items()
            if not any(e):
                return c
        raise ValueError("polynomial is not constant")

    def deg_in(self, var: int):
        """Largest exponent of slot ``var``, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(e[var] for e in self.terms)

    def min_in(self, var: int):
        if not self.terms:
            return None
        return min(e[var] for e in self.terms)

    def min_exponents(self) -> tuple:
        """Componentwise minimum exponent vector (zero polynomial: zeros)."""
        if not self.terms:
            return (0,) * self.nvars
        mins = None
        for e in self.terms:
            if mins is None:
                mins = list(e)
            else:
                for i, v in enumerate(e):
                    if v < mins[i]:
                        mins[i] = v
        return tuple(mins)

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, XPoly)):
            other = LaurentPolynomial.const(self.nvars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPolynomial(self.nvars, out, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(
            self.nvars, {e: -c for e, c in self.terms.items()},
            _canonical=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, XPoly)):
            other = LaurentPolynomial.const(self.nvars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, XPoly)):
            if not other:
                return LaurentPolynomial.zero(self.nvars)
            return LaurentPolynomial(
                self.nvars, {e: c * other for e, c in self.terms.items()},
                _canonical=True)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_compatible(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return LaurentPolynomial(self.nvars, out, _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError(
                "negative polynomial powers are not defined; "
                "invert variables explicitly instead")
        out = LaurentPolynomial.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- the operations the rest of the library is built on -----------------

    def invert_vars(self, which: Iterable[int]) -> "LaurentPolynomial":
        """Replace z_i by its reciprocal for every slot i in ``which``."""
        idx = sorted(set(which))
        for i in idx:
            if not 0 <= i < self.nvars:
                raise IndexError(f"variable index {i} out of range")
        if not idx:
            return self
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i in idx:
                ne[i] = -ne[i]
            out[tuple(ne)] = c
        return LaurentPolynomial(self.nvars, out, _canonical=True)

    def permute(self, images: Sequence[int]) -> "LaurentPolynomial":
        """Apply the substitution action p(z_1,..) -> p(z_{sigma(1)},..).

        ``images[i]`` is the 0-based image sigma(i).  The monomial exponent
        that sat in slot i moves to slot images[i]; composing
        ``p.permute(s).permute(t)`` equals ``p.permute(compose(t, s))`` where
        ``compose(t, s)[i] = t[s[i]]``.
        """
        n = self.nvars
        if len(images) != n or sorted(images) != list(range(n)):
            raise ValueError(f"{images!r} is not a permutation of 0..{n - 1}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, v in enumerate(e):
                ne[images[i]] = v
            out[tuple(ne)] = c
        return LaurentPolynomial(n, out, _canonical=True)

    def substitute(self, values: Mapping[int, Scalar]) -> "LaurentPolynomial":
        """Substitute exact values for some variable slots.

        Substituted slots disappear from the exponent vectors (set to 0);
        the variable count is unchanged.  Substituting 0 into a slot that
        occurs with a negative exponent raises ValueError.
        """
        if not values:
            return self
        for i in values:
            if not 0 <= i < self.nvars:
                raise IndexError(f"variable index {i} out of range")
        out = {}
        for e, c in self.terms.items():
            factor = 1
            ne = list(e)
            for i, v in values.items():
                p = e[i]
                if p:
                    if p < 0:
                        if not v:
                            raise ValueError(
                                "zero substituted into a negative power")
                        if isinstance(v, int):
                            v = Fraction(v)
                    factor = factor * v ** p
                    ne[i] = 0
            c = c * factor
            if not c:
                continue
            key = tuple(ne)
            s = out.get(key)
            if s is None:
                out[key] = c
            else:
                s = s + c
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPolynomial(
            self.nvars,
            {e: _normalize_scalar(c) if not isinstance(c, XPoly) else c
             for e, c in out.items()},
            _canonical=True)

    def eval(self, point: Sequence[Scalar]) -> Scalar:
        """Exact evaluation at a full point."""
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        res = self.substitute(dict(enumerate(point)))
        return res.constant_value()

    def exact_div(self, den: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient self / den; raises NotDivisibleError on remainder.

        Monomial and single Vandermonde-factor divisors take linear-time
        paths; ``vandermonde(n)`` itself is recognized and divided factor by
        factor; anything else goes through lex leading-term reduction.
        """
        if isinstance(den, (int, Fraction, XPoly)):
            den = LaurentPolynomial.const(self.nvars, den)
        self._check_compatible(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.nvars)
        if len(den.terms) == 1:
            ((de, dc),) = den.terms.items()
            out = {
                tuple(a - b for a, b in zip(e, de)): _coeff_quot(c, dc)
                for e, c in self.terms.items()
            }
            return LaurentPolynomial(self.nvars, out, _canonical=True)
        factor = _as_vandermonde_factor(den)
        if factor is not None:
            j, i, shift, scale = factor
            num = self
            if any(shift):
                num = num * LaurentPolynomial.monomial(
                    self.nvars, {k: -s for k, s in enumerate(shift) if s})
            if scale != 1:
                num = num * _coeff_quot(1, scale)
            return divide_binomial(num, j, i)
        if (self.nvars >= 2
                and len(den.terms) == _vandermonde_size(self.nvars)
                and den == vandermonde(self.nvars)):
            return divide_by_vandermonde(self)
        return self._exact_div_general(den)

    def _exact_div_general(self, den: "LaurentPolynomial"):
        fmin = self.min_exponents()
        dmin = den.min_exponents()
        # normalize to ordinary polynomials; per-variable minima are
        # additive under multiplication, so the quotient normalizes too
        rem = {tuple(a - b for a, b in zip(e, fmin)): c
               for e, c in self.terms.items()}
        dterms = {tuple(a - b for a, b in zip(e, dmin)): c
                  for e, c in den.terms.items()}
        ld = max(dterms)
        ldc = dterms[ld]
        quot = {}
        while rem:
            lf = max(rem)
            qe = tuple(a - b for a, b in zip(lf, ld))
            if any(x < 0 for x in qe):
                raise NotDivisibleError(
                    "polynomial division has a nonzero remainder",
                    witness=tuple(a + b for a, b in zip(lf, fmin)))
            qc = _coeff_quot(rem[lf], ldc)
            quot[qe] = qc
            for e, c in dterms.items():
                ke = tuple(a + b for a, b in zip(qe, e))
                s = rem.get(ke)
                nc = c * qc
                if s is None:
                    rem[ke] = -nc
                else:
                    s = s - nc
                    if s:
                        rem[ke] = s
                    else:
                        del rem[ke]
        offset = tuple(a - b for a, b in zip(fmin, dmin))
        return LaurentPolynomial(
            self.nvars,
            {tuple(a + b for a, b in zip(e, offset)): c
             for e, c in quot.items()},
            _canonical=True)

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: lex-descending terms, explicit signs."""
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"z{i + 1}" if p == 1 else f"z{i + 1}^{p}"
                for i, p in enumerate(e) if p)
            if isinstance(c, XPoly):
                neg = False
                cs = f"({c.render()})"
                body = f"{cs}*{mono}" if mono else cs
            else:
                neg = c < 0
                a = -c if neg else c
                if mono:
                    body = mono if a == 1 else f"{a}*{mono}"
                else:
                    body = str(a)
            pieces.append((neg, body))
        out = []
        for idx, (neg, body) in enumerate(pieces):
            if idx == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        s = self.render()
        if len(s) > 120:
            s = f"{s[:117]}..."
        return f"<LaurentPolynomial {self.nvars}v: {s}>"


def _vandermonde_size(n: int) -> int:
    # expanded Vandermonde term count: permutations of n distinct exponents
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _as_vandermonde_factor(den: LaurentPolynomial):
    """Recognize den = scale * z^shift * (z_j - z_i); None otherwise."""
    if len(den.terms) != 2:
        return None
    (e1, c1), (e2, c2) = den.terms.items()
    shift = tuple(min(a, b) for a, b in zip(e1, e2))
    r1 = tuple(a - b for a, b in zip(e1, shift))
    r2 = tuple(a - b for a, b in zip(e2, shift))
    def is_unit(v):
        return sum(v) == 1 and set(v) <= {0, 1}

    for (ra, ca), (rb, cb) in ((r1, c1), (r2, c2)), ((r2, c2), (r1, c1)):
        # want ra = unit_j with coeff scale, rb = unit_i with coeff -scale
        if is_unit(ra) and is_unit(rb):
            j = ra.index(1)
            i = rb.index(1)
            if i == j:
                return None
            if ca == -cb:
                return j, i, shift, ca
    return None


def divide_binomial(f: LaurentPolynomial, j: int, i: int
                    ) -> LaurentPolynomial:
    """Exact quotient f / (z_{j+1} - z_{i+1}) by synthetic division.

    Viewing f as a polynomial in slot j with coefficients in the remaining
    variables, the quotient coefficients satisfy q_{k-1} = f_k + z_i * q_k
    descending from the top degree; the final carry must vanish exactly.
    Linear in the number of terms and free of coefficient division, so it
    works over any coefficient kind including XPoly.
    """
    if i == j:
        raise ValueError("binomial divisor needs two distinct variables")
    if f.is_zero():
        return f
    buckets = {}
    for e, c in f.terms.items():
        k = e[j]
        key = e[:j] + (0,) + e[j + 1:]
        buckets.setdefault(k, {})[key] = c
    kmax = max(buckets)
    kmin = min(buckets)
    out = {}
    carry = {}
    for k in range(kmax, kmin - 1, -1):
        nxt = dict(buckets.get(k, ()))
        for key, c in carry.items():
            key2 = key[:i] + (key[i] + 1,) + key[i + 1:]
            s = nxt.get(key2)
            if s is None:
                nxt[key2] = c
            else:
                s = s + c
                if s:
                    nxt[key2] = s
                else:
                    del nxt[key2]
        carry = nxt
        if k > kmin:
            for key, c in nxt.items():
                out[key[:j] + (k - 1,) + key[j + 1:]] = c
        elif nxt:
            lead = max(nxt)
            raise NotDivisibleError(
                "not divisible by the Vandermonde factor",
                witness=lead[:j] + (kmin,) + lead[j + 1:])
    return LaurentPolynomial(f.nvars, out, _canonical=True)


def divide_by_vandermonde(f: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient f / vandermonde(f.nvars), factor by factor."""
    for i in range(f.nvars):
        for j in range(i + 1, f.nvars):
            f = divide_binomial(f, j, i)
    return f


@lru_cache(maxsize=None)
def vandermonde(n: int) -> LaurentPolynomial:
    """The expanded product of (z_j - z_i) over all pairs i < j."""
    if n < 1:
        raise ValueError("need at least one variable")
    out = LaurentPolynomial.const(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (LaurentPolynomial.variable(n, j)
                         - LaurentPolynomial.variable(n, i))
    return out
