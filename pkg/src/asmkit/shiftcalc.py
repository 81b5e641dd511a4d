"""Exact shift-operator calculus on ordinary multivariate polynomials.

Polynomials here live over named integer variables and exact rational
coefficients.  The module provides the forward and backward difference
operators, their right inverses built from extended interval sums, the
two-variable operators V and W with the truncating inverse of W, and the
checks built from them: shift antisymmetry of a polynomial and the
transfer identity between the two operator products of the central
conjecture.

Extended sums follow one convention throughout: a sum from a to b is the
usual one for b >= a, empty for b = a - 1, and minus the sum over the gap
b+1 .. a-1 for b <= a - 2.  Concretely, with S the discrete antiderivative
(S(x) - S(x-1) = p(x)), every case is S(hi) - S(lo - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union


def binom_ext(x, j: int):
    """Binomial coefficient as a polynomial in the top argument.

    For j >= 0 this is x(x-1)...(x-j+1)/j!, defined for any integer or
    Fraction x; negative j gives 0.
    """
    if j < 0:
        return 0
    num = 1
    for r in range(j):
        num *= x - r
    den = 1
    for r in range(2, j + 1):
        den *= r
    if isinstance(num, int) and num % den == 0:
        return num // den
    return Fraction(num, den)


@lru_cache(maxsize=None)
def _stirling2(d: int, j: int) -> int:
    if d == 0:
        return 1 if j == 0 else 0
    if j <= 0 or j > d:
        return 0
    return j * _stirling2(d - 1, j) + _stirling2(d - 1, j - 1)


def _factorial(j: int) -> int:
    out = 1
    for r in range(2, j + 1):
        out *= r
    return out


#: A summation bound: either an integer or (variable_name, offset).
Bound = Union[int, Tuple[str, int]]


class OrdinaryPolynomial:
    """Sparse polynomial over named variables with exact coefficients.

    ``vars`` is a sorted tuple of names; ``terms`` maps exponent tuples
    (aligned with ``vars``, all entries >= 0) to nonzero int or Fraction
    coefficients.  Instances are immutable by convention.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str] = (), terms: Mapping = None, *,
                 _canonical: bool = False):
        vs = tuple(vars)
        if terms is None:
            terms = {}
        if not _canonical:
            if list(vs) != sorted(set(vs)):
                raise ValueError("variable names must be sorted and unique")
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != len(vs):
                    raise ValueError("exponent length does not match vars")
                if any(x < 0 for x in e):
                    raise ValueError("ordinary polynomials need exponents >= 0")
                if c:
                    clean[e] = c
            terms = clean
        self.vars = vs
        self.terms = dict(terms)

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, c) -> "OrdinaryPolynomial":
        if not c:
            return cls((), {})
        return cls((), {(): c}, _canonical=True)

    @classmethod
    def variable(cls, name: str) -> "OrdinaryPolynomial":
        return cls((name,), {(1,): 1}, _canonical=True)

    @classmethod
    def zero(cls) -> "OrdinaryPolynomial":
        return cls((), {})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _strip(self) -> "OrdinaryPolynomial":
        """Drop variables that occur in no term."""
        if not self.terms:
            return OrdinaryPolynomial((), {})
        used = [i for i in range(len(self.vars))
                if any(e[i] for e in self.terms)]
        if len(used) == len(self.vars):
            return self
        vs = tuple(self.vars[i] for i in used)
        terms = {tuple(e[i] for i in used): c for e, c in self.terms.items()}
        return OrdinaryPolynomial(vs, terms, _canonical=True)

    def _aligned_with(self, other: "OrdinaryPolynomial"):
        merged = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(p):
            if p.vars == merged:
                return p.terms
            pos = [merged.index(v) for v in p.vars]
            out = {}
            for e, c in p.terms.items():
                ne = [0] * len(merged)
                for i, x in enumerate(e):
                    ne[pos[i]] = x
                out[tuple(ne)] = c
            return out

        return merged, remap(self), remap(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = OrdinaryPolynomial.const(other)
        if not isinstance(other, OrdinaryPolynomial):
            return NotImplemented
        _, a, b = self._aligned_with(other)
        return a == b

    def __hash__(self):
        p = self._strip()
        return hash((p.vars, frozenset(p.terms.items())))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = OrdinaryPolynomial.const(other)
        if not isinstance(other, OrdinaryPolynomial):
            return NotImplemented
        merged, a, b = self._aligned_with(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return OrdinaryPolynomial(merged, out, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return OrdinaryPolynomial(
            self.vars, {e: -c for e, c in self.terms.items()},
            _canonical=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = OrdinaryPolynomial.const(other)
        if not isinstance(other, OrdinaryPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return OrdinaryPolynomial.zero()
            return OrdinaryPolynomial(
                self.vars, {e: c * other for e, c in self.terms.items()},
                _canonical=True)
        if not isinstance(other, OrdinaryPolynomial):
            return NotImplemented
        merged, a, b = self._aligned_with(other)
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
        return OrdinaryPolynomial(merged, out, _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = OrdinaryPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    # -- variable handling -------------------------------------------------------

    def degree_in(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coefficients_in(self, var: str) -> Dict[int, "OrdinaryPolynomial"]:
        """Split into {power: coefficient polynomial without var}."""
        if var not in self.vars:
            return {0: self}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: Dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {d: OrdinaryPolynomial(rest, t, _canonical=True)
                for d, t in buckets.items()}

    def subs_affine(self, var: str, target: Optional[str], offset=0
                    ) -> "OrdinaryPolynomial":
        """Substitute var -> target + offset (target None means a constant).

        The target may be a fresh name, an existing variable, or var itself;
        exponents merge where needed.
        """
        if var not in self.vars:
            return self
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        if target is None or target in rest:
            new_vars = rest
        else:
            new_vars = tuple(sorted(rest + (target,)))
        pos = [new_vars.index(v) for v in rest]
        t_idx = new_vars.index(target) if target is not None else None
        out: dict = {}

        def put(key, coeff):
            s = out.get(key)
            if s is None:
                out[key] = coeff
            else:
                s = s + coeff
                if s:
                    out[key] = s
                else:
                    del out[key]

        for e, c in self.terms.items():
            d = e[i]
            base = [0] * len(new_vars)
            for bi, x in enumerate(e[:i] + e[i + 1:]):
                base[pos[bi]] = x
            if target is None:
                coeff = c * offset ** d if d else c
                if coeff:
                    put(tuple(base), coeff)
                continue
            for r in range(d + 1):
                coeff = c * binom_ext(d, r) * offset ** (d - r)
                if not coeff:
                    continue
                ne = list(base)
                ne[t_idx] += r
                put(tuple(ne), coeff)
        return OrdinaryPolynomial(new_vars, out, _canonical=True)

    def eval(self, assignment: Mapping[str, object]):
        """Full or partial evaluation; returns a scalar when no vars remain."""
        p = self
        for v, val in assignment.items():
            if v in p.vars:
                p = p._eval_one(v, val)
        p = p._strip()
        if p.vars:
            return p
        return p.terms.get((), 0)

    def _eval_one(self, var: str, val) -> "OrdinaryPolynomial":
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: dict = {}
        powers = {0: 1}

        def pw(d):
            if d not in powers:
                powers[d] = powers[d - 1] * val if d - 1 in powers else val ** d
            return powers[d]

        for e, c in self.terms.items():
            c = c * pw(e[i])
            if not c:
                continue
            key = e[:i] + e[i + 1:]
            s = out.get(key)
            if s is None:
                out[key] = c
            else:
                s = s + c
                if s:
                    out[key] = s
                else:
                    del out[key]
        return OrdinaryPolynomial(rest, out, _canonical=True)

    def render(self) -> str:
        p = self._strip()
        if not p.terms:
            return "0"
        pieces = []
        for e in sorted(p.terms, reverse=True):
            c = p.terms[e]
            mono = "*".join(
                v if d == 1 else f"{v}^{d}"
                for v, d in zip(p.vars, e) if d)
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
        return f"<OrdinaryPolynomial {self.render()}>"


# -- extended interval sums ----------------------------------------------------

_SUM_TMP = "_s"


@lru_cache(maxsize=None)
def _binom_shift_poly(j: int) -> OrdinaryPolynomial:
    # C(t + 1, j + 1) as a polynomial in t
    num = OrdinaryPolynomial.const(1)
    t = OrdinaryPolynomial.variable(_SUM_TMP)
    for r in range(j + 1):
        num = num * (t + (1 - r))
    return num * Fraction(1, _factorial(j + 1))


def _antiderivative(p: OrdinaryPolynomial, var: str) -> OrdinaryPolynomial:
    """S with S(t) = sum of p(var) for var from 0 to t, in the temp variable."""
    if _SUM_TMP in p.vars:
        raise ValueError("temporary summation variable collides")
    total = OrdinaryPolynomial.zero()
    for d, coef in p.coefficients_in(var).items():
        for j in range(d + 1):
            s2 = _stirling2(d, j)
            if s2:
                total = total + coef * (s2 * _factorial(j)) \
                    * _binom_shift_poly(j)
    return total


def _subs_bound(s: OrdinaryPolynomial, bound: Bound, extra: int
                ) -> OrdinaryPolynomial:
    if isinstance(bound, int):
        return s.subs_affine(_SUM_TMP, None, bound + extra)
    name, off = bound
    return s.subs_affine(_SUM_TMP, name, off + extra)


def ext_sum(p: OrdinaryPolynomial, var: str, lo: Bound, hi: Bound
            ) -> OrdinaryPolynomial:
    """Sum of p over var from lo to hi, in the extended sense.

    Bounds are integers or (variable, offset) pairs; the result is the
    polynomial S(hi) - S(lo - 1) with S the discrete antiderivative, which
    reproduces the ordinary sum for hi >= lo - 1 and the negated gap sum
    for hi <= lo - 2.
    """
    s = _antiderivative(p, var)
    return _subs_bound(s, hi, 0) - _subs_bound(s, lo, -1)


# -- elementary operators ------------------------------------------------------


def shift(p: OrdinaryPolynomial, var: str, c: int = 1) -> OrdinaryPolynomial:
    """E^c: replace var by var + c."""
    if c == 0:
        return p
    return p.subs_affine(var, var, c)


def delta_upper(p: OrdinaryPolynomial, var: str, power: int = 1
                ) -> OrdinaryPolynomial:
    """Forward difference (E - id) iterated."""
    for _ in range(power):
        p = shift(p, var, 1) - p
    return p


def delta_lower(p: OrdinaryPolynomial, var: str, power: int = 1
                ) -> OrdinaryPolynomial:
    """Backward difference (id - E^{-1}) iterated."""
    for _ in range(power):
        p = p - shift(p, var, -1)
    return p


def inv_delta_upper(p: OrdinaryPolynomial, var: str, z: Bound
                    ) -> OrdinaryPolynomial:
    """Right inverse of the forward difference: minus the sum from var to z."""
    return -ext_sum(p, var, (var, 0), z)


def inv_delta_lower(p: OrdinaryPolynomial, var: str, z: Bound
                    ) -> OrdinaryPolynomial:
    """Right inverse of the backward difference: the sum from z to var."""
    return ext_sum(p, var, z, (var, 0))


@dataclass(frozen=True)
class ConstantVector:
    """Integer constants indexed by negative positions start..-1.

    Used as the vector of evaluation points for iterated right inverses;
    position -1 is always applied first.
    """

    start: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if self.start > -1 or len(self.values) != -self.start:
            raise ValueError("need one value per index start..-1")

    @classmethod
    def from_function(cls, start: int, fn) -> "ConstantVector":
        return cls(start, tuple(fn(j) for j in range(start, 0)))

    def value_at(self, j: int) -> int:
        if not self.start <= j <= -1:
            raise IndexError(f"index {j} outside {self.start}..-1")
        return self.values[j - self.start]

    def __len__(self) -> int:
        return -self.start


def inv_power(p: OrdinaryPolynomial, var: str, constants: ConstantVector,
              kind: str = "Delta") -> OrdinaryPolynomial:
    """Iterated right inverse with one constant per step.

    The constant at position -1 is innermost: it is consumed by the first
    application, then -2, and so on down to the start position.
    """
    fn = inv_delta_upper if kind == "Delta" else inv_delta_lower
    for j in range(-1, constants.start - 1, -1):
        p = fn(p, var, constants.value_at(j))
    return p


@dataclass(frozen=True)
class OperatorSpec:
    """One operator application in a form suitable for tables and reports.

    kind is one of E, Delta, delta, InvDelta, Invdelta, V, W, Winv, Swap.
    E uses var, shift and power; Delta/delta use var and power; the right
    inverses use var with either a single bound (constant) or a
    ConstantVector (constants) for iterated application; the two-variable
    kinds use var and var2.
    """

    kind: str
    var: str
    var2: Optional[str] = None
    power: int = 1
    shift: int = 1
    constant: Optional[Bound] = None
    constants: Optional[ConstantVector] = None


def apply_shift(p: OrdinaryPolynomial, spec: OperatorSpec
                ) -> OrdinaryPolynomial:
    """Apply an E, Delta or delta spec."""
    if spec.kind == "E":
        return shift(p, spec.var, spec.shift * spec.power)
    if spec.kind == "Delta":
        return delta_upper(p, spec.var, spec.power)
    if spec.kind == "delta":
        return delta_lower(p, spec.var, spec.power)
    raise ValueError(f"not a shift/difference kind: {spec.kind}")


def apply_inverse(p: OrdinaryPolynomial, spec: OperatorSpec
                  ) -> OrdinaryPolynomial:
    """Apply a right-inverse spec, single or iterated."""
    if spec.kind not in ("InvDelta", "Invdelta"):
        raise ValueError(f"not a right-inverse kind: {spec.kind}")
    kind = "Delta" if spec.kind == "InvDelta" else "delta"
    if spec.constants is not None:
        return inv_power(p, spec.var, spec.constants, kind)
    if spec.constant is None:
        raise ValueError("right inverse needs a bound")
    fn = inv_delta_upper if kind == "Delta" else inv_delta_lower
    return fn(p, spec.var, spec.constant)


def swap_vars(p: OrdinaryPolynomial, x: str, y: str) -> OrdinaryPolynomial:
    tmp = "_swap"
    if tmp in p.vars:
        raise ValueError("temporary swap variable collides")
    return (p.subs_affine(x, tmp, 0)
            .subs_affine(y, x, 0)
            .subs_affine(tmp, y, 0))


def op_v(p: OrdinaryPolynomial, x: str, y: str) -> OrdinaryPolynomial:
    """V: E^{-1} in the first slot plus E in the second minus their product."""
    a = shift(p, x, -1)
    b = shift(p, y, 1)
    return a + b - shift(a, y, 1)


def op_w(p: OrdinaryPolynomial, x: str, y: str) -> OrdinaryPolynomial:
    """W = E_x V_{x,y} = id + E_y Delta_x."""
    return p + shift(delta_upper(p, x), y, 1)


def op_w_inverse(p: OrdinaryPolynomial, x: str, y: str
                 ) -> OrdinaryPolynomial:
    """Inverse of W on polynomials: the alternating E_y Delta_x series.

    The series truncates because each forward difference lowers the degree
    in x by one.
    """
    total = p
    cur = p
    while True:
        cur = -shift(delta_upper(cur, x), y, 1)
        if cur.is_zero():
            return total
        total = total + cur


def apply_vw(p: OrdinaryPolynomial, spec: OperatorSpec
             ) -> OrdinaryPolynomial:
    """Apply a V, W, Winv or Swap spec (power-fold)."""
    fns = {"V": op_v, "W": op_w, "Winv": op_w_inverse, "Swap": swap_vars}
    if spec.kind not in fns:
        raise ValueError(f"not a two-variable kind: {spec.kind}")
    if spec.var2 is None:
        raise ValueError("two-variable operator needs var2")
    fn = fns[spec.kind]
    for _ in range(spec.power):
        p = fn(p, spec.var, spec.var2)
    return p


def apply_operator(p: OrdinaryPolynomial, spec: OperatorSpec
                   ) -> OrdinaryPolynomial:
    if spec.kind in ("E", "Delta", "delta"):
        return apply_shift(p, spec)
    if spec.kind in ("InvDelta", "Invdelta"):
        return apply_inverse(p, spec)
    return apply_vw(p, spec)


# -- slot renaming and diagonals -----------------------------------------------


def rename_slots(p: OrdinaryPolynomial, old: Sequence[str],
                 new: Sequence[str]) -> OrdinaryPolynomial:
    """Rename variables old[i] -> new[i] simultaneously."""
    if len(old) != len(new):
        raise ValueError("name lists differ in length")
    tmps = [f"_r{i}" for i in range(len(old))]
    for t in tmps:
        if t in p.vars:
            raise ValueError("temporary rename variable collides")
    for o, t in zip(old, tmps):
        p = p.subs_affine(o, t, 0)
    for t, n in zip(tmps, new):
        p = p.subs_affine(t, n, 0)
    return p


def diagonal(p: OrdinaryPolynomial, names: Iterable[str], target: str
             ) -> OrdinaryPolynomial:
    """Substitute every listed variable by the single target variable."""
    for v in names:
        p = p.subs_affine(v, target, 0)
    return p


# -- structural checks ----------------------------------------------------------


def verify_antisymmetry(p: OrdinaryPolynomial, slots: Sequence[str]) -> bool:
    """Does swapping any two adjacent slot variables negate p?"""
    for i in range(len(slots) - 1):
        if swap_vars(p, slots[i], slots[i + 1]) != -p:
            return False
    return True


def verify_shift_antisymmetry(a: OrdinaryPolynomial, slots: Sequence[str]):
    """Check the swap identity satisfied by bottom-row counting polynomials.

    For each adjacent slot pair (x, y) the combination V_{x,y} a must be
    killed by id + E_y E_x^{-1} S_{x,y}.  Returns (True, None) or
    (False, (x, y)) naming the offending pair.
    """
    for i in range(len(slots) - 1):
        x, y = slots[i], slots[i + 1]
        c = op_v(a, x, y)
        d = c + shift(shift(swap_vars(c, x, y), x, -1), y, 1)
        if not d.is_zero():
            return False, (x, y)
    return True, None


def antisym_seed_to_a(b: OrdinaryPolynomial, slots: Sequence[str]
                      ) -> OrdinaryPolynomial:
    """Build a shift-antisymmetric polynomial from an antisymmetric seed.

    Applies W_{later, earlier} over all slot pairs; the factors commute.
    Antisymmetric seeds map onto the whole space of shift-antisymmetric
    polynomials this way, and op_w_inverse inverts each factor.
    """
    for p in range(len(slots)):
        for q in range(p + 1, len(slots)):
            b = op_w(b, slots[q], slots[p])
    return b


def verify_transfer_conjecture(a: OrdinaryPolynomial, slots: Sequence[str],
                               s: int, t: int):
    """Compare the two operator products of the central conjecture on a.

    a is read through its ordered slots; the left side fills the first s
    slots with fresh y-variables and the rest with k-variables, the right
    side uses the reversed block order.  Both sides collapse to one
    variable on the diagonal.  Returns (True, None) or (False, diff).
    """
    m = s + t - 1
    if len(slots) != m:
        raise ValueError("slot count must be s + t - 1")
    ys = [f"_y{i}" for i in range(1, s + 1)]
    ks = [f"_k{i}" for i in range(2, t + 1)]

    lhs = rename_slots(a, slots, ys + ks)
    for i in range(1, s + 1):
        lhs = shift(lhs, ys[i - 1], 2 * s + 3 - 2 * i)
        lhs = delta_lower(lhs, ys[i - 1], i - 1)
    for i in range(2, t + 1):
        lhs = shift(lhs, ks[i - 2], 2 * i)
        lhs = delta_lower(lhs, ks[i - 2], s)
    lhs = diagonal(lhs, ys + ks, "_w")

    rhs = rename_slots(a, slots, ks + ys)
    for i in range(2, t + 1):
        rhs = shift(rhs, ks[i - 2], 2 * i)
        rhs = (-1) ** s * delta_upper(rhs, ks[i - 2], s)
    for i in range(1, s + 1):
        rhs = shift(rhs, ys[i - 1], 2 * t + 3 - 2 * i)
        rhs = (-1) ** (s - i) * delta_upper(rhs, ys[i - 1], s - i)
    rhs = diagonal(rhs, ks + ys, "_w")

    if lhs == rhs:
        return True, None
    return False, lhs - rhs


def apply_laurent_stencil(op, a: OrdinaryPolynomial,
                          var_names: Sequence[str]) -> OrdinaryPolynomial:
    """Apply a Laurent polynomial in shift operators to a.

    Each term c * prod z_i^{e_i} of op acts as c * prod E_{var_i}^{e_i};
    negative exponents shift backwards.
    """
    if op.nvars != len(var_names):
        raise ValueError("stencil variable count mismatch")
    total = OrdinaryPolynomial.zero()
    for e, c in op.terms.items():
        q = a
        for v, k in zip(var_names, e):
            if k:
                q = shift(q, v, k)
        total = total + q * c
    return total


# -- grid interpolation ----------------------------------------------------------


def interpolate_on_grid(fn, var_names: Sequence[str],
                        degrees: Sequence[int]) -> OrdinaryPolynomial:
    """Reconstruct a polynomial from values on an integer corner grid.

    fn maps integer tuples to exact values; the polynomial must have
    degree at most degrees[i] in variable i.  Uses tensor Newton forward
    differences at base point 0.
    """
    n = len(var_names)
    if len(degrees) != n:
        raise ValueError("one degree bound per variable")
    shape = [d + 1 for d in degrees]
    grid = {}

    def fill(prefix):
        if len(prefix) == n:
            grid[prefix] = fn(prefix)
            return
        for v in range(shape[len(prefix)]):
            fill(prefix + (v,))

    fill(())
    # forward differences along each axis, in place over the dict
    for axis in range(n):
        for order in range(1, shape[axis]):
            for key in sorted(grid, key=lambda k: -k[axis]):
                if key[axis] >= order:
                    prev = key[:axis] + (key[axis] - 1,) + key[axis + 1:]
                    grid[key] = grid[key] - grid[prev]
    total = OrdinaryPolynomial.zero()
    binom_polys = []
    for i, v in enumerate(var_names):
        per_var = []
        x = OrdinaryPolynomial.variable(v)
        cur = OrdinaryPolynomial.const(1)
        per_var.append(cur)
        for r in range(1, shape[i]):
            cur = cur * (x - (r - 1)) * Fraction(1, r)
            per_var.append(cur)
        binom_polys.append(per_var)
    for key, diff in grid.items():
        if not diff:
            continue
        term = OrdinaryPolynomial.const(diff)
        for i, d in enumerate(key):
            term = term * binom_polys[i][d]
        total = total + term
    return total


# -- randomized clause checks ------------------------------------------------------


CheckOutcome = Tuple[bool, Optional[tuple]]


def random_polynomial(rng, names: Sequence[str], degree: int = 3,
                      terms: int = 4, bound: int = 6) -> OrdinaryPolynomial:
    """Sample a small integer polynomial in the named variables."""
    total = OrdinaryPolynomial(tuple(names), {})
    for _ in range(terms):
        e = tuple(rng.randint(0, degree) for _ in names)
        c = rng.randint(-bound, bound)
        total = total + OrdinaryPolynomial(tuple(names), {e: c})
    return total


def check_inverse_clauses(rng) -> CheckOutcome:
    """Exercise the four right-inverse operator clauses on a sampled input.

    Each clause pairs two identities: the one-sided inverse property with
    the defect of the opposite composition, the forward/backward bridge
    with its right-inverse analogue, and the commutations with difference
    operators in an unrelated variable.  Returns (True, None) or (False,
    (clause, input, constant)).
    """
    p = random_polynomial(rng, ("x", "y"))
    z = rng.randint(-5, 5)
    cases = (
        ("forward-section",
         lambda: delta_upper(inv_delta_upper(p, "x", z), "x") == p),
        ("forward-defect",
         lambda: inv_delta_upper(delta_upper(p, "x"), "x", z)
         == p - p.subs_affine("x", None, z + 1)),
        ("backward-section",
         lambda: delta_lower(inv_delta_lower(p, "x", z), "x") == p),
        ("backward-defect",
         lambda: inv_delta_lower(delta_lower(p, "x"), "x", z)
         == p - p.subs_affine("x", None, z - 1)),
        ("difference-bridge",
         lambda: delta_upper(p, "x") == shift(delta_lower(p, "x"), "x", 1)),
        ("inverse-bridge",
         lambda: inv_delta_upper(p, "x", z)
         == shift(inv_delta_lower(p, "x", z + 1), "x", -1)),
        ("commute-forward",
         lambda: delta_upper(inv_delta_upper(p, "x", z), "y")
         == inv_delta_upper(delta_upper(p, "y"), "x", z)),
        ("commute-backward",
         lambda: delta_lower(inv_delta_upper(p, "x", z), "y")
         == inv_delta_upper(delta_lower(p, "y"), "x", z)),
    )
    for label, ok in cases:
        if not ok():
            return False, (label, p.render(), z)
    return True, None


def check_iterated_inverse_conversion(rng, max_order: int = 3) -> CheckOutcome:
    """Iterated forward inverses through backward ones with shifted bounds.

    For sampled p, order i < 0 and constants z, the iterated forward
    inverse must match E_x^i applied after the iterated backward inverse
    taken at constants z_j + j + 2.  Returns (True, None) or (False,
    (input, order, constants)).
    """
    p = random_polynomial(rng, ("x", "y"))
    i = -rng.randint(1, max_order)
    zs = tuple(rng.randint(-4, 4) for _ in range(-i))
    lhs = inv_power(p, "x", ConstantVector(i, zs), "Delta")
    shifted = tuple(v + j + 2 for v, j in zip(zs, range(i, 0)))
    rhs = shift(inv_power(p, "x", ConstantVector(i, shifted), "delta"),
                "x", i)
    if lhs == rhs:
        return True, None
    return False, (p.render(), i, zs)
