"""Named verification suites over the library's check functions.

Each suite expands a bounds object into a deterministic list of jobs; a
job names a registered runner plus picklable keyword arguments, so the
same list can execute sequentially or on a process pool.  Entries are
sorted by (check id, parameters) afterwards, which makes the serialized
report independent of worker count and scheduling.

Statuses follow one rule: instances of open claims that hold are "pass"
and broken ones "fail"; checks probing outside a claim's stated range,
or recording observations nobody asserted, are "finding" either way.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .genfun import (
    TFamilyParams,
    check_genfun_vs_alpha,
    check_pattern_coefficients,
    genfun_total,
    t_family_check,
)
from .laurent import LaurentPolynomial, NotDivisibleError
from .mt import (
    alpha_poly,
    alpha_slot_names,
    check_cyclic_rotation,
    check_profile_reflection,
    check_prolongation,
    count_mt,
    enumerate_mt,
)
from .refined import (
    a_numbers,
    b_formula,
    b_numbers,
    c_profile,
    coefficient_sum_identity,
    dpp_determinant,
    les_rank,
    verify_cd_equal,
    verify_cross_identities,
    verify_les,
    verify_les_c,
    verify_symmetry_c,
)
from .report import CheckEntry, VerificationReport, make_entry
from .shiftcalc import (
    OrdinaryPolynomial,
    antisym_seed_to_a,
    check_inverse_clauses,
    check_iterated_inverse_conversion,
    rename_slots,
    verify_shift_antisymmetry,
    verify_transfer_conjecture,
)
from .symmetrize import (
    GammaExpandError,
    build_R,
    check_inversion_invariance,
    gamma_expand,
)
from .words import (
    OperatorWord,
    check_commutations,
    check_sym_recursion,
    check_word_pair,
    sweep_word_classes,
    sym_of_word,
)


@dataclass(frozen=True)
class SuiteBounds:
    """Effort knobs shared by every suite.

    size is the main structural bound (kernel variables, operator order,
    word length); depth the secondary one (inverse order, exhaustive index
    range, brute-force cutoff); seeds the randomized repetition count and
    seed the base RNG seed recorded in the affected entries.
    """

    size: int
    depth: int = 2
    seeds: int = 6
    seed: int = 0


@dataclass(frozen=True)
class Job:
    """One runner invocation; kwargs kept hashable and picklable."""

    runner: str
    kwargs: Tuple[Tuple[str, object], ...] = ()


def job(runner: str, **kwargs) -> Job:
    return Job(runner, tuple(sorted(kwargs.items())))


RUNNERS: Dict[str, Callable[..., List[CheckEntry]]] = {}


def runner(fn):
    RUNNERS[fn.__name__] = fn
    return fn


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def _check(check_id: str, params: Mapping[str, object], fn,
           kind: str = "claim") -> CheckEntry:
    """Wrap an (ok, witness) outcome function into one entry."""
    t0 = time.perf_counter()
    ok, witness = fn()
    elapsed = _ms(t0)
    if kind == "claim":
        status = "pass" if ok else "fail"
        if ok:
            witness = None
    else:
        status = "finding"
    return make_entry(check_id, params, status, True, ok,
                      witness=witness, elapsed_ms=elapsed)


def _value(check_id: str, params: Mapping[str, object], expected, actual,
           witness=None, elapsed_ms: int = 0) -> CheckEntry:
    status = "pass" if expected == actual else "fail"
    return make_entry(check_id, params, status, expected, actual,
                      witness=None if status == "pass" else witness,
                      elapsed_ms=elapsed_ms)


# -- symmetrized kernel suite -------------------------------------------------------------


@runner
def kernel_checks(s: int, t: int) -> List[CheckEntry]:
    entries = []
    t0 = time.perf_counter()
    r = build_R(s, t)
    ok, witness = check_inversion_invariance(r)
    elapsed = _ms(t0)
    if s <= t:
        entries.append(make_entry(
            "kernel-inversion", {"s": s, "t": t},
            "pass" if ok else "fail", True, ok,
            witness=None if ok else witness, elapsed_ms=elapsed))
        t0 = time.perf_counter()
        try:
            coeffs = gamma_expand(r)
            err_witness = None
        except GammaExpandError as err:
            coeffs, err_witness = None, err.witness
        entries.append(make_entry(
            "gamma-expansion", {"s": s, "t": t},
            "pass" if coeffs is not None else "fail", True,
            coeffs is not None, witness=err_witness, elapsed_ms=_ms(t0)))
        if coeffs is not None:
            neg = sorted(e for e, c in coeffs.items() if c < 0)
            entries.append(make_entry(
                "gamma-nonnegativity", {"s": s, "t": t}, "finding", True,
                not neg,
                witness=(neg[0], coeffs[neg[0]]) if neg else None))
    else:
        # outside the claimed range: observed either way, never asserted
        entries.append(make_entry(
            "kernel-inversion-beyond", {"s": s, "t": t}, "finding",
            True, ok, witness=witness, elapsed_ms=elapsed))
    return entries


def _suite_conjecture_1(b: SuiteBounds) -> List[Job]:
    jobs = []
    for s in range(0, b.size + 1):
        for t in range(1, b.size + 2):
            m = s + t - 1
            if s + t < 2 or m > b.size:
                continue
            jobs.append(job("kernel_checks", s=s, t=t))
    return jobs


# -- operator transfer suite --------------------------------------------------------------


TRANSFER_PAIRS = ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3))


def _poly_digest(p: OrdinaryPolynomial) -> str:
    return f"{len(p.terms)}-term difference"


def _dense_antisym(p: OrdinaryPolynomial,
                   slots: Sequence[str]) -> OrdinaryPolynomial:
    total = None
    for pi in itertools.permutations(range(len(slots))):
        inv = sum(1 for a in range(len(pi)) for c in range(a + 1, len(pi))
                  if pi[a] > pi[c])
        q = rename_slots(p, list(slots), [slots[j] for j in pi])
        signed = ((-1) ** inv) * q
        total = signed if total is None else total + signed
    return total


def _random_antisym(rng: random.Random,
                    slots: Sequence[str]) -> OrdinaryPolynomial:
    """Antisymmetric polynomial with random support.

    Monomials with a repeated exponent cancel under antisymmetrization,
    so each summand draws distinct exponents; a two-term sum can still
    cancel, which callers must retry.
    """
    m = len(slots)
    total = None
    for _ in range(2):
        exps = tuple(rng.sample(range(m + 3), m))
        p = OrdinaryPolynomial(tuple(slots),
                               {exps: rng.choice((-2, -1, 1, 2, 3))})
        q = _dense_antisym(p, slots)
        total = q if total is None else total + q
    return total


@runner
def transfer_direct(s: int, t: int) -> List[CheckEntry]:
    n = s + t - 1

    def outcome():
        ok, diff = verify_transfer_conjecture(
            alpha_poly(n), alpha_slot_names(n), s, t)
        return ok, None if ok else _poly_digest(diff)

    return [_check("transfer-direct", {"s": s, "t": t}, outcome)]


@runner
def transfer_random(s: int, t: int, seed: int) -> List[CheckEntry]:
    rng = random.Random(seed)
    m = s + t - 1
    slots = tuple(f"v{i}" for i in range(m))
    anti = None
    for _ in range(6):
        cand = _random_antisym(rng, slots)
        if cand.terms:
            anti = cand
            break
    if anti is None:
        # staircase monomial: its alternating sum never cancels
        anti = _dense_antisym(OrdinaryPolynomial(
            slots, {tuple(range(m)): 1}), slots)
    a = antisym_seed_to_a(anti, slots)

    def outcome():
        ok, pair = verify_shift_antisymmetry(a, slots)
        if not ok:
            return False, ("construction", pair)
        ok, diff = verify_transfer_conjecture(a, slots, s, t)
        return ok, None if ok else _poly_digest(diff)

    return [_check("transfer-random", {"s": s, "seed": seed, "t": t},
                   outcome)]


@runner
def inverse_clauses(seed: int) -> List[CheckEntry]:
    return [_check("inverse-clauses", {"seed": seed},
                   lambda: check_inverse_clauses(random.Random(seed)))]


@runner
def iterated_inverse(seed: int, max_order: int) -> List[CheckEntry]:
    return [_check(
        "iterated-inverse", {"max_order": max_order, "seed": seed},
        lambda: check_iterated_inverse_conversion(
            random.Random(seed), max_order))]


@runner
def profile_reflection(n: int, d: int, i: int, seed: int) -> List[CheckEntry]:
    params = {"d": d, "i": i, "n": n}
    xs = None
    if i < 0:
        xs = tuple(random.Random(seed).randint(-3, 8) for _ in range(-i))
        params.update(seed=seed, xs=xs)
    return [_check("profile-reflection", params,
                   lambda: check_profile_reflection(n, d, i, xs))]


@runner
def cyclic_rotation(n: int, i: int, seed: int) -> List[CheckEntry]:
    params = {"i": i, "n": n}
    xs = None
    if i < 0:
        xs = tuple(random.Random(seed).randint(-3, 8) for _ in range(-i))
        params.update(seed=seed, xs=xs)
    return [_check("cyclic-rotation", params,
                   lambda: check_cyclic_rotation(n, i, xs))]


@runner
def prolongation(n: int, i: int, j: int, kind: str,
                 seed: int) -> List[CheckEntry]:
    rng = random.Random(seed)
    xs = tuple(rng.randint(-3, 8) for _ in range(-i))
    return [_check(
        "prolongation",
        {"i": i, "j": j, "kind": kind, "n": n, "seed": seed, "xs": xs},
        lambda: check_prolongation(n, i, j, xs, kind, rng))]


def _suite_conjecture_6_2(b: SuiteBounds) -> List[Job]:
    jobs = []
    for s, t in TRANSFER_PAIRS:
        if s + t - 1 > b.size:
            continue
        jobs.append(job("transfer_direct", s=s, t=t))
        for r in range(b.seeds):
            jobs.append(job("transfer_random", s=s, t=t,
                            seed=b.seed + 1000 * s + 100 * t + r))
    for r in range(b.seeds):
        jobs.append(job("inverse_clauses", seed=b.seed + r))
        jobs.append(job("iterated_inverse", seed=b.seed + r,
                        max_order=b.depth + 1))
    for n in range(1, b.size + 1):
        for d in range(1, 4):
            for i in range(-b.depth, b.depth + 1):
                jobs.append(job("profile_reflection", n=n, d=d, i=i,
                                seed=b.seed + 7 * n + 3 * d + i))
        for i in range(-b.depth, b.depth + 1):
            jobs.append(job("cyclic_rotation", n=n, i=i,
                            seed=b.seed + 11 * n + i))
        for i in range(-1, -b.depth - 1, -1):
            for jslot in range(1, n + 1):
                for kind in ("Delta", "delta"):
                    jobs.append(job(
                        "prolongation", n=n, i=i, j=jslot, kind=kind,
                        seed=b.seed + 13 * n + 5 * jslot + i))
    return jobs


# -- linear equation system suite ---------------------------------------------------------


@runner
def les_system(family: str, n: int, source: str) -> List[CheckEntry]:
    return [_check("les-system",
                   {"family": family, "n": n, "source": source},
                   lambda: verify_les(family, n, source))]


@runner
def les_onesided(n: int, d: int) -> List[CheckEntry]:
    return [_check("les-onesided", {"d": d, "n": n},
                   lambda: verify_les_c(n, d))]


@runner
def solution_space(n: int, which: str) -> List[CheckEntry]:
    t0 = time.perf_counter()
    if which == "B":
        try:
            rep = les_rank(n, "B")
            return [_value("solution-space", {"n": n, "which": which},
                           1, rep["corank"], elapsed_ms=_ms(t0))]
        except ArithmeticError as err:
            return [make_entry("solution-space", {"n": n, "which": which},
                               "fail", 1, "not a line", witness=str(err),
                               elapsed_ms=_ms(t0))]
    rep = les_rank(n, "B-alt")
    return [make_entry("solution-space", {"n": n, "which": which},
                       "finding", 1, rep["corank"], elapsed_ms=_ms(t0))]


@runner
def determinant_count(m: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    rep = dpp_determinant(m)
    status = "pass" if rep["matches"] else "fail"
    return [make_entry(
        "determinant-count", {"m": m}, status, rep["count"],
        rep["det_large"],
        witness=None if rep["matches"] else ("small", rep["det_small"]),
        elapsed_ms=_ms(t0))]


def _suite_les(b: SuiteBounds) -> List[Job]:
    jobs = []
    brute_hi = min(b.depth, 5)
    for n in range(1, brute_hi + 1):
        jobs.append(job("les_system", family="A", n=n, source="brute"))
        jobs.append(job("les_system", family="A", n=n, source="cd"))
        jobs.append(job("les_system", family="B", n=n, source="cd"))
        jobs.append(job("les_system", family="B-alt", n=n, source="cd"))
        for d in (1, 2, 3):
            jobs.append(job("les_onesided", n=n, d=d))
    for n in range(1, b.size + 1):
        jobs.append(job("les_system", family="B", n=n, source="formula"))
        jobs.append(job("les_system", family="B-alt", n=n,
                        source="formula"))
        jobs.append(job("solution_space", n=n, which="B-alt"))
    for n in range(1, min(b.size, 6) + 1):
        jobs.append(job("solution_space", n=n, which="B"))
    for m in range(3, min(b.size, 7) + 1):
        jobs.append(job("determinant_count", m=m))
    return jobs


# -- constant-blindness suite -------------------------------------------------------------


@runner
def cd_equal(n: int) -> List[CheckEntry]:
    return [_check("cd-equal", {"n": n}, lambda: verify_cd_equal(n))]


@runner
def cd_order_one(n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    brute = a_numbers(n, "brute").values
    via = a_numbers(n, "cd").values
    bad = next((i for i in sorted(brute) if brute[i] != via.get(i)), None)
    return [_value("cd-order-one", {"n": n}, True, brute == via,
                   witness=None if bad is None else (bad, brute[bad],
                                                     via.get(bad)),
                   elapsed_ms=_ms(t0))]


@runner
def cd_order_two(n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    formula = b_numbers(n, "formula", hi=2 * n).values
    via = b_numbers(n, "cd").values
    bad = next((i for i in sorted(formula) if formula[i] != via.get(i)),
               None)
    return [_value("cd-order-two", {"n": n}, True, formula == via,
                   witness=None if bad is None else (bad, formula[bad],
                                                     via.get(bad)),
                   elapsed_ms=_ms(t0))]


def _suite_cd(b: SuiteBounds) -> List[Job]:
    jobs = []
    for n in range(1, b.size + 1):
        jobs.append(job("cd_equal", n=n))
        jobs.append(job("cd_order_two", n=n))
    for n in range(1, min(b.size, 5) + 1):
        jobs.append(job("cd_order_one", n=n))
    return jobs


# -- index symmetry suite -----------------------------------------------------------------


@runner
def family_symmetry(n: int, d: int) -> List[CheckEntry]:
    check_id = "family-symmetry" if d == 2 else "family-symmetry-offgrid"
    return [_check(check_id, {"d": d, "n": n},
                   lambda: verify_symmetry_c(n, d),
                   kind="claim" if d == 2 else "finding")]


@runner
def profile_symmetry(seed: int, imax: int) -> List[CheckEntry]:
    rng = random.Random(seed)
    terms = {(rng.randint(0, 6),): rng.randint(-9, 9) for _ in range(4)}
    p = OrdinaryPolynomial(("y",), terms)
    if not p.terms:
        p = OrdinaryPolynomial(("y",), {(1,): 1, (0,): 1})

    def outcome():
        prof = c_profile(p, "y", imax)
        bad = next((i for i in range(imax) if prof[i] != prof[-i - 1]),
                   None)
        if bad is None:
            return True, None
        return False, (bad, prof[bad], prof[-bad - 1])

    return [_check("profile-symmetry", {"imax": imax, "seed": seed},
                   outcome)]


@runner
def coefficient_sum(d1: int, imax: int) -> List[CheckEntry]:
    entries = []
    for i in range(imax + 1):
        t0 = time.perf_counter()
        ok, (lhs, rhs) = coefficient_sum_identity(i, d1)
        entries.append(_value("coefficient-sum", {"d1": d1, "i": i},
                              rhs, lhs, elapsed_ms=_ms(t0)))
    return entries


def _suite_symmetry_c(b: SuiteBounds) -> List[Job]:
    jobs = []
    for n in range(1, b.size + 1):
        jobs.append(job("family_symmetry", n=n, d=2))
    for n in range(1, min(b.size, 3) + 1):
        for d in (1, 3):
            jobs.append(job("family_symmetry", n=n, d=d))
    for r in range(b.seeds):
        jobs.append(job("profile_symmetry", seed=b.seed + r, imax=3))
    for d1 in (4, 5, 6, 7):
        jobs.append(job("coefficient_sum", d1=d1, imax=b.depth))
    return jobs


# -- operator word suite ------------------------------------------------------------------


WORD_COUNTS = (1, 2, 8, 24, 96, 320)

INVALID_WORDS = ("PS", "QS", "PT,QS,QS", "QT,PS,PS")


@runner
def word_sweep(maxlen: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    by_endpoint: Dict[Tuple[int, int], list] = {}
    by_last: Dict[tuple, list] = {}
    counts: Dict[int, int] = {}
    for w, ep, last, classes in sweep_word_classes(maxlen):
        counts[len(w)] = counts.get(len(w), 0) + 1
        by_endpoint.setdefault(ep, []).append((w, classes))
        by_last.setdefault((ep, last), []).append((w, classes))
    sweep_ms = _ms(t0)

    entries = []
    for length in range(maxlen + 1):
        if length < len(WORD_COUNTS):
            entries.append(_value(
                "word-count", {"length": length}, WORD_COUNTS[length],
                counts.get(length, 0),
                elapsed_ms=sweep_ms if length == 0 else 0))
    for ep in sorted(by_endpoint):
        group = by_endpoint[ep]
        first_w, first_c = group[0]
        clash = next((w for w, c in group[1:] if c != first_c), None)
        ok = clash is None
        entries.append(make_entry(
            "endpoint-classes", {"s": ep[0], "t": ep[1],
                                 "words": len(group)},
            "pass" if ok else "fail", True, ok,
            witness=None if ok else (first_w.render(), clash.render())))
    for key in sorted(by_last, key=lambda k: (k[0], str(k[1]))):
        group = by_last[key]
        first_w, first_c = group[0]
        clash = next((w for w, c in group[1:] if c != first_c), None)
        ok = clash is None
        entries.append(make_entry(
            "last-letter-classes",
            {"last": key[1] or "none", "s": key[0][0], "t": key[0][1],
             "words": len(group)},
            "pass" if ok else "fail", True, ok,
            witness=None if ok else (first_w.render(), clash.render())))
    return entries


@runner
def word_pair(w1: str, w2: str) -> List[CheckEntry]:
    a = OperatorWord.parse(w1)
    c = OperatorWord.parse(w2)
    return [_check("word-pair", {"w1": w1, "w2": w2},
                   lambda: check_word_pair(a, c))]


def _rand_laurent(rng: random.Random, nvars: int, terms: int = 3,
                  span: int = 2) -> LaurentPolynomial:
    if nvars == 0:
        return LaurentPolynomial.const(0, rng.randint(1, 5))
    d = {}
    for _ in range(terms):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        d[e] = rng.randint(-4, 4)
    f = LaurentPolynomial(nvars, d)
    return f if not f.is_zero() else LaurentPolynomial.const(nvars, 1)


@runner
def word_commutation(s: int, t: int, seed: int) -> List[CheckEntry]:
    f = _rand_laurent(random.Random(seed), s + t - 3)
    return [_check("word-commutation", {"s": s, "seed": seed, "t": t},
                   lambda: check_commutations(s, t, f))]


@runner
def sym_recursion(kind: str, s: int, t: int, seed: int) -> List[CheckEntry]:
    f = _rand_laurent(random.Random(seed), s + t - 2)
    return [_check("sym-recursion",
                   {"letter": kind, "s": s, "seed": seed, "t": t},
                   lambda: check_sym_recursion(kind, s, t, f))]


@runner
def invalid_word(word: str) -> List[CheckEntry]:
    w = OperatorWord.parse(word)
    t0 = time.perf_counter()

    def outcome():
        try:
            sym_of_word(w)
            return True, None
        except NotDivisibleError as err:
            return False, str(err)

    ok, witness = outcome()
    return [make_entry(
        "invalid-word-division",
        {"invalid_at": w.failing_prefix(), "word": word},
        "finding", True, ok, witness=witness, elapsed_ms=_ms(t0))]


def _suite_words(b: SuiteBounds) -> List[Job]:
    jobs = [job("word_sweep", maxlen=b.size)]
    comm_pairs = [(1, 2), (2, 2)]
    rec_pairs = [(1, 2), (2, 2)]
    if b.size >= 4:
        comm_pairs += [(1, 3), (2, 3)]
        rec_pairs += [(1, 3), (2, 3)]
    if b.size >= 5:
        comm_pairs.append((3, 3))
    for s, t in comm_pairs:
        for r in range(b.seeds):
            jobs.append(job("word_commutation", s=s, t=t,
                            seed=b.seed + 10 * s + t + r))
    for s, t in rec_pairs:
        for kind in ("PS", "PT", "QS", "QT"):
            for r in range(max(1, b.seeds // 2)):
                jobs.append(job("sym_recursion", kind=kind, s=s, t=t,
                                seed=b.seed + 10 * s + t + r))
    for word in INVALID_WORDS:
        jobs.append(job("invalid_word", word=word))
    return jobs


# -- generating function suite ------------------------------------------------------------


GENFUN_COUNT_KS = {1: ((1,),), 2: ((1, 2), (0, 2)),
                   3: ((1, 2, 3), (0, 2, 4))}

PATTERN_BOTTOMS = ((0, 2), (0, 2, 4), (1, 2, 3))


@runner
def genfun_vs_count(n: int, k: Tuple[int, ...], m: int) -> List[CheckEntry]:
    return [_check("genfun-vs-count", {"k": k, "m": m, "n": n},
                   lambda: check_genfun_vs_alpha(n, k, m))]


@runner
def pattern_coefficient(bottom: Tuple[int, ...]) -> List[CheckEntry]:
    entries = []
    for top in range(bottom[0], bottom[-1] + 1):
        entries.append(_check(
            "pattern-coefficient", {"bottom": bottom, "top": top},
            lambda top=top: check_pattern_coefficients(bottom, top)))
    return entries


@runner
def genfun_recursion(kind: str, n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    try:
        total = genfun_total(kind, n)
    except ArithmeticError as err:
        return [make_entry("genfun-recursion", {"kind": kind, "n": n},
                           "fail", "recursion agrees", "mismatch",
                           witness=str(err), elapsed_ms=_ms(t0))]
    bottom = (tuple(range(1, n + 1)) if kind == "ASM"
              else tuple(range(2, 2 * n + 1, 2)))
    return [_value("genfun-recursion", {"kind": kind, "n": n},
                   count_mt(bottom), total, elapsed_ms=_ms(t0))]


@runner
def t_family(case: str, n: int, seed: int) -> List[CheckEntry]:
    rng = random.Random(seed)
    if case == "limit":
        params_obj = TFamilyParams(1, 0, 0, 0)
        kind = "claim"
        params = {"case": case, "n": n}
    elif case == "constant":
        params_obj = TFamilyParams(0, rng.randint(-3, 3),
                                   rng.randint(-3, 3), rng.randint(-3, 3))
        kind = "claim"
        params = {"case": case, "n": n, "seed": seed}
    elif case == "random":
        params_obj = TFamilyParams(rng.randint(-2, 2), rng.randint(-2, 2),
                                   rng.randint(-2, 2), rng.randint(-2, 2))
        kind = "finding"
        params = {"case": case, "n": n, "seed": seed}
    else:
        raise ValueError(f"unknown case {case!r}")
    params.update(a=params_obj.a, b=params_obj.b, c=params_obj.c,
                  d=params_obj.d)
    return [_check("t-family", params,
                   lambda: t_family_check(params_obj, n), kind=kind)]


def _suite_genfun(b: SuiteBounds) -> List[Job]:
    jobs = []
    for n in range(1, min(b.depth, 3) + 1):
        for k in GENFUN_COUNT_KS[n]:
            for m in range(0, b.depth + 1):
                jobs.append(job("genfun_vs_count", n=n, k=k, m=m))
    for bottom in PATTERN_BOTTOMS:
        jobs.append(job("pattern_coefficient", bottom=bottom))
    for n in range(1, b.size + 1):
        jobs.append(job("genfun_recursion", kind="ASM", n=n))
    for n in range(1, max(1, b.size - 1) + 1):
        jobs.append(job("genfun_recursion", kind="VSASM", n=n))
    for n in range(2, min(b.size, 4) + 1):
        jobs.append(job("t_family", case="limit", n=n, seed=0))
    for r in range(b.seeds):
        jobs.append(job("t_family", case="constant", n=2 + r % 2,
                        seed=b.seed + r))
    for r in range(max(2, b.seeds // 2)):
        jobs.append(job("t_family", case="random", n=2,
                        seed=b.seed + 50 + r))
    return jobs


# -- counting identity suite --------------------------------------------------------------


PLAIN_TOTALS = (1, 1, 2, 7, 42, 429, 7436, 218348)

SYMMETRIC_TOTALS = (1, 1, 3, 26, 646, 45885, 9304650)


@runner
def triangle_count(n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    got = count_mt(tuple(range(1, n + 1)))
    return [_value("triangle-count", {"n": n}, PLAIN_TOTALS[n], got,
                   elapsed_ms=_ms(t0))]


@runner
def triangle_enumeration(n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    got = len(enumerate_mt(tuple(range(1, n + 1))))
    return [_value("triangle-enumeration", {"n": n}, PLAIN_TOTALS[n], got,
                   elapsed_ms=_ms(t0))]


@runner
def symmetric_count_sum(n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    dp = count_mt(tuple(range(2, 2 * n + 1, 2)))
    entries = [_value("symmetric-count", {"n": n}, SYMMETRIC_TOTALS[n], dp,
                      elapsed_ms=_ms(t0))]
    t0 = time.perf_counter()
    total = sum(b_formula(n, i) for i in range(1, n + 1))
    entries.append(_value("symmetric-count-sum", {"n": n}, dp, total,
                          elapsed_ms=_ms(t0)))
    return entries


@runner
def refined_brute(n: int) -> List[CheckEntry]:
    t0 = time.perf_counter()
    formula = b_numbers(n, "formula").values
    brute = b_numbers(n, "brute").values
    bad = next((i for i in sorted(formula) if formula[i] != brute.get(i)),
               None)
    return [_value("refined-brute", {"n": n}, True, formula == brute,
                   witness=None if bad is None else (bad, formula[bad],
                                                     brute.get(bad)),
                   elapsed_ms=_ms(t0))]


@runner
def cross_identities(n: int) -> List[CheckEntry]:
    return [_check("cross-identities", {"n": n},
                   lambda: verify_cross_identities(n))]


def _suite_identities(b: SuiteBounds) -> List[Job]:
    jobs = []
    for n in range(1, min(b.size, 7) + 1):
        jobs.append(job("triangle_count", n=n))
    for n in range(1, min(b.depth, 5) + 1):
        jobs.append(job("triangle_enumeration", n=n))
        jobs.append(job("refined_brute", n=n))
    for n in range(1, min(b.size, 6) + 1):
        jobs.append(job("symmetric_count_sum", n=n))
    for n in range(2, b.size + 1):
        jobs.append(job("cross_identities", n=n))
    return jobs


# -- suite registry and execution ---------------------------------------------------------


SUITES: Dict[str, Callable[[SuiteBounds], List[Job]]] = {
    "conjecture-1": _suite_conjecture_1,
    "conjecture-6.2": _suite_conjecture_6_2,
    "les": _suite_les,
    "cd": _suite_cd,
    "symmetry-c": _suite_symmetry_c,
    "words": _suite_words,
    "genfun": _suite_genfun,
    "identities": _suite_identities,
}

SUITE_NAMES = tuple(SUITES) + ("all",)

DEFAULT_BOUNDS: Dict[str, SuiteBounds] = {
    "conjecture-1": SuiteBounds(size=5, depth=2, seeds=0),
    "conjecture-6.2": SuiteBounds(size=3, depth=2, seeds=6),
    "les": SuiteBounds(size=8, depth=4),
    "cd": SuiteBounds(size=4),
    "symmetry-c": SuiteBounds(size=5, depth=10, seeds=15),
    "words": SuiteBounds(size=3, seeds=6),
    "genfun": SuiteBounds(size=4, depth=3, seeds=6),
    "identities": SuiteBounds(size=6, depth=4),
}


def suite_jobs(name: str, bounds: Optional[SuiteBounds] = None) -> List[Job]:
    """Expand one suite (or "all") into its deterministic job list."""
    if name == "all":
        out: List[Job] = []
        for sub in SUITES:
            out.extend(suite_jobs(sub, bounds))
        return out
    if name not in SUITES:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return SUITES[name](bounds if bounds is not None
                        else DEFAULT_BOUNDS[name])


def _execute(jb: Job) -> List[CheckEntry]:
    return RUNNERS[jb.runner](**dict(jb.kwargs))


def run_jobs(jobs: Sequence[Job], workers: int = 1) -> VerificationReport:
    """Run jobs sequentially or on a process pool; same entries either way."""
    if workers <= 1:
        batches = [_execute(jb) for jb in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_execute, jobs))
    report = VerificationReport([])
    report.extend(e for batch in batches for e in batch)
    return report


def run_suite(name: str, bounds: Optional[SuiteBounds] = None,
              workers: int = 1) -> VerificationReport:
    return run_jobs(suite_jobs(name, bounds), workers=workers)
