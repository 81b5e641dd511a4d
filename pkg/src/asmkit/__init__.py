"""Exact verification toolkit for alternating sign matrix identities.

The package is organized around one exact Laurent-polynomial engine
(:mod:`asmkit.laurent`) and the verification layers built on it:
symmetrization and inversion invariance, shift-operator calculus on
ordinary polynomials, monotone triangle counting, the refined counting
families and their linear equation systems, symmetrizer operator words,
and pattern generating functions.  :mod:`asmkit.cli` exposes the whole
thing as ``asmkit verify/count/numbers/report``.
"""

from .laurent import (
    LaurentPolynomial,
    NotDivisibleError,
    X,
    XPoly,
    divide_binomial,
    divide_by_vandermonde,
    vandermonde,
)
from .mt import alpha_eval, count_mt, enumerate_mt
from .report import CheckEntry, VerificationReport, emit_report, render_figures
from .suites import SUITE_NAMES, SuiteBounds, run_suite, suite_jobs
from .symmetrize import build_P, build_R, check_inversion_invariance, gamma_expand

__version__ = "0.1.0"

__all__ = [
    "LaurentPolynomial",
    "NotDivisibleError",
    "X",
    "XPoly",
    "divide_binomial",
    "divide_by_vandermonde",
    "vandermonde",
    "alpha_eval",
    "count_mt",
    "enumerate_mt",
    "CheckEntry",
    "VerificationReport",
    "emit_report",
    "render_figures",
    "SUITE_NAMES",
    "SuiteBounds",
    "run_suite",
    "suite_jobs",
    "build_P",
    "build_R",
    "check_inversion_invariance",
    "gamma_expand",
    "__version__",
]
