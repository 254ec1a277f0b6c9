"""
Verification suites behind ``lnd verify``.

Each suite turns a family of identities into a list of ``VerificationCase``
records. Per-degree work is fanned out over a thread pool with
``executor.map`` so the case order never depends on scheduling.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Literal, Optional, Union
import cmath
import math

import numpy as np
from loguru import logger
from pydantic import BaseModel, model_validator

from ..settings import get_settings
from .derivs import (
    EvalPoint,
    d2P_dnu2,
    d2P_dnu2_recurrence,
    dQ_dnu_offcut,
    dQ_dnu_offcut_split,
    dQ_dnu_oncut,
    recurrence_residual,
)
from .dpolys import c_coeff, c_nn_coeff, c_poly, c_poly_telescoped, coeff_triple, ode_residuals
from .exact_arith import harmonic
from .exceptions import DomainError, LNDError
from .oracle import (
    FDConfig,
    brute_c_coeffs,
    brute_S1_all,
    brute_S2,
    brute_S3,
    brute_S4,
    closed_S1,
    closed_S2,
    closed_S3,
    closed_S4,
    fd1_q,
    fd2_nu,
    nested_sum_identity_check,
    on_cut_average,
    transcendental_S2_float,
    transcendental_S3_float,
    transcendental_S4_float,
)
from .reference import (
    D2P_PRINTED,
    DQ_PRINTED,
    REFERENCE_MAX_DEGREE,
    eval_d2p_printed,
    eval_dq_printed,
    form_mismatches,
    generated_d2p_form,
    generated_dq_form,
)
from .specfun import PI_SQUARED, ZETA2, dilog

settings = get_settings()

Residual = Union[float, Literal["exact"]]

RECURRENCE_TOL = 1e-11
SUM_FLOAT_TOL = 1e-12
REFLECTION_TOL = 1e-12
PRINTED_EVAL_TOL = 1e-12
ON_CUT_TOL = 1e-6
RECURRENCE_MAX_DEGREE = 20
ORACLE_MAX_DEGREE = 6
ORACLE_POINTS = (0j, 0.6 + 0j, -0.6 + 0j, 0.3 + 0.8j, 0.3 - 0.8j, -0.2 + 0.7j, 1.4 + 0.5j)
ON_CUT_POINTS = (-0.9, -0.5, 0.0, 0.5, 0.9)
PRINTED_EVAL_POINTS = (3 + 0j, 0.3 + 0.8j, 1.4 + 0.5j, -2 + 1j, 0.5 - 2j)


class VerificationCase(BaseModel):
    """One identity checked at one degree (and lower limit or point, if any)."""

    identity: str
    n: int
    m: Optional[int] = None
    point: Optional[str] = None
    status: Literal["pass", "fail"]
    residual: Residual
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    """Cases of one suite run with their tallies."""

    suite: str
    cases: List[VerificationCase]
    summary: Dict[str, int]

    @model_validator(mode="after")
    def _summary_matches_cases(self) -> "VerificationReport":
        tally = _tally(self.cases)
        if self.summary != tally:
            raise ValueError(f"summary {self.summary} does not match cases {tally}")
        return self

    @classmethod
    def from_cases(cls, suite: str, cases: List[VerificationCase]) -> "VerificationReport":
        return cls(suite=suite, cases=cases, summary=_tally(cases))

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0


def _tally(cases: Iterable[VerificationCase]) -> Dict[str, int]:
    cases = list(cases)
    passed = sum(1 for c in cases if c.status == "pass")
    return {"total": len(cases), "passed": passed, "failed": len(cases) - passed}


def _exact(identity: str, n: int, ok: bool, m: Optional[int] = None, detail: Optional[str] = None) -> VerificationCase:
    return VerificationCase(
        identity=identity, n=n, m=m, status="pass" if ok else "fail", residual="exact", detail=None if ok else detail
    )


def _numeric(identity: str, n: int, residual: float, tol: float, point: Optional[complex] = None) -> VerificationCase:
    ok = math.isfinite(residual) and residual <= tol
    return VerificationCase(
        identity=identity,
        n=n,
        point=None if point is None else f"{point.real:g}{point.imag:+g}i",
        status="pass" if ok else "fail",
        residual=float(residual),
    )


def _failure(identity: str, n: int, error: LNDError, point: Optional[complex] = None) -> VerificationCase:
    return VerificationCase(
        identity=identity,
        n=n,
        point=None if point is None else f"{point.real:g}{point.imag:+g}i",
        status="fail",
        residual=float("inf"),
        detail=f"{error.code}: {error.message}",
    )


def _relative(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(b))


def _fan_out(fn: Callable[[int], List[VerificationCase]], degrees: Iterable[int]) -> List[VerificationCase]:
    with ThreadPoolExecutor(max_workers=settings.MAX_WORKERS) as executor:
        chunks = list(executor.map(fn, degrees))
    return [case for chunk in chunks for case in chunk]


def _lown_degree(n: int) -> List[VerificationCase]:
    cases = []
    mismatches = form_mismatches(D2P_PRINTED[n], generated_d2p_form(n))
    cases.append(_exact("lown.d2P_form", n, not mismatches, detail=f"parts differ: {mismatches}"))
    mismatches = form_mismatches(DQ_PRINTED[n], generated_dq_form(n))
    cases.append(_exact("lown.dQ_form", n, not mismatches, detail=f"parts differ: {mismatches}"))
    for z in PRINTED_EVAL_POINTS:
        closed = d2P_dnu2(n, EvalPoint.off_cut(z)).value
        cases.append(_numeric("lown.d2P_eval", n, _relative(eval_d2p_printed(n, z), closed), PRINTED_EVAL_TOL, z))
        closed = dQ_dnu_offcut(n, z).value
        cases.append(_numeric("lown.dQ_eval", n, _relative(eval_dq_printed(n, z), closed), PRINTED_EVAL_TOL, z))
    return cases


def suite_lown(n_max: int, tol: float, seed: int) -> List[VerificationCase]:
    """Generated polynomials against the printed forms of degrees 0..3."""
    return _fan_out(_lown_degree, range(min(n_max, REFERENCE_MAX_DEGREE) + 1))


def _sums_degree(n: int) -> List[VerificationCase]:
    cases = []
    bad = [m for m, value in enumerate(brute_S1_all(n)) if value != closed_S1(n, m)]
    cases.append(_exact("sums.S1", n, not bad, detail=f"lower limits failing: {bad}"))
    gap = harmonic(2 * n) - harmonic(n)
    cases.append(_exact("sums.S1_m0", n, closed_S1(n, 0) == -gap))

    closed = {"S2": closed_S2(n), "S3": closed_S3(n), "S4": closed_S4(n)}
    brute = {"S2": brute_S2(n), "S3": brute_S3(n), "S4": brute_S4(n)}
    floats = {"S2": transcendental_S2_float(n), "S3": transcendental_S3_float(n), "S4": transcendental_S4_float(n)}
    for name in ("S2", "S3", "S4"):
        cases.append(_exact(f"sums.{name}", n, brute[name] == closed[name], detail=f"{brute[name]} != {closed[name]}"))
        cases.append(_numeric(f"sums.{name}_float", n, abs(float(closed[name]) - floats[name]), SUM_FLOAT_TOL))
    decomposed = closed_S1(n, 0) ** 2 / 2 + closed["S3"] / 2
    cases.append(_exact("sums.S2_decomposition", n, decomposed == closed["S2"]))

    weights = [Fraction((-1) ** k * (2 * k + 1), (n - k) * (n + k + 1)) for k in range(n)]
    cases.append(_exact("sums.nested_identity", n, nested_sum_identity_check(weights)))

    bad = [k for k, value in enumerate(brute_c_coeffs(n)) if value != c_coeff(n, k)]
    cases.append(_exact("sums.c_coeff", n, not bad, detail=f"k failing: {bad}"))
    return cases


def suite_sums(n_max: int, tol: float, seed: int) -> List[VerificationCase]:
    """Finite sums against their harmonic-number closed forms, exactly."""
    return _fan_out(_sums_degree, range(1, n_max + 1))


def _ode_degree(n: int) -> List[VerificationCase]:
    cases = []
    for name, residual in ode_residuals(n).items():
        cases.append(_exact(f"ode.{name}", n, residual.is_zero(), detail=f"residual {residual!r}"))
    try:
        coeff_triple(n)
        cases.append(_exact("ode.triple_structure", n, True))
    except LNDError as e:
        cases.append(_failure("ode.triple_structure", n, e))
    cases.append(_exact("ode.c_telescoped", n, c_poly(n) == c_poly_telescoped(n)))
    if n >= 1:
        total = sum((c_coeff(n, k) for k in range(n)), Fraction(0))
        cases.append(_exact("ode.c_nn_sum", n, c_nn_coeff(n) == -total))
    return cases


def suite_ode(n_max: int, tol: float, seed: int) -> List[VerificationCase]:
    """Inhomogeneous Legendre equations and structural identities, exactly."""
    return _fan_out(_ode_degree, range(n_max + 1))


def _random_points(seed: int, count: int, half_width: float = 2.0) -> List[complex]:
    """Points in the square |Re|, |Im| <= half_width, away from z = -1 and the real axis."""
    rng = np.random.default_rng(seed)
    points: List[complex] = []
    while len(points) < count:
        re, im = rng.uniform(-half_width, half_width, size=2)
        z = complex(re, im)
        if abs(im) > 0.05 and abs(z + 1) > 0.1:
            points.append(z)
    return points


def suite_recurrence(n_max: int, tol: float, seed: int, count: int = 50) -> List[VerificationCase]:
    """Three-term recurrence of the second derivative at seeded random points."""
    points = _random_points(seed, count)
    top = min(n_max, RECURRENCE_MAX_DEGREE)

    def run(n: int) -> List[VerificationCase]:
        worst = max(recurrence_residual(n, z) for z in points)
        return [_numeric("recurrence.residual", n, worst, RECURRENCE_TOL)]

    cases = _fan_out(run, range(1, top + 1))
    for z in points[:5]:
        generated = d2P_dnu2_recurrence(top, z)
        for n, value in enumerate(generated):
            closed = d2P_dnu2(n, EvalPoint.off_cut(z)).value
            cases.append(_numeric("recurrence.forward", n, _relative(value, closed), 1e-9, z))
    return cases


def _in_both_disks(z: complex) -> bool:
    return abs(1 - z) < 2 and abs(1 + z) < 2 and z.imag != 0


def suite_oracle(n_max: int, tol: float, seed: int) -> List[VerificationCase]:
    """Finite differences in the degree against the closed forms."""
    cfg = FDConfig(tolerance=tol)

    def run(n: int) -> List[VerificationCase]:
        cases = []
        for z in ORACLE_POINTS:
            try:
                closed = d2P_dnu2(n, EvalPoint.classify(z)).value
                cases.append(_numeric("oracle.d2P_fd", n, _relative(fd2_nu(n, z, cfg), closed), cfg.tolerance, z))
            except LNDError as e:
                cases.append(_failure("oracle.d2P_fd", n, e, z))
            if not _in_both_disks(z):
                continue
            try:
                closed = dQ_dnu_offcut(n, z).value
                cases.append(_numeric("oracle.dQ_fd", n, _relative(fd1_q(n, z, cfg), closed), cfg.tolerance, z))
                split = dQ_dnu_offcut_split(n, z)
                cases.append(_numeric("oracle.dQ_split", n, _relative(split, closed), PRINTED_EVAL_TOL, z))
            except LNDError as e:
                cases.append(_failure("oracle.dQ_fd", n, e, z))
        return cases

    return _fan_out(run, range(min(n_max, ORACLE_MAX_DEGREE) + 1))


def suite_dilog(n_max: int, tol: float, seed: int, count: int = 2000) -> List[VerificationCase]:
    """Reflection and conjugation of the dilogarithm, plus special values."""
    cases = [
        _numeric("dilog.zero", 0, abs(dilog(0)), 0.0),
        _numeric("dilog.one", 0, abs(dilog(1) - ZETA2), 1e-15),
        _numeric("dilog.minus_one", 0, abs(dilog(-1) + PI_SQUARED / 12), 1e-15),
        _numeric("dilog.half", 0, abs(dilog(0.5) - (PI_SQUARED / 12 - math.log(2) ** 2 / 2)), 1e-15),
    ]
    worst_reflection = worst_conjugate = 0.0
    for w in _random_points(seed, count, half_width=3.0):
        reflection = dilog(w) + dilog(1 - w) - ZETA2 + cmath.log(w) * cmath.log(1 - w)
        worst_reflection = max(worst_reflection, abs(reflection))
        worst_conjugate = max(worst_conjugate, abs(dilog(w.conjugate()) - dilog(w).conjugate()))
    cases.append(_numeric("dilog.reflection", 0, worst_reflection, REFLECTION_TOL))
    cases.append(_numeric("dilog.conjugation", 0, worst_conjugate, REFLECTION_TOL))
    return cases


def suite_oncut(n_max: int, tol: float, seed: int) -> List[VerificationCase]:
    """On-cut derivative against the extrapolated average of the two off-cut limits."""

    def run(n: int) -> List[VerificationCase]:
        cases = []
        for x in ON_CUT_POINTS:
            value = dQ_dnu_oncut(n, x).value
            residual = abs(value - on_cut_average(n, x))
            cases.append(_numeric("oncut.average", n, residual, ON_CUT_TOL, complex(x, 0)))
        return cases

    return _fan_out(run, range(min(n_max, ORACLE_MAX_DEGREE) + 1))


SUITES: Dict[str, Callable[[int, float, int], List[VerificationCase]]] = {
    "lown": suite_lown,
    "sums": suite_sums,
    "ode": suite_ode,
    "recurrence": suite_recurrence,
    "oracle": suite_oracle,
    "dilog": suite_dilog,
    "oncut": suite_oncut,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(suite: str, n_max: int, tol: Optional[float] = None, seed: Optional[int] = None) -> VerificationReport:
    """
    Run one named suite, or every suite for "all".

    Args:
        suite: Suite name
        n_max: Highest degree to check
        tol: Oracle tolerance; defaults to settings.FD_TOLERANCE
        seed: Seed for random points; defaults to settings.DEFAULT_SEED

    Returns:
        VerificationReport: Cases in deterministic order
    """
    if suite not in SUITE_NAMES:
        raise DomainError(f"Unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    tol = settings.FD_TOLERANCE if tol is None else tol
    seed = settings.DEFAULT_SEED if seed is None else seed
    names = list(SUITES) if suite == "all" else [suite]
    cases: List[VerificationCase] = []
    for name in names:
        logger.info(f"Running verification suite {name} up to n={n_max}")
        cases.extend(SUITES[name](n_max, tol, seed))
    report = VerificationReport.from_cases(suite, cases)
    logger.info(f"Suite {suite}: {report.summary['passed']}/{report.summary['total']} passed")
    return report
