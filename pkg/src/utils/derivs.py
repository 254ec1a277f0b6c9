"""
Evaluation of the degree-derivatives of the Legendre functions at nu = n.

    dP/dnu    = P_n ln((z+1)/2) + R_n
    d2P/dnu2  = -2 P_n Li2((1-z)/2) + B_n ln((z+1)/2) + C_n
    dQ/dnu    = -P_n Li2((1-z)/2) - P_n ln((z+1)/2) ln((z-1)/2) / 2
                + B_n(z) ln((z+1)/2) / 4 - (-1)^n B_n(-z) ln((z-1)/2) / 4
                - pi^2 P_n / 6 + C_n(z) / 4 - (-1)^n C_n(-z) / 4

Points are classified explicitly by the caller (``EvalPoint``); nothing is
reclassified by proximity. Real z < -1 is outside every evaluator's domain
because the principal branches of the ingredients have their cuts there.
"""

from enum import Enum
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..settings import get_settings
from .dpolys import CoeffTriple, coeff_triple
from .exact_arith import sign
from .exceptions import CutAmbiguity, DomainError, SingularPoint
from .legendre_basis import endpoint_values, eval_series, legendre_values
from .specfun import (
    PI,
    PI_SQUARED,
    ZETA2,
    dilog,
    dilog_real,
    log_half_one_minus,
    log_half_one_plus,
    log_shift_minus,
    log_shift_plus,
)

settings = get_settings()


class DomainClass(str, Enum):
    """Where an evaluation point sits relative to the cuts and singularities."""

    OFF_CUT = "OffCut"
    ON_CUT_INTERVAL = "OnCutInterval"
    ENDPOINT_PLUS1 = "EndpointPlus1"
    ENDPOINT_MINUS1 = "EndpointMinus1"


class EvalPoint(BaseModel):
    """An evaluation argument together with its explicit domain class."""

    model_config = ConfigDict(frozen=True)

    value: complex
    domain_class: DomainClass

    @classmethod
    def off_cut(cls, z: complex) -> "EvalPoint":
        return cls(value=complex(z), domain_class=DomainClass.OFF_CUT)

    @classmethod
    def on_cut(cls, x: float) -> "EvalPoint":
        """
        A real point strictly inside (-1, 1).

        Raises:
            DomainError: |x| >= 1
        """
        x = float(x)
        if not -1 < x < 1:
            raise DomainError(f"On-cut points need -1 < x < 1, got {x}")
        return cls(value=complex(x, 0.0), domain_class=DomainClass.ON_CUT_INTERVAL)

    @classmethod
    def endpoint(cls, which: int) -> "EvalPoint":
        if which == 1:
            return cls(value=1 + 0j, domain_class=DomainClass.ENDPOINT_PLUS1)
        if which == -1:
            return cls(value=-1 + 0j, domain_class=DomainClass.ENDPOINT_MINUS1)
        raise DomainError(f"Endpoint must be +1 or -1, got {which}")

    @classmethod
    def classify(cls, z: complex) -> "EvalPoint":
        """
        Strict classification: exact +-1 are endpoints, exact reals in
        (-1, 1) are on the cut, everything else is off the cut.
        """
        z = complex(z)
        if z.imag == 0:
            if z.real == 1:
                return cls.endpoint(1)
            if z.real == -1:
                return cls.endpoint(-1)
            if -1 < z.real < 1:
                return cls.on_cut(z.real)
        return cls.off_cut(z)

    @property
    def x(self) -> float:
        return self.value.real


class DerivativeResult(BaseModel):
    """A derivative value with the formula and point that produced it."""

    value: complex
    formula: str
    n: int
    point: EvalPoint


def _triple(n: int, triple: Optional[CoeffTriple]) -> CoeffTriple:
    if n < 0:
        raise DomainError(f"Degree must be >= 0, got {n}")
    if triple is None:
        return coeff_triple(n)
    if triple.degree != n:
        raise DomainError(f"Coefficient triple is for n={triple.degree}, not n={n}")
    return triple


def _p_n(n: int, z):
    return legendre_values(n, z)[n]


def _on_real_axis(z: complex) -> bool:
    return abs(z.imag) <= settings.CUT_TOLERANCE


def _clean(z: complex, value: complex) -> complex:
    """Exactly real inputs on the regular part of the axis give real values."""
    return complex(value.real, 0.0) if z.imag == 0 else value


def _on_left_cut(z: complex) -> bool:
    # dilog arguments (1 -+ z)/2 halve Im z, so the band is twice the axis tolerance
    return z.real < -1 and abs(z.imag) <= 2 * settings.CUT_TOLERANCE


def _reject_left_cut(z: complex, what: str) -> None:
    if _on_left_cut(z):
        raise DomainError(f"{what} is not single-valued at real z = {z.real} < -1")


def dP_dnu(n: int, p: EvalPoint, triple: Optional[CoeffTriple] = None) -> DerivativeResult:
    """
    First degree-derivative of P_nu at nu = n.

    Raises:
        SingularPoint: z = -1
        DomainError: real z < -1
    """
    t = _triple(n, triple)
    cls = p.domain_class
    if cls is DomainClass.ENDPOINT_MINUS1:
        raise SingularPoint("dP/dnu has a logarithmic singularity at z = -1")
    if cls is DomainClass.ENDPOINT_PLUS1:
        return DerivativeResult(value=0j, formula="dP.endpoint_plus1", n=n, point=p)
    if cls is DomainClass.ON_CUT_INTERVAL:
        x = p.x
        value = _p_n(n, x) * log_half_one_plus(x) + eval_series(t.r, x)
        return DerivativeResult(value=complex(value, 0.0), formula="dP.log_form", n=n, point=p)
    z = p.value
    _reject_left_cut(z, "dP/dnu")
    value = _p_n(n, z) * log_shift_plus(z) + eval_series(t.r, z)
    return DerivativeResult(value=_clean(z, value), formula="dP.log_form", n=n, point=p)


def d2P_dnu2(n: int, p: EvalPoint, triple: Optional[CoeffTriple] = None) -> DerivativeResult:
    """
    Second degree-derivative of P_nu at nu = n.

    At z = 1 the value is exactly 0. At z = -1 the logarithmic term drops out
    (B_n(-1) = 0) and the finite limit -2 P_n(-1) pi^2/6 + C_n(-1) is returned.

    Raises:
        DomainError: real z < -1
    """
    t = _triple(n, triple)
    cls = p.domain_class
    if cls is DomainClass.ENDPOINT_PLUS1:
        return DerivativeResult(value=0j, formula="d2P.endpoint_plus1", n=n, point=p)
    if cls is DomainClass.ENDPOINT_MINUS1:
        c_at_minus = endpoint_values(t.c)[1]
        value = -2 * sign(n) * ZETA2 + float(c_at_minus)
        return DerivativeResult(value=complex(value, 0.0), formula="d2P.endpoint_minus1_limit", n=n, point=p)
    if cls is DomainClass.ON_CUT_INTERVAL:
        x = p.x
        value = (
            -2 * _p_n(n, x) * dilog_real((1 - x) / 2)
            + eval_series(t.b, x) * log_half_one_plus(x)
            + eval_series(t.c, x)
        )
        return DerivativeResult(value=complex(value, 0.0), formula="d2P.dilog_form", n=n, point=p)
    z = p.value
    _reject_left_cut(z, "d2P/dnu2")
    value = (
        -2 * _p_n(n, z) * dilog((1 - z) / 2)
        + eval_series(t.b, z) * log_shift_plus(z)
        + eval_series(t.c, z)
    )
    return DerivativeResult(value=_clean(z, value), formula="d2P.dilog_form", n=n, point=p)


def d2P_dnu2_anydeg(nu_int: int, p: EvalPoint, triple: Optional[CoeffTriple] = None) -> DerivativeResult:
    """
    Second derivative at any integer degree, using P_{-nu-1} = P_nu.

    The result echoes nu_int; the value is that of degree n = -nu_int - 1 for
    negative input.
    """
    n = nu_int if nu_int >= 0 else -nu_int - 1
    result = d2P_dnu2(n, p, triple)
    return result.model_copy(update={"n": nu_int})


def _check_q_offcut(z: complex) -> None:
    tol = settings.CUT_TOLERANCE
    if abs(z - 1) <= tol or abs(z + 1) <= tol:
        raise SingularPoint(f"dQ/dnu is singular at z = {z.real:+g}")
    if _on_real_axis(z) and -1 < z.real < 1:
        raise CutAmbiguity(f"z = {z!r} lies on (-1, 1); use the on-cut evaluator")
    if _on_left_cut(z):
        raise DomainError(f"dQ/dnu is not single-valued at real z = {z.real} < -1")


def dQ_dnu_offcut(n: int, z: complex, triple: Optional[CoeffTriple] = None) -> DerivativeResult:
    """
    First degree-derivative of Q_nu at nu = n for z off (-inf, 1].

    Raises:
        SingularPoint: z = +-1
        CutAmbiguity: z within the cut tolerance of (-1, 1)
        DomainError: real z < -1
    """
    t = _triple(n, triple)
    z = complex(z)
    _check_q_offcut(z)
    s = sign(n)
    p_n = _p_n(n, z)
    lp = log_shift_plus(z)
    lm = log_shift_minus(z)
    value = (
        -p_n * dilog((1 - z) / 2)
        - 0.5 * p_n * lp * lm
        + 0.25 * eval_series(t.b, z) * lp
        - 0.25 * s * eval_series(t.b, -z) * lm
        - ZETA2 * p_n
        + 0.25 * eval_series(t.c, z)
        - 0.25 * s * eval_series(t.c, -z)
    )
    return DerivativeResult(value=_clean(z, value), formula="dQ.offcut", n=n, point=EvalPoint.off_cut(z))


def dQ_dnu_oncut(n: int, x: float, triple: Optional[CoeffTriple] = None) -> DerivativeResult:
    """
    First degree-derivative of Q_nu at nu = n on the interval (-1, 1).

    Defined as the average of the limits from above and below the cut; every
    logarithm argument is a positive real and the arithmetic stays real.

    Raises:
        DomainError: |x| >= 1
    """
    t = _triple(n, triple)
    point = EvalPoint.on_cut(x)
    x = point.x
    s = sign(n)
    p_n = _p_n(n, x)
    lp = log_half_one_plus(x)
    lm = log_half_one_minus(x)
    value = (
        -p_n * dilog_real((1 - x) / 2)
        - 0.5 * p_n * lp * lm
        + 0.25 * eval_series(t.b, x) * lp
        - 0.25 * s * eval_series(t.b, -x) * lm
        - ZETA2 * p_n
        + 0.25 * eval_series(t.c, x)
        - 0.25 * s * eval_series(t.c, -x)
    )
    return DerivativeResult(value=complex(value, 0.0), formula="dQ.oncut_average", n=n, point=point)


def dQ_dnu_offcut_split(n: int, z: complex, triple: Optional[CoeffTriple] = None) -> complex:
    """
    dQ/dnu at nu = n in the form that still carries Li2((z+1)/2) and the
    -+ i pi terms (upper sign for Im z > 0). Only defined off the real axis;
    kept as an independent check of the single-valued form.
    """
    t = _triple(n, triple)
    z = complex(z)
    if _on_real_axis(z):
        raise DomainError("The split form needs Im z != 0")
    s = sign(n)
    upper = 1 if z.imag > 0 else -1
    p_n = _p_n(n, z)
    lp = log_shift_plus(z)
    return (
        0.5 * p_n * (dilog((z + 1) / 2) - dilog((1 - z) / 2))
        + (0.25 * eval_series(t.b, z) - upper * 0.5j * PI * p_n) * lp
        - 0.25 * s * eval_series(t.b, -z) * log_shift_plus(-z)
        - 0.25 * PI_SQUARED * p_n
        - upper * 0.5j * PI * eval_series(t.r, z)
        + 0.25 * eval_series(t.c, z)
        - 0.25 * s * eval_series(t.c, -z)
    )


def d2P_dnu2_recurrence(n_max: int, z: complex) -> List[complex]:
    """
    Second derivatives for degrees 0..n_max from the forward difference
    recurrence obtained by differentiating the three-term recurrence twice,
    seeded with the degree-0 and degree-1 closed forms.
    """
    z = complex(z)
    _reject_left_cut(z, "d2P/dnu2")
    li = dilog((1 - z) / 2)
    lp = log_shift_plus(z)
    values = [-2 * li]
    if n_max >= 1:
        values.append(-2 * z * li + 2 * (z + 1) * lp - 2 * (z - 1))
    p = legendre_values(n_max + 1, z)
    r = [eval_series(coeff_triple(m).r, z) for m in range(n_max + 1)]
    for m in range(1, n_max):
        r_next = eval_series(coeff_triple(m + 1).r, z)
        forcing = 2 * (p[m + 1] - 2 * z * p[m] + p[m - 1]) * lp + 2 * (r_next - 2 * z * r[m] + r[m - 1])
        values.append(((2 * m + 1) * z * values[m] - m * values[m - 1] - forcing) / (m + 1))
    return values[: n_max + 1]


def recurrence_residual(n: int, z: complex) -> float:
    """
    |(n+1) D_{n+1} - (2n+1) z D_n + n D_{n-1} + 2[P_{n+1} - 2z P_n + P_{n-1}] ln((z+1)/2)
      + 2[R_{n+1} - 2z R_n + R_{n-1}]| for the closed-form D_m, relative to max(1, |D_n|).
    """
    if n < 1:
        raise DomainError(f"Recurrence residual needs n >= 1, got {n}")
    point = EvalPoint.off_cut(z)
    z = point.value
    d = [d2P_dnu2(m, point).value for m in (n - 1, n, n + 1)]
    p = legendre_values(n + 1, z)
    r = [eval_series(coeff_triple(m).r, z) for m in (n - 1, n, n + 1)]
    lp = log_shift_plus(z)
    residual = (
        (n + 1) * d[2]
        - (2 * n + 1) * z * d[1]
        + n * d[0]
        + 2 * (p[n + 1] - 2 * z * p[n] + p[n - 1]) * lp
        + 2 * (r[2] - 2 * z * r[1] + r[0])
    )
    scale = max(1.0, abs(d[1]))
    logger.debug(f"Recurrence residual n={n} z={z}: {abs(residual) / scale:.3e}")
    return abs(residual) / scale
