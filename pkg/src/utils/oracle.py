"""
Independent oracles for the closed forms.

Nothing here shares code paths with the coefficient generators beyond the
harmonic tables: P_nu comes from the Gauss hypergeometric series, Q_nu from
its definition in terms of P_nu, derivatives in nu from Richardson-extrapolated
central differences, and the finite sums from direct summation.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence
import cmath
import math

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from ..settings import get_settings
from .derivs import dQ_dnu_offcut
from .exact_arith import harmonic, harmonic2, sign
from .exceptions import DomainError, NearIntegerDegree, NoConvergence
from .specfun import EULER_GAMMA, PI, PI_SQUARED, digamma_int, trigamma_int

settings = get_settings()

ON_CUT_EPSILONS = (1e-3, 1e-4, 1e-5)


class FDConfig(BaseModel):
    """Step, extrapolation depth and acceptance tolerance of the difference oracles."""

    h: float = Field(default_factory=lambda: settings.FD_STEP, ge=1e-5, le=1e-1)
    richardson_levels: int = Field(default_factory=lambda: settings.FD_RICHARDSON_LEVELS, ge=1, le=4)
    tolerance: float = Field(default_factory=lambda: settings.FD_TOLERANCE, gt=0)


def p_nu_hyp(nu: float, z: complex) -> complex:
    """
    P_nu(z) = 2F1(-nu, nu+1; 1; (1-z)/2) summed term by term.

    Args:
        nu: Real degree
        z: Point with |1 - z| / 2 < 1

    Returns:
        complex: P_nu(z)

    Raises:
        DomainError: z outside the convergence disk
        NoConvergence: the term cap is reached before the tail is small
    """
    z = complex(z)
    t = (1 - z) / 2
    if abs(t) >= 1:
        raise DomainError(f"Hypergeometric series needs |1 - z|/2 < 1, got {abs(t):.6g} at z = {z}")
    tol = settings.HYP_TAIL_TOL
    total = 1 + 0j
    term = 1 + 0j
    quiet = 0
    for k in range(settings.HYP_MAX_TERMS):
        term *= (k - nu) * (k + nu + 1) / ((k + 1) ** 2) * t
        total += term
        if abs(term) <= tol * abs(total):
            quiet += 1
            if quiet >= 3:
                return total
        else:
            quiet = 0
    raise NoConvergence(f"P_nu series for nu={nu}, z={z} not converged after {settings.HYP_MAX_TERMS} terms")


def q_nu(nu: float, z: complex) -> complex:
    """
    Q_nu(z) = (pi/2) [e^{-+i pi nu} P_nu(z) - P_nu(-z)] / sin(pi nu), upper sign for Im z > 0.

    Raises:
        NearIntegerDegree: nu within NEAR_INTEGER_GUARD of an integer
        DomainError: z on the real axis or +-z outside the series disk
    """
    if abs(nu - round(nu)) < settings.NEAR_INTEGER_GUARD:
        raise NearIntegerDegree(f"Q_nu via P_nu is ill-conditioned at nu = {nu}")
    z = complex(z)
    if abs(z.imag) <= settings.CUT_TOLERANCE:
        raise DomainError(f"Q_nu oracle needs Im z != 0, got z = {z}")
    upper = 1 if z.imag > 0 else -1
    phase = cmath.exp(-1j * upper * PI * nu)
    return 0.5 * PI * (phase * p_nu_hyp(nu, z) - p_nu_hyp(nu, -z)) / math.sin(PI * nu)


def _richardson(estimates: Sequence[complex]) -> complex:
    """Eliminate h^2, h^4, ... from estimates at h, h/2, h/4, ...; one estimate is returned as is."""
    table = list(estimates)
    level = 1
    while len(table) > 1:
        factor = 4**level
        table = [(factor * table[i + 1] - table[i]) / (factor - 1) for i in range(len(table) - 1)]
        level += 1
    return table[0]


def _steps(cfg: FDConfig) -> List[float]:
    return [cfg.h / 2**j for j in range(cfg.richardson_levels)]


def fd2_nu(n: int, z: complex, cfg: FDConfig = None) -> complex:
    """
    Second derivative of P_nu(z) in nu at nu = n by central differences.

    Args:
        n: Degree (>= 0)
        z: Point inside the hypergeometric disk
        cfg: Step and extrapolation settings

    Returns:
        complex: Extrapolated [P_{n+h} - 2 P_n + P_{n-h}] / h^2
    """
    cfg = cfg or FDConfig()
    centre = p_nu_hyp(n, z)
    estimates = [(p_nu_hyp(n + h, z) - 2 * centre + p_nu_hyp(n - h, z)) / (h * h) for h in _steps(cfg)]
    return _richardson(estimates)


def fd1_q(n: int, z: complex, cfg: FDConfig = None) -> complex:
    """First derivative of Q_nu(z) in nu at nu = n by central differences."""
    cfg = cfg or FDConfig()
    estimates = [(q_nu(n + h, z) - q_nu(n - h, z)) / (2 * h) for h in _steps(cfg)]
    return _richardson(estimates)


def _w(n: int, k: int) -> Fraction:
    return Fraction(2 * k + 1, (n - k) * (n + k + 1))


def _check_sum_degree(n: int) -> None:
    if n < 1:
        raise DomainError(f"Summation formulas need n >= 1, got {n}")


def _check_lower(n: int, m: int) -> None:
    _check_sum_degree(n)
    if not 0 <= m <= n - 1:
        raise DomainError(f"Lower limit must satisfy 0 <= m <= n-1, got n={n}, m={m}")


def brute_S1(n: int, m: int) -> Fraction:
    """sum_{k=m}^{n-1} (-1)^{n+k} (2k+1)/((n-k)(n+k+1)) by direct summation."""
    _check_lower(n, m)
    return sum((sign(n + k) * _w(n, k) for k in range(m, n)), Fraction(0))


def _alternating_suffixes(n: int, shift: int) -> List[Fraction]:
    """suffix[k] = sum_{m=k}^{n-1} (-1)^{m+shift} w_m, accumulated from m = n-1 down."""
    suffix = [Fraction(0)] * n
    acc = Fraction(0)
    for k in range(n - 1, -1, -1):
        acc += sign(k + shift) * _w(n, k)
        suffix[k] = acc
    return suffix


def brute_S1_all(n: int) -> List[Fraction]:
    """brute_S1(n, m) for every m = 0..n-1 in one backward pass."""
    _check_sum_degree(n)
    return _alternating_suffixes(n, n)


def closed_S1(n: int, m: int) -> Fraction:
    """-H_{2n} + H_{n+m} + H_n - H_{n-m} - H_{(n+m)//2} + H_{(n-m)//2}."""
    _check_lower(n, m)
    return (
        -harmonic(2 * n)
        + harmonic(n + m)
        + harmonic(n)
        - harmonic(n - m)
        - harmonic((n + m) // 2)
        + harmonic((n - m) // 2)
    )


def brute_S2(n: int) -> Fraction:
    """Double sum sum_k (-1)^k w_k sum_{m>=k} (-1)^m w_m, inner sums taken directly."""
    _check_sum_degree(n)
    suffix = _alternating_suffixes(n, 0)
    return sum((sign(k) * _w(n, k) * suffix[k] for k in range(n)), Fraction(0))


def brute_S3(n: int) -> Fraction:
    _check_sum_degree(n)
    return sum((_w(n, k) ** 2 for k in range(n)), Fraction(0))


def brute_S4(n: int) -> Fraction:
    _check_sum_degree(n)
    return sum(
        (sign(n + k) * Fraction((2 * n + 1) * (2 * k + 1), ((n - k) * (n + k + 1)) ** 2) for k in range(n)),
        Fraction(0),
    )


def closed_S2(n: int) -> Fraction:
    """(H_{2n} - H_n)^2 / 2 + H2_{2n} / 2 - H_{2n} / (2n+1)."""
    _check_sum_degree(n)
    gap = harmonic(2 * n) - harmonic(n)
    return gap * gap / 2 + harmonic2(2 * n) / 2 - harmonic(2 * n) / (2 * n + 1)


def closed_S3(n: int) -> Fraction:
    """H2_{2n} - 2 H_{2n} / (2n+1)."""
    _check_sum_degree(n)
    return harmonic2(2 * n) - 2 * harmonic(2 * n) / (2 * n + 1)


def closed_S4(n: int) -> Fraction:
    """-H2_{2n} + H2_n / 2."""
    _check_sum_degree(n)
    return -harmonic2(2 * n) + harmonic2(n) / 2


def transcendental_S2_float(n: int) -> float:
    """pi^2/12 - gamma/(2n+1) + [psi(2n+1) - psi(n+1)]^2 / 2 - psi(2n+1)/(2n+1) - psi1(2n+1)/2."""
    _check_sum_degree(n)
    psi_2n = digamma_int(2 * n + 1)
    gap = psi_2n - digamma_int(n + 1)
    return (
        PI_SQUARED / 12
        - EULER_GAMMA / (2 * n + 1)
        + 0.5 * gap * gap
        - psi_2n / (2 * n + 1)
        - 0.5 * trigamma_int(2 * n + 1)
    )


def transcendental_S3_float(n: int) -> float:
    """pi^2/6 - 2 gamma/(2n+1) - 2 psi(2n+1)/(2n+1) - psi1(2n+1)."""
    _check_sum_degree(n)
    return (
        PI_SQUARED / 6
        - 2 * EULER_GAMMA / (2 * n + 1)
        - 2 * digamma_int(2 * n + 1) / (2 * n + 1)
        - trigamma_int(2 * n + 1)
    )


def transcendental_S4_float(n: int) -> float:
    """-pi^2/12 + psi1(2n+1) - psi1(n+1)/2."""
    _check_sum_degree(n)
    return -PI_SQUARED / 12 + trigamma_int(2 * n + 1) - 0.5 * trigamma_int(n + 1)


def brute_c_coeff(n: int, k: int) -> Fraction:
    """
    c_nk with the alternating inner sum over m = k..n-1 taken term by term
    rather than through harmonic numbers.
    """
    _check_lower(n, k)
    inner = sum((sign(m + k) * _w(n, m) for m in range(k, n)), Fraction(0))
    return _c_from_inner(n, k, harmonic(2 * n) - harmonic(n), inner)


def brute_c_coeffs(n: int) -> List[Fraction]:
    """brute_c_coeff(n, k) for every k, sharing one backward pass over the inner sums."""
    _check_sum_degree(n)
    gap = harmonic(2 * n) - harmonic(n)
    suffix = _alternating_suffixes(n, 0)
    return [_c_from_inner(n, k, gap, sign(k) * suffix[k]) for k in range(n)]


def _c_from_inner(n: int, k: int, gap: Fraction, inner: Fraction) -> Fraction:
    d = (n - k) * (n + k + 1)
    s = sign(n + k)
    return (
        s * gap * Fraction(8 * (2 * k + 1), d)
        + Fraction(8 * (2 * k + 1), d) * inner
        - Fraction(4 * (2 * k + 1) ** 2, d * d)
        - s * Fraction(4 * (2 * n + 1) * (2 * k + 1), d * d)
    )


def nested_sum_identity_check(values: Iterable[Fraction]) -> bool:
    """
    sum_k f_k sum_{m>=k} f_m == (sum f)^2 / 2 + (sum f^2) / 2, exactly.

    Args:
        values: Nonempty list of rationals

    Returns:
        bool: Whether the identity holds
    """
    f = [Fraction(v) for v in values]
    if not f:
        raise DomainError("identity check needs at least one value")
    left = Fraction(0)
    tail = Fraction(0)
    for value in reversed(f):
        tail += value
        left += value * tail
    total = sum(f, Fraction(0))
    right = total * total / 2 + sum((v * v for v in f), Fraction(0)) / 2
    return left == right


def on_cut_average(n: int, x: float, epsilons: Sequence[float] = ON_CUT_EPSILONS) -> complex:
    """
    Average of the off-cut derivative just above and below x, extrapolated
    to zero distance from the cut by a polynomial fit in epsilon (quadratic
    when three or more distances are given).

    Args:
        n: Degree
        x: Point in (-1, 1)
        epsilons: Distances from the cut at which the average is sampled

    Returns:
        complex: Value of the fit at epsilon = 0
    """
    if not -1 < x < 1:
        raise DomainError(f"On-cut average needs -1 < x < 1, got {x}")
    eps = np.asarray(epsilons, dtype=float)
    averages = np.array(
        [0.5 * (dQ_dnu_offcut(n, complex(x, e)).value + dQ_dnu_offcut(n, complex(x, -e)).value) for e in eps]
    )
    degree = min(2, len(eps) - 1)
    intercept_re = np.polyfit(eps, averages.real, degree)[-1]
    intercept_im = np.polyfit(eps, averages.imag, degree)[-1]
    logger.debug(f"On-cut average n={n} x={x}: {intercept_re:.17g}{intercept_im:+.3g}i")
    return complex(float(intercept_re), float(intercept_im))
