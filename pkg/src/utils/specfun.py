"""
Floating-point special functions used at evaluation time.

The dilogarithm is the principal branch with its cut along [1, inf); all
logarithms are principal with arg in (-pi, pi]. Points on a cut are refused
unless the caller names the side they approach from.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional
import cmath
import math

from loguru import logger

from ..settings import get_settings
from .exact_arith import harmonic, harmonic2
from .exceptions import CutAmbiguity, DomainError, SingularPoint

settings = get_settings()

# Correctly rounded doubles.
PI = 3.141592653589793
PI_SQUARED = 9.869604401089358
ZETA2 = 1.6449340668482264  # pi^2 / 6
EULER_GAMMA = 0.5772156649015329

_SERIES_RADIUS = 0.5
_SERIES_MAX_TERMS = 200
_BERNOULLI_TERMS = 30


class Side(str, Enum):
    """Side from which a point on a branch cut is approached."""

    ABOVE = "+i0"
    BELOW = "-i0"

    @property
    def sign(self) -> int:
        return 1 if self is Side.ABOVE else -1


def _bernoulli_even(count: int) -> List[Fraction]:
    """B_0, B_2, ..., B_{2(count-1)} via the Akiyama-Tanigawa triangle."""
    size = 2 * count
    A = [Fraction(0)] * (size + 1)
    numbers: List[Fraction] = []
    for m in range(size):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
        numbers.append(A[0])
    return [numbers[2 * j] for j in range(count)]


@lru_cache(maxsize=1)
def _bernoulli_dilog_weights() -> List[float]:
    """Weights B_{2j} / (2j+1)! for j >= 1 of the series in u = -ln(1-w)."""
    evens = _bernoulli_even(_BERNOULLI_TERMS + 1)
    return [float(evens[j] / factorial(2 * j + 1)) for j in range(1, _BERNOULLI_TERMS + 1)]


def _check_finite(w: complex) -> None:
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError(f"Non-finite argument {w!r}")


def _dilog_power_series(w: complex) -> complex:
    """sum_{k>=1} w^k / k^2 for |w| <= 1/2."""
    total = 0j
    power = w
    for k in range(1, _SERIES_MAX_TERMS + 1):
        term = power / (k * k)
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
        power *= w
    return total


def _dilog_bernoulli(w: complex) -> complex:
    """Bernoulli series in u = -ln(1 - w); accurate for |w| <= 1, Re w <= 1/2."""
    u = -cmath.log(1 - w)
    u2 = u * u
    total = u - u2 / 4
    power = u
    for weight in _bernoulli_dilog_weights():
        power *= u2
        term = weight * power
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
    return total


def _dilog_principal(w: complex) -> complex:
    """Li2 at a point off the cut [1, inf)."""
    if w == 0:
        return 0j
    modulus = abs(w)
    if modulus <= _SERIES_RADIUS:
        return _dilog_power_series(w)
    if modulus > 1:
        # Inversion: Li2(w) = -Li2(1/w) - pi^2/6 - ln^2(-w)/2
        log_minus_w = cmath.log(-w)
        return -_dilog_principal(1 / w) - ZETA2 - 0.5 * log_minus_w * log_minus_w
    if w.real > 0.5:
        # Reflection: Li2(w) = pi^2/6 - ln(w) ln(1-w) - Li2(1-w)
        return ZETA2 - cmath.log(w) * cmath.log(1 - w) - _dilog_principal(1 - w)
    landen = w / (w - 1)
    if abs(landen) <= _SERIES_RADIUS:
        # Landen: Li2(w) = -Li2(w/(w-1)) - ln^2(1-w)/2
        log_one_minus = cmath.log(1 - w)
        return -_dilog_power_series(landen) - 0.5 * log_one_minus * log_one_minus
    return _dilog_bernoulli(w)


def dilog(w: complex, side: Optional[Side] = None) -> complex:
    """
    Principal-branch dilogarithm Li2(w) with cut along [1, inf).

    Args:
        w: Argument
        side: Required for real w > 1; selects the limit from above or below

    Returns:
        complex: Li2(w)

    Raises:
        CutAmbiguity: w on the open cut (1, inf) and no side given
    """
    w = complex(w)
    _check_finite(w)
    tol = settings.CUT_TOLERANCE
    if abs(w.imag) <= tol and w.real >= 1 - tol:
        x = w.real
        if abs(x - 1) <= tol:
            return complex(ZETA2, 0.0)
        if side is None:
            raise CutAmbiguity(f"Li2 argument {w!r} lies on the cut [1, inf); pass a side")
        log_x = math.log(x)
        real = ZETA2 - log_x * math.log(x - 1) - _dilog_principal(complex(1 - x, 0.0)).real
        return complex(real, side.sign * PI * log_x)
    return _dilog_principal(w)


def log_shift_plus(z: complex, side: Optional[Side] = None) -> complex:
    """
    Principal ln((z+1)/2); cut along z in (-inf, -1].

    Raises:
        SingularPoint: z = -1
        CutAmbiguity: z real below -1 and no side given
    """
    z = complex(z)
    _check_finite(z)
    tol = settings.CUT_TOLERANCE
    if abs(z + 1) <= tol:
        raise SingularPoint("ln((z+1)/2) is singular at z = -1")
    if abs(z.imag) <= tol and z.real < -1:
        if side is None:
            raise CutAmbiguity(f"ln((z+1)/2) at {z!r} lies on its cut; pass a side")
        return complex(math.log(-(z.real + 1) / 2), side.sign * PI)
    return cmath.log((z + 1) / 2)


def log_shift_minus(z: complex, side: Optional[Side] = None) -> complex:
    """
    Principal ln((z-1)/2); cut along z in (-inf, 1].

    Raises:
        SingularPoint: z = 1
        CutAmbiguity: z real below 1 and no side given
    """
    z = complex(z)
    _check_finite(z)
    tol = settings.CUT_TOLERANCE
    if abs(z - 1) <= tol:
        raise SingularPoint("ln((z-1)/2) is singular at z = 1")
    if abs(z.imag) <= tol and z.real < 1:
        if side is None:
            raise CutAmbiguity(f"ln((z-1)/2) at {z!r} lies on its cut; pass a side")
        return complex(math.log((1 - z.real) / 2), side.sign * PI)
    return cmath.log((z - 1) / 2)


def log_half_one_plus(x: float) -> float:
    """Real ln((1+x)/2) for x > -1."""
    if x <= -1:
        raise DomainError(f"ln((1+x)/2) needs x > -1, got {x}")
    return math.log((1 + x) / 2)


def log_half_one_minus(x: float) -> float:
    """Real ln((1-x)/2) for x < 1."""
    if x >= 1:
        raise DomainError(f"ln((1-x)/2) needs x < 1, got {x}")
    return math.log((1 - x) / 2)


def dilog_real(x: float) -> float:
    """Li2 for real x <= 1, computed on the real line."""
    if x > 1:
        raise DomainError(f"Real dilogarithm needs x <= 1, got {x}")
    return dilog(complex(x, 0.0)).real


def digamma_int(m: int) -> float:
    """psi(m) = -gamma + H_{m-1} for a positive integer m."""
    if m < 1:
        raise DomainError(f"digamma_int needs m >= 1, got {m}")
    return float(harmonic(m - 1)) - EULER_GAMMA


def trigamma_int(m: int) -> float:
    """psi1(m) = pi^2/6 - H2_{m-1} for a positive integer m."""
    if m < 1:
        raise DomainError(f"trigamma_int needs m >= 1, got {m}")
    return ZETA2 - float(harmonic2(m - 1))


logger.debug(f"specfun ready: {_BERNOULLI_TERMS} Bernoulli terms, cut tolerance {settings.CUT_TOLERANCE}")
