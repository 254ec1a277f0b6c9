"""
Exact generation of the coefficient polynomials R_n, B_n and C_n.

    dP/dnu   |_{nu=n} = P_n ln((z+1)/2) + R_n
    d2P/dnu2 |_{nu=n} = -2 P_n Li2((1-z)/2) + B_n ln((z+1)/2) + C_n

All three are built as Legendre series with rational coefficients. Digamma
and trigamma values appear only as differences at integer arguments and are
replaced by harmonic numbers before any arithmetic happens.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

from loguru import logger

from .exact_arith import harmonic, harmonic2, psi_diff, sign
from .exceptions import DomainError, InternalInconsistency
from .legendre_basis import (
    LegendreSeries,
    endpoint_values,
    legendre_operator,
    parity_flip,
    unit,
    zminus1_dz,
    zminus1_dz_series,
    zplus1_dz,
)
from .specfun import PI_SQUARED, digamma_int, trigamma_int

_C_NN_FLOAT_TOL = 1e-12


def _check_degree(n: int) -> None:
    if n < 0:
        raise DomainError(f"Degree must be >= 0, got {n}; negative degrees are mapped in derivs")


def _weight(n: int, k: int) -> Fraction:
    """(2k+1) / ((n-k)(n+k+1)), the kernel shared by every sum below."""
    return Fraction(2 * k + 1, (n - k) * (n + k + 1))


def _psi_gap(n: int) -> Fraction:
    """psi(2n+1) - psi(n+1) = H_{2n} - H_n."""
    return psi_diff(2 * n + 1, n + 1)


@lru_cache(maxsize=None)
def r_poly(n: int) -> LegendreSeries:
    """
    R_n = 2[psi(2n+1) - psi(n+1)] P_n + 2 sum_{k<n} (-1)^{n+k} w_nk P_k.

    Args:
        n: Degree (>= 0)

    Returns:
        LegendreSeries: R_n, the zero series for n = 0
    """
    _check_degree(n)
    if n == 0:
        return LegendreSeries.zero()
    coeffs = [2 * sign(n + k) * _weight(n, k) for k in range(n)]
    coeffs.append(2 * _psi_gap(n))
    return LegendreSeries(tuple(coeffs))


@lru_cache(maxsize=None)
def b_poly(n: int) -> LegendreSeries:
    """B_n = 4[psi(2n+1) - psi(n+1)] P_n + 4 sum_{k<n} w_nk P_k."""
    _check_degree(n)
    if n == 0:
        return LegendreSeries.zero()
    coeffs = [4 * _weight(n, k) for k in range(n)]
    coeffs.append(4 * _psi_gap(n))
    return LegendreSeries(tuple(coeffs))


def a_poly(n: int) -> LegendreSeries:
    """Multiplier of Li2((1-z)/2): -2 P_n."""
    _check_degree(n)
    return unit(n).scale(-2)


@lru_cache(maxsize=None)
def c_coeff(n: int, k: int) -> Fraction:
    """
    Exact c_nk for 0 <= k <= n-1.

    The digamma bracket psi(n+k+1) - psi(n-k+1) - psi(floor((n+k)/2)+1)
    + psi(floor((n-k)/2)+1) becomes H_{n+k} - H_{n-k} - H_{(n+k)//2} + H_{(n-k)//2}.

    Raises:
        DomainError: k outside [0, n-1]
    """
    if n < 1 or k < 0 or k >= n:
        raise DomainError(f"c_coeff needs 0 <= k <= n-1, got n={n}, k={k}")
    bracket = harmonic(n + k) - harmonic(n - k) - harmonic((n + k) // 2) + harmonic((n - k) // 2)
    d = (n - k) * (n + k + 1)
    s = sign(n + k)
    return (
        s * Fraction(8 * (2 * k + 1), d) * bracket
        - Fraction(4 * (2 * k + 1) ** 2, d * d)
        - s * Fraction(4 * (2 * n + 1) * (2 * k + 1), d * d)
    )


def c_nn_float(n: int) -> float:
    """-pi^2/3 + 4[psi(2n+1) - psi(n+1)]^2 + 4 psi1(2n+1) - 2 psi1(n+1) in doubles."""
    gap = digamma_int(2 * n + 1) - digamma_int(n + 1)
    return -PI_SQUARED / 3 + 4 * gap * gap + 4 * trigamma_int(2 * n + 1) - 2 * trigamma_int(n + 1)


@lru_cache(maxsize=None)
def c_nn_coeff(n: int) -> Fraction:
    """
    Exact c_nn = 4(H_{2n} - H_n)^2 - 4 H2_{2n} + 2 H2_n.

    The pi^2 terms cancel against the trigamma expansions. Two independent
    checks guard the reduction: the double-precision transcendental form and
    the telescoping identity c_nn = -sum_{k<n} c_nk.

    Raises:
        InternalInconsistency: either check fails
    """
    _check_degree(n)
    if n == 0:
        return Fraction(0)
    gap = _psi_gap(n)
    value = 4 * gap * gap - 4 * harmonic2(2 * n) + 2 * harmonic2(n)

    telescoped = -sum((c_coeff(n, k) for k in range(n)), Fraction(0))
    if telescoped != value:
        raise InternalInconsistency(f"c_nn({n}) = {value} but -sum c_nk = {telescoped}")
    approx = c_nn_float(n)
    if not math.isclose(float(value), approx, rel_tol=_C_NN_FLOAT_TOL, abs_tol=_C_NN_FLOAT_TOL):
        raise InternalInconsistency(f"c_nn({n}) = {float(value)!r} disagrees with transcendental form {approx!r}")
    return value


@lru_cache(maxsize=None)
def c_poly(n: int) -> LegendreSeries:
    """C_n = c_nn P_n + sum_{k<n} c_nk P_k."""
    _check_degree(n)
    if n == 0:
        return LegendreSeries.zero()
    coeffs = [c_coeff(n, k) for k in range(n)]
    coeffs.append(c_nn_coeff(n))
    return LegendreSeries(tuple(coeffs))


def c_poly_telescoped(n: int) -> LegendreSeries:
    """C_n = sum_{k<n} c_nk (P_k - P_n), built without the closed-form c_nn."""
    _check_degree(n)
    total = LegendreSeries.zero()
    p_n = unit(n)
    for k in range(n):
        total = total + (unit(k) - p_n).scale(c_coeff(n, k))
    return total


def q_poly_parts(n: int) -> "tuple[LegendreSeries, LegendreSeries]":
    """
    Polynomial part of dQ/dnu at nu = n, split as rational + pi^2 * multiplier.

    Returns:
        (C_n(z)/4 - (-1)^n C_n(-z)/4, -P_n/6)
    """
    c = c_poly(n)
    rational = c.scale(Fraction(1, 4)) - parity_flip(c).scale(Fraction(sign(n), 4))
    return rational, unit(n).scale(Fraction(-1, 6))


@dataclass(frozen=True)
class CoeffTriple:
    """R_n, B_n and C_n of one degree, checked against each other."""

    degree: int
    r: LegendreSeries
    b: LegendreSeries
    c: LegendreSeries

    def check(self) -> "CoeffTriple":
        """
        Verify the structural identities; returns self.

        Raises:
            InternalInconsistency: any identity fails
        """
        n = self.degree
        failures = []
        for name, series in (("r", self.r), ("b", self.b), ("c", self.c)):
            if n >= 1 and series.degree != n:
                failures.append(f"{name} has degree {series.degree}")
        if n == 0 and not (self.r.is_zero() and self.b.is_zero() and self.c.is_zero()):
            failures.append("degree 0 must give zero series")
        if self.b != parity_flip(self.r).scale(2 * sign(n)):
            failures.append("b != 2 (-1)^n r(-z)")
        if endpoint_values(self.r)[0] != 0:
            failures.append("r(1) != 0")
        if endpoint_values(self.b)[1] != 0:
            failures.append("b(-1) != 0")
        if endpoint_values(self.c)[0] != 0:
            failures.append("c(1) != 0")
        if failures:
            raise InternalInconsistency(f"Coefficient triple n={n}: " + "; ".join(failures))
        return self


@lru_cache(maxsize=None)
def coeff_triple(n: int) -> CoeffTriple:
    """Generate and check R_n, B_n, C_n."""
    _check_degree(n)
    triple = CoeffTriple(degree=n, r=r_poly(n), b=b_poly(n), c=c_poly(n)).check()
    logger.debug(f"Generated coefficient triple for n={n}")
    return triple


def ode_residuals(n: int) -> "dict[str, LegendreSeries]":
    """
    Residual series of the three inhomogeneous Legendre equations.

    Each entry is zero exactly when the identity holds:
      r: L_n R_n - 2[(z-1) P_n' - n P_n]
      b: L_n B_n - 4[(z+1) P_n' - n P_n]
      c: L_n C_n - [2 (z-1) B_n' + B_n - 2(2n+1) R_n]
    """
    r, b, c = r_poly(n), b_poly(n), c_poly(n)
    p_n = unit(n).scale(n)
    rhs_c = zminus1_dz_series(b).scale(2) + b - r.scale(2 * (2 * n + 1))
    return {
        "r": legendre_operator(r, n) - (zminus1_dz(n) - p_n).scale(2),
        "b": legendre_operator(b, n) - (zplus1_dz(n) - p_n).scale(4),
        "c": legendre_operator(c, n) - rhs_c,
    }
