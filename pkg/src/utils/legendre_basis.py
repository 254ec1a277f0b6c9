"""
Exact polynomial algebra over the Legendre basis {P_0, ..., P_n}.

A ``LegendreSeries`` stores rational coefficients c_k of sum_k c_k P_k(z).
The Legendre differential operator is diagonal in this basis, which makes the
inhomogeneous ODE identities of the coefficient polynomials checkable as exact
equalities. Evaluation is the only step that leaves exact arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple, Union

from .exact_arith import sign

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class LegendreSeries:
    """
    Polynomial sum_k coeffs[k] * P_k(z) with exact rational coefficients.

    Trailing zeros are always trimmed, so the zero polynomial is the empty
    tuple and two series are equal exactly when their coefficients are.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def of(cls, *coeffs: Scalar) -> "LegendreSeries":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "LegendreSeries":
        return cls(())

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero series."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "LegendreSeries") -> "LegendreSeries":
        size = max(len(self.coeffs), len(other.coeffs))
        return LegendreSeries(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    def __sub__(self, other: "LegendreSeries") -> "LegendreSeries":
        return self + (-other)

    def __neg__(self) -> "LegendreSeries":
        return LegendreSeries(tuple(-c for c in self.coeffs))

    def scale(self, factor: Scalar) -> "LegendreSeries":
        factor = Fraction(factor)
        return LegendreSeries(tuple(factor * c for c in self.coeffs))

    def __rmul__(self, factor: Scalar) -> "LegendreSeries":
        return self.scale(factor)

    def __call__(self, z: complex) -> complex:
        return eval_series(self, z)

    def __repr__(self) -> str:
        return "LegendreSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def unit(n: int) -> LegendreSeries:
    """The series of P_n alone."""
    return LegendreSeries((0,) * n + (1,))


def _one(z) -> Union[float, complex]:
    """Unit of the arithmetic matching z: real inputs stay real."""
    return 1.0 if isinstance(z, (int, float)) else complex(1.0)


def legendre_values(n: int, z: complex) -> List[complex]:
    """
    P_0(z), ..., P_n(z) by the upward three-term recurrence.

    Args:
        n: Highest degree required
        z: Evaluation point

    Returns:
        List of n+1 values
    """
    one = _one(z)
    values = [one]
    if n >= 1:
        values.append(z * one)
    for k in range(1, n):
        values.append(((2 * k + 1) * z * values[k] - k * values[k - 1]) / (k + 1))
    return values


def eval_series(s: LegendreSeries, z: complex) -> complex:
    """
    Evaluate sum_k coeffs[k] P_k(z).

    Coefficients are rounded to double once each.
    """
    total = 0.0 * _one(z)
    if s.is_zero():
        return total
    values = legendre_values(s.degree, z)
    for c, p in zip(s.coeffs, values):
        total += float(c) * p
    return total


def endpoint_values(s: LegendreSeries) -> Tuple[Fraction, Fraction]:
    """Exact values at z = 1 and z = -1 (P_k(1) = 1, P_k(-1) = (-1)^k)."""
    at_plus = sum(s.coeffs, Fraction(0))
    at_minus = sum((sign(k) * c for k, c in enumerate(s.coeffs)), Fraction(0))
    return at_plus, at_minus


def parity_flip(s: LegendreSeries) -> LegendreSeries:
    """Series of s(-z): coeffs[k] -> (-1)^k coeffs[k]."""
    return LegendreSeries(tuple(sign(k) * c for k, c in enumerate(s.coeffs)))


def legendre_operator(s: LegendreSeries, n: int) -> LegendreSeries:
    """
    Apply d/dz (1 - z^2) d/dz + n(n+1).

    P_k is an eigenfunction with eigenvalue n(n+1) - k(k+1) = (n-k)(n+k+1).
    """
    return LegendreSeries(tuple((n - k) * (n + k + 1) * c for k, c in enumerate(s.coeffs)))


def zminus1_dz(n: int) -> LegendreSeries:
    """(z-1) dP_n/dz = n P_n + sum_{k<n} (-1)^{n+k} (2k+1) P_k."""
    if n == 0:
        return LegendreSeries.zero()
    coeffs = [sign(n + k) * (2 * k + 1) for k in range(n)]
    coeffs.append(n)
    return LegendreSeries(tuple(coeffs))


def zplus1_dz(n: int) -> LegendreSeries:
    """(z+1) dP_n/dz = n P_n + sum_{k<n} (2k+1) P_k."""
    if n == 0:
        return LegendreSeries.zero()
    coeffs = [2 * k + 1 for k in range(n)]
    coeffs.append(n)
    return LegendreSeries(tuple(coeffs))


def zminus1_dz_series(s: LegendreSeries) -> LegendreSeries:
    """
    (z-1) ds/dz for an arbitrary series, by linearity over zminus1_dz.

    The P_j coefficient is j*c_j + (2j+1) * sum_{k>j} (-1)^{k+j} c_k; the
    alternating tail is accumulated from the top down.
    """
    size = len(s.coeffs)
    out = [Fraction(0)] * size
    tail = Fraction(0)  # sum_{k>j} (-1)^k c_k
    for j in range(size - 1, -1, -1):
        out[j] = j * s.coeffs[j] + (2 * j + 1) * sign(j) * tail
        tail += sign(j) * s.coeffs[j]
    return LegendreSeries(tuple(out))


def zplus1_dz_series(s: LegendreSeries) -> LegendreSeries:
    """(z+1) ds/dz for an arbitrary series."""
    size = len(s.coeffs)
    out = [Fraction(0)] * size
    tail = Fraction(0)
    for j in range(size - 1, -1, -1):
        out[j] = j * s.coeffs[j] + (2 * j + 1) * tail
        tail += s.coeffs[j]
    return LegendreSeries(tuple(out))


@lru_cache(maxsize=None)
def _legendre_monomials(n: int) -> Tuple[Fraction, ...]:
    """Ascending monomial coefficients of P_n."""
    if n == 0:
        return (Fraction(1),)
    if n == 1:
        return (Fraction(0), Fraction(1))
    prev, prev2 = _legendre_monomials(n - 1), _legendre_monomials(n - 2)
    out = [Fraction(0)] * (n + 1)
    m = n - 1
    for i, c in enumerate(prev):
        out[i + 1] += Fraction(2 * m + 1, m + 1) * c
    for i, c in enumerate(prev2):
        out[i] -= Fraction(m, m + 1) * c
    return tuple(out)


def to_monomial(s: LegendreSeries) -> List[Fraction]:
    """
    Exact ascending monomial coefficients a_0, ..., a_n of the series.

    Used for display and for comparison with printed low-degree forms.
    """
    out = [Fraction(0)] * len(s.coeffs)
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        for i, a in enumerate(_legendre_monomials(k)):
            out[i] += c * a
    while out and out[-1] == 0:
        out.pop()
    return out


def from_monomial(coeffs: Iterable[Scalar]) -> LegendreSeries:
    """Inverse of to_monomial: peel off leading terms against P_k."""
    remaining = [Fraction(c) for c in coeffs]
    out = [Fraction(0)] * len(remaining)
    for k in range(len(remaining) - 1, -1, -1):
        lead = _legendre_monomials(k)[k]
        c = remaining[k] / lead
        out[k] = c
        if c:
            for i, a in enumerate(_legendre_monomials(k)):
                remaining[i] -= c * a
    return LegendreSeries(tuple(out))
