"""
Exact rational arithmetic and harmonic numbers.

Every digamma or trigamma value entering a coefficient formula is a difference
at integer arguments, so it reduces to harmonic numbers:

    psi(m + 1)  = -gamma + H_m
    psi1(m + 1) = pi^2 / 6 - H2_m

and the transcendental constants cancel. Nothing here touches floating point.
"""

from fractions import Fraction
from typing import List
import threading

from .exceptions import DomainError

Rational = Fraction


class HarmonicCache:
    """
    Growable tables of H_N and H2_N as exact fractions.

    Tables only ever grow. Writers are serialized by a lock; a reader that
    finds the table long enough indexes it without locking, which is safe
    because entries are appended only after they are complete.
    """

    def __init__(self):
        """Initialize both tables with the empty-sum entry."""
        self.h1: List[Fraction] = [Fraction(0)]
        self.h2: List[Fraction] = [Fraction(0)]
        self._lock = threading.Lock()

    def ensure(self, N: int) -> None:
        """
        Extend both tables so that index N is available.

        Args:
            N: Largest index required
        """
        if N < len(self.h1):
            return
        with self._lock:
            start = len(self.h1)
            h1_last, h2_last = self.h1[-1], self.h2[-1]
            for k in range(start, N + 1):
                h1_last = h1_last + Fraction(1, k)
                h2_last = h2_last + Fraction(1, k * k)
                # h2 first: readers test the length of h1
                self.h2.append(h2_last)
                self.h1.append(h1_last)

    def h(self, N: int) -> Fraction:
        self.ensure(N)
        return self.h1[N]

    def h_2(self, N: int) -> Fraction:
        self.ensure(N)
        return self.h2[N]

    def __len__(self) -> int:
        return len(self.h1)


_cache = HarmonicCache()


def get_harmonic_cache() -> HarmonicCache:
    """Process-wide harmonic table shared by all generators."""
    return _cache


def _check_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")


def harmonic(N: int) -> Fraction:
    """
    H_N = sum_{k=1}^{N} 1/k, with H_0 = 0.

    Args:
        N: Nonnegative index

    Returns:
        Fraction: Exact harmonic number
    """
    _check_nonnegative("N", N)
    return _cache.h(N)


def harmonic2(N: int) -> Fraction:
    """H2_N = sum_{k=1}^{N} 1/k^2, with H2_0 = 0."""
    _check_nonnegative("N", N)
    return _cache.h_2(N)


def psi_diff(a: int, b: int) -> Fraction:
    """
    Exact psi(a) - psi(b) for positive integers a, b.

    Args:
        a: First argument (>= 1)
        b: Second argument (>= 1)

    Returns:
        Fraction: H_{a-1} - H_{b-1}
    """
    if a < 1 or b < 1:
        raise DomainError(f"psi_diff needs positive integers, got ({a}, {b})")
    return harmonic(a - 1) - harmonic(b - 1)


def alt_harmonic(N: int) -> Fraction:
    """sum_{k=1}^{N} (-1)^k / k, in the form -H_N + H_{floor(N/2)}."""
    _check_nonnegative("N", N)
    return -harmonic(N) + harmonic(N // 2)


def alt_harmonic_direct(N: int) -> Fraction:
    """Alternating harmonic sum by term-by-term summation."""
    _check_nonnegative("N", N)
    total = Fraction(0)
    for k in range(1, N + 1):
        total += Fraction(-1 if k % 2 else 1, k)
    return total


def sign(n: int) -> int:
    """(-1)^n for any integer n."""
    return -1 if n % 2 else 1
