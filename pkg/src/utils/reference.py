"""
Printed closed forms of the derivatives for degrees 0 to 3, transcribed as
ascending monomial coefficients, and the generated counterparts to compare
them with.

Second derivative of P:  Li2((1-z)/2), ln((z+1)/2) and polynomial parts.
First derivative of Q:   Li2((1-z)/2), ln((z+1)/2) ln((z-1)/2), ln((z+1)/2),
                         ln((z-1)/2), rational polynomial and pi^2 polynomial.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .dpolys import a_poly, b_poly, c_poly, q_poly_parts
from .exact_arith import sign
from .legendre_basis import parity_flip, to_monomial, unit
from .specfun import PI_SQUARED, dilog, log_shift_minus, log_shift_plus

Monomials = Tuple[Fraction, ...]

REFERENCE_MAX_DEGREE = 3


def _poly(*coeffs: str) -> Monomials:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class D2PForm:
    dilog: Monomials
    log_plus: Monomials
    poly: Monomials


@dataclass(frozen=True)
class DQForm:
    dilog: Monomials
    log_product: Monomials
    log_plus: Monomials
    log_minus: Monomials
    rational: Monomials
    pi_squared: Monomials


D2P_PRINTED: Dict[int, D2PForm] = {
    0: D2PForm(dilog=_poly("-2"), log_plus=_poly(), poly=_poly()),
    1: D2PForm(dilog=_poly("0", "-2"), log_plus=_poly("2", "2"), poly=_poly("2", "-2")),
    2: D2PForm(
        dilog=_poly("1", "0", "-3"),
        log_plus=_poly("-1/2", "3", "7/2"),
        poly=_poly("1/4", "5/2", "-11/4"),
    ),
    3: D2PForm(
        dilog=_poly("0", "3", "0", "-5"),
        log_plus=_poly("-4/3", "-5/2", "5", "37/6"),
        poly=_poly("-10/9", "19/12", "23/6", "-155/36"),
    ),
}

DQ_PRINTED: Dict[int, DQForm] = {
    0: DQForm(
        dilog=_poly("-1"),
        log_product=_poly("-1/2"),
        log_plus=_poly(),
        log_minus=_poly(),
        rational=_poly(),
        pi_squared=_poly("-1/6"),
    ),
    1: DQForm(
        dilog=_poly("0", "-1"),
        log_product=_poly("0", "-1/2"),
        log_plus=_poly("1/2", "1/2"),
        log_minus=_poly("1/2", "-1/2"),
        rational=_poly("1"),
        pi_squared=_poly("0", "-1/6"),
    ),
    2: DQForm(
        dilog=_poly("1/2", "0", "-3/2"),
        log_product=_poly("1/4", "0", "-3/4"),
        log_plus=_poly("-1/8", "3/4", "7/8"),
        log_minus=_poly("1/8", "3/4", "-7/8"),
        rational=_poly("0", "5/4"),
        pi_squared=_poly("1/12", "0", "-1/4"),
    ),
    3: DQForm(
        dilog=_poly("0", "3/2", "0", "-5/2"),
        log_product=_poly("0", "3/4", "0", "-5/4"),
        log_plus=_poly("-1/3", "-5/8", "5/4", "37/24"),
        log_minus=_poly("-1/3", "5/8", "5/4", "-37/24"),
        rational=_poly("-5/9", "0", "23/12"),
        pi_squared=_poly("0", "1/4", "0", "-5/12"),
    ),
}


def generated_d2p_form(n: int) -> D2PForm:
    """The second-derivative form assembled from the generated polynomials."""
    return D2PForm(
        dilog=tuple(to_monomial(a_poly(n))),
        log_plus=tuple(to_monomial(b_poly(n))),
        poly=tuple(to_monomial(c_poly(n))),
    )


def generated_dq_form(n: int) -> DQForm:
    """The Q-derivative form assembled from the generated polynomials."""
    b = b_poly(n)
    rational, pi_squared = q_poly_parts(n)
    return DQForm(
        dilog=tuple(to_monomial(unit(n).scale(-1))),
        log_product=tuple(to_monomial(unit(n).scale(Fraction(-1, 2)))),
        log_plus=tuple(to_monomial(b.scale(Fraction(1, 4)))),
        log_minus=tuple(to_monomial(parity_flip(b).scale(Fraction(-sign(n), 4)))),
        rational=tuple(to_monomial(rational)),
        pi_squared=tuple(to_monomial(pi_squared)),
    )


def form_mismatches(printed, generated) -> List[str]:
    """Names of the parts where two forms differ."""
    return [name for name in printed.__dataclass_fields__ if getattr(printed, name) != getattr(generated, name)]


def _horner(coeffs: Monomials, z: complex) -> complex:
    total = 0j
    for c in reversed(coeffs):
        total = total * z + float(c)
    return total


def eval_d2p_printed(n: int, z: complex) -> complex:
    form = D2P_PRINTED[n]
    z = complex(z)
    return (
        _horner(form.dilog, z) * dilog((1 - z) / 2)
        + _horner(form.log_plus, z) * log_shift_plus(z)
        + _horner(form.poly, z)
    )


def eval_dq_printed(n: int, z: complex) -> complex:
    """Evaluate the printed Q-derivative form at z off (-inf, 1]."""
    form = DQ_PRINTED[n]
    z = complex(z)
    lp = log_shift_plus(z)
    lm = log_shift_minus(z)
    return (
        _horner(form.dilog, z) * dilog((1 - z) / 2)
        + _horner(form.log_product, z) * lp * lm
        + _horner(form.log_plus, z) * lp
        + _horner(form.log_minus, z) * lm
        + _horner(form.rational, z)
        + PI_SQUARED * _horner(form.pi_squared, z)
    )
