import math

import mpmath
import pytest

from src.utils.derivs import (
    DomainClass,
    EvalPoint,
    d2P_dnu2,
    d2P_dnu2_anydeg,
    d2P_dnu2_recurrence,
    dP_dnu,
    dQ_dnu_offcut,
    dQ_dnu_offcut_split,
    dQ_dnu_oncut,
    recurrence_residual,
)
from src.utils.dpolys import coeff_triple
from src.utils.exceptions import CutAmbiguity, DomainError, SingularPoint
from src.utils.oracle import on_cut_average
from src.utils.specfun import PI, ZETA2

mpmath.mp.dps = 30

LN2 = math.log(2)
OFF_AXIS = [0.3 + 0.8j, 1.4 + 0.5j, -0.2 + 0.7j, -2 + 1j, 0.5 - 2j]
# (1 - z)/2 inside the unit disk, where the mpmath series needs no continuation
HYP_DISK = OFF_AXIS[:3]


def d2p_reference(n: int, z: complex) -> complex:
    t = (1 - mpmath.mpc(z.real, z.imag)) / 2
    return complex(mpmath.diff(lambda nu: mpmath.hyp2f1(-nu, nu + 1, 1, t), n, 2))


class TestEvalPoint:
    @pytest.mark.parametrize(
        "z, expected",
        [
            (1, DomainClass.ENDPOINT_PLUS1),
            (-1, DomainClass.ENDPOINT_MINUS1),
            (0.5, DomainClass.ON_CUT_INTERVAL),
            (-0.999, DomainClass.ON_CUT_INTERVAL),
            (0.5 + 1e-300j, DomainClass.OFF_CUT),
            (3, DomainClass.OFF_CUT),
            (-3, DomainClass.OFF_CUT),
        ],
    )
    def test_classify(self, z, expected):
        assert EvalPoint.classify(z).domain_class is expected

    @pytest.mark.parametrize("x", [1.0, -1.0, 2.0])
    def test_on_cut_rejects_outside(self, x):
        with pytest.raises(DomainError):
            EvalPoint.on_cut(x)

    def test_endpoint_rejects_other_values(self):
        with pytest.raises(DomainError):
            EvalPoint.endpoint(0)


class TestFirstDerivativeP:
    def test_examples(self):
        assert dP_dnu(0, EvalPoint.off_cut(3)).value == pytest.approx(LN2, abs=1e-15)
        assert dP_dnu(1, EvalPoint.on_cut(0.5)).value.real == pytest.approx(-0.6438410362258904, abs=1e-14)

    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    def test_zero_at_plus_one(self, n):
        result = dP_dnu(n, EvalPoint.endpoint(1))
        assert result.value == 0
        assert result.formula == "dP.endpoint_plus1"

    def test_singular_at_minus_one(self):
        with pytest.raises(SingularPoint):
            dP_dnu(2, EvalPoint.endpoint(-1))

    def test_left_cut_rejected(self):
        with pytest.raises(DomainError):
            dP_dnu(1, EvalPoint.off_cut(-2))

    def test_matches_hypergeometric_derivative(self):
        for z in HYP_DISK:
            for n in range(4):
                t = (1 - mpmath.mpc(z.real, z.imag)) / 2
                expected = complex(mpmath.diff(lambda nu: mpmath.hyp2f1(-nu, nu + 1, 1, t), n, 1))
                got = dP_dnu(n, EvalPoint.off_cut(z)).value
                assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected)), (n, z)


class TestSecondDerivativeP:
    def test_examples(self):
        on_cut = d2P_dnu2(0, EvalPoint.on_cut(0.0))
        assert on_cut.value.real == pytest.approx(LN2**2 - PI**2 / 6, abs=1e-14)
        assert on_cut.value.imag == 0
        off_cut = d2P_dnu2(1, EvalPoint.off_cut(3))
        assert off_cut.value.real == pytest.approx(PI**2 / 2 + 8 * LN2 - 4, abs=1e-13)
        assert off_cut.value.imag == 0

    @pytest.mark.parametrize("n", [0, 2, 7])
    def test_zero_at_plus_one(self, n):
        assert d2P_dnu2(n, EvalPoint.endpoint(1)).value == 0

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_limit_at_minus_one(self, n):
        limit = d2P_dnu2(n, EvalPoint.endpoint(-1))
        assert limit.formula == "d2P.endpoint_minus1_limit"
        near = d2P_dnu2(n, EvalPoint.on_cut(-1 + 1e-9)).value
        assert limit.value.real == pytest.approx(near.real, abs=1e-6)

    def test_limit_at_minus_one_degree_one(self):
        assert d2P_dnu2(1, EvalPoint.endpoint(-1)).value.real == pytest.approx(2 * ZETA2 + 4, abs=1e-14)

    def test_matches_hypergeometric_derivative(self):
        for z in HYP_DISK:
            for n in range(4):
                expected = d2p_reference(n, z)
                got = d2P_dnu2(n, EvalPoint.off_cut(z)).value
                assert abs(got - expected) <= 1e-11 * max(1.0, abs(expected)), (n, z)

    def test_conjugation(self):
        for z in OFF_AXIS:
            upper = d2P_dnu2(3, EvalPoint.off_cut(z)).value
            lower = d2P_dnu2(3, EvalPoint.off_cut(z.conjugate())).value
            assert lower == pytest.approx(upper.conjugate(), rel=1e-14, abs=1e-14)

    @pytest.mark.parametrize("nu, n", [(-1, 0), (-3, 2), (-6, 5)])
    def test_negative_degree_reflection(self, nu, n):
        p = EvalPoint.off_cut(0.3 + 0.8j)
        result = d2P_dnu2_anydeg(nu, p)
        assert result.n == nu
        assert result.value == d2P_dnu2(n, p).value

    def test_mismatched_triple(self):
        with pytest.raises(DomainError):
            d2P_dnu2(2, EvalPoint.off_cut(3), coeff_triple(3))

    def test_negative_degree_rejected(self):
        with pytest.raises(DomainError):
            d2P_dnu2(-1, EvalPoint.off_cut(3))


class TestRecurrence:
    @pytest.mark.parametrize("z", [0.3 + 0.8j, 2.5, 1.4 + 0.5j, 0.25])
    def test_residual_small(self, z):
        for n in range(1, 16):
            assert recurrence_residual(n, z) < 1e-11, n

    def test_forward_recurrence_agrees_with_closed_form(self):
        z = 1.4 + 0.5j
        p = EvalPoint.off_cut(z)
        values = d2P_dnu2_recurrence(10, z)
        assert len(values) == 11
        for n, value in enumerate(values):
            expected = d2P_dnu2(n, p).value
            assert abs(value - expected) <= 1e-10 * max(1.0, abs(expected)), n

    def test_residual_needs_positive_degree(self):
        with pytest.raises(DomainError):
            recurrence_residual(0, 2.0)


class TestFirstDerivativeQ:
    def test_examples(self):
        assert dQ_dnu_offcut(0, 3).value.real == pytest.approx(-PI**2 / 12, abs=1e-14)
        assert dQ_dnu_offcut(1, 3).value.real == pytest.approx(-PI**2 / 4 + 2 * LN2 + 1, abs=1e-13)
        assert dQ_dnu_offcut(1, 3).value.imag == 0

    def test_on_cut_examples(self):
        assert dQ_dnu_oncut(0, 0.0).value.real == pytest.approx(-PI**2 / 4, abs=1e-14)
        assert dQ_dnu_oncut(1, 0.0).value.real == pytest.approx(1 - LN2, abs=1e-14)

    @pytest.mark.parametrize("z", [1, -1, 1 + 1e-16j])
    def test_singular_points(self, z):
        with pytest.raises(SingularPoint):
            dQ_dnu_offcut(1, z)

    @pytest.mark.parametrize("z", [0.5, -0.25, 0.5 + 1e-15j])
    def test_cut_needs_on_cut_evaluator(self, z):
        with pytest.raises(CutAmbiguity):
            dQ_dnu_offcut(2, z)

    def test_left_of_minus_one_rejected(self):
        with pytest.raises(DomainError):
            dQ_dnu_offcut(0, -3)

    @pytest.mark.parametrize("z", [-3 + 1.5e-14j, -3 - 2e-14j])
    def test_band_above_left_cut_rejected(self, z):
        with pytest.raises(DomainError):
            dQ_dnu_offcut(1, z)
        with pytest.raises(DomainError):
            d2P_dnu2(1, EvalPoint.off_cut(z))
        with pytest.raises(DomainError):
            dP_dnu(1, EvalPoint.off_cut(z))

    @pytest.mark.parametrize("x", [1.0, -1.5])
    def test_on_cut_range(self, x):
        with pytest.raises(DomainError):
            dQ_dnu_oncut(0, x)

    @pytest.mark.parametrize("n", range(7))
    @pytest.mark.parametrize("x", [-0.9, -0.5, 0.0, 0.5, 0.9])
    def test_on_cut_is_average_of_sides(self, n, x):
        direct = dQ_dnu_oncut(n, x).value
        averaged = on_cut_average(n, x)
        assert abs(direct - averaged) < 1e-6

    def test_conjugation(self):
        for z in OFF_AXIS:
            upper = dQ_dnu_offcut(2, z).value
            lower = dQ_dnu_offcut(2, z.conjugate()).value
            assert lower == pytest.approx(upper.conjugate(), rel=1e-13, abs=1e-13)

    def test_split_form_agrees(self):
        for z in OFF_AXIS + [zz.conjugate() for zz in OFF_AXIS]:
            for n in range(5):
                single = dQ_dnu_offcut(n, z).value
                split = dQ_dnu_offcut_split(n, z)
                assert abs(single - split) <= 1e-12 * max(1.0, abs(single)), (n, z)

    def test_split_form_rejects_real_axis(self):
        with pytest.raises(DomainError):
            dQ_dnu_offcut_split(0, 2.0)
