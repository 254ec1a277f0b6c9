from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.utils.derivs import EvalPoint, d2P_dnu2, dQ_dnu_offcut
from src.utils.exceptions import DomainError, NearIntegerDegree
from src.utils.oracle import (
    FDConfig,
    brute_c_coeff,
    brute_c_coeffs,
    brute_S1,
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
    p_nu_hyp,
    q_nu,
    transcendental_S2_float,
    transcendental_S3_float,
    transcendental_S4_float,
)

F = Fraction
# Points where both (1 - z)/2 and (1 + z)/2 lie inside the unit disk
GRID = [0.3 + 0.8j, 0.1 + 0.9j, -0.2 + 0.7j, 0.2 - 0.5j, 0.6 + 0.1j, -0.6 - 0.3j]


class TestHypergeometric:
    def test_value_at_one(self):
        assert p_nu_hyp(0.5, 1) == 1

    def test_polynomial_degree(self):
        assert p_nu_hyp(2, 2) == pytest.approx(5.5, abs=1e-14)
        assert p_nu_hyp(3, 0.5 + 0.5j) == pytest.approx(
            (5 * (0.5 + 0.5j) ** 3 - 3 * (0.5 + 0.5j)) / 2, abs=1e-14
        )

    @pytest.mark.parametrize("nu", [0.25, 1.7, 3.5])
    def test_degree_reflection(self, nu):
        z = 0.4 + 0.3j
        assert p_nu_hyp(nu, z) == pytest.approx(p_nu_hyp(-nu - 1, z), rel=1e-14)

    def test_outside_disk(self):
        with pytest.raises(DomainError):
            p_nu_hyp(0.5, 3)

    def test_q_conjugation(self):
        z = 0.3 + 0.6j
        assert q_nu(0.4, z.conjugate()) == pytest.approx(q_nu(0.4, z).conjugate(), rel=1e-12)

    def test_q_near_integer(self):
        with pytest.raises(NearIntegerDegree):
            q_nu(2 + 1e-8, 0.3 + 0.6j)

    def test_q_on_real_axis(self):
        with pytest.raises(DomainError):
            q_nu(0.5, 0.3)


class TestFiniteDifferences:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 5])
    def test_fd2_matches_closed_form(self, n):
        cfg = FDConfig()
        for z in GRID:
            exact = d2P_dnu2(n, EvalPoint.off_cut(z)).value
            approx = fd2_nu(n, z, cfg)
            assert abs(approx - exact) <= cfg.tolerance * max(1.0, abs(exact)), z

    def test_fd2_at_plus_one(self):
        assert fd2_nu(4, 1) == 0

    @pytest.mark.parametrize("n", [0, 1, 2, 4])
    def test_fd1_q_matches_closed_form(self, n):
        cfg = FDConfig()
        for z in GRID:
            exact = dQ_dnu_offcut(n, z).value
            approx = fd1_q(n, z, cfg)
            assert abs(approx - exact) <= cfg.tolerance * max(1.0, abs(exact)), z

    def test_more_levels_reduce_error(self):
        coarse = FDConfig(h=1e-2, richardson_levels=1)
        fine = FDConfig(h=1e-2, richardson_levels=3)
        z = 0.3 + 0.8j
        exact = d2P_dnu2(3, EvalPoint.off_cut(z)).value
        assert abs(fd2_nu(3, z, fine) - exact) < abs(fd2_nu(3, z, coarse) - exact)

    @pytest.mark.parametrize(
        "kwargs",
        [{"h": 1.0}, {"h": 1e-7}, {"richardson_levels": 0}, {"richardson_levels": 5}, {"tolerance": 0}],
    )
    def test_config_validation(self, kwargs):
        with pytest.raises(ValidationError):
            FDConfig(**kwargs)


class TestOnCutAverage:
    def test_rejects_endpoints(self):
        with pytest.raises(DomainError):
            on_cut_average(0, 1.0)

    def test_real_result(self):
        value = on_cut_average(2, 0.3)
        assert abs(value.imag) < 1e-6


class TestFiniteSums:
    @pytest.mark.parametrize("n, m, expected", [(1, 0, F(-1, 2)), (2, 0, F(-7, 12)), (2, 1, F(-3, 4))])
    def test_s1_examples(self, n, m, expected):
        assert brute_S1(n, m) == expected
        assert closed_S1(n, m) == expected

    def test_degree_one_values(self):
        assert closed_S2(1) == F(1, 4)
        assert closed_S3(1) == F(1, 4)
        assert closed_S4(1) == F(-3, 4)

    def test_s1_closed_form(self):
        for n in range(1, 41):
            for m in range(n):
                assert brute_S1(n, m) == closed_S1(n, m), (n, m)

    @pytest.mark.parametrize("n", [1, 2, 7, 30])
    def test_single_pass_matches_per_limit(self, n):
        assert brute_S1_all(n) == [brute_S1(n, m) for m in range(n)]
        assert brute_c_coeffs(n) == [brute_c_coeff(n, k) for k in range(n)]

    @pytest.mark.parametrize("n", list(range(1, 25)) + [50, 80])
    def test_closed_forms(self, n):
        assert brute_S2(n) == closed_S2(n)
        assert brute_S3(n) == closed_S3(n)
        assert brute_S4(n) == closed_S4(n)

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 40, 200])
    def test_transcendental_forms(self, n):
        assert transcendental_S2_float(n) == pytest.approx(float(closed_S2(n)), rel=1e-11, abs=1e-12)
        assert transcendental_S3_float(n) == pytest.approx(float(closed_S3(n)), rel=1e-11, abs=1e-12)
        assert transcendental_S4_float(n) == pytest.approx(float(closed_S4(n)), rel=1e-11, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 3, 8, 21])
    def test_double_sum_decomposes(self, n):
        s1 = closed_S1(n, 0)
        assert closed_S2(n) == s1 * s1 / 2 + closed_S3(n) / 2

    @pytest.mark.parametrize("n, m", [(0, 0), (3, 3), (3, -1)])
    def test_lower_limit_range(self, n, m):
        with pytest.raises(DomainError):
            closed_S1(n, m)
        with pytest.raises(DomainError):
            brute_S1(n, m)

    def test_sum_degree_range(self):
        for fn in (brute_S1_all, brute_c_coeffs, brute_S2, brute_S3, brute_S4, closed_S2, closed_S3, closed_S4):
            with pytest.raises(DomainError):
                fn(0)


class TestNestedSumIdentity:
    @pytest.mark.parametrize("values", [[1], [1, 2, 3], [F(1, 2), F(-3, 7), 5, 0]])
    def test_examples(self, values):
        assert nested_sum_identity_check(values)

    def test_random_rationals(self, rng):
        for _ in range(20):
            size = int(rng.integers(1, 30))
            nums = rng.integers(-50, 50, size=size)
            dens = rng.integers(1, 30, size=size)
            assert nested_sum_identity_check([F(int(a), int(b)) for a, b in zip(nums, dens)])

    def test_empty(self):
        with pytest.raises(DomainError):
            nested_sum_identity_check([])
