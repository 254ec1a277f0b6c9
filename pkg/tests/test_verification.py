import pytest
from pydantic import ValidationError

from src.utils.exceptions import DomainError
from src.utils.reference import (
    D2P_PRINTED,
    DQ_PRINTED,
    REFERENCE_MAX_DEGREE,
    eval_d2p_printed,
    eval_dq_printed,
    form_mismatches,
    generated_d2p_form,
    generated_dq_form,
)
from src.utils.verification import (
    SUITE_NAMES,
    VerificationCase,
    VerificationReport,
    run_suite,
)
from src.utils.derivs import EvalPoint, d2P_dnu2, dQ_dnu_offcut


@pytest.mark.parametrize("n", range(REFERENCE_MAX_DEGREE + 1))
def test_printed_forms_match_generated(n):
    assert form_mismatches(D2P_PRINTED[n], generated_d2p_form(n)) == []
    assert form_mismatches(DQ_PRINTED[n], generated_dq_form(n)) == []


def test_printed_evaluation_at_three():
    z = 3 + 0j
    assert eval_d2p_printed(1, z) == pytest.approx(d2P_dnu2(1, EvalPoint.off_cut(z)).value, abs=1e-13)
    assert eval_dq_printed(1, z) == pytest.approx(dQ_dnu_offcut(1, z).value, abs=1e-13)


def _sample_printed_points(rng, count):
    points = []
    while len(points) < count:
        re, im = rng.uniform(-3.0, 3.0, size=2)
        z = complex(re, im)
        if (re > 1 or abs(im) > 0.1) and abs(z - 1) > 0.05:
            points.append(z)
    return points


@pytest.mark.parametrize("n", range(REFERENCE_MAX_DEGREE + 1))
def test_printed_evaluation_at_random_points(rng, n):
    for z in _sample_printed_points(rng, 100):
        closed = d2P_dnu2(n, EvalPoint.off_cut(z)).value
        assert abs(eval_d2p_printed(n, z) - closed) <= 1e-12 * max(1.0, abs(closed)), z
        closed = dQ_dnu_offcut(n, z).value
        assert abs(eval_dq_printed(n, z) - closed) <= 1e-12 * max(1.0, abs(closed)), z


def test_sums_suite_at_high_degree():
    report = run_suite("sums", 200)
    assert report.ok, [case for case in report.cases if case.status == "fail"]
    assert {case.n for case in report.cases} == set(range(1, 201))


@pytest.mark.parametrize(
    "suite, n_max",
    [("lown", 3), ("sums", 12), ("ode", 12), ("recurrence", 8), ("oracle", 6), ("dilog", 0), ("oncut", 6)],
)
def test_suite_passes(suite, n_max):
    report = run_suite(suite, n_max)
    failed = [case for case in report.cases if case.status == "fail"]
    assert report.ok, failed
    assert report.summary["total"] == len(report.cases) > 0


def test_all_runs_every_suite():
    report = run_suite("all", 2)
    prefixes = {case.identity.split(".")[0] for case in report.cases}
    assert prefixes == set(SUITE_NAMES) - {"all"}
    assert report.ok


def test_case_order_is_deterministic():
    first = run_suite("sums", 6)
    second = run_suite("sums", 6)
    assert [c.model_dump() for c in first.cases] == [c.model_dump() for c in second.cases]
    assert [c.n for c in first.cases] == sorted(c.n for c in first.cases)


def test_seed_changes_points_not_outcome():
    assert run_suite("recurrence", 4, seed=1).ok
    assert run_suite("recurrence", 4, seed=2).ok


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite("everything", 3)


def test_negative_n_max():
    with pytest.raises(DomainError):
        run_suite("sums", -1)


def test_impossible_tolerance_fails_oracle():
    report = run_suite("oracle", 2, tol=1e-300)
    assert not report.ok


def test_report_summary_must_match_cases():
    case = VerificationCase(identity="sums.S3", n=1, status="fail", residual="exact")
    with pytest.raises(ValidationError):
        VerificationReport(suite="sums", cases=[case], summary={"total": 1, "passed": 1, "failed": 0})
    report = VerificationReport.from_cases("sums", [case])
    assert report.summary == {"total": 1, "passed": 0, "failed": 1}
    assert not report.ok
