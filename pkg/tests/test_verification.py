"""
Tests pour le registre des méthodes et les suites de vérification
"""

from fractions import Fraction

import pytest

from src.arith.exactnum import cyc_from_rational
from src.bernoulli import genbernoulli as gb
from src.bernoulli.verification import (
    NUMBER_METHODS,
    SUITES,
    MethodDisagreementError,
    compute_numbers,
    compute_polynomials,
    run_suite,
)
from src.characters.dirichlet import get_character


pytestmark = pytest.mark.unit


class TestComputeNumbers:

    def test_all_methods_agree(self):
        values = compute_numbers(1, get_character(4, 1), 0, 4, "all")
        assert values == [0, Fraction(-1, 2), 0, Fraction(3, 2), 0]

    @pytest.mark.parametrize("method", NUMBER_METHODS)
    def test_each_method_on_a_range(self, method):
        chi = get_character(3, 1)
        assert compute_numbers(1, chi, 1, 1, method) == [Fraction(-1, 3)]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            compute_numbers(1, get_character(1, 0), 0, 2, "guess")

    def test_invalid_range(self):
        with pytest.raises(ValueError):
            compute_numbers(1, get_character(1, 0), 3, 2, "cor10")

    def test_disagreement_detected(self, mocker):
        chi = get_character(4, 1)
        wrong = [cyc_from_rational(7, chi.order)] * 4
        mocker.patch("src.bernoulli.verification.oracle_numbers", return_value=wrong)
        with pytest.raises(MethodDisagreementError) as excinfo:
            compute_numbers(1, chi, 0, 3, "all")
        assert "oracle" in excinfo.value.values


class TestComputePolynomials:

    def test_symbolic_agreement(self):
        chi = get_character(5, 1)
        polys = compute_polynomials(2, chi, 0, 4, "all")
        assert polys == [gb.gbp_from_numbers(2, n, chi) for n in range(5)]

    def test_point_methods_need_x0(self):
        with pytest.raises(ValueError):
            compute_polynomials(1, get_character(1, 0), 0, 2, "oracle")

    def test_point_evaluation(self):
        chi = get_character(1, 0)
        values = compute_polynomials(1, chi, 0, 2, "all", Fraction(1))
        # B_n(1) pour χ trivial, N = 1 : 1, 3/2, 13/6
        assert values == [1, Fraction(3, 2), Fraction(13, 6)]
        assert compute_polynomials(1, chi, 2, 2, "stirling", Fraction(1)) == [Fraction(13, 6)]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            compute_polynomials(1, get_character(1, 0), 0, 2, "guess")


class TestRunSuite:

    def test_every_suite_passes_on_small_grid(self):
        reports = run_suite("all", 2, 4, 5)
        assert [r.name for r in reports] == sorted(SUITES)
        for report in reports:
            assert report.ok, report.failures
            assert report.passed > 0

    def test_workers_do_not_change_the_report(self):
        serial = run_suite("brec", 2, 5, 6, workers=1)
        parallel = run_suite("brec", 2, 5, 6, workers=4)
        assert [(r.name, r.passed, r.failed) for r in serial] == [(r.name, r.passed, r.failed) for r in parallel]

    def test_explicit_moduli(self):
        (report,) = run_suite("five-way", 1, 3, 12, moduli=[1, 12])
        assert report.passed == 1 + 4

    def test_failures_are_collected(self, mocker):
        mocker.patch.object(gb, "brec_check", return_value="bogus")
        (report,) = run_suite("brec", 1, 3, 3)
        assert not report.ok
        assert report.failed == 1 + 1 + 2
        assert report.failures == sorted(report.failures, key=lambda r: r.label)

    def test_unexpected_errors_become_failures(self, mocker):
        check = mocker.patch.object(gb, "agoh_check", side_effect=RuntimeError("boom"))
        (report,) = run_suite("brec", 1, 2, 1)
        check.assert_called_once()
        assert report.failed == 1
        assert "boom" in report.failures[0].detail

    def test_invalid_requests(self):
        with pytest.raises(ValueError):
            run_suite("nonsense", 1, 2, 3)
        with pytest.raises(ValueError):
            run_suite("brec", 0, 2, 3)
