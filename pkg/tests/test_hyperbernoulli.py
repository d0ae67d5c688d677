"""
Tests pour les nombres de Bernoulli hypergéométriques B_{N,n}
"""

import random
from fractions import Fraction

import pytest

from src.arith.polynomial import GHBPolynomial
from src.arith.powerseries import oracle_hb_numbers, oracle_hb_poly_eval
from src.bernoulli.genbernoulli import hessenberg_matrix, laplace_determinant
from src.bernoulli.hyperbernoulli import (
    appendix_hb_number,
    falling_factorial,
    hb_determinant,
    hb_number,
    hb_number_tsum,
    hb_number_ttilde,
    hb_polynomial,
    hb_polynomial_value,
    hb_table,
    hessenberg_determinant,
    stirling2,
    stirling2_row,
)


pytestmark = pytest.mark.unit


class TestHBNumbers:

    def test_classical_case(self):
        assert list(hb_table(1, 4).values) == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]

    @pytest.mark.parametrize("N, n, expected", [
        (1, 2, Fraction(1, 6)),
        (2, 3, Fraction(1, 90)),
        (1, 4, Fraction(-1, 30)),
    ])
    def test_fixtures(self, N, n, expected):
        assert hb_number(N, n) == expected

    def test_closed_forms(self):
        for N in range(1, 7):
            for n in range(5):
                assert hb_number(N, n) == appendix_hb_number(N, n)

    def test_against_generating_function(self):
        for N in range(1, 5):
            assert list(hb_table(N, 10).values) == oracle_hb_numbers(N, 10)

    def test_alternative_routes(self):
        for N in range(1, 4):
            for n in range(9):
                expected = hb_number(N, n)
                assert hb_number_tsum(N, n) == expected
                assert hb_number_ttilde(N, n) == expected
                assert hb_determinant(N, n) == expected

    def test_no_closed_form_past_four(self):
        with pytest.raises(ValueError):
            appendix_hb_number(1, 5)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            hb_table(0, 3)
        with pytest.raises(ValueError):
            hb_number(1, -1)


class TestHBPolynomials:

    def test_second_polynomial(self):
        assert hb_polynomial(1, 2) == GHBPolynomial.from_rationals([Fraction(1, 6), -1, 1])

    def test_point_values(self):
        assert hb_polynomial_value(1, 2, 1) == Fraction(1, 6)
        for N in (1, 2, 3):
            for x0 in (Fraction(0), Fraction(1, 2), Fraction(-2)):
                expected = oracle_hb_poly_eval(N, x0, 6)
                for n in range(7):
                    assert hb_polynomial_value(N, n, x0) == expected[n]
                    assert hb_polynomial(N, n).evaluate(x0) == expected[n]


class TestCombinatorics:

    def test_stirling_numbers(self):
        assert stirling2(5, 2) == 15
        assert stirling2(0, 0) == 1
        assert stirling2(3, 0) == 0
        assert stirling2_row(4) == (0, 1, 7, 6, 1)

    def test_rows_match_recursion(self):
        for n in range(10):
            assert stirling2_row(n) == tuple(stirling2(n, k) for k in range(n + 1))

    def test_falling_factorial(self):
        assert falling_factorial(Fraction(1, 2), 3) == Fraction(3, 8)
        assert falling_factorial(5, 0) == 1
        assert falling_factorial(3, 4) == 0
        with pytest.raises(ValueError):
            falling_factorial(2, -1)


class TestHessenbergDeterminant:

    def test_cofactor_recurrence_matches_laplace(self):
        rng = random.Random(42)
        for n in range(1, 6):
            alphas = [None] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            last_row = [None] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            matrix = hessenberg_matrix(alphas, last_row)
            assert hessenberg_determinant(alphas, last_row) == laplace_determinant(matrix)

    def test_two_by_two(self):
        alphas = [None, Fraction(2)]
        last_row = [None, Fraction(3), Fraction(5)]
        assert hessenberg_matrix(alphas, last_row) == [[2, 1], [5, 3]]
        assert hessenberg_determinant(alphas, last_row) == 2 * 3 - 5

    def test_empty_matrix(self):
        with pytest.raises(ValueError):
            hessenberg_determinant([None], [None])
