"""
Tests pour l'arithmétique exacte et les corps cyclotomiques
"""

import random
from fractions import Fraction

import pytest

from src.arith.exactnum import (
    CyclotomicNumber,
    CyclotomicOrderError,
    common_order,
    cyc_div_rational,
    cyc_embed,
    cyc_from_json,
    cyc_from_rational,
    cyc_to_canonical_str,
    cyc_to_complex,
    cyc_to_json,
    cyclotomic_polynomial,
    euler_phi,
    parse_rational,
    rational_to_str,
    zeta_power,
)


pytestmark = pytest.mark.unit


def _random_element(rng: random.Random, m: int) -> CyclotomicNumber:
    return CyclotomicNumber(m, tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(euler_phi(m))))


class TestCyclotomicPolynomials:

    @pytest.mark.parametrize("m, expected", [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ])
    def test_known_polynomials(self, m, expected):
        assert cyclotomic_polynomial(m) == expected

    def test_euler_phi(self):
        assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            euler_phi(0)


class TestCyclotomicNumber:

    def test_canonical_length_enforced(self):
        with pytest.raises(ValueError):
            CyclotomicNumber(4, (Fraction(1),))

    def test_zeta_powers_reduce(self):
        assert zeta_power(4, 2) == -1
        assert zeta_power(3, 2).coeffs == (Fraction(-1), Fraction(-1))
        assert zeta_power(4, 4) == 1
        assert zeta_power(1, 0).coeffs == (Fraction(1),)

    def test_product_of_roots(self):
        z = zeta_power(3, 1)
        assert z * z == zeta_power(3, 2)
        assert z ** 3 == 1

    def test_roots_of_unity_sum_to_zero(self):
        total = CyclotomicNumber.zero(12)
        for k in range(12):
            total = total + zeta_power(12, k)
        assert total.is_zero()

    def test_ring_identity(self):
        rng = random.Random(1234)
        for m in range(1, 25):
            a, b, c = (_random_element(rng, m) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert (a + b) + c == a + (b + c)
            assert (a - b) + b == a
            assert a * b == b * a
            assert a * CyclotomicNumber.one(m) == a
            assert (a + CyclotomicNumber.zero(m)) == a

    def test_cyclotomic_polynomial_vanishes_at_root(self):
        for m in range(1, 25):
            total = CyclotomicNumber.zero(m)
            for j, c in enumerate(cyclotomic_polynomial(m)):
                total = total + zeta_power(m, j) * c
            assert total.is_zero(), m

    def test_rational_coercion(self):
        z = zeta_power(5, 1)
        assert z + 1 == 1 + z
        assert (z * Fraction(1, 2)) * 2 == z
        assert 3 - z == -(z - 3)
        assert CyclotomicNumber.one(5) == 1

    def test_mixed_orders_rejected(self):
        with pytest.raises(CyclotomicOrderError):
            zeta_power(3, 1) + zeta_power(4, 1)

    def test_embedding(self):
        assert cyc_embed(zeta_power(2, 1), 4) == -1
        # ζ_3 = ζ_6^2 = ζ_6 − 1
        assert cyc_embed(zeta_power(3, 1), 6).coeffs == (Fraction(-1), Fraction(1))
        with pytest.raises(CyclotomicOrderError):
            cyc_embed(zeta_power(4, 1), 6)

    def test_embedding_is_a_ring_homomorphism(self):
        rng = random.Random(99)
        for m, target in ((2, 4), (3, 6), (3, 12), (4, 8), (4, 12), (5, 20), (6, 24)):
            for _ in range(5):
                a, b = _random_element(rng, m), _random_element(rng, m)
                assert cyc_embed(a * b, target) == cyc_embed(a, target) * cyc_embed(b, target)
                assert cyc_embed(a + b, target) == cyc_embed(a, target) + cyc_embed(b, target)
            assert cyc_embed(zeta_power(m, 1), target) == zeta_power(target, target // m)

    def test_common_order(self):
        assert common_order(4, 6) == 12
        assert common_order() == 1

    def test_rational_detection(self):
        assert cyc_from_rational(Fraction(2, 3), 5).to_rational() == Fraction(2, 3)
        with pytest.raises(ValueError):
            zeta_power(5, 1).to_rational()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            cyc_div_rational(zeta_power(3, 1), Fraction(0))


class TestSerialization:

    def test_rational_strings(self):
        assert rational_to_str(Fraction(-3, 6)) == "-1/2"
        assert rational_to_str(4) == "4"
        assert parse_rational(" 3/4 ") == Fraction(3, 4)

    @pytest.mark.parametrize("text", ["abc", "1/0", ""])
    def test_invalid_rationals(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_json_round_trip(self):
        value = _random_element(random.Random(7), 7)
        data = cyc_to_json(value)
        assert data["order"] == 7
        assert len(data["coeffs"]) == 6
        assert cyc_from_json(data) == value

    def test_canonical_string(self):
        assert cyc_to_canonical_str(zeta_power(3, 2)) == "-1 + -1*z; order=3"
        assert cyc_to_canonical_str(CyclotomicNumber.zero(3)) == "0; order=3"
        assert cyc_to_canonical_str(zeta_power(5, 2)) == "1*z^2; order=5"

    def test_complex_approximation(self):
        assert abs(cyc_to_complex(zeta_power(4, 1)) - 1j) < 1e-12
        assert abs(cyc_to_complex(zeta_power(3, 1) + zeta_power(3, 2)) + 1) < 1e-12


class TestRationalArithmetic:

    def test_against_cross_multiplication(self):
        rng = random.Random(2024)
        for _ in range(1000):
            a, b = rng.randint(-50, 50), rng.randint(1, 40)
            c, d = rng.randint(-50, 50), rng.randint(1, 40)
            x, y = cyc_from_rational(Fraction(a, b), 1), cyc_from_rational(Fraction(c, d), 1)

            total = (x + y).to_rational()
            assert total.numerator * b * d == total.denominator * (a * d + c * b)
            product = (x * y).to_rational()
            assert product.numerator * b * d == product.denominator * a * c
            difference = (x - y).to_rational()
            assert difference.numerator * b * d == difference.denominator * (a * d - c * b)
            assert parse_rational(rational_to_str(total)) == total
