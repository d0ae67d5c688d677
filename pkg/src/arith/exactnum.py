"""
🔢 Module d'arithmétique exacte : rationnels et corps cyclotomiques Q(ζ_m)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]


class CyclotomicOrderError(ValueError):
    """Ordres cyclotomiques incompatibles"""


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Indicatrice d'Euler φ(m)"""
    if m < 1:
        raise ValueError(f"Ordre invalide: {m}")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divexact(num: List[int], den: Sequence[int]) -> List[int]:
    # den est unitaire
    num = list(num)
    deg_den = len(den) - 1
    quotient = [0] * (len(num) - deg_den)
    for i in range(len(num) - 1, deg_den - 1, -1):
        c = num[i]
        if c:
            quotient[i - deg_den] = c
            for j, d in enumerate(den):
                num[i - deg_den + j] -= c * d
    if any(num[:deg_den]):
        raise ArithmeticError("Division polynomiale non exacte")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """
    Coefficients entiers de Φ_m, du degré 0 au degré φ(m).

    Obtenu par division exacte de x^m − 1 par Φ_d pour tous les
    diviseurs stricts d de m.
    """
    if m < 1:
        raise ValueError(f"Ordre invalide: {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(coeffs: List[Fraction], m: int) -> Tuple[Fraction, ...]:
    phi_m = cyclotomic_polynomial(m)
    size = len(phi_m) - 1
    coeffs = list(coeffs) + [Fraction(0)] * max(0, size - len(coeffs))
    for i in range(len(coeffs) - 1, size - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(size):
                if phi_m[j]:
                    coeffs[i - size + j] -= c * phi_m[j]
    return tuple(Fraction(c) for c in coeffs[:size])


@dataclass(frozen=True)
class CyclotomicNumber:
    """Élément de Q(ζ_m) sous forme canonique (φ(m) coefficients)"""

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.order):
            raise ValueError(
                f"Forme non canonique: {len(self.coeffs)} coefficients pour l'ordre {self.order}"
            )

    @classmethod
    def from_power_coeffs(cls, coeffs: Iterable[Scalar], order: int) -> "CyclotomicNumber":
        """Construit Σ c_j ζ_m^j puis réduit modulo Φ_m"""
        return cls(order, _reduce([Fraction(c) for c in coeffs], order))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls(order, (Fraction(0),) * euler_phi(order))

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cyc_from_rational(Fraction(1), order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"Élément non rationnel: {cyc_to_canonical_str(self)}")
        return self.coeffs[0]

    def _coerce(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return cyc_from_rational(Fraction(other), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_sub(other, self)

    def __neg__(self):
        return cyc_neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return cyc_scale(self, Fraction(other))
        if isinstance(other, CyclotomicNumber):
            return cyc_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return cyc_div_rational(self, Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Puissance négative non supportée")
        result = CyclotomicNumber.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CyclotomicNumber({cyc_to_canonical_str(self)})"


def _check_orders(a: CyclotomicNumber, b: CyclotomicNumber) -> None:
    if a.order != b.order:
        raise CyclotomicOrderError(
            f"Ordres différents: {a.order} et {b.order} (plonger d'abord dans le ppcm)"
        )


def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    _check_orders(a, b)
    return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_sub(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    _check_orders(a, b)
    return CyclotomicNumber(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_neg(a: CyclotomicNumber) -> CyclotomicNumber:
    return CyclotomicNumber(a.order, tuple(-x for x in a.coeffs))


def cyc_scale(a: CyclotomicNumber, q: Fraction) -> CyclotomicNumber:
    return CyclotomicNumber(a.order, tuple(x * q for x in a.coeffs))


def cyc_div_rational(a: CyclotomicNumber, q: Fraction) -> CyclotomicNumber:
    if q == 0:
        raise ZeroDivisionError("Division d'un élément cyclotomique par zéro")
    return cyc_scale(a, 1 / Fraction(q))


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    """Produit exact réduit modulo Φ_m"""
    _check_orders(a, b)
    if a.order <= 2:
        return CyclotomicNumber(a.order, (a.coeffs[0] * b.coeffs[0],))
    product = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                product[i + j] += x * y
    return CyclotomicNumber(a.order, _reduce(product, a.order))


def cyc_embed(a: CyclotomicNumber, new_order: int) -> CyclotomicNumber:
    """Plonge a dans Q(ζ_{m'}) via ζ_m = ζ_{m'}^{m'/m}"""
    if new_order % a.order:
        raise CyclotomicOrderError(f"L'ordre {a.order} ne divise pas {new_order}")
    if new_order == a.order:
        return a
    step = new_order // a.order
    spread = [Fraction(0)] * ((len(a.coeffs) - 1) * step + 1)
    for j, c in enumerate(a.coeffs):
        spread[j * step] = c
    return CyclotomicNumber(new_order, _reduce(spread, new_order))


def cyc_from_rational(q: Scalar, m: int) -> CyclotomicNumber:
    size = euler_phi(m)
    return CyclotomicNumber(m, (Fraction(q),) + (Fraction(0),) * (size - 1))


@lru_cache(maxsize=4096)
def zeta_power(m: int, k: int) -> CyclotomicNumber:
    """ζ_m^k sous forme canonique"""
    k %= m
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return CyclotomicNumber(m, _reduce(coeffs, m))


def common_order(*orders: int) -> int:
    result = 1
    for m in orders:
        result = result * m // gcd(result, m)
    return result


# Sérialisation

def rational_to_str(q: Scalar) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Analyse "p/q" ou "p" (les décimaux finis sont acceptés et convertis exactement)"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Rationnel invalide: {text!r}") from e


def cyc_to_json(a: CyclotomicNumber) -> Dict[str, Any]:
    return {"order": a.order, "coeffs": [rational_to_str(c) for c in a.coeffs]}


def cyc_from_json(data: Dict[str, Any]) -> CyclotomicNumber:
    return CyclotomicNumber(int(data["order"]), tuple(parse_rational(c) for c in data["coeffs"]))


def cyc_to_canonical_str(a: CyclotomicNumber) -> str:
    """Forme "c0 + c1*z + c2*z^2; order=m" (termes nuls omis)"""
    terms = []
    for j, c in enumerate(a.coeffs):
        if not c:
            continue
        if j == 0:
            terms.append(rational_to_str(c))
        elif j == 1:
            terms.append(f"{rational_to_str(c)}*z")
        else:
            terms.append(f"{rational_to_str(c)}*z^{j}")
    body = " + ".join(terms) if terms else "0"
    return f"{body}; order={a.order}"


def cyc_to_complex(a: CyclotomicNumber) -> complex:
    """Approximation flottante (inexacte) de l'élément"""
    powers = np.exp(2j * np.pi * np.arange(len(a.coeffs)) / a.order)
    values = np.array([float(c) for c in a.coeffs])
    return complex(np.dot(values, powers))
