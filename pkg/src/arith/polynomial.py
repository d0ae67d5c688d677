"""
📈 Polynômes denses en x à coefficients dans Q(ζ_m)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from src.arith.exactnum import CyclotomicNumber, CyclotomicOrderError, cyc_from_rational

logger = logging.getLogger(__name__)


def _strip(coeffs: Iterable[CyclotomicNumber]) -> Tuple[CyclotomicNumber, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class GHBPolynomial:
    """
    Polynôme Σ c_k x^k, coefficients du plus bas degré au plus haut.

    Le coefficient de tête est toujours non nul ; le polynôme nul a une
    séquence vide.
    """

    order: int
    coeffs: Tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if c.order != self.order:
                raise CyclotomicOrderError(
                    f"Coefficient d'ordre {c.order} dans un polynôme d'ordre {self.order}"
                )
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def zero(cls, order: int) -> "GHBPolynomial":
        return cls(order, ())

    @classmethod
    def constant(cls, value: Union[int, Fraction, CyclotomicNumber], order: int) -> "GHBPolynomial":
        if not isinstance(value, CyclotomicNumber):
            value = cyc_from_rational(value, order)
        return cls(order, (value,))

    @classmethod
    def monomial(cls, degree: int, order: int, value=1) -> "GHBPolynomial":
        if not isinstance(value, CyclotomicNumber):
            value = cyc_from_rational(value, order)
        zero = CyclotomicNumber.zero(order)
        return cls(order, (zero,) * degree + (value,))

    @classmethod
    def from_rationals(cls, coeffs: Iterable[Union[int, Fraction]], order: int = 1) -> "GHBPolynomial":
        return cls(order, tuple(cyc_from_rational(c, order) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degré (−1 pour le polynôme nul)"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> CyclotomicNumber:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return CyclotomicNumber.zero(self.order)

    def _coerce(self, other) -> "GHBPolynomial":
        if isinstance(other, GHBPolynomial):
            if other.order != self.order:
                raise CyclotomicOrderError(f"Ordres différents: {self.order} et {other.order}")
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return GHBPolynomial.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return GHBPolynomial(self.order, tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return GHBPolynomial(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return GHBPolynomial(self.order, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return GHBPolynomial.zero(self.order)
        product: List[CyclotomicNumber] = [CyclotomicNumber.zero(self.order)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = product[i + j] + a * b
        return GHBPolynomial(self.order, tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GHBPolynomial(self.order, tuple(c / other for c in self.coeffs))
        return NotImplemented

    def evaluate(self, x0: Union[int, Fraction]) -> CyclotomicNumber:
        """Évaluation de Horner en un point rationnel"""
        x0 = Fraction(x0)
        result = CyclotomicNumber.zero(self.order)
        for c in reversed(self.coeffs):
            result = result * x0 + c
        return result

    def shift(self, y: Union[int, Fraction]) -> "GHBPolynomial":
        """Coefficients de p(x + y)"""
        linear = GHBPolynomial.from_rationals([y, 1], self.order)
        result = GHBPolynomial.zero(self.order)
        for c in reversed(self.coeffs):
            result = result * linear + c
        return result

    def derivative(self) -> "GHBPolynomial":
        return GHBPolynomial(self.order, tuple(c * k for k, c in enumerate(self.coeffs) if k > 0))
