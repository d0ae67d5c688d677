"""
🧮 Séries formelles tronquées et oracle par fonction génératrice

L'oracle extrait B_{N,n,χ}, B_{N,n,χ}(x0), B_{N,n} et B_{N,n}(x0)
directement des fonctions génératrices, sans passer par les formules
fermées : il sert de référence indépendante pour tous les autres calculs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import TYPE_CHECKING, List, Sequence, Tuple, Union

from src.arith.exactnum import CyclotomicNumber, cyc_from_rational

if TYPE_CHECKING:
    from src.characters.dirichlet import DirichletCharacter

logger = logging.getLogger(__name__)


class SeriesError(ValueError):
    """Séries incompatibles ou non inversibles"""


@dataclass(frozen=True)
class TruncatedSeries:
    """Série c_0 + c_1 t + ... + c_K t^K + O(t^{K+1}) sur Q(ζ_m)"""

    order: int
    coeffs: Tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("Une série tronquée a au moins un coefficient")
        if any(c.order != self.order for c in self.coeffs):
            raise SeriesError(f"Coefficients d'ordres mélangés dans une série d'ordre {self.order}")

    @property
    def order_bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_rationals(cls, values: Sequence[Union[int, Fraction]], order: int = 1) -> "TruncatedSeries":
        return cls(order, tuple(cyc_from_rational(v, order) for v in values))

    def __getitem__(self, n: int) -> CyclotomicNumber:
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_compatible(self, other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(c * factor for c in self.coeffs))


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order_bound != b.order_bound:
        raise SeriesError(f"Bornes de troncature différentes: {a.order_bound} et {b.order_bound}")
    if a.order != b.order:
        raise SeriesError(f"Ordres cyclotomiques différents: {a.order} et {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Produit de Cauchy tronqué à K"""
    _check_compatible(a, b)
    size = a.order_bound + 1
    out = []
    for n in range(size):
        acc = CyclotomicNumber.zero(a.order)
        for i in range(n + 1):
            if not a.coeffs[i].is_zero() and not b.coeffs[n - i].is_zero():
                acc = acc + a.coeffs[i] * b.coeffs[n - i]
        out.append(acc)
    return TruncatedSeries(a.order, tuple(out))


def series_div_unit(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """
    Quotient num / den par substitution avant.

    Le terme constant de den doit être un rationnel non nul : c'est la seule
    division dont on a besoin, et elle évite toute inversion dans Q(ζ_m).
    """
    _check_compatible(num, den)
    d0 = den.coeffs[0]
    if not d0.is_rational():
        raise SeriesError("Terme constant non rationnel")
    d0 = d0.to_rational()
    if d0 == 0:
        raise SeriesError("Terme constant nul : série non inversible")

    quotient: List[CyclotomicNumber] = []
    for n in range(num.order_bound + 1):
        acc = num.coeffs[n]
        for j in range(1, n + 1):
            if not den.coeffs[j].is_zero():
                acc = acc - den.coeffs[j] * quotient[n - j]
        quotient.append(acc / d0)
    return TruncatedSeries(num.order, tuple(quotient))


def series_exp_linear(a: Union[int, Fraction], K: int, m: int = 1) -> TruncatedSeries:
    """e^{at} tronquée : a^n / n!"""
    if K < 0:
        raise ValueError(f"Borne de troncature négative: {K}")
    a = Fraction(a)
    return TruncatedSeries.from_rationals([a ** n / factorial(n) for n in range(K + 1)], m)


def truncated_exp(K: int, m: int = 1) -> TruncatedSeries:
    return series_exp_linear(1, K, m)


def stirling_column_series(l: int, K: int) -> TruncatedSeries:
    """(e^t − 1)^l / l! tronquée"""
    base = series_exp_linear(1, K)
    base = TruncatedSeries(1, (cyc_from_rational(0, 1),) + base.coeffs[1:])
    result = TruncatedSeries.from_rationals([1] + [0] * K)
    for _ in range(l):
        result = series_mul(result, base)
    return result.scale(Fraction(1, factorial(l)))


def _reduced_denominator(N: int, f: int, K: int, m: int) -> TruncatedSeries:
    # (e^{ft} − Σ_{n<N} (ft)^n/n!) / t^N, terme constant f^N/N!
    return TruncatedSeries.from_rationals(
        [Fraction(f ** (N + n), factorial(N + n)) for n in range(K + 1)], m
    )


def _twisted_numerator(N: int, chi: "DirichletCharacter", x0: Fraction, K: int) -> TruncatedSeries:
    m = chi.order
    numerator = TruncatedSeries.from_rationals([0] * (K + 1), m)
    for a in range(1, chi.modulus + 1):
        value = chi.values[a % chi.modulus]
        if value.is_zero():
            continue
        numerator = numerator + series_exp_linear(x0 + a, K, m).scale(value)
    return numerator.scale(Fraction(1, factorial(N)))


def _extract(series: TruncatedSeries) -> List[CyclotomicNumber]:
    return [c * factorial(n) for n, c in enumerate(series.coeffs)]


def oracle_numbers(N: int, chi: "DirichletCharacter", K: int) -> List[CyclotomicNumber]:
    """B_{N,0,χ} .. B_{N,K,χ} extraits de la fonction génératrice"""
    return oracle_poly_eval(N, chi, Fraction(0), K)


def oracle_poly_eval(N: int, chi: "DirichletCharacter", x0: Union[int, Fraction], K: int) -> List[CyclotomicNumber]:
    """B_{N,n,χ}(x0) pour n = 0..K, numérateur en e^{(x0+a)t}"""
    if N < 1 or K < 0:
        raise ValueError(f"Paramètres invalides: N={N}, K={K}")
    x0 = Fraction(x0)
    logger.debug(f"Oracle: N={N}, f={chi.modulus}, x0={x0}, K={K}")
    numerator = _twisted_numerator(N, chi, x0, K)
    denominator = _reduced_denominator(N, chi.modulus, K, chi.order)
    return _extract(series_div_unit(numerator, denominator))


def oracle_hb_numbers(N: int, K: int) -> List[Fraction]:
    """B_{N,0} .. B_{N,K} : inverse de la série (t^N/N!)^{-1}(e^t − Σ_{n<N} t^n/n!)"""
    return [c.to_rational() for c in oracle_hb_poly_eval(N, Fraction(0), K)]


def oracle_hb_poly_eval(N: int, x0: Union[int, Fraction], K: int) -> List[CyclotomicNumber]:
    """B_{N,n}(x0) pour n = 0..K (numérateur e^{x0 t}, sans caractère)"""
    if N < 1 or K < 0:
        raise ValueError(f"Paramètres invalides: N={N}, K={K}")
    numerator = series_exp_linear(x0, K).scale(Fraction(1, factorial(N)))
    denominator = _reduced_denominator(N, 1, K, 1)
    return _extract(series_div_unit(numerator, denominator))

