"""
📐 Nombres et polynômes de Bernoulli hypergéométriques B_{N,n}, B_{N,n}(x)

Cœur sans caractère : tables mémoïsées de B_{N,n}, nombres de Stirling de
seconde espèce et factorielles descendantes.
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple, Union

from src.arith.polynomial import GHBPolynomial
from src.bernoulli.compositions import composition_sums, STRICT, WEAK

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HBTable:
    """B_{N,0} .. B_{N,n}"""

    N: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


_hb_tables: Dict[int, List[Fraction]] = {}
_hb_lock = threading.Lock()


def _check(N: int, n: int) -> None:
    if N < 1:
        raise ValueError(f"N doit être ≥ 1 (reçu {N})")
    if n < 0:
        raise ValueError(f"n doit être ≥ 0 (reçu {n})")


def hb_table(N: int, n: int) -> HBTable:
    """
    Table B_{N,0..n} par la récurrence Σ_{i=0}^{n} binom(N+n, i) B_{N,i} = 0 (n ≥ 1).
    """
    _check(N, n)
    with _hb_lock:
        table = _hb_tables.setdefault(N, [Fraction(1)])
        for m in range(len(table), n + 1):
            partial = sum((comb(N + m, i) * table[i] for i in range(m)), Fraction(0))
            table.append(-partial / comb(N + m, m))
        return HBTable(N, tuple(table[: n + 1]))


def hb_number(N: int, n: int) -> Fraction:
    """B_{N,n}"""
    return hb_table(N, n)[n]


def hb_polynomial(N: int, n: int) -> GHBPolynomial:
    """B_{N,n}(x) = Σ_k binom(n,k) B_{N,k} x^{n−k}"""
    table = hb_table(N, n)
    return GHBPolynomial.from_rationals([comb(n, j) * table[n - j] for j in range(n + 1)])


def hb_polynomial_value(N: int, n: int, x: Union[int, Fraction]) -> Fraction:
    """B_{N,n}(x) en un point rationnel"""
    table = hb_table(N, n)
    x = Fraction(x)
    return sum((comb(n, k) * table[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Nombre de Stirling de seconde espèce S(n, k)"""
    if n < 0 or k < 0:
        return 0
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def stirling2_row(n: int) -> Tuple[int, ...]:
    """S(n, 0) .. S(n, n) par le triangle"""
    row = [1]
    for m in range(1, n + 1):
        row = [0] + [j * (row[j] if j < len(row) else 0) + row[j - 1] for j in range(1, m + 1)]
    return tuple(row)


def falling_factorial(x: Union[int, Fraction], l: int) -> Fraction:
    """(x)_l = x(x−1)...(x−l+1), (x)_0 = 1"""
    if l < 0:
        raise ValueError(f"l doit être ≥ 0 (reçu {l})")
    x = Fraction(x)
    result = Fraction(1)
    for j in range(l):
        result *= x - j
    return result


# Formes réduites à conducteur 1 : elles valent pour B_{N,n}

def alpha(N: int, i: int, f: int = 1) -> Fraction:
    """α_i = N! f^i / (N+i)!"""
    return Fraction(factorial(N) * f ** i, factorial(N + i))


def hessenberg_determinant(alphas: Sequence[Fraction], last_row: Sequence):
    """
    Déterminant n×n de Hessenberg inférieur : sur-diagonale 1, ligne i
    (i < n) égale à α_i .. α_1, dernière ligne h_n .. h_1.

    alphas[j] = α_j (alphas[0] ignoré), last_row[j] = h_j (last_row[0] ignoré).
    Développement le long de la première ligne :
    D_n = Σ_{j=1}^{n−1} (−1)^{j+1} α_j D_{n−j} + (−1)^{n+1} h_n.
    """
    n = len(last_row) - 1
    if n < 1:
        raise ValueError("Déterminant vide")
    dets = [None]
    for size in range(1, n + 1):
        value = last_row[size] if size % 2 == 1 else -last_row[size]
        for j in range(1, size):
            term = dets[size - j] * alphas[j]
            value = value + term if j % 2 == 1 else value - term
        dets.append(value)
    return dets[n]


def hb_number_tsum(N: int, n: int) -> Fraction:
    """n! Σ_{r=1}^{n} T_r(n)"""
    _check(N, n)
    if n == 0:
        return Fraction(1)
    sums = composition_sums(N, STRICT, n)
    return factorial(n) * sum((sums(r, n) for r in range(1, n + 1)), Fraction(0))


def hb_number_ttilde(N: int, n: int) -> Fraction:
    """n! Σ_{r=1}^{n} binom(n+1, r+1) T̃_r(n)"""
    _check(N, n)
    if n == 0:
        return Fraction(1)
    sums = composition_sums(N, WEAK, n)
    return factorial(n) * sum((comb(n + 1, r + 1) * sums(r, n) for r in range(1, n + 1)), Fraction(0))


def hb_determinant(N: int, n: int) -> Fraction:
    """(−1)^n n! det, dernière ligne α_n .. α_1"""
    _check(N, n)
    if n == 0:
        return Fraction(1)
    alphas = [alpha(N, i) for i in range(n + 1)]
    return (-1) ** n * factorial(n) * hessenberg_determinant(alphas, alphas)


def appendix_hb_number(N: int, n: int) -> Fraction:
    """Formes closes de B_{N,n} pour n ≤ 4"""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, N + 1)
    if n == 2:
        return Fraction(2, (N + 1) ** 2 * (N + 2))
    if n == 3:
        return Fraction(6 * (N - 1), (N + 1) ** 3 * (N + 2) * (N + 3))
    if n == 4:
        return Fraction(24 * (N ** 3 - N ** 2 - 6 * N + 2), (N + 1) ** 4 * (N + 2) ** 2 * (N + 3) * (N + 4))
    raise ValueError(f"Pas de forme close pour n={n} (n ≤ 4)")
