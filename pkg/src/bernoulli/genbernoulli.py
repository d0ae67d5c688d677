"""
🔔 Nombres et polynômes de Bernoulli hypergéométriques généralisés B_{N,n,χ}

Plusieurs voies indépendantes :
    - cor10       : Σ_a χ(a) Σ_k binom(n,k) B_{N,k} a^{n−k} f^{k−N}
    - recurrence  : B_n = S_n/f^N − Σ_{i<n} N! n! f^{n−i} / ((N+n−i)! i!) B_i
    - tsum/ttilde : sommes sur les compositions T_r(k), T̃_r(k)
    - determinant : déterminant de Hessenberg (récurrence des cofacteurs)
    - hbp         : f^{n−N} Σ_a χ(a) B_{N,n}(a/f)
plus l'oracle par série génératrice (src.arith.powerseries).
"""

import logging
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.arith.exactnum import CyclotomicNumber
from src.arith.polynomial import GHBPolynomial
from src.bernoulli.compositions import (
    STRICT,
    WEAK,
    CompositionSums,
    composition_sums,
    t_strict,
    t_strict_enumerated,
    t_weak,
    t_weak_enumerated,
)
from src.bernoulli.hyperbernoulli import (
    alpha,
    falling_factorial,
    hb_polynomial,
    hb_polynomial_value,
    hb_table,
    hessenberg_determinant,
    stirling2_row,
)
from src.characters.dirichlet import DirichletCharacter, power_sum_poly, power_sums

logger = logging.getLogger(__name__)

__all__ = [
    "CompositionSums",
    "GHBPolynomial",
    "t_strict",
    "t_weak",
    "t_strict_enumerated",
    "t_weak_enumerated",
    "gbn_cor10",
    "gbn_recurrence",
    "gbn_Tsum",
    "gbn_Ttilde",
    "hat_s",
    "hat_s_poly",
    "gbn_determinant",
    "gbn_via_hbp",
    "gbp_from_numbers",
    "gbp_shift",
    "gbp_evaluate",
    "gbp_stirling",
    "gbp_recurrence_poly",
    "gbp_determinant",
    "gbp_Tsum_poly",
    "gbp_derivative",
    "trivial_number_formula",
    "trivial_poly_formula",
    "brec_check",
    "agoh_check",
    "brec_poly_check",
    "agoh_poly_check",
    "classical_recurrence_check",
    "appendix_number",
    "appendix_classical",
    "hessenberg_matrix",
    "laplace_determinant",
]

Number = CyclotomicNumber


def _check(N: int, n: int) -> None:
    if N < 1:
        raise ValueError(f"N doit être ≥ 1 (reçu {N})")
    if n < 0:
        raise ValueError(f"n doit être ≥ 0 (reçu {n})")


def _base_case(N: int, chi: DirichletCharacter) -> Number:
    # B_{N,0,χ} = S_0 / f^N
    return power_sums(chi, 0)[0] / chi.modulus ** N


def _recurrence_weight(N: int, n: int, i: int, f: int) -> Fraction:
    # N! n! f^{n−i} / ((N+n−i)! i!)
    return Fraction(factorial(N) * factorial(n) * f ** (n - i), factorial(N + n - i) * factorial(i))


# Nombres

def gbn_cor10(N: int, n: int, chi: DirichletCharacter) -> Number:
    _check(N, n)
    f = chi.modulus
    table = hb_table(N, n)
    total = CyclotomicNumber.zero(chi.order)
    for a in range(1, f + 1):
        value = chi.values[a % f]
        if value.is_zero():
            continue
        inner = sum(
            (comb(n, k) * table[k] * Fraction(a) ** (n - k) * Fraction(f) ** (k - N) for k in range(n + 1)),
            Fraction(0),
        )
        total = total + value * inner
    return total


_number_prefixes: Dict[Tuple[int, DirichletCharacter], List[Number]] = {}
_poly_prefixes: Dict[Tuple[int, DirichletCharacter], List[GHBPolynomial]] = {}
_prefix_locks: Dict[Tuple[str, int, DirichletCharacter], threading.Lock] = {}
_registry_lock = threading.Lock()


def prefix_lock(kind: str, N: int, chi: DirichletCharacter) -> threading.Lock:
    """Verrou propre à un préfixe ("numbers" ou "polynomials") pour (N, χ)"""
    with _registry_lock:
        return _prefix_locks.setdefault((kind, N, chi), threading.Lock())


def gbn_recurrence_prefix(N: int, n: int, chi: DirichletCharacter) -> Tuple[Number, ...]:
    """B_{N,0,χ} .. B_{N,n,χ} par la récurrence, préfixe mémoïsé par (N, χ)"""
    _check(N, n)
    f = chi.modulus
    sums = power_sums(chi, n)
    with prefix_lock("numbers", N, chi):
        prefix = _number_prefixes.setdefault((N, chi), [])
        for m in range(len(prefix), n + 1):
            value = sums[m] / f ** N
            for i in range(m):
                value = value - prefix[i] * _recurrence_weight(N, m, i, f)
            prefix.append(value)
        return tuple(prefix[: n + 1])


def gbn_recurrence(N: int, n: int, chi: DirichletCharacter) -> Number:
    return gbn_recurrence_prefix(N, n, chi)[n]


def _tsum(N: int, n: int, chi: DirichletCharacter, kind: str, terms) -> Number:
    _check(N, n)
    if n == 0:
        return _base_case(N, chi)
    f = chi.modulus
    sums = power_sums(chi, n)
    table = composition_sums(N, kind, n)
    total = CyclotomicNumber.zero(chi.order)
    for k in range(n + 1):
        inner = terms(table, k)
        if inner:
            total = total + sums[n - k] * (factorial(k) * Fraction(f) ** (k - N) * comb(n, k) * inner)
    return total


def _strict_inner(table: CompositionSums, k: int) -> Fraction:
    return table.column_sum(k)


def _weak_inner(table: CompositionSums, k: int) -> Fraction:
    return sum((comb(k + 1, r + 1) * table(r, k) for r in range(k + 1)), Fraction(0))


def gbn_Tsum(N: int, n: int, chi: DirichletCharacter) -> Number:
    return _tsum(N, n, chi, STRICT, _strict_inner)


def gbn_Ttilde(N: int, n: int, chi: DirichletCharacter) -> Number:
    return _tsum(N, n, chi, WEAK, _weak_inner)


def hat_s(N: int, n: int, chi: DirichletCharacter) -> Number:
    """Ŝ_n = f^{−N} Σ_a χ(a) (N! f^n/(N+n)! − a^n/n!)"""
    if n < 1:
        raise ValueError(f"Ŝ_n n'est défini que pour n ≥ 1 (reçu {n})")
    f = chi.modulus
    weight = alpha(N, n, f)
    total = CyclotomicNumber.zero(chi.order)
    for a in range(1, f + 1):
        value = chi.values[a % f]
        if not value.is_zero():
            total = total + value * (weight - Fraction(a ** n, factorial(n)))
    return total / f ** N


def hat_s_poly(N: int, n: int, chi: DirichletCharacter) -> GHBPolynomial:
    """Ŝ_n(x) = f^{−N} Σ_a χ(a) (N! f^n/(N+n)! − (x+a)^n/n!)"""
    if n < 1:
        raise ValueError(f"Ŝ_n(x) n'est défini que pour n ≥ 1 (reçu {n})")
    f = chi.modulus
    constant = power_sums(chi, 0)[0] * alpha(N, n, f)
    return (GHBPolynomial.constant(constant, chi.order) - power_sum_poly(chi, n) / factorial(n)) / f ** N


def gbn_determinant(N: int, n: int, chi: DirichletCharacter) -> Number:
    _check(N, n)
    if n == 0:
        return _base_case(N, chi)
    f = chi.modulus
    alphas = [alpha(N, i, f) for i in range(n + 1)]
    last_row = [None] + [hat_s(N, k, chi) for k in range(1, n + 1)]
    return hessenberg_determinant(alphas, last_row) * ((-1) ** n * factorial(n))


def gbn_via_hbp(N: int, n: int, chi: DirichletCharacter) -> Number:
    _check(N, n)
    f = chi.modulus
    total = CyclotomicNumber.zero(chi.order)
    for a in range(1, f + 1):
        value = chi.values[a % f]
        if not value.is_zero():
            total = total + value * hb_polynomial_value(N, n, Fraction(a, f))
    return total * Fraction(f) ** (n - N)


NUMBER_ROUTES = {
    "cor10": gbn_cor10,
    "recurrence": gbn_recurrence,
    "tsum": gbn_Tsum,
    "ttilde": gbn_Ttilde,
    "determinant": gbn_determinant,
    "hbp": gbn_via_hbp,
}


def number_prefix(N: int, n: int, chi: DirichletCharacter, route: str = "recurrence") -> Tuple[Number, ...]:
    if route == "recurrence":
        return gbn_recurrence_prefix(N, n, chi)
    try:
        compute = NUMBER_ROUTES[route]
    except KeyError:
        raise ValueError(f"Voie de calcul inconnue: {route}") from None
    return tuple(compute(N, k, chi) for k in range(n + 1))


# Polynômes

def gbp_from_numbers(
    N: int,
    n: int,
    chi: DirichletCharacter,
    route: str = "recurrence",
    numbers: Optional[Sequence[Number]] = None,
) -> GHBPolynomial:
    """B_{N,n,χ}(x) = Σ_k binom(n,k) B_{N,k,χ} x^{n−k}"""
    _check(N, n)
    if numbers is None:
        numbers = number_prefix(N, n, chi, route)
    return GHBPolynomial(chi.order, tuple(numbers[n - j] * comb(n, j) for j in range(n + 1)))


def gbp_shift(p: GHBPolynomial, y: Union[int, Fraction]) -> GHBPolynomial:
    return p.shift(y)


def gbp_evaluate(p: GHBPolynomial, x0: Union[int, Fraction]) -> Number:
    return p.evaluate(x0)


def gbp_derivative(p: GHBPolynomial) -> GHBPolynomial:
    return p.derivative()


def gbp_stirling(N: int, n: int, chi: DirichletCharacter, x0: Union[int, Fraction]) -> Number:
    """Σ_k Σ_l binom(n,k) S(k,l) (x0)_l B_{N,n−k,χ}"""
    _check(N, n)
    numbers = gbn_recurrence_prefix(N, n, chi)
    falling = [falling_factorial(x0, l) for l in range(n + 1)]
    total = CyclotomicNumber.zero(chi.order)
    for k in range(n + 1):
        row = stirling2_row(k)
        weight = sum((row[l] * falling[l] for l in range(k + 1)), Fraction(0))
        if weight:
            total = total + numbers[n - k] * (comb(n, k) * weight)
    return total


def gbp_recurrence_prefix(N: int, n: int, chi: DirichletCharacter) -> Tuple[GHBPolynomial, ...]:
    """B_{N,i,χ}(x) = S_i(x)/f^N − Σ_{j<i} N! i! f^{i−j}/((N+i−j)! j!) B_{N,j,χ}(x)"""
    _check(N, n)
    f = chi.modulus
    with prefix_lock("polynomials", N, chi):
        prefix = _poly_prefixes.setdefault((N, chi), [])
        for m in range(len(prefix), n + 1):
            value = power_sum_poly(chi, m) / f ** N
            for i in range(m):
                value = value - prefix[i] * _recurrence_weight(N, m, i, f)
            prefix.append(value)
        return tuple(prefix[: n + 1])


def gbp_recurrence_poly(N: int, n: int, chi: DirichletCharacter) -> GHBPolynomial:
    return gbp_recurrence_prefix(N, n, chi)[n]


def gbp_determinant(N: int, n: int, chi: DirichletCharacter) -> GHBPolynomial:
    _check(N, n)
    if n == 0:
        return GHBPolynomial.constant(_base_case(N, chi), chi.order)
    f = chi.modulus
    alphas = [alpha(N, i, f) for i in range(n + 1)]
    last_row = [None] + [hat_s_poly(N, k, chi) for k in range(1, n + 1)]
    return hessenberg_determinant(alphas, last_row) * ((-1) ** n * factorial(n))


def gbp_Tsum_poly(N: int, n: int, chi: DirichletCharacter, weak: bool = False) -> GHBPolynomial:
    _check(N, n)
    if n == 0:
        return GHBPolynomial.constant(_base_case(N, chi), chi.order)
    f = chi.modulus
    kind, terms = (WEAK, _weak_inner) if weak else (STRICT, _strict_inner)
    table = composition_sums(N, kind, n)
    total = GHBPolynomial.zero(chi.order)
    for k in range(n + 1):
        inner = terms(table, k)
        if inner:
            total = total + power_sum_poly(chi, n - k) * (factorial(k) * Fraction(f) ** (k - N) * comb(n, k) * inner)
    return total


# Caractère trivial de conducteur 1

def trivial_number_formula(N: int, n: int) -> Fraction:
    """B_{N,n,1} exprimé par les B_{N,k}"""
    _check(N, n)
    table = hb_table(N, n)
    top = min(N - 1, n)
    total = sum((comb(n, m) * table[n - m] for m in range(top + 1)), Fraction(0))
    return total + 1 if n == N else total


def trivial_poly_formula(N: int, n: int) -> GHBPolynomial:
    """B_{N,n,1}(x) exprimé par les B_{N,k}(x)"""
    _check(N, n)
    top = n if n <= N - 1 else N - 1
    total = GHBPolynomial.zero(1)
    for i in range(top + 1):
        total = total + hb_polynomial(N, n - i) * comb(n, i)
    if n >= N:
        total = total + GHBPolynomial.monomial(n - N, 1, comb(n, N))
    return total


# Identités de contrôle

def brec_check(N: int, n: int, chi: DirichletCharacter) -> Number:
    """binom(N+n,n)^{−1} Σ_{i=0}^{n} binom(N+n,i) B_{N,i,χ} f^{N+n−i} (vaut S_n)"""
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")
    f = chi.modulus
    numbers = gbn_recurrence_prefix(N, n, chi)
    total = CyclotomicNumber.zero(chi.order)
    for i in range(n + 1):
        total = total + numbers[i] * (comb(N + n, i) * f ** (N + n - i))
    return total / comb(N + n, n)


def agoh_check(n: int, chi: DirichletCharacter) -> Number:
    """Forme N = 1 : Σ_{i<n} binom(n,i) B_{1,i+1,χ}/(i+1) f^{n−i} + B_{1,0,χ} f^{n+1}/(n+1)"""
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")
    f = chi.modulus
    numbers = gbn_recurrence_prefix(1, n, chi)
    total = numbers[0] * Fraction(f ** (n + 1), n + 1)
    for i in range(n):
        total = total + numbers[i + 1] * Fraction(comb(n, i) * f ** (n - i), i + 1)
    return total


def brec_poly_check(N: int, n: int, chi: DirichletCharacter) -> GHBPolynomial:
    """binom(N+n,n)^{−1} Σ_{i=0}^{n} binom(N+n,i) B_{N,i,χ}(x) f^{N+n−i} (vaut S_n(x))"""
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")
    f = chi.modulus
    polys = gbp_recurrence_prefix(N, n, chi)
    total = GHBPolynomial.zero(chi.order)
    for i in range(n + 1):
        total = total + polys[i] * (comb(N + n, i) * f ** (N + n - i))
    return total / comb(N + n, n)


def agoh_poly_check(n: int, chi: DirichletCharacter) -> GHBPolynomial:
    """Forme N = 1 en x : Σ_{i<n} binom(n,i) B_{1,i+1,χ}(x)/(i+1) f^{n−i} + B_{1,0,χ}(x) f^{n+1}/(n+1)"""
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")
    f = chi.modulus
    polys = gbp_recurrence_prefix(1, n, chi)
    total = polys[0] * Fraction(f ** (n + 1), n + 1)
    for i in range(n):
        total = total + polys[i + 1] * Fraction(comb(n, i) * f ** (n - i), i + 1)
    return total


def classical_recurrence_check(n: int) -> GHBPolynomial:
    """Σ_{i<n} binom(n,i) B_{i+1}(x)/(i+1) + 1/(n+1) avec les B_k(x) classiques (vaut x^n)"""
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")
    total = GHBPolynomial.constant(Fraction(1, n + 1), 1)
    for i in range(n):
        total = total + hb_polynomial(1, i + 1) * Fraction(comb(n, i), i + 1)
    return total


def appendix_number(N: int, n: int, S: Sequence[Number], f: int) -> Number:
    """Formes closes de B_{N,n,χ} en S_0..S_4, n ≤ 4"""
    if n > 4 or n < 0:
        raise ValueError(f"Pas de forme close pour n={n} (n ≤ 4)")
    F = Fraction(f)
    terms = [S[0] / F ** N]
    if n >= 1:
        terms = [S[1] / F ** N, -S[0] * Fraction(1, N + 1) / F ** (N - 1)]
    if n >= 2:
        terms = [
            S[2] / F ** N,
            -S[1] * Fraction(2, N + 1) / F ** (N - 1),
            S[0] * Fraction(2, (N + 1) ** 2 * (N + 2)) / F ** (N - 2),
        ]
    if n >= 3:
        terms = [
            S[3] / F ** N,
            -S[2] * Fraction(3, N + 1) / F ** (N - 1),
            S[1] * Fraction(6, (N + 1) ** 2 * (N + 2)) / F ** (N - 2),
            S[0] * Fraction(6 * (N - 1), (N + 1) ** 3 * (N + 2) * (N + 3)) / F ** (N - 3),
        ]
    if n == 4:
        terms = [
            S[4] / F ** N,
            -S[3] * Fraction(4, N + 1) / F ** (N - 1),
            S[2] * Fraction(12, (N + 1) ** 2 * (N + 2)) / F ** (N - 2),
            S[1] * Fraction(24 * (N - 1), (N + 1) ** 3 * (N + 2) * (N + 3)) / F ** (N - 3),
            S[0] * Fraction(24 * (N ** 3 - N ** 2 - 6 * N + 2), (N + 1) ** 4 * (N + 2) ** 2 * (N + 3) * (N + 4)) / F ** (N - 4),
        ]
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def appendix_classical(n: int, S: Sequence[Number], f: int) -> Number:
    """N = 1, χ non trivial (S_0 = 0), n ≤ 4"""
    if n == 0:
        return S[0] * 0
    if n == 1:
        return S[1] / f
    if n == 2:
        return -S[1] + S[2] / f
    if n == 3:
        return S[1] * Fraction(f, 2) - S[2] * Fraction(3, 2) + S[3] / f
    if n == 4:
        return S[2] * f - S[3] * 2 + S[4] / f
    raise ValueError(f"Pas de forme close pour n={n} (n ≤ 4)")


# Matrice explicite (contrôle pour petits n)

def hessenberg_matrix(alphas: Sequence[Fraction], last_row: Sequence) -> List[list]:
    """Matrice n×n explicite ; last_row[j] = h_j"""
    n = len(last_row) - 1
    matrix = []
    for i in range(1, n):
        row = [alphas[i - j + 1] if j <= i else (Fraction(1) if j == i + 1 else Fraction(0)) for j in range(1, n + 1)]
        matrix.append(row)
    matrix.append([last_row[n - j + 1] for j in range(1, n + 1)])
    return matrix


def laplace_determinant(matrix: Sequence[Sequence]):
    """Développement de Laplace naïf (n ≤ 6)"""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if isinstance(entry, Fraction) and entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = laplace_determinant(minor) * entry
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Fraction(0)
    return total
