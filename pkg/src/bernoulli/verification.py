"""
✅ Registre des méthodes de calcul et suites de vérification croisée

Chaque suite parcourt une grille bornée (N, n, caractères de module ≤ f_max)
et vérifie une identité par égalité exacte. Les cellules sont indépendantes
et peuvent être réparties sur plusieurs threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.arith.exactnum import CyclotomicNumber
from src.arith.polynomial import GHBPolynomial
from src.arith.powerseries import oracle_hb_numbers, oracle_numbers, oracle_poly_eval
from src.bernoulli import genbernoulli as gb
from src.bernoulli.hyperbernoulli import appendix_hb_number, hb_table
from src.characters.dirichlet import (
    DirichletCharacter,
    character_id,
    enumerate_characters,
    is_trivial,
    power_sum,
    power_sum_poly,
    power_sums,
    trivial_character,
)

logger = logging.getLogger(__name__)

NUMBER_METHODS = ("oracle", "cor10", "recurrence", "tsum", "ttilde", "determinant", "hbp")
POLY_METHODS = ("cor10", "recurrence", "tsum", "ttilde", "determinant", "hbp")
POINT_METHODS = ("oracle", "stirling")
SUITES = ("five-way", "polynomials", "appell", "addition", "brec", "trivial", "appendix")

POLY_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))
STIRLING_POINTS = (Fraction(1), Fraction(1, 2), Fraction(-2))
SHIFTS = (Fraction(1), Fraction(-2), Fraction(1, 3))


class MethodDisagreementError(RuntimeError):
    """Deux méthodes de calcul donnent des valeurs différentes"""

    def __init__(self, message: str, values: Dict[str, object]):
        super().__init__(message)
        self.values = values


def _agree(label: str, values: Dict[str, object]):
    reference_name, reference = next(iter(values.items()))
    for name, value in values.items():
        if value != reference:
            raise MethodDisagreementError(
                f"{label}: {name} diffère de {reference_name}", values
            )
    return reference


def compute_numbers(
    N: int, chi: DirichletCharacter, n_from: int, n_to: int, method: str
) -> List[CyclotomicNumber]:
    """B_{N,n,χ} pour n_from ≤ n ≤ n_to ; "all" exige l'accord de toutes les méthodes"""
    if n_from < 0 or n_to < n_from:
        raise ValueError(f"Plage d'indices invalide: {n_from}..{n_to}")
    if method == "all":
        per_method = {name: compute_numbers(N, chi, n_from, n_to, name) for name in NUMBER_METHODS}
        return [
            _agree(f"N={N}, {character_id(chi)}, n={n}", {name: vals[i] for name, vals in per_method.items()})
            for i, n in enumerate(range(n_from, n_to + 1))
        ]
    if method == "oracle":
        return oracle_numbers(N, chi, n_to)[n_from:]
    if method not in gb.NUMBER_ROUTES:
        raise ValueError(f"Méthode inconnue: {method}")
    if method == "recurrence":
        return list(gb.gbn_recurrence_prefix(N, n_to, chi)[n_from:])
    route = gb.NUMBER_ROUTES[method]
    return [route(N, n, chi) for n in range(n_from, n_to + 1)]


def _symbolic_polynomial(N: int, n: int, chi: DirichletCharacter, method: str) -> GHBPolynomial:
    if method in ("cor10", "hbp"):
        return gb.gbp_from_numbers(N, n, chi, route=method)
    if method == "recurrence":
        return gb.gbp_recurrence_poly(N, n, chi)
    if method == "tsum":
        return gb.gbp_Tsum_poly(N, n, chi, weak=False)
    if method == "ttilde":
        return gb.gbp_Tsum_poly(N, n, chi, weak=True)
    if method == "determinant":
        return gb.gbp_determinant(N, n, chi)
    raise ValueError(f"Méthode polynomiale inconnue: {method}")


def compute_polynomials(
    N: int,
    chi: DirichletCharacter,
    n_from: int,
    n_to: int,
    method: str,
    x0: Optional[Fraction] = None,
) -> List[Union[GHBPolynomial, CyclotomicNumber]]:
    """
    B_{N,n,χ}(x) symboliques, ou leurs valeurs en x0 si x0 est donné.

    oracle et stirling ne fonctionnent qu'en un point.
    """
    if n_from < 0 or n_to < n_from:
        raise ValueError(f"Plage d'indices invalide: {n_from}..{n_to}")
    if method in POINT_METHODS and x0 is None:
        raise ValueError(f"La méthode {method} exige un point d'évaluation x0")
    if method == "all":
        names = POLY_METHODS + (POINT_METHODS if x0 is not None else ())
        per_method = {name: compute_polynomials(N, chi, n_from, n_to, name, x0) for name in names}
        return [
            _agree(
                f"N={N}, {character_id(chi)}, n={n}, x0={x0}",
                {name: vals[i] for name, vals in per_method.items()},
            )
            for i, n in enumerate(range(n_from, n_to + 1))
        ]
    if method == "oracle":
        return oracle_poly_eval(N, chi, x0, n_to)[n_from:]
    if method == "stirling":
        return [gb.gbp_stirling(N, n, chi, x0) for n in range(n_from, n_to + 1)]
    polys = [_symbolic_polynomial(N, n, chi, method) for n in range(n_from, n_to + 1)]
    if x0 is None:
        return polys
    return [p.evaluate(x0) for p in polys]


# Suites

@dataclass
class CellResult:
    suite: str
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    failures: List[CellResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, result: CellResult) -> None:
        if result.ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(result)


def _characters(max_f: int, moduli: Optional[Sequence[int]] = None) -> List[DirichletCharacter]:
    moduli = moduli if moduli is not None else range(1, max_f + 1)
    return [chi for f in moduli for chi in enumerate_characters(f)]


def _cell(suite: str, label: str, check: Callable[[], Optional[str]]) -> CellResult:
    try:
        problem = check()
    except MethodDisagreementError as e:
        problem = str(e)
    except Exception as e:
        logger.error(f"Erreur inattendue dans {suite} [{label}]: {e}")
        problem = f"{type(e).__name__}: {e}"
    return CellResult(suite, label, problem is None, problem or "")


def _five_way(N: int, chi: DirichletCharacter, max_n: int) -> Optional[str]:
    compute_numbers(N, chi, 0, max_n, "all")
    return None


def _polynomials(N: int, chi: DirichletCharacter, max_n: int) -> Optional[str]:
    polys = compute_polynomials(N, chi, 0, max_n, "all")
    for x0 in POLY_POINTS:
        expected = oracle_poly_eval(N, chi, x0, max_n)
        for n, p in enumerate(polys):
            if p.evaluate(x0) != expected[n]:
                return f"oracle en x0={x0}, n={n}"
    for x0 in STIRLING_POINTS:
        for n, p in enumerate(polys):
            if gb.gbp_stirling(N, n, chi, x0) != p.evaluate(x0):
                return f"stirling en x0={x0}, n={n}"
    return None


def _appell(N: int, chi: DirichletCharacter, max_n: int) -> Optional[str]:
    polys = [gb.gbp_from_numbers(N, n, chi) for n in range(max_n + 1)]
    for n in range(1, max_n + 1):
        if gb.gbp_derivative(polys[n]) != polys[n - 1] * n:
            return f"dérivée, n={n}"
    return None


def _addition(N: int, chi: DirichletCharacter, max_n: int) -> Optional[str]:
    polys = [gb.gbp_from_numbers(N, n, chi) for n in range(max_n + 1)]
    for y in SHIFTS:
        for n in range(max_n + 1):
            expected = GHBPolynomial.zero(chi.order)
            for k in range(n + 1):
                expected = expected + polys[k] * (comb(n, k) * y ** (n - k))
            if gb.gbp_shift(polys[n], y) != expected:
                return f"décalage y={y}, n={n}"
    return None


def _brec(N: int, chi: DirichletCharacter, max_n: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        if gb.brec_check(N, n, chi) != power_sum(chi, n):
            return f"n={n}"
        if gb.brec_poly_check(N, n, chi) != power_sum_poly(chi, n):
            return f"polynômes, n={n}"
    if N == 1:
        for n in range(1, max_n + 1):
            if gb.agoh_check(n, chi) != power_sum(chi, n):
                return f"forme N=1, n={n}"
            if gb.agoh_poly_check(n, chi) != power_sum_poly(chi, n):
                return f"forme N=1 en x, n={n}"
            if chi.modulus == 1 and gb.classical_recurrence_check(n) != GHBPolynomial.monomial(n, 1):
                return f"récurrence classique, n={n}"
    return None


def _appendix(N: int, chi: DirichletCharacter, max_n: int) -> Optional[str]:
    top = min(max_n, 4)
    sums = power_sums(chi, 4)
    values = compute_numbers(N, chi, 0, top, "all")
    for n in range(top + 1):
        if values[n] != gb.appendix_number(N, n, sums, chi.modulus):
            return f"forme close, n={n}"
        if N == 1 and not is_trivial(chi) and values[n] != gb.appendix_classical(n, sums, chi.modulus):
            return f"forme close N=1, n={n}"
    table = hb_table(N, top)
    for n in range(top + 1):
        if table[n] != appendix_hb_number(N, n):
            return f"B_(N,n) forme close, n={n}"
    return None


def _trivial(N: int, max_n: int) -> Optional[str]:
    chi = trivial_character(1)
    numbers = compute_numbers(N, chi, 0, max_n, "all")
    for n in range(max_n + 1):
        if numbers[n] != gb.trivial_number_formula(N, n):
            return f"nombre, n={n}"
        poly = compute_polynomials(N, chi, n, n, "all")[0]
        if poly != gb.trivial_poly_formula(N, n):
            return f"polynôme, n={n}"
    if N == 1:
        classical = oracle_hb_numbers(1, max_n)
        for n in range(max_n + 1):
            expected = Fraction(1, 2) if n == 1 else classical[n]
            if numbers[n] != expected:
                return f"Bernoulli classique, n={n}"
    return None


_CHARACTER_SUITES: Dict[str, Callable[[int, DirichletCharacter, int], Optional[str]]] = {
    "five-way": _five_way,
    "polynomials": _polynomials,
    "appell": _appell,
    "addition": _addition,
    "brec": _brec,
    "appendix": _appendix,
}


def _grid(name: str, max_N: int, max_n: int, max_f: int, moduli=None) -> List[Tuple[str, Callable]]:
    if name == "trivial":
        return [(f"N={N}", (lambda N=N: _trivial(N, max_n))) for N in range(1, max_N + 1)]
    check = _CHARACTER_SUITES[name]
    return [
        (f"N={N}, {character_id(chi)}", (lambda N=N, chi=chi: check(N, chi, max_n)))
        for N in range(1, max_N + 1)
        for chi in _characters(max_f, moduli)
    ]


def run_suite(
    name: str,
    max_N: int,
    max_n: int,
    max_f: int,
    workers: int = 1,
    moduli: Optional[Sequence[int]] = None,
) -> List[SuiteReport]:
    """Exécute une suite ("all" pour toutes) ; un rapport par suite, triés par nom"""
    if name != "all" and name not in SUITES:
        raise ValueError(f"Suite inconnue: {name}")
    if min(max_N, max_f) < 1 or max_n < 0:
        raise ValueError(f"Bornes invalides: N≤{max_N}, n≤{max_n}, f≤{max_f}")
    names = SUITES if name == "all" else (name,)

    cells = [(suite, label, check) for suite in names for label, check in _grid(suite, max_N, max_n, max_f, moduli)]
    logger.info(f"Vérification: {len(cells)} cellules, {len(names)} suite(s), {workers} worker(s)")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda cell: _cell(*cell), cells))
    else:
        results = [_cell(*cell) for cell in cells]

    reports = {suite: SuiteReport(suite) for suite in names}
    for result in results:
        reports[result.suite].add(result)
        if not result.ok:
            logger.warning(f"❌ {result.suite} [{result.label}]: {result.detail}")
    for report in reports.values():
        report.failures.sort(key=lambda r: r.label)
    return sorted(reports.values(), key=lambda r: r.name)
