"""
🎭 Module des caractères de Dirichlet

Construction du groupe (Z/fZ)^* par le théorème chinois, énumération
déterministe des φ(f) caractères, conducteur, sommes de puissances tordues
S_n et S_n(x).
"""

import itertools
import logging
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Dict, List, Tuple

from src.arith.exactnum import (
    CyclotomicNumber,
    common_order,
    cyc_embed,
    euler_phi,
    zeta_power,
)
from src.arith.polynomial import GHBPolynomial

logger = logging.getLogger(__name__)

_CHARACTER_ID = re.compile(r"^\s*f\s*=\s*(\d+)\s*,\s*idx\s*=\s*(\d+)\s*$")


@dataclass(frozen=True)
class UnitGroup:
    """(Z/fZ)^* comme produit de groupes cycliques (résidu, ordre)"""

    modulus: int
    generators: Tuple[Tuple[int, int], ...]

    @property
    def exponent(self) -> int:
        return common_order(*(o for _, o in self.generators))

    @property
    def size(self) -> int:
        size = 1
        for _, o in self.generators:
            size *= o
        return size


def _factorize(f: int) -> List[Tuple[int, int]]:
    factors = []
    p = 2
    while p * p <= f:
        if f % p == 0:
            k = 0
            while f % p == 0:
                f //= p
                k += 1
            factors.append((p, k))
        p += 1
    if f > 1:
        factors.append((f, 1))
    return factors


def multiplicative_order(a: int, f: int) -> int:
    """Ordre multiplicatif de a modulo f (1 si f = 1)"""
    if gcd(a, f) != 1:
        raise ValueError(f"{a} n'est pas inversible modulo {f}")
    if f == 1:
        return 1
    order = 1
    x = a % f
    while x != 1:
        x = x * a % f
        order += 1
    return order


def _least_primitive_root(q: int) -> int:
    target = euler_phi(q)
    for g in range(2, q):
        if gcd(g, q) == 1 and multiplicative_order(g, q) == target:
            return g
    raise ArithmeticError(f"Pas de racine primitive modulo {q}")


def _crt_lift(residue: int, q: int, f: int) -> int:
    # relève residue mod q en un résidu mod f valant 1 sur le cofacteur
    cofactor = f // q
    if cofactor == 1:
        return residue % f
    return (residue * cofactor * pow(cofactor, -1, q) + q * pow(q, -1, cofactor)) % f


@lru_cache(maxsize=None)
def unit_group(f: int) -> UnitGroup:
    """Décomposition de (Z/fZ)^* en facteurs cycliques"""
    if f < 1:
        raise ValueError(f"Module invalide: {f}")
    generators: List[Tuple[int, int]] = []
    for p, k in _factorize(f):
        q = p ** k
        if p == 2:
            if k == 2:
                generators.append((_crt_lift(3, q, f), 2))
            elif k >= 3:
                generators.append((_crt_lift(q - 1, q, f), 2))
                generators.append((_crt_lift(5, q, f), 2 ** (k - 2)))
        else:
            generators.append((_crt_lift(_least_primitive_root(q), q, f), euler_phi(q)))
    group = UnitGroup(f, tuple(generators))
    logger.debug(f"Groupe des unités mod {f}: {group.generators}")
    return group


@lru_cache(maxsize=None)
def _discrete_logs(f: int) -> Dict[int, Tuple[int, ...]]:
    group = unit_group(f)
    logs: Dict[int, Tuple[int, ...]] = {}
    for exps in itertools.product(*(range(o) for _, o in group.generators)):
        a = 1 % f
        for (g, _), e in zip(group.generators, exps):
            a = a * pow(g, e, f) % f
        logs[a] = exps
    return logs


@dataclass(frozen=True)
class DirichletCharacter:
    """
    Caractère de Dirichlet modulo f, valeurs dans Q(ζ_m) avec m son ordre.

    values[a] contient χ(a) pour 0 ≤ a < f (zéro exact si pgcd(a, f) > 1).
    """

    modulus: int
    index: int
    exponents: Tuple[int, ...]
    order: int
    values: Tuple[CyclotomicNumber, ...]
    parity: int
    conductor: int
    primitive: bool

    def __call__(self, a: int) -> CyclotomicNumber:
        return char_eval(self, a)

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    @property
    def id(self) -> str:
        return character_id(self)


def _character_from_exponents(f: int, index: int, exponents: Tuple[int, ...]) -> DirichletCharacter:
    group = unit_group(f)
    orders = [o // gcd(e, o) for (_, o), e in zip(group.generators, exponents)]
    m = common_order(*orders)
    # χ(g_j) = ζ_m^{c_j}
    steps = [e * m // o for (_, o), e in zip(group.generators, exponents)]
    logs = _discrete_logs(f)
    zero = CyclotomicNumber.zero(m)
    values = []
    for a in range(f):
        log = logs.get(a % f) if gcd(a, f) == 1 else None
        if log is None:
            values.append(zero)
        else:
            values.append(zeta_power(m, sum(k * c for k, c in zip(log, steps))))
    values = tuple(values)

    if f > 2:
        parity = 1 if values[f - 1] == 1 else -1
    else:
        parity = 1
    cond = _conductor_of(f, values)
    return DirichletCharacter(
        modulus=f,
        index=index,
        exponents=exponents,
        order=m,
        values=values,
        parity=parity,
        conductor=cond,
        primitive=cond == f,
    )


def _conductor_of(f: int, values: Tuple[CyclotomicNumber, ...]) -> int:
    for d in range(1, f + 1):
        if f % d:
            continue
        if all(values[a] == 1 for a in range(f) if gcd(a, f) == 1 and a % d == 1 % d):
            return d
    return f


@lru_cache(maxsize=None)
def enumerate_characters(f: int) -> Tuple[DirichletCharacter, ...]:
    """Les φ(f) caractères modulo f, ordre lexicographique des exposants"""
    group = unit_group(f)
    characters = tuple(
        _character_from_exponents(f, index, tuple(exps))
        for index, exps in enumerate(itertools.product(*(range(o) for _, o in group.generators)))
    )
    logger.debug(f"{len(characters)} caractères modulo {f}")
    return characters


def get_character(f: int, index: int) -> DirichletCharacter:
    characters = enumerate_characters(f)
    if not 0 <= index < len(characters):
        raise ValueError(f"Indice {index} hors limites: {len(characters)} caractères modulo {f}")
    return characters[index]


def character_id(chi: DirichletCharacter) -> str:
    return f"f={chi.modulus},idx={chi.index}"


def parse_character_id(text: str) -> DirichletCharacter:
    match = _CHARACTER_ID.match(text)
    if not match:
        raise ValueError(f"Identifiant de caractère invalide: {text!r} (attendu f=<module>,idx=<indice>)")
    return get_character(int(match.group(1)), int(match.group(2)))


def char_eval(chi: DirichletCharacter, a: int) -> CyclotomicNumber:
    return chi.values[a % chi.modulus]


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def is_trivial(chi: DirichletCharacter) -> bool:
    return chi.order == 1


def primitive_of(chi: DirichletCharacter) -> DirichletCharacter:
    """Le caractère modulo le conducteur qui induit χ"""
    d = chi.conductor
    table = []
    for b in range(d):
        if gcd(b, d) != 1:
            table.append(None)
            continue
        lift = next(b + d * t for t in range(chi.modulus // d) if gcd(b + d * t, chi.modulus) == 1)
        table.append(chi.values[lift % chi.modulus])

    for candidate in enumerate_characters(d):
        m = common_order(candidate.order, chi.order)
        if all(
            value is None or cyc_embed(candidate.values[b], m) == cyc_embed(value, m)
            for b, value in enumerate(table)
        ):
            return candidate
    raise ArithmeticError(f"Aucun caractère modulo {d} n'induit {character_id(chi)}")


def power_sum(chi: DirichletCharacter, n: int) -> CyclotomicNumber:
    """S_n = Σ_{a=1}^{f} χ(a) a^n"""
    if n < 0:
        raise ValueError(f"Indice négatif: {n}")
    total = CyclotomicNumber.zero(chi.order)
    for a in range(1, chi.modulus + 1):
        value = chi.values[a % chi.modulus]
        if not value.is_zero():
            total = total + value * a ** n
    return total


_power_sums: Dict[DirichletCharacter, Tuple[CyclotomicNumber, ...]] = {}
_power_sums_lock = threading.Lock()


def power_sums(chi: DirichletCharacter, n: int) -> Tuple[CyclotomicNumber, ...]:
    """S_0 .. S_n ; seul le plus long préfixe est conservé par caractère"""
    with _power_sums_lock:
        known = _power_sums.get(chi, ())
    if len(known) > n:
        return known[: n + 1]
    extended = known + tuple(power_sum(chi, k) for k in range(len(known), n + 1))
    with _power_sums_lock:
        if len(_power_sums.get(chi, ())) < len(extended):
            _power_sums[chi] = extended
    return extended


def power_sum_poly(chi: DirichletCharacter, n: int) -> GHBPolynomial:
    """S_n(x) = Σ_a χ(a)(x+a)^n = Σ_k binom(n,k) S_k x^{n−k}"""
    if n < 0:
        raise ValueError(f"Indice négatif: {n}")
    sums = power_sums(chi, n)
    return GHBPolynomial(chi.order, tuple(sums[n - j] * comb(n, j) for j in range(n + 1)))


def shifted_power_sum(chi: DirichletCharacter, n: int, x0: Fraction) -> CyclotomicNumber:
    """S_n(x0) calculé directement par la somme sur a"""
    total = CyclotomicNumber.zero(chi.order)
    for a in range(1, chi.modulus + 1):
        value = chi.values[a % chi.modulus]
        if not value.is_zero():
            total = total + value * (Fraction(x0) + a) ** n
    return total


def trivial_character(f: int = 1) -> DirichletCharacter:
    return enumerate_characters(f)[0]
