"""
🧩 Sommes sur les compositions T_r(k) (parts ≥ 1) et T̃_r(k) (parts ≥ 0)

T_r(k) = (−N!)^r Σ_{i_1+..+i_r=k} Π 1/(N+i_j)!
"""

import itertools
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

logger = logging.getLogger(__name__)

STRICT = "strict"
WEAK = "weak"


@dataclass(frozen=True)
class CompositionSums:
    """Table T_r(k) (ou T̃_r(k)) indexée [r][k], 0 ≤ r, k ≤ bound"""

    N: int
    kind: str
    table: Tuple[Tuple[Fraction, ...], ...]

    @property
    def bound(self) -> int:
        return len(self.table) - 1

    def __call__(self, r: int, k: int) -> Fraction:
        return self.table[r][k]

    def column_sum(self, k: int) -> Fraction:
        """Σ_{r=0}^{k} T_r(k)"""
        return sum((self.table[r][k] for r in range(k + 1)), Fraction(0))


_tables: Dict[Tuple[int, str], List[List[Fraction]]] = {}
_lock = threading.Lock()


def _square(N: int, kind: str, bound: int) -> List[List[Fraction]]:
    if kind not in (STRICT, WEAK):
        raise ValueError(f"Type de composition inconnu: {kind}")
    if N < 1 or bound < 0:
        raise ValueError(f"Paramètres invalides: N={N}, bound={bound}")
    with _lock:
        cached = _tables.get((N, kind))
        if cached is not None and len(cached) > bound:
            return cached

        # T_r(k) = (−N!) Σ_i T_{r−1}(k−i) / (N+i)!, i ≥ 1 (strict) ou i ≥ 0 (weak)
        first = 1 if kind == STRICT else 0
        weights = [Fraction(-factorial(N), factorial(N + i)) for i in range(bound + 1)]
        rows = [[Fraction(1)] + [Fraction(0)] * bound]
        for r in range(1, bound + 1):
            previous = rows[-1]
            row = []
            for k in range(bound + 1):
                total = Fraction(0)
                for i in range(first, k + 1):
                    if previous[k - i]:
                        total += weights[i] * previous[k - i]
                row.append(total)
            rows.append(row)
        _tables[(N, kind)] = rows
        logger.debug(f"Table {kind} N={N} construite jusqu'à {bound}")
        return rows


def composition_sums(N: int, kind: str, bound: int) -> CompositionSums:
    rows = _square(N, kind, bound)
    return CompositionSums(N, kind, tuple(tuple(row[: bound + 1]) for row in rows[: bound + 1]))


def t_strict(N: int, r: int, k: int) -> Fraction:
    """T_r(k), parts ≥ 1"""
    if r < 0 or k < 0:
        raise ValueError(f"Indices négatifs: r={r}, k={k}")
    return _square(N, STRICT, max(r, k))[r][k]


def t_weak(N: int, r: int, k: int) -> Fraction:
    """T̃_r(k), parts ≥ 0"""
    if r < 0 or k < 0:
        raise ValueError(f"Indices négatifs: r={r}, k={k}")
    return _square(N, WEAK, max(r, k))[r][k]


def _enumerate(N: int, r: int, k: int, smallest: int) -> Fraction:
    if r == 0:
        return Fraction(1 if k == 0 else 0)
    total = Fraction(0)
    for parts in itertools.product(range(smallest, k + 1), repeat=r):
        if sum(parts) != k:
            continue
        term = Fraction(1)
        for i in parts:
            term /= factorial(N + i)
        total += term
    return (-factorial(N)) ** r * total


def t_strict_enumerated(N: int, r: int, k: int) -> Fraction:
    """T_r(k) par énumération explicite (petits k seulement)"""
    return _enumerate(N, r, k, 1)


def t_weak_enumerated(N: int, r: int, k: int) -> Fraction:
    """T̃_r(k) par énumération explicite (petits k seulement)"""
    return _enumerate(N, r, k, 0)
