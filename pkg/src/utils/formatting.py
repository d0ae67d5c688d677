"""
🖨️ Rendu des valeurs exactes : JSON structuré, CSV et texte via pandas
"""

import csv
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from src.arith.exactnum import (
    CyclotomicNumber,
    cyc_to_canonical_str,
    cyc_to_complex,
    cyc_to_json,
    rational_to_str,
)
from src.arith.polynomial import GHBPolynomial
from src.characters.dirichlet import DirichletCharacter, character_id, conductor

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")


def value_to_json(value: Any) -> Any:
    if isinstance(value, GHBPolynomial):
        return {"order": value.order, "coeffs": [cyc_to_json(c) for c in value.coeffs]}
    if isinstance(value, CyclotomicNumber):
        return cyc_to_json(value)
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return rational_to_str(value)
    return value


def poly_to_canonical_str(p: GHBPolynomial) -> str:
    """"(c_k)*x^k + ...; order=m", coefficients sans leur suffixe d'ordre"""
    terms = []
    for k, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        body = cyc_to_canonical_str(c).rsplit(";", 1)[0]
        if k == 0:
            terms.append(f"({body})")
        elif k == 1:
            terms.append(f"({body})*x")
        else:
            terms.append(f"({body})*x^{k}")
    return f"{' + '.join(terms) if terms else '0'}; order={p.order}"


def value_to_cell(value: Any) -> Any:
    if isinstance(value, GHBPolynomial):
        return poly_to_canonical_str(value)
    if isinstance(value, CyclotomicNumber):
        return cyc_to_canonical_str(value)
    if isinstance(value, Fraction):
        return rational_to_str(value)
    return value


def approx_decimal(value: Any, digits: int = 12) -> str:
    """Approximation décimale (inexacte) d'un nombre ; vide pour un polynôme"""
    if isinstance(value, GHBPolynomial):
        return ""
    z = cyc_to_complex(value) if isinstance(value, CyclotomicNumber) else complex(float(value))
    eps = 10 ** -digits
    real = 0.0 if abs(z.real) < eps else z.real
    imag = 0.0 if abs(z.imag) < eps else z.imag
    if not imag:
        return f"{real:.{digits}g}"
    sign = "+" if imag > 0 else "-"
    return f"{real:.{digits}g}{sign}{abs(imag):.{digits}g}i"


def character_to_json(chi: DirichletCharacter) -> Dict[str, Any]:
    return {
        "id": character_id(chi),
        "modulus": chi.modulus,
        "index": chi.index,
        "order": chi.order,
        "parity": chi.parity,
        "conductor": conductor(chi),
        "primitive": chi.primitive,
        "values": [cyc_to_json(v) for v in chi.values],
    }


def character_row(chi: DirichletCharacter) -> Dict[str, Any]:
    """Ligne plate pour CSV/texte"""
    return {
        "index": chi.index,
        "order": chi.order,
        "parity": chi.parity,
        "conductor": conductor(chi),
        "primitive": chi.primitive,
        "values": " | ".join(cyc_to_canonical_str(v).rsplit(";", 1)[0] for v in chi.values),
    }


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_table(rows: Sequence[Dict[str, Any]], fmt: str, columns: Optional[List[str]] = None) -> str:
    """CSV (valeurs non numériques entre guillemets) ou texte aligné"""
    if fmt not in ("csv", "text"):
        raise ValueError(f"Format tabulaire inconnu: {fmt}")
    frame = pd.DataFrame([{k: value_to_cell(v) for k, v in row.items()} for row in rows], columns=columns)
    if fmt == "csv":
        return frame.to_csv(index=False, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    if frame.empty:
        return "\n"
    return frame.to_string(index=False) + "\n"
