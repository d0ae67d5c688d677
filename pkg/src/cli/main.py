"""
🧮 Interface en ligne de commande

Sous-commandes : list-characters, compute, table, verify.
Les résultats vont sur stdout (déterministes), les logs sur stderr.
Codes de sortie : 0 succès, 1 désaccord ou identité en échec, 2 usage.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.arith.exactnum import parse_rational, rational_to_str
from src.bernoulli.verification import (
    NUMBER_METHODS,
    POINT_METHODS,
    POLY_METHODS,
    SUITES,
    MethodDisagreementError,
    compute_numbers,
    compute_polynomials,
    run_suite,
)
from src.characters.dirichlet import DirichletCharacter, enumerate_characters, get_character
from src.utils.config import ConfigManager
from src.utils.formatting import (
    FORMATS,
    approx_decimal,
    character_row,
    character_to_json,
    render_json,
    render_table,
    value_to_json,
)
from src.utils.logging_setup import LEVELS, setup_logging

logger = logging.getLogger(__name__)

INDEX_HELP = (
    "Indice du caractère dans l'énumération déterministe modulo f, ou 'all'. "
    "(Z/fZ)^* est décomposé par le théorème chinois : plus petite racine primitive "
    "pour p^k impair, 3 pour 4, (-1, 5) pour 2^k (k ≥ 3) ; les tuples d'exposants "
    "sont parcourus dans l'ordre lexicographique, l'indice 0 est le caractère trivial."
)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"entier attendu: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"entier ≥ 1 attendu: {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"entier attendu: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"entier ≥ 0 attendu: {value}")
    return value


def _index(text: str):
    return "all" if text == "all" else _non_negative_int(text)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _moduli(text: str) -> List[int]:
    return [_positive_int(part) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghb",
        description="Nombres et polynômes de Bernoulli hypergéométriques généralisés, en arithmétique exacte",
    )
    parser.add_argument("--log-level", choices=LEVELS, default=None, help="Niveau de logging")
    parser.add_argument("--config", default="config/config.json", help="Fichier de configuration JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    listing = sub.add_parser("list-characters", help="Lister les caractères modulo f")
    listing.add_argument("-f", "--modulus", type=_positive_int, required=True)
    listing.add_argument("--format", choices=FORMATS, default=None)

    def add_grid(p: argparse.ArgumentParser) -> None:
        p.add_argument("-f", "--modulus", type=_positive_int, required=True)
        p.add_argument("--N", dest="N", type=_positive_int, default=1)
        p.add_argument("--n-from", type=_non_negative_int, default=0)
        p.add_argument("--n-to", type=_non_negative_int, default=None, help="Défaut : --n-from")
        p.add_argument("--format", choices=FORMATS, default=None)
        p.add_argument("--decimal", action="store_true", help="Ajoute une approximation décimale (inexacte)")

    compute = sub.add_parser("compute", help="Calculer B_{N,n,χ} ou B_{N,n,χ}(x)")
    add_grid(compute)
    compute.add_argument("--index", type=_index, default=0, help=INDEX_HELP)
    compute.add_argument("--target", choices=("numbers", "polynomials"), default="numbers")
    compute.add_argument(
        "--method",
        choices=sorted(set(NUMBER_METHODS + POLY_METHODS + POINT_METHODS) | {"all"}),
        default="recurrence",
    )
    compute.add_argument("--x0", type=_rational, default=None, help="Point d'évaluation rationnel (polynômes)")

    table = sub.add_parser("table", help="Table de B_{N,n,χ} pour tous les caractères modulo f")
    add_grid(table)
    table.add_argument("--method", choices=NUMBER_METHODS + ("all",), default="recurrence")

    verify = sub.add_parser("verify", help="Exécuter une suite de vérification")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    verify.add_argument("--max-N", dest="max_N", type=_positive_int, default=None)
    verify.add_argument("--max-n", type=_non_negative_int, default=None)
    verify.add_argument("--max-f", type=_positive_int, default=None)
    verify.add_argument("--moduli", type=_moduli, default=None, help="Liste de modules, ex. 1,3,4 (remplace --max-f)")
    verify.add_argument("--workers", type=_positive_int, default=None)
    verify.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _characters(f: int, index) -> List[DirichletCharacter]:
    if index == "all":
        return list(enumerate_characters(f))
    return [get_character(f, index)]


def _n_range(args) -> range:
    n_to = args.n_from if args.n_to is None else args.n_to
    if n_to < args.n_from:
        raise ValueError(f"--n-to ({n_to}) < --n-from ({args.n_from})")
    return range(args.n_from, n_to + 1)


def cmd_list_characters(args, output: Dict[str, Any]) -> str:
    characters = enumerate_characters(args.modulus)
    logger.info(f"{len(characters)} caractère(s) modulo {args.modulus}")
    if output["format"] == "json":
        return render_json({"modulus": args.modulus, "characters": [character_to_json(c) for c in characters]})
    return render_table([character_row(c) for c in characters], output["format"])


def cmd_compute(args, output: Dict[str, Any]) -> str:
    n_range = _n_range(args)
    if args.target == "numbers":
        if args.method not in NUMBER_METHODS + ("all",):
            raise ValueError(f"Méthode {args.method} indisponible pour les nombres")
        if args.x0 is not None:
            raise ValueError("--x0 ne s'applique qu'à --target polynomials")

    results = []
    for chi in _characters(args.modulus, args.index):
        logger.info(f"Calcul {args.target} N={args.N}, {chi.id}, n={n_range.start}..{n_range.stop - 1}, méthode {args.method}")
        if args.target == "numbers":
            values = compute_numbers(args.N, chi, n_range.start, n_range.stop - 1, args.method)
        else:
            values = compute_polynomials(args.N, chi, n_range.start, n_range.stop - 1, args.method, args.x0)
        results.append((chi, values))

    if output["format"] == "json":
        payload = {"N": args.N, "target": args.target, "method": args.method}
        if args.x0 is not None:
            payload["x0"] = rational_to_str(args.x0)
        payload["results"] = []
        for chi, values in results:
            rows = []
            for n, value in zip(n_range, values):
                row = {"n": n, "value": value_to_json(value)}
                if args.method == "all":
                    row["methods_agree"] = True
                if output["decimal"]:
                    row["approx_decimal"] = approx_decimal(value, output["decimal_digits"])
                rows.append(row)
            payload["results"].append({"character": character_to_json(chi), "rows": rows})
        return render_json(payload)

    rows = []
    for chi, values in results:
        for n, value in zip(n_range, values):
            row = {"character": chi.id, "n": n, "value": value}
            if args.method == "all":
                row["methods_agree"] = True
            if output["decimal"]:
                row["approx_decimal"] = approx_decimal(value, output["decimal_digits"])
            rows.append(row)
    return render_table(rows, output["format"])


def cmd_table(args, output: Dict[str, Any]) -> str:
    n_range = _n_range(args)
    characters = enumerate_characters(args.modulus)
    columns = {
        f"idx={chi.index}": compute_numbers(args.N, chi, n_range.start, n_range.stop - 1, args.method)
        for chi in characters
    }
    logger.info(f"Table N={args.N}, f={args.modulus}: {len(columns)} colonne(s), méthode {args.method}")

    if output["format"] == "json":
        rows = []
        for i, n in enumerate(n_range):
            row = {"n": n, "values": {name: value_to_json(values[i]) for name, values in columns.items()}}
            if output["decimal"]:
                row["approx_decimal"] = {
                    name: approx_decimal(values[i], output["decimal_digits"]) for name, values in columns.items()
                }
            rows.append(row)
        return render_json({
            "modulus": args.modulus,
            "N": args.N,
            "method": args.method,
            "characters": [character_to_json(c) for c in characters],
            "rows": rows,
        })

    rows = []
    for i, n in enumerate(n_range):
        row = {"n": n}
        for name, values in columns.items():
            row[name] = values[i]
            if output["decimal"]:
                row[f"{name} (approx)"] = approx_decimal(values[i], output["decimal_digits"])
        rows.append(row)
    return render_table(rows, output["format"])


def cmd_verify(args, bounds: Dict[str, Any]) -> Tuple[str, bool]:
    max_N = args.max_N or bounds.get("max_N", 3)
    max_n = args.max_n if args.max_n is not None else bounds.get("max_n", 10)
    max_f = max(args.moduli) if args.moduli else (args.max_f or bounds.get("max_f", 8))
    workers = args.workers or bounds.get("workers", 1)

    reports = run_suite(args.suite, max_N, max_n, max_f, workers=workers, moduli=args.moduli)
    ok = all(r.ok for r in reports)

    if args.format == "json":
        return render_json({
            "suite": args.suite,
            "bounds": {"max_N": max_N, "max_n": max_n, "max_f": max_f, "moduli": args.moduli},
            "ok": ok,
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "failed": r.failed,
                    "failures": [{"label": c.label, "detail": c.detail} for c in r.failures],
                }
                for r in reports
            ],
        }), ok

    lines = [f"🔎 Vérification N≤{max_N}, n≤{max_n}, " + (f"f∈{{{','.join(map(str, args.moduli))}}}" if args.moduli else f"f≤{max_f}")]
    for r in reports:
        status = "✅" if r.ok else "❌"
        lines.append(f"{status} {r.name}: {r.passed} réussi(s), {r.failed} échec(s)")
        for c in r.failures:
            lines.append(f"    ❌ [{c.label}] {c.detail}")
    total_passed = sum(r.passed for r in reports)
    total = total_passed + sum(r.failed for r in reports)
    lines.append(f"📊 Résultat: {total_passed}/{total} cellules vérifiées")
    return "\n".join(lines) + "\n", ok


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        config = ConfigManager(args.config)
        log_config = config.get_logging_config()
        setup_logging(
            args.log_level or log_config.get("level", "INFO"),
            log_config.get("log_file") or None,
            log_config.get("format") or "%(levelname)s - %(message)s",
        )
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2

    output = dict(config.get_output_config())
    output.setdefault("decimal_digits", 12)
    if getattr(args, "format", None):
        output["format"] = args.format
    output["decimal"] = getattr(args, "decimal", False) or bool(output.get("decimal", False))
    if output.get("format") not in FORMATS:
        logger.error(f"Format de sortie inconnu: {output.get('format')}")
        return 2

    try:
        if args.command == "list-characters":
            text = cmd_list_characters(args, output)
        elif args.command == "compute":
            text = cmd_compute(args, output)
        elif args.command == "table":
            text = cmd_table(args, output)
        else:
            text, ok = cmd_verify(args, config.get_verification_config())
            sys.stdout.write(text)
            return 0 if ok else 1
    except MethodDisagreementError as e:
        logger.error(f"Désaccord entre méthodes: {e}")
        return 1
    except ValueError as e:
        logger.error(f"Arguments invalides: {e}")
        return 2

    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
