"""Command-line front end.

Exit codes: 0 success, 1 self-test failure, 2 bad parameters or an
enumeration/size guard, 3 oracle mismatch, 4 a closed form that is not a
polynomial.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .charpoly import charpoly_path, charpoly_single_edge, charpoly_star, charpoly_starlike
from .chipfiring import EnumerationTooLarge, count_strata, critical_configs_Kk
from .firing_graph import build_firing_graph, cycle_part_cycles, to_dot
from .hypergraph import make_hyperpath, make_hyperstar, make_single_edge, make_starlike
from .oracle import DegenerateMinor, OracleTooLarge, verify_formula
from .polyalg import FactoredCharPoly, NotPolynomial, TPoly, format_factored

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_MISMATCH, EXIT_NOT_POLY = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARAM):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# JSON document


def to_document(F: FactoredCharPoly, metadata: dict | None = None, kind: str = "factored") -> dict:
    """Serialise ``F``; every integer becomes a decimal string."""
    return {
        "kind": kind,
        "k": F.k,
        "lambda_exponent": str(F.lambda_exponent),
        "factors": [
            {"poly_t": [str(c) for c in p.coeffs], "exponent": str(e)}
            for p, e in F.sorted_factors()
        ],
        "total_degree": str(F.degree()),
        "metadata": dict(metadata or {}),
    }


def from_document(doc: dict) -> FactoredCharPoly:
    """Inverse of :func:`to_document`; checks that ``total_degree`` is consistent."""
    if doc.get("kind") not in ("factored", "report"):
        raise ValueError(f"unknown document kind {doc.get('kind')!r}")
    k = int(doc["k"])
    F = FactoredCharPoly(k, int(doc["lambda_exponent"]))
    for item in doc["factors"]:
        F = F.mul_factor(TPoly(int(c) for c in item["poly_t"]), int(item["exponent"]))
    if F.degree() != int(doc["total_degree"]):
        raise ValueError(f"total_degree {doc['total_degree']} does not match the factors ({F.degree()})")
    return F


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# argument helpers


def _positive(name: str, minimum: int = 1):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}, got {value}")
        return value

    return parse


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _config(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"configuration must be comma-separated integers, got {text!r}")


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# charpoly


def _family(args):
    if args.family == "path":
        n, k = args.params
        return make_hyperpath(n, k), lambda: charpoly_path(n, k), {"n": n, "k": k}
    if args.family == "star":
        m, k = args.params
        return make_hyperstar(m, k), lambda: charpoly_star(m, k), {"m": m, "k": k}
    k, *arms = args.params
    return make_starlike(k, arms), lambda: charpoly_starlike(k, arms), {"k": k, "arms": arms}


def _check_params(args) -> None:
    need = {"path": 2, "star": 2}
    if args.family in need and len(args.params) != need[args.family]:
        raise CliError(f"{args.family} takes exactly {need[args.family]} integers")
    if args.family == "starlike" and len(args.params) < 2:
        raise CliError("starlike takes k followed by at least one arm length")
    k = args.params[0] if args.family == "starlike" else args.params[1]
    if k < 2:
        raise CliError(f"uniformity k must be >= 2, got {k}")


def cmd_charpoly(args) -> int:
    _check_params(args)
    H, build, params = _family(args)
    try:
        F = build()
    except NotPolynomial as exc:
        raise CliError(f"closed form is not a polynomial: {exc}", EXIT_NOT_POLY)

    verification = []
    mismatch = False
    notes = []
    if args.verify_at:
        try:
            rep = verify_formula(H, F, args.verify_at)
        except OracleTooLarge as exc:
            notes.append(f"oracle skipped: {exc}")
        else:
            for row in rep.rows:
                verification.append({
                    "lambda0": str(row.lambda0),
                    "formula": str(row.formula),
                    "oracle": None if row.oracle is None else str(row.oracle),
                    "equal": row.equal,
                    **({"error": row.error} if row.error else {}),
                })
                mismatch |= not row.equal

    metadata = {"family": args.family, "parameters": params, "tool_version": __version__}
    if verification:
        metadata["verification"] = verification
    if notes:
        metadata["notes"] = notes

    if args.format == "json":
        text = dumps_document(to_document(F, metadata))
    else:
        lines = [format_factored(F, args.format)]
        for v in verification:
            if v["equal"]:
                lines.append(f"verified at λ = {v['lambda0']}: oracle value {v['oracle']}")
            elif v["oracle"] is None:
                lines.append(f"NOT verified at λ = {v['lambda0']}: {v.get('error', 'no oracle value')}")
            else:
                lines.append(
                    f"MISMATCH at λ = {v['lambda0']}: formula {v['formula']} oracle {v['oracle']}"
                )
        lines += notes
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_MISMATCH if mismatch else EXIT_OK


# ---------------------------------------------------------------------------
# chipfire


def cmd_chipfire(args) -> int:
    if args.what == "critical":
        configs = critical_configs_Kk(args.k)
        print(len(configs))
        if args.list:
            for c in sorted(configs, key=lambda c: c.nonbank):
                print(c)
        return EXIT_OK
    if args.what == "strata":
        print(count_strata(args.n, args.k))
        return EXIT_OK

    H = make_hyperpath(args.n, args.k)
    if args.config is None:
        raise CliError("firing-graph needs --config")
    if len(args.config) != H.num_vertices - 1:
        raise CliError(f"--config needs {H.num_vertices - 1} values, got {len(args.config)}")
    FG = build_firing_graph(H, args.config)
    cycles = cycle_part_cycles(FG)
    print(f"root {FG.root}, stratum {FG.stratum}")
    print(f"{len(FG.nodes)} configurations, {len(FG.arrows)} arrows")
    print(f"{len(cycles)} cycle(s) of length(s) {sorted(len(c) for c in cycles)}, G' has {len(FG.gprime)} node(s)")
    if args.dot:
        Path(args.dot).write_text(to_dot(FG), encoding="utf-8")
        print(f"wrote {args.dot}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    if args.inject_fault:
        # negative control: a closed form with one extra factor must be caught
        F = charpoly_single_edge(3).mul_factor(TPoly([-1, 1]), 1)
        rep = verify_formula(make_single_edge(3), F, [Fraction(2)])
        print(rep)
        return EXIT_MISMATCH if not rep.ok else EXIT_FAIL

    results = run_all(quick=args.level == "quick")
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    if any(r.number == 7 for r in failed):
        return EXIT_MISMATCH
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hypercharpoly",
        description="Characteristic polynomials of hyperpaths, hyperstars and starlike hypergraphs.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("charpoly", help="factored characteristic polynomial")
    c.add_argument("family", choices=["path", "star", "starlike"])
    c.add_argument(
        "params", nargs="+", type=_positive("parameter"),
        help="path: n k | star: m k | starlike: k n_1 ... n_m",
    )
    c.add_argument("--format", choices=["text", "json", "latex"], default="text")
    c.add_argument("--verify-at", nargs="+", type=_rational, metavar="LAMBDA0",
                   help="compare with the Macaulay resultant at these rationals")
    c.add_argument("--out", help="write to this file instead of stdout")
    c.set_defaults(func=cmd_charpoly)

    f = sub.add_parser("chipfire", help="dollar-game enumerations")
    fsub = f.add_subparsers(dest="what", required=True)
    fc = fsub.add_parser("critical", help="number of critical configurations on K_k")
    fc.add_argument("k", type=_positive("k", 2))
    fc.add_argument("--list", action="store_true", help="also print the configurations")
    fs = fsub.add_parser("strata", help="stratum sizes of stable configurations on P_n^k")
    fs.add_argument("n", type=_positive("n"))
    fs.add_argument("k", type=_positive("k", 2))
    fg = fsub.add_parser("firing-graph", help="firing graph of a stable configuration on P_n^k")
    fg.add_argument("n", type=_positive("n"))
    fg.add_argument("k", type=_positive("k", 2))
    fg.add_argument("--config", type=_config, help="non-bank values of vertices 1..n(k-1), comma-separated")
    fg.add_argument("--dot", help="write the graph in DOT format to this file")
    f.set_defaults(func=cmd_chipfire)

    s = sub.add_parser("selftest", help="run the acceptance checks")
    s.add_argument("--level", choices=["quick", "full"], default="quick")
    s.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotPolynomial as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_POLY
    except (EnumerationTooLarge, OracleTooLarge, DegenerateMinor, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
