"""Command-line front end.

Exit status: 0 for an answer, 1 for a usage or domain error, 2 when the
query lies outside the range where the answer is established.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catalog import LieGroup, parse_group, rational_type
from .errors import UNKNOWN, DomainError, NotCovered, PiKernelError
from .invariants import INF, e_sharp_group, ghost_monomials, sz_lz, z_infty_finite, z_n_group
from .localization import CircleTimes, covering_reduction, decompose, is_p_regular
from .psi import PsiGroup
from .serre import serre_pi
from .tables import COLUMNS, FAMILIES, family_rows, format_table, parse_range, threshold_rows

EXIT_OK, EXIT_USER, EXIT_UNCOVERED = 0, 1, 2

_CITED_DECOMPOSITIONS = {("F4", 5), ("E6", 5), ("E8", 11), ("E8", 13)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Uncovered(Exception):
    """Raised by a handler when the answer is ``UNKNOWN``."""


def _parse_n(text: str):
    if text.lower() in ("inf", "infinity", "∞"):
        return INF
    try:
        value = int(text)
    except ValueError:
        raise DomainError(f"n must be a positive integer or 'inf', got {text!r}") from None
    return value


def _n_json(n):
    return "inf" if n == INF else n


# handlers return (query, result_json, coverage)


def _zgroup(args):
    g = parse_group(args.group)
    n = _parse_n(args.n)
    selector = "odd" if args.odd else args.p
    query = {"verb": "zgroup", "group": g.label, "n": _n_json(n), "p": selector}
    result = z_n_group(g, n, selector)
    if result is UNKNOWN:
        raise Uncovered(
            f"Z^{args.n}({g}) is not determined at this localization: Z^n(G2) is known "
            "integrally only for n <= 14; its odd-primary part is Z/21 for every n >= 11"
        )
    return query, result.to_json(), "proved"


def _esharp(args):
    g = parse_group(args.group)
    n = _parse_n(args.n)
    query = {"verb": "esharp", "group": g.label, "n": _n_json(n)}
    result = e_sharp_group(g, n)
    if result is UNKNOWN:
        raise Uncovered(
            f"E_#^{args.n}({g}) is determined only in the stable range "
            "(n >= 5 for SU(3), n >= 7 for Sp(2))"
        )
    return query, result.to_json(), "proved"


def _invariants(args):
    g = parse_group(args.group)
    query = {"verb": "invariants", "group": g.label, "p": args.p}
    report = sz_lz(g, args.p)
    out = report.to_json()
    out["text"] = f"sz={report.sz} lz={report.lz}"
    return query, out, "proved"


def _decompose(args):
    g = parse_group(args.group)
    p = args.p
    query = {"verb": "decompose", "group": g.label, "p": p}
    core = covering_reduction(g, p)
    circle = isinstance(core, CircleTimes)
    if circle:
        core = core.group
    dec = decompose(core, p)
    out = dec.to_json()
    if circle or core != g:
        out["group"] = g.label
        out["reduced_to"] = core.label
    if circle:
        out["factors"] = [{"type": "sphere", "dim": 1}] + out["factors"]
        out["text"] = f"S1 x {out['text']}"
    return query, out, _decomposition_coverage(core, p)


def _decomposition_coverage(g: LieGroup, p: int) -> str:
    if is_p_regular(g, p) or (g.family, p) in _CITED_DECOMPOSITIONS or g.family == "SU":
        return "proved"
    sp_rank = {"Sp": g.n, "Spin": (g.n - 1) // 2 if g.n % 2 else (g.n - 2) // 2}.get(g.family)
    if sp_rank is not None and sp_rank < p - 1:
        return "proved"
    return "derived"


def _finiteness(args):
    g = parse_group(args.group)
    query = {"verb": "finiteness", "group": g.label}
    finite = z_infty_finite(g)
    out = {"kind": "finiteness", "finite": finite, "witness": None}
    if finite:
        out["text"] = "finite"
    else:
        rtype = rational_type(g)
        first = ghost_monomials(g)[0]
        parts, target = first.degrees(rtype)
        out["witness"] = {"degrees": list(parts), "target": target}
        out["text"] = "infinite (" + " * ".join(f"x{d}" for d in parts) + f" in degree {target})"
    return query, out, "derived"


def _psi_eval(args):
    P = PsiGroup(args.m, args.n)
    g = P.evaluate(args.word)
    query = {"verb": "psi-eval", "m": args.m, "n": args.n, "word": args.word}
    out = {"kind": "psi_element", "a": g.a, "b": g.b, "c": g.c, "text": P.render(g)}
    return query, out, "derived"


def _serre_pi(args):
    query = {"verb": "serre-pi", "sphere": args.sphere, "stem": args.stem, "p": args.p}
    return query, serre_pi(args.sphere, args.stem, args.p).to_json(), "proved"


def _table(args):
    if args.thresholds:
        header = ["group", "p-regular when", "sz_p", "lz_p"]
        rows = threshold_rows()
        query = {"verb": "table", "thresholds": True}
    else:
        if args.family is None:
            raise DomainError("table needs --family or --thresholds")
        columns = [c.strip() for c in args.columns.split(",") if c.strip()]
        bad = [c for c in columns if c not in COLUMNS]
        if bad:
            raise DomainError(f"unknown column(s) {', '.join(bad)}; choose from {', '.join(COLUMNS)}")
        header = ["group", "p"] + columns
        rows = family_rows(args.family, parse_range(args.params), parse_range(args.primes), columns)
        query = {
            "verb": "table",
            "family": args.family,
            "params": args.params,
            "primes": args.primes,
            "columns": columns,
        }
    out = {"kind": "table", "header": header, "rows": rows, "text": format_table(header, rows).rstrip("\n")}
    return query, out, "derived"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pikernel", description="pi_*-kernels of compact Lie groups")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, handler, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(handler=handler)
        return sp

    sp = add("zgroup", _zgroup, "Z^n(G) for SU3, Sp2, G2")
    sp.add_argument("group")
    sp.add_argument("--n", required=True, help="positive integer or 'inf'")
    where = sp.add_mutually_exclusive_group()
    where.add_argument("--p", type=int, help="localize at this prime")
    where.add_argument("--odd", action="store_true", help="keep only the odd-primary part")

    sp = add("esharp", _esharp, "E_#^n(G) for SU3, Sp2")
    sp.add_argument("group")
    sp.add_argument("--n", required=True)

    sp = add("invariants", _invariants, "sz and lz, rationally or at a prime")
    sp.add_argument("group")
    sp.add_argument("--p", type=int, help="prime (rational when omitted)")

    sp = add("decompose", _decompose, "p-local product decomposition")
    sp.add_argument("group")
    sp.add_argument("--p", type=int, required=True)

    sp = add("finiteness", _finiteness, "is Z^inf(G) finite?")
    sp.add_argument("group")

    sp = add("psi-eval", _psi_eval, "normal form of a word in Psi(m,n)")
    sp.add_argument("word", nargs="?", default="")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("serre-pi", _serre_pi, "p-local pi_{d+t}(S^d) in the Serre range")
    sp.add_argument("--sphere", type=int, required=True)
    sp.add_argument("--stem", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("table", _table, "tabulate invariants over a family and a prime range")
    sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--params", help="family parameter range, e.g. 2..8")
    sp.add_argument("--primes", help="prime range, e.g. 3..13")
    sp.add_argument("--columns", default=",".join(COLUMNS))
    sp.add_argument("--thresholds", action="store_true", help="the p-regularity threshold table")
    return parser


def _emit(payload: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        result = payload["result"]
        out.write((result.get("text") or result.get("reason", "")) + "\n")


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        err.write(f"{exc}\n{parser.format_usage()}")
        return EXIT_USER
    try:
        query, result, coverage = args.handler(args)
    except (Uncovered, NotCovered) as exc:
        reason = str(exc)
        payload = {
            "query": {"verb": args.verb, "argv": list(argv)},
            "result": {"kind": "unknown", "reason": reason, "text": f"unknown: {reason}"},
            "coverage": "unknown",
        }
        _emit(payload, args.json, out)
        return EXIT_UNCOVERED
    except PiKernelError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USER
    _emit({"query": query, "result": result, "coverage": coverage}, args.json, out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
