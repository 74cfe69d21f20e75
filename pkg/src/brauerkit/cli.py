"""Command-line interface.

Exit codes: 0 success, 1 terms not equal (``eq``) or engines disagree
(``normalize --engine both``), 2 input error, 3 verification failure,
4 resource cap refused.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import DimensionCapError, InputError, RewriteBudgetExceeded
from .matrep import rep_j, rep_k
from .parsing import parse_arrow, parse_term
from .render import render_ascii
from .rewrite import normalize_rewrite
from .semantics import eval_iota, eval_kappa, extract_normal_form
from .verify import SUITES, run_suite, symmetric_normal_forms

EXIT_OK = 0
EXIT_NOT_EQUAL = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_RESOURCE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="brauerkit", description="Normal forms, diagrams and matrices for SK_omega and SJ_omega.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    n = sub.add_parser("normalize", help="normal form of a term")
    n.add_argument("term")
    n.add_argument("--engine", choices=("rewrite", "diagram", "both"), default="rewrite")
    n.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("eq", help="decide equality of two terms")
    e.add_argument("t")
    e.add_argument("u")
    e.add_argument("--monoid", choices=("sk", "sj"), default="sk")

    d = sub.add_parser("diag", help="diagram of a term")
    d.add_argument("term")
    d.add_argument("--format", choices=("ascii", "json"), default="ascii")
    d.add_argument("--sk", action="store_true", help="include the circle count")

    m = sub.add_parser("matrix", help="matrix of an arrow term")
    m.add_argument("arrow")
    m.add_argument("--p", type=int, required=True, help="dimension parameter, at least 2")
    m.add_argument("--semiring", choices=("int", "bool"), default="int")
    m.add_argument("--dim-cap", type=int, default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max-len", type=int, default=None)
    v.add_argument("--max-index", type=int, default=None)
    v.add_argument("--seed", type=int, default=None)

    q = sub.add_parser("perm", help="normal forms of all permutations of n strands")
    q.add_argument("--n", type=int, required=True)
    return p


def _cmd_normalize(args, out) -> int:
    t = parse_term(args.term)
    rewrite = normalize_rewrite(t) if args.engine in ("rewrite", "both") else None
    diagram = extract_normal_form(eval_kappa(t)) if args.engine in ("diagram", "both") else None
    nf = rewrite if rewrite is not None else diagram
    agree = rewrite is None or diagram is None or rewrite == diagram
    if args.format == "json":
        obj = nf.to_json()
        obj["text"] = str(nf)
        if args.engine == "both":
            obj["agree"] = agree
            if not agree:
                obj["diagram"] = diagram.to_json()
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(f"{nf}\n")
        if not agree:
            out.write(f"diagram engine: {diagram}\n")
    if not agree:
        print("error: the rewriting and diagram engines disagree", file=sys.stderr)
        return EXIT_NOT_EQUAL
    return EXIT_OK


def _cmd_eq(args, out) -> int:
    t, u = parse_term(args.t), parse_term(args.u)
    if args.monoid == "sk":
        same = eval_kappa(t) == eval_kappa(u)
    else:
        same = eval_iota(t) == eval_iota(u)
    out.write(("equal" if same else "not equal") + "\n")
    return EXIT_OK if same else EXIT_NOT_EQUAL


def _cmd_diag(args, out) -> int:
    t = parse_term(args.term)
    sk = eval_kappa(t)
    value = sk if args.sk else sk.diagram
    if args.format == "json":
        out.write(json.dumps(value.to_json()) + "\n")
    else:
        out.write(render_ascii(value))
    return EXIT_OK


def _cmd_matrix(args, out) -> int:
    f = parse_arrow(args.arrow)
    if args.dim_cap is not None and args.dim_cap < 1:
        raise InputError("--dim-cap must be positive")
    rep = rep_k if args.semiring == "int" else rep_j
    mat = rep(f, args.p, args.dim_cap)
    out.write(json.dumps(mat.to_json()) + "\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    report = run_suite(args.suite, args.max_len, args.max_index, args.seed)
    out.write(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_perm(args, out) -> int:
    if args.n < 0:
        raise InputError("--n must be a natural number")
    forms = symmetric_normal_forms(args.n)
    for perm, nf in forms.items():
        out.write(f"{' '.join(map(str, perm)) or '()'}\t{nf}\n")
    out.write(f"count: {len(forms)}\n")
    return EXIT_OK


_COMMANDS = {
    "normalize": _cmd_normalize,
    "eq": _cmd_eq,
    "diag": _cmd_diag,
    "matrix": _cmd_matrix,
    "verify": _cmd_verify,
    "perm": _cmd_perm,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except DimensionCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RewriteBudgetExceeded as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def entry() -> None:
    sys.exit(main())
