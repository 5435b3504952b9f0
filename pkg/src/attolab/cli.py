"""Command line interface.

Exit codes: 0 pass/member, 1 fail/non-member, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

import numpy as np

from . import serialize
from .blaschke import ZERO_CAP
from .characterize import (
    Variant,
    equivalence_suite,
    membership,
    recover_symbol,
    series_order,
    series_terms,
)
from .exceptions import AttoError, DegenerateSubspaceWarning, NotAMember
from .laurent import MAX_DEGREE, laurent_samples, parse_laurent
from .model_space import basis_pair, tm_basis
from .operators import atto_matrix, compressed_shift, modified_shift
from .suite import RunConfig, format_table, report_dict, run_suite


class UsageError(Exception):
    pass


def _read_json(arg: str):
    """Inline JSON, ``-`` for stdin, or a file path."""
    text = arg.strip()
    try:
        if text == "-":
            return json.load(sys.stdin)
        if text.startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(arg).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {arg[:40]!r}: {exc}") from exc


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _pow2(text: str) -> int:
    n = int(text)
    if n < 512 or n & (n - 1):
        raise argparse.ArgumentTypeError("--quad-nodes must be a power of two >= 512")
    return n


def _blaschke(args, name: str):
    raw = getattr(args, name)
    if raw is None:
        raise UsageError(f"--{name} is required")
    return serialize.blaschke_from_json(_read_json(raw), cap=args.zero_cap)


def _operator(args):
    if args.operator is None:
        raise UsageError("--operator is required")
    return serialize.operator_from_json(_read_json(args.operator), args.quad_nodes, cap=args.zero_cap)


def _symbol_samples(args, dom, cod):
    text = args.symbol
    if text is None:
        raise UsageError("--symbol is required")
    if text.strip().startswith("{") or Path(text).suffix == ".json":
        obj = _read_json(text)
        if "laurent" in obj:
            coeffs = {int(k): serialize.complex_from_json(v) for k, v in obj["laurent"].items()}
            if any(abs(k) > MAX_DEGREE for k in coeffs):
                raise UsageError(f"Laurent exponents must satisfy |k| <= {MAX_DEGREE}")
            return laurent_samples(coeffs, dom.grid.nodes)
        return serialize.pair_from_json(obj, dom, cod).phi_samples()
    return laurent_samples(parse_laurent(text), dom.grid.nodes)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_build(args) -> int:
    alpha = _blaschke(args, "alpha")
    beta = serialize.blaschke_from_json(_read_json(args.beta), cap=args.zero_cap) if args.beta else alpha
    dom, cod = basis_pair(alpha, beta, args.quad_nodes)
    _emit(serialize.operator_to_json(atto_matrix(dom, cod, _symbol_samples(args, dom, cod))))
    return 0


def cmd_shift(args) -> int:
    alpha = _blaschke(args, "alpha")
    basis = tm_basis(alpha, args.quad_nodes)
    S = modified_shift(basis, args.a) if args.a else compressed_shift(basis)
    _emit(serialize.operator_to_json(S))
    return 0


def cmd_membership(args) -> int:
    A = _operator(args)
    if args.variant == "all":
        rep = equivalence_suite(A, args.tol, args.seed)
        _emit({
            "verdict": rep.verdict,
            "agree": rep.agree,
            "results": [dict(label=label, **serialize.result_to_json(r)) for label, r in rep.results],
        })
        return 0 if rep.verdict else 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateSubspaceWarning)
        res = membership(A, Variant.parse(args.variant), args.tol, args.a, args.b)
    _emit(serialize.result_to_json(res))
    return 0 if res.verdict else 1


def cmd_recover(args) -> int:
    A = _operator(args)
    try:
        pair = recover_symbol(A, args.tol)
    except NotAMember as exc:
        print(f"not a member: {exc}", file=sys.stderr)
        return 1
    _emit(serialize.pair_to_json(pair))
    return 0


def cmd_series_check(args) -> int:
    if args.operator is not None:
        A = _operator(args)
    else:
        alpha = _blaschke(args, "alpha")
        beta = serialize.blaschke_from_json(_read_json(args.beta), cap=args.zero_cap) if args.beta else alpha
        dom, cod = basis_pair(alpha, beta, args.quad_nodes)
        A = atto_matrix(dom, cod, _symbol_samples(args, dom, cod))
    try:
        pair = recover_symbol(A, args.tol)
    except NotAMember as exc:
        print(f"not a member: {exc}", file=sys.stderr)
        return 1
    N = args.terms if args.terms is not None else series_order(
        A.domain.alpha.zeros + A.codomain.alpha.zeros, args.tol)
    scale = max(1.0, A.fro())
    errs = [float(np.linalg.norm(S.entries - A.entries) / scale) for S in series_terms(pair, N)]
    monotone = all(b <= a + 1e-12 for a, b in zip(errs, errs[1:]))
    ok = errs[-1] <= args.tol and monotone
    _emit({"terms": N, "residual": errs[-1], "monotone": monotone, "passed": ok})
    return 0 if ok else 1


def cmd_suite(args) -> int:
    cfg = RunConfig(
        tol=args.tol,
        quad_nodes=args.quad_nodes,
        seed=args.seed,
        deg_alpha=args.deg_alpha,
        deg_beta=args.deg_beta,
        trials=args.trials,
    )
    results = run_suite(cfg)
    report = report_dict(cfg, results, timings=args.timings)
    _emit(report)
    print(format_table(results), file=sys.stderr)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", help="Blaschke product JSON (inline, file, or -)")
    common.add_argument("--beta", help="Blaschke product JSON; defaults to --alpha")
    common.add_argument("--operator", help="OperatorMatrix JSON (inline, file, or -)")
    common.add_argument("--symbol", help="Laurent expression in z/zbar, or symbol JSON")
    common.add_argument("--variant", default="t1", choices=["t1", "c2", "c3a", "c3b", "si", "all"])
    common.add_argument("--tol", type=float, default=1e-8)
    common.add_argument("--quad-nodes", type=_pow2, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--deg-alpha", type=int, default=6)
    common.add_argument("--deg-beta", type=int, default=6)
    common.add_argument("--a", type=_complex, default=0j)
    common.add_argument("--b", type=_complex, default=0j)
    common.add_argument("--terms", type=int, default=None, help="series-check: number of terms")
    common.add_argument("--zero-cap", type=float, default=ZERO_CAP,
                        help="maximum zero modulus (raising it warns)")
    common.add_argument("--timings", action="store_true", help="suite: include elapsed times in JSON")

    parser = argparse.ArgumentParser(prog="attolab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, hlp in [
        ("build", cmd_build, "matrix of A_phi from --alpha/--beta/--symbol"),
        ("shift", cmd_shift, "compressed (or modified, with --a) shift on K_alpha"),
        ("membership", cmd_membership, "test an operator with one or all variants"),
        ("recover", cmd_recover, "recover the normalized symbol pair"),
        ("series-check", cmd_series_check, "check convergence of the telescoping series"),
        ("suite", cmd_suite, "run the seeded property suite"),
    ]:
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, AttoError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
