"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .actions import bernoulli_t, fundamental_action, fundamental_formal_action, verify_formal_action
from .algebra import check_lie_algebra, fmt_rational
from .extensions import kk_embed, verify_kk
from .formats import (InputError, document, dumps, format_series, format_vector, kk_embed_document,
                      load_algebra, load_extension, load_wreath_element, parse_element,
                      series_to_literal, variables)
from .wreath import WreathProduct, triangular_action, wreath_bracket

NEED_N = "N must be ≥ 2 for bracket verification"


class UsageError(Exception):
    pass


def _emit(args, lines: list[str], doc: dict) -> None:
    if args.format == "structured":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _require_bracket_degree(N: int) -> None:
    if N < 2:
        raise UsageError(NEED_N)


def cmd_check(args) -> int:
    alg = load_algebra(args.path, validate=False)
    report = check_lie_algebra(alg)
    lab = alg.labels
    violations = [{"kind": "antisymmetry", "basis": [lab[i], lab[j]]} for i, j in report.antisymmetry]
    violations += [{"kind": "jacobi", "basis": [lab[i], lab[j], lab[k]]} for i, j, k in report.jacobi]
    if report.ok:
        lines = [f"{alg.name}: valid Lie algebra of dimension {alg.dim}"]
    else:
        lines = [f"{alg.name}: INVALID"]
        lines += [f"  {v['kind']} violated at ({', '.join(v['basis'])})" for v in violations]
    _emit(args, lines, document("check", name=alg.name, dim=alg.dim, valid=report.ok, violations=violations))
    return 0 if report.ok else 1


def cmd_bernoulli(args) -> int:
    t = bernoulli_t(args.n)
    lines = [f"t_{k} = {fmt_rational(x)}" for k, x in enumerate(t)]
    _emit(args, lines, document("bernoulli", n=args.n, t=[fmt_rational(x) for x in t]))
    return 0


def cmd_fundamental_action(args) -> int:
    B = load_algebra(args.path)
    b = parse_element(args.element, B.dim)
    d = fundamental_action(B, b, args.degree)
    lines = format_series(d, "d", variables("y", B.dim), B.labels)
    _emit(args, lines, document("fundamental-action", algebra=B.name, b=[fmt_rational(x) for x in b],
                                N=args.degree, series=series_to_literal(d)))
    return 0


def cmd_wreath_bracket(args) -> int:
    A, B = load_algebra(args.a_path), load_algebra(args.b_path)
    W = WreathProduct(A, B, args.degree)
    u = load_wreath_element(args.left, A, B)
    v = load_wreath_element(args.right, A, B)
    w = wreath_bracket(W, u, v)
    lines = format_series(w.series, "a", variables("y", B.dim), A.labels)
    lines.append(f"point = {format_vector(w.point)}")
    _emit(args, lines, document("wreath-bracket", A=A.name, B=B.name, N=args.degree,
                                series=series_to_literal(w.series),
                                point=[fmt_rational(x) for x in w.point]))
    return 0


def cmd_triangular_action(args) -> int:
    A, B = load_algebra(args.a_path), load_algebra(args.b_path)
    W = WreathProduct(A, B, args.degree)
    D = fundamental_formal_action(A, args.degree)
    w = load_wreath_element(args.element, A, B)
    delta = triangular_action(W, D, w)
    names = variables("x", A.dim) + variables("y", B.dim)
    lines = format_series(delta, "Delta", names, [f"d/d{n}" for n in names])
    _emit(args, lines, document("triangular-action", A=A.name, B=B.name, N=args.degree,
                                series=series_to_literal(delta)))
    return 0


def cmd_kk_embed(args) -> int:
    ext, s = load_extension(args.path)
    c = parse_element(args.element, ext.C.dim)
    elem = kk_embed(ext, s, c, args.degree)
    lines = format_series(elem.series, "h", variables("y", ext.B.dim), ext.A.labels)
    lines.append(f"point = {format_vector(elem.point)}")
    _emit(args, lines, kk_embed_document(ext.C.name, ext.A.labels, ext.B.labels, c, args.degree, elem))
    return 0


def _fundamental_check(path: Path, N: int) -> dict:
    B = load_algebra(path)
    report = verify_formal_action(fundamental_formal_action(B, N), N - 1)
    return {"check": "fundamental-action", "input": path.name, "algebra": B.name,
            "degree": N - 1, "pass": report.ok, "failing_degrees": report.failing_degrees()}


def _kk_checks(path: Path, N: int, trials: int, seed: int) -> list[dict]:
    ext, s = load_extension(path)
    report = verify_kk(ext, s, N, trials, seed)
    degrees = sorted({d for _, ds, _ in report.homomorphism_failures for d in ds})
    return [
        {"check": "kk-homomorphism", "input": path.name, "degree": N - 1, "pairs": report.pairs_checked,
         "pass": report.homomorphism_ok, "failing_degrees": degrees},
        {"check": "kk-injectivity", "input": path.name, "rank": report.rank, "dim": report.dim,
         "pass": report.injectivity_ok},
    ]


_TITLES = {
    "fundamental-action": "fundamental action homomorphism",
    "kk-homomorphism": "KK homomorphism",
    "kk-injectivity": "KK injectivity",
}


def _report_checks(args, command: str, checks: list[dict]) -> int:
    ok = all(c["pass"] for c in checks)
    lines = []
    for c in checks:
        detail = ""
        if c.get("failing_degrees"):
            detail = f" (failing degrees {', '.join(map(str, c['failing_degrees']))})"
        elif "rank" in c:
            detail = f" (rank {c['rank']} of {c['dim']})"
        elif "degree" in c:
            detail = f" (through degree {c['degree']})"
        lines.append(f"{c['input']}: {_TITLES[c['check']]}: {'PASS' if c['pass'] else 'FAIL'}{detail}")
    lines.append("ALL PASS" if ok else "FAILURES PRESENT")
    params = {"N": args.degree}
    if hasattr(args, "trials"):
        params.update(trials=args.trials, seed=args.seed)
    _emit(args, lines, document(command, **params, passed=ok, checks=checks))
    return 0 if ok else 1


def cmd_verify_fundamental(args) -> int:
    _require_bracket_degree(args.degree)
    paths = [Path(p) for p in args.paths] or fixtures.algebra_paths()
    return _report_checks(args, "verify-fundamental", [_fundamental_check(p, args.degree) for p in paths])


def cmd_verify_kk(args) -> int:
    _require_bracket_degree(args.degree)
    checks = []
    for p in [Path(p) for p in args.paths] or fixtures.extension_paths():
        checks += _kk_checks(p, args.degree, args.trials, args.seed)
    return _report_checks(args, "verify-kk", checks)


def cmd_verify_all(args) -> int:
    _require_bracket_degree(args.degree)
    paths = [Path(p) for p in args.paths]
    algs = [p for p in paths if p.suffix == ".alg"] if paths else fixtures.algebra_paths()
    exts = [p for p in paths if p.suffix == ".ext"] if paths else fixtures.extension_paths()
    unknown = [p for p in paths if p.suffix not in (".alg", ".ext")]
    if unknown:
        raise UsageError(f"cannot tell whether {unknown[0]} is an algebra (.alg) or extension (.ext)")
    checks = [_fundamental_check(p, args.degree) for p in algs]
    for p in exts:
        checks += _kk_checks(p, args.degree, args.trials, args.seed)
    return _report_checks(args, "verify-all", checks)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("-N", "--degree", type=int, default=4, help="truncation order (default 4)")
    trials = argparse.ArgumentParser(add_help=False)
    trials.add_argument("--trials", type=int, default=10, help="random pairs in addition to basis pairs")
    trials.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="wreathlie", description="Wreath products of Lie algebras over Q.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate a Lie algebra file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bernoulli", parents=[common], help="coefficients of T e^T/(e^T - 1)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("fundamental-action", parents=[common, degree], help="series d_b of an element")
    p.add_argument("path")
    p.add_argument("--element", required=True, help='coordinates "c1,c2,..." (rationals p/q)')
    p.set_defaults(func=cmd_fundamental_action)

    p = sub.add_parser("wreath-bracket", parents=[common, degree], help="bracket in W(A, B)")
    p.add_argument("a_path", metavar="A.alg")
    p.add_argument("b_path", metavar="B.alg")
    p.add_argument("left", metavar="LEFT")
    p.add_argument("right", metavar="RIGHT")
    p.set_defaults(func=cmd_wreath_bracket)

    p = sub.add_parser("triangular-action", parents=[common, degree],
                       help="Delta of an element, with A acting on itself fundamentally")
    p.add_argument("a_path", metavar="A.alg")
    p.add_argument("b_path", metavar="B.alg")
    p.add_argument("element", metavar="ELEMENT")
    p.set_defaults(func=cmd_triangular_action)

    p = sub.add_parser("kk-embed", parents=[common, degree], help="embedding of an extension element")
    p.add_argument("path")
    p.add_argument("--element", required=True, help='coordinates "c1,c2,..." (rationals p/q)')
    p.set_defaults(func=cmd_kk_embed)

    p = sub.add_parser("verify-fundamental", parents=[common, degree],
                       help="homomorphism check of fundamental actions")
    p.add_argument("paths", nargs="*")
    p.set_defaults(func=cmd_verify_fundamental)

    p = sub.add_parser("verify-kk", parents=[common, degree, trials], help="check extension embeddings")
    p.add_argument("paths", nargs="*")
    p.set_defaults(func=cmd_verify_kk)

    p = sub.add_parser("verify-all", parents=[common, degree, trials],
                       help="all checks on the given (or bundled) files")
    p.add_argument("paths", nargs="*")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "degree", 0) < 0:
        print("error: N must be >= 0", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
