"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .apolarity import as_dual, hilbert_function
from .classify3 import (
    default_workers,
    predicted_profile,
    predicted_profile_l2,
    small_part_jordan_type,
    valid_parameters_l2,
    valid_parameters_l3,
    verify_classification,
    witness_generator,
)
from .jordan import (
    InvalidRankMatrixError,
    jdt_from_rank,
    jdt_prime,
    jordan_degree_type,
    jordan_type,
    rank_matrix,
)
from .poly import PolynomialSyntaxError, parse_linear_form, parse_polynomial
from .search import run_search
from .sequences import check_rank_matrix_conditions

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(args, payload: Any, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _generator(args):
    if not args.poly:
        raise InputError("--poly is required")
    F = parse_polynomial(args.poly, args.vars)
    return as_dual(F)


def _linear(args):
    if not args.linear:
        raise InputError("--linear is required")
    return parse_linear_form(args.linear, args.vars)


def _need_three(args) -> None:
    if args.vars != 3:
        raise InputError("this command works with three variables only")


def cmd_hilbert(args) -> int:
    h = hilbert_function(_generator(args))
    _emit(args, list(h), json.dumps(list(h), separators=(",", ":")))
    return EXIT_OK


def cmd_rank_matrix(args) -> int:
    M = rank_matrix(_generator(args), _linear(args))
    _emit(args, {"matrix": M.to_json()}, M.pretty())
    return EXIT_OK


def cmd_jdt(args) -> int:
    M = rank_matrix(_generator(args), _linear(args))
    Jp, J = jdt_prime(M), jdt_from_rank(M)
    S = jordan_degree_type(J)
    payload = {"jdt_prime": Jp.to_json(), "jdt": J.to_json(), "jordan_degree_type": S.to_json()}
    text = f"J'\n{Jp.pretty()}\nJ\n{J.pretty()}\nS = {S}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_jordan_type(args) -> int:
    F, ell = _generator(args), _linear(args)
    P = jordan_type(F, ell)
    S = jordan_degree_type(jdt_from_rank(rank_matrix(F, ell)))
    if S.partition != P:
        raise AssertionError(f"Jordan degree type {S} disagrees with Jordan type {P}")
    payload: dict = {"partition": list(P), "jordan_degree_type": S.to_json()}
    lines = [f"P = {P.compact()}", f"S = {S}"]
    if args.vars == 3:
        try:
            report = small_part_jordan_type(F, ell)
        except ValueError:
            report = None  # l^4 o F != 0: the small-parts formula does not apply
        if report is not None:
            if report.partition != P:
                raise AssertionError(f"small-parts formula gave {report.partition}, expected {P}")
            payload["small_part"] = report.to_json()
            lines.append(
                f"small parts: order {report.nilpotency_order}, params {report.params}"
                + (f", variant {report.variant}" if report.variant else "")
            )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _read_matrix(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("expected a JSON array of arrays (or an object with a 'matrix' key)")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in data for x in r):
        raise InputError("matrix entries must be integers")
    return data


def cmd_check_matrix(args) -> int:
    M = _read_matrix(args.file)
    report = check_rank_matrix_conditions(M)
    payload = report.to_json()
    try:
        S = jordan_degree_type(jdt_from_rank(M))
        payload["jordan_degree_type"] = S.to_json()
    except (InvalidRankMatrixError, ValueError):
        pass
    _emit(args, payload, report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def _parse_params(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"--params expects comma-separated integers, got {text!r}") from exc


def cmd_classify(args) -> int:
    _need_three(args)
    d = args.socle_degree
    triples = valid_parameters_l3(d)
    pairs = valid_parameters_l2(d)
    if args.params:
        want = _parse_params(args.params)
        if len(want) == 3:
            triples = [p for p in triples if (p.r, p.s, p.t) == want]
            pairs = []
        elif len(want) == 2:
            pairs = [p for p in pairs if (p.r, p.s) == want]
            triples = []
        else:
            raise InputError("--params takes r,s,t (l^3 = 0) or r,s (l^2 = 0)")
        if not triples and not pairs:
            raise InputError(f"{want} is not admissible for socle degree {d}")
    out_t, out_p, lines = [], [], [f"socle degree {d}: {len(triples)} triples, {len(pairs)} pairs"]
    for p in triples:
        profiles = []
        for prof in predicted_profile(p):
            w = witness_generator(p, prof.variant).poly.to_text(aliases=True)
            profiles.append(dict(prof.to_json(), witness=w))
            lines.append(
                f"{p.clause} r={p.r} s={p.s} t={p.t} [{prof.variant}] h_A={tuple(prof.h_A)} F={w}"
            )
        out_t.append(dict(p.to_json(), profiles=profiles))
    for p in pairs:
        prof = predicted_profile_l2(p)
        w = witness_generator(p).poly.to_text(aliases=True)
        out_p.append(dict(p.to_json(), profile=prof.to_json(), witness=w))
        lines.append(f"l^2=0 {p.clause} r={p.r} s={p.s} h_A={tuple(prof.h_A)} F={w}")
    _emit(args, {"socle_degree": d, "triples": out_t, "pairs": out_p}, "\n".join(lines))
    return EXIT_OK


def cmd_verify_classification(args) -> int:
    _need_three(args)
    entries = verify_classification(args.max_degree, workers=default_workers())
    bad = [e for e in entries if not e.ok]
    if bad:
        text = "\n".join(f"MISMATCH {e.params} {e.variant}: {e.note or e.observed}" for e in bad)
    else:
        text = f"all profiles verified ({len(entries)} witnesses)"
    _emit(args, {"checked": len(entries), "failures": [e.to_json() for e in bad]}, text)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_search(args) -> int:
    _need_three(args)
    summary = run_search(
        args.socle_degree,
        args.budget,
        args.seed,
        args.output,
        resume=args.resume,
        max_entry=args.max_entry,
    )
    c = summary["counts"]
    three = summary["at_most_three_diagonals"]
    text = (
        f"{summary['total']} candidates: "
        + ", ".join(f"{k} {v}" for k, v in c.items())
        + f"; at most three diagonals: {three['realized']}/{three['total']} realized"
        + f"\nlog: {args.output}"
    )
    _emit(args, summary, text)
    return EXIT_OK


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--vars", type=int, default=3, help="number of variables (default 3)")

    parser = argparse.ArgumentParser(
        prog="gorjordan",
        description="Rank matrices and Jordan types of linear forms on Artinian Gorenstein algebras.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_text: str, poly=False, linear=False):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if poly:
            p.add_argument("--poly", required=True, help="dual generator, e.g. 'X1^2*X2^2*X3^2'")
        if linear:
            p.add_argument("--linear", required=True, help="linear form, e.g. 'x1' or 'x+y'")
        p.set_defaults(func=func)
        return p

    add("hilbert", cmd_hilbert, "Hilbert function of S/Ann(F)", poly=True)
    add("rank-matrix", cmd_rank_matrix, "rank matrix of l on S/Ann(F)", poly=True, linear=True)
    add("jordan-type", cmd_jordan_type, "Jordan type and Jordan degree type", poly=True, linear=True)
    add("jdt", cmd_jdt, "Jordan degree type matrices J' and J", poly=True, linear=True)
    p = add("check-matrix", cmd_check_matrix, "test the necessary conditions on a matrix")
    p.add_argument("--file", required=True, help="JSON file holding the matrix")
    p = add("classify", cmd_classify, "admissible parameters, profiles and witnesses")
    p.add_argument("--socle-degree", type=int, required=True)
    p.add_argument("--params", help="r,s,t or r,s to select one entry")
    p = add("verify-classification", cmd_verify_classification, "recompute every witness")
    p.add_argument("--max-degree", type=int, required=True)
    p = add("search", cmd_search, "try to realize every condition-passing matrix")
    p.add_argument("--socle-degree", type=int, required=True)
    p.add_argument("--budget", type=_non_negative, default=400)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--output", default="search.ndjson")
    p.add_argument("--max-entry", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, PolynomialSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
