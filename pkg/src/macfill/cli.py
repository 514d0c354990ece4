"""Command line front end: ``macfill <subcommand> ...``.

Exit codes: 0 success / pass, 1 counterexample or failed check, 2 usage error.
All output is JSON (or JSON lines for ``enumerate``) on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import colmaps, specializations, verify, words
from .core import (Filling, big_basement, decode_filling, filling_to_obj, longest_word,
                   column_sets, encode_column_sets)
from .enumeration import CLASSES, enumerate_fillings
from .poly import schur
from .stats import summary


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read_filling(path: str) -> Filling:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    try:
        return decode_filling(text)
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"bad filling: {e}")


def _basement(args, n: int, big: bool):
    if args.basement is None:
        values = longest_word(n)
    else:
        values = args.basement
    if len(values) != n:
        raise UsageError(f"basement has {len(values)} entries, shape has {n}")
    try:
        return big_basement(values) if big else tuple(values)
    except ValueError as e:
        raise UsageError(str(e))


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def _jobs(args) -> int:
    return max(1, args.jobs)


# -- subcommands --------------------------------------------------------------

def cmd_enumerate(args) -> int:
    big = args.cls in ("invfree", "fil")
    basement = _basement(args, len(args.shape), big)
    count = 0
    try:
        for F in enumerate_fillings(args.cls, args.shape, basement):
            count += 1
            _emit({"filling": filling_to_obj(F), **summary(F)})
    except ValueError as e:
        raise UsageError(str(e))
    _emit({"count": count})
    return 0


def cmd_stats(args) -> int:
    F = _read_filling(args.filling)
    _emit({"filling": filling_to_obj(F), **summary(F),
           "column_sets": json.loads(encode_column_sets(column_sets(F)))})
    return 0


def cmd_poly(args) -> int:
    kind = args.kind
    if kind == "schur":
        n = args.n or len(args.shape)
        p = schur(args.shape, n)
    elif kind == "key":
        p = specializations.key(args.shape)
    elif kind == "e0":
        p = specializations.e_t0(args.shape, _basement(args, len(args.shape), False))
    elif kind == "ht":
        p = specializations.htilde(args.shape, _basement(args, len(args.shape), True))
    else:
        p = specializations.htilde_t0(args.shape, _basement(args, len(args.shape), True))
    _emit(p.to_json_obj())
    return 0


def cmd_map(args) -> int:
    F = _read_filling(args.filling)
    try:
        if args.kind == "straighten":
            G = colmaps.straighten(F)
        else:
            if args.row is None:
                raise UsageError("--row is required for phi and psi")
            G = colmaps.apply_in_filling(args.kind, F, args.row - 1)
    except colmaps.InvariantBreach as e:
        _emit({"passed": False, "error": str(e)})
        return 1
    except ValueError as e:
        raise UsageError(str(e))
    from .stats import maj
    _emit({"input": filling_to_obj(F), "output": filling_to_obj(G),
           "basement_swapped": G.basement != F.basement,
           "column_sets_preserved": column_sets(G)[1:] == column_sets(F)[1:],
           "maj_preserved": maj(G) == maj(F)})
    return 0


def cmd_word(args) -> int:
    if args.kind in ("cw", "ccw"):
        if not args.filling:
            raise UsageError("--filling is required")
        F = _read_filling(args.filling)
        w = words.cw(F) if args.kind == "cw" else words.ccw(F)
        _emit({"word": list(w), "subwords": [list(s) for s in words.subword_decomposition(w)]})
        return 0
    if args.word is not None:
        w = tuple(int(ch) for ch in args.word) if "," not in args.word else _ints(args.word)
    elif args.filling:
        F = _read_filling(args.filling)
        w = words.cw(F) if args.kind == "charge" else words.ccw(F)
    else:
        raise UsageError("give --word or --filling")
    try:
        subs = words.subword_decomposition(w)
        fn = words.charge_standard if args.kind == "charge" else words.cocharge_standard
        parts = [fn(s) for s in subs]
    except ValueError as e:
        raise UsageError(str(e))
    _emit({"word": list(w), args.kind: sum(parts), "subwords": [list(s) for s in subs],
           "per_subword": parts})
    return 0


def cmd_rsk(args) -> int:
    F = _read_filling(args.filling)
    try:
        P, Q = words.rsk_filling(F)
    except ValueError as e:
        raise UsageError(str(e))
    _emit({"P": [list(r) for r in P], "Q": [list(r) for r in Q],
           "charge_P": words.charge_tableau(P)})
    return 0


def cmd_verify(args) -> int:
    fn = verify.SUITES[args.suite]
    kw = {"jobs": _jobs(args)}
    if args.n is not None:
        kw["n"] = args.n
    if args.size is not None:
        kw["size"] = args.size
    if args.suite == "operators":
        kw["seed"] = args.seed
    report = fn(**kw)
    _emit(report.to_obj())
    return 0 if report.passed else 1


def cmd_conjecture(args) -> int:
    fn = verify.CONJECTURES[args.which]
    kw = {"jobs": _jobs(args)}
    if args.n is not None:
        kw["n"] = args.n
    if args.size is not None:
        kw["size"] = args.size
    report = fn(**kw)
    obj = report.to_obj()
    if args.which == "key-expansion" and args.shape:
        obj["table"] = verify.key_expansion_table(args.shape)
    text = json.dumps(obj, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if report.passed else 1


def cmd_audit(args) -> int:
    report = colmaps.grid_audit(args.mode, jobs=_jobs(args))
    _emit(report)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    default_jobs = int(os.environ.get("MF_JOBS", "1") or 1)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--jobs", type=int, default=default_jobs,
                        help="worker processes (default: $MF_JOBS or 1)")

    ap = argparse.ArgumentParser(prog="macfill", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list a filling class")
    p.add_argument("--shape", type=_ints, required=True)
    p.add_argument("--basement", type=_ints, help="permutation (ranks for big basements); default w0")
    p.add_argument("--class", dest="cls", choices=CLASSES, default="naf")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", parents=[common], help="statistics of a filling")
    p.add_argument("--filling", required=True, help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", parents=[common], help="generating polynomials")
    p.add_argument("kind", choices=("e0", "ht", "ht0", "key", "schur"))
    p.add_argument("--shape", type=_ints, required=True)
    p.add_argument("--basement", type=_ints)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("map", parents=[common], help="column-set preserving maps")
    p.add_argument("kind", choices=("phi", "psi", "straighten"))
    p.add_argument("--filling", required=True)
    p.add_argument("--row", type=int, help="upper row of the swapped pair (1-based)")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("word", parents=[common], help="charge words and statistics")
    p.add_argument("kind", choices=("cw", "ccw", "charge", "cocharge"))
    p.add_argument("--filling")
    p.add_argument("--word", help="digits (1322133241214) or comma-separated letters")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("rsk", parents=[common], help="dual RSK of the charge biword")
    p.add_argument("--filling", required=True)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem suites")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--size", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[common], help="conjecture harnesses")
    p.add_argument("which", choices=sorted(verify.CONJECTURES))
    p.add_argument("--n", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--shape", type=_ints, help="also print the key table of this shape")
    p.add_argument("--out", help="also write the report to this file")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("audit-grids", parents=[common], help="2x3 grid audit")
    p.add_argument("--mode", choices=("coinv", "inv"), default="coinv")
    p.set_defaults(func=cmd_audit)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    random.seed(args.seed)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"macfill: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
