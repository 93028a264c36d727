"""Command-line front end.

Exit codes: 0 answered, 1 internal error, 2 invalid input, 3 verification
mismatch.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import BENCH_ENGINES, rows_to_csv, run_bench
from .engines import ENGINES, frobenius_number, residue_table, subset_sum
from .instance import (
    format_instance_file,
    parse_instance,
    parse_instance_file,
    random_instance,
)
from .minconv import as_costseq, is_mod_subadditive, is_subadditive
from .reductions import subadd_to_frobenius, subadd_to_uss
from .sumset import SolverStats
from .verify import default_table_engines, run_reduction_checks, run_verify

SCHEMA = 1


class UsageError(Exception):
    """Bad user input; maps to exit code 2."""


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def _read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args, raw: bool = False):
    """Items (validated instance, or raw ints with ``raw``) and target."""
    if bool(args.items) == bool(args.file):
        raise UsageError("give exactly one of --items or --file")
    if args.file:
        items, t = parse_instance_file(_read_text(args.file), normalize=raw)
    elif raw:
        items, t = parse_instance_file(args.items, normalize=True)
    else:
        items, t = parse_instance(args.items), None
    if getattr(args, "t", None) is not None:
        t = args.t
    return items, t


def cmd_subsetsum(args):
    items, t = _load(args, raw=True)
    if t is None:
        raise UsageError("a target is required (--t or a 't' line in the file)")
    out = subset_sum(items, t, args.algo, witness=args.witness)
    text = "feasible" if out["feasible"] else "infeasible"
    if out.get("witness") is not None:
        text += " " + " ".join(map(str, out["witness"]))
    _emit(args, out, text)
    return 0


def cmd_frobenius(args):
    inst, _ = _load(args)
    stats = SolverStats()
    F = frobenius_number(inst, args.algo, stats)
    _emit(args, {"frobenius": F}, str(F))
    return 0


def cmd_alltargets(args):
    inst, _ = _load(args)
    table = residue_table(inst, args.algo)
    _emit(args, table.to_json(), " ".join(map(str, table.tolist())))
    return 0


def _read_sequence(args):
    if bool(args.seq) == bool(args.file):
        raise UsageError("give exactly one of --seq or --file")
    text = args.seq if args.seq else _read_text(args.file)
    tokens = text.split()
    if not tokens:
        raise UsageError("empty sequence")
    try:
        return as_costseq(tokens)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad sequence: {exc}") from None


def cmd_subadd(args):
    seq = _read_sequence(args)
    witness = is_mod_subadditive(seq) if args.mod else is_subadditive(seq)
    if witness is None:
        _emit(args, {"subadditive": True, "witness": None}, "subadditive")
    else:
        i, j = witness
        _emit(args, {"subadditive": False, "witness": [i, j]}, f"violation {i} {j}")
    return 0


def cmd_reduce(args):
    if args.verify:
        rows = run_reduction_checks(args.seeds, args.seed)
        if args.json:
            print(json.dumps({"schema": SCHEMA, "checks": [
                {"name": r.name, "passed": r.passed, "total": r.total, "ok": r.ok,
                 "example": r.example} for r in rows]}, sort_keys=True))
        else:
            width = max(len(r.name) for r in rows)
            for r in rows:
                status = "PASS" if r.ok else "FAIL"
                extra = f"  first failure: {r.example}" if r.example else ""
                print(f"{r.name:<{width}}  {r.passed:>5}/{r.total:<5} {status}{extra}")
        return 0 if all(r.ok for r in rows) else 3
    if not args.from_seq:
        raise UsageError("reduce needs --from-seq or --verify")
    tokens = _read_text(args.from_seq).split()
    try:
        seq = [int(tok) for tok in tokens]
        red = subadd_to_uss(seq) if args.to == "uss" else subadd_to_frobenius(seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_instance_file(red.instance, red.target)
    if args.json:
        payload = {"items": list(red.instance.items), "target": red.target,
                   "threshold": red.threshold, "provenance": red.provenance}
        text = json.dumps({"schema": SCHEMA, **payload}, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_gen(args):
    try:
        inst = random_instance(args.n, args.amax, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_instance_file(inst, args.t)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    unknown = set(engines) - set(BENCH_ENGINES)
    if unknown or not sizes or min(sizes) < 3:
        raise UsageError(f"bad engines {sorted(unknown)} or sizes {sizes}")
    rows = run_bench(sizes, args.count, args.seed, engines, args.reps, args.n_items,
                     timing=not args.no_timing)
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _faulty_engines():
    engines = default_table_engines()
    rr = engines["roundrobin"]

    def broken(inst):
        table = rr(inst)
        if table.modulus < 3:
            return table
        entries = table.tolist()
        entries[-1] += table.modulus
        return type(table)(table.modulus, entries)

    engines["roundrobin"] = broken
    return engines


def cmd_verify(args):
    engines = _faulty_engines() if args.inject_fault else None
    report = run_verify(args.seeds, args.seed, structure=args.structure, engines=engines)
    if report.ok:
        msg = f"{report.checked} instances, {len(ENGINES)} engines: all tables equal"
        if args.structure:
            msg += "; structure bounds hold"
        _emit(args, {"checked": report.checked, "ok": True}, msg)
        return 0
    fail = report.failures[0]
    print(f"mismatch on instance {fail.instance} (minimized: {fail.minimized})", file=sys.stderr)
    for p in fail.problems:
        print(f"  {p}", file=sys.stderr)
    _emit(args, {"checked": report.checked, "ok": False,
                 "counterexample": list(fail.minimized.items)},
          f"FAILED; reproduce with --items \"{fail.minimized}\"")
    return 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p, target=False):
        p.add_argument("--items", help='quoted item list, e.g. "3 5"')
        p.add_argument("--file", help="instance file (items line, optional 't <int>' line)")
        if target:
            p.add_argument("--t", type=int, help="target value")
        p.add_argument("--algo", choices=ENGINES, default="sumset")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("subsetsum", help="decide feasibility of a target")
    instance_args(p, target=True)
    p.add_argument("--witness", action="store_true", help="also print a solution vector")
    p.set_defaults(func=cmd_subsetsum)

    p = sub.add_parser("frobenius", help="compute the Frobenius number")
    instance_args(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("alltargets", help="compute the residue table")
    instance_args(p)
    p.set_defaults(func=cmd_alltargets)

    p = sub.add_parser("subadd", help="test a cost sequence for subadditivity")
    p.add_argument("--seq", help="quoted sequence; inf and -inf accepted")
    p.add_argument("--file", help="sequence file")
    p.add_argument("--mod", action="store_true", help="test modular subadditivity")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_subadd)

    p = sub.add_parser("reduce", help="build reduction instances or verify them")
    p.add_argument("--from-seq", help="file with the positive sequence a[1..n-1]")
    p.add_argument("--to", choices=("uss", "frobenius"), default="uss")
    p.add_argument("--out", help="write the instance here instead of stdout")
    p.add_argument("--verify", action="store_true", help="run the seeded iff checks")
    p.add_argument("--seeds", type=int, default=200, help="corpus size for --verify")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="write a random coprime instance")
    p.add_argument("--n", type=int, required=True, help="instance has n+1 items")
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time engines on a seeded corpus, CSV output")
    p.add_argument("--sizes", default="1000,10000", help="comma-separated a_max values")
    p.add_argument("--count", type=int, default=3, help="instances per size")
    p.add_argument("--n-items", type=int, default=10)
    p.add_argument("--engines", default="sumset,roundrobin,minconv")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true", help="write wall_ns as 0")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="cross-engine equivalence suite")
    p.add_argument("--seeds", type=int, default=500, help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--structure", action="store_true", help="also check the support bounds")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
