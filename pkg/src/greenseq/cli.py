"""Command-line front end.

Exit codes: 0 success / verified, 1 violated, 2 inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import QuiverError, format_quiver, framed_seed, mutate_sequence, parse_quiver
from .mgs import enumerate_mgs
from .reduction import me_free_version, skeleton
from .theorems import (
    NonAcyclic,
    NotPartible,
    Verdict,
    k_partitions,
    replay_cyclic_double,
    verify_t1,
    verify_t2,
    verify_t3,
)

DEFAULT_CAP = 24
EXIT = {Verdict.VERIFIED: 0, Verdict.VIOLATED: 1, Verdict.INCONCLUSIVE: 2}
INPUT_ERROR = 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _cap(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be >= 1")
    return value


def _load(path: str):
    try:
        return parse_quiver(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except QuiverError as exc:
        raise InputError(f"{path}: {exc}") from None


def _matrix_lines(rows) -> list[str]:
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return ["  " + " ".join(str(x).rjust(width) for x in row) for row in rows]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="greenseq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def quiver_arg(sp):
        sp.add_argument("--quiver", required=True, metavar="FILE")

    def search_args(sp):
        sp.add_argument("--cap", type=_cap, default=DEFAULT_CAP)
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--no-prune", action="store_true", help="disable multiple-arrow pruning")

    sp = sub.add_parser("mutate", help="apply a mutation sequence to the framed seed")
    quiver_arg(sp)
    sp.add_argument("--seq", required=True, help='e.g. "2 1 3"')
    sp.add_argument("--json", action="store_true")

    for name in ("enumerate", "count"):
        sp = sub.add_parser(name, help=f"{name} maximal green sequences")
        quiver_arg(sp)
        search_args(sp)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("reduce", help="ME-free version or skeleton")
    quiver_arg(sp)
    sp.add_argument("--mode", choices=["me-free", "skeleton"], required=True)
    sp.add_argument("--output", metavar="FILE")

    sp = sub.add_parser("verify", help="check a theorem on one quiver")
    sp.add_argument("theorem", choices=["t1", "t2", "t3"])
    quiver_arg(sp)
    search_args(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("partition", help="finest k-partition")
    quiver_arg(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("replay-s4", help="replay the cyclic double-edge example")
    sp.add_argument("--json", action="store_true")
    return p


def _cmd_mutate(args, out):
    q = _load(args.quiver)
    try:
        seq = [int(x) for x in args.seq.split()]
        state = mutate_sequence(framed_seed(q), seq)
    except (ValueError, IndexError) as exc:
        raise InputError(f"bad sequence {args.seq!r}: {exc}") from None
    if args.json:
        print(json.dumps({"seq": seq, "b": state.b, "c": state.c}), file=out)
    else:
        print(f"after mutating at {' '.join(map(str, seq))}:", file=out)
        print("\n".join(_matrix_lines(state.extended())), file=out)
    return 0


def _enumerate(args):
    q = _load(args.quiver)
    return enumerate_mgs(q, args.cap, prune=not args.no_prune, workers=args.threads)


def _cmd_enumerate(args, out):
    res = _enumerate(args)
    if args.json:
        print(res.to_json(), file=out)
        return 0
    status = "exhaustive" if res.exhaustive else f"truncated at cap {res.cap}"
    print(f"{res.count} maximal green sequences ({status})", file=out)
    for t in res.traces:
        print("  " + " ".join(map(str, t.vertex_seq)), file=out)
    return 0


def _cmd_count(args, out):
    res = _enumerate(args)
    if args.json:
        print(json.dumps({"count": res.count, "exhaustive": res.exhaustive, "cap": res.cap}), file=out)
    else:
        print(f"{res.count}{'' if res.exhaustive else ' (truncated)'}", file=out)
    return 0


def _cmd_reduce(args, out):
    q = _load(args.quiver)
    r = me_free_version(q) if args.mode == "me-free" else skeleton(q)
    text = format_quiver(r, comment=f"{args.mode} of {Path(args.quiver).name}")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def _print_report(report, args, out):
    if args.json:
        print(report.to_json(), file=out)
    else:
        print(f"{report.theorem}: {report.verdict.value}", file=out)
        for key, value in report.counts.items():
            print(f"  {key}: {value}", file=out)
        for w in report.witnesses:
            print(f"  witness: {w}", file=out)
    return EXIT[report.verdict]


def _cmd_verify(args, out):
    q = _load(args.quiver)
    kw = dict(prune=not args.no_prune, workers=args.threads)
    try:
        if args.theorem == "t1":
            report = verify_t1(q, args.cap, **kw)
        elif args.theorem == "t3":
            report = verify_t3(q, args.cap, **kw)
        else:
            if args.k is None:
                raise InputError("verify t2 needs --k")
            report = verify_t2(q, args.k, args.cap, **kw)
    except (NonAcyclic, NotPartible) as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _print_report(report, args, out)


def _cmd_partition(args, out):
    q = _load(args.quiver)
    if args.k < 2:
        raise InputError("--k must be >= 2")
    parts = k_partitions(q, args.k)
    if args.json:
        print(json.dumps({"k": args.k, "partitions": [p.to_dict() for p in parts]}), file=out)
    elif not parts:
        print(f"not {args.k}-partible", file=out)
    else:
        print(" | ".join(" ".join(map(str, sorted(b))) for b in parts[0].blocks), file=out)
    return 0


def _cmd_replay(args, out):
    return _print_report(replay_cyclic_double(), args, out)


COMMANDS = {
    "mutate": _cmd_mutate,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "partition": _cmd_partition,
    "replay-s4": _cmd_replay,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return INPUT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
