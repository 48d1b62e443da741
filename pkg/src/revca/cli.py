"""Command-line front end.

Subcommands: simulate (evolve a lift and report counts), sequence
(tabulate R/R1/R2 by any of four methods), verify (run proof-checking
suites), render (emit txt/PBM/PPM images), export (write a state in the
text interchange format).

Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 cross-method
mismatch, 4 suite failure.  CA_DEFAULT_MAX overrides default suite ranges.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import sequences as seq
from . import verify
from .gf2poly import state_poly_at
from .grid import (SecondOrderState, count_values, grid_from_text,
                   grid_to_text, single_seed)
from .render import render
from .rules import Rule, evolve, parse_rule, trajectory_counts
from .sequences import SeqId


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def state_to_text(s: SecondOrderState) -> str:
    """Two concatenated grid blocks: current first, previous second."""
    return grid_to_text(s.current) + grid_to_text(s.previous)


def state_from_text(text: str) -> SecondOrderState:
    blocks = []
    cur: list[str] = []
    for ln in text.splitlines():
        if ln.startswith("#bgrid") and cur:
            blocks.append("\n".join(cur))
            cur = []
        cur.append(ln)
    if cur:
        blocks.append("\n".join(cur))
    if len(blocks) != 2:
        raise ValueError(f"state file needs 2 grid blocks, found {len(blocks)}")
    return SecondOrderState(grid_from_text(blocks[0]),
                            grid_from_text(blocks[1]))


def cmd_simulate(args: argparse.Namespace) -> int:
    rule = parse_rule(args.rule)
    if args.load:
        with open(args.load) as f:
            state = state_from_text(f.read())
    else:
        state = single_seed()
    state = evolve(rule, state, args.steps)
    c = count_values(state, args.steps)
    if args.format == "json":
        out = json.dumps({"n": c.n, "R1": c.r1, "R2": c.r2,
                          "R3": c.r3, "R": c.total}) + "\n"
    else:
        out = f"n={c.n} R1={c.r1} R2={c.r2} R3={c.r3} R={c.total}\n"
    _write(args.out, out)
    if args.save:
        _write(args.save, state_to_text(state))
    return 0


def _sequence_columns(method: str, n_max: int) -> dict[str, list[int]]:
    """All three sequences on 0..n_max by the requested method."""
    if method == "recursive":
        return {w: [seq.seq_value(SeqId(w), n) for n in range(n_max + 1)]
                for w in ("R", "R1", "R2")}
    if method == "alt":
        r1 = [seq.seq_value_alt(SeqId.R1, n) for n in range(n_max + 1)]
        r2 = [seq.seq_value_alt(SeqId.R2, n) for n in range(n_max + 2)]
        return {"R": [r2[n] + r2[n + 1] for n in range(n_max + 1)],
                "R1": r1, "R2": r2[:n_max + 1]}
    if method == "sim":
        counts = trajectory_counts(Rule.C2, n_max)
        return {"R": [c.total for c in counts],
                "R1": [c.r1 for c in counts],
                "R2": [c.r2 for c in counts]}
    if method == "poly":
        pairs = [state_poly_at(Rule.C2, n) for n in range(n_max + 1)]
        return {"R": [len(p.first) + len(p.second) for p in pairs],
                "R1": [len(p.first) for p in pairs],
                "R2": [len(p.second) for p in pairs]}
    raise ValueError(f"unknown method {method!r}")


def cmd_sequence(args: argparse.Namespace) -> int:
    n_max = args.max
    if args.check:
        ref = _sequence_columns("recursive", n_max)
        for method in ("alt", "sim", "poly"):
            cols = _sequence_columns(method, n_max)
            for w in ("R", "R1", "R2"):
                for n in range(n_max + 1):
                    if cols[w][n] != ref[w][n]:
                        print(f"mismatch: {w}({n}) recursive={ref[w][n]} "
                              f"{method}={cols[w][n]}", file=sys.stderr)
                        return 3
    cols = _sequence_columns(args.method, n_max)
    names = ["R", "R1", "R2"] if args.which == "all" else [args.which]
    if args.format == "json":
        rows = [{"n": n, **{w: cols[w][n] for w in names}}
                for n in range(n_max + 1)]
        out = json.dumps(rows, indent=2) + "\n"
    else:
        lines = ["n," + ",".join(names)]
        lines += [f"{n}," + ",".join(str(cols[w][n]) for w in names)
                  for n in range(n_max + 1)]
        out = "\n".join(lines) + "\n"
    _write(args.out, out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    limit = args.max
    if limit is None and "CA_DEFAULT_MAX" in os.environ:
        limit = int(os.environ["CA_DEFAULT_MAX"])
    if args.suite == "all":
        reports = verify.run_all(limit)
    else:
        reports = [verify.run_suite(args.suite, limit)]
    text = (verify.report_json(reports) if args.format == "json"
            else verify.report_text(reports))
    _write(args.out, text)
    return 0 if all(r.passed for r in reports) else 4


def cmd_render(args: argparse.Namespace) -> int:
    rule = parse_rule(args.rule)
    state = evolve(rule, single_seed(), args.step)
    _write(args.out, render(state, abs(args.step), args.format))
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    rule = parse_rule(args.rule)
    state = evolve(rule, single_seed(), args.steps)
    _write(args.out, state_to_text(state))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revca", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="evolve a lift and report counts")
    sim.add_argument("--rule", required=True,
                     help="rule or lift name: C1..C3p or R1..R3p")
    sim.add_argument("--steps", type=int, required=True,
                     help="signed step count (negative runs the inverse)")
    sim.add_argument("--format", choices=["txt", "json"], default="txt")
    sim.add_argument("--out", default=None)
    sim.add_argument("--save", default=None,
                     help="write the final state to this file")
    sim.add_argument("--load", default=None,
                     help="start from a saved state instead of the seed")
    sim.set_defaults(fn=cmd_simulate)

    sq = sub.add_parser("sequence", help="tabulate R/R1/R2")
    sq.add_argument("--which", choices=["R", "R1", "R2", "all"], default="all")
    sq.add_argument("--max", type=int, required=True)
    sq.add_argument("--method", choices=["recursive", "alt", "sim", "poly"],
                    default="recursive")
    sq.add_argument("--format", choices=["csv", "json"], default="csv")
    sq.add_argument("--check", action="store_true",
                    help="cross-validate all four methods first")
    sq.add_argument("--out", default=None)
    sq.set_defaults(fn=cmd_sequence)

    vf = sub.add_parser("verify", help="run verification suites")
    vf.add_argument("--suite", choices=list(verify.SUITES) + ["all"],
                    default="all")
    vf.add_argument("--max", type=int, default=None,
                    help="override the suite's default range")
    vf.add_argument("--format", choices=["txt", "json"], default="txt")
    vf.add_argument("--out", default=None)
    vf.set_defaults(fn=cmd_verify)

    rd = sub.add_parser("render", help="render a state as txt/PBM/PPM")
    rd.add_argument("--rule", required=True)
    rd.add_argument("--step", type=int, required=True)
    rd.add_argument("--format", choices=["txt", "pbm", "ppm"], default="txt")
    rd.add_argument("--out", default=None)
    rd.set_defaults(fn=cmd_render)

    ex = sub.add_parser("export",
                        help="write a seed-trajectory state as text blocks")
    ex.add_argument("--rule", required=True)
    ex.add_argument("--steps", type=int, required=True)
    ex.add_argument("--out", default=None)
    ex.set_defaults(fn=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
