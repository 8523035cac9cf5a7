"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 bad input.

Input formats
  degree file   one vertex per line, ``<id> <out> <in>`` or ``<out> <in>``
                (implicit ids 0..n-1); ``#`` starts a comment
  edge list     one arc per line, ``<u> <v>`` meaning u -> v
Swap lines are ``pair u>v,w>x | u>x,w>v``; three-arc moves use ``triple4``
(path a>b>c>d) and ``triple3`` (triangle).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from .core import BDSError, BiDegreeSequence, DiGraph, DuplicateArc, LoopArc, bds_of, validate
from .enumeration import enumerate_all
from .realize import STRATEGIES, RestrictedInstance, is_bigraphical, is_feasible_restricted, realize_greedy
from .sampler import ChainConfig, run_chain
from .swaps import swap_path, verify_path


class ParseError(BDSError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class MixedFormats(ParseError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(lineno: int, fields: list[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(fields)!r}") from None


def parse_bds_file(text: str) -> BiDegreeSequence:
    rows = []
    width = None
    for lineno, fields in _content_lines(text):
        if len(fields) not in (2, 3):
            raise ParseError(lineno, f"expected 2 or 3 fields, got {len(fields)}")
        if width is None:
            width = len(fields)
        elif width != len(fields):
            raise MixedFormats(lineno, "mixes '<out> <in>' and '<id> <out> <in>' lines")
        rows.append((lineno, _ints(lineno, fields)))
    if width == 2:
        triples = [(k, *vals) for k, (_, vals) in enumerate(rows)]
    else:
        triples = [tuple(vals) for _, vals in rows]
    for (lineno, _), t in zip(rows, triples):
        if t[1] < 0 or t[2] < 0:
            raise ParseError(lineno, "negative degree")
    return validate(triples)


def parse_edgelist(text: str) -> DiGraph:
    arcs = []
    seen = set()
    for lineno, fields in _content_lines(text):
        if len(fields) != 2:
            raise ParseError(lineno, f"expected '<u> <v>', got {len(fields)} fields")
        u, v = _ints(lineno, fields)
        if u == v:
            raise LoopArc(f"line {lineno}: loop arc {u}>{v}")
        if (u, v) in seen:
            raise DuplicateArc(f"line {lineno}: duplicate arc {u}>{v}")
        seen.add((u, v))
        arcs.append((u, v))
    return DiGraph(frozenset(arcs))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def format_edgelist(g: DiGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.sorted_arcs())


def _arc_list(g: DiGraph) -> list[list[int]]:
    return [list(a) for a in g.sorted_arcs()]


def _bds_json(bds: BiDegreeSequence) -> list[list[int]]:
    return [[v, p.out_deg, p.in_deg] for v, p in bds]


def cmd_check(args, out: TextIO) -> int:
    bds = parse_bds_file(_read(args.file))
    ok = is_bigraphical(bds, args.pivot_strategy)
    if args.format == "json":
        out.write(json.dumps({"bigraphical": ok, "n": len(bds)}) + "\n")
    else:
        out.write("bi-graphical\n" if ok else "not bi-graphical\n")
    return 0 if ok else 1


def cmd_realize(args, out: TextIO) -> int:
    bds = parse_bds_file(_read(args.file))
    report = realize_greedy(bds, args.pivot_strategy)
    if args.format == "json":
        payload = {"realizable": report.ok, "failed_step": report.failed_step}
        if report.ok:
            payload["arcs"] = _arc_list(report.result)
        out.write(json.dumps(payload) + "\n")
    elif report.ok:
        out.write(format_edgelist(report.result))
    else:
        print(f"not bi-graphical (failed at round {report.failed_step})", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_sample(args, out: TextIO) -> int:
    if args.start:
        g0 = parse_edgelist(_read(args.start))
    else:
        report = realize_greedy(parse_bds_file(_read(args.file)))
        if not report.ok:
            print("not bi-graphical; nothing to sample", file=sys.stderr)
            return 1
        g0 = report.result
    chains = []
    for c in range(args.count):
        cfg = ChainConfig(args.steps, args.seed + c, args.pair_prob, args.thinning)
        chains.append(run_chain(g0, cfg))
    if args.format == "json":
        out.write(json.dumps({"chains": [[_arc_list(g) for g in ch] for ch in chains]}) + "\n")
    elif args.format == "jsonl":
        for c, ch in enumerate(chains):
            for g in ch:
                out.write(json.dumps({"chain": c, "arcs": _arc_list(g)}) + "\n")
    else:
        out.write("\n".join(format_edgelist(g) for ch in chains for g in ch))
    return 0


def cmd_path(args, out: TextIO) -> int:
    g1 = parse_edgelist(_read(args.g1))
    g2 = parse_edgelist(_read(args.g2))
    seq = swap_path(g1, g2, args.pivot_strategy, trimmed=args.trim)
    if not verify_path(g1, seq, g2):
        print("internal error: swap path failed verification", file=sys.stderr)
        return 2
    if args.format == "json":
        out.write(json.dumps({"length": len(seq), "bound": 2 * len(g1), "swaps": [str(s) for s in seq]}) + "\n")
    else:
        out.write(seq.dumps())
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    bds = parse_bds_file(_read(args.file))
    total = 0
    for g in enumerate_all(bds, args.limit):
        total += 1
        if args.count_only:
            continue
        if args.format == "jsonl":
            out.write(json.dumps(_arc_list(g)) + "\n")
        else:
            if total > 1:
                out.write("\n")
            out.write(format_edgelist(g))
    if args.count_only:
        out.write(f"{total}\n")
    return 0


def _parse_ids(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(0, f"bad id list {text!r}") from None


def cmd_restricted(args, out: TextIO) -> int:
    bds = parse_bds_file(_read(args.file))
    inst = RestrictedInstance(bds, args.pivot, _parse_ids(args.forbidden))
    ok = is_feasible_restricted(inst, args.pivot_strategy)
    if args.format == "json":
        out.write(json.dumps({"feasible": ok, "pivot": inst.pivot, "forbidden": sorted(inst.forbidden)}) + "\n")
    else:
        out.write("feasible\n" if ok else "infeasible\n")
    return 0 if ok else 1


def cmd_degrees(args, out: TextIO) -> int:
    bds = bds_of(parse_edgelist(_read(args.file)))
    if args.format == "json":
        out.write(json.dumps(_bds_json(bds)) + "\n")
    else:
        out.write("".join(f"{v} {p.out_deg} {p.in_deg}\n" for v, p in bds))
    return 0


def cmd_oracle(args, out: TextIO) -> int:
    from .oracle import oracle_count, oracle_restricted

    bds = parse_bds_file(_read(args.file))
    if args.pivot is not None:
        ok = oracle_restricted(RestrictedInstance(bds, args.pivot, _parse_ids(args.forbidden)))
        out.write("feasible\n" if ok else "infeasible\n")
        return 0 if ok else 1
    count = oracle_count(bds)
    out.write(f"{count}\n")
    return 0 if count else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bidegree", description="Directed degree-sequence realization toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, file_help="degree file ('-' for stdin)", formats=("edgelist", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help=file_help)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    strategy = dict(choices=STRATEGIES, default="max-out", help="pivot selection rule")

    p = add("check", cmd_check, "decide whether the degree file is bi-graphical")
    p.add_argument("--pivot-strategy", **strategy)

    p = add("realize", cmd_realize, "print a greedy realization as an edge list")
    p.add_argument("--pivot-strategy", **strategy)

    p = add("sample", cmd_sample, "draw realizations with the swap chain", formats=("edgelist", "json", "jsonl"))
    p.add_argument("--start", help="edge list to start from instead of the greedy realization")
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--thinning", type=int, default=1000)
    p.add_argument("--pair-prob", type=float, default=0.5)
    p.add_argument("--count", type=int, default=1, help="number of chains, seeded seed, seed+1, ...")

    p = sub.add_parser("path", help="swap sequence between two edge lists with the same degrees")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--trim", action="store_true", help="cancel adjacent inverse swaps")
    p.add_argument("--pivot-strategy", **strategy)
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.set_defaults(func=cmd_path)

    p = add("enumerate", cmd_enumerate, "list every realization", formats=("edgelist", "jsonl"))
    p.add_argument("--limit", type=int)
    p.add_argument("--count-only", action="store_true")

    p = add("restricted-check", cmd_restricted, "can --pivot avoid sending arcs to --forbidden?")
    p.add_argument("--pivot", type=int, required=True)
    p.add_argument("--forbidden", default="", help="comma-separated ids")
    p.add_argument("--pivot-strategy", **strategy)

    add("degrees", cmd_degrees, "degree file of an edge list", file_help="edge list ('-' for stdin)")

    p = sub.add_parser("oracle")
    p.add_argument("file")
    p.add_argument("--pivot", type=int)
    p.add_argument("--forbidden", default="")
    # no help= keeps the brute-force command out of --help
    p.set_defaults(func=cmd_oracle)
    return parser


def _validate_args(args) -> None:
    for name in ("steps", "limit"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            raise BDSError(f"--{name} must be non-negative")
    for name in ("thinning", "count"):
        val = getattr(args, name, None)
        if val is not None and val < 1:
            raise BDSError(f"--{name} must be positive")
    pp = getattr(args, "pair_prob", None)
    if pp is not None and not 0.0 <= pp <= 1.0:
        raise BDSError("--pair-prob must lie in [0, 1]")


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = out or sys.stdout
    try:
        _validate_args(args)
        return args.func(args, out)
    except (BDSError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
