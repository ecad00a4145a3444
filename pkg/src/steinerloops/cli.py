"""Command-line interface.

Subcommands: ``construct`` (write a named system or table), ``check``
(brute-force an identity against a table file), ``mt`` (Moufang-theorem
deciders), ``pasch`` (Pasch configurations of a system), ``enumerate``
(systems of a given order up to isomorphism), ``explore`` (search for
separating identities).

Common flags, accepted after the subcommand: ``--json`` emits a single JSON
object with fields {schema, command, verdict, counterexample, count, items,
elapsed_ms}; ``--no-timing`` drops elapsed_ms so outputs are byte-comparable;
``--quiet`` silences progress chatter on stderr.

Exit codes: 0 success / property holds, 1 checked and failed, 2 usage, I/O
or validation error, 3 internal consistency violation (deciders disagree).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import explorer
from .algebra import LoopTable, TripleSystem
from .constructions import (
    affine_ag23,
    bose,
    elementary_abelian_loop,
    enumerate_sts,
    fano,
    projective,
    steiner_loop_10,
)
from .configurations import find_pasch_configs
from .errors import SteinerError
from .fileio import dumps, dumps_sts, loads
from .moufang import satisfies_mt_definition, satisfies_mt_fano, satisfies_mt_prop1
from .terms import BUILTIN_IDENTITIES, check_identity, parse_identity

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2
EXIT_INCONSISTENT = 3


class _Output:
    """Collects one command's result and renders text or JSON."""

    def __init__(self, command: str, as_json: bool, timing: bool):
        self.command = command
        self.as_json = as_json
        self.timing = timing
        self.started = time.perf_counter()
        self.verdict = None
        self.counterexample = None
        self.count = None
        self.items = None
        self.lines: list[str] = []

    def text(self, line: str):
        self.lines.append(line)

    def emit(self):
        if self.as_json:
            payload = {
                "schema": 1,
                "command": self.command,
                "verdict": self.verdict,
                "counterexample": self.counterexample,
                "count": self.count,
                "items": self.items,
            }
            if self.timing:
                payload["elapsed_ms"] = round(1000 * (time.perf_counter() - self.started), 3)
            print(json.dumps(payload))
        else:
            for line in self.lines:
                print(line)


def _load_file(path: str, kind: str):
    return loads(Path(path).read_text(), kind)


def _as_loop(obj, path: str) -> LoopTable:
    if isinstance(obj, LoopTable):
        return obj
    raise SteinerError(f"{path}: expected a loop table (identity at element 0)")


def _as_system(obj, path: str) -> TripleSystem:
    if isinstance(obj, TripleSystem):
        return obj
    raise SteinerError(f"{path}: expected an STS file")


def _format_assignment(assignment: dict[str, int]) -> str:
    return " ".join(f"{var}={val}" for var, val in assignment.items())


# ---------------------------------------------------------------------------
# subcommands


def _cmd_construct(args, out: _Output) -> int:
    makers = {
        "fano": (0, fano),
        "ag9": (0, affine_ag23),
        "loop10": (0, steiner_loop_10),
        "pg": (1, projective),
        "bose": (1, bose),
        "ea": (1, elementary_abelian_loop),
    }
    if args.name not in makers:
        raise SteinerError(f"unknown construction {args.name!r} "
                           f"(choose from {', '.join(sorted(makers))})")
    arity, maker = makers[args.name]
    if len(args.params) != arity:
        raise SteinerError(f"construction {args.name!r} takes {arity} parameter(s)")
    obj = maker(*args.params)
    content = dumps(obj)
    if args.output:
        Path(args.output).write_text(content)
        out.items = [args.output]
    else:
        out.items = content.splitlines()
        out.text(content.rstrip("\n"))
    return EXIT_OK


def _cmd_check(args, out: _Output) -> int:
    table = _load_file(args.file, args.kind)
    if isinstance(table, TripleSystem):
        raise SteinerError(f"{args.file}: expected a Cayley table, got an STS file")
    if args.builtin:
        try:
            ident = BUILTIN_IDENTITIES[args.builtin]
        except KeyError:
            raise SteinerError(f"unknown builtin {args.builtin!r} "
                               f"(choose from {', '.join(BUILTIN_IDENTITIES)})") from None
    else:
        ident = parse_identity(args.identity)
    report = check_identity(ident, table)
    out.count = report.assignments_checked
    if report.holds:
        out.verdict = "HOLDS"
        out.text(f"HOLDS ({report.assignments_checked} assignments)")
        return EXIT_OK
    out.verdict = "FAILS"
    out.counterexample = report.counterexample
    out.text(f"FAILS ({report.assignments_checked} assignments): "
             f"{_format_assignment(report.counterexample)}")
    return EXIT_FAILED


_MT_METHODS = {
    "def": satisfies_mt_definition,
    "prop1": satisfies_mt_prop1,
    "fano": satisfies_mt_fano,
}


def _cmd_mt(args, out: _Output) -> int:
    loop = _as_loop(_load_file(args.file, args.kind), args.file)
    methods = list(_MT_METHODS) if args.method == "all" else [args.method]
    reports = [_MT_METHODS[name](loop) for name in methods]
    out.items = []
    for report in reports:
        entry = {
            "method": report.method,
            "verdict": "SATISFIES" if report.satisfies else "FAILS",
            "counterexample": list(report.counterexample) if report.counterexample else None,
            "triples_examined": report.triples_examined,
        }
        out.items.append(entry)
        if report.satisfies:
            out.text(f"{report.method}: SATISFIES "
                     f"({report.triples_examined} triples examined)")
        else:
            x, y, z = report.counterexample
            out.text(f"{report.method}: FAILS at x={x} y={y} z={z} "
                     f"({report.triples_examined} triples examined)")
    verdicts = {r.satisfies for r in reports}
    if len(verdicts) > 1:
        out.verdict = "DISAGREE"
        out.text("internal disagreement between methods")
        return EXIT_INCONSISTENT
    satisfied = verdicts.pop()
    out.verdict = "SATISFIES" if satisfied else "FAILS"
    if not satisfied:
        out.counterexample = dict(zip("xyz", reports[0].counterexample))
    return EXIT_OK if satisfied else EXIT_FAILED


def _cmd_pasch(args, out: _Output) -> int:
    system = _as_system(_load_file(args.file, args.kind), args.file)
    configs = sorted(find_pasch_configs(system), key=lambda cfg: cfg.blocks)
    out.count = len(configs)
    out.text(str(len(configs)))
    if args.list:
        out.items = [[list(block) for block in cfg.blocks] for cfg in configs]
        for cfg in configs:
            out.text("  ".join(" ".join(map(str, block)) for block in cfg.blocks))
    return EXIT_OK


def _cmd_enumerate(args, out: _Output) -> int:
    if args.order == 13 and not args.allow_slow:
        raise SteinerError("order 13 enumeration is slow; pass --allow-slow")

    def progress(stats):
        if not args.quiet:
            print(f"  {stats['completions']} completions, "
                  f"{stats['classes']} classes so far", file=sys.stderr)

    systems = enumerate_sts(args.order, allow_slow=args.allow_slow, progress=progress)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, system in enumerate(systems, start=1):
        path = outdir / f"sts{args.order}-{i}.sts"
        path.write_text(dumps_sts(system))
        paths.append(str(path))
    out.count = len(systems)
    out.items = paths
    out.text(str(len(systems)))
    return EXIT_OK


def _cmd_explore(args, out: _Output) -> int:
    target = _as_loop(_load_file(args.target, args.kind), args.target)
    witnesses = [_as_loop(_load_file(path, args.kind), path) for path in args.witness]
    if args.max_leaves > explorer.DEFAULT_LEAVES and not args.quiet:
        print(f"warning: leaf budget {args.max_leaves} may take a while",
              file=sys.stderr)
    result = explorer.find_identities(target, witnesses,
                                      max_leaves=args.max_leaves,
                                      variables=tuple(args.vars))
    out.count = len(result.separating)
    out.items = []
    for found in result.separating:
        line = f"{found.identity}\t{args.witness[found.witness]}"
        out.items.append(line)
        out.text(line)
    if not args.quiet:
        for ident in result.unseparated:
            print(f"no separating witness: {ident}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--quiet", action="store_true",
                        help="suppress progress output on stderr")
    common.add_argument("--no-timing", action="store_true",
                        help="omit elapsed_ms from JSON output")

    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--kind", choices=["auto", "loop", "quasigroup", "sts"],
                      default="auto", help="override file-kind inference")

    parser = argparse.ArgumentParser(
        prog="steinerloops",
        description="Steiner triple systems, Steiner loops, and Moufang-theorem checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="write a named system or table")
    p.add_argument("name", help="fano | ag9 | loop10 | pg N | bose K | ea N")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", parents=[common, kind],
                       help="brute-force an identity on a Cayley table")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--identity", help="identity string, e.g. 'x(xy)=y'")
    group.add_argument("--builtin", help=f"one of {', '.join(BUILTIN_IDENTITIES)}")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("mt", parents=[common, kind],
                       help="test whether a loop satisfies Moufang's theorem")
    p.add_argument("file")
    p.add_argument("--method", choices=["def", "prop1", "fano", "all"], default="def")
    p.set_defaults(func=_cmd_mt)

    p = sub.add_parser("pasch", parents=[common, kind],
                       help="count (and list) Pasch configurations of a system")
    p.add_argument("file")
    p.add_argument("--list", action="store_true", help="print canonical quadruples")
    p.set_defaults(func=_cmd_pasch)

    p = sub.add_parser("enumerate", parents=[common],
                       help="systems of a given order, one file per class")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--allow-slow", action="store_true",
                   help="permit the minutes-long order-13 run")
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("explore", parents=[common, kind],
                       help="search for identities separating Steiner loops")
    p.add_argument("--target", required=True)
    p.add_argument("--witness", action="append", default=[],
                   help="witness loop file (repeatable)")
    p.add_argument("--max-leaves", type=int, default=explorer.DEFAULT_LEAVES)
    p.add_argument("--vars", default="xyz", help="variable letters (default xyz)")
    p.set_defaults(func=_cmd_explore)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = _Output(args.command, args.json, timing=not args.no_timing)
    try:
        code = args.func(args, out)
    except (SteinerError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
