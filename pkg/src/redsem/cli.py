"""Command-line front end.

Exit status: 0 value (or a decomposition report), 1 stuck, 2 fuel exhausted,
3 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from .driver import DEFAULT_FUEL, Status, Trace, compare_engines, drive, refocus, whole_term
from .langdefs import spec_for
from .strategy import LanguageSpec, decompose
from .syntax import ParseError, format_context, format_term, parse_term

EXIT = {Status.VALUE: 0, Status.STUCK: 1, Status.FUEL_EXHAUSTED: 2}
USAGE_ERROR = 3
RECURSION_LIMIT = 20000


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    lang: str = "hr"
    engine: str = "drive"
    fuel: int = DEFAULT_FUEL
    mode: str = "result"
    term: Optional[str] = None
    file: Optional[str] = None

    def source(self) -> str:
        if (self.term is None) == (self.file is None):
            raise UsageError("give exactly one of a TERM argument or --file")
        if self.fuel < 0:
            raise UsageError("--fuel must be non-negative")
        if self.file is not None:
            with open(self.file, encoding="utf-8") as fh:
                return fh.read()
        return self.term


def format_outcome(trace: Trace) -> str:
    return f"{trace.outcome.status.value} {format_term(trace.outcome.term)}"


def trace_lines(spec: LanguageSpec, trace: Trace) -> List[str]:
    lines = [f"0 start {format_term(trace.initial)}"]
    for i, record in enumerate(trace.steps, 1):
        lines.append(f"{i} {record.kind.value} {format_term(whole_term(spec, record))}")
    lines.append(format_outcome(trace))
    return lines


def _run_engine(spec, t, config):
    if config.engine == "drive":
        trace = drive(spec, t, config.fuel)
    else:
        trace = refocus(spec, t, (), config.fuel)
    if config.mode == "trace":
        lines = trace_lines(spec, trace)
    else:
        lines = [format_outcome(trace), f"steps {len(trace.steps)}"]
    return EXIT[trace.outcome.status], lines


def _run_compare(spec, t, config):
    cmp = compare_engines(spec, t, config.fuel)
    lines = []
    for name, trace in (("drive", cmp.drive), ("refocus", cmp.refocus)):
        if config.mode == "trace":
            lines.append(f"{name}:")
            lines.extend(trace_lines(spec, trace))
        else:
            lines.append(f"{name} {format_outcome(trace)}")
        lines.append(f"{name} steps {len(trace.steps)} contractions {trace.contractions}")
    lines.append(f"agree: {'yes' if cmp.agree else 'no'}")
    return EXIT[cmp.drive.outcome.status], lines


def run_cli(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        if config.lang not in ("hr", "lsr"):
            raise UsageError(f"unknown language {config.lang!r}")
        spec = spec_for(config.lang)
        t = parse_term(config.source(), spec.desc)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return USAGE_ERROR

    if config.mode == "decompose":
        found = decompose(spec, t)
        if found is None:
            lines = ["no-decomposition"]
        else:
            lines = [f"context {format_context(found.context)}",
                     f"redex {format_term(found.redex)}"]
        status = 0
    elif config.engine == "compare":
        status, lines = _run_compare(spec, t, config)
    else:
        status, lines = _run_engine(spec, t, config)
    out.write("".join(line + "\n" for line in lines))
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="redsem", description="Run the HR or LSR reduction semantics on a term.")
    p.add_argument("term", nargs="?", metavar="TERM", help="term as an s-expression")
    p.add_argument("--file", metavar="PATH", help="read the term from a file")
    p.add_argument("--lang", choices=("hr", "lsr"), default="hr")
    p.add_argument("--engine", choices=("drive", "refocus", "compare"), default="drive")
    p.add_argument("--mode", choices=("result", "trace", "decompose"), default="result")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL,
                   help=f"step budget (default {DEFAULT_FUEL})")
    return p


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout,
         err: TextIO = sys.stderr) -> int:
    sys.setrecursionlimit(max(sys.getrecursionlimit(), RECURSION_LIMIT))
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return USAGE_ERROR
    config = RunConfig(lang=args.lang, engine=args.engine, fuel=args.fuel,
                       mode=args.mode, term=args.term, file=args.file)
    return run_cli(config, out, err)


if __name__ == "__main__":
    sys.exit(main())
