"""Print the strategy-characterization report for HR and LSR term sets.

    python scripts/strategy_report.py [--depth N]
"""
import argparse

from redsem.corpus import hr_terms, lsr_golden_corpus, lsr_terms
from redsem.langdefs import hr_spec, lsr_spec
from redsem.strategy import check_strategy_properties
from redsem.syntax import format_context, format_term


def show(title, report):
    print(f"== {title}")
    for line in report.lines():
        print("  " + line)
    for r in report.results.values():
        if r.witness is not None:
            w = r.witness
            print(f"  {r.name} witness: node {format_term(w.node)} at {format_context(w.context)}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--depth", type=int, default=4, help="enumeration depth in nodes")
    args = p.parse_args()
    show(f"HR, all terms of depth <= {args.depth}, literals 0 and 1",
         check_strategy_properties(hr_spec(), hr_terms(args.depth, (0, 1))))
    show("LSR golden corpus", check_strategy_properties(lsr_spec(), lsr_golden_corpus()))
    show(f"LSR, all terms of depth <= {min(args.depth, 3)}",
         check_strategy_properties(lsr_spec(), lsr_terms(min(args.depth, 3))))


if __name__ == "__main__":
    main()
