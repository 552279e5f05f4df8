"""Compare drive and refocus on a corpus: agreement, step counts and timings.

    python scripts/engine_benchmark.py [--fuzz N] [--fuel F]
"""
import argparse
import time
from collections import Counter

from redsem.corpus import fuzz_lsr, hr_terms, lsr_golden_corpus
from redsem.driver import drive, refocus
from redsem.langdefs import hr_spec, lsr_spec


def run(name, spec, terms, fuel):
    totals = Counter()
    for t in terms:
        t0 = time.perf_counter()
        d = drive(spec, t, fuel)
        t1 = time.perf_counter()
        r = refocus(spec, t, (), fuel)
        t2 = time.perf_counter()
        totals["terms"] += 1
        totals["agree"] += d.outcome == r.outcome
        totals["drive_steps"] += len(d.steps)
        totals["refocus_steps"] += len(r.steps)
        totals[d.outcome.status.value] += 1
        totals["drive_ms"] += (t1 - t0) * 1000
        totals["refocus_ms"] += (t2 - t1) * 1000
    print(f"{name}: {totals['terms']} terms, {totals['agree']} agree; "
          f"value {totals['value']} stuck {totals['stuck']} fuel {totals['fuel-exhausted']}")
    print(f"  drive   {totals['drive_steps']:6d} steps {totals['drive_ms']:8.1f} ms")
    print(f"  refocus {totals['refocus_steps']:6d} steps {totals['refocus_ms']:8.1f} ms")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--fuzz", type=int, default=1000)
    p.add_argument("--fuel", type=int, default=100)
    args = p.parse_args()
    run("HR depth <= 5", hr_spec(), hr_terms(5), args.fuel)
    run("LSR golden", lsr_spec(), lsr_golden_corpus(), args.fuel)
    run(f"LSR fuzzed x{args.fuzz}", lsr_spec(), fuzz_lsr(args.fuzz), args.fuel)


if __name__ == "__main__":
    main()
