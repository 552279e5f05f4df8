"""Regenerate the CLI transcripts in tests/golden/ from the current build.

Each case is a list of CLI arguments; its transcript holds the exit status
and the standard output. Review the diff before committing new transcripts.
"""
import io
import json
from pathlib import Path

from redsem.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
TEST_SHIFT = "(add (num 1) (reset (add (num 2) (shift (app (var 0) (app (var 0) (num 3)))))))"
OMEGA = "(app (lam (app (var 0) (var 0))) (lam (app (var 0) (var 0))))"

CASES = {
    "hr_result": ["--lang", "hr", "(add (add (num 1) (num 2)) (num 39))"],
    "hr_trace": ["--lang", "hr", "--mode", "trace", "(add (add (num 1) (num 2)) (num 39))"],
    "hr_decompose": ["--lang", "hr", "--mode", "decompose",
                     "(add (add (num 1) (num 2)) (add (num 3) (num 4)))"],
    "lsr_result": ["--lang", "lsr", TEST_SHIFT],
    "lsr_trace": ["--lang", "lsr", "--mode", "trace", TEST_SHIFT],
    "lsr_refocus_trace": ["--lang", "lsr", "--engine", "refocus", "--mode", "trace", TEST_SHIFT],
    "lsr_compare": ["--lang", "lsr", "--engine", "compare", TEST_SHIFT],
    "lsr_decompose": ["--lang", "lsr", "--mode", "decompose", TEST_SHIFT],
    "lsr_no_decomposition": ["--lang", "lsr", "--mode", "decompose", "(lam (add (num 1) (num 2)))"],
    "lsr_stuck": ["--lang", "lsr", "(var 0)"],
    "lsr_diverges": ["--lang", "lsr", "--fuel", "100", OMEGA],
}


def transcript(argv):
    out = io.StringIO()
    status = main(argv, out, io.StringIO())
    return {"argv": argv, "status": status, "stdout": out.getvalue()}


def main_():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        path = GOLDEN / f"{name}.json"
        path.write_text(json.dumps(transcript(argv), indent=2) + "\n")
        print(f"wrote {path.name}")


if __name__ == "__main__":
    main_()
