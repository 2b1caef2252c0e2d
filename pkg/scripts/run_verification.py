"""Run the full verification suite and write text and JSON reports.

    python scripts/run_verification.py --n 4 --cutoff 6 --out reports/
"""
import argparse
import sys
from pathlib import Path

from flopcheck.report import format_report
from flopcheck.verify import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--cutoff", type=int, default=6)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    args = ap.parse_args()

    rep = run_suite(args.n, args.cutoff)
    args.out.mkdir(parents=True, exist_ok=True)
    stem = f"verify_n{args.n}_c{args.cutoff}"
    (args.out / f"{stem}.json").write_text(format_report(rep, "json"))
    text = format_report(rep, "text")
    (args.out / f"{stem}.txt").write_text(text)
    sys.stdout.write(text.splitlines()[-1] + "\n")
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
