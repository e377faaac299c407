"""Run every structural check at a deeper scope than the CLI defaults.

Rank 4 and below is always exhaustive over chambers; the flag widens that to
every Weyl group of order <= 51840.  Exit status 0 only if all checks pass.

Usage:
    python3 scripts/run_verification_sweep.py
    python3 scripts/run_verification_sweep.py --max-rank 6 --samples 5000 --exhaustive
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from quasisplit.verify import CHECKS, run_checks


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=6)
    parser.add_argument("--samples", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--exhaustive", action="store_true")
    args = parser.parse_args()

    t0 = time.perf_counter()
    results = run_checks(
        list(CHECKS),
        max_rank=args.max_rank,
        samples=args.samples,
        seed=args.seed,
        exhaustive=args.exhaustive,
    )
    for result in results:
        print(result.line())
    elapsed = time.perf_counter() - t0
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed in {elapsed:.1f}s")
    if failed:
        print("failed: " + ", ".join(failed))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
