"""Print the involution class tables for a list of root systems.

Usage:
    python3 scripts/enumerate_involutions.py            # all simple types, rank <= 8
    python3 scripts/enumerate_involutions.py E6 D4+A1   # chosen types
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from quasisplit.classify import classify_involution
from quasisplit.involution import enumerate_involution_classes
from quasisplit.rootdata import build_root_system
from quasisplit.verify import simple_types_up_to


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("types", nargs="*", help="type strings; default: simple types of rank <= 8")
    parser.add_argument("--max-rank", type=int, default=8)
    args = parser.parse_args()

    names = args.types or simple_types_up_to(args.max_rank)
    t0 = time.perf_counter()
    total = 0
    for name in names:
        rs = build_root_system(name)
        classes = enumerate_involution_classes(rs)
        total += len(classes)
        print(f"{name} (dim {rs.dim_group()}): {len(classes)} classes")
        for cls in classes:
            s = classify_involution(cls)
            qs = f"quasi-split, split rank {s.split_rank}" if s.quasi_split else "not quasi-split"
            k = f", K-type {s.k_type}" if s.k_type else ""
            print(
                f"  {cls.class_id or '1':>10}  orbit {s.orbit_size:>3}"
                f"  dim K {s.dim_fixed:>3}  {qs}{k}"
            )
    elapsed = time.perf_counter() - t0
    print(f"{total} classes over {len(names)} root systems in {elapsed:.3f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
