"""
Sweep the classification and the multiprojective separation over small inputs.

Every certificate is recomputed after it is issued. Exits with status 1 on
the first failure.
"""

import argparse
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from services.distinguisher import classify_hilbert_schemes, multiproj_distinct
from services.partitions import enumerate_partitions
from utils.exceptions import SymprodError
from utils.logging import setup_logging

logger = setup_logging("WARNING")


def sweep_classification(max_n: int, max_genus: int) -> int:
    failures = 0
    for g in range(max_genus + 1):
        for n in range(1, max_n + 1):
            try:
                report = classify_hilbert_schemes(n, g, verify=True)
            except SymprodError as e:
                print(f"  FAIL n={n} g={g}: {e}")
                failures += 1
                continue
            if not report.attains_bound:
                print(f"  FAIL n={n} g={g}: {report.count} classes, expected {report.upper_bound}")
                failures += 1
        print(f"genus {g}: n = 1..{max_n} done")
    return failures


def sweep_multiproj(max_n: int) -> int:
    failures = 0
    for n in range(1, max_n + 1):
        by_length = {}
        for p in enumerate_partitions(n):
            by_length.setdefault(p.length, []).append(list(p.parts))
        for group in by_length.values():
            for i, dims_a in enumerate(group):
                for dims_b in group[i + 1:]:
                    try:
                        multiproj_distinct(dims_a, dims_b)
                    except SymprodError as e:
                        print(f"  FAIL {dims_a} vs {dims_b}: {e}")
                        failures += 1
    print(f"multiprojective separation: n = 1..{max_n} done")
    return failures


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--max-genus", type=int, default=3)
    parser.add_argument("--max-multiproj-n", type=int, default=18)
    args = parser.parse_args()

    print("Verifying classification...")
    failures = sweep_classification(args.max_n, args.max_genus)
    print("Verifying multiprojective separation...")
    failures += sweep_multiproj(args.max_multiproj_n)

    if failures:
        print(f"{failures} failure(s)")
        sys.exit(1)
    print("All checks passed")


if __name__ == "__main__":
    main()
