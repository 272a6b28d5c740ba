#!/usr/bin/env python3
"""Time each reference-table row on one core.

The acceptance budget for the whole table is 60 seconds; this prints where
the time actually goes so regressions are visible row by row.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cblocks.cli import REFERENCE_TABLE, _table_row


def main():
    total = 0.0
    print(f"{'row':>3}  {'algebra':>7}  {'level':>5}  {'n':>2}  {'ms':>8}  status")
    for i, entry in enumerate(REFERENCE_TABLE, start=1):
        started = time.perf_counter()
        computed, expected = _table_row(entry)
        elapsed = time.perf_counter() - started
        total += elapsed
        ok = "PASS" if computed == expected else "FAIL"
        _, r, level, weight_texts, *_rest = entry
        print(f"{i:>3}  {'sl' + str(r + 1):>7}  {level:>5}  {len(weight_texts):>2}"
              f"  {elapsed * 1000:8.1f}  {ok}")
    print(f"total  {total:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
