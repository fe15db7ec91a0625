#!/usr/bin/env python3
"""Smoke benchmark: one extension run at q=13 under several worker setups.

Prints wall times and checks the merged outputs are identical; speedups
depend on the machine and are reported, not asserted.
"""

import sys
import time

from pgarc.search import SearchConfig, default_plane, min_complete_size


def main() -> int:
    plane = default_plane(13)  # build outside the timed region
    setups = [
        ("1 worker", dict(worker_count=1)),
        ("2 workers", dict(worker_count=2)),
        ("4 workers, 10/20/30/40 split", dict(worker_count=4, proportions=(10, 20, 30, 40))),
        ("4 workers, stealing", dict(worker_count=4, stealing=True)),
    ]
    baseline = None
    for label, kw in setups:
        cfg = SearchConfig(q=13, classification_threshold=5, **kw)
        t0 = time.time()
        result = min_complete_size(cfg, plane)
        elapsed = time.time() - t0
        summary = (result.size, result.class_count, tuple(result.representatives))
        if baseline is None:
            baseline = summary
        status = "identical" if summary == baseline else "DIFFERS"
        print(f"{label:32s} {elapsed:7.1f}s  t={result.size} "
              f"classes={result.class_count}  output {status}")
        if summary != baseline:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
