"""Run the small-bound theorem suites and the grid audit, printing one line each.

``python demos/audits.py [n] [size]`` (defaults 3 and 4). Larger bounds are
what ``tests/test_acceptance.py`` uses.
"""

import sys
import time

from macfill import verify
from macfill.colmaps import grid_audit

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
size = int(sys.argv[2]) if len(sys.argv) > 2 else 4

for name, fn in {**verify.SUITES, **verify.CONJECTURES}.items():
    start = time.perf_counter()
    report = fn(n=n, size=size)
    extra = f", {report.details['notes']} notes" if "notes" in report.details else ""
    print(f"{name:14s} {report.status:15s} {report.checked:8d} checked"
          f"{extra}  {time.perf_counter() - start:.1f}s")

for mode in ("coinv", "inv"):
    report = grid_audit(mode)
    print(f"grid {mode:9s} {'pass' if report['passed'] else 'fail':15s} {report['counts']}")
