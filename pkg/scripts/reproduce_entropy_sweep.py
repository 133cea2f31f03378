#!/usr/bin/env python3
"""Entropy growth and saturation across coupling regimes (Fig. 1 style data).

Runs the full default grid k in {1, 2, 3, 6}, eps in {1e-3, 1e-2, 1e-1, 1}
at j1 = j2 = 10 and writes one CSV per (k, eps) point. Expect several
minutes on a single core; set OPENT_WORKERS to parallelize.
"""

import sys
from pathlib import Path

from opent.cli import SweepConfig, run_sweep


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results/sweep")
    cfg = SweepConfig(output_dir=out)
    paths = run_sweep(cfg)
    print(f"wrote {len(paths)} CSV files to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
