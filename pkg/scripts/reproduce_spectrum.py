#!/usr/bin/env python3
"""Operator-RDM eigenvalue histograms vs the Laguerre law (Fig. 2 style data).

Fixes the first top at j1 = 10 (N = 21) and varies the second top over
j2 in {10, 15, 20}; k = 6, eps = 1, eigenvalues aggregated over the
saturation window. Writes eigenvalue dumps and histogram CSVs and prints
one fit-distance report line per j2.
"""

import sys
from pathlib import Path

from opent.cli import SpectrumConfig, run_spectrum


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results/spectrum")
    cfg = SpectrumConfig(output_dir=out)
    run_spectrum(cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
