#!/usr/bin/env python3
"""Operator entanglement of exp(-i alpha Jz x Jz) as a function of alpha.

Also prints the plateau estimate from the Laguerre law next to the
ln(0.6 N^2) reference value.
"""

import sys
from pathlib import Path

import numpy as np

from opent.cli import run_diagonal, run_saturation


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results")
    alphas = np.round(np.linspace(0.0, 2.0, 21), 3).tolist()
    path = run_diagonal(10, 10, alphas, out / "diagonal.csv")
    print(f"wrote {path}")
    run_saturation(21, 21)
    return 0


if __name__ == "__main__":
    sys.exit(main())
