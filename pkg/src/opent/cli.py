"""Reproduction driver: parameter sweeps and spectral comparisons as CSV files.

Subcommands:
  sweep       operator entropies of U_T^n over a (k, eps) grid -> one CSV per point
  spectrum    operator-RDM eigenvalues at saturation vs the Laguerre law
  diagonal    operator entanglement of exp(-i alpha Jz x Jz) vs alpha
  saturation  quadrature estimate of the entropy plateau

Parameters come from an optional `key=value` config file (# comments
allowed) with command-line flags taking precedence. Independent grid
points run on a process pool capped by OPENT_WORKERS; outputs are written
atomically and are byte-identical for any worker count.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .kickedtop import KickedTopParams, UnitarityDriftError, floquet, power_sequence
from .rmt import LaguerreLaw, fit_distance, histogram, laguerre_density, saturation_estimate
from .schmidt import BipartitionDims, operator_entanglement, schmidt_spectrum
from .spin import SpinSystem

DEFAULT_K = (1.0, 2.0, 3.0, 6.0)
DEFAULT_EPS = (1e-3, 1e-2, 1e-1, 1.0)
DEFAULT_WINDOW = (200, 1000, 40)


@dataclass(frozen=True)
class SweepConfig:
    j1: float = 10.0
    j2: float = 10.0
    k_values: tuple[float, ...] = DEFAULT_K
    eps_values: tuple[float, ...] = DEFAULT_EPS
    n_max: int = 1000
    sample_stride: int = 5
    output_dir: Path = Path("out")

    def __post_init__(self):
        if not (self.n_max >= self.sample_stride >= 1):
            raise ValueError("need n_max >= sample_stride >= 1")
        if not self.k_values or not self.eps_values:
            raise ValueError("k and eps lists must be non-empty")
        if self.j1 > self.j2:
            raise ValueError("j1 <= j2 required")


@dataclass(frozen=True)
class SpectrumConfig:
    j1: float = 10.0
    j2_values: tuple[float, ...] = (10.0, 15.0, 20.0)
    k: float = 6.0
    eps: float = 1.0
    saturation_window: tuple[int, int, int] = DEFAULT_WINDOW
    bins: int = 25
    output_dir: Path = Path("out")

    def __post_init__(self):
        n_start, n_end, stride = self.saturation_window
        if not n_start < n_end:
            raise ValueError("window start must precede end")
        if stride < 1:
            raise ValueError("window stride must be positive")
        if self.bins < 5:
            raise ValueError("need at least 5 bins")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _worker_count() -> int:
    env = os.environ.get("OPENT_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def sweep_point(j1: float, j2: float, k: float, eps: float, n_max: int, stride: int):
    """Entropy time series [(n, S_V, S_L), ...] for one parameter point."""
    params = KickedTopParams(j1, j2, k, k, eps)
    dims = BipartitionDims(params.top1.dim, params.top2.dim)
    u = floquet(params)
    rows = []
    for sample in power_sequence(u, n_max, stride):
        sv, sl = operator_entanglement(sample.matrix, dims)
        rows.append((sample.n, sv, sl))
    return rows


def _run_sweep_point(args):
    cfg, k, eps = args
    rows = sweep_point(cfg.j1, cfg.j2, k, eps, cfg.n_max, cfg.sample_stride)
    lines = ["n,S_V,S_L"]
    lines += [f"{n},{_fmt(sv)},{_fmt(sl)}" for n, sv, sl in rows]
    path = Path(cfg.output_dir) / f"sweep_k{k:g}_eps{eps:g}.csv"
    _atomic_write(path, "\n".join(lines) + "\n")
    return path


def run_sweep(cfg: SweepConfig) -> list[Path]:
    """Write one `n,S_V,S_L` CSV per (k, eps) point; returns written paths.

    A drift failure at one point is reported and skipped; the other
    points still complete. Raises only if every point failed or the
    output directory is unusable.
    """
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    tasks = [(cfg, k, eps) for k in cfg.k_values for eps in cfg.eps_values]
    paths: list[Path] = []
    failures: list[str] = []
    with ProcessPoolExecutor(max_workers=_worker_count()) as pool:
        for task, result in zip(tasks, pool.map(_try_sweep_point, tasks)):
            if isinstance(result, str):
                failures.append(result)
                print(f"error: {result}", file=sys.stderr)
            else:
                paths.append(result)
    if failures and not paths:
        raise RuntimeError("all sweep points failed: " + "; ".join(failures))
    return paths


def _try_sweep_point(args):
    _, k, eps = args
    try:
        return _run_sweep_point(args)
    except UnitarityDriftError as exc:
        return f"sweep point k={k:g} eps={eps:g}: {exc}"


def spectrum_eigenvalues(j1: float, j2: float, k: float, eps: float,
                         window: tuple[int, int, int]) -> np.ndarray:
    """Normalized operator-RDM eigenvalues aggregated over the window."""
    n_start, n_end, stride = window
    params = KickedTopParams(j1, j2, k, k, eps)
    dims = BipartitionDims(params.top1.dim, params.top2.dim)
    u = floquet(params)
    collected = []
    # coarsest power stride that still hits every window sample
    base = math.gcd(n_start, stride)
    for sample in power_sequence(u, n_end, base):
        if sample.n >= n_start and (sample.n - n_start) % stride == 0:
            collected.append(schmidt_spectrum(sample.matrix, dims).normalized)
    return np.concatenate(collected)


def _run_spectrum_point(args):
    cfg, j2 = args
    n_dim = SpinSystem.from_j(cfg.j1).dim
    m_dim = SpinSystem.from_j(j2).dim
    law = LaguerreLaw.from_dims(n_dim, m_dim)
    eigs = spectrum_eigenvalues(cfg.j1, j2, cfg.k, cfg.eps, cfg.saturation_window)
    n_steps = eigs.size // n_dim**2

    out = Path(cfg.output_dir)
    eig_path = out / f"eigenvalues_j2_{j2:g}.txt"
    header = (
        f"# N={n_dim} M={m_dim} Q={law.q:.12g}\n"
        f"# k={cfg.k:g} eps={cfg.eps:g} window={cfg.saturation_window} steps={n_steps}\n"
    )
    _atomic_write(eig_path, header + "\n".join(_fmt(x) for x in eigs) + "\n")

    h = histogram(eigs, cfg.bins, (0.0, 1.05 * law.lambda_max))
    # per-time-step density, comparable with the law's total mass N^2
    heights = h.heights / n_steps
    predicted = laguerre_density(law, h.centers)
    lines = ["bin_left,bin_right,empirical_density,laguerre_density"]
    for i in range(cfg.bins):
        lines.append(
            f"{_fmt(h.bin_edges[i])},{_fmt(h.bin_edges[i + 1])},"
            f"{_fmt(heights[i])},{_fmt(predicted[i])}"
        )
    hist_path = out / f"histogram_j2_{j2:g}.csv"
    _atomic_write(hist_path, "\n".join(lines) + "\n")

    dist = fit_distance(type(h)(h.bin_edges, heights), law)
    report = (
        f"j2={j2:g} N={n_dim} M={m_dim} Q={law.q:.6g} "
        f"steps={n_steps} fit_distance={dist:.6g}"
    )
    return eig_path, hist_path, report, dist


def run_spectrum(cfg: SpectrumConfig) -> list[tuple[Path, Path, str, float]]:
    """Per j2: eigenvalue dump, histogram CSV and a fit-distance report line."""
    Path(cfg.output_dir).mkdir(parents=True, exist_ok=True)
    tasks = [(cfg, j2) for j2 in cfg.j2_values]
    with ProcessPoolExecutor(max_workers=_worker_count()) as pool:
        results = list(pool.map(_run_spectrum_point, tasks))
    for _, _, report, _ in results:
        print(report)
    return results


def run_diagonal(j1: float, j2: float, alpha_values, output_path: Path) -> Path:
    """CSV of operator entanglement of exp(-i alpha Jz x Jz) at each alpha."""
    from .kickedtop import diagonal_coupling, product_rotation

    if not alpha_values:
        raise ValueError("alpha list must be non-empty")
    alphas = list(alpha_values)
    if 0.0 not in alphas:
        alphas = [0.0] + alphas
    s1 = SpinSystem.from_j(min(j1, j2))
    s2 = SpinSystem.from_j(max(j1, j2))
    dims = BipartitionDims(s1.dim, s2.dim)
    lines = ["alpha,S_V,S_L"]
    for alpha in alphas:
        sv, sl = operator_entanglement(diagonal_coupling(s1, s2, alpha), dims)
        lines.append(f"{_fmt(alpha)},{_fmt(sv)},{_fmt(sl)}")
    sv_up, _ = operator_entanglement(product_rotation(s1, s2, 0.7), dims)
    lines.append(f"# S_V(product rotation, p=0.7) = {_fmt(sv_up)}")
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    _atomic_write(output_path, "\n".join(lines) + "\n")
    return output_path


def run_saturation(n_small: int, m_big: int) -> str:
    """Report the quadrature plateau estimate next to ln(0.6 N^2) and ln N^2."""
    est = saturation_estimate(n_small, m_big)
    report = (
        f"N={n_small} M={m_big} Q={(m_big / n_small) ** 2:.6g}\n"
        f"saturation_estimate = {est:.6f}\n"
        f"ln(0.6 N^2)         = {math.log(0.6 * n_small**2):.6f}\n"
        f"ln(N^2)             = {math.log(n_small**2):.6f}"
    )
    print(report)
    return report


# --- configuration plumbing -------------------------------------------------


def load_config(path: Path) -> dict[str, str]:
    """Parse `key=value` lines; blank lines and # comments are skipped."""
    values: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"malformed config line: {raw!r}")
        key, val = line.split("=", 1)
        values[key.strip()] = val.strip()
    return values


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(","))


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _merged(args, keys: dict[str, str]) -> dict[str, str]:
    """Config file values with CLI flag overrides; keys maps flag -> config key."""
    values = load_config(args.config) if args.config else {}
    for attr, key in keys.items():
        flag = getattr(args, attr, None)
        if flag is not None:
            values[key] = flag
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opent")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value config file")
    common.add_argument("--j1", help="spin of the first top")
    common.add_argument("--j2", help="spin of the second top (comma list for spectrum)")
    common.add_argument("--k", help="kick strength(s), comma-separated")
    common.add_argument("--eps", help="coupling strength(s), comma-separated")
    common.add_argument("--out", help="output directory")

    p = sub.add_parser("sweep", parents=[common], help="entropy vs time step over a grid")
    p.add_argument("--nmax", help="number of time steps")
    p.add_argument("--stride", help="sampling stride")

    p = sub.add_parser("spectrum", parents=[common], help="operator-RDM spectra vs RMT law")
    p.add_argument("--window", help="saturation window as start,end,stride")
    p.add_argument("--bins", help="histogram bin count")

    p = sub.add_parser("diagonal", parents=[common], help="entanglement of exp(-i a Jz x Jz)")
    p.add_argument("--alpha", help="alpha values, comma-separated")

    p = sub.add_parser("saturation", help="Laguerre-law entropy plateau estimate")
    p.add_argument("--n", required=True, help="smaller subsystem dimension N")
    p.add_argument("--m", required=True, help="larger subsystem dimension M")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            v = _merged(args, {"j1": "j1", "j2": "j2", "k": "k", "eps": "eps",
                               "nmax": "nmax", "stride": "stride", "out": "out"})
            cfg = SweepConfig(
                j1=float(v.get("j1", 10)),
                j2=float(v.get("j2", 10)),
                k_values=_floats(v["k"]) if "k" in v else DEFAULT_K,
                eps_values=_floats(v["eps"]) if "eps" in v else DEFAULT_EPS,
                n_max=int(v.get("nmax", 1000)),
                sample_stride=int(v.get("stride", 5)),
                output_dir=Path(v.get("out", "out")),
            )
            run_sweep(cfg)
        elif args.command == "spectrum":
            v = _merged(args, {"j1": "j1", "j2": "j2", "k": "k", "eps": "eps",
                               "window": "window", "bins": "bins", "out": "out"})
            cfg = SpectrumConfig(
                j1=float(v.get("j1", 10)),
                j2_values=_floats(v["j2"]) if "j2" in v else (10.0, 15.0, 20.0),
                k=float(v.get("k", 6)),
                eps=float(v.get("eps", 1)),
                saturation_window=tuple(_ints(v["window"])) if "window" in v else DEFAULT_WINDOW,
                bins=int(v.get("bins", 25)),
                output_dir=Path(v.get("out", "out")),
            )
            run_spectrum(cfg)
        elif args.command == "diagonal":
            v = _merged(args, {"j1": "j1", "j2": "j2", "alpha": "alpha", "out": "out"})
            alphas = _floats(v["alpha"]) if "alpha" in v else (0.0, 0.1, 0.5, 1.0, 2.0)
            run_diagonal(
                j1=float(v.get("j1", 10)),
                j2=float(v.get("j2", 10)),
                alpha_values=alphas,
                output_path=Path(v.get("out", "out")) / "diagonal.csv",
            )
        elif args.command == "saturation":
            run_saturation(int(args.n), int(args.m))
    except Exception as exc:  # one machine-parseable line, nonzero exit
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
