"""PNG figures for the CLI report paths, drawn with matplotlib's Agg canvas."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
from matplotlib.figure import Figure

from .series import Series

PASS_COLOR = "#2a7f62"
FAIL_COLOR = "#b8312f"
XFAIL_COLOR = "#c9a227"


def _save(fig: Figure, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    return path


def plot_coefficients(s: Series, path, title: Optional[str] = None) -> Path:
    """Coefficients against n; exact series use a symmetric log axis."""
    fig = Figure(figsize=(7, 3.6))
    ax = fig.add_subplot()
    n = np.arange(s.precision)
    if s.modulus is None:
        vals = np.array([float(c) for c in s.signed_coeffs()], dtype=float)
        ax.set_yscale("symlog", linthresh=1.0)
        ax.set_ylabel("coefficient")
    else:
        vals = np.array(s.coeffs, dtype=float)
        ax.set_ylim(-0.5, s.modulus - 0.5)
        ax.set_ylabel(f"coefficient mod {s.modulus}")
    zero = vals == 0
    ax.scatter(n[~zero], vals[~zero], s=6, color="#1f4e79", label="nonzero")
    ax.scatter(n[zero], vals[zero], s=6, color="#999999", label="zero")
    ax.set_xlabel("n")
    ax.set_title(title or "series coefficients")
    ax.legend(loc="best", fontsize=8, frameon=False)
    return _save(fig, path)


def plot_scan(result, path, title: Optional[str] = None) -> Path:
    """Grid of steps A against offsets B; filled cells vanish mod M."""
    A = result.max_step
    grid = np.full((A, A), np.nan)
    for a in range(1, A + 1):
        grid[a - 1, :a] = 0.0
    for h in result.hits:
        grid[h.step - 1, h.offset] = h.witnesses
    fig = Figure(figsize=(6, 5))
    ax = fig.add_subplot()
    masked = np.ma.masked_invalid(grid)
    im = ax.imshow(masked, origin="lower", aspect="auto", cmap="viridis",
                   extent=(-0.5, A - 0.5, 0.5, A + 0.5))
    fig.colorbar(im, ax=ax, label="witnesses (0 = some coefficient nonzero)")
    ax.set_xlabel("offset B")
    ax.set_ylabel("step A")
    ax.set_title(title or f"progressions An+B vanishing mod {result.modulus}")
    return _save(fig, path)


def plot_report(report, path, title: Optional[str] = None) -> Path:
    """Horizontal bars of per-statement time, colored by outcome."""
    results = report.results
    height = max(3.0, 0.16 * len(results) + 1.0)
    fig = Figure(figsize=(8, height))
    ax = fig.add_subplot()
    y = np.arange(len(results))
    colors = [PASS_COLOR if r.passed else (XFAIL_COLOR if r.experimental else FAIL_COLOR)
              for r in results]
    ax.barh(y, [max(r.millis, 1e-3) for r in results], color=colors)
    ax.set_yticks(y)
    ax.set_yticklabels([r.name for r in results], fontsize=6)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("milliseconds")
    s = report.summary()
    ax.set_title(title or f"{s['passed']}/{s['checked']} passed, {s['failed']} failed")
    return _save(fig, path)


def plot_crosscheck(report, path, title: Optional[str] = None) -> Path:
    """Oracle counts and series coefficients on one log axis."""
    fig = Figure(figsize=(7, 3.6))
    ax = fig.add_subplot()
    n = [r.n for r in report.rows]
    ax.semilogy(n, [max(r.series, 1) for r in report.rows], "-", color="#1f4e79",
                label="series coefficient")
    ax.semilogy(n, [max(r.oracle, 1) for r in report.rows], "o", ms=3,
                color=PASS_COLOR, label="enumeration")
    bad: Sequence = report.mismatches
    if bad:
        ax.semilogy([r.n for r in bad], [max(r.oracle, 1) for r in bad], "x",
                    color=FAIL_COLOR, label="mismatch")
    ax.set_xlabel("n")
    ax.set_title(title or f"{report.family}: {len(bad)} mismatches up to {report.max_n}")
    ax.legend(loc="best", fontsize=8, frameon=False)
    return _save(fig, path)
