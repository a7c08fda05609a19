"""Figures for ``eisenpq report``. Uses the non-interactive Agg backend."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .boundary import CUSP_ORDER, boundary_symbol_sum, divisor_of_eisenstein  # noqa: E402
from .eisenstein import coefficient_table, eisenstein_element  # noqa: E402
from .oracle import numeric_F  # noqa: E402


def plot_coefficients(level, series):
    """One row of bars per N, oracle-derived coefficients hatched."""
    fig, axes = plt.subplots(len(series), 1, figsize=(max(8, 0.3 * (level.pq + level.p + level.q)), 2.6 * len(series)),
                             sharex=True, squeeze=False)
    for ax, n in zip(axes[:, 0], series):
        table = coefficient_table(n, level)
        xs = np.arange(len(table))
        vals = [c.value for _, c in table]
        colors = ["tab:orange" if c.source == "oracle" else "tab:blue" for _, c in table]
        ax.bar(xs, vals, color=colors)
        oracle = [i for i, (_, c) in enumerate(table) if c.source == "oracle"]
        ax.plot(oracle, [vals[i] for i in oracle], "D", color="tab:orange", ms=5)
        ax.axhline(0, color="k", lw=0.5)
        ax.set_ylabel(f"F_{n}")
        ax.set_xticks(xs)
        ax.set_xticklabels([str(g) for g, _ in table], rotation=90, fontsize=7)
    axes[0, 0].set_title(f"Eisenstein element coefficients, level {level.pq} (orange: oracle)")
    fig.tight_layout()
    return fig


def plot_boundary(level, series):
    fig, ax = plt.subplots(figsize=(6, 3.5))
    width = 0.8 / (2 * len(series))
    xs = np.arange(len(CUSP_ORDER))
    for i, n in enumerate(series):
        bd = boundary_symbol_sum(eisenstein_element(n, level))
        dv = divisor_of_eisenstein(n, level)
        ax.bar(xs + (2 * i) * width, [float(bd[c]) for c in CUSP_ORDER], width, label=f"boundary N={n}")
        ax.bar(xs + (2 * i + 1) * width, [float(dv[c]) for c in CUSP_ORDER], width, hatch="//",
               alpha=0.6, label=f"divisor N={n}")
    ax.set_xticks(xs + width * (len(series) - 0.5))
    ax.set_xticklabels([c.value for c in CUSP_ORDER])
    ax.axhline(0, color="k", lw=0.5)
    ax.legend(fontsize=7, ncol=2)
    ax.set_title(f"Boundary vs divisor of E_N, level {level.pq}")
    fig.tight_layout()
    return fig


def plot_oracle_residuals(level, series, tol=1e-8):
    """|numeric F_{E_N} - 6 F_N| per class on a log scale."""
    fig, ax = plt.subplots(figsize=(7, 3.5))
    for n in series:
        table = coefficient_table(n, level)
        res = [max(abs(numeric_F(g, n, level, tol).value - 6 * c.value), 1e-17) for g, c in table]
        ax.semilogy(range(len(table)), res, "o", ms=4, label=f"N={n}")
    ax.axhline(0.1, color="r", ls="--", lw=0.8, label="tolerance 0.1")
    ax.set_xlabel("class index (canonical order)")
    ax.set_ylabel("|numeric - exact|")
    ax.legend(fontsize=7)
    ax.set_title(f"Oracle residuals, level {level.pq}")
    fig.tight_layout()
    return fig


def write_figures(level, series, outdir, tol=1e-8):
    """Render every figure into ``outdir``; returns the written paths."""
    paths = []
    for name, fig in (("coefficients", plot_coefficients(level, series)),
                      ("boundary", plot_boundary(level, series)),
                      ("oracle_residuals", plot_oracle_residuals(level, series, tol))):
        path = outdir / f"{name}_{level.p}_{level.q}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths
