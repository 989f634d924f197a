"""Figure rendering for the sweep and excess reports.

Figures are written straight to files (no interactive backend); the CSV/JSON
report remains the primary output and the figures mirror its columns.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .exact import AsymptoticData
from .model import ModelParams


def render_sweep_figure(rows: list[dict], p: ModelParams, asym: AsymptoticData, path: str) -> None:
    """Energy per length and scaled remainder against the box length."""
    Ls = [r["L"] for r in rows]
    e_per_L = [r["e_per_L"] for r in rows]
    rem = [r["remainder"] for r in rows]

    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7.0, 6.4), sharex=True)
    ax1.plot(Ls, e_per_L, lw=1.0, color="tab:blue")
    ax1.axhline(asym.e_inf, color="tab:red", lw=0.8, ls="--", label=f"limit {asym.e_inf:.6g}")
    ax1.set_ylabel("energy / length")
    ax1.legend(frameon=False, fontsize=8)
    ax1.set_title(f"gamma={p.gamma:g}, rho={p.rho:g}")

    ax2.plot(Ls, rem, lw=1.0, color="tab:blue")
    ax2.axhline(asym.remainder_sup, color="tab:red", lw=0.8, ls="--",
                label=f"limsup {asym.remainder_sup:.6g}")
    ax2.axhline(0.0, color="0.6", lw=0.6)
    ax2.set_xlabel("L")
    ax2.set_ylabel(r"$L^2\,(e/L - e_\infty)$")
    ax2.legend(frameon=False, fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_excess_figure(rows: list[dict], p: ModelParams, asym: AsymptoticData, path: str) -> None:
    """Ground energy per length against the excess charge, with the
    large-box prediction e_inf - gamma Q^2 / 4."""
    Qs = [r["Q"] for r in rows]
    per_len = [r["lower_bound"] / p.L for r in rows]
    pred = [r["limit_prediction"] for r in rows]

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(Qs, per_len, "o-", ms=4, lw=1.0, color="tab:blue", label=f"e/L at L={p.L:g}")
    ax.plot(Qs, pred, "--", lw=1.0, color="tab:red", label=r"$e_\infty - \gamma Q^2/4$")
    ax.set_xlabel("excess charge Q")
    ax.set_ylabel("energy / length")
    ax.set_title(f"gamma={p.gamma:g}, rho={p.rho:g}")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
