"""Matplotlib rendering of figure-preset datasets to image files.

Import stays local to this module so the data paths never require a
display or a matplotlib install at runtime.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .figures import FigureData

__all__ = ["render_figure"]


def render_figure(data: FigureData, path: str) -> None:
    """Render one preset dataset to an image file (format from extension)."""
    preset = data.preset
    part = preset.plot_part
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    try:
        if preset.k_grid is not None:
            nk = preset.k_grid[2]
            arr = np.array(data.rows)
            ts = arr[: preset.nt, 0]
            ks = arr[:: preset.nt, 1]
            col = 2 if part == "re" else 3
            vals = arr[:, col].reshape(nk, preset.nt)
            mesh = ax.pcolormesh(ts, ks, vals, shading="nearest", cmap="RdBu_r")
            fig.colorbar(mesh, ax=ax, label=f"{part}(mode)")
            ax.set_xlabel("t")
            ax.set_ylabel("K")
        else:
            arr = np.array(data.rows)
            ts = arr[:, 0]
            col = 1 if part == "re" else 2
            if preset.reciprocal:
                ax.plot(ts, arr[:, 3], color="tab:red", lw=0.9,
                        label="-1/cos t")
                ax.plot(ts, arr[:, col], color="tab:blue", lw=0.9,
                        label=f"{part}(-1/mode), K={preset.K}")
                ax.set_ylim(-12, 12)
                ax.legend(loc="upper right", fontsize=8)
            else:
                ax.plot(ts, arr[:, col], color="tab:blue", lw=0.9)
                ax.set_ylabel(f"{part}(mode), K={preset.K}")
            if preset.clip is not None:
                ax.set_ylim(*preset.clip)
            ax.set_xlabel("t")
        ax.set_title(preset.name)
        fig.tight_layout()
        fig.savefig(path, dpi=150)
    finally:
        plt.close(fig)
