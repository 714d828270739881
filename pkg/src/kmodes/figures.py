"""Deterministic figure-preset datasets.

All nine presets use the normal branch with omega0 = 1 and mode constants
alpha = beta = 1/2. Points inside the singularity exclusion radius are
emitted as nan rows so grids stay rectangular. The K = 0 grid line uses the
certified zero-coupling limit of the mode (the printed second basis term is
undefined there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SingularityError, ValidationError
from .oscillator import OscillatorSpec
from .single_k import (
    ModeConstants,
    SingleKSpec,
    bosonic_mode,
    bosonic_mode_zero_k_limit,
)

__all__ = ["FigurePreset", "FigureData", "PRESETS", "figure_dataset"]

_CONSTS = ModeConstants(0.5, 0.5)
_NAN = float("nan")


@dataclass(frozen=True)
class FigurePreset:
    """Grid and output selection for one preset."""

    name: str
    t0: float
    t1: float
    nt: int
    K: float | None = None                      # fixed coupling, 1-D presets
    k_grid: tuple[float, float, int] | None = None   # (K0, K1, nK), 2-D presets
    reciprocal: bool = False                    # emit -1/mode with a -1/cos reference
    plot_part: str = "re"
    clip: tuple[float, float] | None = None     # vertical window, plot only

    @property
    def columns(self) -> tuple[str, ...]:
        if self.k_grid is not None:
            return ("t", "K", "re", "im")
        if self.reciprocal:
            return ("t", "re", "im", "ref")
        return ("t", "re", "im")


@dataclass(frozen=True)
class FigureData:
    preset: FigurePreset
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]
    params: dict = field(default_factory=dict)


PRESETS: dict[str, FigurePreset] = {
    "fig1": FigurePreset("fig1", 0.0, 10.0, 201, k_grid=(0.0, 4.0, 81), plot_part="re"),
    "fig2": FigurePreset("fig2", 0.0, 10.0, 201, k_grid=(0.0, 4.0, 81), plot_part="im"),
    "fig3": FigurePreset("fig3", 0.0, 20.0, 2001, K=0.01, plot_part="re"),
    "fig4": FigurePreset("fig4", 0.0, 20.0, 2001, K=0.01, plot_part="im"),
    "fig5": FigurePreset("fig5", 0.0, 20.0, 2001, K=2.0, plot_part="re"),
    "fig6": FigurePreset("fig6", 0.0, 20.0, 2001, K=2.0, plot_part="re", clip=(-0.5, 0.5)),
    "fig7": FigurePreset("fig7", 0.0, 20.0, 2001, K=2.0, plot_part="im"),
    "fig8": FigurePreset("fig8", 0.0, 20.0, 2001, K=0.01, reciprocal=True, plot_part="re"),
    "fig9": FigurePreset("fig9", 0.0, 20.0, 2001, K=2.0, reciprocal=True, plot_part="im"),
}


def _mode_value(K: float, t: float) -> complex:
    spec = SingleKSpec(base=OscillatorSpec(kappa=1, omega0=1.0), K=K)
    if K == 0.0:
        spec.mask.check(t)
        return bosonic_mode_zero_k_limit(spec, _CONSTS, t)
    return bosonic_mode(spec, _CONSTS, t)


def figure_dataset(name: str) -> FigureData:
    """Compute the dataset for one preset; rows near singular times are nan."""
    preset = PRESETS.get(name)
    if preset is None:
        raise ValidationError(
            f"unknown figure preset {name!r}; choose from {sorted(PRESETS)}"
        )
    ts = np.linspace(preset.t0, preset.t1, preset.nt)
    rows: list[tuple[float, ...]] = []
    if preset.k_grid is not None:
        k0, k1, nk = preset.k_grid
        ks = np.linspace(k0, k1, nk)
        for K in ks:
            for t in ts:
                try:
                    w = _mode_value(float(K), float(t))
                    rows.append((float(t), float(K), w.real, w.imag))
                except SingularityError:
                    rows.append((float(t), float(K), _NAN, _NAN))
        params = {
            "kappa": 1, "omega0": 1.0, "alpha": [0.5, 0.0], "beta": [0.5, 0.0],
            "t0": preset.t0, "t1": preset.t1, "nt": preset.nt,
            "K0": k0, "K1": k1, "nK": nk,
        }
        return FigureData(preset, preset.columns, rows, params)

    for t in ts:
        try:
            w = _mode_value(preset.K, float(t))
            if preset.reciprocal:
                v = -1.0 / w
                ref = -1.0 / math.cos(t)
                rows.append((float(t), v.real, v.imag, ref))
            else:
                rows.append((float(t), w.real, w.imag))
        except (SingularityError, ZeroDivisionError):
            rows.append((float(t),) + (_NAN,) * (len(preset.columns) - 1))
    params = {
        "kappa": 1, "omega0": 1.0, "alpha": [0.5, 0.0], "beta": [0.5, 0.0],
        "t0": preset.t0, "t1": preset.t1, "nt": preset.nt, "K": preset.K,
    }
    return FigureData(preset, preset.columns, rows, params)
