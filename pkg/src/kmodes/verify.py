"""Independent verification tools: ODE residual evaluation on grids, adaptive
integration of complex second-order linear ODEs (the brute-force oracle for
every closed form), series comparison, and Wronskians.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import GridError, IntegrationError, ValidationError
from .jets import Jet
from .oscillator import SingularityMask

__all__ = [
    "TimeGrid",
    "ComplexSeries",
    "ResidualReport",
    "IntegratorOptions",
    "ode_residual",
    "integrate_second_order",
    "integrate_to",
    "compare_series",
    "wronskian",
]

CoeffFn = Callable[[float], complex]
JetFn = Callable[[float], Jet]


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid on [t0, t1]; construction fails if any point falls inside
    an active singularity mask, so downstream code never re-checks."""

    t0: float
    t1: float
    n: int

    def __post_init__(self):
        if not self.t0 < self.t1:
            raise GridError(f"need t0 < t1, got [{self.t0}, {self.t1}]")
        if self.n < 2:
            raise GridError(f"need n >= 2, got {self.n}")

    @classmethod
    def with_mask(
        cls, t0: float, t1: float, n: int, masks: Sequence[SingularityMask]
    ) -> "TimeGrid":
        grid = cls(t0, t1, n)
        for mask in masks:
            for t in grid.points:
                if mask.contains(t):
                    raise GridError(
                        f"grid point t={t} lies inside the exclusion radius of "
                        f"the singular point {mask.nearest_singularity(t):g}"
                    )
        return grid

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.t0, self.t1, self.n)


@dataclass(frozen=True)
class ComplexSeries:
    """Sample values over a TimeGrid."""

    grid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.grid.n,):
            raise GridError(
                f"values shape {vals.shape} does not match grid size {self.grid.n}"
            )
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class ResidualReport:
    """Max absolute / relative residual of w'' + c(t) w over a grid.

    The relative residual is normalized per point by |c w| + |w''|, which
    stays meaningful near solution nodes.
    """

    max_abs: float
    max_rel: float
    argmax_t: float
    points: np.ndarray | None = None
    abs_residuals: np.ndarray | None = None
    rel_residuals: np.ndarray | None = None


@dataclass(frozen=True)
class IntegratorOptions:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_steps: int = 1_000_000

    def __post_init__(self):
        if not (0 < self.rel_tol < 1) or not (0 < self.abs_tol < 1):
            raise ValidationError("integrator tolerances must lie in (0, 1)")
        if self.max_steps < 1:
            raise ValidationError("max_steps must be positive")


def ode_residual(
    coeff: CoeffFn,
    solution: JetFn,
    grid: TimeGrid,
    include_points: bool = False,
) -> ResidualReport:
    """Residual of w'' + c(t) w = 0 for a solution with analytic derivatives."""
    ts = grid.points
    abs_res = np.empty(grid.n)
    rel_res = np.empty(grid.n)
    for i, t in enumerate(ts):
        try:
            w, _, w2 = solution(t)
            c = coeff(t)
        except Exception as exc:
            raise type(exc)(f"{exc} (at grid point t={t})") from exc
        r = w2 + c * w
        den = abs(c * w) + abs(w2)
        abs_res[i] = abs(r)
        rel_res[i] = abs(r) / den if den > 0.0 else abs(r)
    imax = int(np.argmax(rel_res))
    return ResidualReport(
        max_abs=float(np.max(abs_res)),
        max_rel=float(rel_res[imax]),
        argmax_t=float(ts[imax]),
        points=ts if include_points else None,
        abs_residuals=abs_res if include_points else None,
        rel_residuals=rel_res if include_points else None,
    )


# --- Dormand-Prince 5(4) with cubic Hermite dense output -------------------

_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)


def _rhs(coeff: CoeffFn, t: float, y: tuple[complex, complex]) -> tuple[complex, complex]:
    return (y[1], -coeff(t) * y[0])


def _integrate_core(
    coeff: CoeffFn,
    w0: complex,
    w0prime: complex,
    ts: np.ndarray,
    opts: IntegratorOptions,
) -> tuple[np.ndarray, tuple[complex, complex]]:
    """Shared stepper: dense output at ts plus the exact final state."""
    t = float(ts[0])
    t_end = float(ts[-1])
    y = (complex(w0), complex(w0prime))
    f = _rhs(coeff, t, y)
    out = np.empty(len(ts), dtype=np.complex128)
    out[0] = y[0]
    next_i = 1

    span = t_end - t
    h = span * 1e-3
    min_h = span * 1e-14

    k = [f] + [(0j, 0j)] * 6
    steps = 0
    while next_i < len(ts):
        if steps >= opts.max_steps:
            raise IntegrationError(
                f"step budget {opts.max_steps} exhausted at t={t}", last_time=t
            )
        if h < min_h:
            raise IntegrationError(f"step size underflow at t={t}", last_time=t)
        if t + h > t_end:
            h = t_end - t
        # stages
        for s in range(1, 7):
            acc0 = 0j
            acc1 = 0j
            for j, a in enumerate(_DP_A[s]):
                acc0 += a * k[j][0]
                acc1 += a * k[j][1]
            ys = (y[0] + h * acc0, y[1] + h * acc1)
            k[s] = _rhs(coeff, t + _DP_C[s] * h, ys)
        y5 = (
            y[0] + h * sum(b * k[j][0] for j, b in enumerate(_DP_B5)),
            y[1] + h * sum(b * k[j][1] for j, b in enumerate(_DP_B5)),
        )
        e0 = h * sum((b5 - b4) * k[j][0] for j, (b5, b4) in enumerate(zip(_DP_B5, _DP_B4)))
        e1 = h * sum((b5 - b4) * k[j][1] for j, (b5, b4) in enumerate(zip(_DP_B5, _DP_B4)))
        sc0 = opts.abs_tol + opts.rel_tol * max(abs(y[0]), abs(y5[0]))
        sc1 = opts.abs_tol + opts.rel_tol * max(abs(y[1]), abs(y5[1]))
        err = max(abs(e0) / sc0, abs(e1) / sc1)
        steps += 1
        if err <= 1.0:
            t_new = t + h
            f_new = k[6]  # FSAL: last stage is the derivative at (t_new, y5)
            # dense output over [t, t_new]
            while next_i < len(ts) and ts[next_i] <= t_new + 1e-14 * abs(t_new):
                tau = (float(ts[next_i]) - t) / h
                h00 = (1 + 2 * tau) * (1 - tau) ** 2
                h10 = tau * (1 - tau) ** 2
                h01 = tau * tau * (3 - 2 * tau)
                h11 = tau * tau * (tau - 1)
                out[next_i] = (
                    h00 * y[0] + h10 * h * f[0] + h01 * y5[0] + h11 * h * f_new[0]
                )
                next_i += 1
            t, y, f = t_new, y5, f_new
            k[0] = f
        factor = 0.9 * err ** -0.2 if err > 0.0 else 5.0
        h *= min(5.0, max(0.2, factor))
    return out, y


def integrate_second_order(
    coeff: CoeffFn,
    w0: complex,
    w0prime: complex,
    grid: TimeGrid,
    opts: IntegratorOptions = IntegratorOptions(),
) -> ComplexSeries:
    """Integrate w'' + c(t) w = 0 from (w0, w0') at grid.t0 across the grid.

    Embedded 5(4) pair with proportional step control; grid values come from
    cubic Hermite interpolation inside accepted steps, so output points never
    constrain step selection (except for the final landing on t1).
    """
    out, _ = _integrate_core(coeff, w0, w0prime, grid.points, opts)
    return ComplexSeries(grid=grid, values=out)


def integrate_to(
    coeff: CoeffFn,
    w0: complex,
    w0prime: complex,
    t0: float,
    t1: float,
    opts: IntegratorOptions = IntegratorOptions(),
) -> tuple[complex, complex]:
    """Exact propagated state (w, w') at t1; no dense output."""
    _, final = _integrate_core(coeff, w0, w0prime, np.array([t0, t1]), opts)
    return final


def compare_series(a: ComplexSeries, b: ComplexSeries) -> tuple[float, float]:
    """(max abs difference, max relative difference) of two series on one grid."""
    if a.grid != b.grid:
        raise GridError("series grids differ")
    diff = np.abs(a.values - b.values)
    scale = np.maximum(np.maximum(np.abs(a.values), np.abs(b.values)), 1e-300)
    return float(np.max(diff)), float(np.max(diff / scale))


def wronskian(sol1: JetFn, sol2: JetFn, t: float) -> complex:
    """sol1 sol2' - sol1' sol2 at t; constant in t when both solve the same
    second-order equation with no first-derivative term."""
    a = sol1(t)
    b = sol2(t)
    return a[0] * b[1] - a[1] * b[0]
