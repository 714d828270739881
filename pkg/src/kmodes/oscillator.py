"""Oscillator backbone: particular Riccati solutions, classical and singular
partner modes, factorization identities, and the two-component (spinor) form.

Two branches are supported throughout, selected by kappa: +1 is the normal
trigonometric oscillator, -1 the inverted (hyperbolic) one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import SingularityError, ValidationError

__all__ = [
    "OscillatorSpec",
    "SingularityMask",
    "riccati_particular",
    "riccati_particular_jet",
    "classical_mode",
    "fermionic_zero_mode",
    "fermionic_freq_sq",
    "factorization_residual",
    "spinor_pair",
]

DEFAULT_EXCLUSION_SCALE = 1e-3  # exclusion radius = scale / omega0


@dataclass(frozen=True)
class OscillatorSpec:
    """Branch, natural frequency, and the optional amplitude/phase of the
    classical mode (both ignorable for everything except classical_mode)."""

    kappa: int
    omega0: float
    amplitude: float = 1.0
    phase: float = 0.0

    def __post_init__(self):
        if self.kappa not in (1, -1):
            raise ValidationError(f"kappa must be +1 or -1, got {self.kappa}")
        if not self.omega0 > 0:
            raise ValidationError(f"omega0 must be positive, got {self.omega0}")


@dataclass(frozen=True)
class SingularityMask:
    """Excluded times where the singular partner quantities blow up.

    kappa=+1 excludes (pi/2 + n pi)/omega0; kappa=-1 excludes t=0.
    """

    kappa: int
    omega0: float
    radius: float = field(default=0.0)

    def __post_init__(self):
        if self.radius <= 0.0:
            object.__setattr__(self, "radius", DEFAULT_EXCLUSION_SCALE / self.omega0)

    @classmethod
    def for_spec(cls, spec: OscillatorSpec, radius: float = 0.0) -> "SingularityMask":
        return cls(kappa=spec.kappa, omega0=spec.omega0, radius=radius)

    def nearest_singularity(self, t: float) -> float:
        if self.kappa == -1:
            return 0.0
        period = math.pi / self.omega0
        offset = 0.5 * period
        n = round((t - offset) / period)
        return offset + n * period

    def contains(self, t: float) -> bool:
        return abs(t - self.nearest_singularity(t)) < self.radius

    def check(self, t: float) -> None:
        if self.contains(t):
            raise SingularityError(
                f"t={t} lies within {self.radius:g} of the singular point "
                f"{self.nearest_singularity(t):g}"
            )

    def points_in(self, t0: float, t1: float) -> list[float]:
        """Singular points falling inside [t0, t1]."""
        if self.kappa == -1:
            return [0.0] if t0 <= 0.0 <= t1 else []
        period = math.pi / self.omega0
        pts = []
        n = math.floor((t0 - 0.5 * period) / period)
        while True:
            p = (0.5 + n) * period
            if p > t1:
                break
            if p >= t0:
                pts.append(p)
            n += 1
        return pts


def riccati_particular(spec: OscillatorSpec, t: float) -> float:
    """The particular solution of the quadratic first-order equation:
    -omega0 tan(omega0 t) on kappa=+1, omega0 coth(omega0 t) on kappa=-1."""
    SingularityMask.for_spec(spec).check(t)
    th = spec.omega0 * t
    if spec.kappa == 1:
        return -spec.omega0 * math.tan(th)
    return spec.omega0 / math.tanh(th)


def riccati_particular_jet(spec: OscillatorSpec, t: float) -> tuple[float, float, float]:
    """(u, u', u'') with analytic derivatives; u'' is needed by the coupled forms."""
    SingularityMask.for_spec(spec).check(t)
    w0 = spec.omega0
    th = w0 * t
    if spec.kappa == 1:
        T = math.tan(th)
        sec2 = 1.0 + T * T
        return -w0 * T, -w0 * w0 * sec2, -2.0 * w0**3 * sec2 * T
    H = 1.0 / math.tanh(th)
    csch2 = H * H - 1.0
    return w0 * H, -w0 * w0 * csch2, 2.0 * w0**3 * csch2 * H


def classical_mode(spec: OscillatorSpec, t: float) -> float:
    """W cos(omega0 t + phi) on kappa=+1, W sinh(omega0 t + phi) on kappa=-1."""
    th = spec.omega0 * t + spec.phase
    if spec.kappa == 1:
        return spec.amplitude * math.cos(th)
    return spec.amplitude * math.sinh(th)


def fermionic_zero_mode(spec: OscillatorSpec, t: float) -> float:
    """The singular partner mode: -omega0/cos on kappa=+1, omega0/sinh on kappa=-1."""
    SingularityMask.for_spec(spec).check(t)
    th = spec.omega0 * t
    if spec.kappa == 1:
        return -spec.omega0 / math.cos(th)
    return spec.omega0 / math.sinh(th)


def fermionic_freq_sq(spec: OscillatorSpec, t: float) -> float:
    """Time-dependent squared frequency of the partner equation, u' - u^2."""
    SingularityMask.for_spec(spec).check(t)
    w0 = spec.omega0
    th = w0 * t
    if spec.kappa == 1:
        T = math.tan(th)
        return w0 * w0 * (-1.0 - 2.0 * T * T)
    H = 1.0 / math.tanh(th)
    return w0 * w0 * (1.0 - 2.0 * H * H)


def factorization_residual(spec: OscillatorSpec, t: float) -> float:
    """|u' + u^2 + kappa omega0^2| with the analytic derivative of u.

    Zero up to rounding: the factorization identity that generates both
    partner equations.
    """
    u, up, _ = riccati_particular_jet(spec, t)
    return abs(up + u * u + spec.kappa * spec.omega0**2)


def spinor_pair(spec: OscillatorSpec, t: float) -> tuple[complex, complex]:
    """The two components (singular partner, omega0-scaled classical mode) of
    the first-order matrix form; their product is constant in t."""
    SingularityMask.for_spec(spec).check(t)
    w0 = spec.omega0
    th = w0 * t
    wf = fermionic_zero_mode(spec, t)
    if spec.kappa == 1:
        wb = w0 * spec.amplitude * math.cos(th + spec.phase)
    else:
        wb = w0 * spec.amplitude * math.sinh(th + spec.phase)
    return complex(wf), complex(wb)
