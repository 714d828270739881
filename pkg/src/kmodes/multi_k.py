"""Multi-parameter coupling: four real constants (K1, K2, K1', K2') drive the
coupled pair; a unimodular gauge factor removes the first-derivative term and
the gauged components obey complex-frequency equations solved by the same
hypergeometric machinery, parameterized by four radicals (Omega1..Omega4).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Literal

from .errors import ValidationError
from .hypergeom import DEFAULT_OPTIONS, EvalOptions, cpow_principal, hyp2f1_jet
from .jets import Jet, jet_add, jet_compose, jet_mul, jet_pow, jet_scale
from .oscillator import OscillatorSpec, SingularityMask, riccati_particular_jet
from .single_k import ModeConstants
from .verify import TimeGrid

__all__ = [
    "MultiKSpec",
    "OmegaParams",
    "omega_params",
    "coeff_z",
    "potential_q",
    "potential_coefficient_gap",
    "gauge_factor",
    "z_mode",
    "z_mode_jet",
    "z_basis",
    "w_from_z",
    "w_mode_jet",
    "coupled_form_residual",
]

Component = Literal["fermionic", "bosonic"]


@dataclass(frozen=True)
class MultiKSpec:
    """Oscillator plus the four real coupling constants (K1p, K2p are the
    primed pair)."""

    base: OscillatorSpec
    K1: float
    K2: float
    K1p: float
    K2p: float

    @property
    def delta_k(self) -> float:
        return self.K1 - self.K2

    @property
    def mask(self) -> SingularityMask:
        return SingularityMask.for_spec(self.base)


@dataclass(frozen=True)
class OmegaParams:
    Omega1: complex
    Omega2: complex
    Omega3: complex
    Omega4: complex


def omega_params(spec: MultiKSpec) -> OmegaParams:
    """The four radicals, principal square roots."""
    w0 = spec.base.omega0
    ks = spec.K1 + spec.K2
    kk = spec.K1p * spec.K2p
    return OmegaParams(
        Omega1=cmath.sqrt(4 * w0 * w0 + ks * ks + 4 * (ks * w0 - kk)),
        Omega2=cmath.sqrt(4 * w0 * w0 + ks * ks - 4 * (ks * w0 + kk)),
        Omega3=cmath.sqrt(4 * w0 * w0 - ks * ks - 4 * (1j * ks * w0 - kk)),
        Omega4=cmath.sqrt(4 * w0 * w0 - ks * ks + 4 * (1j * ks * w0 + kk)),
    )


def _const_shift(spec: MultiKSpec) -> float:
    """(K2-K1)^2/4w0^2 + (K1 K2 - K1' K2')/w0^2, the constant bracket terms."""
    w0sq = spec.base.omega0 ** 2
    return (
        (spec.K2 - spec.K1) ** 2 / (4 * w0sq)
        + (spec.K1 * spec.K2 - spec.K1p * spec.K2p) / w0sq
    )


def coeff_z(spec: MultiKSpec, component: Component, t: float) -> complex:
    """c(t) of the gauged second-order equation Z'' + c(t) Z = 0."""
    if component not in ("fermionic", "bosonic"):
        raise ValidationError(f"component must be 'fermionic' or 'bosonic', got {component!r}")
    spec.mask.check(t)
    w0 = spec.base.omega0
    th = w0 * t
    ks_ratio = (spec.K1 + spec.K2) / w0
    shift = _const_shift(spec)
    if spec.base.kappa == 1:
        T = math.tan(th)
        if component == "bosonic":
            return (w0 * w0) * (1.0 + shift - 1j * ks_ratio * T)
        return -(w0 * w0) * (1.0 + 2.0 * T * T - shift + 1j * ks_ratio * T)
    H = 1.0 / math.tanh(th)
    if component == "bosonic":
        return -(w0 * w0) * (1.0 - shift - 1j * ks_ratio * H)
    return (w0 * w0) * (1.0 - 2.0 * H * H + shift + 1j * ks_ratio * H)


def potential_q(spec: MultiKSpec, component: int, t: float) -> complex:
    """The gauged potential built directly from the particular Riccati
    solution: [+-u' + i(K1+K2)u + (K1 K2 - K1' K2') - u^2] + (K1-K2)^2/4,
    with + for component 1 (fermionic side) and - for component 2."""
    if component not in (1, 2):
        raise ValidationError(f"component must be 1 or 2, got {component}")
    u, up, _ = riccati_particular_jet(spec.base, t)
    sign = 1.0 if component == 1 else -1.0
    return (
        sign * up
        + 1j * (spec.K1 + spec.K2) * u
        + (spec.K1 * spec.K2 - spec.K1p * spec.K2p)
        - u * u
        + 0.25 * spec.delta_k ** 2
    )


def potential_coefficient_gap(
    spec: MultiKSpec, component: Component, grid: TimeGrid
) -> tuple[complex, float]:
    """(mean gap, max deviation from that mean) between the Riccati-built
    potential and the explicit coefficient over a grid.

    Both constructions should differ by at most a constant; the observed
    constant is returned rather than asserted.
    """
    idx = 1 if component == "fermionic" else 2
    gaps = [potential_q(spec, idx, t) - coeff_z(spec, component, t) for t in grid.points]
    mean = sum(gaps) / len(gaps)
    spread = max(abs(g - mean) for g in gaps)
    return mean, spread


def gauge_factor(spec: MultiKSpec, t: float) -> complex:
    """exp(i (K1-K2) t / 2): the unimodular factor mapping Z back to w."""
    return cmath.exp(0.5j * spec.delta_k * t)


def _gauge_jet(spec: MultiKSpec, t: float) -> Jet:
    g = gauge_factor(spec, t)
    d = 0.5j * spec.delta_k
    return (g, d * g, d * d * g)


def w_from_z(spec: MultiKSpec, z_value: complex, t: float) -> complex:
    """Apply the gauge factor to a gauged-component value."""
    return z_value * gauge_factor(spec, t)


# --- closed forms -----------------------------------------------------------

def _z_term_trig(spec: MultiKSpec, t: float, second: bool, opts: EvalOptions) -> Jet:
    """Basis terms for kappa=+1: prefactors [tan -+ i]^(Omega/4w0), series in
    the variable (1 + i tan)/2 where the gauged equation is hypergeometric."""
    om = omega_params(spec)
    w0 = spec.base.omega0
    e1 = om.Omega1 / (4 * w0)
    e2 = om.Omega2 / (4 * w0)
    T = math.tan(w0 * t)
    sec2 = 1.0 + T * T
    dT = w0 * sec2
    ddT = 2.0 * w0 * w0 * sec2 * T
    g1: Jet = (T - 1j, dT, ddT)
    g2: Jet = (T + 1j, dT, ddT)
    arg: Jet = (0.5 * (1.0 + 1j * T), 0.5j * dT, 0.5j * ddT)
    if second:
        a = (om.Omega2 - om.Omega1) / (4 * w0)
        c = 1.0 - om.Omega1 / (2 * w0)
        pref = jet_mul(jet_pow(g1, -e1), jet_pow(g2, e2))
    else:
        a = (om.Omega1 + om.Omega2) / (4 * w0)
        c = 1.0 + om.Omega1 / (2 * w0)
        pref = jet_mul(jet_pow(g1, e1), jet_pow(g2, e2))
    fj = hyp2f1_jet(a, a + 1.0, c, arg[0], opts)
    return jet_mul(pref, jet_compose(fj, arg))


def _z_term_hyp(spec: MultiKSpec, t: float, second: bool, opts: EvalOptions) -> Jet:
    """Basis terms for kappa=-1: prefactors [coth -+ 1]^(Omega/4w0), series in
    -(coth - 1)/2."""
    om = omega_params(spec)
    w0 = spec.base.omega0
    e3 = om.Omega3 / (4 * w0)
    e4 = om.Omega4 / (4 * w0)
    H = 1.0 / math.tanh(w0 * t)
    csch2 = H * H - 1.0
    dH = -w0 * csch2
    ddH = 2.0 * w0 * w0 * csch2 * H
    g3: Jet = (H - 1.0, dH, ddH)
    g4: Jet = (H + 1.0, dH, ddH)
    arg = jet_scale(g3, -0.5)
    if second:
        a = (om.Omega4 - om.Omega3) / (4 * w0)
        c = 1.0 - om.Omega3 / (2 * w0)
        pref = jet_mul(jet_pow(g3, -e3), jet_pow(g4, e4))
    else:
        a = (om.Omega3 + om.Omega4) / (4 * w0)
        c = 1.0 + om.Omega3 / (2 * w0)
        pref = jet_mul(jet_pow(g3, e3), jet_pow(g4, e4))
    fj = hyp2f1_jet(a, a + 1.0, c, arg[0], opts)
    return jet_mul(pref, jet_compose(fj, arg))


def _second_term_constant(spec: MultiKSpec) -> complex:
    om = omega_params(spec)
    w0 = spec.base.omega0
    if spec.base.kappa == 1:
        return cpow_principal(-1.0, -om.Omega1 / (2 * w0))
    return cpow_principal(-1.0, -om.Omega3 / (2 * w0)) * cpow_principal(
        4.0, om.Omega3 / (2 * w0)
    )


def z_mode_jet(
    spec: MultiKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> Jet:
    """(Z2, Z2', Z2'') of the gauged classical-side closed form."""
    spec.mask.check(t)
    term = _z_term_trig if spec.base.kappa == 1 else _z_term_hyp
    total: Jet = (0j, 0j, 0j)
    if consts.alpha != 0:
        total = jet_add(total, jet_scale(term(spec, t, False, opts), consts.alpha))
    if consts.beta != 0:
        pref = _second_term_constant(spec)
        total = jet_add(total, jet_scale(term(spec, t, True, opts), consts.beta * pref))
    return total


def z_mode(
    spec: MultiKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    return z_mode_jet(spec, consts, t, opts)[0]


def z_basis(
    spec: MultiKSpec, opts: EvalOptions = DEFAULT_OPTIONS
) -> tuple[Callable[[float], Jet], Callable[[float], Jet]]:
    """Jet evaluators for the two basis terms, constants omitted."""
    term = _z_term_trig if spec.base.kappa == 1 else _z_term_hyp

    def first(t: float) -> Jet:
        spec.mask.check(t)
        return term(spec, t, False, opts)

    def second(t: float) -> Jet:
        spec.mask.check(t)
        return term(spec, t, True, opts)

    return first, second


def w_mode_jet(
    spec: MultiKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> Jet:
    """(w2, w2', w2'') of the ungauged mode w = Z * gauge_factor."""
    return jet_mul(z_mode_jet(spec, consts, t, opts), _gauge_jet(spec, t))


def coupled_form_residual(
    spec: MultiKSpec, component: Component, jet: Jet, t: float
) -> complex:
    """Residual of the ungauged second-order form,
    w'' - i(K1-K2) w' + [+-u' + i(K1+K2)u + (K1 K2 - K1'K2') - u^2] w,
    for a w supplied with analytic derivatives."""
    u, up, _ = riccati_particular_jet(spec.base, t)
    sign = 1.0 if component == "fermionic" else -1.0
    bracket = (
        sign * up
        + 1j * (spec.K1 + spec.K2) * u
        + (spec.K1 * spec.K2 - spec.K1p * spec.K2p)
        - u * u
    )
    w, w1, w2 = jet
    return w2 - 1j * spec.delta_k * w1 + bracket * w
