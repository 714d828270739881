"""Single-coupling extension of the oscillator: the coupled first-order pair,
the decoupled complex-frequency coefficients, the closed-form modes built
from Gauss hypergeometric functions, their small-coupling approximations,
and the coupling-derived partner mode.

Every closed form here carries analytic first and second time derivatives
(via the jet helpers), so residual certification is finite-difference free.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import CouplingError, DegenerateParameterError, ValidationError
from .hypergeom import DEFAULT_OPTIONS, EvalOptions, cpow_principal, hyp2f1_jet
from .jets import Jet, jet_add, jet_compose, jet_mul, jet_pow, jet_scale
from .oscillator import OscillatorSpec, SingularityMask, riccati_particular_jet

__all__ = [
    "SingleKSpec",
    "DerivedParams",
    "ZVariables",
    "ModeConstants",
    "coeff_fermionic",
    "coeff_bosonic",
    "coeff_bosonic_derivative",
    "derived_params",
    "z_variables",
    "bosonic_mode",
    "bosonic_mode_jet",
    "bosonic_basis",
    "bosonic_mode_small_k",
    "bosonic_mode_zero_k_limit",
    "fermionic_reciprocal",
    "fermionic_from_coupling",
    "fermionic_from_coupling_jet",
]

SMALL_K_RATIO = 0.1


@dataclass(frozen=True)
class SingleKSpec:
    """Oscillator plus the real coupling constant K (any sign, same units
    as omega0)."""

    base: OscillatorSpec
    K: float

    @property
    def mask(self) -> SingularityMask:
        return SingularityMask.for_spec(self.base)


@dataclass(frozen=True)
class DerivedParams:
    """Exponent/parameter set of the closed-form modes, principal roots."""

    p: complex
    q: complex
    r: complex
    s: complex


@dataclass(frozen=True)
class ZVariables:
    z1: complex
    z2: complex
    z3: complex
    z4: complex


@dataclass(frozen=True)
class ModeConstants:
    """Integration constants selecting a point of the 2-D solution space."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        if self.alpha == 0 and self.beta == 0:
            raise ValidationError("alpha and beta must not both vanish")


@lru_cache(maxsize=256)
def _derived(kratio: float) -> DerivedParams:
    return DerivedParams(
        p=0.5 * (1.0 + cmath.sqrt(1.0 - 2.0 * kratio)),
        q=0.5 * (1.0 + cmath.sqrt(1.0 + 2.0 * kratio)),
        r=0.5 * cmath.sqrt(1.0 + 2.0j * kratio),
        s=0.5 * cmath.sqrt(1.0 - 2.0j * kratio),
    )


def derived_params(spec: SingleKSpec) -> DerivedParams:
    return _derived(spec.K / spec.base.omega0)


def z_variables(spec: SingleKSpec, t: float) -> ZVariables:
    """The four combinations of tan/coth the closed forms are written in."""
    spec.mask.check(t)
    th = spec.base.omega0 * t
    T = math.tan(th)
    H = 1.0 / math.tanh(th) if th != 0.0 else math.inf
    return ZVariables(z1=1j * T - 1.0, z2=1j * T + 1.0, z3=H + 1.0, z4=H - 1.0)


def coeff_fermionic(spec: SingleKSpec, t: float) -> complex:
    """c(t) of the decoupled partner equation w1'' + c(t) w1 = 0."""
    spec.mask.check(t)
    w0 = spec.base.omega0
    th = w0 * t
    k2 = 2.0 * spec.K / w0
    if spec.base.kappa == 1:
        T = math.tan(th)
        return -(w0 * w0) * ((1.0 + 2.0 * T * T) + 1j * k2 * T)
    H = 1.0 / math.tanh(th)
    return (w0 * w0) * ((1.0 - 2.0 * H * H) + 1j * k2 * H)


def coeff_bosonic(spec: SingleKSpec, t: float) -> complex:
    """c(t) of the decoupled classical-side equation w2'' + c(t) w2 = 0."""
    spec.mask.check(t)
    w0 = spec.base.omega0
    th = w0 * t
    k2 = 2.0 * spec.K / w0
    if spec.base.kappa == 1:
        return (w0 * w0) * (1.0 - 1j * k2 * math.tan(th))
    return -(w0 * w0) * (1.0 - 1j * k2 / math.tanh(th))


def coeff_bosonic_derivative(spec: SingleKSpec, t: float) -> complex:
    """Analytic d/dt of coeff_bosonic; used for third derivatives of modes."""
    spec.mask.check(t)
    w0 = spec.base.omega0
    th = w0 * t
    if spec.base.kappa == 1:
        T = math.tan(th)
        return -2j * spec.K * w0 * w0 * (1.0 + T * T)
    H = 1.0 / math.tanh(th)
    return -2j * spec.K * w0 * w0 * (H * H - 1.0)


# --- closed-form modes ------------------------------------------------------

def _trig_jets(spec: SingleKSpec, t: float) -> tuple[Jet, Jet, Jet]:
    """(z1, z2, argument) jets for the kappa=+1 closed form."""
    w0 = spec.base.omega0
    T = math.tan(w0 * t)
    sec2 = 1.0 + T * T
    dz = 1j * w0 * sec2
    ddz = 2j * w0 * w0 * sec2 * T
    z1: Jet = (1j * T - 1.0, dz, ddz)
    z2: Jet = (1j * T + 1.0, dz, ddz)
    arg = jet_scale(z1, -0.5)
    return z1, z2, arg


def _hyp_jets(spec: SingleKSpec, t: float) -> tuple[Jet, Jet, Jet]:
    """(z3, z4, argument) jets for the kappa=-1 closed form."""
    w0 = spec.base.omega0
    H = 1.0 / math.tanh(w0 * t)
    csch2 = H * H - 1.0
    dz = -w0 * csch2
    ddz = 2.0 * w0 * w0 * csch2 * H
    z3: Jet = (H + 1.0, dz, ddz)
    z4: Jet = (H - 1.0, dz, ddz)
    arg = jet_scale(z3, 0.5)
    return z3, z4, arg


def _basis_term_trig(
    spec: SingleKSpec, t: float, second: bool, opts: EvalOptions
) -> Jet:
    dp = derived_params(spec)
    p, q = dp.p, dp.q
    z1, z2, arg = _trig_jets(spec, t)
    e1 = -(p - 0.5) if second else (p - 0.5)
    if second:
        a, b, c = q - p, q - p + 1.0, 2.0 - 2.0 * p
    else:
        a, b, c = p + q, p + q - 1.0, 2.0 * p
    fj = hyp2f1_jet(a, b, c, arg[0], opts)
    pref = jet_mul(jet_pow(z1, e1), jet_pow(z2, q - 0.5))
    return jet_mul(pref, jet_compose(fj, arg))


def _basis_term_hyp(
    spec: SingleKSpec, t: float, second: bool, opts: EvalOptions
) -> Jet:
    dp = derived_params(spec)
    r, s = dp.r, dp.s
    z3, z4, arg = _hyp_jets(spec, t)
    e3 = -r if second else r
    if second:
        a, b, c = s - r + 1.0, s - r, 1.0 - 2.0 * r
    else:
        a, b, c = r + s, r + s + 1.0, 1.0 + 2.0 * r
    fj = hyp2f1_jet(a, b, c, arg[0], opts)
    pref = jet_mul(jet_pow(z3, e3), jet_pow(z4, s))
    return jet_mul(pref, jet_compose(fj, arg))


def _check_second_branch(spec: SingleKSpec) -> None:
    dp = derived_params(spec)
    if spec.base.kappa == 1:
        c = 2.0 - 2.0 * dp.p
    else:
        c = 1.0 - 2.0 * dp.r
    if abs(c.imag) < 1e-12 and abs(c.real - round(c.real)) < 1e-12 and c.real < 0.5:
        raise DegenerateParameterError(
            f"second basis term undefined at K={spec.K}: its hypergeometric "
            f"c-parameter {c} is a nonpositive integer (use the zero-coupling "
            f"limit helper for K=0)"
        )


def _second_term_prefactor(spec: SingleKSpec) -> complex:
    """Fixed constant multiplying the second basis term, principal branches."""
    dp = derived_params(spec)
    if spec.base.kappa == 1:
        return -cmath.exp(-2j * cmath.pi * dp.p) * cpow_principal(4.0, dp.p - 0.5)
    return cpow_principal(4.0, dp.r)


def bosonic_mode_jet(
    spec: SingleKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> Jet:
    """(w2, w2', w2'') of the closed-form classical-side mode.

    Basis terms whose constant vanishes are skipped, so alpha-only
    evaluations work even where the second term is degenerate.
    """
    spec.mask.check(t)
    term = _basis_term_trig if spec.base.kappa == 1 else _basis_term_hyp
    total: Jet = (0j, 0j, 0j)
    if consts.alpha != 0:
        total = jet_add(total, jet_scale(term(spec, t, False, opts), consts.alpha))
    if consts.beta != 0:
        _check_second_branch(spec)
        pref = _second_term_prefactor(spec)
        total = jet_add(total, jet_scale(term(spec, t, True, opts), consts.beta * pref))
    return total


def bosonic_mode(
    spec: SingleKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """Closed-form mode value; two-dimensional space spanned via (alpha, beta)."""
    return bosonic_mode_jet(spec, consts, t, opts)[0]


def bosonic_basis(
    spec: SingleKSpec, opts: EvalOptions = DEFAULT_OPTIONS
) -> tuple[Callable[[float], Jet], ...]:
    """Jet evaluators for the individual basis terms (one term when the
    second is degenerate, e.g. K=0). Constant prefactors are omitted: they
    drop out of residuals and Wronskian-constancy checks."""
    term = _basis_term_trig if spec.base.kappa == 1 else _basis_term_hyp

    def first(t: float) -> Jet:
        spec.mask.check(t)
        return term(spec, t, False, opts)

    try:
        _check_second_branch(spec)
    except DegenerateParameterError:
        return (first,)

    def second(t: float) -> Jet:
        spec.mask.check(t)
        return term(spec, t, True, opts)

    return (first, second)


def bosonic_mode_zero_k_limit(
    spec: SingleKSpec, consts: ModeConstants, t: float
) -> complex:
    """Pointwise K->0 limit of the kappa=+1 mode: 2i alpha e^{-i w0 t}
    + 4i beta cos(w0 t). Solves w'' + w0^2 w = 0 exactly."""
    if spec.base.kappa != 1:
        raise ValidationError("zero-coupling limit implemented for kappa=+1")
    th = spec.base.omega0 * t
    return 2j * consts.alpha * cmath.exp(-1j * th) + 4j * consts.beta * math.cos(th)


def bosonic_mode_small_k(
    spec: SingleKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """Small-coupling approximation of the mode.

    The second term's hypergeometric factor has equal first and third
    parameters and collapses to a binomial; the first term keeps the exact
    prefactor exponents but approximates the series parameters to first
    order in K/omega0.
    """
    spec.mask.check(t)
    w0 = spec.base.omega0
    kr = spec.K / w0
    if abs(kr) > SMALL_K_RATIO:
        warnings.warn(
            f"|K|/omega0 = {abs(kr):.3g} exceeds {SMALL_K_RATIO}; the "
            f"small-coupling form degrades linearly in K",
            stacklevel=2,
        )
    dp = derived_params(spec)
    if spec.base.kappa == 1:
        z1, z2, arg = _trig_jets(spec, t)
        p, q = dp.p, dp.q
        t1 = (
            cpow_principal(z1[0], p - 0.5)
            * cpow_principal(z2[0], q - 0.5)
            * hyp2f1_jet(2.0, 1.0, 2.0 - kr, arg[0], opts)[0]
        )
        # 2F1(kr, 1 + kr; kr; u) = (1 - u)^-(1+kr), and 1 - u = z2/2
        t2 = (
            cpow_principal(z1[0], -(p - 0.5))
            * cpow_principal(z2[0], q - 0.5)
            * cpow_principal(z2[0] / 2.0, -(1.0 + kr))
        )
        phase = -cmath.exp(-2j * cmath.pi * p) * cpow_principal(4.0, p - 0.5)
        return consts.alpha * t1 + consts.beta * phase * t2
    z3, z4, arg = _hyp_jets(spec, t)
    r, s = dp.r, dp.s
    t1 = (
        cpow_principal(z3[0], r)
        * cpow_principal(z4[0], s)
        * hyp2f1_jet(1.0, 2.0, 2.0 + 1j * kr, arg[0], opts)[0]
    )
    # 2F1(1 - i kr, -i kr; -i kr; u) = (1 - u)^-(1 - i kr), and 1 - u = -z4/2
    t2 = (
        cpow_principal(z3[0], -r)
        * cpow_principal(z4[0], s)
        * cpow_principal(-z4[0] / 2.0, -(1.0 - 1j * kr))
    )
    return consts.alpha * t1 + consts.beta * cpow_principal(4.0, r) * t2


def fermionic_reciprocal(
    spec: SingleKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """1 / bosonic_mode: the claimed partner mode. Reported as a diagnostic;
    the coupling relation is the authoritative construction."""
    w = bosonic_mode(spec, consts, t, opts)
    if w == 0:
        raise ZeroDivisionError(f"bosonic mode has a node at t={t}")
    return 1.0 / w


def fermionic_from_coupling_jet(
    spec: SingleKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> Jet:
    """(w1, w1', w1'') obtained by applying the coupling relation
    w1 = [-i d/dt + i u + K] w2 / K to the closed-form w2.

    The third derivative of w2 required for w1'' comes from the certified
    second-order equation, w2''' = -(c' w2 + c w2').
    """
    if spec.K == 0:
        raise CouplingError("the coupling relation degenerates at K=0")
    spec.mask.check(t)
    K = spec.K
    u, up, upp = riccati_particular_jet(spec.base, t)
    w2, d1, d2 = bosonic_mode_jet(spec, consts, t, opts)
    c = coeff_bosonic(spec, t)
    cp = coeff_bosonic_derivative(spec, t)
    d3 = -(cp * w2 + c * d1)
    g = 1j * u + K
    w1 = (-1j * d1 + g * w2) / K
    w1p = (-1j * d2 + 1j * up * w2 + g * d1) / K
    w1pp = (-1j * d3 + 1j * upp * w2 + 2j * up * d1 + g * d2) / K
    return (w1, w1p, w1pp)


def fermionic_from_coupling(
    spec: SingleKSpec,
    consts: ModeConstants,
    t: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    return fermionic_from_coupling_jet(spec, consts, t, opts)[0]
