"""Application calculators: complex waveguide index profiles and their
first-order (Riccati) consistency check, the two-beam paraxial profile pair,
the Q-parameterized cavity eigenfrequency shift, and the solvable
cosecant-squared crystal with its residual certification.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, ValidationError
from .hypergeom import DEFAULT_OPTIONS, EvalOptions, HypParams, cpow_principal, hyp2f1, hyp2f1_jet
from .jets import Jet, jet_add, jet_compose, jet_mul, jet_pow, jet_scale
from .oscillator import OscillatorSpec
from .single_k import ModeConstants, SingleKSpec, coeff_bosonic, coeff_fermionic
from .verify import ResidualReport, TimeGrid, ode_residual

__all__ = [
    "WaveguideSpec",
    "TwoBeamSpec",
    "SchumannSpec",
    "ScarfSpec",
    "waveguide_profiles",
    "riccati_index_check",
    "two_beam_profile",
    "schumann_shift",
    "scarf_solution",
    "scarf_solution_jet",
    "scarf_basis",
    "scarf_residual",
    "scarf_coefficient",
]

PARAXIAL_LIMIT = 0.5


@dataclass(frozen=True)
class WaveguideSpec:
    """Spatial relabeling of the oscillator: k0 plays omega0 along the
    inhomogeneity axis x."""

    k0: float
    K: float
    kappa: int

    def __post_init__(self):
        if not self.k0 > 0:
            raise ValidationError(f"k0 must be positive, got {self.k0}")
        if self.kappa not in (1, -1):
            raise ValidationError(f"kappa must be +1 or -1, got {self.kappa}")

    def _oscillator(self) -> SingleKSpec:
        return SingleKSpec(base=OscillatorSpec(kappa=self.kappa, omega0=self.k0), K=self.K)


@dataclass(frozen=True)
class TwoBeamSpec:
    k0: float
    epsilon: float

    def __post_init__(self):
        if not self.k0 > 0:
            raise ValidationError(f"k0 must be positive, got {self.k0}")
        if not 0 < self.epsilon < 1:
            raise ValidationError(
                f"epsilon (wavelength/beam width) must lie in (0,1), got {self.epsilon}"
            )


@dataclass(frozen=True)
class SchumannSpec:
    Q: float
    omega0: float = 1.0

    def __post_init__(self):
        if not self.Q > 0:
            raise ValidationError(f"cavity quality factor must be positive, got {self.Q}")
        if not self.omega0 > 0:
            raise ValidationError(f"omega0 must be positive, got {self.omega0}")


@dataclass(frozen=True)
class ScarfSpec:
    """Lattice parameter a, potential-strength parameter s, spectral
    parameter lam of the cosecant-squared crystal."""

    a: float
    s: complex
    lam: complex

    def __post_init__(self):
        if not self.a > 0:
            raise ValidationError(f"lattice parameter must be positive, got {self.a}")
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "lam", complex(self.lam))


def waveguide_profiles(spec: WaveguideSpec, x: float) -> tuple[complex, complex]:
    """(n_b^2, n_f^2) at x: the squared index profiles of the paired
    waveguides, identical to the certified oscillator coefficients divided
    by k0^2 (time relabeled to space)."""
    osc = spec._oscillator()
    k0sq = spec.k0 * spec.k0
    return coeff_bosonic(osc, x) / k0sq, coeff_fermionic(osc, x) / k0sq


def riccati_index_check(
    spec: WaveguideSpec,
    R: Callable[[float], float],
    x: float,
    c_light: float = 1.0,
    k: float = 0.0,
    R_prime: Callable[[float], float] | None = None,
) -> tuple[float, float]:
    """Residuals |omega0^2 n^2 / c^2 - (k^2 -+ R' - R^2)| for the two
    profiles: minus sign on the bosonic profile, plus on the fermionic,
    matching the factorization ordering.

    R' comes from the caller or a 5-point central difference.
    """
    if R_prime is not None:
        rp = R_prime(x)
    else:
        h = 1e-4 * max(1.0, abs(x))
        rp = (
            -R(x + 2 * h) + 8 * R(x + h) - 8 * R(x - h) + R(x - 2 * h)
        ) / (12 * h)
    nb2, nf2 = waveguide_profiles(spec, x)
    w0sq = spec.k0 * spec.k0
    rr = R(x) ** 2
    res_b = abs(w0sq * nb2 / c_light**2 - (k * k - rp - rr))
    res_f = abs(w0sq * nf2 / c_light**2 - (k * k + rp - rr))
    return res_b, res_f


def two_beam_profile(spec: TwoBeamSpec, x: float) -> tuple[float, float]:
    """Frequency-split profile differences of the paraxial two-beam pair:
    -+k0 - k0^2 x^2 (1 -+ epsilon)."""
    if abs(spec.k0 * x) > PARAXIAL_LIMIT:
        warnings.warn(
            f"|k0 x| = {abs(spec.k0 * x):.3g} is outside the paraxial regime "
            f"(first-order Taylor of the profile)",
            stacklevel=2,
        )
    k0 = spec.k0
    curv = k0 * k0 * x * x
    return (-k0 - curv * (1 - spec.epsilon), k0 - curv * (1 + spec.epsilon))


def schumann_shift(spec: SchumannSpec) -> complex:
    """Complex squared eigenfrequency of a lossy cavity in Q form:
    omega0^2 [(1 - 1/Q) + i/Q]."""
    return spec.omega0**2 * complex(1.0 - 1.0 / spec.Q, 1.0 / spec.Q)


# --- cosecant-squared crystal ------------------------------------------------

def scarf_coefficient(spec: ScarfSpec, x: float) -> complex:
    """c(x) of psi'' + c(x) psi = 0 for the crystal on (0, a/2]:
    (pi/a)^2 [lam^2 + (1/4 - s^2) cosec^2(pi x / a)]."""
    _check_domain(spec, x)
    xi = math.pi * x / spec.a
    return (math.pi / spec.a) ** 2 * (
        spec.lam**2 + (0.25 - spec.s**2) / math.sin(xi) ** 2
    )


def _check_domain(spec: ScarfSpec, x: float) -> None:
    if not 0.0 < x <= 0.5 * spec.a:
        raise DomainError(f"x={x} outside the solution interval (0, {spec.a / 2}]")


def _scarf_term(spec: ScarfSpec, x: float, second: bool, opts: EvalOptions) -> Jet:
    s, lam = spec.s, spec.lam
    scale = math.pi / spec.a
    xi = scale * x
    f: Jet = (
        math.sin(xi),
        scale * math.cos(xi),
        -scale * scale * math.sin(xi),
    )
    g = jet_mul(f, f)
    if second:
        e = 0.5 - s
        a1 = 0.25 - 0.5 * (s - lam)
        b1 = 0.25 - 0.5 * (s + lam)
        c1 = 1.0 - s
    else:
        e = 0.5 + s
        a1 = 0.25 + 0.5 * (s + lam)
        b1 = 0.25 + 0.5 * (s - lam)
        c1 = 1.0 + s
    fj = hyp2f1_jet(a1, b1, c1, g[0], opts)
    return jet_mul(jet_pow(f, e), jet_compose(fj, g))


def scarf_solution_jet(
    spec: ScarfSpec,
    consts: ModeConstants,
    x: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> Jet:
    """(psi, psi', psi'') of the crystal's general solution on (0, a/2]."""
    _check_domain(spec, x)
    total: Jet = (0j, 0j, 0j)
    if consts.alpha != 0:
        total = jet_add(total, jet_scale(_scarf_term(spec, x, False, opts), consts.alpha))
    if consts.beta != 0:
        total = jet_add(total, jet_scale(_scarf_term(spec, x, True, opts), consts.beta))
    return total


def scarf_solution(
    spec: ScarfSpec,
    consts: ModeConstants,
    x: float,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """Value of the general solution on (0, a/2].

    Evaluated without derivative factors, so the closed endpoint x = a/2
    (series argument exactly 1, summed by the Gauss formula) is included;
    jets are defined on the open interval only, where their hypergeometric
    derivative factors converge.
    """
    _check_domain(spec, x)
    s, lam = spec.s, spec.lam
    f = math.sin(math.pi * x / spec.a)
    g = f * f
    total = 0j
    if consts.alpha != 0:
        fa = hyp2f1(HypParams(0.25 + 0.5 * (s + lam), 0.25 + 0.5 * (s - lam), 1.0 + s), g, opts)
        total += consts.alpha * cpow_principal(f, 0.5 + s) * fa
    if consts.beta != 0:
        fb = hyp2f1(HypParams(0.25 - 0.5 * (s - lam), 0.25 - 0.5 * (s + lam), 1.0 - s), g, opts)
        total += consts.beta * cpow_principal(f, 0.5 - s) * fb
    return total


def scarf_basis(
    spec: ScarfSpec, opts: EvalOptions = DEFAULT_OPTIONS
) -> tuple[Callable[[float], Jet], Callable[[float], Jet]]:
    def first(x: float) -> Jet:
        _check_domain(spec, x)
        return _scarf_term(spec, x, False, opts)

    def second(x: float) -> Jet:
        _check_domain(spec, x)
        return _scarf_term(spec, x, True, opts)

    return first, second


def scarf_residual(
    spec: ScarfSpec,
    consts: ModeConstants,
    grid: TimeGrid,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> ResidualReport:
    """Residual certification of the general solution over a grid in
    (0, a/2]."""
    _check_domain(spec, grid.t0)
    _check_domain(spec, grid.t1)
    return ode_residual(
        lambda x: scarf_coefficient(spec, x),
        lambda x: scarf_solution_jet(spec, consts, x, opts),
        grid,
    )
