"""Self-contained complex Gauss hypergeometric engine.

Provides the principal-branch complex log-gamma, 2F1(a,b;c;z) for complex
parameters and argument with analytic continuation over the whole plane
(minus the point z=1 where the function diverges), parameter-shift
derivatives, and principal-branch complex powers.

Branch conventions: every power and logarithm is principal (arg in (-pi, pi]).
On the cut z in [1, oo) the continuation from the lower half-plane is
returned, which is the limit consistent with principal-branch prefactors.

Continuation strategy: direct series for |z| <= 0.8; the Pfaff map
z -> z/(z-1) when it lands in the series disk; the 1/z and 1-z linear
transformations (log-gamma prefactors) when their parameter combinations are
safely away from integers; otherwise step-wise Taylor continuation of the
hypergeometric differential equation along a singularity-avoiding path,
which needs no connection coefficients and therefore has no degenerate
parameter configurations.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .errors import (
    ConvergenceError,
    DegenerateParameterError,
    DivergenceError,
    PoleError,
    ValidationError,
)

__all__ = [
    "HypParams",
    "EvalOptions",
    "DEFAULT_OPTIONS",
    "lngamma",
    "cpow_principal",
    "hyp2f1",
    "hyp2f1_deriv",
    "hyp2f1_jet",
]

# Lanczos approximation, g = 7, 9 coefficients. Valid for Re(z) > 0.5 after
# the shift below; the reflection formula covers the left half-plane.
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.9189385332046727417803297364056176

_INT_TOL = 1e-12        # exact integer detection
_PERTURB_TOL = 1e-8     # parameter distance below which transformations perturb
_PERTURB = 1e-8j        # imaginary-axis nudge applied in that case
_CLEAN_DIST = 1e-6      # minimum integer distance to prefer a linear transformation
_SERIES_RADIUS = 0.8
_INV_RADIUS = 1.25      # |z| above which 1/z maps into the series disk
_STEP_FRACTION = 0.38   # Taylor step size as a fraction of distance to singularities
_DETOUR_CLEARANCE = 0.3
_MAX_STEP_TERMS = 600


@dataclass(frozen=True)
class EvalOptions:
    """Convergence targets for series summation and continuation."""

    target_rel_tol: float = 1e-13
    max_terms: int = 20000

    def __post_init__(self):
        if not (0.0 < self.target_rel_tol < 1.0):
            raise ValidationError("target_rel_tol must lie in (0, 1)")
        if self.max_terms < 1:
            raise ValidationError("max_terms must be >= 1")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class HypParams:
    """The three 2F1 parameters (a, b; c)."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if _is_nonpos_int(self.c) and _poly_degree(self.a, self.c) is None \
                and _poly_degree(self.b, self.c) is None:
            raise DegenerateParameterError(
                f"c={self.c} is a nonpositive integer and neither a={self.a} "
                f"nor b={self.b} terminates the series first"
            )


def _is_nonpos_int(x: complex) -> bool:
    return (
        abs(x.imag) <= _INT_TOL
        and x.real < 0.5
        and abs(x.real - round(x.real)) <= _INT_TOL
    )


def _dist_to_int(x: complex) -> float:
    return abs(x - round(x.real))


def _poly_degree(a: complex, c: complex) -> int | None:
    """Degree of the terminating series in the polynomial case, else None.

    Requires a = -m a nonpositive integer; when c = -n is also a nonpositive
    integer the termination must happen first (m <= n).
    """
    if not _is_nonpos_int(a):
        return None
    m = int(round(-a.real))
    if _is_nonpos_int(c):
        n = int(round(-c.real))
        if m > n:
            return None
    return m


def _log_sin_pi(z: complex) -> complex:
    """log(sin(pi z)) with argument reduction, accurate near the zeros.

    The imaginary part is defined modulo 2*pi; every use is exponentiated.
    """
    n = round(z.real)
    w = z - n
    val = cmath.log(cmath.sin(math.pi * w))
    if n % 2:
        val += 1j * math.pi
    return val


def lngamma(z: complex) -> complex:
    """Log-gamma on the principal branch; exp(lngamma) obeys the Gamma recurrence."""
    z = complex(z)
    if _is_nonpos_int(z):
        raise PoleError(f"lngamma pole at z={z}")
    if z.real < 0.5:
        # Reflection; the imaginary part may differ from the continued branch
        # by a multiple of 2*pi, which cancels in every exponentiated use.
        return math.log(math.pi) - _log_sin_pi(z) - lngamma(1.0 - z)
    zz = z - 1.0
    x = _LANCZOS[0]
    for i in range(1, 9):
        x += _LANCZOS[i] / (zz + i)
    t = zz + 7.5
    return _LOG_SQRT_2PI + (zz + 0.5) * cmath.log(t) - t + cmath.log(x)


def cpow_principal(z: complex, w: complex) -> complex:
    """z**w with the principal branch, arg(z) in (-pi, pi]."""
    z = complex(z)
    w = complex(w)
    if z == 0:
        if w.real <= 0.0:
            raise PoleError(f"0**w undefined for Re(w) <= 0 (w={w})")
        return 0j
    if w == 0:
        return 1.0 + 0j
    return cmath.exp(w * cmath.log(z))


def hyp2f1(params: HypParams, z: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Gauss 2F1 at complex argument, accurate to about opts.target_rel_tol."""
    return _hyp2f1(params.a, params.b, params.c, complex(z), opts)


def hyp2f1_deriv(
    params: HypParams,
    z: complex,
    order: int,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """d^order/dz^order of 2F1 via the parameter-shift rule, order in {1, 2}."""
    if order not in (1, 2):
        raise ValidationError(f"derivative order must be 1 or 2, got {order}")
    a, b, c = params.a, params.b, params.c
    z = complex(z)
    f1 = a * b / c
    if order == 1:
        return f1 * _hyp2f1(a + 1, b + 1, c + 1, z, opts)
    f2 = f1 * (a + 1) * (b + 1) / (c + 1)
    return f2 * _hyp2f1(a + 2, b + 2, c + 2, z, opts)


def hyp2f1_jet(
    a: complex,
    b: complex,
    c: complex,
    z: complex,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> tuple[complex, complex, complex]:
    """(F, F', F'') at z; the workhorse for analytic mode derivatives."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    f = _hyp2f1(a, b, c, z, opts)
    r1 = a * b / c
    f1 = r1 * _hyp2f1(a + 1, b + 1, c + 1, z, opts)
    f2 = r1 * (a + 1) * (b + 1) / (c + 1) * _hyp2f1(a + 2, b + 2, c + 2, z, opts)
    return f, f1, f2


# --------------------------------------------------------------------------
# internal evaluation
# --------------------------------------------------------------------------

def _hyp2f1(a: complex, b: complex, c: complex, z: complex, opts: EvalOptions) -> complex:
    a, b, c = complex(a), complex(b), complex(c)
    if _is_nonpos_int(c):
        ma = _poly_degree(a, c)
        mb = _poly_degree(b, c)
        if ma is None and mb is None:
            raise DegenerateParameterError(
                f"2F1 undefined: c={c} nonpositive integer, non-terminating series"
            )
        if ma is not None and (mb is None or ma <= mb):
            return _poly(a, b, c, z, ma)
        return _poly(b, a, c, z, mb)

    if z == 0:
        return 1.0 + 0j
    ma = _poly_degree(a, c)
    if ma is not None:
        mb = _poly_degree(b, c)
        if mb is not None and mb < ma:
            return _poly(b, a, c, z, mb)
        return _poly(a, b, c, z, ma)
    mb = _poly_degree(b, c)
    if mb is not None:
        return _poly(b, a, c, z, mb)
    if c == a:
        return cpow_principal(1.0 - z, -b)
    if c == b:
        return cpow_principal(1.0 - z, -a)
    if z == 1:
        return _gauss_point(a, b, c)

    if abs(z) <= _SERIES_RADIUS:
        return _series(a, b, c, z, opts)
    w = z / (z - 1.0)
    if abs(w) <= _SERIES_RADIUS:
        return _pfaff(a, b, c, z, opts)

    candidates: list[tuple[float, str]] = []
    if abs(z) >= _INV_RADIUS and _dist_to_int(b - a) > _CLEAN_DIST:
        candidates.append((abs(1.0 / z), "inv"))
    if abs(1.0 - z) <= _SERIES_RADIUS and _dist_to_int(c - a - b) > _CLEAN_DIST:
        candidates.append((abs(1.0 - z), "one_minus"))
    if candidates:
        candidates.sort()
        which = candidates[0][1]
        if which == "inv":
            return _inv_z(a, b, c, z, opts)
        return _one_minus_z(a, b, c, z, opts)

    return _taylor_continuation(a, b, c, z, opts)


def _poly(a: complex, b: complex, c: complex, z: complex, m: int) -> complex:
    term = 1.0 + 0j
    total = term
    for n in range(m):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
    return total


def _series(a: complex, b: complex, c: complex, z: complex, opts: EvalOptions) -> complex:
    term = 1.0 + 0j
    total = term
    tol = opts.target_rel_tol
    small_streak = 0
    for n in range(opts.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= tol * abs(total):
            small_streak += 1
            if small_streak >= 2:
                return total
        else:
            small_streak = 0
    raise ConvergenceError(
        f"2F1 series exhausted {opts.max_terms} terms at z={z} (a={a}, b={b}, c={c})"
    )


def _gauss_point(a: complex, b: complex, c: complex) -> complex:
    d = c - a - b
    if d.real <= 0.0:
        raise DivergenceError(
            f"2F1 diverges at z=1: Re(c-a-b) = {d.real:.3g} <= 0"
        )
    if _is_nonpos_int(c - a) or _is_nonpos_int(c - b):
        return 0j
    return cmath.exp(lngamma(c) + lngamma(d) - lngamma(c - a) - lngamma(c - b))


def _pfaff(a: complex, b: complex, c: complex, z: complex, opts: EvalOptions) -> complex:
    w = z / (z - 1.0)
    return cpow_principal(1.0 - z, -a) * _series(a, c - b, c, w, opts)


def _perturbed(x: complex, what: str) -> complex:
    warnings.warn(
        f"near-integer {what} = {x}: perturbing by {_PERTURB} for the linear "
        f"transformation; expect reduced accuracy",
        stacklevel=3,
    )
    return x + _PERTURB


def _inv_z(a: complex, b: complex, c: complex, z: complex, opts: EvalOptions) -> complex:
    if _dist_to_int(b - a) < _PERTURB_TOL:
        a = _perturbed(a, "b-a difference (via a)")
    zi = 1.0 / z
    if _is_nonpos_int(b) or _is_nonpos_int(c - a):
        t1 = 0j
    else:
        coef1 = cmath.exp(lngamma(c) + lngamma(b - a) - lngamma(b) - lngamma(c - a))
        t1 = coef1 * cpow_principal(-z, -a) * _series(a, a - c + 1, a - b + 1, zi, opts)
    if _is_nonpos_int(a) or _is_nonpos_int(c - b):
        t2 = 0j
    else:
        coef2 = cmath.exp(lngamma(c) + lngamma(a - b) - lngamma(a) - lngamma(c - b))
        t2 = coef2 * cpow_principal(-z, -b) * _series(b, b - c + 1, b - a + 1, zi, opts)
    return t1 + t2


def _one_minus_z(a: complex, b: complex, c: complex, z: complex, opts: EvalOptions) -> complex:
    if _dist_to_int(c - a - b) < _PERTURB_TOL:
        c = _perturbed(c, "c-a-b difference (via c)")
    d = c - a - b
    w = 1.0 - z
    if _is_nonpos_int(c - a) or _is_nonpos_int(c - b):
        t1 = 0j
    else:
        coef1 = cmath.exp(lngamma(c) + lngamma(d) - lngamma(c - a) - lngamma(c - b))
        t1 = coef1 * _series(a, b, 1.0 - d, w, opts)
    if _is_nonpos_int(a) or _is_nonpos_int(b):
        t2 = 0j
    else:
        coef2 = cmath.exp(lngamma(c) + lngamma(-d) - lngamma(a) - lngamma(b))
        t2 = coef2 * cpow_principal(w, d) * _series(c - a, c - b, 1.0 + d, w, opts)
    return t1 + t2


# ---- Taylor continuation along a path -------------------------------------

def _seg_dist(p: complex, u: complex, v: complex) -> float:
    """Distance from point p to the segment [u, v]."""
    d = v - u
    L2 = abs(d) ** 2
    if L2 == 0.0:
        return abs(p - u)
    s = ((p - u).real * d.real + (p - u).imag * d.imag) / L2
    s = min(1.0, max(0.0, s))
    return abs(p - (u + s * d))


def _waypoints(w0: complex, z: complex) -> list[complex]:
    """A path from w0 to z that keeps clear of the singular point 1.

    Real targets on [1, oo) are approached from below, matching the
    principal-branch limit on the cut.
    """
    if z.imag == 0.0 and z.real >= 1.0:
        return [complex(w0.real, -0.75), complex(z.real, -0.75), z]
    if _seg_dist(1.0 + 0j, w0, z) < _DETOUR_CLEARANCE:
        side = 0.75 if z.imag > 0 else -0.75
        return [complex(w0.real, side), complex(max(z.real, w0.real), side), z]
    return [z]


def _taylor_step(
    a: complex,
    b: complex,
    c: complex,
    z0: complex,
    f0: complex,
    f1: complex,
    h: complex,
    opts: EvalOptions,
) -> tuple[complex, complex]:
    """Advance (F, F') from z0 to z0+h via the ODE's Taylor recurrence."""
    p0 = z0 * (1.0 - z0)
    p1 = 1.0 - 2.0 * z0
    q0 = c - (a + b + 1.0) * z0
    s = f0 + f1 * h
    sp = f1
    fk = f0       # f_n
    fk1 = f1      # f_{n+1}
    hk = h        # h^{n+1}
    tol = opts.target_rel_tol
    streak = 0
    for n in range(_MAX_STEP_TERMS):
        fk2 = ((n + a) * (n + b) * fk - (n + 1) * (p1 * n + q0) * fk1) / (
            p0 * (n + 2) * (n + 1)
        )
        hk *= h
        term = fk2 * hk
        s += term
        dterm = (n + 2) * fk2 * hk / h
        sp += dterm
        if abs(term) <= tol * abs(s) and abs(dterm) <= tol * abs(sp):
            streak += 1
            if streak >= 2:
                return s, sp
        else:
            streak = 0
        fk, fk1 = fk1, fk2
    raise ConvergenceError(
        f"Taylor continuation step failed to converge at z0={z0}, h={h}"
    )


def _taylor_continuation(
    a: complex, b: complex, c: complex, z: complex, opts: EvalOptions
) -> complex:
    # anchor inside the series disk, on the ray towards z
    w0 = 0.5 * z / abs(z)
    f = _series(a, b, c, w0, opts)
    fp = a * b / c * _series(a + 1, b + 1, c + 1, w0, opts)
    cur = w0
    for wp in _waypoints(w0, z):
        while cur != wp:
            radius = min(abs(cur), abs(cur - 1.0))
            dist = abs(wp - cur)
            step = min(dist, _STEP_FRACTION * radius)
            if step <= 1e-13 * max(1.0, abs(cur)):
                raise ConvergenceError(
                    f"continuation path stalled near z={cur} heading to {wp}"
                )
            h = step * (wp - cur) / dist
            if step >= dist:
                h = wp - cur
            f, fp = _taylor_step(a, b, c, cur, f, fp, h, opts)
            cur += h
    return f
