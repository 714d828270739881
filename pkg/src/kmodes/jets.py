"""Tiny 2-jet calculus: (value, first, second derivative) triples in t.

All mode evaluators build their analytic derivatives from these rules, so
ODE residuals never touch finite differences.
"""

from __future__ import annotations

from .hypergeom import cpow_principal

Jet = tuple[complex, complex, complex]


def jet_const(v: complex) -> Jet:
    return (complex(v), 0j, 0j)


def jet_add(x: Jet, y: Jet) -> Jet:
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2])


def jet_scale(x: Jet, s: complex) -> Jet:
    return (s * x[0], s * x[1], s * x[2])


def jet_mul(x: Jet, y: Jet) -> Jet:
    return (
        x[0] * y[0],
        x[1] * y[0] + x[0] * y[1],
        x[2] * y[0] + 2.0 * x[1] * y[1] + x[0] * y[2],
    )


def jet_pow(base: Jet, e: complex) -> Jet:
    """base(t)**e with the principal branch; base must stay off zero."""
    v = cpow_principal(base[0], e)
    r = base[1] / base[0]
    return (
        v,
        e * v * r,
        e * v * ((e - 1.0) * r * r + base[2] / base[0]),
    )


def jet_compose(outer: Jet, inner: Jet) -> Jet:
    """outer = (F, F', F'') evaluated at inner[0]; returns d/dt jets of F(inner(t))."""
    f, f1, f2 = outer
    return (
        f,
        f1 * inner[1],
        f2 * inner[1] * inner[1] + f1 * inner[2],
    )
