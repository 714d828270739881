"""Command-line front end.

Subcommands: eval (single-coupling mode series), eval-multi (multi-coupling),
verify (residual certification of the closed forms against their equation),
figure (preset datasets, optionally rendered to an image), app (waveguide /
schumann / scarf calculators).

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 numerical
failure. Data goes to --out (default stdout); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .applications import (
    ScarfSpec,
    SchumannSpec,
    WaveguideSpec,
    scarf_solution,
    schumann_shift,
    waveguide_profiles,
)
from .dataio import export_csv, export_json, open_dest, series_payload, write_table
from .errors import NumericalError, SingularityError, ValidationError
from .figures import PRESETS, figure_dataset
from .multi_k import MultiKSpec, w_from_z, z_mode
from .oscillator import OscillatorSpec
from .single_k import (
    ModeConstants,
    SingleKSpec,
    bosonic_basis,
    bosonic_mode,
    bosonic_mode_small_k,
    bosonic_mode_zero_k_limit,
    coeff_bosonic,
    fermionic_from_coupling,
)
from .verify import ComplexSeries, TimeGrid, ode_residual

__all__ = ["build_parser", "run", "main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def _parse_complex(text: str) -> complex:
    """Complex flags are written 're,im' (a bare real part is accepted)."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")


def _parse_kappa(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"--kappa must be +1 or -1, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmodes",
        description="Closed-form coupled-oscillator modes: evaluation, "
        "verification, figure datasets, and application calculators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    def add_window(p, var="t"):
        p.add_argument(f"--{var}0", type=float, required=True)
        p.add_argument(f"--{var}1", type=float, required=True)
        p.add_argument("--n", type=int, default=500)

    p_eval = sub.add_parser("eval", help="evaluate a single-coupling mode on a grid")
    p_eval.add_argument("--kappa", type=_parse_kappa, required=True)
    p_eval.add_argument("--omega0", type=float, default=1.0)
    p_eval.add_argument("--K", type=float, required=True)
    p_eval.add_argument("--alpha", type=_parse_complex, default=complex(1, 0))
    p_eval.add_argument("--beta", type=_parse_complex, default=complex(0, 0))
    add_window(p_eval)
    p_eval.add_argument(
        "--quantity",
        choices=("bosonic", "bosonic-small-k", "fermionic-reciprocal", "fermionic-coupling"),
        default="bosonic",
    )
    add_io(p_eval)

    p_multi = sub.add_parser("eval-multi", help="evaluate a multi-coupling mode on a grid")
    p_multi.add_argument("--kappa", type=_parse_kappa, required=True)
    p_multi.add_argument("--omega0", type=float, default=1.0)
    p_multi.add_argument("--K1", type=float, required=True)
    p_multi.add_argument("--K2", type=float, required=True)
    p_multi.add_argument("--K1p", type=float, required=True)
    p_multi.add_argument("--K2p", type=float, required=True)
    p_multi.add_argument("--alpha", type=_parse_complex, default=complex(1, 0))
    p_multi.add_argument("--beta", type=_parse_complex, default=complex(0, 0))
    add_window(p_multi)
    p_multi.add_argument(
        "--quantity", choices=("z", "w"), default="z",
        help="gauged component or the gauge-transformed mode",
    )
    add_io(p_multi)

    p_verify = sub.add_parser(
        "verify",
        help="certify the closed-form basis against its equation (JSON report)",
    )
    p_verify.add_argument("--kappa", type=_parse_kappa, required=True)
    p_verify.add_argument("--omega0", type=float, default=1.0)
    p_verify.add_argument("--K", type=float, required=True)
    add_window(p_verify)
    p_verify.add_argument("--tol", type=float, default=1e-8)
    p_verify.add_argument("--out", default=None)

    p_fig = sub.add_parser("figure", help="write a deterministic figure dataset")
    p_fig.add_argument("name", choices=sorted(PRESETS))
    p_fig.add_argument("--plot", default=None, metavar="PATH",
                       help="also render the figure to an image file")
    add_io(p_fig)

    p_app = sub.add_parser("app", help="application calculators")
    app_sub = p_app.add_subparsers(dest="app_command", required=True)

    p_sch = app_sub.add_parser("schumann", help="lossy-cavity eigenfrequency shift")
    p_sch.add_argument("--Q", type=float, required=True)
    p_sch.add_argument("--omega0", type=float, default=1.0)
    add_io(p_sch)

    p_wg = app_sub.add_parser("waveguide", help="paired complex index profiles")
    p_wg.add_argument("--kappa", type=_parse_kappa, required=True)
    p_wg.add_argument("--k0", type=float, required=True)
    p_wg.add_argument("--K", type=float, required=True)
    add_window(p_wg, "x")
    add_io(p_wg)

    p_sc = app_sub.add_parser("scarf", help="cosecant-squared crystal solution")
    p_sc.add_argument("--a", type=float, required=True)
    p_sc.add_argument("--s", type=_parse_complex, required=True)
    p_sc.add_argument("--lambda", dest="lam", type=_parse_complex, required=True)
    p_sc.add_argument("--alpha", type=_parse_complex, default=complex(1, 0))
    p_sc.add_argument("--beta", type=_parse_complex, default=complex(0, 0))
    add_window(p_sc, "x")
    add_io(p_sc)

    return parser


def _sample_masked(fn, ts):
    """Evaluate fn over ts, mapping masked/singular points to nan."""
    vals = np.empty(len(ts), dtype=np.complex128)
    for i, t in enumerate(ts):
        try:
            vals[i] = fn(float(t))
        except (SingularityError, ZeroDivisionError):
            vals[i] = complex(float("nan"), float("nan"))
    return vals


def _eval_command(args) -> int:
    base = OscillatorSpec(kappa=args.kappa, omega0=args.omega0)
    spec = SingleKSpec(base=base, K=args.K)
    consts = ModeConstants(args.alpha, args.beta)
    grid = TimeGrid(args.t0, args.t1, args.n)

    if args.quantity == "bosonic":
        if args.K == 0.0 and args.kappa == 1:
            fn = lambda t: bosonic_mode_zero_k_limit(spec, consts, t)
        else:
            fn = lambda t: bosonic_mode(spec, consts, t)
    elif args.quantity == "bosonic-small-k":
        fn = lambda t: bosonic_mode_small_k(spec, consts, t)
    elif args.quantity == "fermionic-reciprocal":
        fn = lambda t: 1.0 / bosonic_mode(spec, consts, t)
    else:
        fn = lambda t: fermionic_from_coupling(spec, consts, t)

    series = ComplexSeries(grid, _sample_masked(fn, grid.points))
    params = {
        "command": "eval", "kappa": args.kappa, "omega0": args.omega0, "K": args.K,
        "alpha": [args.alpha.real, args.alpha.imag],
        "beta": [args.beta.real, args.beta.imag],
        "quantity": args.quantity,
    }
    _emit_series(series, params, args)
    return EXIT_OK


def _eval_multi_command(args) -> int:
    base = OscillatorSpec(kappa=args.kappa, omega0=args.omega0)
    spec = MultiKSpec(base=base, K1=args.K1, K2=args.K2, K1p=args.K1p, K2p=args.K2p)
    consts = ModeConstants(args.alpha, args.beta)
    grid = TimeGrid(args.t0, args.t1, args.n)
    if args.quantity == "z":
        fn = lambda t: z_mode(spec, consts, t)
    else:
        fn = lambda t: w_from_z(spec, z_mode(spec, consts, t), t)
    series = ComplexSeries(grid, _sample_masked(fn, grid.points))
    params = {
        "command": "eval-multi", "kappa": args.kappa, "omega0": args.omega0,
        "K1": args.K1, "K2": args.K2, "K1p": args.K1p, "K2p": args.K2p,
        "alpha": [args.alpha.real, args.alpha.imag],
        "beta": [args.beta.real, args.beta.imag],
        "quantity": args.quantity,
    }
    _emit_series(series, params, args)
    return EXIT_OK


def _verify_command(args) -> int:
    base = OscillatorSpec(kappa=args.kappa, omega0=args.omega0)
    spec = SingleKSpec(base=base, K=args.K)
    grid = TimeGrid.with_mask(args.t0, args.t1, args.n, [spec.mask])
    coeff = lambda t: coeff_bosonic(spec, t)
    terms = []
    overall_abs = overall_rel = 0.0
    argmax_t = grid.t0
    for i, basis in enumerate(bosonic_basis(spec)):
        rep = ode_residual(coeff, basis, grid)
        terms.append(
            {"term": i + 1, "max_abs": rep.max_abs, "max_rel": rep.max_rel,
             "argmax_t": rep.argmax_t}
        )
        overall_abs = max(overall_abs, rep.max_abs)
        if rep.max_rel >= overall_rel:
            overall_rel = rep.max_rel
            argmax_t = rep.argmax_t
    passed = overall_rel <= args.tol
    payload = {
        "params": {
            "command": "verify", "kappa": args.kappa, "omega0": args.omega0,
            "K": args.K, "tol": args.tol,
        },
        "grid": {"t0": args.t0, "t1": args.t1, "n": args.n},
        "report": {
            "max_abs": overall_abs, "max_rel": overall_rel, "argmax_t": argmax_t,
            "pass": passed, "terms": terms,
        },
    }
    export_json(payload, args.out)
    if not passed:
        print(
            f"verification FAILED: max_rel {overall_rel:.3e} > tol {args.tol:.3e}",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _figure_command(args) -> int:
    data = figure_dataset(args.name)
    params = dict(data.params)
    params["command"] = "figure"
    params["name"] = args.name
    if args.format == "csv":
        with open_dest(args.out) as fh:
            write_table(data.columns, data.rows, fh)
    else:
        export_json(
            {"params": params, "columns": list(data.columns), "rows": data.rows},
            args.out,
        )
    if args.plot is not None:
        from .plotting import render_figure

        render_figure(data, args.plot)
    return EXIT_OK


def _app_command(args) -> int:
    if args.app_command == "schumann":
        spec = SchumannSpec(Q=args.Q, omega0=args.omega0)
        val = schumann_shift(spec)
        params = {"command": "app schumann", "Q": args.Q, "omega0": args.omega0}
        if args.format == "csv":
            with open_dest(args.out) as fh:
                write_table(("omega_sq_re", "omega_sq_im"), [(val.real, val.imag)], fh)
        else:
            export_json({"params": params, "omega_sq": [val.real, val.imag]}, args.out)
        return EXIT_OK

    if args.app_command == "waveguide":
        spec = WaveguideSpec(k0=args.k0, K=args.K, kappa=args.kappa)
        grid = TimeGrid(args.x0, args.x1, args.n)
        nb = _sample_masked(lambda x: waveguide_profiles(spec, x)[0], grid.points)
        nf = _sample_masked(lambda x: waveguide_profiles(spec, x)[1], grid.points)
        params = {
            "command": "app waveguide", "kappa": args.kappa, "k0": args.k0, "K": args.K,
        }
        if args.format == "csv":
            rows = (
                (float(x), b.real, b.imag, f.real, f.imag)
                for x, b, f in zip(grid.points, nb, nf)
            )
            with open_dest(args.out) as fh:
                write_table(("x", "nb2_re", "nb2_im", "nf2_re", "nf2_im"), rows, fh)
        else:
            export_json(
                {
                    "params": params,
                    "grid": {"t0": grid.t0, "t1": grid.t1, "n": grid.n},
                    "nb2": [[v.real, v.imag] for v in nb],
                    "nf2": [[v.real, v.imag] for v in nf],
                },
                args.out,
            )
        return EXIT_OK

    spec = ScarfSpec(a=args.a, s=args.s, lam=args.lam)
    consts = ModeConstants(args.alpha, args.beta)
    grid = TimeGrid(args.x0, args.x1, args.n)
    series = ComplexSeries(
        grid, _sample_masked(lambda x: scarf_solution(spec, consts, x), grid.points)
    )
    params = {
        "command": "app scarf", "a": args.a,
        "s": [args.s.real, args.s.imag], "lambda": [args.lam.real, args.lam.imag],
        "alpha": [args.alpha.real, args.alpha.imag],
        "beta": [args.beta.real, args.beta.imag],
    }
    _emit_series(series, params, args)
    return EXIT_OK


def _emit_series(series: ComplexSeries, params: dict, args) -> None:
    if args.format == "csv":
        export_csv(series, args.out)
    else:
        payload = {"params": params}
        payload.update(series_payload(series))
        export_json(payload, args.out)


def run(argv: list[str]) -> int:
    """Parse and execute one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            return _eval_command(args)
        if args.command == "eval-multi":
            return _eval_multi_command(args)
        if args.command == "verify":
            return _verify_command(args)
        if args.command == "figure":
            return _figure_command(args)
        return _app_command(args)
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"write failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
