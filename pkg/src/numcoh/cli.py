"""Command-line driver.

Commands: state, stats, qfunc, wigner, jcm, generate, figure, selftest.
Exit codes: 0 success, 1 validation error, 2 numerical failure.  When --out
is omitted, outputs land in $NUMCOH_OUT_DIR (default: current directory).
All CSV output is deterministic: 17-significant-digit floats, LF newlines,
atomic file replacement.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from .csvio import write_csv_atomic
from .errors import NumcohError, NumericalError, TruncationError, ValidationError
from .fock_space import default_dim
from .figures import DEFAULT_ETA_POINTS, DEFAULT_TAU_POINTS, FIGURE_BUILDERS, build_figure
from .generation import DriveParams, KerrParams, generate_by_detection, kerr_output
from .jcm_dynamics import JcmParams, atomic_density, entropy, field_qfunction, inversion, photon_distribution
from .quasiprob import PhaseGrid, husimi_closed, rasterize, wigner_closed
from .selftest import KNOWN_FAULTS, run_selftest
from .states import IntermediateParams, binomial_state, intermediate_state, photon_added_coherent
from .statistics import moments_closed, quadratures_closed

ENV_OUT_DIR = "NUMCOH_OUT_DIR"


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems as validation errors."""

    def error(self, message):
        raise ValidationError(message)


def _out_dir(args) -> Path:
    if getattr(args, "out", None):
        return Path(args.out)
    return Path(os.environ.get(ENV_OUT_DIR, "."))


def _parse_grid(text: str) -> PhaseGrid:
    parts = text.split(",")
    if len(parts) != 6:
        raise ValidationError(f"--grid needs xmin,xmax,ymin,ymax,nx,ny; got {text!r}")
    try:
        x_min, x_max, y_min, y_max = (float(p) for p in parts[:4])
        nx, ny = int(parts[4]), int(parts[5])
    except ValueError as exc:
        raise ValidationError(f"malformed --grid value {text!r}: {exc}") from exc
    return PhaseGrid(x_min, x_max, y_min, y_max, nx, ny)


def _parse_tau_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"malformed --tau list {text!r}: {exc}") from exc


def _tau_tag(tau: float) -> str:
    return f"{tau:.7g}".replace(".", "p").replace("-", "m")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="numcoh", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="output file or directory")
        p.add_argument("--format", choices=["csv"], default="csv")

    p_state = sub.add_parser("state", help="amplitudes of a field state")
    p_state.add_argument("--eta", type=float, required=True)
    p_state.add_argument("--m", type=int, required=True)
    p_state.add_argument("--dim", type=int, default=None)
    p_state.add_argument(
        "--family",
        choices=["intermediate", "binomial", "photon-added"],
        default="intermediate",
    )
    add_common(p_state)

    p_stats = sub.add_parser("stats", help="photon statistics and quadrature moments")
    p_stats.add_argument("--eta", type=float, required=True)
    p_stats.add_argument("--m", type=int, required=True)
    add_common(p_stats)

    for name, help_text in (("qfunc", "Husimi Q raster"), ("wigner", "Wigner raster")):
        p_q = sub.add_parser(name, help=help_text)
        p_q.add_argument("--eta", type=float, required=True)
        p_q.add_argument("--m", type=int, required=True)
        p_q.add_argument("--grid", type=str, default="-6,6,-6,6,101,101")
        add_common(p_q)

    p_jcm = sub.add_parser("jcm", help="two-photon dynamics datasets")
    p_jcm.add_argument("--eta", type=float, required=True)
    p_jcm.add_argument("--m", type=int, required=True)
    p_jcm.add_argument("--g", type=float, default=1.0)
    p_jcm.add_argument("--delta", type=float, default=0.0)
    p_jcm.add_argument("--tau-max", type=float, default=math.pi)
    p_jcm.add_argument("--tau-points", type=int, default=DEFAULT_TAU_POINTS)
    p_jcm.add_argument("--tau", type=str, default="", help="comma list of snapshot times")
    p_jcm.add_argument("--grid", type=str, default="", help="field-Q raster grid for snapshots")
    p_jcm.add_argument("--dim", type=int, default=None)
    add_common(p_jcm)

    p_gen = sub.add_parser("generate", help="preparation-scheme outputs")
    p_gen.add_argument("--gt", type=float, default=1e-3, help="interaction phase g*t")
    p_gen.add_argument("--a-over-omega", type=str, default="0,0.5,1,2,5")
    p_gen.add_argument("--multiphoton-m", type=int, default=1)
    p_gen.add_argument("--kerr", action="store_true", help="emit a Kerr-scheme output state")
    p_gen.add_argument("--gamma", type=float, default=1e-3, help="Kerr accumulated phase")
    p_gen.add_argument("--lam", type=float, default=1.0, help="Kerr input amplitude")
    p_gen.add_argument("--order", type=int, default=1, help="Kerr medium order S")
    p_gen.add_argument("--dim", type=int, default=None)
    add_common(p_gen)

    p_fig = sub.add_parser("figure", help="reproduce a figure's CSV dataset")
    p_fig.add_argument("id", choices=sorted(FIGURE_BUILDERS) + ["all"])
    p_fig.add_argument("--eta-points", type=int, default=DEFAULT_ETA_POINTS)
    p_fig.add_argument("--tau-points", type=int, default=DEFAULT_TAU_POINTS)
    p_fig.add_argument("--grid-points", type=int, default=101)
    add_common(p_fig)

    p_self = sub.add_parser("selftest", help="run the built-in invariant suite")
    p_self.add_argument("--inject-fault", choices=list(KNOWN_FAULTS), default=None)

    return parser


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _cmd_state(args) -> int:
    if args.family == "intermediate":
        params = IntermediateParams(args.eta, args.m)
        dim = args.dim or args.m + 1
        vec = intermediate_state(params, dim)
    elif args.family == "binomial":
        dim = args.dim or args.m + 1
        vec = binomial_state(args.eta, args.m, dim)
    else:
        params = IntermediateParams(args.eta, args.m)
        dim = args.dim or default_dim(args.m, params.lam)
        vec = photon_added_coherent(params.lam, args.m, dim)
    rows = [(n, float(c.real)) for n, c in enumerate(vec)]
    out = _out_dir(args)
    path = out if out.suffix else out / f"state_{args.family}_eta{args.eta:g}_m{args.m}.csv"
    write_csv_atomic(path, ("n", "c_n"), rows)
    print(path)
    return 0


def _cmd_stats(args) -> int:
    params = IntermediateParams(args.eta, args.m)
    mom = moments_closed(params)
    quad = quadratures_closed(params)
    row = (
        args.eta,
        args.m,
        mom.mean_n,
        mom.mean_n2,
        mom.mandel_q,
        "undefined" if mom.g2 is None else mom.g2,
        quad.mean_x,
        quad.var_x,
        quad.var_p,
        quad.snr,
    )
    header = ("eta", "m", "mean_n", "mean_n2", "mandel_q", "g2", "mean_x", "var_x", "var_p", "snr")
    out = _out_dir(args)
    path = out if out.suffix else out / f"stats_eta{args.eta:g}_m{args.m}.csv"
    write_csv_atomic(path, header, [row])
    print(path)
    return 0


def _cmd_raster(args, which: str) -> int:
    params = IntermediateParams(args.eta, args.m)
    grid = _parse_grid(args.grid)
    fn = husimi_closed if which == "qfunc" else wigner_closed
    field = rasterize(lambda b: fn(params, b), grid)
    out = _out_dir(args)
    path = out if out.suffix else out / f"{which}_eta{args.eta:g}_m{args.m}.csv"
    _write_text(path, field.to_csv_text())
    print(path)
    return 0


def _cmd_jcm(args) -> int:
    params = JcmParams(g=args.g, delta=args.delta)
    field_params = IntermediateParams(args.eta, args.m)
    snapshots = _parse_tau_list(args.tau)
    if args.delta != 0.0 and snapshots:
        raise ValidationError("photon-distribution snapshots require delta = 0")
    dim = args.dim or args.m + 1
    state = intermediate_state(field_params, dim)
    out = _out_dir(args)
    out.mkdir(parents=True, exist_ok=True)
    taus = np.linspace(0.0, args.tau_max, args.tau_points)
    times = taus / args.g  # tau = g t
    inv_rows = [(float(tau), inversion(params, state, float(t))) for tau, t in zip(taus, times)]
    write_csv_atomic(out / "inversion.csv", ("tau", "inversion"), inv_rows)
    ent_rows = [
        (float(tau), entropy(atomic_density(params, state, float(t))))
        for tau, t in zip(taus, times)
    ]
    write_csv_atomic(out / "entropy.csv", ("tau", "entropy"), ent_rows)
    written = [out / "inversion.csv", out / "entropy.csv"]
    for tau in snapshots:
        pn = photon_distribution(params, state, tau / args.g)
        rows = [(int(n), float(p)) for n, p in enumerate(pn)]
        path = out / f"pn_tau{_tau_tag(tau)}.csv"
        write_csv_atomic(path, ("n", "p_n"), rows)
        written.append(path)
        if args.grid:
            grid = _parse_grid(args.grid)
            field = rasterize(lambda b: field_qfunction(params, state, tau / args.g, b), grid)
            qpath = out / f"qfunc_tau{_tau_tag(tau)}.csv"
            _write_text(qpath, field.to_csv_text(value_label="q"))
            written.append(qpath)
    for path in written:
        print(path)
    return 0


def _cmd_generate(args) -> int:
    out = _out_dir(args)
    if args.kerr:
        vec = kerr_output(KerrParams(gamma=args.gamma, lam=args.lam, order_s=args.order), dim=args.dim)
        rows = [(n, float(c.real), float(c.imag)) for n, c in enumerate(vec)]
        path = out if out.suffix else out / f"kerr_gamma{args.gamma:g}_lam{args.lam:g}.csv"
        write_csv_atomic(path, ("n", "re_c_n", "im_c_n"), rows)
        print(path)
        return 0
    ratios = _parse_tau_list(args.a_over_omega)
    rows = []
    for ratio in ratios:
        drive = DriveParams(A=ratio, omega=1.0, g=1.0, multiphoton_m=args.multiphoton_m)
        t = args.gt / drive.g
        field, prob = generate_by_detection(drive, t, dim=args.dim)
        if field is None:
            rows.append((ratio, drive.predicted_eta, 0.0, 0.0))
            continue
        target = intermediate_state(
            IntermediateParams(drive.predicted_eta, args.multiphoton_m), field.size
        )
        fidelity = float(abs(np.vdot(target, field)) ** 2)
        rows.append((ratio, drive.predicted_eta, fidelity, prob))
    header = ("A_over_omega", "predicted_eta", "fidelity", "detection_probability")
    path = out if out.suffix else out / f"generate_m{args.multiphoton_m}_gt{args.gt:g}.csv"
    write_csv_atomic(path, header, rows)
    print(path)
    return 0


def _cmd_figure(args) -> int:
    out = _out_dir(args)
    out.mkdir(parents=True, exist_ok=True)
    ids = sorted(FIGURE_BUILDERS) if args.id == "all" else [args.id]
    for fig_id in ids:
        bundle = build_figure(
            fig_id,
            n_eta=args.eta_points,
            n_tau=args.tau_points,
            grid_points=args.grid_points,
        )
        for name, text in bundle.items():
            _write_text(out / name, text)
            print(out / name)
    return 0


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "state":
        return _cmd_state(args)
    if args.command == "stats":
        return _cmd_stats(args)
    if args.command in ("qfunc", "wigner"):
        return _cmd_raster(args, args.command)
    if args.command == "jcm":
        return _cmd_jcm(args)
    if args.command == "generate":
        return _cmd_generate(args)
    if args.command == "figure":
        return _cmd_figure(args)
    if args.command == "selftest":
        results = run_selftest(inject_fault=args.inject_fault)
        return 0 if all(r.passed for r in results) else 2
    raise ValidationError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    try:
        return run(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TruncationError, NumericalError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except NumcohError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
