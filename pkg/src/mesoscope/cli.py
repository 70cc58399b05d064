"""Command-line surface: pattern, table1, feasibility, trap, sweep, compare.

Exit codes: 0 success, 1 configuration/validation/IO error, 2 numerical
non-convergence.  Output is deterministic: floats are written with exact
round-trip formatting and sweep rows keep grid order regardless of the
thread count set through MESOSCOPE_THREADS (0 or unset = auto; the knob
affects wall time only, never bytes).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from . import feasibility as feas
from . import trap as trapmod
from .config import default_geometry, validate_config
from .configfile import RunConfig, dump_config, load_config, resolve
from .errors import (InvalidConfig, MesoscopeError, ParseError,
                     QuadratureNotConverged)
from .geometry import pl_delta
from .interference import (compare_densities, node_metrics, pattern,
                           pattern_to_csv, write_pattern_csv)
from .wavepacket import Bifurcated, Delta, Gaussian, tabulated_from_csv, truncate

SWEEP_PARAMS = ("lambda1", "mass_M", "delta_q_i", "alpha")


def _worker_count() -> int:
    raw = os.environ.get("MESOSCOPE_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = min(32, os.cpu_count() or 1)
    return n


def _density_from_choice(choice: str, lambda1: float):
    if choice == "delta":
        return Delta(0.0)
    if choice == "bifurcated":
        return Bifurcated(-lambda1 / 8.0, lambda1 / 8.0, 0.5)
    if choice == "gaussian":
        return Gaussian(lambda1)
    if choice == "truncated":
        return truncate(Gaussian(lambda1), -lambda1 / 4.0, lambda1 / 4.0)
    if choice.startswith("tabulated:"):
        return tabulated_from_csv(choice.partition(":")[2])
    raise InvalidConfig([("density", f"unknown density choice {choice!r}")])


def cmd_pattern(cfg: RunConfig, density_choice: str, out_path, n_points) -> int:
    density = _density_from_choice(density_choice, cfg.geometry.lambda1)
    pat = pattern(density, cfg.geometry, cfg.quadrature,
                  n_points or cfg.pattern_points)
    metrics = node_metrics(pat)
    if out_path:
        write_pattern_csv(pat, cfg.geometry, out_path)
    else:
        sys.stdout.write(pattern_to_csv(pat, cfg.geometry))
    lam1 = cfg.geometry.lambda1
    nodes = ", ".join(f"{d / lam1:.4f}" for d in metrics.node_positions_D)
    print(f"density             : {density_choice}")
    print(f"grid points         : {pat.D_grid.size}")
    print(f"node positions D/l1 : {nodes}")
    print(f"central peak I      : {metrics.central_peak_I!r}")
    print(f"edge minimum I      : {metrics.edge_min_I!r}")
    print(f"edge peak I         : {metrics.edge_peak_I!r}")
    print(f"node depth ratio    : {metrics.node_depth_ratio!r}")
    print(f"edge fringe amp     : {metrics.edge_fringe_amplitude!r}")
    return 0


def cmd_table1(cfg: RunConfig, out_path=None) -> int:
    lam1 = cfg.geometry.lambda1
    S = cfg.geometry.slit_separation_S
    rows = [(z, pl_delta(z, S, cfg.geometry).pl_delta) for z in (lam1, 0.0, -lam1)]
    print("mirror position z/lambda1    PL_delta/lambda1  (screen point at D = S)")
    for z, pld in rows:
        print(f"  {z / lam1:+.0f}                        {pld / lam1:.4f}")
    print("sign note: positive z points away from the slit plane; the quoted")
    print("reference table lists the same values with the opposite sign of z.")
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write("z_over_lambda1,pl_delta_over_lambda1\n")
            for z, pld in rows:
                fh.write(f"{z / lam1!r},{pld / lam1!r}\n")
    return 0


def cmd_feasibility(cfg: RunConfig, mode: str, out_path) -> int:
    report = feas.feasibility_report(cfg.mirror, cfg.geometry, cfg.environment, mode)
    print(feas.report_text(report, mode))
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(feas.REPORT_CSV_HEADER + "\n")
            fh.write(feas.report_csv_row(report) + "\n")
    return 0


def cmd_trap(cfg: RunConfig, mode: str, nu: float, eta: float,
             gradient_fraction: float, out_path) -> int:
    design = trapmod.design_trap(cfg.mirror, cfg.geometry, nu, eta,
                                 gradient_fraction, mode)
    print(trapmod.design_text(design, mode))
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(trapmod.DESIGN_CSV_HEADER + "\n")
            fh.write(trapmod.design_csv_row(design) + "\n")
    return 0


def _parse_sweep_spec(spec: str):
    try:
        name, _, rest = spec.partition("=")
        lo_s, hi_s, scale, steps_s = rest.split(":")
        lo, hi, steps = float(lo_s), float(hi_s), int(steps_s)
    except ValueError:
        raise InvalidConfig([("sweep", f"expected name=lo:hi:linear|log:steps, got {spec!r}")]) from None
    name = name.strip()
    if name not in SWEEP_PARAMS:
        raise InvalidConfig([("sweep.param", f"must be one of {SWEEP_PARAMS}")])
    if scale not in ("linear", "log"):
        raise InvalidConfig([("sweep.scale", "must be 'linear' or 'log'")])
    if not lo < hi:
        raise InvalidConfig([("sweep.range", "need lo < hi")])
    if steps < 2:
        raise InvalidConfig([("sweep.steps", "need steps >= 2")])
    if scale == "log" and not lo > 0.0:
        raise InvalidConfig([("sweep.range", "log scale needs lo > 0")])
    return name, lo, hi, scale, steps


def _config_at(cfg: RunConfig, param: str, value: float) -> RunConfig:
    """Rebuild the config with one parameter replaced.

    A lambda1 sweep re-derives every wavelength-relative geometry default
    that was not explicitly pinned in the config file.
    """
    if param == "lambda1":
        derived = default_geometry(value, cfg.geometry.probe_angle_theta)
        g = cfg.geometry
        geometry = replace(
            derived,
            slit_separation_S=(g.slit_separation_S if "slit_separation_cm" in cfg.explicit
                               else derived.slit_separation_S),
            slit_mirror_distance_L=(g.slit_mirror_distance_L if "slit_mirror_distance_cm" in cfg.explicit
                                    else derived.slit_mirror_distance_L),
            mirror_diameter_W=(g.mirror_diameter_W if "mirror_diameter_cm" in cfg.explicit
                               else derived.mirror_diameter_W),
            lambda2=(g.lambda2 if "lambda2_cm" in cfg.explicit else derived.lambda2),
            probe_aperture_Wa=(g.probe_aperture_Wa if "probe_aperture_cm" in cfg.explicit
                               else derived.probe_aperture_Wa),
        )
        out = replace(cfg, geometry=geometry)
    elif param == "mass_M":
        out = replace(cfg, mirror=replace(cfg.mirror, mass_M=value))
    elif param == "delta_q_i":
        out = replace(cfg, mirror=replace(cfg.mirror, delta_q_i=value))
    elif param == "alpha":
        out = replace(cfg, environment=replace(cfg.environment, alpha=value))
    else:  # pragma: no cover - guarded by _parse_sweep_spec
        raise InvalidConfig([("sweep.param", f"unknown parameter {param!r}")])
    validate_config(out.geometry, out.mirror, out.environment)
    return out


def cmd_sweep(cfg: RunConfig, spec: str, out_path, mode: str = "symbolic") -> int:
    param, lo, hi, scale, steps = _parse_sweep_spec(spec)
    if scale == "linear":
        grid = np.linspace(lo, hi, steps)
    else:
        grid = np.geomspace(lo, hi, steps)

    def row(value: float) -> str:
        point = _config_at(cfg, param, float(value))
        report = feas.feasibility_report(point.mirror, point.geometry,
                                         point.environment, mode)
        return f"{float(value)!r},{feas.report_csv_row(report)}"

    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        rows = list(pool.map(row, grid))
    text = param + "," + feas.REPORT_CSV_HEADER + "\n" + "\n".join(rows) + "\n"
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_compare(cfg: RunConfig, choice_a: str, choice_b: str, out_path, n_points) -> int:
    lam1 = cfg.geometry.lambda1
    da = _density_from_choice(choice_a, lam1)
    db = _density_from_choice(choice_b, lam1)
    n = n_points or cfg.pattern_points
    report = compare_densities(da, db, cfg.geometry, cfg.quadrature, n)
    for label, m, amp in (("first  (" + choice_a + ")", report.metrics1, report.edge_amplitude1),
                          ("second (" + choice_b + ")", report.metrics2, report.edge_amplitude2)):
        print(f"{label}: node_depth_ratio={m.node_depth_ratio!r} "
              f"edge_fringe_amplitude={amp!r}")
    print(f"sharper: {report.sharper}")
    if out_path:
        pa = pattern(da, cfg.geometry, cfg.quadrature, n)
        pb = pattern(db, cfg.geometry, cfg.quadrature, n)
        with open(out_path, "w", newline="") as fh:
            fh.write("D_over_lambda1,I_a,I_b\n")
            for j in range(pa.D_grid.size):
                fh.write(f"{float(pa.D_grid[j] / lam1)!r},{float(pa.I[j])!r},"
                         f"{float(pb.I[j])!r}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mesoscope",
        description="Interference, feasibility and trap calculator for a "
                    "levitated mesoscopic-mirror experiment.")
    parser.add_argument("--config", metavar="PATH", help="key = value config file")
    parser.add_argument("--dump-config", action="store_true",
                        help="print the effective configuration and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("pattern", help="interference pattern CSV + node metrics")
    p.add_argument("--density", default="gaussian",
                   help="delta|bifurcated|gaussian|truncated|tabulated:<csv>")
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("table1", help="path-length differences at z = -l1, 0, +l1")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("feasibility", help="temperature/density constraint envelope")
    p.add_argument("--mode", choices=("symbolic", "collapsed"), default="symbolic")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("trap", help="levitation trap design")
    p.add_argument("--mode", choices=("symbolic", "collapsed"), default="symbolic")
    p.add_argument("--nu", type=float, default=1e-3, help="Cooper pairs per lattice site")
    p.add_argument("--eta", type=float, default=1e-1, help="transverse field ratio")
    p.add_argument("--gradient-fraction", type=float,
                   default=trapmod.DEFAULT_GRADIENT_FRACTION)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("sweep", help="feasibility sweep over one parameter")
    p.add_argument("--param", required=True, metavar="name=lo:hi:linear|log:steps")
    p.add_argument("--mode", choices=("symbolic", "collapsed"), default="symbolic")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("compare", help="edge-sharpness comparison of two densities")
    p.add_argument("--density-a", default="truncated")
    p.add_argument("--density-b", default="gaussian")
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--out", metavar="PATH")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.dump_config:
            sys.stdout.write(dump_config(cfg))
            return 0
        if args.command is None:
            parser.print_help()
            return 1
        if args.command == "pattern":
            return cmd_pattern(cfg, args.density, args.out, args.points)
        if args.command == "table1":
            return cmd_table1(cfg, args.out)
        if args.command == "feasibility":
            return cmd_feasibility(cfg, args.mode, args.out)
        if args.command == "trap":
            return cmd_trap(cfg, args.mode, args.nu, args.eta,
                            args.gradient_fraction, args.out)
        if args.command == "sweep":
            return cmd_sweep(cfg, args.param, args.out, args.mode)
        if args.command == "compare":
            return cmd_compare(cfg, args.density_a, args.density_b,
                               args.out, args.points)
        parser.error(f"unknown command {args.command!r}")
    except QuadratureNotConverged as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MesoscopeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
