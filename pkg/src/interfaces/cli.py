"""
Command Line
============
distmin <command> [options]

Every command reads its inputs from files or flags, writes its JSON (or
CSV) report to stdout and optional artifacts to the given paths. Logs go
to stderr; DISTMIN_LOG sets the verbosity.

Exit codes: 0 success, 1 malformed input, 2 precondition violated,
3 solver did not converge (the report is still written).
"""

import argparse
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from .file_io import dump_json, read_curve, read_map, read_tensor_fixture, write_map
from .plots import plot_map_overlay, plot_sequence
from ..analysis import (
    BumpSpec,
    analytic_minimizers,
    decay_rate,
    diagnose,
    diagnose_map,
    flow_second_difference,
    necessary_condition_check,
    probe_field,
    second_variation_1d,
    truncated_second_variation,
    zigzag_sequence,
)
from ..functional import (
    BoundaryMode,
    check_lengths,
    energy_report,
    phi_curves,
    psi,
)
from ..geometry import arc_length, parametrize
from ..optimizer import SolverConfig, minimize_multistart, minimize_psi
from ..tensor import g_contract, strain, strain_energy_density
from ..utils.errors import DistminError, InputError
from ..utils.logger import logger

EXIT_OK = 0
EXIT_NOT_CONVERGED = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as InputError (exit code 1)."""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")
    sys.stdout.flush()


def _probe_triple(text: str):
    try:
        center, radius, epsilon = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected center,radius,epsilon, got {text!r}")
    return center, radius, epsilon


# --- Commands ---

def cmd_energy(args: argparse.Namespace) -> int:
    u = read_map(args.map)
    source = parametrize(read_curve(args.source, args.strict), u.grid_size)
    target = parametrize(read_curve(args.target, args.strict), u.grid_size)
    check_lengths(source, target, u)

    if args.full_curve:
        report = energy_report(u, value=phi_curves(source, target, u), functional="phi")
    else:
        report = energy_report(u)
    _emit(dump_json(report.to_dict()))
    return EXIT_OK


def cmd_minimize(args: argparse.Namespace) -> int:
    l_m = arc_length(read_curve(args.source, args.strict))
    l_n = arc_length(read_curve(args.target, args.strict))
    cfg = SolverConfig.from_settings(grid_size=args.grid, seed=args.seed, max_iters=args.max_iters)
    mode = BoundaryMode(args.orientation)

    if args.multistart > 1:
        result, runs = minimize_multistart(l_m, l_n, mode, cfg, runs=args.multistart)
        payload = result.to_dict()
        payload["runs"] = [{"seed": r.seed, "psi": r.report.psi, "converged": r.converged} for r in runs]
    else:
        result = minimize_psi(l_m, l_n, mode, cfg)
        payload = result.to_dict()

    write_map(args.out, result.u)
    if args.emit_svg:
        plot_map_overlay(args.emit_svg, result.u)
    _emit(dump_json(payload))
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_analytic(args: argparse.Namespace) -> int:
    grid = args.grid or SolverConfig.from_settings().grid_size
    v, w, value = analytic_minimizers(args.lm, args.ln, grid)
    if args.out_v:
        write_map(args.out_v, v)
    if args.out_w:
        write_map(args.out_w, w)
    _emit(dump_json({
        "source_length": args.lm,
        "target_length": args.ln,
        "grid_size": grid,
        "phi_min": value,
        "psi_v": psi(v),
        "psi_w": psi(w),
    }))
    return EXIT_OK


def cmd_diagnose(args: argparse.Namespace) -> int:
    if args.map:
        if args.lm is not None or args.ln is not None:
            raise InputError("Give either --map or --lm/--ln, not both")
        payload = diagnose_map(read_map(args.map)).to_dict()
    else:
        if args.lm is None or args.ln is None:
            raise InputError("diagnose needs --lm and --ln, or --map")
        payload = diagnose(args.lm, args.ln).to_dict()
    _emit(dump_json(payload))
    return EXIT_OK


def cmd_second_variation(args: argparse.Namespace) -> int:
    u = read_map(args.map)
    center, radius, epsilon = args.probe
    probe = probe_field(epsilon, BumpSpec(center, radius), u.grid_size, u.source_length)
    _emit(dump_json({
        "second_variation": second_variation_1d(u, probe.jet),
        "finite_difference": flow_second_difference(u, probe.jet, args.delta),
        "truncated": truncated_second_variation(u, probe.jet),
        "epsilon": epsilon,
        "delta": args.delta,
        "necessary_condition": necessary_condition_check(u).to_dict(),
    }))
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace) -> int:
    sequence = zigzag_sequence(args.lm, args.ln, args.kmax, args.grid, args.teeth)
    lines = ["k,delta,psi"] + [f"{s.k},{s.delta:.12g},{s.energy:.12g}" for s in sequence]
    if len(sequence) >= 3:
        logger.info(f"Log-log decay rate over k >= 2: {decay_rate(sequence):.4f}")
    if args.emit_svg:
        plot_sequence(args.emit_svg, sequence)
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_tensor(args: argparse.Namespace) -> int:
    fixture = read_tensor_fixture(args.fixture)
    payload = {
        "dim": fixture.dim,
        "g_bb": g_contract(fixture.b, fixture.b, fixture.g),
    }
    if fixture.pullback is not None:
        payload["strain"] = strain(fixture.pullback, fixture.g).b.tolist()
        payload["strain_energy_density"] = strain_energy_density(fixture.pullback, fixture.g)
    _emit(dump_json(payload))
    return EXIT_OK


# --- Parser ---

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="distmin", description="Minimal-distortion maps between closed planar curves")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("energy", help="Energy report of a map between two curves")
    pe.add_argument("--source", required=True, help="Curve M (CSV or JSON)")
    pe.add_argument("--target", required=True, help="Curve N (CSV or JSON)")
    pe.add_argument("--map", required=True, help="Map CSV")
    pe.add_argument("--full-curve", action="store_true", help="Evaluate Phi through the curves")
    pe.add_argument("--strict", action="store_true", help="Reject self-intersecting curves")
    pe.set_defaults(func=cmd_energy)

    pm = sub.add_parser("minimize", help="Minimize Psi numerically")
    pm.add_argument("--source", required=True)
    pm.add_argument("--target", required=True)
    pm.add_argument("--orientation", choices=[m.value for m in BoundaryMode], default="preserve")
    pm.add_argument("--grid", type=int, default=None)
    pm.add_argument("--seed", type=int, default=None)
    pm.add_argument("--max-iters", type=int, default=None)
    pm.add_argument("--multistart", type=int, default=1)
    pm.add_argument("--out", required=True, help="Map CSV to write")
    pm.add_argument("--emit-svg", default=None, help="Overlay of u against the linear map")
    pm.add_argument("--strict", action="store_true")
    pm.set_defaults(func=cmd_minimize)

    pa = sub.add_parser("analytic", help="Closed-form minimizers and Phi_min")
    pa.add_argument("--lm", type=float, required=True)
    pa.add_argument("--ln", type=float, required=True)
    pa.add_argument("--grid", type=int, default=None)
    pa.add_argument("--out-v", default=None)
    pa.add_argument("--out-w", default=None)
    pa.set_defaults(func=cmd_analytic)

    pd = sub.add_parser("diagnose", help="Classify the length ratio, or check a map")
    pd.add_argument("--lm", type=float, default=None)
    pd.add_argument("--ln", type=float, default=None)
    pd.add_argument("--map", default=None)
    pd.set_defaults(func=cmd_diagnose)

    ps = sub.add_parser("second-variation", help="Second variation along a probe field")
    ps.add_argument("--map", required=True)
    ps.add_argument("--probe", type=_probe_triple, required=True, help="center,radius,epsilon")
    ps.add_argument("--delta", type=float, default=1e-3, help="Flow time of the finite-difference check")
    ps.set_defaults(func=cmd_second_variation)

    pq = sub.add_parser("sequence", help="Zig-zag minimizing sequence for L_n < L_m")
    pq.add_argument("--lm", type=float, required=True)
    pq.add_argument("--ln", type=float, required=True)
    pq.add_argument("--kmax", type=int, required=True)
    pq.add_argument("--grid", type=int, default=None)
    pq.add_argument("--teeth", type=int, default=1)
    pq.add_argument("--emit-svg", default=None)
    pq.set_defaults(func=cmd_sequence)

    pt = sub.add_parser("tensor", help="G(B, B) and strain for a tensor fixture")
    pt.add_argument("--fixture", required=True)
    pt.set_defaults(func=cmd_tensor)

    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv and dispatch.

    Returns:
        Process exit code
    """
    argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except DistminError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Invalid solver settings: {e}")
        return InputError.exit_code
