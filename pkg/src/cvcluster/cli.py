"""Command-line interface.

Subcommands: ``prepare`` (cluster certification), ``displace`` / ``squeeze``
/ ``cx`` (the three gates, with optional Monte-Carlo certification), and
``figures`` (emit the reference datasets).

Exit codes: 0 success, 1 physics predicate unmet, 2 invalid input,
3 certification failure, 4 I/O failure. Every run is deterministic given
its resolved configuration, which is echoed as a JSON header line.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .analysis import (
    CurveDataset,
    fig3_dataset,
    fig4_dataset,
    fig5_dataset,
    fig6_dataset,
    fig8_dataset,
)
from .cluster import (
    build_cluster,
    inseparability_check,
    inseparability_threshold,
    nullifier_variances,
)
from .gates import (
    CxParams,
    DisplacementParams,
    SqueezerParams,
    controlled_x_gate,
    displacement_gate,
    identity_fidelity,
    min_distinguishable_displacement,
    optimal_detection_angle,
    rotated_output_variance,
    squeezer_gate,
    squeezing_threshold,
)
from .io import format_float, write_dataset
from .oracle import RngConfig, certify, sample_expr
from .algebra import rotate_quadrature

EXIT_OK = 0
EXIT_UNMET = 1
EXIT_USAGE = 2
EXIT_CERTIFY = 3
EXIT_IO = 4

ENV_SEED = "CVCLUSTER_SEED"
CERTIFY_K = 4.0


class UsageError(Exception):
    """Invalid flag, config value, or config file."""


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _add_output_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--out", default=None, help="write results to this path")
    sp.add_argument("--format", choices=("csv", "json"), default=None,
                    help="serialization format (default csv)")
    sp.add_argument("--config", default=None,
                    help="JSON config file; flags override its values")


def _add_input_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--coherent", action="store_true", default=None,
                    help="coherent input (unit variances)")
    sp.add_argument("--vx", type=float, default=None, help="input amplitude variance")
    sp.add_argument("--vy", type=float, default=None, help="input phase variance")


def _add_certify_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--certify", action="store_true", default=None,
                    help="cross-check the analytic moments by sampling")
    sp.add_argument("--samples", type=int, default=None,
                    help="Monte-Carlo sample count (default 1000000)")
    sp.add_argument("--seed", type=int, default=None,
                    help=f"rng seed (default ${ENV_SEED} or 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvcluster",
        description="Gaussian logic gates on a four-mode optical cluster state",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prepare = sub.add_parser("prepare", help="build the cluster and certify it")
    prepare.add_argument("--r", type=float, default=None, help="squeezing parameter")
    _add_output_flags(prepare)

    displace = sub.add_parser("displace", help="run the displacement gate")
    displace.add_argument("--r", type=float, default=None, help="squeezing parameter")
    displace.add_argument("--s0", type=float, default=None, help="amplitude displacement")
    displace.add_argument("--s1", type=float, default=None, help="phase displacement")
    displace.add_argument("--g2", type=float, default=None, help="residual gain on detector 3")
    displace.add_argument("--g3", type=float, default=None, help="residual gain on detector 4")
    displace.add_argument("--optimal-gain", action="store_true", default=None,
                          help="variance-minimizing residual gains")
    displace.add_argument("--unity-gain", action="store_true", default=None,
                          help="residual gains g2=g3=1")
    displace.add_argument("--criterion", type=int, choices=(95, 99), default=None,
                          help="distinguishability criterion (default 99)")
    _add_input_flags(displace)
    _add_certify_flags(displace)
    _add_output_flags(displace)

    squeeze = sub.add_parser("squeeze", help="run the squeezing gate")
    squeeze.add_argument("--r", type=float, default=None, help="squeezing parameter")
    squeeze.add_argument("--theta", type=float, default=None, help="detection angle")
    squeeze.add_argument("--tan-theta", type=float, default=None,
                         help="detection angle given as its tangent")
    squeeze.add_argument("--phi", type=float, default=None,
                         help="report the output variance at this quadrature angle")
    squeeze.add_argument("--scan-phi", action="store_true", default=None,
                         help="scan the rotated output variance over [0, pi]")
    squeeze.add_argument("--grid", type=int, default=None,
                         help="number of scan points (default 2001)")
    _add_input_flags(squeeze)
    _add_certify_flags(squeeze)
    _add_output_flags(squeeze)

    cx = sub.add_parser("cx", help="run the controlled-X gate")
    cx.add_argument("--r", type=float, default=None, help="squeezing parameter")
    cx.add_argument("--sc", type=float, default=None, help="control amplitude mean")
    cx.add_argument("--st", type=float, default=None, help="target amplitude mean")
    _add_input_flags(cx)
    _add_certify_flags(cx)
    _add_output_flags(cx)

    figures = sub.add_parser("figures", help="emit the reference datasets")
    figures.add_argument("--grid", type=int, default=None,
                         help="Wigner grid points per axis (default 201)")
    figures.add_argument("--span", type=float, default=None,
                         help="Wigner grid half-width in standard deviations (default 5)")
    _add_output_flags(figures)

    return parser


_DEFAULTS: dict[str, dict] = {
    "prepare": {"r": None, "format": "csv", "out": None},
    "displace": {
        "r": None, "s0": 0.0, "s1": 0.0,
        "g2": None, "g3": None, "optimal_gain": False, "unity_gain": False,
        "coherent": False, "vx": 1.0, "vy": 1.0, "criterion": 99,
        "certify": False, "samples": 1_000_000, "seed": None,
        "format": "csv", "out": None,
    },
    "squeeze": {
        "r": None, "theta": None, "tan_theta": None,
        "phi": None, "scan_phi": False, "grid": 2001,
        "coherent": False, "vx": 1.0, "vy": 1.0,
        "certify": False, "samples": 1_000_000, "seed": None,
        "format": "csv", "out": None,
    },
    "cx": {
        "r": None, "sc": 0.0, "st": 0.0,
        "coherent": False, "vx": 1.0, "vy": 1.0,
        "certify": False, "samples": 1_000_000, "seed": None,
        "format": "csv", "out": None,
    },
    "figures": {"out": "figures", "format": "csv", "grid": 201, "span": 5.0},
}


# --------------------------------------------------------------------------
# config resolution
# --------------------------------------------------------------------------


def _load_config_file(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return {str(key).replace("-", "_"): value for key, value in data.items()}


def resolve_config(args: argparse.Namespace, defaults: dict) -> dict:
    """Merge hard defaults, the config file, and explicit flags (in that order)."""
    cfg = dict(defaults)
    if getattr(args, "config", None):
        file_cfg = _load_config_file(args.config)
        unknown = sorted(set(file_cfg) - set(defaults))
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(unknown)}")
        cfg.update(file_cfg)
    for key in defaults:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _as_float(cfg: dict, key: str) -> float:
    try:
        value = float(cfg[key])
    except (TypeError, ValueError):
        raise UsageError(f"--{key.replace('_', '-')} must be a number") from None
    if not math.isfinite(value):
        raise UsageError(f"--{key.replace('_', '-')} must be finite")
    cfg[key] = value
    return value


def _require_r(cfg: dict) -> float:
    if cfg.get("r") is None:
        raise UsageError("missing required --r")
    r = _as_float(cfg, "r")
    if r < 0:
        raise UsageError("--r must be >= 0")
    return r


def _positive(cfg: dict, key: str) -> float:
    value = _as_float(cfg, key)
    if value <= 0:
        raise UsageError(f"--{key.replace('_', '-')} must be > 0")
    return value


def _resolve_input_state(cfg: dict, args: argparse.Namespace | None) -> None:
    if args is not None and getattr(args, "coherent", None):
        if getattr(args, "vx", None) is not None or getattr(args, "vy", None) is not None:
            raise UsageError("choose either --coherent or explicit --vx/--vy")
    if cfg["coherent"]:
        cfg["vx"] = 1.0
        cfg["vy"] = 1.0
    _positive(cfg, "vx")
    _positive(cfg, "vy")


def _resolve_certification(cfg: dict) -> None:
    if not isinstance(cfg["samples"], int):
        raise UsageError("--samples must be an integer")
    if cfg["samples"] < 1000:
        raise UsageError("--samples must be >= 1000")
    seed = cfg.get("seed")
    if seed is None:
        raw = os.environ.get(ENV_SEED, "0")
        try:
            seed = int(raw)
        except ValueError:
            raise UsageError(f"${ENV_SEED} must be an integer, got {raw!r}") from None
    if not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    cfg["seed"] = seed


def _check_format(cfg: dict) -> None:
    if cfg["format"] not in ("csv", "json"):
        raise UsageError("--format must be csv or json")


# --------------------------------------------------------------------------
# reporting
# --------------------------------------------------------------------------


def _fmt_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt_value(v) for v in value) + "]"
    return str(value)


def _emit_report(resolved: dict, results: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"config": resolved, "results": results}, sort_keys=True))
        return
    print("# " + json.dumps(resolved, sort_keys=True))
    for key, value in results.items():
        if key == "certifications":
            for cert in value:
                status = "PASS" if cert["passed"] else "FAIL"
                print(
                    f"certify {cert['name']} ({cert['statistic']}): "
                    f"analytic={format_float(cert['analytic'])} "
                    f"estimate={format_float(cert['estimate'])} "
                    f"se={format_float(cert['se'])} -> {status}"
                )
        else:
            print(f"{key}: {_fmt_value(value)}")


def _resolved_view(command: str, cfg: dict) -> dict:
    view: dict = {"command": command}
    for key in sorted(cfg):
        view[key] = cfg[key]
    return view


def _run_certifications(checks: list[tuple], r: float, cfg: dict) -> tuple[list[dict], bool]:
    """checks: (name, statistic, expression, analytic value)."""
    rows = []
    all_passed = True
    for index, (name, statistic, expr, analytic) in enumerate(checks):
        rng = RngConfig(seed=(cfg["seed"] + index) % 2**64)
        est = sample_expr(expr, r, cfg["samples"], rng)
        res = certify(analytic, est, CERTIFY_K, statistic)
        all_passed &= res.passed
        rows.append({
            "name": name,
            "statistic": statistic,
            "analytic": res.analytic,
            "estimate": res.estimate,
            "se": res.se,
            "k_sigma": res.k_sigma,
            "passed": res.passed,
        })
    return rows, all_passed


def _write_out(dataset: CurveDataset, cfg: dict, resolved: dict) -> int | None:
    if not cfg.get("out"):
        return None
    try:
        write_dataset(dataset, cfg["out"], cfg["format"], resolved)
    except OSError as exc:
        print(f"error: cannot write {cfg['out']}: {exc}", file=sys.stderr)
        return EXIT_IO
    return None


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_prepare(cfg: dict) -> int:
    r = cfg["r"]
    cluster = build_cluster()
    variances = nullifier_variances(cluster, r)
    report = inseparability_check(cluster, r)
    threshold = inseparability_threshold()
    results = {
        "nullifier_variances": list(variances),
        "inseparability_lhs": list(report.lhs),
        "bound": report.bound,
        "satisfied": list(report.satisfied),
        "all_satisfied": report.all_satisfied,
        "threshold_r": threshold,
    }
    resolved = _resolved_view("prepare", cfg)
    _emit_report(resolved, results, cfg["format"])
    return EXIT_OK if report.all_satisfied else EXIT_UNMET


def cmd_displace(cfg: dict) -> int:
    r = cfg["r"]
    params = DisplacementParams(
        s0=cfg["s0"], s1=cfg["s1"], g2=cfg["g2"], g3=cfg["g3"],
        var_x=cfg["vx"], var_y=cfg["vy"],
    )
    result = displacement_gate(params, r)
    stats = result.stats["out"]
    s0_min, s1_min = min_distinguishable_displacement(
        r, cfg["vx"], cfg["vy"], cfg["criterion"]
    )
    results = {
        "g2": result.meta["g2"],
        "g3": result.meta["g3"],
        "mean_x": stats.mean_x,
        "mean_y": stats.mean_y,
        "var_x": stats.var_x,
        "var_y": stats.var_y,
        "fidelity": identity_fidelity(r),
        "s0_min": s0_min,
        "s1_min": s1_min,
    }
    exit_code = EXIT_OK
    if cfg["certify"]:
        mode = result.modes["out"]
        checks = [
            ("out.mean_x", "mean", mode.x, stats.mean_x),
            ("out.mean_y", "mean", mode.y, stats.mean_y),
            ("out.var_x", "variance", mode.x, stats.var_x),
            ("out.var_y", "variance", mode.y, stats.var_y),
        ]
        rows, passed = _run_certifications(checks, r, cfg)
        results["certifications"] = rows
        results["certified"] = passed
        if not passed:
            exit_code = EXIT_CERTIFY
    resolved = _resolved_view("displace", cfg)
    _emit_report(resolved, results, cfg["format"])
    if cfg.get("out"):
        columns = ("r", "s0", "s1", "g2", "g3", "mean_x", "mean_y",
                   "var_x", "var_y", "fidelity", "s0_min", "s1_min")
        row = [r, cfg["s0"], cfg["s1"], result.meta["g2"], result.meta["g3"],
               stats.mean_x, stats.mean_y, stats.var_x, stats.var_y,
               results["fidelity"], s0_min, s1_min]
        dataset = CurveDataset(tag="displace", columns=columns,
                               values=np.array([row]), meta={})
        failure = _write_out(dataset, cfg, resolved)
        if failure is not None:
            return failure
    return exit_code


def cmd_squeeze(cfg: dict) -> int:
    r = cfg["r"]
    params = SqueezerParams(theta=cfg["theta"], var_x=cfg["vx"], var_y=cfg["vy"])
    result = squeezer_gate(params, r)
    stats = result.stats["out"]
    tan_theta = result.meta["tan_theta"]
    results = {
        "theta": cfg["theta"],
        "tan_theta": tan_theta,
        "rescale": result.meta["rescale"],
        "squeeze_parameter": result.meta["squeeze_parameter"],
        "cross_coefficient": result.meta["cross_coefficient"],
        "mean_x": stats.mean_x,
        "mean_y": stats.mean_y,
        "var_x": stats.var_x,
        "var_y": stats.var_y,
    }
    phi_opt = None
    if abs(tan_theta) >= 1e-12:
        phi_opt, floor = optimal_detection_angle(cfg["theta"])
        results["phi_opt"] = phi_opt
        results["v_min_coherent"] = 3.0 * math.exp(-2.0 * r) + floor
        results["threshold_r"] = squeezing_threshold(cfg["theta"])
    else:
        results["note"] = "tan(theta)=0: rotated variance has no squeezing direction"
    if cfg.get("phi") is not None:
        results["v_at_phi"] = rotated_output_variance(params, r, cfg["phi"])
    scan = None
    if cfg["scan_phi"]:
        phis = np.linspace(0.0, math.pi, cfg["grid"])
        vs = np.array([rotated_output_variance(params, r, p) for p in phis])
        best = int(np.argmin(vs))
        results["scan_min_v"] = float(vs[best])
        results["scan_min_phi"] = float(phis[best])
        results["scan_max_v"] = float(vs.max())
        scan = CurveDataset(tag="squeeze_scan", columns=("phi", "v"),
                            values=np.column_stack((phis, vs)), meta={})
    exit_code = EXIT_OK
    if cfg["certify"]:
        mode = result.modes["out"]
        checks = [
            ("out.mean_x", "mean", mode.x, stats.mean_x),
            ("out.mean_y", "mean", mode.y, stats.mean_y),
            ("out.var_x", "variance", mode.x, stats.var_x),
            ("out.var_y", "variance", mode.y, stats.var_y),
        ]
        if phi_opt is not None:
            rotated = rotate_quadrature(mode, phi_opt)
            checks.append((
                "out.rotated_var_at_phi_opt", "variance", rotated,
                rotated_output_variance(params, r, phi_opt),
            ))
        rows, passed = _run_certifications(checks, r, cfg)
        results["certifications"] = rows
        results["certified"] = passed
        if not passed:
            exit_code = EXIT_CERTIFY
    resolved = _resolved_view("squeeze", cfg)
    _emit_report(resolved, results, cfg["format"])
    if cfg.get("out"):
        if scan is None:
            columns = ("r", "theta", "tan_theta", "mean_x", "mean_y", "var_x", "var_y")
            row = [r, cfg["theta"], tan_theta, stats.mean_x, stats.mean_y,
                   stats.var_x, stats.var_y]
            scan = CurveDataset(tag="squeeze", columns=columns,
                                values=np.array([row]), meta={})
        failure = _write_out(scan, cfg, resolved)
        if failure is not None:
            return failure
    return exit_code


def cmd_cx(cfg: dict) -> int:
    r = cfg["r"]
    params = CxParams(
        s_c=cfg["sc"], s_t=cfg["st"],
        var_cx=cfg["vx"], var_cy=cfg["vy"],
        var_tx=cfg["vx"], var_ty=cfg["vy"],
    )
    result = controlled_x_gate(params, r)
    results: dict = {}
    for name in ("target", "control"):
        stats = result.stats[name]
        results[f"{name}_mean_x"] = stats.mean_x
        results[f"{name}_mean_y"] = stats.mean_y
        results[f"{name}_var_x"] = stats.var_x
        results[f"{name}_var_y"] = stats.var_y
    exit_code = EXIT_OK
    if cfg["certify"]:
        checks = []
        for name in ("target", "control"):
            mode = result.modes[name]
            stats = result.stats[name]
            checks.extend([
                (f"{name}.mean_x", "mean", mode.x, stats.mean_x),
                (f"{name}.mean_y", "mean", mode.y, stats.mean_y),
                (f"{name}.var_x", "variance", mode.x, stats.var_x),
                (f"{name}.var_y", "variance", mode.y, stats.var_y),
            ])
        rows, passed = _run_certifications(checks, r, cfg)
        results["certifications"] = rows
        results["certified"] = passed
        if not passed:
            exit_code = EXIT_CERTIFY
    resolved = _resolved_view("cx", cfg)
    _emit_report(resolved, results, cfg["format"])
    if cfg.get("out"):
        columns = tuple(
            f"{name}_{field}" for name in ("target", "control")
            for field in ("mean_x", "mean_y", "var_x", "var_y")
        )
        row = [results[c] for c in columns]
        dataset = CurveDataset(tag="cx", columns=columns,
                               values=np.array([row]), meta={})
        failure = _write_out(dataset, cfg, resolved)
        if failure is not None:
            return failure
    return exit_code


def cmd_figures(cfg: dict) -> int:
    resolved = _resolved_view("figures", cfg)
    out_dir = Path(cfg["out"])
    ext = cfg["format"]
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create {out_dir}: {exc}", file=sys.stderr)
        return EXIT_IO
    datasets = {
        "fig3": fig3_dataset(np.linspace(0.0, 2.0, 41), np.linspace(0.0, 2.0, 41)),
        "fig4": fig4_dataset(np.linspace(0.0, 5.0, 100)),
        "fig5": fig5_dataset(np.linspace(0.0, math.pi, 501)),
        "fig6": fig6_dataset(np.linspace(0.0, math.pi, 501)),
    }
    for name, panel in fig8_dataset(grid_points=cfg["grid"], span=cfg["span"]).items():
        datasets[f"fig8_{name}"] = panel
    written = []
    try:
        for name, dataset in datasets.items():
            path = out_dir / f"{name}.{ext}"
            write_dataset(dataset, path, ext, resolved)
            written.append(str(path))
    except OSError as exc:
        print(f"error: cannot write datasets: {exc}", file=sys.stderr)
        return EXIT_IO
    _emit_report(resolved, {"files": written}, cfg["format"])
    return EXIT_OK


# --------------------------------------------------------------------------
# validation per command
# --------------------------------------------------------------------------


def _validate_prepare(cfg: dict, args: argparse.Namespace | None) -> None:
    _require_r(cfg)
    _check_format(cfg)


def _validate_displace(cfg: dict, args: argparse.Namespace | None) -> None:
    _require_r(cfg)
    _check_format(cfg)
    styles = (
        int(bool(cfg["optimal_gain"]))
        + int(bool(cfg["unity_gain"]))
        + int(cfg["g2"] is not None or cfg["g3"] is not None)
    )
    if styles > 1:
        raise UsageError("choose one of --g2/--g3, --optimal-gain, --unity-gain")
    if cfg["unity_gain"]:
        cfg["g2"], cfg["g3"] = 1.0, 1.0
    elif cfg["optimal_gain"] or cfg["g2"] is None and cfg["g3"] is None:
        cfg["g2"], cfg["g3"] = "optimal", "optimal"
    else:
        cfg["g2"] = _as_float(cfg, "g2") if cfg["g2"] is not None else "optimal"
        cfg["g3"] = _as_float(cfg, "g3") if cfg["g3"] is not None else "optimal"
    for key in ("s0", "s1"):
        _as_float(cfg, key)
    if cfg["criterion"] not in (95, 99):
        raise UsageError("--criterion must be 95 or 99")
    _resolve_input_state(cfg, args)
    _resolve_certification(cfg)


def _validate_squeeze(cfg: dict, args: argparse.Namespace | None) -> None:
    _require_r(cfg)
    _check_format(cfg)
    if cfg["theta"] is not None and cfg["tan_theta"] is not None:
        raise UsageError("give either --theta or --tan-theta, not both")
    if cfg["theta"] is None and cfg["tan_theta"] is None:
        raise UsageError("missing required --theta or --tan-theta")
    if cfg["tan_theta"] is not None:
        cfg["theta"] = math.atan(_as_float(cfg, "tan_theta"))
    else:
        _as_float(cfg, "theta")
        cfg["tan_theta"] = math.tan(cfg["theta"])
    if abs(math.cos(cfg["theta"])) <= 1e-9:
        raise UsageError("--theta too close to pi/2: feedforward rescale diverges")
    if cfg.get("phi") is not None:
        _as_float(cfg, "phi")
    if not isinstance(cfg["grid"], int) or cfg["grid"] < 2:
        raise UsageError("--grid must be an integer >= 2")
    _resolve_input_state(cfg, args)
    _resolve_certification(cfg)


def _validate_cx(cfg: dict, args: argparse.Namespace | None) -> None:
    _require_r(cfg)
    _check_format(cfg)
    for key in ("sc", "st"):
        _as_float(cfg, key)
    _resolve_input_state(cfg, args)
    _resolve_certification(cfg)


def _validate_figures(cfg: dict, args: argparse.Namespace | None) -> None:
    _check_format(cfg)
    if not isinstance(cfg["grid"], int) or cfg["grid"] < 2:
        raise UsageError("--grid must be an integer >= 2")
    span = _as_float(cfg, "span")
    if span <= 0:
        raise UsageError("--span must be > 0")
    if not cfg["out"]:
        raise UsageError("--out must name a directory")


_VALIDATORS = {
    "prepare": _validate_prepare,
    "displace": _validate_displace,
    "squeeze": _validate_squeeze,
    "cx": _validate_cx,
    "figures": _validate_figures,
}

_COMMANDS = {
    "prepare": cmd_prepare,
    "displace": cmd_displace,
    "squeeze": cmd_squeeze,
    "cx": cmd_cx,
    "figures": cmd_figures,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return EXIT_OK
        return EXIT_USAGE
    try:
        cfg = resolve_config(args, _DEFAULTS[args.command])
        _VALIDATORS[args.command](cfg, args)
        return _COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    raise SystemExit(main(sys.argv[1:]))
