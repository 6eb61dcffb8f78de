"""Command-line surface: single-point rates, scans, the observables table,
and the verification suite.

All data goes to stdout as CSV (default) or JSON Lines; diagnostics go to
stderr.  Exit codes: 0 success, 1 computation or verification failure,
2 usage error.  Output is deterministic: identical invocations produce
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import landau, oracle, rate, specfun, units

__all__ = ["main", "build_parser"]

_DEF_M_PARENT = 105.7
_LLL_FIELDS_OVER_MSQ = (0.6, 1.0, 10.0, 100.0)
_COMPLETENESS_LEVELS = (0, 5, 20, 50)
_COMPLETENESS_ARGS = (0.1, 1.0, 10.0, 100.0)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magdecay",
        description="Decay rate of a charged scalar bound in a constant magnetic field, "
        "its ratio to the time-dilated inertial rate, and SI orbit observables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--M-mu", dest="m_mu", type=float, default=None,
                       help=f"parent mass in MeV (default {_DEF_M_PARENT})")
        p.add_argument("--M-e", dest="m_e", type=float, default=None,
                       help="charged daughter mass in MeV (default 0)")
        p.add_argument("--M-nu", dest="m_nu", type=float, default=None,
                       help="neutral daughter mass in MeV (default 0; rates require 0)")
        p.add_argument("--G", dest="coupling", type=float, default=None,
                       help="coupling in MeV (default 1; ratios are G-independent)")
        p.add_argument("--tol", dest="tol", type=float, default=None,
                       help="relative quadrature tolerance (default 1e-9)")
        p.add_argument("--format", dest="format", choices=("csv", "json"), default=None,
                       help="output format (default csv)")
        p.add_argument("--config", dest="config", default=None,
                       help="path to a 'key = value' config file; flags override it")

    p_rate = sub.add_parser("rate", help="single (p_perp^2, m) point with SI observables")
    p_rate.add_argument("--p-perp2", dest="p_perp2", type=float, default=None,
                        help="squared radial momentum in MeV^2")
    p_rate.add_argument("--m", dest="m_level", type=int, default=None, help="parent Landau level")
    add_common(p_rate)

    p_scanm = sub.add_parser("scan-m", help="ratio vs parent level at fixed radial momentum")
    p_scanm.add_argument("--p-perp2", dest="p_perp2", type=float, action="append", default=None,
                         help="squared radial momentum in MeV^2; repeat for several curves")
    p_scanm.add_argument("--m-min", dest="m_min", type=int, default=None)
    p_scanm.add_argument("--m-max", dest="m_max", type=int, default=None)
    add_common(p_scanm)

    p_scanf = sub.add_parser("scan-field", help="ratio vs level at fixed orbit radius")
    p_scanf.add_argument("--radius", dest="radius", type=float, default=None,
                         help="orbit radius in 1/MeV (default 0.1)")
    p_scanf.add_argument("--m-min", dest="m_min", type=int, default=None)
    p_scanf.add_argument("--m-max", dest="m_max", type=int, default=None)
    add_common(p_scanf)

    p_lll = sub.add_parser("scan-lll", help="lowest-level ratio vs field on a log grid")
    p_lll.add_argument("--eB-min", dest="eb_min", type=float, default=None,
                       help="lowest field in MeV^2 (must exceed M^2/2)")
    p_lll.add_argument("--eB-max", dest="eb_max", type=float, default=None)
    p_lll.add_argument("--points", dest="points", type=int, default=None,
                       help="grid size (default 40)")
    add_common(p_lll)

    p_table = sub.add_parser("table", help="the four reference rows of observables")
    add_common(p_table)

    p_verify = sub.add_parser("verify", help="overlap oracle, lowest-level equivalence, "
                                             "and completeness checks")
    p_verify.add_argument("--trials", dest="trials", type=int, default=None,
                          help="random overlap comparisons (default 100)")
    p_verify.add_argument("--seed", dest="seed", type=int, default=None,
                          help="random seed (default 0)")
    add_common(p_verify)

    return parser


# config keys are the long flag names, lower-cased, dashes as underscores;
# the two short flags map onto their argparse destinations
_CONFIG_KEY_TO_DEST = {"m": "m_level", "g": "coupling"}


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise _UsageError(f"config line is not 'key = value': {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_").lower()
            values[_CONFIG_KEY_TO_DEST.get(key, key)] = value.strip()
    return values


def _pick(args, config: dict[str, str], key: str, cast, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        try:
            return cast(config[key])
        except ValueError as exc:
            raise _UsageError(f"config key {key!r}: {exc}") from exc
    return default


def _float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _channel(args, config) -> landau.DecayChannel:
    return landau.DecayChannel(
        m_parent=_pick(args, config, "m_mu", float, _DEF_M_PARENT),
        m_charged=_pick(args, config, "m_e", float, 0.0),
        m_neutral=_pick(args, config, "m_nu", float, 0.0),
        coupling=_pick(args, config, "coupling", float, 1.0),
    )


def _quad_config(args, config) -> rate.QuadratureConfig:
    return rate.QuadratureConfig(rel_tol=_pick(args, config, "tol", float, 1e-9))


def _rate_record(channel, p_perp_sq: float, m_level: int, cfg) -> dict:
    field = landau.field_for_radial_energy(p_perp_sq, m_level)
    state = landau.MagnetizedState(field=field, level=m_level)
    result = rate.decay_rate(channel, state, cfg)
    p_perp = math.sqrt(p_perp_sq)
    omega = state.energy(channel.m_parent)
    return {
        "eB_MeV2": field,
        "omega_MeV": omega,
        "lorentz_gamma": result.lorentz_gamma,
        "n_max": result.n_max_used,
        "Gamma_MeV": result.gamma_total,
        "ratio": result.ratio,
        "quad_error": result.quad_error,
        "radius_m": units.radius_si(p_perp, m_level),
        "acceleration_m_s2": units.acceleration_si(p_perp, m_level, omega),
        "lambda_dB_m": units.de_broglie_si(p_perp),
        "B_gauss": units.field_to_gauss(field),
    }


def _cmd_rate(args, config) -> list[dict]:
    p_perp_sq = _pick(args, config, "p_perp2", float)
    m_level = _pick(args, config, "m_level", int)
    if p_perp_sq is None or m_level is None:
        raise _UsageError("rate requires --p-perp2 and --m")
    channel = _channel(args, config)
    return [_rate_record(channel, p_perp_sq, m_level, _quad_config(args, config))]


def _cmd_scan_m(args, config) -> list[dict]:
    p_list = _pick(args, config, "p_perp2", _float_list, [1e4])
    m_min = _pick(args, config, "m_min", int)
    m_max = _pick(args, config, "m_max", int)
    if m_min is None or m_max is None:
        raise _UsageError("scan-m requires --m-min and --m-max")
    if not 0 <= m_min <= m_max:
        raise _UsageError(f"need 0 <= m_min <= m_max, got [{m_min}, {m_max}]")
    channel = _channel(args, config)
    cfg = _quad_config(args, config)
    return [
        {"p_perp2_MeV2": p2, "m": m, **_rate_record(channel, p2, m, cfg)}
        for p2 in p_list
        for m in range(m_min, m_max + 1)
    ]


def _cmd_scan_field(args, config) -> list[dict]:
    radius = _pick(args, config, "radius", float, 0.1)
    m_min = _pick(args, config, "m_min", int)
    m_max = _pick(args, config, "m_max", int)
    if radius <= 0.0:
        raise _UsageError(f"radius must be positive, got {radius}")
    if m_min is None or m_max is None:
        raise _UsageError("scan-field requires --m-min and --m-max")
    if not 0 <= m_min <= m_max:
        raise _UsageError(f"need 0 <= m_min <= m_max, got [{m_min}, {m_max}]")
    channel = _channel(args, config)
    cfg = _quad_config(args, config)
    records = []
    for m in range(m_min, m_max + 1):
        p_perp = landau.radial_energy_for_radius(radius, m)
        records.append({"m": m, **_rate_record(channel, p_perp * p_perp, m, cfg)})
    return records


def _cmd_scan_lll(args, config) -> list[dict]:
    channel = _channel(args, config)
    eb_min = _pick(args, config, "eb_min", float, 6.0e3)
    eb_max = _pick(args, config, "eb_max", float, 1.0e7)
    points = _pick(args, config, "points", int, 40)
    threshold = channel.m_parent**2 / 2.0
    if eb_min <= threshold:
        raise _UsageError(
            f"--eB-min must exceed M^2/2 = {threshold:g} MeV^2 so only the lowest "
            f"daughter level is open, got {eb_min:g}"
        )
    if eb_max <= eb_min:
        raise _UsageError("need eB-max > eB-min")
    if points < 2:
        raise _UsageError(f"need at least 2 grid points, got {points}")
    cfg = _quad_config(args, config)
    grid = np.exp(np.linspace(math.log(eb_min), math.log(eb_max), points))
    grid[0], grid[-1] = eb_min, eb_max
    records = []
    for field in grid:
        field = float(field)
        state = landau.MagnetizedState(field=field, level=0)
        records.append(
            {
                "eB_MeV2": field,
                "p_perp_MeV": math.sqrt(field),
                "ratio_exact": rate.lll_ratio_exact(channel, field, cfg),
                "ratio_factored": rate.lll_ratio_factored(channel, field, cfg),
                "ratio_general": rate.decay_rate(channel, state, cfg).ratio,
            }
        )
    return records


_TABLE_POINTS = ((3.0e4, 65), (1.0e4, 30), (5.0e3, 20), (1.0e3, 5))


def _cmd_table(args, config) -> list[dict]:
    channel = _channel(args, config)
    cfg = _quad_config(args, config)
    records = []
    for p_perp_sq, m_level in _TABLE_POINTS:
        full = _rate_record(channel, p_perp_sq, m_level, cfg)
        records.append(
            {
                "p_perp2_MeV2": p_perp_sq,
                "m": m_level,
                "ratio": full["ratio"],
                "radius_m": full["radius_m"],
                "acceleration_m_s2": full["acceleration_m_s2"],
                "lambda_dB_m": full["lambda_dB_m"],
                "B_gauss": full["B_gauss"],
            }
        )
    return records


def _cmd_verify(args, config) -> list[dict]:
    trials = _pick(args, config, "trials", int, 100)
    seed = _pick(args, config, "seed", int, 0)
    if trials <= 0:
        raise _UsageError(f"trials must be positive, got {trials}")
    channel = _channel(args, config)
    cfg = _quad_config(args, config)

    report = oracle.verify_closed_form(trials, seed=seed, cfg=cfg)
    records = [
        {
            "check": "overlap_closed_form",
            "passed": report.passed,
            "metric": "max_rel_err",
            "value": report.max_rel_err,
            "threshold": report.tolerance,
        }
    ]

    worst_lll = 0.0
    for factor in _LLL_FIELDS_OVER_MSQ:
        field = factor * channel.m_parent**2
        state = landau.MagnetizedState(field=field, level=0)
        exact = rate.lll_ratio_exact(channel, field, cfg)
        general = rate.decay_rate(channel, state, cfg).ratio
        worst_lll = max(worst_lll, abs(general - exact) / exact)
    records.append(
        {
            "check": "lowest_level_equivalence",
            "passed": worst_lll < 1e-7,
            "metric": "max_rel_err",
            "value": worst_lll,
            "threshold": 1e-7,
        }
    )

    worst_sum = 0.0
    for m in _COMPLETENESS_LEVELS:
        for x in _COMPLETENESS_ARGS:
            total, _ = specfun.overlap_completeness_sum(m, x)
            worst_sum = max(worst_sum, abs(total - 1.0))
    records.append(
        {
            "check": "overlap_completeness",
            "passed": worst_sum < 1e-10,
            "metric": "max_abs_dev",
            "value": worst_sum,
            "threshold": 1e-10,
        }
    )
    return records


_COMMANDS = {
    "rate": _cmd_rate,
    "scan-m": _cmd_scan_m,
    "scan-field": _cmd_scan_field,
    "scan-lll": _cmd_scan_lll,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value in output: {value}")
        return f"{value:.17g}"
    return str(value)


def _emit(records: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        for record in records:
            stream.write(json.dumps(record, allow_nan=False, separators=(",", ":")))
            stream.write("\n")
        return
    keys = list(records[0])
    stream.write(",".join(keys) + "\n")
    for record in records:
        stream.write(",".join(_format_cell(record[key]) for key in keys) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            config = _read_config(args.config) if args.config else {}
        except OSError as exc:
            raise _UsageError(f"cannot read config file: {exc}") from exc
        fmt = _pick(args, config, "format", str, "csv")
        if fmt not in ("csv", "json"):
            raise _UsageError(f"format must be csv or json, got {fmt!r}")
        records = _COMMANDS[args.command](args, config)
        _emit(records, fmt, sys.stdout)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, rate.RateConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command == "verify" and not all(r["passed"] for r in records):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
