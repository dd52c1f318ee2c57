"""Command-line interface: ``qenergy <command> [options]``.

Exit status is 0 on success, 2 for configuration or domain errors and 3 when a
photonic sweep saturates (sample time overflows to infinity).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from . import topology
from .exceptions import QEnergyError
from .figures import FIGURES, reproduce_figure
from .inventory import breakdown_by_group, instantiate
from .photonics import PHOTONIC_COLUMNS, PhotonicDevice, chip_by_name, photonic_row
from .presets import Platform, dumps, list_presets, load_platform, load_preset
from .scenario import BETA_MIN, ScenarioConfig, SweepAxis, format_csv, format_json, run_scenario
from .timing import algorithm_time, circuit_terms, circuit_time
from .zonecomp import BETA_COLUMNS, beta_envelope, beta_min, zone_limited_depth

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_OVERFLOW = 3


class UsageError(QEnergyError):
    pass


def parse_range(text: str) -> list[float]:
    """``"a:b"`` or ``"a:b:step"`` (inclusive), a comma list, or a single number."""
    def num(tok: str) -> float:
        try:
            value = float(tok)
        except ValueError:
            raise UsageError(f"not a number: {tok!r}") from None
        return int(value) if value.is_integer() and "e" not in tok.lower() and "." not in tok else value

    text = text.strip()
    if not text:
        raise UsageError("empty range")
    if ":" in text:
        parts = [num(p) for p in text.split(":")]
        if len(parts) not in (2, 3):
            raise UsageError(f"range must be a:b or a:b:step, got {text!r}")
        start, stop = parts[0], parts[1]
        step = parts[2] if len(parts) == 3 else 1
        if step <= 0:
            raise UsageError("range step must be positive")
        if stop < start:
            raise UsageError(f"empty range {text!r}")
        count = math.floor((stop - start) / step + 1e-9) + 1
        values = [start + k * step for k in range(count)]
        return [int(v) if isinstance(start, int) and isinstance(step, int) else v for v in values]
    return [num(p) for p in text.split(",") if p.strip()]


def _beta(text: str | None):
    if text is None or text == BETA_MIN:
        return text
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"beta must be a number or {BETA_MIN!r}, got {text!r}") from None


def _platform(args) -> Platform:
    if getattr(args, "config", None):
        return load_platform(args.config)
    if getattr(args, "preset", None):
        return load_preset(args.preset)
    raise UsageError("choose a platform with --preset NAME or --config PATH")


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _table(args, columns, rows, **meta) -> None:
    rows = list(rows)
    _emit(args, format_json(columns, rows, **meta) if args.format == "json" else format_csv(columns, rows))


def cmd_presets(args) -> int:
    entries = []
    for name in list_presets():
        p = load_preset(name)
        entries.append({"name": name, "description": p.description})
    if args.json or args.format == "json":
        _emit(args, json.dumps(entries, indent=2) + "\n")
    else:
        _emit(args, "".join(f"{e['name']}\t{e['description']}\n" for e in entries))
    return EXIT_OK


def cmd_validate(args) -> int:
    platform = _platform(args)
    rows = [(r.name, r.group.value, r.count, r.subtotal_watts) for r in instantiate(platform.inventory)]
    rows.append(("TOTAL", "", "", platform.power()))
    if args.export:
        Path(args.export).write_text(dumps(platform), encoding="utf-8")
    _table(args, ("component", "group", "count", "subtotal_w"), rows, platform=platform.name)
    return EXIT_OK


def cmd_power(args) -> int:
    platform = _platform(args)
    if args.groups:
        rows = [(g.value, s.watts, s.fraction if s.fraction is not None else "undefined")
                for g, s in breakdown_by_group(platform.inventory).items()]
        _table(args, ("group", "watts", "fraction"), rows, platform=platform.name)
    else:
        rows = [(r.name, r.group.value, r.count, r.subtotal_watts) for r in instantiate(platform.inventory)]
        _table(args, ("component", "group", "count", "subtotal_w"), rows, platform=platform.name,
               total_w=platform.power())
    return EXIT_OK


def cmd_time(args) -> int:
    platform = _platform(args)
    if platform.is_photonic:
        raise UsageError("photonic presets have no circuit timing; use `photonic ee`")
    if args.reset:
        platform = platform.with_reset(args.reset)
    beta = _beta(args.beta)
    if beta == BETA_MIN:
        raise UsageError("`time` needs a numeric --beta")
    timing = platform.timing
    terms = circuit_terms(timing, args.depth, beta) if beta is not None else circuit_terms(timing, args.depth)
    t_circuit = circuit_time(timing, args.depth, beta)
    rows = [(name, seconds) for name, seconds in terms.items()]
    rows += [("t_circuit", t_circuit), ("t_alg", algorithm_time(t_circuit, args.samples))]
    _table(args, ("term", "seconds"), rows, platform=platform.name, depth=args.depth, n_samples=args.samples)
    return EXIT_OK


def cmd_ee(args) -> int:
    cfg = ScenarioConfig(
        _platform(args),
        SweepAxis(args.axis),
        tuple(parse_range(args.range)),
        depth=args.depth,
        n_samples=args.samples,
        beta=_beta(args.beta),
        alpha_2q=args.alpha,
        d0=args.d0,
        gates_per_layer=args.gates_per_layer,
        reset=args.reset,
    )
    result = run_scenario(cfg)
    _emit(args, result.to_json() if args.format == "json" else result.to_csv())
    return EXIT_OVERFLOW if result.overflow else EXIT_OK


def _graph(args) -> topology.CouplingGraph:
    if args.edges:
        return topology.read_edge_list(args.edges)
    return topology.build_graph(args.family, n=args.n, rows=args.rows, cols=args.cols)


def cmd_metrics(args) -> int:
    g = _graph(args)
    m = topology.metrics(g)
    _table(args, ("family", "n", "n_edges", "d_avg", "diameter"),
           [(g.label, m.n_nodes, m.n_edges, m.avg_shortest_path, m.diameter)])
    return EXIT_OK


def cmd_route(args) -> int:
    g = _graph(args)
    d0s = [int(v) for v in parse_range(args.d0)]
    rows = topology.routing_sweep([g], d0s, parse_range(args.alpha), args.bound)
    _table(args, topology.ROUTING_COLUMNS, rows)
    return EXIT_OK


def cmd_zones_depth(args) -> int:
    depth = zone_limited_depth(args.d0, args.gates_per_layer, args.zones)
    bmin = beta_min(args.gates_per_layer, args.zones)
    _table(args, ("gates_per_layer", "zones", "d0", "depth", "beta_min"),
           [(args.gates_per_layer, args.zones, args.d0, depth, bmin)])
    return EXIT_OK


def cmd_zones_beta(args) -> int:
    zones = [int(z) for z in parse_range(args.zones)]
    rows = beta_envelope(parse_range(args.gates_per_layer_range), zones)
    _table(args, BETA_COLUMNS, rows)
    return EXIT_OK


def cmd_photonic_ee(args) -> int:
    chip = chip_by_name(args.chip)
    rows = []
    for nq in parse_range(args.nq):
        dev = PhotonicDevice(int(nq), chip, n_source=args.sources, r_source_hz=args.rate,
                             chip_length_cm=args.chip_length, elements_per_mzi=args.elements_per_mzi)
        rows.append(photonic_row(dev, args.samples))
    _table(args, PHOTONIC_COLUMNS, rows, chip=chip.name, n_samples=args.samples)
    return EXIT_OVERFLOW if any(math.isinf(r.t_sample_s) for r in rows) else EXIT_OK


def cmd_figure(args) -> int:
    out_dir = args.out or "figures"
    for path in reproduce_figure(args.figure, out_dir):
        print(path)
    return EXIT_OK


def _common(suppress: bool) -> argparse.ArgumentParser:
    # Shared flags; sub-parsers suppress defaults so values given before the command survive.
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--preset", "--platform", dest="preset", default=default, help="built-in preset name")
    p.add_argument("--config", default=default, help="platform JSON file")
    p.add_argument("--out", default=default, help="write output here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS if suppress else "csv")
    return p


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f.value for f in topology.GraphFamily if f is not topology.GraphFamily.CUSTOM],
                   default="linear")
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--edges", help="edge-list file ('n m' then 'u v' lines)")


def _route_args(p: argparse.ArgumentParser) -> None:
    _graph_args(p)
    p.add_argument("--d0", required=True, help="pre-routing depth or range")
    p.add_argument("--alpha", required=True, help="two-qubit layer ratio or list")
    p.add_argument("--bound", choices=("average", "diameter"), default="average")
    p.set_defaults(func=cmd_route)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qenergy", parents=[_common(False)],
                                     description="Energy-efficiency models of quantum computing platforms.")
    common = _common(True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presets", parents=[common], help="list built-in presets")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("validate", parents=[common], help="check a platform and print its inventory")
    p.add_argument("--export", help="write the platform as JSON")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("power", parents=[common], help="power per component or group")
    p.add_argument("--groups", action="store_true")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("time", parents=[common], help="circuit time and its terms")
    p.add_argument("--depth", type=float, required=True)
    p.add_argument("--samples", type=float, default=1)
    p.add_argument("--beta")
    p.add_argument("--reset", help="reset variant of a solid-state preset")
    p.set_defaults(func=cmd_time)

    p = sub.add_parser("ee", parents=[common], help="efficiency sweep along one axis")
    p.add_argument("--axis", choices=[a.value for a in SweepAxis], required=True)
    p.add_argument("--range", required=True, help="a:b, a:b:step or a,b,c")
    p.add_argument("--depth", type=int)
    p.add_argument("--samples", type=float, default=1)
    p.add_argument("--beta", help=f"transport ratio or {BETA_MIN!r}")
    p.add_argument("--alpha", type=float, help="two-qubit layer ratio; enables routing")
    p.add_argument("--d0", type=int, help="pre-routing depth")
    p.add_argument("--gates-per-layer", type=float, help="mean gates per layer; enables zone splitting")
    p.add_argument("--reset")
    p.set_defaults(func=cmd_ee)

    p = sub.add_parser("route", parents=[common], help="post-routing depth on a coupling graph")
    _route_args(p)

    p = sub.add_parser("topology", parents=[common], help="graph metrics and routing")
    tsub = p.add_subparsers(dest="topology_command", required=True)
    tp = tsub.add_parser("metrics", parents=[common])
    _graph_args(tp)
    tp.set_defaults(func=cmd_metrics)
    tp = tsub.add_parser("route", parents=[common])
    _route_args(tp)

    p = sub.add_parser("zones", parents=[common], help="gate-zone depth and transport bounds")
    zsub = p.add_subparsers(dest="zones_command", required=True)
    zp = zsub.add_parser("depth", parents=[common])
    zp.add_argument("--gates-per-layer", type=float, required=True)
    zp.add_argument("--zones", type=int, required=True)
    zp.add_argument("--d0", type=int, required=True)
    zp.set_defaults(func=cmd_zones_depth)
    zp = zsub.add_parser("beta", parents=[common])
    zp.add_argument("--gates-per-layer-range", required=True)
    zp.add_argument("--zones", required=True, help="zone count or list")
    zp.set_defaults(func=cmd_zones_beta)

    p = sub.add_parser("photonic", parents=[common], help="photonic sweeps")
    psub = p.add_subparsers(dest="photonic_command", required=True)
    pp = psub.add_parser("ee", parents=[common])
    pp.add_argument("--chip", default="glass", help="glass, eo-ln or eo-bto")
    pp.add_argument("--nq", required=True, help="qubit count or range")
    pp.add_argument("--samples", type=float, default=1)
    pp.add_argument("--sources", type=int, default=1)
    pp.add_argument("--rate", type=float, default=1e9, help="source rate in Hz")
    pp.add_argument("--chip-length", type=float, help="cm; adds propagation loss")
    pp.add_argument("--elements-per-mzi", type=int, default=2)
    pp.set_defaults(func=cmd_photonic_ee)

    p = sub.add_parser("figure", parents=[common], help="write the data series of a figure")
    p.add_argument("figure", choices=[*FIGURES, "all"])
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QEnergyError, ValueError) as exc:
        print(f"qenergy: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
