"""Data series behind each figure id, written as CSV tables."""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Callable, NamedTuple, Sequence

from . import topology
from .exceptions import ConfigError
from .inventory import breakdown_by_group, instantiate
from .photonics import PHOTONIC_COLUMNS, photonic_row
from .presets import Platform, load_preset
from .scenario import BETA_MIN, ScenarioConfig, SweepAxis, format_csv, run_scenario
from .zonecomp import BETA_COLUMNS, beta_envelope


class Table(NamedTuple):
    columns: tuple[str, ...]
    rows: list[tuple]

    def to_csv(self) -> str:
        return format_csv(self.columns, self.rows)


def log_grid(lo_exp: int, hi_exp: int, per_decade: int = 4) -> tuple[int, ...]:
    """Integers spread evenly on a log axis from ``10**lo_exp`` to ``10**hi_exp``."""
    n = (hi_exp - lo_exp) * per_decade
    return tuple(sorted({round(10 ** (lo_exp + k / per_decade)) for k in range(n + 1)}))


DEPTHS = log_grid(0, 5)
D0S = log_grid(0, 4)
SAMPLES = log_grid(0, 6)
SAMPLE_SERIES = (1, 10, 100, 1000, 10000)
DEPTH_SERIES = (10, 100, 1000, 10000)


def _sweep(platform: Platform, axis: SweepAxis, values, **kw) -> Table:
    result = run_scenario(ScenarioConfig(platform, axis, tuple(values), **kw))
    return Table(result.columns, [tuple(r) for r in result.rows])


def _breakdown(name: str, platform: Platform) -> dict[str, Table]:
    inv = platform.inventory
    comps = [(r.name, r.group.value, r.count, r.subtotal_watts) for r in instantiate(inv)]
    groups = [(g.value, s.watts, s.fraction) for g, s in breakdown_by_group(inv).items()]
    return {
        f"{name}_components": Table(("component", "group", "count", "subtotal_w"), comps),
        f"{name}_groups": Table(("group", "watts", "fraction"), groups),
    }


def _ee_panels(name: str, platform: Platform, beta: float | None = None) -> dict[str, Table]:
    out = {}
    for n in SAMPLE_SERIES:
        out[f"{name}_a_samples{n}"] = _sweep(platform, SweepAxis.DEPTH, DEPTHS, n_samples=n, beta=beta)
    for d in DEPTH_SERIES:
        out[f"{name}_b_depth{d}"] = _sweep(platform, SweepAxis.SAMPLES, SAMPLES, depth=d, beta=beta)
    return out


def fig3() -> dict[str, Table]:
    graphs = [
        topology.linear_graph(49),
        topology.circular_graph(49),
        topology.square_lattice(7, 7),
        topology.heavy_hex(2, 3),
        topology.fully_connected(49),
    ]
    out = {}
    for alpha in (0.1, 0.5, 1.0):
        rows = topology.routing_sweep(graphs, D0S, (alpha,))
        out[f"fig3_alpha{alpha}"] = Table(topology.ROUTING_COLUMNS, [tuple(r) for r in rows])
    return out


def fig6() -> dict[str, Table]:
    base = load_preset("superconducting-baseline")
    return {
        f"fig6_{variant}": _sweep(base, SweepAxis.DEPTH, DEPTHS, n_samples=100, reset=variant)
        for variant in ("active", "passive", "instantaneous")
    }


def fig9() -> dict[str, Table]:
    return {
        f"fig9_{name.removeprefix('spin-')}": _sweep(load_preset(name), SweepAxis.D0, D0S, alpha_2q=0.5)
        for name in ("spin-linear", "spin-2d", "spin-crossbar-paper-times", "spin-crossbar-2d-times")
    }


def fig12() -> dict[str, Table]:
    gates = tuple(range(1, 41))
    out = {"fig12_beta": Table(BETA_COLUMNS, [tuple(r) for r in beta_envelope(gates, (1, 5, 10))])}
    for zones in (1, 5, 10):
        platform = load_preset(f"trapped-ion-{zones}zone")
        variants = [("", platform)]
        if zones > 1:
            # multi-zone device run at the single-zone clock
            fast = replace(platform, timing=replace(platform.timing, t_clock=170e-6))
            variants.append(("_clock170us", fast))
        for suffix, p in variants:
            for label, beta in (("beta_min", BETA_MIN), ("beta_max", 1.0)):
                out[f"fig12_{zones}zone{suffix}_{label}"] = _sweep(p, SweepAxis.GATES_PER_LAYER, gates, d0=500, beta=beta)
    return out


def fig14() -> dict[str, Table]:
    glass = load_preset("photonic-glass")
    out = {
        f"fig14_nq{n}": _sweep(glass.with_params(N_q=n), SweepAxis.SAMPLES, SAMPLES)
        for n in (1, 2, 4, 8, 12, 16, 20)
    }
    out.update(_breakdown("fig14_breakdown", glass))
    return out


def fig15() -> dict[str, Table]:
    chips = ("glass", "eo-bto", "eo-ln")
    out = {f"fig15_{c}": _sweep(load_preset(f"photonic-{c}"), SweepAxis.SAMPLES, SAMPLES) for c in chips}
    summary = [(c, *photonic_row(load_preset(f"photonic-{c}").photonic)) for c in chips]
    out["fig15_chips"] = Table(("chip", *PHOTONIC_COLUMNS), summary)
    return out


def fig17() -> dict[str, Table]:
    depths = log_grid(0, 6)
    return {
        f"fig17_{mode}": _sweep(load_preset(f"neutral-{mode}"), SweepAxis.DEPTH, depths, beta=0.25)
        for mode in ("periodic", "continuous")
    }


FIGURES: dict[str, Callable[[], dict[str, Table]]] = {
    "fig3": fig3,
    "fig4": lambda: _breakdown("fig4", load_preset("superconducting-baseline")),
    "fig5": lambda: _ee_panels("fig5", load_preset("superconducting-baseline")),
    "fig6": fig6,
    "fig7": lambda: _breakdown("fig7", load_preset("spin-2d")),
    "fig8": lambda: _ee_panels("fig8", load_preset("spin-2d")),
    "fig9": fig9,
    "fig10": lambda: _breakdown("fig10", load_preset("trapped-ion-1zone")),
    "fig11": lambda: _ee_panels("fig11", load_preset("trapped-ion-1zone"), beta=1.0),
    "fig12": fig12,
    "fig13": lambda: _breakdown("fig13", load_preset("neutral-periodic")),
    "fig14": fig14,
    "fig15": fig15,
    "fig16": lambda: _ee_panels("fig16", load_preset("neutral-periodic"), beta=0.25),
    "fig17": fig17,
}


def figure_tables(fig_id: str) -> dict[str, Table]:
    if fig_id not in FIGURES:
        raise ConfigError(f"unknown figure {fig_id!r} (choose from {', '.join(FIGURES)} or 'all')", "figure")
    return FIGURES[fig_id]()


def reproduce_figure(fig_id: str, out_dir: str | Path) -> list[Path]:
    """Write every table of ``fig_id`` (or of all figures for ``"all"``) as CSV."""
    ids: Sequence[str] = list(FIGURES) if fig_id == "all" else [fig_id]
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for fid in ids:
        for name, table in figure_tables(fid).items():
            path = out_dir / f"{name}.csv"
            path.write_text(table.to_csv(), encoding="utf-8")
            written.append(path)
    return written
