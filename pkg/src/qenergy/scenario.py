"""Parameter sweeps over a platform preset.

A scenario fixes a platform and every model input except one, the sweep
axis, and evaluates time, power and efficiency at each axis value.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

from .efficiency import SECONDS_PER_DAY, energy_efficiency, n_algorithms
from .exceptions import ConfigError
from .photonics import sample_time
from .presets import Platform
from .timing import SolidStateTiming, algorithm_time, circuit_time
from .topology import RoutingInput, post_routing_depth
from .zonecomp import beta_min, clamp_beta, zone_limited_depth


class SweepAxis(str, Enum):
    DEPTH = "depth"
    SAMPLES = "samples"
    D0 = "d0"
    GATES_PER_LAYER = "gates_per_layer"
    QUBITS = "qubits"


BETA_MIN = "min"


@dataclass(frozen=True)
class ScenarioConfig:
    """One sweep. ``beta`` may be a number or ``"min"`` for the zone floor."""

    platform: Platform
    axis: SweepAxis
    values: tuple[float, ...]
    depth: int | None = None
    n_samples: float = 1
    beta: float | str | None = None
    alpha_2q: float | None = None
    d0: int | None = None
    gates_per_layer: float | None = None
    reset: str | None = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "axis", SweepAxis(self.axis))
        except ValueError:
            raise ConfigError(f"unknown sweep axis {self.axis!r}", "axis") from None
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ConfigError("sweep range is empty", "range")
        if isinstance(self.beta, str) and self.beta != BETA_MIN:
            raise ConfigError(f"beta must be a number or {BETA_MIN!r}", "beta")
        if self.alpha_2q is not None and not 0.0 <= self.alpha_2q <= 1.0:
            raise ConfigError(f"alpha_2q must lie in [0, 1], got {self.alpha_2q}", "alpha")
        if self.platform.is_photonic and self.axis not in (SweepAxis.SAMPLES, SweepAxis.QUBITS):
            raise ConfigError("photonic platforms sweep over samples or qubits only", "axis")
        if self.reset is not None and not isinstance(self.platform.timing, SolidStateTiming):
            raise ConfigError(f"preset {self.platform.name!r} has no reset variants", "reset")


class SweepRow(NamedTuple):
    axis_value: float
    depth: float
    n_samples: float
    t_circuit_s: float
    t_alg_s: float
    power_w: float
    ee_per_j: float
    n_in_24h: float


ROW_FIELDS = SweepRow._fields[1:]


@dataclass(frozen=True)
class SweepResult:
    platform_name: str
    axis: SweepAxis
    rows: tuple[SweepRow, ...]

    @property
    def columns(self) -> tuple[str, ...]:
        return (f"axis_{self.axis.value}", *ROW_FIELDS)

    def check(self) -> None:
        """Assert the efficiency identities every emitted row must satisfy."""
        for row in self.rows:
            if row.ee_per_j != (0.0 if math.isinf(row.t_alg_s) else 1.0 / (row.t_alg_s * row.power_w)):
                raise AssertionError(f"EE identity broken in row {row}")
            if row.n_in_24h != SECONDS_PER_DAY / row.t_alg_s:
                raise AssertionError(f"window-count identity broken in row {row}")

    @property
    def overflow(self) -> bool:
        return any(math.isinf(row.t_alg_s) for row in self.rows)

    def to_csv(self) -> str:
        self.check()
        return format_csv(self.columns, self.rows)

    def to_json(self) -> str:
        self.check()
        return format_json(self.columns, self.rows, platform=self.platform_name, axis=self.axis.value)


def format_value(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _json_safe(value):
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def format_json(columns: Sequence[str], rows: Iterable[Sequence], **meta) -> str:
    records = [{c: _json_safe(v) for c, v in zip(columns, row)} for row in rows]
    return json.dumps({**meta, "columns": list(columns), "rows": records}, indent=2) + "\n"


def _platform_for(cfg: ScenarioConfig, x: float) -> Platform:
    platform = cfg.platform
    if cfg.reset is not None:
        platform = platform.with_reset(cfg.reset)
    if cfg.axis is SweepAxis.QUBITS:
        if "N_q" not in platform.params:
            raise ConfigError(f"preset {platform.name!r} has no N_q parameter to sweep", "axis")
        platform = platform.with_params(N_q=int(x))
    return platform


def _zones(platform: Platform) -> int:
    if "N_zones" not in platform.params:
        raise ConfigError(f"preset {platform.name!r} has no gate zones", "gates_per_layer")
    return int(platform.params["N_zones"])


def _evaluate(cfg: ScenarioConfig, x: float) -> SweepRow:
    platform = _platform_for(cfg, x)
    n_samples = x if cfg.axis is SweepAxis.SAMPLES else cfg.n_samples
    d0 = x if cfg.axis is SweepAxis.D0 else cfg.d0
    gates = x if cfg.axis is SweepAxis.GATES_PER_LAYER else cfg.gates_per_layer

    if platform.is_photonic:
        depth = platform.photonic.modes
        t_circuit = sample_time(platform.photonic)
    else:
        if cfg.axis is SweepAxis.DEPTH:
            depth = x
        elif cfg.depth is not None and cfg.axis not in (SweepAxis.D0, SweepAxis.GATES_PER_LAYER):
            depth = cfg.depth
        elif d0 is not None:
            depth = int(d0)
            if cfg.alpha_2q is not None:
                depth = post_routing_depth(RoutingInput(depth, cfg.alpha_2q), platform.routing_graph())
            if gates is not None:
                depth = zone_limited_depth(depth, gates, _zones(platform))
        else:
            raise ConfigError("a fixed depth or a pre-routing depth d0 is required", "depth")

        beta = cfg.beta
        if beta == BETA_MIN:
            if gates is None:
                raise ConfigError("beta 'min' needs gates per layer", "beta")
            beta = beta_min(gates, _zones(platform))
        elif beta is not None and gates is not None:
            beta = clamp_beta(beta, gates, _zones(platform))
        t_circuit = circuit_time(platform.timing, depth, beta)

    t_alg = algorithm_time(t_circuit, n_samples)
    power = platform.power()
    if math.isinf(t_alg):
        ee = 0.0
    else:
        ee = energy_efficiency(t_alg, power)
    return SweepRow(x, depth, n_samples, t_circuit, t_alg, power, ee, n_algorithms(SECONDS_PER_DAY, t_alg))


def run_scenario(cfg: ScenarioConfig) -> SweepResult:
    rows = sorted((_evaluate(cfg, x) for x in cfg.values), key=lambda r: r.axis_value)
    result = SweepResult(cfg.platform.name, cfg.axis, tuple(rows))
    result.check()
    return result
