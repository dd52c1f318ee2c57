"""Circuit and algorithm execution times.

Every family shares the same skeleton: reset the register, run ``D`` layers
of ``t_clock`` each, then measure. Atom platforms add transport for a
fraction ``beta_trans`` of the layers, and neutral-atom arrays additionally
pay an amortised reload every ``reload_period_layers`` layers unless atoms are
replenished continuously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Mapping

from .exceptions import ConfigError, DomainError


class TimingFamily(str, Enum):
    SOLID_STATE = "solid-state"
    ATOM = "atom"
    NEUTRAL = "neutral"


class ReloadMode(str, Enum):
    PERIODIC = "periodic"
    CONTINUOUS = "continuous"


def _nonneg(name: str, value: float) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError("must be a number", f"timing.{name}")
    if not (value >= 0 and math.isfinite(value)):
        raise ConfigError(f"must be finite and >= 0, got {value}", f"timing.{name}")


def _check_beta(beta: float) -> None:
    if not 0.0 <= beta <= 1.0:
        raise DomainError(f"beta_trans must lie in [0, 1], got {beta}")


def _check_depth(depth: float) -> None:
    if not depth >= 0:
        raise DomainError(f"depth must be >= 0, got {depth}")


@dataclass(frozen=True)
class SolidStateTiming:
    """Superconducting and spin devices.

    ``reset_variants`` maps alternative reset schemes (e.g. active or passive)
    to their reset time so a preset can carry all of them.
    """

    t_reset: float
    t_clock: float
    t_meas: float
    reset_variants: Mapping[str, float] = field(default_factory=dict)

    family = TimingFamily.SOLID_STATE

    def __post_init__(self):
        for name in ("t_reset", "t_clock", "t_meas"):
            _nonneg(name + "_s", getattr(self, name))
        for name, value in self.reset_variants.items():
            _nonneg(f"reset_variants.{name}", value)

    def with_reset(self, variant: str) -> "SolidStateTiming":
        try:
            return replace(self, t_reset=self.reset_variants[variant])
        except KeyError:
            known = ", ".join(sorted(self.reset_variants)) or "none"
            raise ConfigError(f"unknown reset variant {variant!r} (known: {known})", "reset") from None

    def terms(self, depth: float) -> dict[str, float]:
        _check_depth(depth)
        return {"reset": self.t_reset, "gates": depth * self.t_clock, "measurement": self.t_meas}

    def to_dict(self) -> dict[str, Any]:
        d = {"family": self.family.value, "t_reset_s": self.t_reset, "t_clock_s": self.t_clock, "t_meas_s": self.t_meas}
        if self.reset_variants:
            d["reset_variants"] = dict(self.reset_variants)
        return d


@dataclass(frozen=True)
class AtomTiming:
    """Trapped-ion style devices where a fraction of layers moves atoms."""

    t_reset: float
    t_clock: float
    t_meas: float
    t_trans: float
    beta_trans: float = 1.0

    family = TimingFamily.ATOM

    def __post_init__(self):
        for name in ("t_reset", "t_clock", "t_meas", "t_trans"):
            _nonneg(name + "_s", getattr(self, name))
        _check_beta(self.beta_trans)

    def terms(self, depth: float, beta: float | None = None) -> dict[str, float]:
        _check_depth(depth)
        beta = self.beta_trans if beta is None else beta
        _check_beta(beta)
        return {
            "reset": self.t_reset,
            "gates": depth * self.t_clock,
            "measurement": self.t_meas,
            "transport": beta * depth * self.t_trans,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.value,
            "t_reset_s": self.t_reset,
            "t_clock_s": self.t_clock,
            "t_meas_s": self.t_meas,
            "t_trans_s": self.t_trans,
            "beta_trans": self.beta_trans,
        }


@dataclass(frozen=True)
class NeutralAtomTiming(AtomTiming):
    t_reload: float = 0.0
    reload_period_layers: int = 2400
    mode: ReloadMode = ReloadMode.PERIODIC

    family = TimingFamily.NEUTRAL

    def __post_init__(self):
        super().__post_init__()
        _nonneg("t_reload_s", self.t_reload)
        if self.reload_period_layers < 1 or int(self.reload_period_layers) != self.reload_period_layers:
            raise ConfigError("must be a positive integer", "timing.reload_period_layers")
        object.__setattr__(self, "mode", ReloadMode(self.mode))

    def terms(self, depth: float, beta: float | None = None) -> dict[str, float]:
        out = super().terms(depth, beta)
        if self.mode is ReloadMode.CONTINUOUS:
            out["reset"] = 0.0
            out["reload"] = 0.0
        else:
            out["reload"] = self.t_reload * depth / self.reload_period_layers
        return out

    def to_dict(self) -> dict[str, Any]:
        d = super().to_dict()
        d.update(t_reload_s=self.t_reload, reload_period_layers=self.reload_period_layers, mode=self.mode.value)
        return d


Timing = SolidStateTiming | AtomTiming | NeutralAtomTiming


def _sum_terms(terms: Mapping[str, float]) -> float:
    return math.fsum(terms.values())


def solid_state_circuit_time(t: SolidStateTiming, depth: float) -> float:
    return _sum_terms(t.terms(depth))


def atom_circuit_time(t: AtomTiming, depth: float, beta: float | None = None) -> float:
    return _sum_terms(t.terms(depth, beta))


def neutral_circuit_time(t: NeutralAtomTiming, depth: float, beta: float | None = None) -> float:
    return _sum_terms(t.terms(depth, beta))


def circuit_time(t: Timing, depth: float, beta: float | None = None) -> float:
    """Dispatch on the timing family."""
    if isinstance(t, SolidStateTiming):
        if beta is not None:
            raise ConfigError("solid-state platforms have no transport ratio", "beta_trans")
        return solid_state_circuit_time(t, depth)
    if isinstance(t, NeutralAtomTiming):
        return neutral_circuit_time(t, depth, beta)
    return atom_circuit_time(t, depth, beta)


def circuit_terms(t: Timing, depth: float, beta: float | None = None) -> dict[str, float]:
    if isinstance(t, SolidStateTiming):
        return t.terms(depth)
    return t.terms(depth, beta)


def multizone_clock(n_zones: int, base_gate_time: float = 170e-6, hop_time: float = 250e-6) -> float:
    """Clock time of a linear chain of gate zones.

    A single zone runs at the bare gate time. With more zones the clock is set
    by shuttling ions across the chain, ``hop_time * (n_zones - 1)``.
    """
    if n_zones < 1 or int(n_zones) != n_zones:
        raise DomainError(f"number of gate zones must be a positive integer, got {n_zones}")
    if n_zones == 1:
        return base_gate_time
    return hop_time * (n_zones - 1)


def algorithm_time(t_circuit: float, n_samples: float) -> float:
    if not n_samples >= 1:
        raise DomainError(f"N_samples must be >= 1, got {n_samples}")
    if not t_circuit >= 0:
        raise DomainError(f"circuit time must be >= 0, got {t_circuit}")
    return t_circuit * n_samples


_KEYS = {
    TimingFamily.SOLID_STATE: {"family", "t_reset_s", "t_clock_s", "t_meas_s", "reset_variants"},
    TimingFamily.ATOM: {"family", "t_reset_s", "t_clock_s", "t_meas_s", "t_trans_s", "beta_trans"},
    TimingFamily.NEUTRAL: {
        "family", "t_reset_s", "t_clock_s", "t_meas_s", "t_trans_s", "beta_trans",
        "t_reload_s", "reload_period_layers", "mode",
    },
}


def timing_from_dict(d: Mapping[str, Any]) -> Timing:
    try:
        family = TimingFamily(d.get("family"))
    except ValueError:
        raise ConfigError(f"unknown timing family {d.get('family')!r}", "timing.family") from None
    unknown = set(d) - _KEYS[family]
    if unknown:
        raise ConfigError(f"unknown keys {sorted(unknown)}", "timing")
    for key in ("t_reset_s", "t_clock_s", "t_meas_s") + (("t_trans_s",) if family is not TimingFamily.SOLID_STATE else ()):
        if key not in d:
            raise ConfigError(f"missing key {key!r}", "timing")
    if family is TimingFamily.SOLID_STATE:
        return SolidStateTiming(d["t_reset_s"], d["t_clock_s"], d["t_meas_s"], dict(d.get("reset_variants", {})))
    beta = d.get("beta_trans", 1.0)
    if not isinstance(beta, (int, float)) or not 0 <= beta <= 1:
        raise ConfigError("must lie in [0, 1]", "timing.beta_trans")
    if family is TimingFamily.ATOM:
        return AtomTiming(d["t_reset_s"], d["t_clock_s"], d["t_meas_s"], d["t_trans_s"], beta)
    try:
        mode = ReloadMode(d.get("mode", "periodic"))
    except ValueError:
        raise ConfigError(f"unknown reload mode {d.get('mode')!r}", "timing.mode") from None
    return NeutralAtomTiming(
        d["t_reset_s"], d["t_clock_s"], d["t_meas_s"], d["t_trans_s"], beta,
        d.get("t_reload_s", 0.0), d.get("reload_period_layers", 2400), mode,
    )
