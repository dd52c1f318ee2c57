"""Gate-zone compilation constraints for atom-based devices.

A device with ``N_zones`` gate zones executes at most one gate per zone per
layer. Layers holding more gates are split, and because the gates of one
original layer act on disjoint qubits, each split forces a transport between
storage and gate zones.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .exceptions import DomainError


def _check(gates_per_layer: float, n_zones: int) -> None:
    if n_zones < 1 or int(n_zones) != n_zones:
        raise DomainError(f"number of gate zones must be a positive integer, got {n_zones}")
    if not (gates_per_layer > 0 and math.isfinite(gates_per_layer)):
        raise DomainError(f"average gates per layer must be positive, got {gates_per_layer}")


def split_factor(gates_per_layer: float, n_zones: int) -> int:
    """Number of device layers each original layer is split into."""
    _check(gates_per_layer, n_zones)
    q = gates_per_layer / n_zones
    r = round(q)
    if math.isclose(q, r, rel_tol=0.0, abs_tol=1e-12):
        return max(1, int(r))
    return max(1, math.ceil(q))


def gates_per_layer(n_gates: int, d0: int) -> float:
    if d0 < 1:
        raise DomainError(f"pre-routing depth must be >= 1, got {d0}")
    if n_gates < 0:
        raise DomainError(f"gate count must be >= 0, got {n_gates}")
    return n_gates / d0


def zone_limited_depth(d0: int, gates_per_layer: float, n_zones: int) -> int:
    """``ceil(gates_per_layer / n_zones) * d0``; unchanged when the zones suffice."""
    if d0 < 1 or int(d0) != d0:
        raise DomainError(f"pre-routing depth must be a positive integer, got {d0}")
    return split_factor(gates_per_layer, n_zones) * int(d0)


def beta_min(gates_per_layer: float, n_zones: int) -> float:
    """Smallest fraction of layers that must transport atoms, ``1 - 1/ceil(g/N_zones)``."""
    return 1.0 - 1.0 / split_factor(gates_per_layer, n_zones)


def clamp_beta(beta: float, gates_per_layer: float, n_zones: int) -> float:
    """Clamp a user-supplied transport ratio into ``[beta_min, 1]``, warning on changes."""
    lo = beta_min(gates_per_layer, n_zones)
    if beta < lo:
        warnings.warn(f"beta_trans={beta} is below the floor {lo} for {gates_per_layer} gates/layer "
                      f"on {n_zones} zones; clamped", stacklevel=2)
        return lo
    if beta > 1.0:
        warnings.warn(f"beta_trans={beta} exceeds 1; clamped", stacklevel=2)
        return 1.0
    return beta


class BetaEnvelopeRow(NamedTuple):
    gates_per_layer: float
    zones: int
    beta_min: float
    beta_max: float


BETA_COLUMNS = BetaEnvelopeRow._fields


def beta_envelope(gate_values: Iterable[float], zone_values: Iterable[int]) -> list[BetaEnvelopeRow]:
    """Rows ordered by zone count, then gates per layer, in the order given."""
    gate_values = list(gate_values)
    zone_values = list(zone_values)
    return [BetaEnvelopeRow(g, z, beta_min(g, z), 1.0) for z in zone_values for g in gate_values]


@dataclass(frozen=True)
class ZoneDevice:
    n_zones: int

    def __post_init__(self):
        if self.n_zones < 1 or int(self.n_zones) != self.n_zones:
            raise DomainError(f"number of gate zones must be a positive integer, got {self.n_zones}")


@dataclass(frozen=True)
class ZoneCircuit:
    """A circuit summarised by its pre-routing depth and mean gates per layer."""

    d0: int
    gates_per_layer: float
    beta_trans: float | None = None

    def __post_init__(self):
        if self.d0 < 1 or int(self.d0) != self.d0:
            raise DomainError(f"pre-routing depth must be a positive integer, got {self.d0}")
        if self.gates_per_layer < 0:
            raise DomainError(f"average gates per layer must be >= 0, got {self.gates_per_layer}")
        if self.beta_trans is not None and not 0.0 <= self.beta_trans <= 1.0:
            raise DomainError(f"beta_trans must lie in [0, 1], got {self.beta_trans}")

    @classmethod
    def from_gate_count(cls, d0: int, n_gates: int, beta_trans: float | None = None) -> "ZoneCircuit":
        return cls(d0, gates_per_layer(n_gates, d0), beta_trans)

    def depth_on(self, device: ZoneDevice) -> int:
        return zone_limited_depth(self.d0, self.gates_per_layer, device.n_zones)

    def beta_on(self, device: ZoneDevice) -> float:
        """The supplied transport ratio clamped to the device floor, or the floor itself."""
        if self.beta_trans is None:
            return beta_min(self.gates_per_layer, device.n_zones)
        return clamp_beta(self.beta_trans, self.gates_per_layer, device.n_zones)
