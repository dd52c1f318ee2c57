"""Platform presets: an inventory plus the timing and connectivity it runs with.

Built-in presets live as JSON files in ``qenergy/data``. Setting
``QJ_PRESET_DIR`` to a directory adds presets found there, taking priority
over the packaged ones of the same name.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from . import topology
from .efficiency import EfficiencyResult
from .exceptions import ConfigError
from .inventory import PlatformInventory, total_power
from .photonics import PhotonicDevice, photonic_inventory, sample_time
from .timing import SolidStateTiming, Timing, algorithm_time, circuit_time, timing_from_dict

PRESET_ENV = "QJ_PRESET_DIR"


@dataclass(frozen=True)
class RoutingSpec:
    """Coupling graph a solid-state preset uses for routing overhead."""

    family: topology.GraphFamily
    n: int | None = None
    rows: int | None = None
    cols: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", topology.GraphFamily(self.family))

    def graph(self) -> topology.CouplingGraph:
        return topology.build_graph(self.family, n=self.n, rows=self.rows, cols=self.cols)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"family": self.family.value}
        for key in ("n", "rows", "cols"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        return d

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "RoutingSpec":
        unknown = set(d) - {"family", "n", "rows", "cols"}
        if unknown:
            raise ConfigError(f"unknown keys {sorted(unknown)}", "routing")
        try:
            return cls(d["family"], d.get("n"), d.get("rows"), d.get("cols"))
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"invalid routing block: {exc}", "routing") from None


@dataclass(frozen=True)
class Platform:
    name: str
    inventory: PlatformInventory
    timing: Timing | None = None
    routing: RoutingSpec | None = None
    photonic: PhotonicDevice | None = None
    description: str = ""
    extras: tuple[str, ...] = field(default=())  # component names that are optional add-ons

    def __post_init__(self):
        if self.timing is None and self.photonic is None:
            raise ConfigError("a platform needs either a 'timing' or a 'photonic' block", "timing")

    @property
    def is_photonic(self) -> bool:
        return self.photonic is not None

    @property
    def params(self) -> Mapping[str, float]:
        return self.inventory.params

    def power(self) -> float:
        return total_power(self.inventory)

    def with_params(self, **updates: float) -> "Platform":
        inv = self.inventory.with_params(**updates)
        if self.photonic is not None and "N_q" in updates:
            dev = replace(self.photonic, n_qubits=int(updates["N_q"]))
            return replace(self, inventory=_photonic_inventory(self.name, dev), photonic=dev)
        return replace(self, inventory=inv)

    def with_reset(self, variant: str) -> "Platform":
        if not isinstance(self.timing, SolidStateTiming):
            raise ConfigError(f"preset {self.name!r} has no reset variants", "reset")
        return replace(self, timing=self.timing.with_reset(variant))

    def routing_graph(self) -> topology.CouplingGraph:
        if self.routing is None:
            raise ConfigError(f"preset {self.name!r} has no routing graph", "routing")
        return self.routing.graph()

    def evaluate(self, depth: float, n_samples: float = 1, beta: float | None = None) -> EfficiencyResult:
        """Time and power for ``n_samples`` runs of a depth-``depth`` circuit."""
        if self.is_photonic:
            t_circuit = sample_time(self.photonic)
        else:
            t_circuit = circuit_time(self.timing, depth, beta)
        return EfficiencyResult(self.name, depth, n_samples, t_circuit, algorithm_time(t_circuit, n_samples), self.power())

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"platform_name": self.name, "description": self.description}
        inv = self.inventory.to_dict()
        d["params"] = inv["params"]
        if self.photonic is not None:
            d["photonic"] = self.photonic.to_dict()
        else:
            d["components"] = inv["components"]
        if self.extras:
            d["extras"] = list(self.extras)
        if self.timing is not None:
            d["timing"] = self.timing.to_dict()
        if self.routing is not None:
            d["routing"] = self.routing.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "Platform":
        if not isinstance(d, Mapping):
            raise ConfigError("platform document must be a JSON object")
        known = {"platform_name", "description", "params", "components", "extras", "timing", "routing", "photonic"}
        unknown = set(d) - known
        if unknown:
            raise ConfigError(f"unknown keys {sorted(unknown)}")
        if "platform_name" not in d:
            raise ConfigError("missing key 'platform_name'")
        name = d["platform_name"]
        photonic = None
        if "photonic" in d:
            if "components" in d:
                raise ConfigError("photonic presets generate their components", "components")
            params = d.get("params", {})
            if "N_q" not in params:
                raise ConfigError("photonic presets need N_q", "params.N_q")
            photonic = PhotonicDevice.from_dict(d["photonic"], params["N_q"])
            inventory = _photonic_inventory(name, photonic)
        else:
            inventory = PlatformInventory.from_dict(d)
        extras = tuple(d.get("extras", ()))
        missing = set(extras) - {c.name for c in inventory.components}
        if missing:
            raise ConfigError(f"extras not in components: {sorted(missing)}", "extras")
        timing = timing_from_dict(d["timing"]) if "timing" in d else None
        routing = RoutingSpec.from_dict(d["routing"]) if "routing" in d else None
        return cls(name, inventory, timing, routing, photonic, d.get("description", ""), extras)


def _photonic_inventory(name: str, dev: PhotonicDevice) -> PlatformInventory:
    return replace(photonic_inventory(dev), platform_name=name)


def loads(text: str) -> Platform:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}") from None
    return Platform.from_dict(data)


def dumps(platform: Platform) -> str:
    return json.dumps(platform.to_dict(), indent=2) + "\n"


def load_platform(path: str | os.PathLike) -> Platform:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}", "config") from None
    return loads(text)


def _preset_sources() -> dict[str, str]:
    """Preset name -> JSON text, user directory entries overriding packaged ones."""
    found: dict[str, str] = {}
    data = resources.files("qenergy") / "data"
    for entry in sorted(data.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            found[entry.name[:-5]] = entry.read_text(encoding="utf-8")
    user_dir = os.environ.get(PRESET_ENV)
    if user_dir:
        for path in sorted(Path(user_dir).glob("*.json")):
            found[path.stem] = path.read_text(encoding="utf-8")
    return found


def list_presets() -> list[str]:
    return sorted(_preset_sources())


def load_preset(name: str) -> Platform:
    sources = _preset_sources()
    if name not in sources:
        raise ConfigError(f"unknown preset {name!r}; see `qenergy presets`", "preset")
    return loads(sources[name])


def without_extras(platform: Platform) -> Platform:
    """The platform with its optional add-on components removed."""
    keep = tuple(c for c in platform.inventory.components if c.name not in platform.extras)
    return replace(platform, inventory=replace(platform.inventory, components=keep), extras=())
