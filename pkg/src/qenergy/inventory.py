"""Hardware component inventories and their aggregate power draw.

An inventory is an ordered list of components, each with a unit power and a
count rule evaluated against a set of named platform parameters (qubit
count, readout lines, gate zones, ...). Power is assumed constant whether the
device is computing or idle, so the energy spent over a window is simply
``t * total_power``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Iterable, Mapping, NamedTuple

from .exceptions import ConfigError, DomainError, MissingParameterError

# Parameters that only make sense as whole numbers.
INTEGER_PARAMS = frozenset({"N_q", "N_R", "N_zones", "N_control"})


class ComponentGroup(str, Enum):
    COOLING = "Cooling"
    ENVIRONMENTAL = "EnvironmentalConditions"
    QUBIT_CONTROL = "QubitControl"
    CLASSICAL = "ClassicalProcessing"


def _ceil_div(num: float, den: float) -> int:
    q = num / den
    r = round(q)
    # Absorb float noise such as 576/16 -> 36.000000000000004.
    if math.isclose(q, r, rel_tol=0.0, abs_tol=1e-9):
        return int(r)
    return math.ceil(q)


@dataclass(frozen=True)
class CountRule:
    """How many units of a component a platform needs.

    Supported ``kind`` values and the coefficients they use, with ``p`` the
    value of parameter ``param``:

    ``constant``
        ``value``
    ``linear``
        ``a * p + b``
    ``ceil``
        ``ceil((a * p**power + b) / divisor)``
    ``sqrt``
        ``a * p + c * r + b`` where ``r = sqrt(scale * p)``, rounded up to an
        integer first when ``ceil_root`` is set
    ``poly``
        ``sum(coeffs[k] * p**k)``
    """

    kind: str
    param: str | None = None
    value: float = 0.0
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    divisor: float = 1.0
    power: float = 1.0
    scale: float = 1.0
    ceil_root: bool = False
    coeffs: tuple[float, ...] = ()

    KINDS = ("constant", "linear", "ceil", "sqrt", "poly")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ConfigError(f"unknown count kind {self.kind!r}", "count.kind")
        if self.kind != "constant" and not self.param:
            raise ConfigError(f"count kind {self.kind!r} needs a 'param'", "count.param")
        if self.kind == "ceil" and self.divisor <= 0:
            raise ConfigError("divisor must be positive", "count.divisor")

    @classmethod
    def constant(cls, value: float) -> "CountRule":
        return cls("constant", value=value)

    @classmethod
    def linear(cls, param: str, a: float = 1.0, b: float = 0.0) -> "CountRule":
        return cls("linear", param, a=a, b=b)

    @classmethod
    def ceil(cls, param: str, divisor: float, a: float = 1.0, b: float = 0.0, power: float = 1.0) -> "CountRule":
        return cls("ceil", param, a=a, b=b, divisor=divisor, power=power)

    @classmethod
    def sqrt(
        cls, param: str, c: float, a: float = 0.0, b: float = 0.0, scale: float = 1.0, ceil_root: bool = False
    ) -> "CountRule":
        return cls("sqrt", param, a=a, b=b, c=c, scale=scale, ceil_root=ceil_root)

    @classmethod
    def poly(cls, param: str, coeffs: Iterable[float]) -> "CountRule":
        return cls("poly", param, coeffs=tuple(coeffs))

    def evaluate(self, params: Mapping[str, float], component: str | None = None) -> float:
        if self.kind == "constant":
            return self.value
        if self.param not in params:
            raise MissingParameterError(self.param, component)
        p = params[self.param]
        if self.kind == "linear":
            return self.a * p + self.b
        if self.kind == "ceil":
            return _ceil_div(self.a * p**self.power + self.b, self.divisor)
        if self.kind == "sqrt":
            root = math.sqrt(self.scale * p)
            if self.ceil_root:
                root = _ceil_div(root, 1.0)
            return self.a * p + self.c * root + self.b
        return sum(ck * p**k for k, ck in enumerate(self.coeffs))

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"kind": self.kind}
        if self.kind == "constant":
            d["value"] = self.value
            return d
        d["param"] = self.param
        if self.kind == "linear":
            d.update(a=self.a, b=self.b)
        elif self.kind == "ceil":
            d.update(a=self.a, b=self.b, power=self.power, divisor=self.divisor)
        elif self.kind == "sqrt":
            d.update(a=self.a, b=self.b, c=self.c, scale=self.scale, ceil_root=self.ceil_root)
        else:
            d["coeffs"] = list(self.coeffs)
        return d

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "CountRule":
        if not isinstance(d, Mapping) or "kind" not in d:
            raise ConfigError("count must be an object with a 'kind'", "count")
        allowed = {"kind", "param", "value", "a", "b", "c", "divisor", "power", "scale", "ceil_root", "coeffs"}
        unknown = set(d) - allowed
        if unknown:
            raise ConfigError(f"unknown keys {sorted(unknown)}", "count")
        kw = dict(d)
        if "coeffs" in kw:
            kw["coeffs"] = tuple(float(x) for x in kw["coeffs"])
        for key in ("value", "a", "b", "c", "divisor", "power", "scale"):
            if key in kw:
                if isinstance(kw[key], bool) or not isinstance(kw[key], (int, float)):
                    raise ConfigError("must be a number", f"count.{key}")
                kw[key] = float(kw[key])
        return cls(**kw)


@dataclass(frozen=True)
class ComponentSpec:
    name: str
    group: ComponentGroup
    count: CountRule
    unit_power: float
    source_note: str = ""

    def __post_init__(self):
        if not self.name:
            raise ConfigError("component name must be non-empty", "components.name")
        if not (self.unit_power >= 0 and math.isfinite(self.unit_power)):
            raise ConfigError(f"unit power of {self.name!r} must be finite and >= 0", "components.unit_power_w")

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "group": self.group.value,
            "count": self.count.to_dict(),
            "unit_power_w": self.unit_power,
            "source_note": self.source_note,
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "ComponentSpec":
        for key in ("name", "group", "count", "unit_power_w"):
            if key not in d:
                raise ConfigError(f"missing key {key!r}", "components")
        try:
            group = ComponentGroup(d["group"])
        except ValueError:
            raise ConfigError(f"unknown group {d['group']!r}", "components.group") from None
        power = d["unit_power_w"]
        if isinstance(power, bool) or not isinstance(power, (int, float)):
            raise ConfigError("must be a number", "components.unit_power_w")
        return cls(d["name"], group, CountRule.from_dict(d["count"]), float(power), d.get("source_note", ""))


def validate_params(params: Mapping[str, float]) -> dict[str, float]:
    out = {}
    for name, value in params.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError("parameter must be numeric", f"params.{name}")
        if not (value >= 0 and math.isfinite(value)):
            raise ConfigError("parameter must be finite and >= 0", f"params.{name}")
        if name in INTEGER_PARAMS and value != int(value):
            raise ConfigError("parameter must be an integer", f"params.{name}")
        out[name] = int(value) if name in INTEGER_PARAMS else value
    return out


@dataclass(frozen=True)
class PlatformInventory:
    platform_name: str
    components: tuple[ComponentSpec, ...] = ()
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "params", validate_params(self.params))
        names = [c.name for c in self.components]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise ConfigError(f"duplicate component names {dupes}", "components")

    def with_params(self, **updates: float) -> "PlatformInventory":
        return replace(self, params={**self.params, **updates})

    def extended(self, components: Iterable[ComponentSpec], platform_name: str | None = None) -> "PlatformInventory":
        return replace(
            self,
            platform_name=platform_name or self.platform_name,
            components=self.components + tuple(components),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "platform_name": self.platform_name,
            "params": dict(self.params),
            "components": [c.to_dict() for c in self.components],
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "PlatformInventory":
        if "platform_name" not in d:
            raise ConfigError("missing key 'platform_name'")
        comps = d.get("components", [])
        if not isinstance(comps, list):
            raise ConfigError("must be a list", "components")
        return cls(d["platform_name"], tuple(ComponentSpec.from_dict(c) for c in comps), dict(d.get("params", {})))


class InventoryRow(NamedTuple):
    name: str
    group: ComponentGroup
    count: float
    subtotal_watts: float


class GroupShare(NamedTuple):
    watts: float
    fraction: float | None  # None when total power is zero


def instantiate(inv: PlatformInventory) -> list[InventoryRow]:
    """Evaluate every count rule and return rows in inventory order."""
    rows = []
    for comp in inv.components:
        n = comp.count.evaluate(inv.params, comp.name)
        if n < 0:
            raise DomainError(f"component {comp.name!r} evaluates to a negative count ({n})")
        rows.append(InventoryRow(comp.name, comp.group, n, n * comp.unit_power))
    return rows


def total_power(inv: PlatformInventory) -> float:
    return math.fsum(row.subtotal_watts for row in instantiate(inv))


def breakdown_by_group(inv: PlatformInventory) -> dict[ComponentGroup, GroupShare]:
    """Watts and share of the total per component group.

    Only groups that appear in the inventory are reported, in order of first
    appearance. Fractions are ``None`` when the total is zero.
    """
    rows = instantiate(inv)
    watts: dict[ComponentGroup, list[float]] = {}
    for row in rows:
        watts.setdefault(row.group, []).append(row.subtotal_watts)
    total = math.fsum(row.subtotal_watts for row in rows)
    out = {}
    for group, parts in watts.items():
        w = math.fsum(parts)
        out[group] = GroupShare(w, w / total if total > 0 else None)
    return out


def energy_in_window(inv: PlatformInventory, t: float) -> float:
    """Energy in joules drawn over ``t`` seconds."""
    if t < 0:
        raise DomainError(f"time window must be >= 0, got {t}")
    return t * total_power(inv)
