"""Single-photon-source photonic processors.

Each qubit is dual-rail encoded on two optical modes and the chip is a
rectangular (Clements) interferometer whose optical depth equals the number of
modes. A sample succeeds only when every photon survives the source,
demultiplexer, chip and detector, so the sampling time grows as
``eta ** -N_q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .exceptions import ConfigError, DomainError
from .inventory import ComponentGroup, ComponentSpec, CountRule, PlatformInventory, total_power

# Below this the success probability of a sample is treated as zero.
UNDERFLOW_PROBABILITY = 1e-300


@dataclass(frozen=True)
class PhotonicEfficiencies:
    source: float = 0.712  # at the fibre output
    detector: float = 0.98
    demux: float = 0.83

    def __post_init__(self):
        for name in ("source", "detector", "demux"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ConfigError(f"efficiency must lie in (0, 1], got {value}", f"photonic.efficiencies.{name}")

    @property
    def product(self) -> float:
        return self.source * self.detector * self.demux


@dataclass(frozen=True)
class PhotonicChipTech:
    name: str
    c_coup_db: float  # per facet
    c_mzi_db: float  # per interferometer layer
    c_prop_db_per_cm: float
    element_power_w: float
    reconfig_time_s: float

    def __post_init__(self):
        for attr in ("c_coup_db", "c_mzi_db", "c_prop_db_per_cm", "element_power_w", "reconfig_time_s"):
            value = getattr(self, attr)
            if not (value >= 0 and math.isfinite(value)):
                raise ConfigError(f"must be finite and >= 0, got {value}", f"photonic.chip.{attr}")


GLASS = PhotonicChipTech("GlassMesh", 0.5, 0.1, 0.3, 75e-3, 1e-6)
EO_LN = PhotonicChipTech("EO_LN", 3.4, 0.15, 0.025, 60e-6, 44e-12)
EO_BTO = PhotonicChipTech("EO_BTO", 0.127, 0.21, 0.016, 121e-9, 145e-12)

CHIPS = {"glass": GLASS, "eo-ln": EO_LN, "eo-bto": EO_BTO}


def chip_by_name(name: str) -> PhotonicChipTech:
    key = name.lower()
    for alias, chip in CHIPS.items():
        if key in (alias, chip.name.lower()):
            return chip
    raise ConfigError(f"unknown chip technology {name!r} (choose from {', '.join(CHIPS)})", "chip")


@dataclass(frozen=True)
class PhotonicDevice:
    n_qubits: int
    chip: PhotonicChipTech = GLASS
    efficiencies: PhotonicEfficiencies = field(default_factory=PhotonicEfficiencies)
    n_source: int = 1
    r_source_hz: float = 1e9
    chip_length_cm: float | None = None  # enables propagation loss when set
    elements_per_mzi: int = 2

    def __post_init__(self):
        if self.n_qubits < 1 or int(self.n_qubits) != self.n_qubits:
            raise DomainError(f"N_q must be a positive integer, got {self.n_qubits}")
        if self.n_source < 1:
            raise DomainError(f"N_source must be >= 1, got {self.n_source}")
        if not self.r_source_hz > 0:
            raise DomainError(f"source rate must be positive, got {self.r_source_hz}")
        if self.chip_length_cm is not None and self.chip_length_cm < 0:
            raise DomainError(f"chip length must be >= 0, got {self.chip_length_cm}")
        if self.elements_per_mzi < 0:
            raise DomainError(f"elements per MZI must be >= 0, got {self.elements_per_mzi}")

    @property
    def modes(self) -> int:
        return 2 * self.n_qubits

    def to_dict(self) -> dict:
        return {
            "chip": self.chip.name,
            "efficiencies": {"source": self.efficiencies.source, "detector": self.efficiencies.detector,
                             "demux": self.efficiencies.demux},
            "n_source": self.n_source,
            "r_source_hz": self.r_source_hz,
            "chip_length_cm": self.chip_length_cm,
            "elements_per_mzi": self.elements_per_mzi,
        }

    @classmethod
    def from_dict(cls, d: dict, n_qubits: int) -> "PhotonicDevice":
        known = {"chip", "efficiencies", "n_source", "r_source_hz", "chip_length_cm", "elements_per_mzi"}
        unknown = set(d) - known
        if unknown:
            raise ConfigError(f"unknown keys {sorted(unknown)}", "photonic")
        eff = PhotonicEfficiencies(**d.get("efficiencies", {}))
        return cls(
            n_qubits,
            chip_by_name(d.get("chip", "glass")),
            eff,
            d.get("n_source", 1),
            d.get("r_source_hz", 1e9),
            d.get("chip_length_cm"),
            d.get("elements_per_mzi", 2),
        )


def log10_transmission(dev: PhotonicDevice, m: int) -> float:
    if m < 0:
        raise DomainError(f"mode count must be >= 0, got {m}")
    loss_db = 2 * dev.chip.c_coup_db + m * dev.chip.c_mzi_db
    if dev.chip_length_cm is not None:
        loss_db += dev.chip_length_cm * dev.chip.c_prop_db_per_cm
    return math.log10(dev.efficiencies.product) - loss_db / 10


def transmission(dev: PhotonicDevice, m: int) -> float:
    """End-to-end probability that one photon crosses an ``m``-mode mesh."""
    return 10 ** log10_transmission(dev, m)


def sample_time(dev: PhotonicDevice) -> float:
    """Mean time to collect one sample with every photon detected.

    Returns ``inf`` once the success probability drops below
    ``UNDERFLOW_PROBABILITY``.
    """
    log10_success = dev.n_qubits * log10_transmission(dev, dev.modes)
    if log10_success < math.log10(UNDERFLOW_PROBABILITY):
        return math.inf
    return dev.n_qubits / (dev.n_source * dev.r_source_hz) * 10 ** (-log10_success)


class PhotonicCounts(NamedTuple):
    cryostats: int
    demultiplexers: int
    fpga_units: int
    mesh_elements: int


def component_counts(n_qubits: int, elements_per_mzi: int = 2) -> PhotonicCounts:
    if n_qubits < 1:
        raise DomainError(f"N_q must be >= 1, got {n_qubits}")
    m = 2 * n_qubits
    return PhotonicCounts(
        -(-2 * n_qubits // 25),
        -(-n_qubits // 12),
        max(1, -(-m * m // 16)),
        elements_per_mzi * m * (m - 1) // 2,
    )


def photonic_inventory(dev: PhotonicDevice) -> PlatformInventory:
    e = dev.elements_per_mzi
    comps = (
        ComponentSpec("Laser", ComponentGroup.QUBIT_CONTROL, CountRule.constant(1), 4.0),
        ComponentSpec("Cryogenic system for source and detectors", ComponentGroup.COOLING,
                      CountRule.ceil("N_q", 25, a=2), 1500.0, "one source and up to 25 detectors per cryostat"),
        ComponentSpec("Peltier cooling of the chip", ComponentGroup.COOLING, CountRule.constant(1), 250.0,
                      "200-300 W range, midpoint"),
        ComponentSpec("Demultiplexer system (DMX-12)", ComponentGroup.QUBIT_CONTROL,
                      CountRule.ceil("N_q", 12), 50.0, "about 50 W per DMX"),
        ComponentSpec("Classical control electronics (FPGA, DAC)", ComponentGroup.QUBIT_CONTROL,
                      CountRule.ceil("N_q", 16, a=4, power=2), 15.0, "16 channels per FPGA"),
        ComponentSpec("Classical computers", ComponentGroup.CLASSICAL, CountRule.constant(1), 150.0),
        # e/2 elements per MZI times m(m-1)/2 MZIs, with m = 2 N_q
        ComponentSpec("Chip phase shifters", ComponentGroup.QUBIT_CONTROL,
                      CountRule.poly("N_q", (0.0, -float(e), 2.0 * e)), dev.chip.element_power_w,
                      f"{dev.chip.name} static power per element"),
    )
    return PlatformInventory(f"photonic-{dev.chip.name}", comps, {"N_q": dev.n_qubits})


def photonic_power(dev: PhotonicDevice) -> float:
    return total_power(photonic_inventory(dev))


def photonic_ee(dev: PhotonicDevice, n_samples: float = 1) -> float:
    """Algorithms per joule; zero once the sample time saturates."""
    if not n_samples >= 1:
        raise DomainError(f"N_samples must be >= 1, got {n_samples}")
    t = sample_time(dev)
    if math.isinf(t):
        return 0.0
    return 1.0 / (n_samples * t * photonic_power(dev))


class PhotonicRow(NamedTuple):
    n_q: int
    modes: int
    eta: float
    t_sample_s: float
    power_w: float
    ee_per_j: float


PHOTONIC_COLUMNS = PhotonicRow._fields


def photonic_row(dev: PhotonicDevice, n_samples: float = 1) -> PhotonicRow:
    return PhotonicRow(
        dev.n_qubits,
        dev.modes,
        transmission(dev, dev.modes),
        sample_time(dev),
        photonic_power(dev),
        photonic_ee(dev, n_samples),
    )
