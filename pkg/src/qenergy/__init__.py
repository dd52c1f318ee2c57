"""Energy-efficiency models for quantum computing platforms.

Energy efficiency is the number of algorithm runs a machine completes per
joule, ``1 / (t_alg * P)``, with ``P`` the summed power of its hardware and
``t_alg`` the time for all samples of a compiled circuit.
"""

from .efficiency import EfficiencyResult, ee_ratio, energy_efficiency, n_algorithms
from .exceptions import ConfigError, DisconnectedGraphError, DomainError, MissingParameterError, QEnergyError
from .inventory import (
    ComponentGroup,
    ComponentSpec,
    CountRule,
    PlatformInventory,
    breakdown_by_group,
    energy_in_window,
    instantiate,
    total_power,
)
from .presets import Platform, list_presets, load_preset
from .scenario import ScenarioConfig, SweepAxis, SweepResult, run_scenario
from .timing import (
    AtomTiming,
    NeutralAtomTiming,
    ReloadMode,
    SolidStateTiming,
    algorithm_time,
    atom_circuit_time,
    circuit_time,
    multizone_clock,
    neutral_circuit_time,
    solid_state_circuit_time,
)

__version__ = "0.1.0"
