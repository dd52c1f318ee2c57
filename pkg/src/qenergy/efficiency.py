"""Energy efficiency: algorithms completed per joule.

Because power is constant in time, the number of algorithm runs in a window
``t`` is ``t / t_alg`` and the energy is ``t * P``, so their ratio
``1 / (t_alg * P)`` does not depend on the window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import DomainError

SECONDS_PER_DAY = 86_400.0


def energy_efficiency(t_alg: float, power: float) -> float:
    if not (t_alg > 0 and math.isfinite(t_alg)):
        raise DomainError(f"algorithm time must be positive and finite, got {t_alg}")
    if not (power > 0 and math.isfinite(power)):
        raise DomainError(f"power must be positive and finite, got {power}")
    return 1.0 / (t_alg * power)


def n_algorithms(t_window: float, t_alg: float, floor: bool = False) -> float:
    """Algorithm runs that fit in ``t_window``; partial runs count unless ``floor``."""
    if not t_alg > 0:
        raise DomainError(f"algorithm time must be positive, got {t_alg}")
    if t_window < 0:
        raise DomainError(f"time window must be >= 0, got {t_window}")
    n = t_window / t_alg
    return float(math.floor(n)) if floor else n


@dataclass(frozen=True)
class EfficiencyResult:
    platform_name: str
    depth: float
    n_samples: float
    t_circuit: float
    t_alg: float
    power: float

    @property
    def ee(self) -> float:
        return energy_efficiency(self.t_alg, self.power)

    def n_in_window(self, t: float = SECONDS_PER_DAY, floor: bool = False) -> float:
        return n_algorithms(t, self.t_alg, floor)


def ee_ratio(a: EfficiencyResult, b: EfficiencyResult) -> float:
    """How many times more efficient ``a`` is than ``b``."""
    return (b.t_alg * b.power) / (a.t_alg * a.power)
