"""Run-counting structures on binary words.

The package computes period-maximal intervals and their Lyndon-root sets,
classifies charged and idle positions, searches for the minimum length at
which every binary word carries a given number of extension-safe idle
positions, and certifies the resulting run-density bound with exact
rational arithmetic.
"""

from .analysis import (
    IdleReport,
    LyndonRootSet,
    OwnedRoot,
    PeriodMaximalInterval,
    charged_positions,
    idle_report,
    left_stable_idle,
    lyndon_root_map,
    owner_of,
    period_maximal_extension,
    runs,
    stable_idle,
)
from .errors import BudgetError, ConfigError, DomainError, InputError, RunslabError
from .words import (
    BOTH_ORDERS,
    Interval,
    Order,
    Word,
    compare,
    complement,
    is_lyndon,
    lyndon_factor_end,
    smallest_period,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Word",
    "Order",
    "BOTH_ORDERS",
    "Interval",
    "compare",
    "complement",
    "is_lyndon",
    "lyndon_factor_end",
    "smallest_period",
    "PeriodMaximalInterval",
    "LyndonRootSet",
    "OwnedRoot",
    "IdleReport",
    "period_maximal_extension",
    "owner_of",
    "lyndon_root_map",
    "runs",
    "charged_positions",
    "stable_idle",
    "left_stable_idle",
    "idle_report",
    "RunslabError",
    "InputError",
    "DomainError",
    "ConfigError",
    "BudgetError",
]
