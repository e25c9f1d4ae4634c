"""Local data, property J(v), last jumps and local counts"""

from .counting import (
    CountingBounds,
    count_lastjump_eq,
    count_lastjump_lt,
    counting_bounds,
    jump_distribution,
    small_v_count,
)
from .datum import LocalDatum, ceil_log, check_jump_value, eta, format_jump, load_datum, mu
from .equations import (
    complete_datum,
    constraints_hold,
    l_plus_conditions,
    satisfies_J,
    slightly_ramified_condition,
)
from .lastjump import abrashkin_functional, act_on_datum, checked_lastjump, jump_candidates, lastjump, lastjump_oracle

__all__ = [
    "CountingBounds",
    "count_lastjump_eq",
    "count_lastjump_lt",
    "counting_bounds",
    "jump_distribution",
    "small_v_count",
    "LocalDatum",
    "ceil_log",
    "check_jump_value",
    "eta",
    "format_jump",
    "load_datum",
    "mu",
    "complete_datum",
    "constraints_hold",
    "l_plus_conditions",
    "satisfies_J",
    "slightly_ramified_condition",
    "abrashkin_functional",
    "act_on_datum",
    "checked_lastjump",
    "jump_candidates",
    "lastjump",
    "lastjump_oracle",
]
