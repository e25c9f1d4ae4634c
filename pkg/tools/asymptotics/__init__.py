"""Global last-jump counts over F_q(T) and their growth constants"""

from .constants import (
    AsymptoticsInput,
    AsymptoticsReport,
    AsymptoticsRow,
    analytic_constants,
    constants_for_heisenberg_spec,
    heisenberg_constants,
    heisenberg_table,
    main_theorem_constants,
    main_theorem_table,
    rational_lcm,
)
from .euler import direct_convolution, euler_product, local_series
from .series import RationalSeries, places_of_degree, zeta_check

__all__ = [
    "AsymptoticsInput",
    "AsymptoticsReport",
    "AsymptoticsRow",
    "analytic_constants",
    "constants_for_heisenberg_spec",
    "heisenberg_constants",
    "heisenberg_table",
    "main_theorem_constants",
    "main_theorem_table",
    "rational_lcm",
    "direct_convolution",
    "euler_product",
    "local_series",
    "RationalSeries",
    "places_of_degree",
    "zeta_check",
]
