"""Counters specific to the Heisenberg algebras h_k"""

from .akm import AKM_METHODS, a_km, a_km_bruteforce, a_km_charsum, a_km_stable
from .local import ProfileRow, heisenberg_local_profile, heisenberg_local_small_v
from .symplectic import SymplecticSpace, isotropic_count, isotropic_formula, maximal_isotropic_subspaces

__all__ = [
    "AKM_METHODS",
    "a_km",
    "a_km_bruteforce",
    "a_km_charsum",
    "a_km_stable",
    "ProfileRow",
    "heisenberg_local_profile",
    "heisenberg_local_small_v",
    "SymplecticSpace",
    "isotropic_count",
    "isotropic_formula",
    "maximal_isotropic_subspaces",
]
