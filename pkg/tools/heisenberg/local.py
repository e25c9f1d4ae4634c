"""
Local counts for the Heisenberg algebras h_k just above last jump 1
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from core.algebra.finite_field import FieldParams
from core.algebra.lie import heisenberg
from core.errors import InvariantViolation
from core.ramification.counting import count_lastjump_lt

from .akm import a_km_bruteforce, a_km_stable
from .symplectic import isotropic_formula

logger = logging.getLogger(__name__)


def heisenberg_local_small_v(k: int, field: FieldParams, m: int, verify: bool = True, jobs: int = 1) -> int:
    """N(< 1 + p^-m) = q |A_{k,m}(F_q)|, checked against a full local enumeration"""
    count = field.q * a_km_bruteforce(k, m, field)
    if verify:
        v = 1 + Fraction(1, field.p ** m)
        local = count_lastjump_lt(heisenberg(k, field.p), field, v, jobs=jobs, method="enumerate")
        if local != count:
            raise InvariantViolation(
                f"h_{k} over F_{field.q}: q|A_{{k,{m}}}| = {count} but the local count below {v} is {local}"
            )
    return count


@dataclass(frozen=True)
class ProfileRow:
    """N(< 1 + p^-m) together with its leading term"""

    m: int
    jump_bound: Fraction
    count: int
    leading: int


def heisenberg_local_profile(k: int, field: FieldParams, verify: bool = False, jobs: int = 1) -> List[ProfileRow]:
    """Rows m = 0..k of the slightly ramified Heisenberg counts"""
    q, p = field.q, field.p
    rows = []
    for m in range(k + 1):
        count = heisenberg_local_small_v(k, field, m, verify, jobs)
        if m < k:
            leading = q ** (2 * k + 1 - m)
        else:
            leading = isotropic_formula(p, k) * q ** (k + 1)
        rows.append(ProfileRow(m, 1 + Fraction(1, p ** m), count, leading))
    stable = q * a_km_stable(k, field)
    if rows[-1].count != stable:
        raise InvariantViolation(f"N(<=1) = {stable} differs from N(< 1 + p^-{k}) = {rows[-1].count}")
    logger.debug("h_%d profile over F_%d: %s", k, q, [row.count for row in rows])
    return rows
