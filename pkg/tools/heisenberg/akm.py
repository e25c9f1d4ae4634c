"""
Counting A_{k,m}(F_q) = {x in F_q^{2k} : f_k(sigma^i x, x) = 0 for 0 < i <= m}

Three independent counters: exhaustive search, the exact root-counting form
of the character sum, and the union of extended maximal isotropic subspaces
(valid once m >= k).
"""

import itertools
import logging
from fractions import Fraction

import numpy as np

from core.algebra.finite_field import FieldParams
from core.config import WildcountConfig
from core.errors import InvariantViolation, ScaleGuardError

from .symplectic import SymplecticSpace, maximal_isotropic_subspaces

logger = logging.getLogger(__name__)

AKM_METHODS = ("brute", "charsum", "stable")


def a_km_bruteforce(k: int, m: int, field: FieldParams) -> int:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    space = SymplecticSpace(k, field)
    guard = WildcountConfig.scale_guard(WildcountConfig.AKM_GUARD)
    if space.size > guard:
        raise ScaleGuardError(f"A_{{{k},{m}}} brute force", space.size, guard)
    # sigma^i only depends on i mod d, and i = 0 mod d gives f_k(x, x) = 0
    levels = sorted({i % field.d for i in range(1, m + 1)} - {0})
    if not levels:
        return space.size
    tables = space.tables
    count = 0
    for first in range(space.q):
        block = space.block(first)
        keep = np.ones(block.shape[0], dtype=bool)
        for i in levels:
            moved = tables.frobenius(i)[block]
            keep &= space.form_rows(moved, block) == 0
        count += int(keep.sum())
    logger.debug("A_{%d,%d}(F_%d) = %d by brute force", k, m, field.q, count)
    return count


def a_km_charsum(k: int, m: int, field: FieldParams) -> int:
    """q^{k-m} sum_t R(t)^k, with R(t) the number of roots b of the t-polynomial"""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    q, p = field.q, field.p
    if m == 0:
        return q ** (2 * k)
    guard = WildcountConfig.scale_guard(WildcountConfig.AKM_GUARD)
    if q ** (m + 1) > guard:
        raise ScaleGuardError(f"A_{{{k},{m}}} character sum", q ** (m + 1), guard)
    space = SymplecticSpace(k, field)
    tables = space.tables
    low = [tables.power(p ** m + p ** (m - i)) for i in range(1, m + 1)]
    high = [tables.power(p ** (m + i) + p ** m) for i in range(1, m + 1)]
    ts = np.array(list(itertools.product(range(q), repeat=m)), dtype=np.int64).reshape(-1, m)
    values = np.zeros((ts.shape[0], q), dtype=np.int64)
    for i in range(1, m + 1):
        t_i = ts[:, i - 1]
        c_low = tables.frobenius(m - i)[t_i][:, None]
        c_high = tables.frobenius(m)[t_i][:, None]
        values = tables.add[values, tables.mul[c_low, low[i - 1][None, :]]]
        values = tables.add[values, tables.neg[tables.mul[c_high, high[i - 1][None, :]]]]
    roots = (values == 0).sum(axis=1)
    total = sum(int(r) ** k for r in roots)
    result = Fraction(q) ** (k - m) * total
    if result.denominator != 1:
        raise InvariantViolation(f"Character sum for A_{{{k},{m}}}(F_{q}) is not integral: {result}")
    return int(result)


def a_km_stable(k: int, field: FieldParams) -> int:
    """|union of W (x) F_q| over maximal isotropic F_p-subspaces W"""
    q, p = field.q, field.p
    subspaces = maximal_isotropic_subspaces(p, k)
    guard = WildcountConfig.scale_guard(WildcountConfig.AKM_GUARD)
    work = len(subspaces) * q ** k
    if work > guard:
        raise ScaleGuardError(f"A_{{{k},stable}} union", work, guard)
    tables = SymplecticSpace(k, field).tables
    scalars = np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64).reshape(-1, k)
    weights = np.array([q ** j for j in range(2 * k)], dtype=np.int64)
    seen = []
    for basis in subspaces:
        coords = np.zeros((scalars.shape[0], 2 * k), dtype=np.int64)
        for r, row in enumerate(basis):
            # prime-field constants encode as themselves
            embedded = np.array(row, dtype=np.int64)[None, :]
            coords = tables.add[coords, tables.mul[scalars[:, r][:, None], embedded]]
        seen.append(coords @ weights)
    return int(np.unique(np.concatenate(seen)).size)


def a_km(k: int, m: int, field: FieldParams, method: str = "brute") -> int:
    """Dispatch to one of the A_{k,m} counters"""
    if method == "brute":
        return a_km_bruteforce(k, m, field)
    if method == "charsum":
        return a_km_charsum(k, m, field)
    if method == "stable":
        if m < k:
            raise ValueError(f"The stable union only counts A_{{k,m}} for m >= k, got k={k}, m={m}")
        return a_km_stable(k, field)
    raise ValueError(f"Unknown A_km method {method!r}; choose from {', '.join(AKM_METHODS)}")

