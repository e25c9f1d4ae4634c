"""
Global counts over F_q(T) assembled from local counts

The Aut-weighted number of G-extensions with global last jump N is the
coefficient of X^N in prod_P f_P(X^{deg P}), where f_P is the local series
of last-jump counts at P. Exponents live on the lattice (1/|g|)Z.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import List, Tuple

from core.algebra.finite_field import field_from_order
from core.algebra.lie import LieAlgebraSpec
from core.config import WildcountConfig
from core.errors import InvariantViolation, ScaleGuardError
from core.ramification.counting import count_lastjump_eq, jump_distribution

from .series import RationalSeries, places_of_degree

logger = logging.getLogger(__name__)


def _lattice_size(spec: LieAlgebraSpec, n_max) -> int:
    n_max = Fraction(n_max)
    if n_max < 0:
        raise ValueError(f"N_max must be non-negative, got {n_max}")
    points = floor(n_max * spec.order)
    guard = WildcountConfig.scale_guard(WildcountConfig.LATTICE_GUARD)
    if points > guard:
        raise ScaleGuardError(f"Series on the 1/{spec.order} lattice up to {n_max}", points, guard)
    return points


@lru_cache(maxsize=None)
def _local_coefficients(spec: LieAlgebraSpec, q: int, deg: int, points: int, jobs: int) -> Tuple[int, ...]:
    K = spec.order
    field = field_from_order(q ** deg)
    coefficients = [0] * (points + 1)
    coefficients[0] = 1
    # below 2 the slightly ramified fast path makes exact counts cheap
    for j in range(1, min(points, 2 * K - 1) + 1):
        coefficients[j] = count_lastjump_eq(spec, field, Fraction(j, K), jobs)
    if points >= 2 * K:
        for jump, count in jump_distribution(spec, field, Fraction(points + 1, K), jobs=jobs).items():
            if jump < 2:
                continue
            index = jump * K
            if index.denominator != 1:
                raise InvariantViolation(f"Last jump {jump} is off the 1/{K} lattice")
            coefficients[int(index)] = count
    logger.debug("local series of %s over F_%d: %s", spec.name, q ** deg, coefficients)
    return tuple(coefficients)


def local_series(spec: LieAlgebraSpec, q: int, deg: int, n_max, jobs: int = 1) -> RationalSeries:
    """sum_n a_{P,n} X^n for a place of degree deg, for n <= n_max / deg"""
    if deg < 1:
        raise ValueError(f"Place degree must be positive, got {deg}")
    points = _lattice_size(spec, Fraction(n_max) / deg)
    return RationalSeries(spec.order, list(_local_coefficients(spec, q, deg, points, jobs)))


def euler_product(spec: LieAlgebraSpec, q: int, n_max, jobs: int = 1) -> RationalSeries:
    """Global coefficients a_N for N <= n_max"""
    length = _lattice_size(spec, n_max) + 1
    result = RationalSeries.one(spec.order, length)
    for deg in range(1, floor(Fraction(n_max)) + 1):
        places = places_of_degree(q, deg)
        factor = local_series(spec, q, deg, n_max, jobs).stretch(deg, length)
        logger.info("degree %d: %d places", deg, places)
        result = result.mul(factor.pow(places, length), length)
    return result


def direct_convolution(spec: LieAlgebraSpec, q: int, n_max, jobs: int = 1) -> RationalSeries:
    """Sum over explicit place tuples (n_P) of prod_P a_{P,n_P}"""
    length = _lattice_size(spec, n_max) + 1
    degrees: List[int] = []
    local = {}
    for deg in range(1, floor(Fraction(n_max)) + 1):
        degrees.extend([deg] * places_of_degree(q, deg))
        local[deg] = [(j, c) for j, c in local_series(spec, q, deg, n_max, jobs).nonzero() if j]
    out = [0] * length

    def visit(start: int, used: int, weight: int):
        out[used] += weight
        for index in range(start, len(degrees)):
            deg = degrees[index]
            for j, c in local[deg]:
                total = used + j * deg
                if total >= length:
                    break
                visit(index + 1, total, weight * c)

    visit(0, 0, 1)
    return RationalSeries(spec.order, out)
