"""
Counting local data by last jump

Data with lastjump < v are in bijection with the slot tuples (D_a)_{a<v}
that solve the constraint system of J(v); the D_b with b >= v are then
forced. Enumeration is partitioned on the values of the first slot and can
run in a process pool. Workers are module-level functions that rebuild
their algebra from picklable arguments.
"""

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Tuple

from ..algebra.finite_field import FieldParams
from ..algebra.lie import Coords, LieAlgebra, LieAlgebraSpec, base_change, subobjects
from ..config import WildcountConfig
from ..errors import ScaleGuardError
from .datum import Rational
from .equations import EquationSystem, complete_datum, constraint_system, slightly_ramified_level
from .lastjump import lastjump

logger = logging.getLogger(__name__)

COUNT_METHODS = ("auto", "enumerate")


@dataclass(frozen=True)
class CountingBounds:
    """Upper bounds for count_lastjump_lt(spec, kappa, v)"""

    v: Fraction
    general: int
    better: Optional[int] = None
    exponent_p: Optional[int] = None

    @property
    def best(self) -> int:
        return min(b for b in (self.general, self.better, self.exponent_p) if b is not None)


def _slot_domains(algebra: LieAlgebra, system: EquationSystem) -> Tuple[Dict[int, List[Coords]], EquationSystem]:
    """Restrict each slot by its term-free integer equation p^mu D_b = 0 and drop that equation"""
    elements = list(algebra.elements())
    domains = {a: elements for a in system.keys}
    kept = []
    for equation in system.equations:
        if equation.family == "integer" and not equation.terms:
            power = algebra.p ** equation.shift
            domains[equation.b] = [x for x in domains[equation.b] if algebra.is_zero(algebra.scale(x, power))]
        else:
            kept.append(equation)
    reduced = EquationSystem(algebra, system.v, system.keys, kept)
    return domains, reduced


def _enumeration_size(domains: Dict[int, List[Coords]]) -> int:
    size = 1
    for values in domains.values():
        size *= len(values)
    return size


def _chunks(n: int, parts: int) -> List[range]:
    parts = max(1, min(parts, n))
    step, extra = divmod(n, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append(range(start, stop))
        start = stop
    return out


def _run_chunks(worker, args: tuple, first_size: int, jobs: int):
    chunks = _chunks(first_size, jobs)
    if jobs <= 1 or len(chunks) == 1:
        return [worker(*args, chunk.start, chunk.stop) for chunk in chunks]
    logger.info("enumerating with %d workers", len(chunks))
    with ProcessPoolExecutor(max_workers=len(chunks)) as executor:
        futures = [executor.submit(worker, *args, chunk.start, chunk.stop) for chunk in chunks]
        return [f.result() for f in futures]


def _count_chunk(spec: LieAlgebraSpec, field: FieldParams, v: Fraction, start: int, stop: int) -> int:
    algebra = base_change(spec, field)
    domains, system = _slot_domains(algebra, constraint_system(algebra, v))
    slots = list(system.keys)
    first, rest = slots[0], slots[1:]
    count = 0
    for head in domains[first][start:stop]:
        for tail in itertools.product(*(domains[a] for a in rest)):
            values = dict(zip(rest, tail))
            values[first] = head
            if system.holds(values):
                count += 1
    return count


def small_v_count(spec: LieAlgebraSpec, field: FieldParams, m: int) -> int:
    """|{D : lastjump(D) < 1 + p^-m}|, counted over D_1 in g[p] (x) kappa"""
    r = subobjects(spec).r
    if m == 0:
        return field.q ** r
    algebra = base_change(spec, field)
    guard = WildcountConfig.scale_guard(WildcountConfig.LOCAL_ENUMERATION_GUARD)
    if field.q ** r > guard:
        raise ScaleGuardError("Slightly ramified enumeration", field.q ** r, guard)
    levels = range(1, min(m, algebra.d) + 1)
    count = 0
    for d1 in algebra.p_torsion_elements():
        if all(algebra.is_zero(algebra.bracket(algebra.frobenius(d1, i), d1)) for i in levels):
            count += 1
    return count


def count_lastjump_lt(spec: LieAlgebraSpec, field: FieldParams, v: Rational,
                      jobs: int = 1, method: str = "auto") -> int:
    """Number of data D in g (x) D over kappa with lastjump(D) < v"""
    v = Fraction(v)
    if v <= 0:
        raise ValueError(f"v must be positive, got {v}")
    if method not in COUNT_METHODS:
        raise ValueError(f"Unknown counting method {method!r}; choose from {', '.join(COUNT_METHODS)}")
    if v <= 1:
        return 1
    if method == "auto" and v <= 2:
        m = slightly_ramified_level(v, spec.p)
        logger.debug("slightly ramified fast path at m=%d", m)
        return small_v_count(spec, field, m)
    algebra = base_change(spec, field)
    domains, system = _slot_domains(algebra, constraint_system(algebra, v))
    size = _enumeration_size(domains)
    guard = WildcountConfig.scale_guard(WildcountConfig.LOCAL_ENUMERATION_GUARD)
    if size > guard:
        raise ScaleGuardError(f"Local enumeration below v={v}", size, guard)
    logger.info("counting lastjump < %s: %d slots, %d tuples, %d equations",
                v, len(domains), size, len(system))
    first = system.keys[0]
    parts = _run_chunks(_count_chunk, (spec, field, v), len(domains[first]), jobs)
    return sum(parts)


def count_lastjump_eq(spec: LieAlgebraSpec, field: FieldParams, v: Rational,
                      jobs: int = 1, method: str = "auto") -> int:
    """Number of data with lastjump exactly v; zero off the 1/|G| lattice"""
    v = Fraction(v)
    if v < 0:
        raise ValueError(f"v must be non-negative, got {v}")
    if v == 0:
        return 1
    order = spec.order
    if order % v.denominator:
        return 0
    step = Fraction(1, order)
    return (count_lastjump_lt(spec, field, v + step, jobs, method)
            - count_lastjump_lt(spec, field, v, jobs, method))


def _distribution_chunk(spec: LieAlgebraSpec, field: FieldParams, level: int, v_max: Fraction,
                        start: int, stop: int) -> Counter:
    algebra = base_change(spec, field)
    v = Fraction(level + 1)
    domains, system = _slot_domains(algebra, constraint_system(algebra, v))
    slots = list(system.keys)
    first, rest = slots[0], slots[1:]
    found: Counter = Counter()
    for head in domains[first][start:stop]:
        for tail in itertools.product(*(domains[a] for a in rest)):
            values = dict(zip(rest, tail))
            values[first] = head
            if not system.holds(values):
                continue
            jump = lastjump(complete_datum(algebra, values, v))
            if level <= jump < v and jump < v_max:
                found[jump] += 1
    return found


def jump_distribution(spec: LieAlgebraSpec, field: FieldParams, v_max: Rational,
                      jobs: int = 1) -> Dict[Fraction, int]:
    """Counts of data by exact last jump, for every jump strictly below v_max"""
    v_max = Fraction(v_max)
    if v_max <= 0:
        raise ValueError(f"v_max must be positive, got {v_max}")
    algebra = base_change(spec, field)
    guard = WildcountConfig.scale_guard(WildcountConfig.LOCAL_ENUMERATION_GUARD)
    histogram: Counter = Counter({Fraction(0): 1})
    for level in range(1, ceil(v_max)):
        domains, _ = _slot_domains(algebra, constraint_system(algebra, level + 1))
        size = _enumeration_size(domains)
        if size > guard:
            raise ScaleGuardError(f"Jump distribution on [{level}, {level + 1})", size, guard)
        logger.info("distribution on [%d, %d): %d tuples", level, level + 1, size)
        first = min(domains)
        for part in _run_chunks(_distribution_chunk, (spec, field, level, v_max), len(domains[first]), jobs):
            histogram.update(part)
    return dict(sorted(histogram.items()))


def counting_bounds(spec: LieAlgebraSpec, field: FieldParams, v: Rational) -> CountingBounds:
    """The general, better-bound and exponent-p upper bounds at v"""
    v = Fraction(v)
    if v <= 0:
        raise ValueError(f"v must be positive, got {v}")
    info = subobjects(spec)
    q, r = field.q, info.r
    level = ceil(v) - 1
    general = spec.order ** (2 * level) * q ** (r * level)
    better = q ** (r * level) if info.better_bound else None
    exponent_p = q ** (r * (ceil(v) - ceil(v / spec.p))) if spec.exponent_p else None
    return CountingBounds(v, general, better, exponent_p)
