"""
Exact last jumps of local data

``lastjump`` binary-searches the monotone predicate J(v) over a finite
candidate set. ``lastjump_oracle`` is an independent evaluation of the
ramification functional F_{gamma,-N}(D) over the same candidates, grouped
directly by gamma without going through J(v).
"""

import logging
from fractions import Fraction
from typing import List, Optional, Set

from ..algebra.lie import Coords, LieAlgebra
from ..errors import InvariantViolation
from .datum import LocalDatum, ceil_log, eta, p_valuation
from .equations import satisfies_J

logger = logging.getLogger(__name__)


def candidate_depth(datum: LocalDatum) -> int:
    """How many negative powers of p the candidate grid reaches"""
    bound = datum.max_key + 1
    return ceil_log(bound, datum.p) + datum.algebra.d + datum.algebra.torsion


def jump_candidates(datum: LocalDatum) -> List[Fraction]:
    """Sorted candidate jumps: the a p^j grid joined with every gamma some term can reach"""
    if datum.is_zero():
        return []
    p, torsion = datum.p, datum.algebra.torsion
    bound = datum.max_key + 1
    depth = candidate_depth(datum)
    keys = datum.keys
    found: Set[Fraction] = set()
    for a in range(1, 2 * bound):
        if a % p:
            for j in range(-depth, torsion + 1):
                found.add(Fraction(a) * Fraction(p) ** j)
    for b in keys:
        for m in range(torsion + 1):
            found.add(Fraction(b * p ** m))
    for a1 in keys:
        for n1 in range(torsion + 1):
            for a2 in keys:
                for n2 in range(n1 + 1):
                    found.add(Fraction(a1 * p ** n1 + a2 * p ** n2))
                for i in range(1, depth + 1):
                    found.add(a1 * p ** n1 + Fraction(a2, p ** i))
    return sorted(found)


def lastjump(datum: LocalDatum, method: str = "auto") -> Fraction:
    """max({0} and every candidate c where J(c) fails)"""
    candidates = jump_candidates(datum)
    lo, hi = 0, len(candidates)
    # J fails on a prefix of the sorted candidates and holds on the rest
    while lo < hi:
        mid = (lo + hi) // 2
        if satisfies_J(datum, candidates[mid], method):
            hi = mid
        else:
            lo = mid + 1
    value = candidates[lo - 1] if lo else Fraction(0)
    logger.debug("lastjump over %d candidates: %s", len(candidates), value)
    return value


def abrashkin_functional(datum: LocalDatum, gamma: Fraction, depth: Optional[int] = None) -> Coords:
    """F_{gamma,-N}(D) with D_0 = 0, for gamma = b p^m"""
    algebra, p = datum.algebra, datum.p
    gamma = Fraction(gamma)
    depth = candidate_depth(datum) if depth is None else depth
    if gamma <= 0:
        return algebra.zero
    den = gamma.denominator
    m = -p_valuation(den, p) if den > 1 else p_valuation(gamma.numerator, p)
    if den > 1 and den != p ** -m:
        return algebra.zero
    b = gamma.numerator if den > 1 else gamma.numerator // p ** m
    total = algebra.zero
    keys = set(datum.keys)
    torsion = algebra.torsion
    if m >= 0:
        if b in keys:
            total = algebra.scale(algebra.frobenius(datum.get(b), m), b * p ** m)
        target = b * p ** m
        for a1 in sorted(keys):
            for n1 in range(torsion):
                rest = target - a1 * p ** n1
                if rest <= 0:
                    break
                n2 = p_valuation(rest, p)
                a2 = rest // p ** n2
                if n2 > n1 or a2 not in keys:
                    continue
                coeff = eta(n1, n2) * a1 * p ** n1
                total = algebra.add(total, _scaled_bracket(algebra, coeff, datum.get(a1), n1, datum.get(a2), n2))
        return total
    if -m > depth:
        return algebra.zero
    for a1 in sorted(keys):
        for n1 in range(torsion):
            a2 = b - a1 * p ** (n1 - m)
            if a2 <= 0:
                break
            if a2 in keys:
                term = _scaled_bracket(algebra, Fraction(a1 * p ** n1), datum.get(a1), n1, datum.get(a2), m)
                total = algebra.add(total, term)
    return total


def _scaled_bracket(algebra: LieAlgebra, coeff: Fraction, x: Coords, sx: int, y: Coords, sy: int) -> Coords:
    top = algebra.top.modulus
    integer = coeff.numerator * pow(coeff.denominator, -1, top)
    bracket = algebra.bracket(algebra.frobenius(x, sx), algebra.frobenius(y, sy))
    return algebra.scale(bracket, integer % top)


def lastjump_oracle(datum: LocalDatum) -> Fraction:
    """sup({0} and every candidate gamma with F_{gamma,-N}(D) != 0)"""
    depth = candidate_depth(datum)
    for gamma in reversed(jump_candidates(datum)):
        if not datum.algebra.is_zero(abrashkin_functional(datum, gamma, depth)):
            return gamma
    return Fraction(0)


def checked_lastjump(datum: LocalDatum, method: str = "auto") -> Fraction:
    """lastjump, cross-checked against the functional oracle"""
    value = lastjump(datum, method)
    oracle = lastjump_oracle(datum)
    if value != oracle:
        raise InvariantViolation(f"lastjump {value} disagrees with the functional oracle {oracle}")
    return value


def act_on_datum(g: Coords, datum: LocalDatum) -> LocalDatum:
    """(g.D)_a = D_a - 1/2 [D_a, sigma(g) + g]"""
    algebra = datum.algebra
    shift = algebra.add(algebra.frobenius(g), g)
    moved = {
        a: algebra.sub(value, algebra.scale(algebra.bracket(value, shift), algebra.half))
        for a, value in datum.items()
    }
    return LocalDatum(algebra, moved)
