"""
The equation system behind property J(v)

For v > 0, a datum D satisfies J(v) when, for every b prime to p,

    p^mu sigma^mu(D_b) = -b^{-1} sum eta(n1, n2) a1 p^n1 [sigma^n1 D_a1, sigma^n2 D_a2]
        over b p^mu = a1 p^n1 + a2 p^n2, n1 >= n2 >= 0, a1 p^n1 < v, a2 p^n1 < v

with mu = mu_v(b), and for every i > 0 with b p^{-i} >= v

    0 = sum a1 p^n [sigma^{n+i} D_a1, D_a2]
        over b = a1 p^{n+i} + a2, a1 p^n < v, a2 p^n < v.

The index structure of these equations only depends on v and on the set of
keys that may be non-zero, so it is built once as an ``EquationSystem`` and
then evaluated against many data.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra.lie import Coords, LieAlgebra
from .datum import LocalDatum, Rational, ceil_log, mu, p_valuation, prime_to_p

logger = logging.getLogger(__name__)

METHODS = ("auto", "general", "exp-p")


@dataclass(frozen=True)
class Term:
    """coeff * [sigma^s1 D_a1, sigma^s2 D_a2]"""

    coeff: int
    a1: int
    s1: int
    a2: int
    s2: int


@dataclass(frozen=True)
class Equation:
    """One instance of either family; ``lhs`` marks the p^mu sigma^mu(D_b) side"""

    family: str
    b: int
    shift: int
    terms: Tuple[Term, ...]
    lhs: bool = False

    def residual(self, algebra: LieAlgebra, values: Mapping[int, Coords], frob: "FrobeniusCache") -> Coords:
        total = algebra.zero
        if self.lhs and self.b in values:
            total = algebra.scale(frob.get(self.b, self.shift), algebra.p ** self.shift)
        for term in self.terms:
            x = frob.get(term.a1, term.s1)
            y = frob.get(term.a2, term.s2)
            total = algebra.sub(total, algebra.scale(algebra.bracket(x, y), term.coeff))
        return total


class FrobeniusCache:
    """sigma^s(D_a) memoized for one evaluation"""

    def __init__(self, algebra: LieAlgebra, values: Mapping[int, Coords]):
        self.algebra = algebra
        self.values = values
        self._cache: Dict[Tuple[int, int], Coords] = {}

    def get(self, a: int, s: int) -> Coords:
        key = (a, s % self.algebra.d)
        if key not in self._cache:
            value = self.values.get(a)
            self._cache[key] = self.algebra.zero if value is None else self.algebra.frobenius(value, key[1])
        return self._cache[key]


@dataclass
class EquationSystem:
    """A list of equations over a fixed key set"""

    algebra: LieAlgebra
    v: Fraction
    keys: Tuple[int, ...]
    equations: List[Equation] = field(default_factory=list)

    def first_failure(self, values: Mapping[int, Coords]) -> Optional[Equation]:
        frob = FrobeniusCache(self.algebra, values)
        for equation in self.equations:
            if not self.algebra.is_zero(equation.residual(self.algebra, values, frob)):
                return equation
        return None

    def holds(self, values: Mapping[int, Coords]) -> bool:
        return self.first_failure(values) is None

    def __len__(self):
        return len(self.equations)


def horizon(v: Rational, p: int, d: int) -> int:
    """Largest i needed in the non-integer family; beyond it equations repeat"""
    return ceil_log(max(Fraction(v), Fraction(2)), p) + d


def integer_equation(algebra: LieAlgebra, v: Fraction, b: int, keys: Iterable[int]) -> Equation:
    """The integer-family equation at b; coefficients already carry -b^{-1} and eta"""
    p, top = algebra.p, algebra.top.modulus
    keyset = set(keys)
    m = mu(v, b, p)
    target = b * p ** m
    b_inv = pow(b, -1, top)
    terms = []
    for a1 in sorted(keyset):
        for n1 in range(algebra.torsion):
            x = a1 * p ** n1
            if x >= v or x >= target:
                break
            rest = target - x
            n2 = p_valuation(rest, p)
            a2 = rest // p ** n2
            if n2 > n1 or a2 not in keyset or a2 * p ** n1 >= v:
                continue
            coeff = -b_inv * a1 * p ** n1
            if n1 == n2:
                coeff *= algebra.half
            terms.append(Term(coeff % top, a1, n1, a2, n2))
    return Equation("integer", b, m, tuple(terms), lhs=True)


def noninteger_equations(algebra: LieAlgebra, v: Fraction, keys: Iterable[int], i_max: int) -> List[Equation]:
    """The non-integer family, one equation per (b, i) with at least one summand"""
    p, top = algebra.p, algebra.top.modulus
    keys = sorted(set(keys))
    groups: Dict[Tuple[int, int], List[Term]] = {}
    for n in range(algebra.torsion):
        scale = p ** n
        small = [a for a in keys if a * scale < v]
        for a1 in small:
            for a2 in small:
                for i in range(1, i_max + 1):
                    b = a1 * p ** (n + i) + a2
                    if b < v * p ** i:
                        break
                    groups.setdefault((b, i), []).append(Term((a1 * scale) % top, a1, n + i, a2, 0))
    return [Equation("noninteger", b, i, tuple(terms)) for (b, i), terms in sorted(groups.items())]


def j_system(algebra: LieAlgebra, v: Rational, keys: Iterable[int], extra_horizon: int = 0) -> EquationSystem:
    """All equations of J(v) that can be non-trivial for data supported on ``keys``"""
    v = Fraction(v)
    if v <= 0:
        raise ValueError(f"v must be positive, got {v}")
    keys = tuple(sorted(set(keys)))
    system = EquationSystem(algebra, v, keys)
    for b in sorted(set(prime_to_p(algebra.p, 2 * v)) | set(keys)):
        equation = integer_equation(algebra, v, b, keys)
        if equation.terms or b in keys:
            system.equations.append(equation)
    system.equations.extend(noninteger_equations(algebra, v, keys, horizon(v, algebra.p, algebra.d) + extra_horizon))
    return system


def constraint_system(algebra: LieAlgebra, v: Rational) -> EquationSystem:
    """Equations of J(v) that do not involve any D_b with b >= v

    The remaining integer equations (b >= v, where mu = 0) only define D_b, so
    the data with last jump < v correspond one to one with solutions of this
    system in the slots a < v.
    """
    v = Fraction(v)
    slots = tuple(prime_to_p(algebra.p, v))
    system = EquationSystem(algebra, v, slots)
    for b in slots:
        equation = integer_equation(algebra, v, b, slots)
        if equation.terms or mu(v, b, algebra.p) < algebra.torsion:
            system.equations.append(equation)
    system.equations.extend(noninteger_equations(algebra, v, slots, horizon(v, algebra.p, algebra.d)))
    return system


def _satisfies_J_exp_p(datum: LocalDatum, v: Fraction, extra_horizon: int = 0) -> bool:
    """J(v) in exponent p, where only the n = 0 terms survive"""
    algebra, p = datum.algebra, datum.p
    small = [a for a in datum.keys if a < v]

    def pair_sum(target: int, shift: int) -> Coords:
        total = algebra.zero
        for a1 in small:
            a2 = target - a1 * p ** shift
            if a2 in datum.support and a2 < v:
                term = algebra.bracket(algebra.frobenius(datum.get(a1), shift), datum.get(a2))
                total = algebra.add(total, algebra.scale(term, a1))
        return total

    large = set(prime_to_p(p, 2 * v, start=ceil(v))) | {b for b in datum.keys if b >= v}
    for b in sorted(large):
        expected = algebra.scale(pair_sum(b, 0), -pow(2 * b, -1, p))
        if datum.get(b) != expected:
            return False
    for b in prime_to_p(p, v):
        if not algebra.is_zero(pair_sum(b * p ** mu(v, b, p), 0)):
            return False
    for i in range(1, horizon(v, p, algebra.d) + extra_horizon + 1):
        groups: Dict[int, Coords] = {}
        for a1 in small:
            for a2 in small:
                b = a1 * p ** i + a2
                if b >= v * p ** i:
                    term = algebra.scale(algebra.bracket(algebra.frobenius(datum.get(a1), i), datum.get(a2)), a1)
                    groups[b] = algebra.add(groups.get(b, algebra.zero), term)
        if any(not algebra.is_zero(total) for total in groups.values()):
            return False
    return True


def satisfies_J(datum: LocalDatum, v: Rational, method: str = "auto", extra_horizon: int = 0) -> bool:
    """Whether D satisfies J(v), i.e. lastjump(D) < v"""
    v = Fraction(v)
    if v <= 0:
        raise ValueError(f"v must be positive, got {v}")
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}; choose from {', '.join(METHODS)}")
    if datum.is_zero():
        return True
    if method == "exp-p" or (method == "auto" and datum.algebra.spec.exponent_p):
        if not datum.algebra.spec.exponent_p:
            raise ValueError("The exponent-p equations need an algebra of exponent p")
        return _satisfies_J_exp_p(datum, v, extra_horizon)
    return j_system(datum.algebra, v, datum.keys, extra_horizon).holds(datum.support)


def constraints_hold(algebra: LieAlgebra, v: Rational, values: Mapping[int, Coords]) -> bool:
    """Whether slot values (keys < v) extend to a datum with last jump < v"""
    return constraint_system(algebra, v).holds(values)


def complete_datum(algebra: LieAlgebra, values: Mapping[int, Coords], v: Rational) -> LocalDatum:
    """Extend slot values a < v by the D_b (b >= v) that J(v) forces"""
    v = Fraction(v)
    slots = {a: value for a, value in values.items() if a < v}
    if len(slots) != len(values):
        raise ValueError(f"Slot keys must lie below v = {v}")
    completed = dict(slots)
    frob = FrobeniusCache(algebra, slots)
    for b in prime_to_p(algebra.p, 2 * v, start=ceil(v)):
        equation = integer_equation(algebra, v, b, slots)
        value = algebra.zero
        for term in equation.terms:
            bracket = algebra.bracket(frob.get(term.a1, term.s1), frob.get(term.a2, term.s2))
            value = algebra.add(value, algebra.scale(bracket, term.coeff))
        completed[b] = value
    return LocalDatum(algebra, completed)


def slightly_ramified_condition(datum: LocalDatum, m: int) -> bool:
    """D = D_1 pi^{-1} with p D_1 = 0 and [sigma^i D_1, D_1] = 0 for 0 < i <= m"""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if any(b != 1 for b in datum.keys):
        return False
    algebra = datum.algebra
    d1 = datum.get(1)
    if not algebra.is_zero(algebra.scale(d1, algebra.p)):
        return False
    for i in range(1, min(m, algebra.d) + 1):
        if not algebra.is_zero(algebra.bracket(algebra.frobenius(d1, i), d1)):
            return False
    return True


def slightly_ramified_level(v: Rational, p: int) -> int:
    """For 1 < v <= 2, the m with v in (1 + p^-(m+1), 1 + p^-m]"""
    v = Fraction(v)
    if not 1 < v <= 2:
        raise ValueError(f"v must lie in (1, 2], got {v}")
    m = 0
    while v <= 1 + Fraction(1, p ** (m + 1)):
        m += 1
    return m


def l_plus_conditions(datum: LocalDatum, l: int, m: int, variant: str = "one") -> bool:
    """Commutator conditions necessary for lastjump < l + p^-m ("one") or < l + l p^-m ("l")"""
    algebra, p = datum.algebra, datum.p
    if not 1 <= l <= p - 1 or m < 1:
        raise ValueError(f"Need 1 <= l <= p - 1 and m >= 1, got l={l}, m={m}")
    if variant == "one":
        pairs = [(i, a) for i in range(1, m + 1) for a in range(1, l + 1)]
    elif variant == "l":
        pairs = [(i, a) for i in range(1, m) for a in range(1, l)]
        pairs += [(i, l) for i in range(1, m + 1)]
    else:
        raise ValueError(f"Unknown variant {variant!r}")
    d_l = datum.get(l)
    for i, a in pairs:
        if not algebra.is_zero(algebra.bracket(algebra.frobenius(d_l, i), datum.get(a))):
            return False
    return True
