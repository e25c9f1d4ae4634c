"""
Truncated power series on the (1/K)-lattice and place counts of F_q(T)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, List, Tuple

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from core.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass
class RationalSeries:
    """sum_j coefficients[j] X^{j/K}, truncated after the last stored index"""

    K: int
    coefficients: List[int]

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"Lattice denominator must be positive, got {self.K}")
        if not self.coefficients:
            raise ValueError("A series needs at least its constant term")

    @classmethod
    def one(cls, K: int, length: int) -> "RationalSeries":
        return cls(K, [1] + [0] * (length - 1))

    @property
    def length(self) -> int:
        return len(self.coefficients)

    @property
    def bound(self) -> Fraction:
        """Largest exponent kept"""
        return Fraction(self.length - 1, self.K)

    def coefficient(self, exponent) -> int:
        index = Fraction(exponent) * self.K
        if index.denominator != 1:
            return 0
        index = int(index)
        if not 0 <= index < self.length:
            raise IndexError(f"Exponent {exponent} outside the truncation bound {self.bound}")
        return self.coefficients[index]

    def items(self) -> Iterator[Tuple[Fraction, int]]:
        for j, c in enumerate(self.coefficients):
            yield Fraction(j, self.K), c

    def nonzero(self) -> List[Tuple[int, int]]:
        return [(j, c) for j, c in enumerate(self.coefficients) if c]

    def stretch(self, factor: int, length: int) -> "RationalSeries":
        """f(X^factor), truncated to ``length`` lattice points"""
        out = [0] * length
        for j, c in enumerate(self.coefficients):
            if j * factor >= length:
                break
            out[j * factor] = c
        return RationalSeries(self.K, out)

    def mul(self, other: "RationalSeries", length: int = None) -> "RationalSeries":
        if other.K != self.K:
            raise ValueError(f"Series live on different lattices: 1/{self.K} and 1/{other.K}")
        length = length or min(self.length, other.length)
        out = [0] * length
        right = other.nonzero()
        for i, a in self.nonzero():
            if i >= length:
                break
            for j, b in right:
                if i + j >= length:
                    break
                out[i + j] += a * b
        return RationalSeries(self.K, out)

    __mul__ = mul

    def pow(self, exponent: int, length: int = None) -> "RationalSeries":
        """Truncated power by repeated squaring"""
        if exponent < 0:
            raise ValueError(f"Negative powers are not supported, got {exponent}")
        length = length or self.length
        result = RationalSeries.one(self.K, length)
        base = RationalSeries(self.K, (self.coefficients + [0] * length)[:length])
        while exponent:
            if exponent & 1:
                result = result.mul(base, length)
            exponent >>= 1
            if exponent:
                base = base.mul(base, length)
        return result


def places_of_degree(q: int, deg: int) -> int:
    """Number of places of F_q(T) of degree deg, the place at infinity included"""
    if deg < 1:
        raise ValueError(f"Place degree must be positive, got {deg}")
    if deg == 1:
        return q + 1
    total = sum(int(mobius(e)) * q ** (deg // e) for e in divisors(deg))
    return total // deg


def zeta_check(q: int, deg_max: int) -> List[int]:
    """Expand prod_P (1 - X^deg P)^-1 up to deg_max and compare with 1/((1-X)(1-qX))"""
    series = RationalSeries.one(1, deg_max + 1)
    for deg in range(1, deg_max + 1):
        places = places_of_degree(q, deg)
        factor = [0] * (deg_max + 1)
        for k in range(deg_max // deg + 1):
            factor[k * deg] = comb(places + k - 1, k)
        series = series.mul(RationalSeries(1, factor), deg_max + 1)
    expected = [(q ** (n + 1) - 1) // (q - 1) for n in range(deg_max + 1)]
    if series.coefficients != expected:
        raise InvariantViolation(f"Zeta function of F_{q}(T) mismatch: {series.coefficients} != {expected}")
    return series.coefficients
