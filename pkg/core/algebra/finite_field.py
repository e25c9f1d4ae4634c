"""
Finite field arithmetic in GF(p^d)

Elements are coefficient vectors (low degree first) over Z/p, reduced
modulo a monic irreducible polynomial. The modulus is chosen
deterministically as the lexicographically smallest monic irreducible of
degree d, so every stream and count is reproducible.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, List, Sequence, Tuple

from sympy import factorint, isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcd, gf_pow_mod, gf_rem, gf_sub

from ..config import WildcountConfig

logger = logging.getLogger(__name__)

Coeffs = Tuple[int, ...]

# Fields up to this size get a full multiplication table
_TABLE_LIMIT = 729


def poly_mulmod(x: Sequence[int], y: Sequence[int], reduction: Coeffs, modulus: int) -> Coeffs:
    """Multiply two coefficient vectors modulo a monic polynomial and an integer modulus.

    ``reduction`` holds the coefficients r_j with X^d = sum r_j X^j.
    """
    d = len(reduction)
    prod = [0] * (2 * d - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    prod[i + j] += a * b
    for top in range(2 * d - 2, d - 1, -1):
        c = prod[top] % modulus
        if c:
            base = top - d
            for j, r in enumerate(reduction):
                if r:
                    prod[base + j] += c * r
    return tuple(c % modulus for c in prod[:d])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p).

    ``modulus`` is given low degree first. The polynomial is irreducible iff it
    divides X^{p^d} - X and is coprime to X^{p^{d/r}} - X for every prime r | d.
    """
    f = [int(c) % p for c in reversed(modulus)]
    d = len(f) - 1
    if d < 1 or f[0] != 1:
        return False
    x = [1, 0]
    full = gf_rem(gf_sub(gf_pow_mod(x, p ** d, f, p, ZZ), x, p, ZZ), f, p, ZZ)
    if full:
        return False
    for r in primefactors(d):
        partial = gf_sub(gf_pow_mod(x, p ** (d // r), f, p, ZZ), x, p, ZZ)
        if gf_gcd(f, partial, p, ZZ) != [1]:
            return False
    return True


@dataclass(frozen=True)
class FieldParams:
    """GF(p^d) given by a monic irreducible modulus (low degree first)"""

    p: int
    d: int
    modulus: Coeffs = field(default=())

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"Characteristic must be prime, got {self.p}")
        if self.p == 2:
            raise ValueError("Characteristic 2 is not supported")
        if not 1 <= self.d <= WildcountConfig.MAX_FIELD_DEGREE:
            raise ValueError(f"Field degree must lie in 1..{WildcountConfig.MAX_FIELD_DEGREE}, got {self.d}")
        if not self.modulus:
            object.__setattr__(self, "modulus", smallest_irreducible(self.p, self.d))
        modulus = tuple(int(c) % self.p for c in self.modulus)
        if len(modulus) != self.d + 1 or modulus[-1] != 1:
            raise ValueError(f"Modulus must be monic of degree {self.d}: {list(self.modulus)}")
        if not is_irreducible(modulus, self.p):
            raise ValueError(f"Modulus {list(modulus)} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", modulus)

    @property
    def q(self) -> int:
        return self.p ** self.d

    @cached_property
    def reduction(self) -> Coeffs:
        return tuple((-c) % self.p for c in self.modulus[:-1])

    @property
    def zero(self) -> Coeffs:
        return (0,) * self.d

    @property
    def one(self) -> Coeffs:
        return (1,) + (0,) * (self.d - 1)

    # Raw arithmetic on coefficient tuples

    def add(self, x: Coeffs, y: Coeffs) -> Coeffs:
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def sub(self, x: Coeffs, y: Coeffs) -> Coeffs:
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def neg(self, x: Coeffs) -> Coeffs:
        p = self.p
        return tuple((-a) % p for a in x)

    def scale(self, x: Coeffs, c: int) -> Coeffs:
        p = self.p
        return tuple((a * c) % p for a in x)

    def mul(self, x: Coeffs, y: Coeffs) -> Coeffs:
        return poly_mulmod(x, y, self.reduction, self.p)

    def pow(self, x: Coeffs, e: int) -> Coeffs:
        if e < 0:
            return self.pow(self.inv(x), -e)
        result = self.one
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: Coeffs) -> Coeffs:
        if not any(x):
            raise ZeroDivisionError("Cannot invert zero")
        return self.pow(x, self.q - 2)

    def frobenius(self, x: Coeffs, times: int = 1) -> Coeffs:
        """Apply x -> x^p ``times`` times"""
        times %= self.d
        if not times:
            return tuple(x)
        if self.q <= _TABLE_LIMIT:
            table = self._frobenius_tables[times]
            return self.decode(table[self.encode(x)])
        return self.pow(x, self.p ** times)

    def trace(self, x: Coeffs) -> int:
        """Trace to the prime field, as a residue mod p"""
        total = self.zero
        y = tuple(x)
        for _ in range(self.d):
            total = self.add(total, y)
            y = self.frobenius(y)
        if any(total[1:]):
            raise ArithmeticError(f"Trace {total} left the prime field")
        return total[0]

    # Integer encoding used by the brute-force counters

    def encode(self, x: Sequence[int]) -> int:
        value = 0
        for c in reversed(x):
            value = value * self.p + c
        return value

    def decode(self, index: int) -> Coeffs:
        out = []
        for _ in range(self.d):
            index, c = divmod(index, self.p)
            out.append(c)
        return tuple(out)

    @cached_property
    def _frobenius_tables(self) -> List[List[int]]:
        tables = [list(range(self.q))]
        base = [self.encode(self.pow(self.decode(i), self.p)) for i in range(self.q)]
        for _ in range(1, self.d):
            prev = tables[-1]
            tables.append([base[j] for j in prev])
        return tables

    @cached_property
    def mul_table(self) -> List[List[int]]:
        """Multiplication table on encoded elements (small fields only)"""
        if self.q > _TABLE_LIMIT:
            raise ValueError(f"No multiplication table for q = {self.q}")
        elements = [self.decode(i) for i in range(self.q)]
        return [[self.encode(self.mul(x, y)) for y in elements] for x in elements]

    @cached_property
    def add_table(self) -> List[List[int]]:
        if self.q > _TABLE_LIMIT:
            raise ValueError(f"No addition table for q = {self.q}")
        elements = [self.decode(i) for i in range(self.q)]
        return [[self.encode(self.add(x, y)) for y in elements] for x in elements]

    @cached_property
    def neg_table(self) -> List[int]:
        return [self.encode(self.neg(self.decode(i))) for i in range(self.q)]

    @property
    def has_tables(self) -> bool:
        return self.q <= _TABLE_LIMIT

    def frobenius_table(self, times: int = 1) -> List[int]:
        """Encoded image of every element under sigma^times"""
        if self.q <= _TABLE_LIMIT:
            return self._frobenius_tables[times % self.d]
        return [self.encode(self.frobenius(self.decode(i), times)) for i in range(self.q)]

    def elements(self) -> Iterator[Coeffs]:
        """All elements, lexicographic on coefficient vectors"""
        return itertools.product(range(self.p), repeat=self.d)

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.d:
            raise ValueError(f"Expected {self.d} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def from_int(self, value: int) -> "FieldElement":
        return FieldElement(self, (value % self.p,) + (0,) * (self.d - 1))

    def to_json(self) -> dict:
        return {"p": self.p, "d": self.d, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldParams":
        try:
            return cls(int(data["p"]), int(data["d"]), tuple(data.get("modulus") or ()))
        except KeyError as e:
            raise ValueError(f"Field description is missing {e}")


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^d)"""

    params: FieldParams
    coeffs: Coeffs

    def _check(self, other: "FieldElement") -> Coeffs:
        if isinstance(other, int):
            return self.params.from_int(other).coeffs
        if other.params != self.params:
            raise ValueError("Elements belong to different fields")
        return other.coeffs

    def __add__(self, other):
        return FieldElement(self.params, self.params.add(self.coeffs, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.params, self.params.sub(self.coeffs, self._check(other)))

    def __neg__(self):
        return FieldElement(self.params, self.params.neg(self.coeffs))

    def __mul__(self, other):
        return FieldElement(self.params, self.params.mul(self.coeffs, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.params, self.params.mul(self.coeffs, self.params.inv(self._check(other))))

    def __pow__(self, e: int):
        return FieldElement(self.params, self.params.pow(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.params, self.params.inv(self.coeffs))

    def frobenius(self, times: int = 1) -> "FieldElement":
        return FieldElement(self.params, self.params.frobenius(self.coeffs, times))

    def trace(self) -> int:
        return self.params.trace(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"GF({self.params.p}^{self.params.d}){list(self.coeffs)}"


def smallest_irreducible(p: int, d: int) -> Coeffs:
    """Lexicographically smallest monic irreducible of degree d (low degree first).

    Candidates are ordered by their coefficient list from the highest
    non-leading degree down to the constant term.
    """
    for tail in itertools.product(range(p), repeat=d):
        modulus = tuple(reversed(tail)) + (1,)
        if is_irreducible(modulus, p):
            logger.debug("GF(%d^%d) modulus %s", p, d, modulus)
            return modulus
    raise ArithmeticError(f"No irreducible polynomial of degree {d} over GF({p})")


@lru_cache(maxsize=None)
def field_new(p: int, d: int) -> FieldParams:
    """Create GF(p^d) with its deterministic modulus"""
    return FieldParams(p, d)


def field_arith(op: str, x: FieldElement, y: FieldElement = None) -> FieldElement:
    """Dispatch one of add, sub, mul, inv, pow"""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x ** y
    raise ValueError(f"Unsupported field operation: {op}")


def frobenius_field(x: FieldElement) -> FieldElement:
    return x.frobenius()


def trace_to_prime_field(x: FieldElement) -> int:
    return x.trace()


def enumerate_field(params: FieldParams) -> Iterator[FieldElement]:
    """Yield every element exactly once, lexicographic on coefficient vectors"""
    for coeffs in params.elements():
        yield FieldElement(params, coeffs)


def field_from_order(q: int) -> FieldParams:
    """GF(q) for a prime power q"""
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"Field size must be a prime power, got {q}")
    (p, d), = factors.items()
    return field_new(p, d)
