"""
Galois rings GR(p^n, d) = (Z/p^n)[X]/(f~) as a model of W_n(GF(p^d))

The field modulus f is lifted to a monic f~ over Z/p^n, and the Frobenius
lift is fixed by Hensel-lifting the root X^p of f to a root of f~. Applying
sigma then means evaluating a coefficient polynomial at that root.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, List, Sequence, Tuple

from ..errors import InvariantViolation
from .finite_field import Coeffs, FieldElement, FieldParams, poly_mulmod

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingParams:
    """GR(p^n, d) over a fixed residue field"""

    field: FieldParams
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Witt length must be at least 1, got {self.n}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def d(self) -> int:
        return self.field.d

    @property
    def modulus(self) -> int:
        """p^n, the characteristic of the ring"""
        return self.field.p ** self.n

    @property
    def size(self) -> int:
        return self.modulus ** self.d

    @cached_property
    def lifted_modulus(self) -> Coeffs:
        """The field modulus f with its coefficients read in Z/p^n.

        Any monic lift of an irreducible f defines GR(p^n, d), so no Newton
        step is needed here. Only the Frobenius root is Hensel-lifted.
        """
        return tuple(self.field.modulus)

    @cached_property
    def reduction(self) -> Coeffs:
        m = self.modulus
        return tuple((-c) % m for c in self.lifted_modulus[:-1])

    @property
    def zero(self) -> Coeffs:
        return (0,) * self.d

    @property
    def one(self) -> Coeffs:
        return (1,) + (0,) * (self.d - 1)

    # Raw arithmetic

    def reduce(self, x: Sequence[int]) -> Coeffs:
        m = self.modulus
        return tuple(int(c) % m for c in x)

    def add(self, x: Coeffs, y: Coeffs) -> Coeffs:
        m = self.modulus
        return tuple((a + b) % m for a, b in zip(x, y))

    def sub(self, x: Coeffs, y: Coeffs) -> Coeffs:
        m = self.modulus
        return tuple((a - b) % m for a, b in zip(x, y))

    def neg(self, x: Coeffs) -> Coeffs:
        m = self.modulus
        return tuple((-a) % m for a in x)

    def scale(self, x: Coeffs, c: int) -> Coeffs:
        m = self.modulus
        return tuple((a * c) % m for a in x)

    def mul(self, x: Coeffs, y: Coeffs) -> Coeffs:
        return poly_mulmod(x, y, self.reduction, self.modulus)

    def pow(self, x: Coeffs, e: int) -> Coeffs:
        result = self.one
        base = tuple(x)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def evaluate(self, poly: Sequence[int], at: Coeffs) -> Coeffs:
        """Evaluate an integer polynomial (low degree first) at a ring element"""
        result = self.zero
        for c in reversed(poly):
            result = self.add(self.mul(result, at), self.scale(self.one, c))
        return result

    def residue(self, x: Coeffs) -> Coeffs:
        p = self.p
        return tuple(c % p for c in x)

    def lift(self, a: Sequence[int]) -> Coeffs:
        """Lift residue coefficients with representatives in [0, p)"""
        return tuple(int(c) % self.p for c in a)

    def is_unit(self, x: Coeffs) -> bool:
        return any(c % self.p for c in x)

    def inverse(self, x: Coeffs) -> Coeffs:
        if not self.is_unit(x):
            raise ZeroDivisionError("Element is not a unit")
        u = self.lift(self.field.inv(self.residue(x)))
        two = self.scale(self.one, 2)
        for _ in range(self.n):
            u = self.mul(u, self.sub(two, self.mul(x, u)))
        return u

    def mul_by_p(self, x: Coeffs) -> Coeffs:
        return self.scale(x, self.p)

    def p_power_annihilates(self, x: Coeffs, k: int) -> bool:
        return not any(self.scale(x, self.p ** k))

    def valuation(self, x: Coeffs) -> int:
        """Largest v with x in p^v GR (n for zero)"""
        v = 0
        while v < self.n and all(c % self.p ** (v + 1) == 0 for c in x):
            v += 1
        return v

    # Frobenius

    @cached_property
    def frobenius_image(self) -> Coeffs:
        """sigma(X): the Hensel lift of the root X^p of the field modulus"""
        f = self.lifted_modulus
        derivative = tuple(i * c for i, c in enumerate(f))[1:]
        y = self.pow(self.generator_symbol, self.p)
        for _ in range(self.n):
            y = self.sub(y, self.mul(self.evaluate(f, y), self.inverse(self.evaluate(derivative, y))))
        if any(self.evaluate(f, y)):
            raise InvariantViolation(f"Hensel lift of the Frobenius root failed in GR({self.p}^{self.n}, {self.d})")
        if self.residue(y) != self.field.pow(self.residue(self.generator_symbol), self.p):
            raise InvariantViolation("Frobenius lift does not reduce to X^p")
        return y

    @cached_property
    def generator_symbol(self) -> Coeffs:
        """The class of X in (Z/p^n)[X]/(f~)"""
        if self.d == 1:
            return self.reduction
        return (0, 1) + (0,) * (self.d - 2)

    @cached_property
    def _frobenius_columns(self) -> List[Tuple[Coeffs, ...]]:
        """For each i < d, the images (sigma^i X)^j for j < d"""
        columns = []
        image = self.generator_symbol
        for i in range(self.d):
            powers = [self.one]
            for _ in range(1, self.d):
                powers.append(self.mul(powers[-1], image))
            columns.append(tuple(powers))
            image = self._apply_columns(self.frobenius_image_powers, image)
        if image != self.generator_symbol:
            raise InvariantViolation(f"sigma^{self.d} does not fix the generator of GR({self.p}^{self.n}, {self.d})")
        return columns

    @cached_property
    def frobenius_image_powers(self) -> Tuple[Coeffs, ...]:
        powers = [self.one]
        for _ in range(1, self.d):
            powers.append(self.mul(powers[-1], self.frobenius_image))
        return tuple(powers)

    def _apply_columns(self, powers: Tuple[Coeffs, ...], x: Coeffs) -> Coeffs:
        m = self.modulus
        out = [0] * self.d
        for c, column in zip(x, powers):
            if c:
                for j, a in enumerate(column):
                    out[j] += c * a
        return tuple(v % m for v in out)

    def frobenius(self, x: Coeffs, times: int = 1) -> Coeffs:
        """Apply sigma ``times`` times (negative values allowed)"""
        times %= self.d
        if not times:
            return tuple(x)
        return self._apply_columns(self._frobenius_columns[times], x)

    def teichmuller(self, a: Sequence[int]) -> Coeffs:
        """Multiplicative lift: the unique t over a with t^q = t"""
        y = self.lift(a)
        q = self.field.q
        for _ in range(self.n):
            nxt = self.pow(y, q)
            if nxt == y:
                break
            y = nxt
        return y

    def elements(self) -> Iterator[Coeffs]:
        return itertools.product(range(self.modulus), repeat=self.d)

    def element(self, coeffs: Sequence[int]) -> "RingElement":
        if len(coeffs) != self.d:
            raise ValueError(f"Expected {self.d} coefficients, got {len(coeffs)}")
        return RingElement(self, self.reduce(coeffs))

    def from_int(self, value: int) -> "RingElement":
        return RingElement(self, self.scale(self.one, value))

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "d": self.d, "modulus": list(self.lifted_modulus),
                "frobenius_image": list(self.frobenius_image)}


@dataclass(frozen=True)
class RingElement:
    """An element of GR(p^n, d)"""

    params: RingParams
    coeffs: Coeffs

    def _check(self, other) -> Coeffs:
        if isinstance(other, int):
            return self.params.scale(self.params.one, other)
        if other.params != self.params:
            raise ValueError("Elements belong to different rings")
        return other.coeffs

    def __add__(self, other):
        return RingElement(self.params, self.params.add(self.coeffs, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.params, self.params.sub(self.coeffs, self._check(other)))

    def __neg__(self):
        return RingElement(self.params, self.params.neg(self.coeffs))

    def __mul__(self, other):
        return RingElement(self.params, self.params.mul(self.coeffs, self._check(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return RingElement(self.params, self.params.pow(self.coeffs, e))

    def frobenius(self, times: int = 1) -> "RingElement":
        return RingElement(self.params, self.params.frobenius(self.coeffs, times))

    def residue(self) -> FieldElement:
        return FieldElement(self.params.field, self.params.residue(self.coeffs))

    def mul_by_p(self) -> "RingElement":
        return RingElement(self.params, self.params.mul_by_p(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"GR({self.params.p}^{self.params.n},{self.params.d}){list(self.coeffs)}"


@lru_cache(maxsize=None)
def ring_new(field: FieldParams, n: int) -> RingParams:
    """Create GR(p^n, d) over ``field`` and fix its Frobenius lift"""
    ring = RingParams(field, n)
    logger.debug("GR(%d^%d, %d) frobenius image %s", field.p, n, field.d, ring.frobenius_image)
    return ring


def ring_arith(op: str, x: RingElement, y: RingElement = None) -> RingElement:
    """Dispatch one of add, sub, mul, neg"""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    raise ValueError(f"Unsupported ring operation: {op}")


def frobenius_ring(x: RingElement) -> RingElement:
    return x.frobenius()


def teichmuller(ring: RingParams, a: FieldElement) -> RingElement:
    if a.params != ring.field:
        raise ValueError("Residue field mismatch")
    return RingElement(ring, ring.teichmuller(a.coeffs))


def mul_by_p(x: RingElement) -> RingElement:
    return x.mul_by_p()


def p_power_annihilates(x: RingElement, k: int) -> bool:
    return x.params.p_power_annihilates(x.coeffs, k)
