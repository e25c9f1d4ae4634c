"""
Finite Lie Z_p-algebras of nilpotency class at most 2

A ``LieAlgebraSpec`` fixes g = prod Z/p^{n_i} with structure constants
[e_i, e_j] = c_ij for i < j. ``LieAlgebra`` is its base change
g (x) W(kappa), where coordinate i lives in GR(p^{n_i}, d), together with the
truncated BCH law x o y = x + y + 1/2 [x, y] and the twisted action
g.m = sigma(g) o m o (-g).
"""

import itertools
import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from sympy import isprime

from ..config import WildcountConfig
from ..errors import DatumError, ScaleGuardError, SpecValidationError
from .finite_field import Coeffs, FieldParams, field_new
from .galois_ring import RingParams, ring_new

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
Coords = Tuple[Coeffs, ...]


@dataclass(frozen=True)
class LieAlgebraSpec:
    """g = prod Z/p^{n_i} with brackets [e_i, e_j] = c_ij (i < j, zero pairs omitted)"""

    p: int
    orders: Tuple[int, ...]
    brackets: Tuple[Tuple[int, int, IntVector], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isprime(self.p) or self.p == 2:
            raise SpecValidationError(f"p must be an odd prime, got {self.p}")
        orders = tuple(int(n) for n in self.orders)
        if not orders or any(n < 1 for n in orders):
            raise SpecValidationError(f"Cyclic factor orders must be positive, got {list(self.orders)}")
        object.__setattr__(self, "orders", orders)
        moduli = [self.p ** n for n in orders]
        normalized = {}
        for i, j, value in self.brackets:
            i, j = int(i), int(j)
            if not (0 <= i < len(orders) and 0 <= j < len(orders)):
                raise SpecValidationError("Bracket index out of range", (i, j))
            if len(value) != len(orders):
                raise SpecValidationError("Bracket value has the wrong length", (i, j))
            if i == j:
                if any(int(c) % m for c, m in zip(value, moduli)):
                    raise SpecValidationError("[e_i, e_i] must vanish", (i,))
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if (i, j) in normalized:
                raise SpecValidationError("Bracket pair given twice", (i, j))
            reduced = tuple((sign * int(c)) % m for c, m in zip(value, moduli))
            if any(reduced):
                normalized[(i, j)] = reduced
        object.__setattr__(self, "brackets", tuple((i, j, v) for (i, j), v in sorted(normalized.items())))

    @property
    def rank(self) -> int:
        """Number of cyclic factors"""
        return len(self.orders)

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(self.p ** n for n in self.orders)

    @property
    def max_order(self) -> int:
        return max(self.orders)

    @property
    def order(self) -> int:
        """|g| = p^{sum n_i}"""
        return self.p ** sum(self.orders)

    @property
    def exponent_p(self) -> bool:
        return all(n == 1 for n in self.orders)

    @property
    def is_abelian(self) -> bool:
        return not self.brackets

    def structure(self, i: int, j: int) -> IntVector:
        """The structure constant vector of [e_i, e_j] for any ordered pair"""
        if i == j:
            return (0,) * self.rank
        for a, b, value in self.brackets:
            if (a, b) == (i, j):
                return value
            if (a, b) == (j, i):
                return tuple((-c) % m for c, m in zip(value, self.moduli))
        return (0,) * self.rank

    # Integer-vector arithmetic on g itself

    def reduce(self, x: Sequence[int]) -> IntVector:
        return tuple(int(c) % m for c, m in zip(x, self.moduli))

    def bracket_vector(self, x: Sequence[int], y: Sequence[int]) -> IntVector:
        out = [0] * self.rank
        for i, j, value in self.brackets:
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff:
                for k, c in enumerate(value):
                    out[k] += coeff * c
        return self.reduce(out)

    def basis_vector(self, i: int, scale: int = 1) -> IntVector:
        return self.reduce([scale if k == i else 0 for k in range(self.rank)])

    def vectors(self) -> Iterator[IntVector]:
        """All elements of g as integer vectors"""
        guard = WildcountConfig.scale_guard(WildcountConfig.MAX_ALGEBRA_ORDER)
        if self.order > guard:
            raise ScaleGuardError("Lie algebra enumeration", self.order, guard)
        return itertools.product(*(range(m) for m in self.moduli))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "orders": list(self.orders),
            "brackets": [{"i": i, "j": j, "value": list(v)} for i, j, v in self.brackets],
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "LieAlgebraSpec":
        try:
            brackets = tuple((int(b["i"]), int(b["j"]), tuple(int(c) for c in b["value"]))
                             for b in data.get("brackets", []))
            return cls(int(data["p"]), tuple(data["orders"]), brackets, name=name)
        except (KeyError, TypeError) as e:
            raise DatumError(f"Malformed Lie algebra description: {e}")

    def __str__(self):
        return self.name or f"g(p={self.p}, orders={list(self.orders)})"


def abelian(orders: Sequence[int], p: int) -> LieAlgebraSpec:
    """prod Z/p^{n_i} with zero bracket"""
    orders = tuple(orders)
    return LieAlgebraSpec(p, orders, (), name=f"abelian:{','.join(str(n) for n in orders)}")


def heisenberg(k: int, p: int) -> LieAlgebraSpec:
    """h_k over F_p: basis a_1..a_k, b_1..b_k, z with [a_i, b_i] = z"""
    if k < 1:
        raise SpecValidationError(f"Heisenberg rank must be positive, got {k}")
    rank = 2 * k + 1
    z = tuple(1 if t == rank - 1 else 0 for t in range(rank))
    brackets = tuple((i, k + i, z) for i in range(k))
    return LieAlgebraSpec(p, (1,) * rank, brackets, name=f"heisenberg:{k}")


def parse_algebra(source: str, p: int) -> LieAlgebraSpec:
    """Resolve "heisenberg:k", "abelian:n1,n2,..." or a JSON file path"""
    if source.startswith("heisenberg:"):
        try:
            k = int(source.split(":", 1)[1])
        except ValueError:
            raise DatumError(f"Bad Heisenberg rank in {source!r}")
        return heisenberg(k, p)
    if source.startswith("abelian:"):
        try:
            orders = [int(n) for n in source.split(":", 1)[1].split(",")]
        except ValueError:
            raise DatumError(f"Bad cyclic orders in {source!r}")
        return abelian(orders, p)
    path = Path(source)
    if not path.exists():
        raise DatumError(f"Algebra {source!r} is neither a built-in name nor an existing file")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DatumError(f"Invalid JSON in {source}: {e.msg}", e.lineno)
    spec = LieAlgebraSpec.from_json(data, name=path.stem)
    validate_spec(spec)
    return spec


def validate_spec(spec: LieAlgebraSpec) -> None:
    """Check torsion compatibility, class <= 2 and Jacobi; raise on the first violation"""
    p, rank = spec.p, spec.rank
    for i, j, value in spec.brackets:
        bound = p ** min(spec.orders[i], spec.orders[j])
        if any(c for c in spec.reduce([bound * c for c in value])):
            raise SpecValidationError("Torsion incompatible bracket", (i, j))
    basis = [spec.basis_vector(i) for i in range(rank)]
    for i, j, value in spec.brackets:
        for k in range(rank):
            if any(spec.bracket_vector(value, basis[k])):
                raise SpecValidationError("Nilpotency class > 2: bracket value is not central", (i, j, k))
    for i, j, k in itertools.combinations(range(rank), 3):
        total = [0] * rank
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = spec.structure(a, b)
            term = spec.bracket_vector(inner, basis[c])
            total = [s + t for s, t in zip(total, term)]
        if any(spec.reduce(total)):
            raise SpecValidationError("Jacobi identity fails", (i, j, k))
    subobjects(spec)


@dataclass(frozen=True)
class Subobjects:
    """Center, p-torsion and derived subalgebra of g, with the derived constants"""

    center: Tuple[IntVector, ...]
    p_torsion: Tuple[IntVector, ...]
    derived: Tuple[IntVector, ...]
    center_size: int
    derived_size: int
    r: int
    M: Fraction
    p_torsion_abelian: bool
    better_bound: bool


def _submodule(spec: LieAlgebraSpec, generators: Iterable[IntVector]) -> Set[IntVector]:
    span = {spec.reduce([0] * spec.rank)}
    for gen in generators:
        if gen in span:
            continue
        multiples = []
        x = spec.reduce([0] * spec.rank)
        while True:
            multiples.append(x)
            x = spec.reduce([a + b for a, b in zip(x, gen)])
            if not any(x):
                break
        span = {spec.reduce([a + b for a, b in zip(s, m)]) for s in span for m in multiples}
    return span


def _generating_set(spec: LieAlgebraSpec, members: Iterable[IntVector]) -> Tuple[Tuple[IntVector, ...], Set[IntVector]]:
    gens: List[IntVector] = []
    span = _submodule(spec, [])
    for x in sorted(members):
        if x not in span:
            gens.append(x)
            span = _submodule(spec, gens)
    return tuple(gens), span


@lru_cache(maxsize=None)
def subobjects(spec: LieAlgebraSpec) -> Subobjects:
    """Generating sets of Z(g), g[p], [g, g] and the constants r, M"""
    p, rank = spec.p, spec.rank
    basis = [spec.basis_vector(i) for i in range(rank)]
    center_set = [x for x in spec.vectors() if not any(any(spec.bracket_vector(x, e)) for e in basis)]
    center, center_span = _generating_set(spec, center_set)
    p_torsion = tuple(spec.basis_vector(i, p ** (n - 1)) for i, n in enumerate(spec.orders))
    derived, derived_span = _generating_set(spec, [value for _, _, value in spec.brackets])
    torsion_abelian = all(not any(spec.bracket_vector(x, y)) for x in p_torsion for y in p_torsion)
    better = True
    all_vectors = list(spec.vectors())
    for k in range(1, spec.max_order + 1):
        scaled_g = {spec.reduce([p ** k * c for c in x]) for x in all_vectors}
        scaled_n = {spec.reduce([p ** k * c for c in z]) for z in center_span}
        if {z for z in center_span if z in scaled_g} != scaled_n:
            better = False
            break
    result = Subobjects(
        center=center,
        p_torsion=p_torsion,
        derived=derived,
        center_size=len(center_span),
        derived_size=len(derived_span),
        r=rank,
        M=Fraction(1) if torsion_abelian else 1 + Fraction(1, p),
        p_torsion_abelian=torsion_abelian,
        better_bound=better,
    )
    logger.debug("subobjects of %s: |Z|=%d r=%d M=%s", spec, result.center_size, result.r, result.M)
    return result


class LieAlgebra:
    """The base change g (x) W_n(kappa), coordinate i in GR(p^{n_i}, d)"""

    def __init__(self, spec: LieAlgebraSpec, field: FieldParams):
        if field.p != spec.p:
            raise ValueError(f"Field characteristic {field.p} does not match p = {spec.p}")
        self.spec = spec
        self.field = field
        self.p = spec.p
        self.d = field.d
        self.rings: Tuple[RingParams, ...] = tuple(ring_new(field, n) for n in spec.orders)
        self.top = ring_new(field, spec.max_order)
        self.torsion = spec.max_order
        self.half = pow(2, -1, self.top.modulus)
        self._structure = tuple(
            (i, j, tuple((k, c) for k, c in enumerate(value) if c))
            for i, j, value in spec.brackets
        )

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and other.spec == self.spec and other.field == self.field

    def __hash__(self):
        return hash((self.spec, self.field))

    def __reduce__(self):
        return (base_change, (self.spec, self.field))

    def __repr__(self):
        return f"LieAlgebra({self.spec} (x) GF({self.p}^{self.d}))"

    @property
    def size(self) -> int:
        """|g (x) W(kappa)| = q^{sum n_i}"""
        return self.field.q ** sum(self.spec.orders)

    @property
    def zero(self) -> Coords:
        return tuple(ring.zero for ring in self.rings)

    # Raw arithmetic on coordinate tuples

    def add(self, x: Coords, y: Coords) -> Coords:
        return tuple(ring.add(a, b) for ring, a, b in zip(self.rings, x, y))

    def sub(self, x: Coords, y: Coords) -> Coords:
        return tuple(ring.sub(a, b) for ring, a, b in zip(self.rings, x, y))

    def neg(self, x: Coords) -> Coords:
        return tuple(ring.neg(a) for ring, a in zip(self.rings, x))

    def scale(self, x: Coords, c: int) -> Coords:
        return tuple(ring.scale(a, c) for ring, a in zip(self.rings, x))

    def frobenius(self, x: Coords, times: int = 1) -> Coords:
        return tuple(ring.frobenius(a, times) for ring, a in zip(self.rings, x))

    def is_zero(self, x: Coords) -> bool:
        return not any(any(a) for a in x)

    def bracket(self, x: Coords, y: Coords) -> Coords:
        if not self._structure:
            return self.zero
        top = self.top
        out = [list(ring.zero) for ring in self.rings]
        for i, j, targets in self._structure:
            term = top.sub(top.mul(x[i], y[j]), top.mul(x[j], y[i]))
            if not any(term):
                continue
            for k, c in targets:
                row = out[k]
                for t, a in enumerate(term):
                    row[t] += c * a
        return tuple(ring.reduce(row) for ring, row in zip(self.rings, out))

    def bch(self, x: Coords, y: Coords) -> Coords:
        """x o y = x + y + 1/2 [x, y]"""
        return self.add(self.add(x, y), self.scale(self.bracket(x, y), self.half))

    def act(self, g: Coords, m: Coords) -> Coords:
        """sigma(g) o m o (-g)"""
        return self.bch(self.bch(self.frobenius(g), m), self.neg(g))

    def artin_schreier(self, g: Coords) -> Coords:
        return self.bch(self.frobenius(g), self.neg(g))

    def is_central(self, x: Coords) -> bool:
        return all(self.is_zero(self.bracket(x, self.basis(i))) for i in range(self.spec.rank))

    def basis(self, i: int) -> Coords:
        return tuple(ring.one if k == i else ring.zero for k, ring in enumerate(self.rings))

    def coerce(self, coords: Sequence[Sequence[int]]) -> Coords:
        if len(coords) != self.spec.rank:
            raise DatumError(f"Expected {self.spec.rank} coordinates, got {len(coords)}")
        out = []
        for ring, value in zip(self.rings, coords):
            if len(value) != self.d:
                raise DatumError(f"Coordinate {list(value)} must have {self.d} coefficients")
            out.append(ring.reduce(value))
        return tuple(out)

    def from_vector(self, vector: Sequence[int]) -> Coords:
        """Embed an element of g (integer vector) with constant coefficients"""
        return tuple(ring.scale(ring.one, c) for ring, c in zip(self.rings, vector))

    # Enumeration

    def elements(self) -> Iterator[Coords]:
        """All of g (x) W(kappa) in a fixed order"""
        return itertools.product(*(list(ring.elements()) for ring in self.rings))

    def p_torsion_elements(self) -> Iterator[Coords]:
        """g[p] (x) kappa, coordinate i ranging over p^{n_i - 1} GR(p^{n_i}, d)"""
        residues = list(self.field.elements())
        per_coordinate = [
            [ring.scale(a, self.p ** (n - 1)) for a in residues]
            for ring, n in zip(self.rings, self.spec.orders)
        ]
        return itertools.product(*per_coordinate)

    def random(self, rng: random.Random) -> Coords:
        return tuple(tuple(rng.randrange(ring.modulus) for _ in range(self.d)) for ring in self.rings)

    def element(self, coords: Sequence[Sequence[int]]) -> "LieElement":
        return LieElement(self, self.coerce(coords))

    def wrap(self, coords: Coords) -> "LieElement":
        return LieElement(self, coords)


@lru_cache(maxsize=None)
def base_change(spec: LieAlgebraSpec, field: FieldParams) -> LieAlgebra:
    """g (x) W(kappa) for kappa = ``field``"""
    return LieAlgebra(spec, field)


@dataclass(frozen=True)
class LieElement:
    """An element of g (x) W(kappa)"""

    algebra: LieAlgebra = field(compare=False, repr=False)
    coords: Coords = ()

    def _other(self, other: "LieElement") -> Coords:
        if not isinstance(other, LieElement) or other.algebra != self.algebra:
            raise ValueError("Lie elements belong to different algebras or coefficient rings")
        return other.coords

    def __add__(self, other):
        return LieElement(self.algebra, self.algebra.add(self.coords, self._other(other)))

    def __sub__(self, other):
        return LieElement(self.algebra, self.algebra.sub(self.coords, self._other(other)))

    def __neg__(self):
        return LieElement(self.algebra, self.algebra.neg(self.coords))

    def __mul__(self, c: int):
        return LieElement(self.algebra, self.algebra.scale(self.coords, c))

    __rmul__ = __mul__

    def bracket(self, other: "LieElement") -> "LieElement":
        return LieElement(self.algebra, self.algebra.bracket(self.coords, self._other(other)))

    def bch(self, other: "LieElement") -> "LieElement":
        return LieElement(self.algebra, self.algebra.bch(self.coords, self._other(other)))

    def frobenius(self, times: int = 1) -> "LieElement":
        return LieElement(self.algebra, self.algebra.frobenius(self.coords, times))

    def is_zero(self) -> bool:
        return self.algebra.is_zero(self.coords)

    def to_json(self) -> List[List[int]]:
        return [list(c) for c in self.coords]


def bracket(x: LieElement, y: LieElement) -> LieElement:
    return x.bracket(y)


def bch_mul(x: LieElement, y: LieElement) -> LieElement:
    return x.bch(y)


def act(g: LieElement, m: LieElement) -> LieElement:
    return LieElement(g.algebra, g.algebra.act(g.coords, g._other(m)))


def artin_schreier_map(g: LieElement) -> LieElement:
    return LieElement(g.algebra, g.algebra.artin_schreier(g.coords))
