"""
The symplectic space F_q^{2k} = h_k / Z(h_k) (x) F_q and its isotropic subspaces

Vectors are pairs (a, b) of length-k coordinate vectors. Field elements are
handled as encoded integers so that the brute-force counters can work on
numpy arrays through the field's lookup tables.
"""

import itertools
import logging
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from core.algebra.finite_field import FieldParams, field_new
from core.config import WildcountConfig
from core.errors import InvariantViolation, ScaleGuardError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class SymplecticSpace:
    """F_q^{2k} with f_k((a, b), (a', b')) = a.b' - b.a'"""

    def __init__(self, k: int, field: FieldParams):
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        self.k = k
        self.field = field
        self.q = field.q
        self.dim = 2 * k

    @property
    def size(self) -> int:
        return self.q ** self.dim

    # Encoded table arithmetic

    @cached_property
    def tables(self) -> "FieldTables":
        return FieldTables(self.field)

    def form(self, x: Sequence[int], y: Sequence[int]) -> int:
        """f_k on encoded coordinates"""
        t = self.tables
        k = self.k
        total = 0
        for j in range(k):
            total = t.add[total, t.mul[x[j], y[k + j]]]
            total = t.add[total, t.neg[t.mul[x[k + j], y[j]]]]
        return int(total)

    def frobenius(self, x: Sequence[int], times: int = 1) -> Vector:
        table = self.tables.frobenius(times)
        return tuple(int(table[c]) for c in x)

    def basis(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def check_form(self) -> None:
        """Spot-check that f_k is alternating and non-degenerate on basis pairs"""
        basis = [self.basis(i) for i in range(self.dim)]
        for x in basis:
            if self.form(x, x) != 0:
                raise InvariantViolation("f_k is not alternating")
            if not any(self.form(x, y) for y in basis):
                raise InvariantViolation("f_k is degenerate")
        for x, y in itertools.combinations(basis, 2):
            if self.form(x, y) != self.tables.neg[self.form(y, x)]:
                raise InvariantViolation("f_k is not antisymmetric")

    def block(self, first: int) -> np.ndarray:
        """All vectors with first coordinate ``first``, one per row"""
        rest = self.dim - 1
        index = np.arange(self.q ** rest, dtype=np.int64)
        columns = [np.full(index.shape, first, dtype=np.int64)]
        for _ in range(rest):
            columns.append(index % self.q)
            index = index // self.q
        return np.stack(columns, axis=1)

    def form_rows(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """f_k applied row by row"""
        t = self.tables
        k = self.k
        total = np.zeros(x.shape[0], dtype=np.int64)
        for j in range(k):
            total = t.add[total, t.mul[x[:, j], y[:, k + j]]]
            total = t.add[total, t.neg[t.mul[x[:, k + j], y[:, j]]]]
        return total


class FieldTables:
    """numpy lookup tables for a field small enough to tabulate"""

    def __init__(self, field: FieldParams):
        if not field.has_tables:
            raise ScaleGuardError(f"Lookup tables for GF({field.q})", field.q, 729)
        self.field = field
        self.mul = np.array(field.mul_table, dtype=np.int64)
        self.add = np.array(field.add_table, dtype=np.int64)
        self.neg = np.array(field.neg_table, dtype=np.int64)
        self._frobenius = [np.array(field.frobenius_table(i), dtype=np.int64) for i in range(field.d)]

    def frobenius(self, times: int) -> np.ndarray:
        return self._frobenius[times % self.field.d]

    def power(self, exponent: int) -> np.ndarray:
        """x -> x^exponent on every encoded element"""
        f = self.field
        return np.array([f.encode(f.pow(f.decode(i), exponent)) for i in range(f.q)], dtype=np.int64)


def _echelon_bases(p: int, dim: int, rank: int) -> Iterator[List[Vector]]:
    """Reduced row echelon bases of every rank-dimensional subspace of F_p^dim"""
    for pivots in itertools.combinations(range(dim), rank):
        free = [(r, c) for r, pivot in enumerate(pivots) for c in range(pivot + 1, dim) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * dim for _ in range(rank)]
            for r, pivot in enumerate(pivots):
                rows[r][pivot] = 1
            for (r, c), value in zip(free, values):
                rows[r][c] = value
            yield [tuple(row) for row in rows]


def maximal_isotropic_subspaces(p: int, k: int) -> List[List[Vector]]:
    """Bases of all k-dimensional totally isotropic subspaces of F_p^{2k}"""
    guard = WildcountConfig.scale_guard(WildcountConfig.ISOTROPIC_GUARD)
    if p ** (2 * k) > guard:
        raise ScaleGuardError("Isotropic subspace enumeration", p ** (2 * k), guard)
    space = SymplecticSpace(k, field_new(p, 1))
    found = []
    for basis in _echelon_bases(p, 2 * k, k):
        if all(space.form(x, y) == 0 for x, y in itertools.combinations(basis, 2)):
            found.append(basis)
    logger.debug("found %d maximal isotropic subspaces of F_%d^%d", len(found), p, 2 * k)
    return found


def isotropic_formula(p: int, k: int) -> int:
    """prod_{i=1..k} (p^i + 1)"""
    total = 1
    for i in range(1, k + 1):
        total *= p ** i + 1
    return total


def isotropic_count(p: int, k: int) -> Tuple[int, int]:
    """(brute force, closed form) counts of maximal isotropic subspaces"""
    brute = len(maximal_isotropic_subspaces(p, k))
    formula = isotropic_formula(p, k)
    if brute != formula:
        raise InvariantViolation(f"isotropic count at (p={p}, k={k}): brute force {brute}, formula {formula}")
    return brute, formula
