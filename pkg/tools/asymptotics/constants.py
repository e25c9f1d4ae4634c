"""
Growth constants (A, S, B, M) of global last-jump counts

A table lists, for lattice exponents n, local estimates
a_{P,n} = b_n |kappa_P|^{e_n} + O(|kappa_P|^{k_n}). A row may stand for a
whole range [n, until) of exponents sharing one estimate; (k + 1)/n is
largest at the lower end, so the hypothesis is checked there. Rows with
k = None contribute nothing to the hypothesis (the -infinity convention).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Tuple

from core.algebra.lie import LieAlgebraSpec, heisenberg, subobjects
from core.errors import InvariantViolation
from core.ramification.datum import format_jump

from ..heisenberg.symplectic import isotropic_formula

logger = logging.getLogger(__name__)

# Finite rows are listed up to l = TABLE_DEPTH * p; the tail bound covers the rest
TABLE_DEPTH = 3


@dataclass(frozen=True)
class AsymptoticsRow:
    n: Fraction
    b: int = 0
    e: Fraction = Fraction(0)
    k: Optional[Fraction] = None
    until: Optional[Fraction] = None
    label: str = ""


@dataclass
class AsymptoticsInput:
    rows: List[AsymptoticsRow]
    tail_bound: Optional[Fraction] = None
    tail_label: str = ""

    def __post_init__(self):
        for row in self.rows:
            if row.n <= 0:
                raise ValueError(f"Table exponents must be positive, got {row.n}")
            if row.b < 0:
                raise ValueError(f"Leading coefficients must be non-negative, got {row.b}")


@dataclass
class AsymptoticsReport:
    A: Fraction
    S: Tuple[Fraction, ...]
    B: int
    M: Fraction
    hypothesis_ok: bool
    flags: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "A": format_jump(self.A),
            "B": self.B,
            "M": format_jump(self.M),
            "S": [format_jump(n) for n in self.S],
            "hypothesis_ok": self.hypothesis_ok,
            "flags": list(self.flags),
        }


def rational_lcm(values) -> Fraction:
    """Smallest positive M with M Z equal to the intersection of the n Z"""
    values = [Fraction(v) for v in values]
    if not values:
        raise ValueError("lcm of an empty set")
    numerator = lcm(*(v.numerator for v in values))
    denominator = gcd(*(v.denominator for v in values))
    return Fraction(numerator, denominator)


def analytic_constants(table: AsymptoticsInput) -> AsymptoticsReport:
    leading = [row for row in table.rows if row.b]
    if not leading:
        raise ValueError("At least one row needs a non-zero leading coefficient")
    ratios = {row.n: (row.e + 1) / row.n for row in leading}
    A = max(ratios.values())
    S = tuple(sorted(n for n, ratio in ratios.items() if ratio == A))
    B = sum(row.b for row in leading if row.n in S)
    M = rational_lcm(S)

    flags = []
    hypothesis_ok = True
    for row in table.rows:
        if row.k is None:
            continue
        if (row.k + 1) / row.n >= A:
            hypothesis_ok = False
            flags.append(f"error term too large at n={format_jump(row.n)} {row.label}".rstrip())
    if table.tail_bound is None:
        flags.append("tail rows not inspected")
    elif table.tail_bound >= A:
        hypothesis_ok = False
        flags.append(f"tail bound {format_jump(table.tail_bound)} {table.tail_label} is not below A".rstrip())
    return AsymptoticsReport(A, S, B, M, hypothesis_ok, flags)


# Heisenberg algebras h_k


def heisenberg_table(p: int, k: int) -> AsymptoticsInput:
    if p < 3 or k < 1:
        raise ValueError(f"Need an odd prime p and k >= 1, got p={p}, k={k}")
    rows = [AsymptoticsRow(Fraction(1), isotropic_formula(p, k), Fraction(k + 1), Fraction(k), label="n=1")]
    for m in range(k):
        n = 1 + Fraction(1, p ** (m + 1))
        rows.append(AsymptoticsRow(n, 1, Fraction(2 * k + 1 - m), Fraction(2 * k - m), label=f"n(m={m})"))

    def second(l: int) -> Fraction:
        return Fraction((l - 1) * (2 * k + 1) + 1)

    for l in range(2, p):
        rows.append(AsymptoticsRow(Fraction(l), k=max(Fraction(l * (k + 1)), second(l)),
                                   until=l + Fraction(1, p ** k), label=f"case I l={l}"))
        for m in range(1, k + 1):
            rows.append(AsymptoticsRow(l + Fraction(1, p ** m), k=max(Fraction(l * (2 * k + 2 - m) - 1), second(l)),
                                       until=l + Fraction(l, p ** m), label=f"case II l={l} m={m}"))
        for m in range(k):
            rows.append(AsymptoticsRow(l + Fraction(l, p ** (m + 1)), k=max(Fraction(l * (2 * k + 1 - m)), second(l)),
                                       until=l + Fraction(1, p ** m), label=f"case III l={l} m={m}"))
    for l in range(p, TABLE_DEPTH * p + 1):
        rows.append(AsymptoticsRow(Fraction(l), k=Fraction((l - l // p) * (2 * k + 1)),
                                   until=Fraction(l + 1), label=f"case IV l={l}"))
    tail = (1 - Fraction(1, p ** 2)) * (2 * k + 1)
    return AsymptoticsInput(rows, tail, f"case IV l>{TABLE_DEPTH * p}")


def _expected_b(p: int, k: int) -> int:
    if (p, k) == (3, 1):
        return 5
    if p == 3:
        m = 0
        while (3 ** (m + 2) + 2 * m - 1) // 4 <= k:
            if (3 ** (m + 2) + 2 * m - 1) == 4 * k:
                return 2
            m += 1
    return 1


def heisenberg_constants(p: int, k: int) -> AsymptoticsReport:
    report = analytic_constants(heisenberg_table(p, k))
    expected = _expected_b(p, k)
    if report.B != expected:
        raise InvariantViolation(f"h_{k} at p={p}: B = {report.B}, the trichotomy predicts {expected}")
    if (p, k) == (3, 1) and report.A != 3:
        raise InvariantViolation(f"h_1 at p=3: A = {report.A}, expected 3")
    logger.debug("h_%d at p=%d: A=%s B=%d M=%s", k, p, report.A, report.B, report.M)
    return report


# Main counting theorem


def main_theorem_table(spec: LieAlgebraSpec) -> Tuple[AsymptoticsInput, List[str]]:
    """Rows of the main counting estimate, and the flags for unmet hypotheses"""
    info = subobjects(spec)
    p, r = spec.p, info.r
    depth = TABLE_DEPTH * p
    flags = []
    if info.p_torsion_abelian:
        eps = Fraction(1, 4)
        rows = [AsymptoticsRow(Fraction(1), 1, Fraction(r), Fraction(0), label="n=1")]
        for l in range(2, depth + 1):
            rows.append(AsymptoticsRow(Fraction(l), k=l * eps + l * r, until=Fraction(l + 1), label=f"l={l}"))
        return AsymptoticsInput(rows, eps + r + Fraction(1, depth + 1), f"l>{depth}"), flags

    if r < p:
        eps = min(Fraction(1, 4), Fraction(p - r, 2 * (p + 1)))
    else:
        eps = Fraction(1, 4)
    if r > p - 1:
        flags.append(f"|g[p]| = {p}^{r} exceeds {p}^{p - 1}: the counting theorem does not apply")
    rows = [AsymptoticsRow(1 + Fraction(1, p), 1, Fraction(r), Fraction(r - 1), label="n=1+1/p")]
    for l in range(2, p):
        rows.append(AsymptoticsRow(l + Fraction(l, p), k=l * eps + l * r, until=Fraction(l + 1),
                                   label=f"l={l} upper"))
    for l in range(1, depth + 1):
        until = l + Fraction(l, p) if l < p else Fraction(l + 1)
        rows.append(AsymptoticsRow(Fraction(l), k=l * eps + l * r - 1, until=until, label=f"l={l}"))
    return AsymptoticsInput(rows, eps + r, f"l>{depth}"), flags


def main_theorem_constants(spec: LieAlgebraSpec) -> AsymptoticsReport:
    table, flags = main_theorem_table(spec)
    report = analytic_constants(table)
    info = subobjects(spec)
    if report.M != info.M or report.B != 1 or report.A != (info.r + 1) / info.M:
        raise InvariantViolation(
            f"{spec.name}: table gives A={report.A}, B={report.B}, M={report.M}; "
            f"expected A={(info.r + 1) / info.M}, B=1, M={info.M}"
        )
    report.flags = flags + report.flags
    return report


def constants_for_heisenberg_spec(p: int, k: int) -> Tuple[AsymptoticsReport, AsymptoticsReport]:
    """Dedicated and generic reports for h_k, for comparing the two A values"""
    return heisenberg_constants(p, k), main_theorem_constants(heisenberg(k, p))
