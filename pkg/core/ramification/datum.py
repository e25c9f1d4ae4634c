"""
Local data D = sum_b D_b pi^{-b} and the exact rational helpers around them
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from ..algebra.finite_field import FieldParams
from ..algebra.lie import Coords, LieAlgebra, LieAlgebraSpec, base_change, validate_spec
from ..errors import DatumError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def ceil_log(x: Rational, p: int) -> int:
    """Least k >= 0 with p^k >= x"""
    x = Fraction(x)
    k = 0
    power = 1
    while power < x:
        power *= p
        k += 1
    return k


def mu(v: Rational, b: int, p: int) -> int:
    """min{k >= 0 : b p^k >= v}"""
    v = Fraction(v)
    if v <= 0:
        raise ValueError(f"v must be positive, got {v}")
    if b < 1 or b % p == 0:
        raise ValueError(f"b must be a positive integer prime to {p}, got {b}")
    k = 0
    value = b
    while value < v:
        value *= p
        k += 1
    return k


def eta(n1: int, n2: int) -> Fraction:
    """1 if n1 > n2, 1/2 if n1 == n2"""
    if n1 < n2:
        raise ValueError(f"eta needs n1 >= n2, got ({n1}, {n2})")
    return Fraction(1) if n1 > n2 else Fraction(1, 2)


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def prime_to_p(p: int, below: Rational, start: int = 1) -> List[int]:
    """Positive integers b with p not dividing b and start <= b < below"""
    bound = Fraction(below)
    out = []
    b = start
    while b < bound:
        if b % p:
            out.append(b)
        b += 1
    return out


def format_jump(value: Rational) -> str:
    """Lowest-terms "num/den" rendering used by every output"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise DatumError(f"Not a rational number: {text!r}")
    return value


def check_jump_value(value: Rational, p: int, group_order: int) -> Fraction:
    """A jump is a non-negative rational whose denominator is a power of p dividing |G|"""
    value = Fraction(value)
    if value < 0:
        raise ValueError(f"Jump values are non-negative, got {value}")
    den = value.denominator
    while den % p == 0:
        den //= p
    if den != 1 or group_order % value.denominator:
        raise ValueError(f"Jump {format_jump(value)} does not have a denominator dividing |G| = {group_order}")
    return value


@dataclass
class LocalDatum:
    """A finite element sum_b D_b pi^{-b} of g (x) D over kappa((pi))"""

    algebra: LieAlgebra = field(repr=False)
    support: Dict[int, Coords] = field(default_factory=dict)

    def __post_init__(self):
        p = self.algebra.p
        normalized = {}
        for b, value in sorted(self.support.items()):
            b = int(b)
            if b < 1 or b % p == 0:
                raise DatumError(f"Support key {b} must be a positive integer prime to {p}")
            if not self.algebra.is_zero(value):
                normalized[b] = tuple(value)
        self.support = normalized

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def keys(self) -> Tuple[int, ...]:
        return tuple(self.support)

    @property
    def max_key(self) -> int:
        return max(self.support, default=0)

    def get(self, b: int) -> Coords:
        return self.support.get(b, self.algebra.zero)

    def is_zero(self) -> bool:
        return not self.support

    def items(self) -> Iterator[Tuple[int, Coords]]:
        return iter(self.support.items())

    def __eq__(self, other):
        return isinstance(other, LocalDatum) and other.algebra == self.algebra and other.support == self.support

    def to_json(self) -> dict:
        return {
            "field": self.algebra.field.to_json(),
            "algebra": self.algebra.spec.to_json(),
            "support": [{"b": b, "value": [list(c) for c in value]} for b, value in self.support.items()],
        }

    @classmethod
    def from_values(cls, algebra: LieAlgebra, values: Mapping[int, Sequence[Sequence[int]]]) -> "LocalDatum":
        return cls(algebra, {b: algebra.coerce(v) for b, v in values.items()})


def datum_from_json(data: dict, algebra: LieAlgebra = None) -> LocalDatum:
    """Build a datum from its JSON form; an explicit ``algebra`` overrides the embedded one"""
    if not isinstance(data, dict):
        raise DatumError("Datum must be a JSON object")
    if algebra is None:
        if "field" not in data or "algebra" not in data:
            raise DatumError("Datum needs 'field' and 'algebra' entries when no algebra is given")
        try:
            field_params = FieldParams.from_json(data["field"])
        except (TypeError, ValueError) as e:
            raise DatumError(f"Bad field description: {e}")
        spec = LieAlgebraSpec.from_json(data["algebra"])
        validate_spec(spec)
        algebra = base_change(spec, field_params)
    values = {}
    for entry in data.get("support", []):
        try:
            b = int(entry["b"])
            value = entry["value"]
        except (KeyError, TypeError, ValueError):
            raise DatumError(f"Support entries need integer 'b' and a 'value', got {entry!r}")
        if b in values:
            raise DatumError(f"Support key {b} given twice")
        values[b] = value
    return LocalDatum.from_values(algebra, values)


def load_datum(path: Union[str, Path], algebra: LieAlgebra = None) -> LocalDatum:
    """Read a LocalDatum JSON file, reporting parse errors with their line"""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise DatumError(f"Cannot read datum file {path}: {e.strerror}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DatumError(f"Invalid JSON in {path}: {e.msg}", e.lineno)
    datum = datum_from_json(data, algebra)
    logger.debug("loaded datum with support %s from %s", datum.keys, path)
    return datum
