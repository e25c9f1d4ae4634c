"""Finite fields, Galois rings and class-2 Lie algebras over them"""

from .finite_field import FieldElement, FieldParams, field_from_order, field_new
from .galois_ring import RingElement, RingParams, ring_new
from .lie import LieAlgebra, LieAlgebraSpec, LieElement, abelian, base_change, heisenberg, parse_algebra, subobjects, validate_spec

__all__ = [
    "FieldElement",
    "FieldParams",
    "field_from_order",
    "field_new",
    "RingElement",
    "RingParams",
    "ring_new",
    "LieAlgebra",
    "LieAlgebraSpec",
    "LieElement",
    "abelian",
    "base_change",
    "heisenberg",
    "parse_algebra",
    "subobjects",
    "validate_spec",
]
