"""Exact computations in quandle rings: finite quandles, augmentation-ideal
filtrations, idempotents, and the integral quandle ring of Core(Z)."""

from quandlering.errors import (
    AxiomViolation,
    CocycleViolation,
    DimensionMismatch,
    DomainMismatch,
    InvalidParam,
    NotAugmentationZero,
    NotAutomorphism,
    QuandleError,
    SizeLimit,
)
from quandlering.groups import FiniteGroup, cyclic_group, direct_product
from quandlering.quandle import Quandle, construct, from_table, properties
from quandlering.ring import GF, QQ, ZZ, RingElement, augment, multiply
from quandlering.zlattice import Lattice, contains, hnf, smith_invariants


__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "CocycleViolation",
    "DimensionMismatch",
    "DomainMismatch",
    "FiniteGroup",
    "GF",
    "InvalidParam",
    "Lattice",
    "NotAugmentationZero",
    "NotAutomorphism",
    "QQ",
    "Quandle",
    "QuandleError",
    "RingElement",
    "SizeLimit",
    "ZZ",
    "augment",
    "construct",
    "contains",
    "cyclic_group",
    "direct_product",
    "from_table",
    "hnf",
    "multiply",
    "properties",
    "smith_invariants",
]
