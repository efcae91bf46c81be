"""Exact invariants of one-dimensional numerical semigroup rings k[[H]].

Conductor ideals, m-adic orders, canonical and trace ideals, reflexivity and
the Gorenstein hierarchy, computed on value sets of monomial ideals.
"""

from .classify import ClassificationReport, check_prop45, classify
from .errors import (
    BadTemplate,
    EmptyGenerators,
    NonCoprime,
    NotAMember,
    NotContained,
    NSRingError,
    ParentMismatch,
    ZeroGenerator,
)
from .filtration import (
    conductor_as_power,
    hilbert_colength,
    maxlen,
    mu_of_power,
    ord_conductor,
    ord_of_ideal,
    power_of_m,
)
from .semigroup import NumericalSemigroup, apery_set, construct, contains, pseudo_frobenius
from .zideal import IdealClass, ZIdeal

__version__ = "0.1.0"

__all__ = [
    "NumericalSemigroup",
    "construct",
    "contains",
    "apery_set",
    "pseudo_frobenius",
    "ZIdeal",
    "IdealClass",
    "maxlen",
    "power_of_m",
    "ord_of_ideal",
    "ord_conductor",
    "hilbert_colength",
    "mu_of_power",
    "conductor_as_power",
    "ClassificationReport",
    "classify",
    "check_prop45",
    "NSRingError",
    "EmptyGenerators",
    "NonCoprime",
    "ZeroGenerator",
    "NotAMember",
    "NotContained",
    "ParentMismatch",
    "BadTemplate",
]
