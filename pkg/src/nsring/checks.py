"""Data-driven golden checks of published facts about specific semigroup rings.

Each case in the bundled manifest names a semigroup and a list of facts
``{"field", "expected", "provenance"}``.  A field is either a report field or
one of the quantities registered in :data:`QUANTITIES`; fields of the form
``name(arg)`` take one integer argument.  A fact flagged ``informational`` is a
claim known not to match the value-set computation: a mismatch there is shown
but does not fail the case.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Any, Callable

from .classify import REPORT_FIELDS, check_prop45, classify
from .enumeration import colength_ideals
from .filtration import (
    conductor_as_power,
    hilbert_colength,
    maxlen,
    mu_of_power,
    ord_conductor,
)
from .semigroup import NumericalSemigroup, construct
from .zideal import (
    ZIdeal,
    bidual,
    canonical_ideal,
    colength,
    colon,
    conductor_ideal,
    dual,
    is_reflexive,
    maximal_ideal,
    trace,
    whole_ring,
)

__all__ = ["QUANTITIES", "Fact", "CaseResult", "load_manifest", "evaluate", "run_cases", "ring_shift"]


def ring_shift(E: ZIdeal) -> ZIdeal:
    """The translate E + z ⊆ H with the least z."""
    R = whole_ring(E.parent)
    z = -E.lo
    while not E.shift(z).issubset(R):
        z += 1
    return E.shift(z)


def _label(E: ZIdeal) -> str:
    H = E.parent
    for name, ref in (("R", whole_ring(H)), ("m", maximal_ideal(H)), ("conductor", conductor_ideal(H))):
        if E == ref:
            return name
    return E.canonical_form()


def _trace_ideals(H: NumericalSemigroup, k_max: int) -> list[str]:
    found = []
    for k in range(k_max + 1):
        for E in colength_ideals(H, k):
            if trace(E) == E:
                found.append(_label(E))
    return sorted(found)


QUANTITIES: dict[str, Callable[..., Any]] = {
    "frobenius_number": lambda H: H.frobenius,
    "e_minus_embdim": lambda H: H.multiplicity - H.embdim,
    "pseudo_frobenius": lambda H: list(H.pseudo_frobenius()),
    "conductor_power": conductor_as_power,
    "conductor_eq_m": lambda H: conductor_ideal(H) == maximal_ideal(H),
    "ord_eq_q41": lambda H: ord_conductor(H) == H.multiplicity - (H.type + 1),
    "canonical": lambda H: canonical_ideal(H).canonical_form(),
    "colength_canonical": lambda H: colength(ring_shift(canonical_ideal(H))),
    "canonical_reflexive": lambda H: is_reflexive(canonical_ideal(H)),
    "trace_canonical": lambda H: trace(canonical_ideal(H)).canonical_form(),
    "trace_canonical_eq_m": lambda H: trace(canonical_ideal(H)) == maximal_ideal(H),
    "trace_canonical_eq_conductor": lambda H: trace(canonical_ideal(H)) == conductor_ideal(H),
    "colon_m_m": lambda H: colon(maximal_ideal(H), maximal_ideal(H)).canonical_form(),
    "dual_conductor": lambda H: dual(conductor_ideal(H)).canonical_form(),
    "bidual_conductor_eq_conductor": lambda H: bidual(conductor_ideal(H)) == conductor_ideal(H),
    "colength1_all_reflexive": lambda H: all(is_reflexive(E) for E in colength_ideals(H, 1)),
    "colength2_all_reflexive": lambda H: all(is_reflexive(E) for E in colength_ideals(H, 2)),
    "colength2_trace_all_reflexive": lambda H: all(
        is_reflexive(E) for E in colength_ideals(H, 2) if trace(E) == E),
    "trace_ideals_colength_le2": lambda H: _trace_ideals(H, 2),
    "prop45_applies": lambda H: check_prop45(H)["applies"],
    "prop45_sequence_exact": lambda H: check_prop45(H)["sequence_exact"],
    "prop45_bidual_class_eq_m": lambda H: check_prop45(H)["bidual_class_eq_m"],
    # one integer argument
    "maxlen": maxlen,
    "in_conductor": lambda H, s: s >= H.conductor_number,
    "hilbert_colength": hilbert_colength,
    "mu_of_power": mu_of_power,
}

_CALL = re.compile(r"^([a-z_0-9]+)\((-?\d+)\)$")


def evaluate(H: NumericalSemigroup, field: str, report: dict | None = None) -> Any:
    if field in REPORT_FIELDS:
        return (report or classify(H).to_dict())[field]
    m = _CALL.match(field)
    if m:
        return QUANTITIES[m.group(1)](H, int(m.group(2)))
    if field not in QUANTITIES:
        raise KeyError(f"unknown fact field {field!r}")
    return QUANTITIES[field](H)


@dataclass
class Fact:
    field: str
    expected: Any
    provenance: str
    informational: bool
    actual: Any = None

    @property
    def ok(self) -> bool:
        return self.actual == self.expected

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "expected": self.expected,
            "actual": self.actual,
            "provenance": self.provenance,
            "informational": self.informational,
            "ok": self.ok,
        }


@dataclass
class CaseResult:
    id: str
    generators: list[int]
    facts: list[Fact]

    @property
    def status(self) -> str:
        if any(not f.ok and not f.informational for f in self.facts):
            return "fail"
        if any(not f.ok for f in self.facts):
            return "informational-discrepancy"
        return "pass"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "generators": self.generators,
            "status": self.status,
            "facts": [f.to_dict() for f in self.facts],
        }


def load_manifest() -> list[dict]:
    text = resources.files("nsring").joinpath("data/paper_check.json").read_text(encoding="utf-8")
    return json.loads(text)["cases"]


def run_cases(cases: list[dict] | None = None, only: str | None = None) -> list[CaseResult]:
    if cases is None:
        cases = load_manifest()
    if only is not None:
        cases = [c for c in cases if c["id"] == only]
    results = []
    for case in cases:
        H = construct(case["generators"])
        report = classify(H).to_dict()
        facts = []
        for f in case["facts"]:
            fact = Fact(f["field"], f["expected"], f["provenance"], f.get("informational", False))
            fact.actual = evaluate(H, fact.field, report)
            facts.append(fact)
        results.append(CaseResult(case["id"], list(case["generators"]), facts))
    return results
