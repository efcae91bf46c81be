"""Ring-level classification of k[[H]]: numbers, Gorenstein hierarchy, question probes."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .filtration import ord_conductor
from .semigroup import NumericalSemigroup
from .zideal import (
    IdealClass,
    bidual,
    canonical_ideal,
    colength,
    conductor_ideal,
    maximal_ideal,
    relative_colength,
    trace,
)

__all__ = ["ClassificationReport", "REPORT_FIELDS", "classify", "check_prop45"]


@dataclass(frozen=True)
class ClassificationReport:
    generators: list[int]
    e: int
    embdim: int
    genus: int
    frobenius: int
    conductor_number: int
    type_: int
    ord_conductor: int
    colength_conductor: int
    is_gorenstein: bool
    is_almost_gorenstein: bool
    is_nearly_gorenstein: bool
    is_farflung_gorenstein: bool
    has_minimal_multiplicity: bool
    is_hypersurface: bool
    q21_holds: bool | None
    q31_holds: bool | None
    q41_value: int

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


REPORT_FIELDS: tuple[str, ...] = tuple(f.name for f in fields(ClassificationReport))


def classify(H: NumericalSemigroup) -> ClassificationReport:
    e, mu = H.multiplicity, H.embdim
    genus, F, c = H.genus, H.frobenius, H.conductor_number
    t = H.type
    C = conductor_ideal(H)
    trK = trace(canonical_ideal(H))
    M = maximal_ideal(H)
    oc = ord_conductor(H)
    hypersurface = mu <= 2
    return ClassificationReport(
        generators=list(H.minimal_generators),
        e=e,
        embdim=mu,
        genus=genus,
        frobenius=F,
        conductor_number=c,
        type_=t,
        ord_conductor=oc,
        colength_conductor=colength(C),
        is_gorenstein=t == 1,
        is_almost_gorenstein=2 * genus == F + t,
        is_nearly_gorenstein=M.issubset(trK),
        is_farflung_gorenstein=trK == C,
        has_minimal_multiplicity=e == mu,
        is_hypersurface=hypersurface,
        q21_holds=(oc == 2) if e - mu == 1 else None,
        q31_holds=(oc == e - 1) if hypersurface else None,
        q41_value=e - (t + 1),
    )


def check_prop45(H: NumericalSemigroup) -> dict:
    """Test that K -> K** has cokernel k and K** is isomorphic to m.

    Only meaningful for almost Gorenstein rings of minimal multiplicity that are
    not hypersurfaces; ``applies`` records whether H is such a ring.
    """
    r = classify(H)
    applies = r.is_almost_gorenstein and r.has_minimal_multiplicity and not r.is_hypersurface
    out = {"applies": applies, "sequence_exact": None, "bidual_class_eq_m": None}
    if applies:
        K = canonical_ideal(H)
        KK = bidual(K)
        out["sequence_exact"] = relative_colength(K, KK) == 1
        out["bidual_class_eq_m"] = IdealClass.of(KK) == IdealClass.of(maximal_ideal(H))
    return out
