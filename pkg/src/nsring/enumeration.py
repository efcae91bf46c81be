"""Systematic generation of semigroups, parametric families and monomial ideals."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence, Union

from .classify import REPORT_FIELDS, ClassificationReport, classify
from .errors import BadTemplate
from .expr import compile_where
from .semigroup import NumericalSemigroup, construct
from .zideal import ZIdeal, _normalize

__all__ = [
    "ScanRecord",
    "FAMILIES",
    "semigroups_by_genus",
    "children",
    "parse_template",
    "scan_family",
    "scan_genus",
    "colength_ideals",
]


@dataclass(frozen=True)
class ScanRecord:
    params: dict[str, Any]
    status: str
    report: ClassificationReport | None = None
    matched: bool | None = None
    findings: dict[str, Any] = field(default_factory=dict)

    def env(self) -> dict[str, Any]:
        """Names visible to a ``--where`` expression."""
        d = dict(self.params)
        if self.report is not None:
            d.update(self.report.to_dict())
        return d

    def flat(self) -> dict[str, Any]:
        d: dict[str, Any] = dict(self.params)
        d["status"] = self.status
        report = self.report.to_dict() if self.report is not None else {}
        for name in REPORT_FIELDS:
            d[name] = report.get(name)
        d["matched"] = self.matched
        d.update(self.findings)
        return d


# -- genus tree --------------------------------------------------------------


def children(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """H \\ {g} for each minimal generator g > F(H)."""
    gens = H.minimal_generators
    out = []
    for g in gens:
        if g <= H.frobenius:
            continue
        cand = [x for x in gens if x != g] + [g + x for x in gens] + [3 * g]
        out.append(construct(cand))
    return out


def semigroups_by_genus(g_max: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= g_max, by genus then generators."""
    level = [construct([1])]
    for _ in range(g_max + 1):
        level.sort(key=lambda H: H.minimal_generators)
        yield from level
        level = [K for H in level for K in children(H)]


# -- families ----------------------------------------------------------------

Template = Union[Sequence[Union[int, str]], Callable[[int], Sequence[int]]]

FAMILIES: dict[str, tuple[str, Callable[[int], list[int]]]] = {
    # <e, e+1, ..., 2e-2>
    "e-run": ("e", lambda e: list(range(e, 2 * e - 1))),
}


def parse_template(text: str) -> tuple[str, Callable[[int], list[int]], int | None]:
    """Return (symbol, instantiate, slot index) for ``"4,5,a"`` or a named family."""
    if text in FAMILIES:
        sym, fn = FAMILIES[text]
        return sym, fn, None
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise BadTemplate(f"malformed template {text!r}")
    slots = [i for i, p in enumerate(parts) if not p.lstrip("-").isdigit()]
    if len(slots) != 1:
        raise BadTemplate(f"template must contain exactly one symbolic slot, got {text!r}")
    (slot,) = slots
    if not parts[slot].isidentifier():
        raise BadTemplate(f"bad symbol {parts[slot]!r}")
    fixed = [None if i == slot else int(p) for i, p in enumerate(parts)]

    def instantiate(v: int) -> list[int]:
        return [v if x is None else x for x in fixed]

    return parts[slot], instantiate, slot


def _with_match(rec: ScanRecord, predicate) -> ScanRecord:
    pred = _compile(predicate)
    if pred is None or rec.report is None:
        return rec
    return ScanRecord(rec.params, rec.status, rec.report, bool(pred(rec.env())))


def _compile(predicate):
    if predicate is None or callable(predicate):
        return predicate
    return compile_where(predicate)


def _scan_one(args: tuple) -> ScanRecord:
    sym, value, gens, slot, predicate = args
    params = {sym: value}
    if any(g <= 0 for g in gens):
        return ScanRecord(params, "skipped-nonpositive")
    if reduce(gcd, gens) != 1:
        return ScanRecord(params, "skipped-gcd")
    H = construct(gens)
    if slot is not None and value not in H.minimal_generators:
        return ScanRecord(params, "skipped-redundant")
    return _with_match(ScanRecord(params, "ok", classify(H)), predicate)


def _run(fn, tasks: list, jobs: int) -> list[ScanRecord]:
    if jobs > 1 and len(tasks) > 1:
        # pool.map keeps input order, so output does not depend on jobs
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [fn(t) for t in tasks]


def scan_family(
    template: Template | str,
    values: Iterable[int],
    predicate: Callable[[Mapping[str, Any]], bool] | str | None = None,
    jobs: int = 1,
) -> list[ScanRecord]:
    """Classify each admissible member of a one-parameter family.

    ``template`` is a generator list with exactly one symbolic entry
    (``[4, 5, "a"]``), a template string (``"4,5,a"``), a named family
    (``"e-run"``) or a callable from the parameter to a generator list.
    Members with gcd != 1, or whose parameter is not a minimal generator, are
    kept as skip-marked records.  The predicate only sets ``matched``; with
    ``jobs > 1`` it must be given as a string.
    """
    if isinstance(template, str):
        sym, inst, slot = parse_template(template)
    elif callable(template):
        sym, inst, slot = "n", template, None
    else:
        sym, inst, slot = parse_template(",".join(map(str, template)))
    tasks = [(sym, v, list(inst(v)), slot, predicate) for v in sorted(set(values))]
    return _run(_scan_one, tasks, jobs)


def _genus_one(args: tuple) -> ScanRecord:
    H, predicate = args
    params = {"genus": H.genus, "gens": ",".join(map(str, H.minimal_generators))}
    return _with_match(ScanRecord(params, "ok", classify(H)), predicate)


def scan_genus(
    g_max: int,
    predicate: Callable[[Mapping[str, Any]], bool] | str | None = None,
    jobs: int = 1,
) -> list[ScanRecord]:
    """Classify every semigroup of genus <= g_max, in enumeration order."""
    return _run(_genus_one, [(H, predicate) for H in semigroups_by_genus(g_max)], jobs)


# -- ideals of given colength -----------------------------------------------


def colength_ideals(H: NumericalSemigroup, k: int) -> list[ZIdeal]:
    """All monomial ideals E ⊆ H with |H \\ E| = k.

    The complement H \\ E is a down-set of H under x <= y iff y - x in H; such
    down-sets are grown one minimal element at a time.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    hi = H.conductor_number + k * H.multiplicity + 1
    elems = H.elements_below(hi)
    gens = H.minimal_generators
    level: set[frozenset[int]] = {frozenset()}
    for _ in range(k):
        nxt: set[frozenset[int]] = set()
        for S in level:
            for y in elems:
                if y in S:
                    continue
                if all((y - g) in S for g in gens if (y - g) in H):
                    nxt.add(S | {y})
        level = nxt
    out = []
    c = H.conductor_number
    for S in sorted(level, key=lambda s: sorted(s)):
        top = max([c, *(s + 1 for s in S)])
        mask = H.membership_mask | (((1 << top) - 1) & ~((1 << c) - 1))
        for s in S:
            mask &= ~(1 << s)
        out.append(_normalize(H, 0, top, mask))
    return out
