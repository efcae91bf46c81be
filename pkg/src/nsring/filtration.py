"""The m-adic filtration of k[[H]].

t^s lies in m^n exactly when s admits a factorization into at least n minimal
generators, so the whole filtration is read off the maximal factorization
length ``maxlen(s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotContained
from .semigroup import NumericalSemigroup
from .zideal import (
    ZIdeal,
    _normalize,
    conductor_ideal,
    minimal_generators,
    whole_ring,
)

__all__ = [
    "FactorizationTable",
    "factorization_table",
    "maxlen",
    "power_of_m",
    "ord_of_element",
    "ord_of_ideal",
    "ord_by_containment",
    "ord_conductor",
    "hilbert_colength",
    "mu_of_power",
]

_NEG = -(1 << 40)


@dataclass(frozen=True, eq=False)
class FactorizationTable:
    """maxlen(s) for 0 <= s < window; -1 marks s not in H."""

    parent: NumericalSemigroup
    window: int
    values: np.ndarray

    def __getitem__(self, s: int) -> int | None:
        v = int(self.values[s])
        return None if v < 0 else v


def _build(H: NumericalSemigroup, window: int) -> FactorizationTable:
    # per generator g: v[k] <- max_j (v[k-j] + j) along each residue strand,
    # which is a running max of v[k] - k
    vals = np.full(window, _NEG, dtype=np.int64)
    vals[0] = 0
    for g in H.minimal_generators:
        for r in range(min(g, window)):
            strand = vals[r::g]
            k = np.arange(strand.size, dtype=np.int64)
            strand[:] = np.maximum.accumulate(strand - k) + k
    vals[vals < 0] = -1
    vals.setflags(write=False)
    return FactorizationTable(H, window, vals)


@lru_cache(maxsize=4096)
def _cached(H: NumericalSemigroup, window: int) -> FactorizationTable:
    return _build(H, window)


def factorization_table(H: NumericalSemigroup, window: int) -> FactorizationTable:
    """Table covering at least [0, window); sizes are rounded up to powers of two."""
    size = 64
    while size < window:
        size *= 2
    return _cached(H, size)


def maxlen(H: NumericalSemigroup, s: int) -> int | None:
    """Maximal number of minimal generators summing to s; None if s not in H."""
    if s < 0:
        return None
    return factorization_table(H, s + 1)[s]


def power_of_m(H: NumericalSemigroup, n: int) -> ZIdeal:
    """m^n as the value set {s in H : maxlen(s) >= n}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return whole_ring(H)
    hi = H.conductor_number + n * H.multiplicity
    vals = factorization_table(H, hi).values[:hi]
    mask = 0
    for s in np.flatnonzero(vals >= n):
        mask |= 1 << int(s)
    return _normalize(H, 0, hi, mask)


def ord_of_element(H: NumericalSemigroup, s: int) -> int:
    """ord(t^s) for s in H."""
    v = maxlen(H, s)
    if v is None:
        raise NotContained(f"{s} is not in {H!r}")
    return v


def _require_in_ring(E: ZIdeal) -> None:
    if not E.issubset(whole_ring(E.parent)):
        raise NotContained(f"{E} is not an ideal of the ring")


def ord_of_ideal(E: ZIdeal) -> int:
    """Largest n with E ⊆ m^n, as the least maxlen over minimal generators."""
    _require_in_ring(E)
    H = E.parent
    gens = minimal_generators(E)
    table = factorization_table(H, max(gens) + 1)
    return min(table[g] for g in gens)


def ord_by_containment(E: ZIdeal) -> int:
    """Same quantity as :func:`ord_of_ideal`, by testing E ⊆ m^n for n = 0, 1, ..."""
    _require_in_ring(E)
    n = 0
    while E.issubset(power_of_m(E.parent, n + 1)):
        n += 1
    return n


def ord_conductor(H: NumericalSemigroup) -> int:
    """ord of the conductor ideal, scanning only [c, c + e).

    maxlen(s + e) >= maxlen(s) + 1 puts the minimum over [c, oo) inside that window.
    """
    c, e = H.conductor_number, H.multiplicity
    if c == 0:
        return 0
    vals = factorization_table(H, c + e).values
    return int(vals[c:c + e].min())


def hilbert_colength(H: NumericalSemigroup, n: int) -> int:
    """ℓ(R/m^n) = #{s in H : maxlen(s) < n}."""
    if n <= 0:
        return 0
    hi = H.conductor_number + n * H.multiplicity
    vals = factorization_table(H, hi).values[:hi]
    return int(np.count_nonzero((vals >= 0) & (vals < n)))


def mu_of_power(H: NumericalSemigroup, n: int) -> int:
    """μ(m^n), the number of minimal monomial generators of m^n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return len(minimal_generators(power_of_m(H, n)))


def conductor_as_power(H: NumericalSemigroup) -> int | None:
    """The n with conductor = m^n, if there is one."""
    C = conductor_ideal(H)
    n = ord_conductor(H)
    return n if power_of_m(H, n) == C else None
