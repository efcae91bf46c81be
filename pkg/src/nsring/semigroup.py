"""Numerical semigroups H ⊆ Z>=0 and their basic arithmetic.

A semigroup is stored through its minimal generators together with a
membership bitmask of H ∩ [0, c), where c is the conductor number.  Everything
at or above c belongs to H, so the mask plus c describe H completely.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable

import numpy as np

from .errors import EmptyGenerators, NonCoprime, NotAMember, ZeroGenerator

__all__ = ["NumericalSemigroup", "construct", "contains", "apery_set", "pseudo_frobenius"]


def _closure_table(gens: list[int], size: int) -> np.ndarray:
    """Boolean membership table of <gens> over [0, size).

    Closing under one generator g at a time is an OR-accumulate along each
    residue class mod g; closure under earlier generators survives later passes.
    """
    table = np.zeros(size, dtype=bool)
    table[0] = True
    for g in gens:
        if g >= size:
            continue
        for r in range(g):
            strand = table[r::g]
            np.logical_or.accumulate(strand, out=strand)
    return table


def _members_up_to_conductor(gens: list[int]) -> tuple[int, np.ndarray]:
    """Return (c, table) with table[s] == (s in H) for 0 <= s < c."""
    e = gens[0]
    size = max(e * gens[-1] + gens[-1], 2 * e + 2)
    while True:
        table = _closure_table(gens, size)
        # c is one past the last gap; valid once e consecutive members precede `size`
        gaps = np.flatnonzero(~table)
        c = int(gaps[-1]) + 1 if gaps.size else 0
        if size - c >= e:
            return c, table[:c]
        size *= 2


def _minimalize(gens: list[int]) -> list[int]:
    kept: list[int] = []
    for g in gens:
        if kept and _closure_table(kept, g + 1)[g]:
            continue
        kept.append(g)
    return kept


class NumericalSemigroup:
    """Immutable numerical semigroup in canonical form.

    Build instances with :func:`construct`; equality and hashing depend on the
    minimal generators only.
    """

    __slots__ = ("minimal_generators", "conductor_number", "_mask", "_gaps", "_pf")

    def __init__(self, minimal_generators: tuple[int, ...], conductor_number: int, mask: int):
        self.minimal_generators = minimal_generators
        self.conductor_number = conductor_number
        self._mask = mask
        self._gaps = tuple(s for s in range(conductor_number) if not (mask >> s) & 1)
        self._pf: tuple[int, ...] | None = None

    # -- basic invariants ---------------------------------------------------

    @property
    def frobenius(self) -> int:
        return self.conductor_number - 1

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embdim(self) -> int:
        return len(self.minimal_generators)

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    @property
    def membership_mask(self) -> int:
        """Bit s set iff s in H, for 0 <= s < conductor_number."""
        return self._mask

    def is_symmetric(self) -> bool:
        return self.type == 1

    def __contains__(self, s: int) -> bool:
        return contains(self, s)

    def elements_below(self, bound: int) -> list[int]:
        return [s for s in range(max(bound, 0)) if contains(self, s)]

    def apery_set(self, n: int) -> list[int]:
        return apery_set(self, n)

    def pseudo_frobenius(self) -> tuple[int, ...]:
        if self._pf is None:
            if self.conductor_number == 0:
                # -1 + h lies in Z>=0 for every h > 0
                self._pf = (-1,)
                return self._pf
            self._pf = tuple(
                x for x in self._gaps
                if all(contains(self, x + g) for g in self.minimal_generators)
            )
        return self._pf

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators == other.minimal_generators

    def __hash__(self) -> int:
        return hash(self.minimal_generators)

    def __repr__(self) -> str:
        return "<" + ",".join(map(str, self.minimal_generators)) + ">"

    def __reduce__(self):
        return construct, (list(self.minimal_generators),)


def construct(generators: Iterable[int]) -> NumericalSemigroup:
    """Normalize a generating list into a :class:`NumericalSemigroup`.

    Unsorted or duplicated input is accepted; redundant generators are dropped.

    Raises:
        EmptyGenerators: no generators given.
        ZeroGenerator: a generator is zero or negative.
        NonCoprime: the generators share a common factor.
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] <= 0:
        raise ZeroGenerator(f"generators must be positive, got {gens[0]}")
    d = reduce(gcd, gens)
    if d != 1:
        raise NonCoprime(f"gcd must be 1, got gcd {d} for {gens}")
    gens = _minimalize(gens)
    c, table = _members_up_to_conductor(gens)
    mask = 0
    for s in np.flatnonzero(table):
        mask |= 1 << int(s)
    return NumericalSemigroup(tuple(gens), c, mask)


def contains(H: NumericalSemigroup, s: int) -> bool:
    if s < 0:
        return False
    if s >= H.conductor_number:
        return True
    return bool((H._mask >> s) & 1)


def apery_set(H: NumericalSemigroup, n: int) -> list[int]:
    """Least element of H in each residue class mod n, indexed by residue."""
    if n <= 0 or not contains(H, n):
        raise NotAMember(f"{n} is not a nonzero element of {H!r}")
    result: list[int | None] = [None] * n
    missing = n
    s = 0
    while missing:
        if result[s % n] is None and contains(H, s):
            result[s % n] = s
            missing -= 1
        s += 1
    return result  # type: ignore[return-value]


def pseudo_frobenius(H: NumericalSemigroup) -> tuple[int, ...]:
    """PF(H): gaps x with x + h in H for every nonzero h in H."""
    return H.pseudo_frobenius()
