"""Fractional monomial ideals of k[[H]] as value sets E ⊆ Z with E + H ⊆ E.

Every such E is bounded below and contains a tail [b, oo).  A :class:`ZIdeal`
stores the minimum ``lo``, the least tail start ``bound`` and a bitmask of
E ∩ [lo, bound) (bit i <-> lo + i).  That form is canonical, so equality is
structural and all colons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyGenerators, NotContained, NSRingError, ParentMismatch
from .semigroup import NumericalSemigroup, contains

__all__ = [
    "ZIdeal",
    "IdealClass",
    "from_generators",
    "from_values",
    "whole_ring",
    "maximal_ideal",
    "normalization",
    "conductor_ideal",
    "canonical_ideal",
    "union",
    "intersection",
    "product",
    "colon",
    "dual",
    "bidual",
    "is_reflexive",
    "trace",
    "colength",
    "relative_colength",
    "minimal_generators",
    "is_self_dual",
    "self_dual_shift",
    "is_principal",
    "is_integrally_closed",
]


def _ones(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


class ZIdeal:
    """Canonical value set of a fractional monomial ideal over ``parent``."""

    __slots__ = ("parent", "lo", "bound", "mask")

    def __init__(self, parent: NumericalSemigroup, lo: int, bound: int, mask: int):
        # internal: callers go through _normalize
        self.parent = parent
        self.lo = lo
        self.bound = bound
        self.mask = mask

    @property
    def stability_bound(self) -> int:
        return self.bound

    @property
    def offsets(self) -> tuple[int, ...]:
        """Elements of E below the stability bound."""
        m, lo = self.mask, self.lo
        return tuple(lo + i for i in range(self.bound - lo) if (m >> i) & 1)

    @property
    def min(self) -> int:
        return self.lo

    def __contains__(self, z: int) -> bool:
        if z >= self.bound:
            return True
        if z < self.lo:
            return False
        return bool((self.mask >> (z - self.lo)) & 1)

    def window(self, lo: int, hi: int) -> int:
        """Bitmask of E ∩ [lo, hi), bit i <-> lo + i."""
        n = hi - lo
        if n <= 0:
            return 0
        if self.lo >= lo:
            m = self.mask << (self.lo - lo)
        else:
            m = self.mask >> (lo - self.lo)
        if self.bound < hi:
            start = max(self.bound - lo, 0)
            m |= _ones(n - start) << start
        return m & _ones(n)

    def elements(self, hi: int) -> list[int]:
        """Elements of E below ``hi``."""
        return [z for z in range(self.lo, hi) if z in self]

    def shift(self, z: int) -> ZIdeal:
        return ZIdeal(self.parent, self.lo + z, self.bound + z, self.mask)

    def normal_form(self) -> ZIdeal:
        """Translate so that min(E) = 0."""
        return self.shift(-self.lo)

    def issubset(self, other: ZIdeal) -> bool:
        _check_parent(self, other)
        if self.lo >= other.bound:
            return True
        lo, hi = self.lo, max(self.bound, other.bound)
        return self.window(lo, hi) & ~other.window(lo, hi) == 0

    __le__ = issubset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZIdeal):
            return NotImplemented
        return (self.parent, self.lo, self.bound, self.mask) == (
            other.parent, other.lo, other.bound, other.mask)

    def __hash__(self) -> int:
        return hash((self.parent, self.lo, self.bound, self.mask))

    def canonical_form(self) -> str:
        """Render as ``(offsets | b)``."""
        return "(" + ",".join(map(str, self.offsets)) + " | " + str(self.bound) + ")"

    def __str__(self) -> str:
        return self.canonical_form()

    def __repr__(self) -> str:
        return f"ZIdeal({self.parent!r}, {self.canonical_form()})"

    def check_invariants(self) -> None:
        """Assert the canonical-form and ideal invariants; for tests."""
        assert self.lo <= self.bound
        if self.lo < self.bound:
            assert self.mask & 1, "lo must be an element"
            assert not (self.mask >> (self.bound - 1 - self.lo)) & 1, "bound not minimal"
        assert self.mask >> (self.bound - self.lo) == 0
        for z in self.offsets:
            for g in self.parent.minimal_generators:
                assert z + g in self, f"{z}+{g} missing"


@dataclass(frozen=True)
class IdealClass:
    """Isomorphism class of a ZIdeal, represented by its shift-normal form."""

    representative: ZIdeal

    @classmethod
    def of(cls, E: ZIdeal) -> IdealClass:
        return cls(E.normal_form())


def _normalize(H: NumericalSemigroup, lo: int, hi: int, mask: int) -> ZIdeal:
    """Canonical ideal for E = {lo + i : bit i of mask} ∪ [hi, oo)."""
    mask &= _ones(hi - lo)
    # pull the tail down over trailing members
    n = hi - lo
    while n > 0 and (mask >> (n - 1)) & 1:
        n -= 1
    mask &= _ones(n)
    hi = lo + n
    if mask == 0:
        return ZIdeal(H, hi, hi, 0)
    low = (mask & -mask).bit_length() - 1
    return ZIdeal(H, lo + low, hi, mask >> low)


def _check_parent(*ideals: ZIdeal) -> None:
    H = ideals[0].parent
    for E in ideals[1:]:
        if E.parent != H:
            raise ParentMismatch(f"{E.parent!r} != {H!r}")


# -- constructors ------------------------------------------------------------


def from_generators(H: NumericalSemigroup, gens: Iterable[int]) -> ZIdeal:
    """The ideal gens + H."""
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo = gens[0]
    hi = lo + H.conductor_number
    hmask = H.membership_mask
    mask = 0
    for g in gens:
        if g >= hi:
            break
        mask |= (hmask | (_ones(hi - g) & ~_ones(H.conductor_number))) << (g - lo)
    return _normalize(H, lo, hi, mask)


def from_values(H: NumericalSemigroup, values: Iterable[int], tail: int) -> ZIdeal:
    """The set ``values ∪ [tail, oo)``; raises if it is not closed under H."""
    values = list(values)
    lo = min([tail, *values])
    mask = 0
    for v in values:
        if v < tail:
            mask |= 1 << (v - lo)
    E = _normalize(H, lo, tail, mask)
    for z in E.offsets:
        for g in H.minimal_generators:
            if z + g not in E:
                raise NSRingError(f"value set is not an H-module: {z}+{g} missing")
    return E


def whole_ring(H: NumericalSemigroup) -> ZIdeal:
    return _normalize(H, 0, H.conductor_number, H.membership_mask)


def maximal_ideal(H: NumericalSemigroup) -> ZIdeal:
    c = max(H.conductor_number, 1)
    return _normalize(H, 0, c, H.membership_mask & ~1)


def normalization(H: NumericalSemigroup) -> ZIdeal:
    """Value set Z>=0 of the integral closure k[[t]]."""
    return ZIdeal(H, 0, 0, 0)


def conductor_ideal(H: NumericalSemigroup) -> ZIdeal:
    c = H.conductor_number
    return ZIdeal(H, c, c, 0)


def canonical_ideal(H: NumericalSemigroup) -> ZIdeal:
    """K = {x : F - x not in H}, contained in [0, oo) with tail from c."""
    F = H.frobenius
    c = H.conductor_number
    mask = 0
    for x in range(c):
        if not contains(H, F - x):
            mask |= 1 << x
    return _normalize(H, 0, c, mask)


# -- arithmetic --------------------------------------------------------------


def union(E: ZIdeal, F: ZIdeal) -> ZIdeal:
    """Ideal sum E + F of ideals (value set union)."""
    _check_parent(E, F)
    lo, hi = min(E.lo, F.lo), max(E.bound, F.bound)
    return _normalize(E.parent, lo, hi, E.window(lo, hi) | F.window(lo, hi))


def intersection(E: ZIdeal, F: ZIdeal) -> ZIdeal:
    _check_parent(E, F)
    lo, hi = min(E.lo, F.lo), max(E.bound, F.bound)
    return _normalize(E.parent, lo, hi, E.window(lo, hi) & F.window(lo, hi))


def product(E: ZIdeal, F: ZIdeal) -> ZIdeal:
    """Ideal product, i.e. the sumset E + F of value sets."""
    _check_parent(E, F)
    lo = E.lo + F.lo
    hi = min(E.bound + F.lo, F.bound + E.lo)
    fmask = F.window(F.lo, hi - E.lo)
    mask = 0
    for x in range(E.lo, hi - F.lo):
        if x in E:
            mask |= fmask << (x - E.lo)
    return _normalize(E.parent, lo, hi, mask)


def colon(E: ZIdeal, F: ZIdeal) -> ZIdeal:
    """E - F = {z : z + F ⊆ E}."""
    _check_parent(E, F)
    lo = E.lo - F.lo
    hi = E.bound - F.lo
    n = E.bound - E.lo
    full = _ones(n)
    fmask = F.window(F.lo, F.lo + n)
    miss = ~E.mask & full
    mask = 0
    for i in range(hi - lo):
        if not ((fmask << i) & miss):
            mask |= 1 << i
    return _normalize(E.parent, lo, hi, mask)


def dual(E: ZIdeal) -> ZIdeal:
    """E* = Hom(E, R), as the value set H - E."""
    return colon(whole_ring(E.parent), E)


def bidual(E: ZIdeal) -> ZIdeal:
    return dual(dual(E))


def is_reflexive(E: ZIdeal) -> bool:
    return bidual(E) == E


def trace(E: ZIdeal) -> ZIdeal:
    """tr(E) = E + (H - E)."""
    return product(E, dual(E))


def relative_colength(E: ZIdeal, F: ZIdeal) -> int:
    """|F \\ E| for E ⊆ F."""
    if not E.issubset(F):
        raise NotContained(f"{E} is not contained in {F}")
    lo, hi = F.lo, max(E.bound, F.bound)
    return bin(F.window(lo, hi) & ~E.window(lo, hi)).count("1")


def colength(E: ZIdeal) -> int:
    """ℓ(R/E) = |H \\ E| for an ideal E ⊆ H."""
    try:
        return relative_colength(E, whole_ring(E.parent))
    except NotContained:
        raise NotContained(f"{E} is not contained in the ring; shift-normalize first") from None


def minimal_generators(E: ZIdeal) -> tuple[int, ...]:
    """E \\ (E + M), the exponents of a minimal monomial generating set."""
    EM = product(E, maximal_ideal(E.parent))
    return tuple(z for z in range(E.lo, EM.bound) if z in E and z not in EM)


def self_dual_shift(E: ZIdeal) -> int | None:
    """The z with dual(E) = E + z, or None; z is forced by the minima."""
    D = dual(E)
    z = D.lo - E.lo
    return z if E.shift(z) == D else None


def is_self_dual(E: ZIdeal) -> bool:
    return self_dual_shift(E) is not None


def is_principal(E: ZIdeal) -> bool:
    return len(minimal_generators(E)) == 1


def is_integrally_closed(E: ZIdeal) -> bool:
    """For E ⊆ H: E equals its closure H ∩ [min E, oo)."""
    closure = intersection(whole_ring(E.parent), ZIdeal(E.parent, E.lo, E.lo, 0))
    return closure == E
