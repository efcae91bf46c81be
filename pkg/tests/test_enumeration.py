from collections import Counter
from itertools import combinations

import pytest

from nsring import BadTemplate, construct
from nsring import zideal as zi
from nsring.enumeration import (
    children,
    colength_ideals,
    parse_template,
    scan_family,
    scan_genus,
    semigroups_by_genus,
)
from oracles import naive_semigroups_of_genus


def test_genus_examples():
    assert list(semigroups_by_genus(0)) == [construct([1])]
    got = {H.minimal_generators for H in semigroups_by_genus(2)}
    assert got == {(1,), (2, 3), (3, 4, 5), (2, 5)}


def test_genus_counts_match_bruteforce():
    by_genus = Counter(H.genus for H in semigroups_by_genus(6))
    for g in range(7):
        naive = naive_semigroups_of_genus(g)
        assert by_genus[g] == len(naive), g
    gaps = {H.gaps for H in semigroups_by_genus(6)}
    assert gaps == {gs for g in range(7) for gs in naive_semigroups_of_genus(g)}


def test_genus_stream_no_duplicates():
    stream = list(semigroups_by_genus(12))
    seen = [H.minimal_generators for H in stream]
    assert len(seen) == len(set(seen))
    assert all(H.genus <= 12 for H in stream)
    # known sequence 1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592
    counts = Counter(H.genus for H in stream)
    assert [counts[g] for g in range(13)] == [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]


def test_children_remove_one_generator_above_frobenius():
    H = construct([3, 4, 5])
    kids = children(H)
    assert {K.minimal_generators for K in kids} == {(4, 5, 6, 7), (3, 5, 7), (3, 4)}
    for K in kids:
        assert K.genus == H.genus + 1


# -- families ------------------------------------------------------------------


def test_family_4_5_a():
    recs = {r.params["a"]: r for r in scan_family("4,5,a", range(6, 14))}
    assert recs[7].report.ord_conductor == 1
    assert recs[11].report.ord_conductor == 1
    assert recs[6].report.ord_conductor == 2
    for a in (8, 9, 10, 12, 13):
        assert recs[a].status == "skipped-redundant"
        assert recs[a].report is None


def test_family_e_run():
    recs = scan_family("e-run", range(3, 11))
    assert [r.params["e"] for r in recs] == list(range(3, 11))
    assert all(r.status == "ok" and r.report.ord_conductor == 2 for r in recs)


def test_family_2_a_odd():
    recs = scan_family([2, "a"], range(3, 22, 2))
    assert all(r.report.ord_conductor == 1 for r in recs)


def test_family_skip_marks():
    recs = {r.params["a"]: r.status for r in scan_family("4,6,a", [-1, 0, 5, 8, 9])}
    assert recs == {-1: "skipped-nonpositive", 0: "skipped-nonpositive", 5: "ok",
                    8: "skipped-gcd", 9: "ok"}


def test_family_callable_and_predicate():
    recs = scan_family(lambda n: [n, n + 1], range(2, 6), predicate=lambda d: d["ord_conductor"] > 2)
    assert [r.matched for r in recs] == [False, False, True, True]
    recs = scan_family("4,5,a", range(7, 12), predicate="ord_conductor == 1")
    assert [r.params["a"] for r in recs if r.matched] == [7, 11]


@pytest.mark.parametrize("text", ["4,5", "a,b,5", "4,,a", "4,5,a-1", ""])
def test_bad_template(text):
    with pytest.raises(BadTemplate):
        parse_template(text)


def test_scan_deterministic_across_jobs():
    a = [r.flat() for r in scan_family("4,5,a", range(7, 80), predicate="ord_conductor==1")]
    b = [r.flat() for r in scan_family("4,5,a", range(7, 80), predicate="ord_conductor==1", jobs=3)]
    assert a == b
    g1 = [r.flat() for r in scan_genus(6, "e - embdim == 1")]
    g2 = [r.flat() for r in scan_genus(6, "e - embdim == 1", jobs=2)]
    assert g1 == g2


# -- colength-k ideals ------------------------------------------------------------


def naive_colength_ideals(H, k):
    """Down-closed k-subsets S of H: y in S and y - g in H imply y - g in S."""
    hi = H.conductor_number + k * H.multiplicity + 1
    elems = H.elements_below(hi)
    out = set()
    for S in combinations(elems, k):
        S = set(S)
        if all((y - g) in S for y in S for g in H.minimal_generators if (y - g) in H):
            out.add(frozenset(S))
    return out


@pytest.mark.parametrize("gens", [[2, 3], [3, 4, 5], [4, 5, 7], [4, 6, 7, 9], [3, 5], [5, 6, 7]])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_colength_ideals_match_naive(gens, k):
    H = construct(gens)
    got = colength_ideals(H, k)
    R = zi.whole_ring(H)
    comps = set()
    for E in got:
        E.check_invariants()
        assert zi.colength(E) == k
        comps.add(frozenset(s for s in H.elements_below(H.conductor_number + k * H.multiplicity + 1)
                            if s not in E))
        assert E.issubset(R)
    assert len(got) == len(set(got))
    assert comps == naive_colength_ideals(H, k)


def test_colength_zero_is_ring():
    H = construct([4, 5, 7])
    assert colength_ideals(H, 0) == [zi.whole_ring(H)]


def test_colength_examples_345():
    H = construct([3, 4, 5])
    K = zi.canonical_ideal(H).shift(3)
    two = colength_ideals(H, 2)
    assert K in two and not zi.is_reflexive(K)
    assert all(zi.is_reflexive(E) for E in colength_ideals(H, 1))


def test_trace_ideals_4679():
    H = construct([4, 6, 7, 9])
    found = {E for k in (0, 1, 2) for E in colength_ideals(H, k) if zi.trace(E) == E}
    assert found == {zi.whole_ring(H), zi.maximal_ideal(H), zi.conductor_ideal(H)}


def test_colength_two_dichotomy():
    # Every colength-2 monomial ideal is principal or H minus {0, h} with h a
    # minimal generator.  "Principal or integrally closed" does not hold for
    # monomial ideals: (t^3, t^5) in k[[t^3, t^4, t^5]] is a counterexample.
    counterexamples = []
    for H in semigroups_by_genus(8):
        if H.conductor_number == 0:
            continue
        for E in colength_ideals(H, 2):
            comp = [s for s in H.elements_below(H.conductor_number + 2 * H.multiplicity) if s not in E]
            assert zi.is_principal(E) or (
                len(comp) == 2 and comp[0] == 0 and comp[1] in H.minimal_generators), (H, E)
            if not zi.is_principal(E) and not zi.is_integrally_closed(E):
                counterexamples.append((H, E))
    H = construct([3, 4, 5])
    assert (H, zi.from_generators(H, [3, 5])) in counterexamples
