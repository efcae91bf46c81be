"""
Probing the open questions over small genus
===========================================
"""

from collections import defaultdict

from nsring import classify, check_prop45
from nsring.enumeration import semigroups_by_genus

g_max = 10
by_ord = defaultdict(list)
hyper_bad = []
q41 = 0
prop45 = 0
total = 0
for H in semigroups_by_genus(g_max):
    total += 1
    r = classify(H)
    if r.e - r.embdim == 1:
        by_ord[r.ord_conductor].append(H)
    if r.is_hypersurface and not r.q31_holds:
        hyper_bad.append(H)
    if r.ord_conductor == r.q41_value:
        q41 += 1
    res = check_prop45(H)
    if res["applies"]:
        assert res["sequence_exact"] and res["bidual_class_eq_m"]
        prop45 += 1

print(total, "semigroups of genus <=", g_max)
print("e - embdim = 1, split by ord(c):", {k: len(v) for k, v in sorted(by_ord.items())})
print("  smallest with ord 1:", by_ord[1][:4])
print("hypersurfaces with ord(c) != e - 1:", hyper_bad)
print("ord(c) == e - (type + 1):", q41)
print("almost Gorenstein, minimal multiplicity, not plane: K** ~ m holds for all", prop45)
