"""
The family <4, 5, a>
====================

Values of a already in <4, 5> are redundant and skip-marked; what is left
is classified.
"""

from collections import Counter

from nsring.enumeration import scan_family

records = scan_family("4,5,a", range(6, 201), predicate="ord_conductor == 1")
print(Counter(r.status for r in records))

for r in records:
    if r.report is not None:
        print(r.params["a"], r.report.generators, "ord(c) =", r.report.ord_conductor,
              "F =", r.report.frobenius)

print("ord 1:", [r.params["a"] for r in records if r.matched])
