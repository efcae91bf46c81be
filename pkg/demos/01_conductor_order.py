"""
How deep does the conductor sit in the m-adic filtration?
=========================================================

t^s lies in m^n exactly when s splits into at least n minimal generators, so
ord of the conductor is the least such length over the values s >= c.
"""

from nsring import construct, maxlen, ord_conductor, power_of_m
from nsring import zideal as zi

H = construct([4, 5, 7])
print(H, "F =", H.frobenius, "gaps =", H.gaps)

# maximal factorization lengths just above the conductor
c = H.conductor_number
print({s: maxlen(H, s) for s in range(c, c + H.multiplicity)})

# 7 is itself a generator, so the conductor is not inside m^2
print("ord(c) =", ord_conductor(H))

# the arithmetic run <e, ..., 2e-2> behaves differently: c = m^2
for e in range(3, 8):
    R = construct(range(e, 2 * e - 1))
    print(R, "ord(c) =", ord_conductor(R), " c == m^2:", power_of_m(R, 2) == zi.conductor_ideal(R))

# plane curves <a, b>: ord(c) = a - 1
print([ord_conductor(construct([a, a + 1])) for a in range(2, 10)])
