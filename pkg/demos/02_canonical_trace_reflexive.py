"""
Canonical ideal, trace and reflexivity on value sets
====================================================

Ideals are printed as "(offsets | b)": the listed values below b, then every
integer from b on.
"""

from nsring import IdealClass, construct
from nsring import zideal as zi

H = construct([3, 4, 5])
K = zi.canonical_ideal(H)
print("K      ", K)
print("K*     ", zi.dual(K))
print("K**    ", zi.bidual(K), " reflexive:", zi.is_reflexive(K))

# K** is a shift of the maximal ideal
print(IdealClass.of(zi.bidual(K)) == IdealClass.of(zi.maximal_ideal(H)))

# translate K into the ring and measure its colength
print("colength of K + 3:", zi.colength(K.shift(3)))

H = construct([4, 6, 7, 9])
M = zi.maximal_ideal(H)
print("(M : M) =", zi.colon(M, M))
print("tr(K)   =", zi.trace(zi.canonical_ideal(H)), " M =", M)
C = zi.conductor_ideal(H)
print("c* =", zi.dual(C), " c** == c:", zi.bidual(C) == C)
