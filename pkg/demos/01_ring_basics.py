"""
Ring basics
===========

Products of Schur functions, the Pieri rule, the omega involution and the
change of basis to power sums.  Run with ``python3 demos/01_ring_basics.py``.
"""
from plethyx import Partition, SkewShape, enumerate_lr_tableaux, lr_coefficient, s
from plethyx.schur import (character, e, from_power_sum, h, jacobi_trudi_h,
                           omega, to_power_sum)

###############################################################################
# A product of two Schur functions expands with nonnegative integer
# coefficients.  Each coefficient counts LR tableaux.
prod = s(2, 1) * s(2, 1)
print("s[2,1]^2 =", prod)

print("c^{321}_{21,21} =", lr_coefficient((3, 2, 1), (2, 1), (2, 1)))
for T in enumerate_lr_tableaux(SkewShape.of((3, 2, 1), (2, 1)), (2, 1)):
    print("   ", T)

###############################################################################
# Pieri: multiplying by h_r adds a horizontal strip, e_r a vertical one.
print("h_2 s[2,1] =", h(2) * s(2, 1))
print("e_2 s[2,1] =", e(2) * s(2, 1))

###############################################################################
# omega swaps h and e, and transposes Schur indices.
print("omega(s[3,1]) =", omega(s(3, 1)))

###############################################################################
# The Jacobi-Trudi determinant in h's gives back the Schur function.
print("JT(3,1) == s[3,1]:", jacobi_trudi_h(Partition((3, 1))) == s(3, 1))

###############################################################################
# Power sums carry rational coefficients; the characters chi^lam(rho)
# appear as the transition matrix.
ps = to_power_sum(s(2, 1))
print("s[2,1] in power sums:", ps)
print("chi^{21}(1,1,1) =", character((2, 1), (1, 1, 1)))
print("round trip ok:", from_power_sum(ps) == s(2, 1))
