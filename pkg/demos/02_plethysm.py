"""
Plethysm and its adjoint
========================

Computes f[g] through power-sum substitution, checks it against direct
substitution of monomials, and evaluates the adjoint f[g^perp].
"""
from plethyx import plethysm, plethysm_adjoint, s
from plethyx.schur import hall_inner, h
from plethyx.verification import monomial_substitution_plethysm

###############################################################################
# The classic small case: h_2[h_2] = s[4] + s[2,2].
print("h_2[h_2] =", plethysm(h(2), h(2)))

###############################################################################
# A second, independent route: expand g in monomials, substitute, and peel
# off leading terms.  The two engines should agree exactly.
f, g = s(2, 1), s(2)
fast = plethysm(f, g)
slow = monomial_substitution_plethysm(f, g)
print("s[2,1][s[2]] =", fast)
print("engines agree:", fast == slow)

###############################################################################
# The adjoint is characterised by <f[g^perp], u> = <f, u[g]>.
lam = s(4, 2)
adj = plethysm_adjoint(lam, h(2))
print("s[4,2][h_2^perp] =", adj)
for mu in [s(3), s(2, 1), s(1, 1, 1)]:
    print("   ", mu, hall_inner(adj, mu), hall_inner(lam, plethysm(mu, h(2))))
