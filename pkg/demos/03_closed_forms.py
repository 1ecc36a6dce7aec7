"""
Closed forms against brute force
================================

The closed formulas in ``plethyx.formulas`` give single coefficients without
expanding a whole plethysm.  Here we compare a few of them with the engine.
"""
from plethyx import (frobenius_h_closed, frobenius_oracle,
                     plethysm_coeff_hr_closed, s_lambda_hr_perp_closed)
from plethyx.partitions import Partition, enumerate_partitions
from plethyx.plethysm import plethysm
from plethyx.schur import h, s

###############################################################################
# <s_lam, s_mu[h_r]> for lam with at most three columns.
r = 2
for mu in [(1, 1), (2,), (2, 1)]:
    n = r * sum(mu)
    full = plethysm(s(*mu), h(r))
    for lam in enumerate_partitions(n, max_part=3):
        c = plethysm_coeff_hr_closed(lam, mu, r)
        assert c == full[lam], (lam, mu)
        if c:
            print(f"<s{lam}, s{Partition(mu)}[h_{r}]> = {c}")

###############################################################################
# s_lam[h_r^perp] collapses to one Schur function (or zero).
print("s[2,2,1][h_1^perp] =", s_lambda_hr_perp_closed((2, 2, 1), 1, 6))
print("s[3,3][h_2^perp] =", s_lambda_hr_perp_closed((3, 3), 2, 6))

###############################################################################
# The Frobenius transform of h_lam is H times a finite sum.
closed = frobenius_h_closed((2, 1))
print("h[2,1][H^perp] =", closed)
print("matches oracle:", closed.truncate(5) == frobenius_oracle(h(2) * h(1), 5).value)
