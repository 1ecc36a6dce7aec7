"""
Restriction coefficients
========================

r_lam^mu is the multiplicity of the S_n irreducible mu in the restriction
of the GL_n irreducible lam.  Three methods: the three-column formula,
counting tuples, and the brute-force series oracle.
"""
from plethyx import count_restriction_tuples, restriction_oracle, restriction_via_main
from plethyx.partitions import partitions_up_to

lam = (2, 2)
print("mu          main  tuples  oracle")
for mu in partitions_up_to(5):
    a = restriction_via_main(lam, mu)
    b = count_restriction_tuples(lam, mu)
    c = restriction_oracle(lam, mu)
    if a or b or c:
        print(f"{str(mu):10s} {a:5d} {b:7d} {c:7d}")
