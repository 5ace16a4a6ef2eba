r"""
The Chern subgroup index at a fixed prime
-----------------------------------------
For odd p the second Chern classes of representations of SU(p^2)/mu_p,
pulled back to the circle, are all divisible by p, and one combination of
lambda_p and lambda_1^p reaches exactly p.  ``verify_theorem`` checks both
halves as finite certificates and records the cohomological input it
takes on trust.
"""
from chernsub import construct_y, monomial_c2, verify_theorem

#%%
# c2 of lambda_1^p via the product rule: each delta_{L,i} is p^(2p-2).
for p in (3, 5, 7):
    b = monomial_c2((1,) * p, p)
    print(p, b.delta_L_i[0] == p ** (2 * p - 2), b.total == -p ** (2 * p - 1))

#%%
# The Bezout combination y = beta1*lambda_p + beta2*lambda_1^p.
for p in (3, 5, 7, 11):
    y = construct_y(p)
    print(p, "C(p^2-2, p-1) mod p^2 =", y.congruence, "beta =", (y.beta1, y.beta2), "c2(y) =", y.c2_y)

#%%
# The full report, with a longer monomial sweep.
report = verify_theorem(5, sweep_degree=15)
print("index:", report.index)
print("sweep:", report.sweep.count, "monomials, violations:", len(report.sweep.violations))
for assumption in report.assumptions:
    print(" -", assumption)
