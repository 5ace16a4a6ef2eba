r"""
Restricting exterior powers to a circle
---------------------------------------
The circle sits in SU(p^2) as diag(z, 1/z, 1, ..., 1).  Restricting the
exterior power lambda_l to it gives a Laurent polynomial in z whose
coefficients count l-subsets of the weight list (1, -1, 0, ..., 0).
"""
from chernsub import (
    SUPolynomial,
    delta1_star,
    in_trivial_span,
    phi1_star,
    phi1_star_lambda,
    phi1_star_lambda_bruteforce,
    weight_sum_condition,
)

p = 3

#%%
# Closed form against direct enumeration of all l-subsets.
for ell in range(1, p * p):
    closed = phi1_star_lambda(ell, p)
    brute = phi1_star_lambda_bruteforce(ell, p)
    print(ell, closed.terms, "dim", closed.dim(), "match" if closed == brute else "MISMATCH")

#%%
# Restriction is a ring map, so products of lambdas restrict to products
# of Laurent polynomials.
x = SUPolynomial.lam(1, p) * SUPolynomial.lam(2, p)
print(phi1_star(x).terms)
print(phi1_star_lambda(1, p) * phi1_star_lambda(2, p) == phi1_star(x))

#%%
# On the centre mu_p every lambda_l acts by C(p^2, l) zeta^l.  Monomials
# whose index sum is divisible by p restrict trivially; lambda_1 does not.
for name, elem in [("L1", SUPolynomial.lam(1, p)),
                   ("L3", SUPolynomial.lam(3, p)),
                   ("L1^3", SUPolynomial.lam(1, p) ** 3)]:
    c = delta1_star(elem)
    print(name, c.coeffs, "trivial" if in_trivial_span(c) else "non-trivial",
          "passes weight filter" if weight_sum_condition(elem) else "filtered out")
