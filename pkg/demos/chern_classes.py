r"""
Chern classes of circle representations
---------------------------------------
A weight system sum m_a z^a splits into line bundles with first Chern class
a*t, so the total Chern class is a product of (1 + a t)^{m_a}.  Negative
multiplicities (virtual bundles) use the series inverse.
"""
from chernsub import (
    LaurentElement,
    c2,
    c2_from_character,
    c2_product_rule,
    chern_character,
    phi1_star_lambda,
    total_chern,
)

#%%
# Every lambda_l restricts to copies of z + 1/z plus trivial summands, so
# c = (1 - t^2)^m with m = C(p^2 - 2, l - 1).
p = 3
for ell in range(1, p * p):
    print(ell, total_chern(phi1_star_lambda(ell, p), 4))

#%%
# A virtual bundle: minus (z + 1/z) has c = 1 / (1 - t^2).
print(total_chern(-LaurentElement({1: 1, -1: 1}), 6))

#%%
# The Chern character is exact over the rationals and multiplicative.
v = LaurentElement({2: 1, -1: 3})
w = LaurentElement({1: -2, 0: 5})
print(chern_character(v, 3))
print(chern_character(v * w, 3) == chern_character(v, 3) * chern_character(w, 3))

#%%
# With c1 = 0 the degree-two part of ch is -c2, and c2 of a tensor product
# follows from dimensions and c2 of the factors.
a, b = phi1_star_lambda(1, p), phi1_star_lambda(3, p)
print(c2_from_character(a), c2(total_chern(a)))
print(c2(total_chern(a * b)),
      c2_product_rule(a.dim(), c2(total_chern(a)), b.dim(), c2(total_chern(b))))
