"""Exact verification that the Chern subgroup of H^4(BSU(p^2)/mu_p; Z) is pZ."""

__version__ = "0.1.0"

from .chern import (  # noqa: E402
    TruncatedSeries,
    c1,
    c2,
    c2_from_character,
    c2_product_rule,
    chern_character,
    total_chern,
)
from .exactarith import binomial, binomial_mod_lucas, ext_gcd, is_prime  # noqa: E402
from .repring import (  # noqa: E402
    CyclotomicElement,
    LaurentElement,
    OracleSkipped,
    SUPolynomial,
    delta1_star,
    in_trivial_span,
    laurent_mul,
    phi1_star,
    phi1_star_lambda,
    phi1_star_lambda_bruteforce,
    weight_sum_condition,
)
from .verifier import (  # noqa: E402
    C2Breakdown,
    VerificationReport,
    construct_y,
    monomial_c2,
    sweep_weight_condition_monomials,
    verify_theorem,
)
