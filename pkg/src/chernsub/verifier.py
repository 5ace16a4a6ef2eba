"""Finite certificate that the Chern subgroup of H^4(BSU(p^2)/mu_p; Z) is pZ.

Everything is pulled back along the circle S^1 -> SU(p^2), where
H^4(BS^1; Z) = Z t^2 and c2 becomes an integer.

Upper bound (every c2 of a descended representation is divisible by p):

* A: p | C(p^2, l) for every l, so for monomials lambda_L of length >= 2
  every delta_{L,i} is divisible by p and, by the product rule for c2,
  so is c2(lambda_L);
* B: p | C(p^2 - 2, pk - 1) for 0 < k < p, which covers the singletons
  lambda_{pk} that survive the weight-sum filter.

Lower bound: a Bezout combination of lambda_p and lambda_1^p with c2 = p.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Any

from . import __version__
from .chern import c1, c2, c2_from_character, c2_product_rule, total_chern
from .exactarith import binomial, binomial_mod_lucas, ext_gcd, require_prime
from .repring import (
    DEFAULT_ORACLE_CAP,
    LaurentElement,
    OracleSkipped,
    SUPolynomial,
    delta1_star,
    in_trivial_span,
    phi1_star,
    phi1_star_lambda,
    phi1_star_lambda_bruteforce,
    weight_sum_condition,
)

SCHEMA_VERSION = "chernsub.report/1"

OUT_OF_SCOPE = "outside theorem scope (odd primes only)"

ASSUMPTIONS = (
    "External axiom (Antieau): pi^*: H^4(BSU(p^2)/mu_p; Z) -> H^4(BSU(p^2); Z) "
    "is an isomorphism. Not verified here.",
    "If x in R(SU(p^2)) is pulled back from SU(p^2)/mu_p then alpha_L(x) = 0 "
    "whenever sum(L) is not divisible by p (necessary condition only; the "
    "irreducible-decomposition argument is not re-verified).",
    "A representation of SU(p^2) on which the centre mu_p acts trivially "
    "descends to SU(p^2)/mu_p (used to lift lambda_p and lambda_1^p).",
)


class OutOfScopePrime(ValueError):
    """p = 2: the result is only stated for odd primes."""


class CertificateError(RuntimeError):
    """A certificate that should hold at this prime failed."""


def _check_prime(p: int, allow_even: bool) -> None:
    require_prime(p)
    if p == 2 and not allow_even:
        raise OutOfScopePrime(
            f"p = 2 is {OUT_OF_SCOPE}; pass allow_even=True to compute anyway"
        )


# --------------------------------------------------------------------------
# Certificates A and B


@dataclass(frozen=True)
class DivisibilityCheck:
    """p | C(n, k), checked by exact reduction and by Lucas digits."""

    label: int
    n: int
    k: int
    value: int
    residue: int
    lucas_residue: int

    @property
    def passed(self) -> bool:
        return self.residue == 0 and self.lucas_residue == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": str(self.n),
            "k": str(self.k),
            "binomial": str(self.value),
            "residue": str(self.residue),
            "lucas_residue": str(self.lucas_residue),
            "passed": self.passed,
        }


def _divisibility(label: int, n: int, k: int, p: int) -> DivisibilityCheck:
    value = binomial(n, k)
    return DivisibilityCheck(label, n, k, value, value % p, binomial_mod_lucas(n, k, p))


def certify_dim_divisibility(p: int, allow_even: bool = False) -> list[DivisibilityCheck]:
    """Certificate A: p divides dim lambda_l = C(p^2, l) for 1 <= l < p^2."""
    _check_prime(p, allow_even)
    return [_divisibility(ell, p * p, ell, p) for ell in range(1, p * p)]


def certify_pk_c2_divisibility(p: int, allow_even: bool = False) -> list[DivisibilityCheck]:
    """Certificate B: p divides C(p^2 - 2, pk - 1) = -c2(lambda_{pk}) for 0 < k < p."""
    _check_prime(p, allow_even)
    return [_divisibility(k, p * p - 2, p * k - 1, p) for k in range(1, p)]


# --------------------------------------------------------------------------
# Second Chern classes of monomials


@dataclass(frozen=True)
class LambdaC2:
    ell: int
    dim: int
    c1: int
    c2: int
    closed_form: int
    series: tuple

    @property
    def passed(self) -> bool:
        return self.c1 == 0 and self.c2 == self.closed_form

    def to_dict(self) -> dict[str, Any]:
        return {
            "ell": str(self.ell),
            "dim": str(self.dim),
            "c1": str(self.c1),
            "c2": str(self.c2),
            "closed_form_c2": str(self.closed_form),
            "total_chern": [str(c) for c in self.series],
            "passed": self.passed,
        }


def lambda_c2_table(p: int, N: int = 2) -> list[LambdaC2]:
    """c1, c2 of every lambda_l on the circle, against -C(p^2 - 2, l - 1)."""
    if N < 2:
        raise ValueError("theorem mode needs truncation degree N >= 2")
    rows = []
    for ell in range(1, p * p):
        v = phi1_star_lambda(ell, p)
        series = total_chern(v, N)
        rows.append(
            LambdaC2(
                ell=ell,
                dim=v.dim(),
                c1=c1(series),
                c2=c2(series),
                closed_form=-binomial(p * p - 2, ell - 1),
                series=series.coeffs,
            )
        )
    return rows


@dataclass(frozen=True)
class C2Breakdown:
    """c2(lambda_L) assembled factor by factor via the product rule."""

    L: tuple[int, ...]
    delta_L: int
    delta_L_i: tuple[int, ...]
    factor_c2: tuple[int, ...]
    total: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "L": [str(e) for e in self.L],
            "delta_L": str(self.delta_L),
            "delta_L_i": [str(d) for d in self.delta_L_i],
            "factor_c2": [str(c) for c in self.factor_c2],
            "total_c2": str(self.total),
        }


def _check_sequence(L: tuple[int, ...], p: int) -> None:
    if any(not isinstance(e, int) for e in L):
        raise ValueError(f"exponent sequence {L} must contain integers")
    if list(L) != sorted(L):
        raise ValueError(f"exponent sequence {L} is not non-decreasing")
    if any(not 1 <= e <= p * p - 1 for e in L):
        raise ValueError(f"exponent sequence {L} has entries outside [1, {p * p - 1}]")


def direct_monomial_c2(L, p: int) -> int:
    """c2(lambda_L) from the total Chern class of the expanded weight system."""
    return c2(total_chern(phi1_star(SUPolynomial.monomial(L, p)), 2))


def monomial_c2(L, p: int, check: bool = True) -> C2Breakdown:
    L = tuple(L)
    require_prime(p)
    _check_sequence(L, p)
    dims = [binomial(p * p, ell) for ell in L]
    factor_c2 = tuple(-binomial(p * p - 2, ell - 1) for ell in L)
    delta = prod(dims)
    delta_i = tuple(delta // d for d in dims)
    total = sum(d * c for d, c in zip(delta_i, factor_c2))
    out = C2Breakdown(L, delta, delta_i, factor_c2, total)
    if check:
        if len(L) >= 2 and total % p:
            raise CertificateError(f"c2(lambda_{L}) = {total} is not divisible by {p}")
        direct = direct_monomial_c2(L, p)
        if direct != total:
            raise CertificateError(
                f"c2(lambda_{L}): product rule gives {total}, direct gives {direct}"
            )
    return out


# --------------------------------------------------------------------------
# Sweep over monomials passing the weight-sum filter


def qualifying_monomials(p: int, max_total_degree: int):
    """Non-empty non-decreasing L with parts < p^2, sum(L) <= bound, p | sum(L)."""
    top = p * p - 1

    def rec(prefix: list[int], lo: int, remaining: int):
        for ell in range(lo, min(top, remaining) + 1):
            prefix.append(ell)
            if sum(prefix) % p == 0:
                yield tuple(prefix)
            yield from rec(prefix, ell, remaining - ell)
            prefix.pop()

    yield from rec([], 1, max_total_degree)


@dataclass
class SweepSummary:
    max_total_degree: int
    count: int = 0
    by_length: dict[int, int] = field(default_factory=dict)
    violations: list[dict[str, Any]] = field(default_factory=list)
    product_rule_checked: int = 0
    oracle_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_total_degree": str(self.max_total_degree),
            "count": str(self.count),
            "by_length": {str(k): str(v) for k, v in sorted(self.by_length.items())},
            "product_rule_checked": str(self.product_rule_checked),
            "oracle_checked": str(self.oracle_checked),
            "violations": self.violations,
            "passed": self.passed,
        }


def sweep_weight_condition_monomials(
    p: int,
    max_total_degree: int,
    oracle_cap: int | None = None,
) -> SweepSummary:
    """Check p | c2(lambda_L) for every lambda_L passing the weight-sum filter.

    Each total is computed twice: through the product rule and from the
    expanded weight system.  With ``oracle_cap`` set, factors whose
    exterior powers fit under the cap are also rebuilt by brute force.
    """
    require_prime(p)
    summary = SweepSummary(max_total_degree)
    brute: dict[int, LaurentElement | None] = {}
    for L in qualifying_monomials(p, max_total_degree):
        x = SUPolynomial.monomial(L, p)
        assert weight_sum_condition(x)
        summary.count += 1
        summary.by_length[len(L)] = summary.by_length.get(len(L), 0) + 1
        rule = monomial_c2(L, p, check=False)
        direct = direct_monomial_c2(L, p)
        if rule.total != direct:
            summary.violations.append(
                {"L": [str(e) for e in L], "reason": "product rule disagrees",
                 "rule_c2": str(rule.total), "direct_c2": str(direct)}
            )
        if direct % p:
            summary.violations.append(
                {"L": [str(e) for e in L], "reason": "c2 not divisible by p",
                 "direct_c2": str(direct)}
            )
        if len(L) == 2:
            a, b = (phi1_star_lambda(e, p) for e in L)
            pair = c2_product_rule(
                a.dim(), c2(total_chern(a)), b.dim(), c2(total_chern(b))
            )
            summary.product_rule_checked += 1
            if pair != direct:
                summary.violations.append(
                    {"L": [str(e) for e in L], "reason": "pairwise rule disagrees",
                     "rule_c2": str(pair), "direct_c2": str(direct)}
                )
        if oracle_cap is not None:
            factors = []
            for ell in L:
                if ell not in brute:
                    try:
                        brute[ell] = phi1_star_lambda_bruteforce(ell, p, oracle_cap)
                    except OracleSkipped:
                        brute[ell] = None
                factors.append(brute[ell])
            if all(f is not None for f in factors):
                v = LaurentElement.unit()
                for f in factors:
                    v = v * f
                summary.oracle_checked += 1
                if c2(total_chern(v)) != direct:
                    summary.violations.append(
                        {"L": [str(e) for e in L], "reason": "oracle disagrees",
                         "direct_c2": str(direct)}
                    )
    return summary


# --------------------------------------------------------------------------
# Lower bound: an element with c2 = p


@dataclass(frozen=True)
class BezoutResult:
    p: int
    binom: int
    p_power: int
    congruence: int
    gcd: int
    beta1: int
    beta2: int
    c1_y: int
    c2_y: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "binomial": str(self.binom),
            "p_power": str(self.p_power),
            "gcd": str(self.gcd),
            "beta1": str(self.beta1),
            "beta2": str(self.beta2),
            "identity_value": str(self.beta1 * self.binom + self.beta2 * self.p_power),
        }


def construct_y(p: int, allow_even: bool = False) -> BezoutResult:
    """Find beta1, beta2 with beta1*C(p^2-2, p-1) + beta2*p^(2p-1) = -p.

    y = beta1*lambda_p + beta2*lambda_1^p then has c2 = p on the circle.
    """
    _check_prime(p, allow_even)
    binom = binomial(p * p - 2, p - 1)
    p_power = p ** (2 * p - 1)
    congruence = binom % (p * p)
    if congruence != p:
        raise CertificateError(f"C({p * p - 2}, {p - 1}) = {congruence} mod {p * p}, expected {p}")
    g, u, v = ext_gcd(binom, p_power)
    if g != p or g != gcd(binom, p_power):
        raise CertificateError(f"gcd(C({p * p - 2}, {p - 1}), {p}^{2 * p - 1}) = {g}, expected {p}")
    beta1, beta2 = -u, -v
    if beta1 * binom + beta2 * p_power != -p:
        raise CertificateError("Bezout identity does not reproduce -p")

    y = SUPolynomial.lam(p, p) * beta1 + SUPolynomial.lam(1, p) ** p * beta2
    if not weight_sum_condition(y):
        raise CertificateError("y fails the weight-sum condition")
    pulled = phi1_star_lambda(p, p) * beta1 + phi1_star_lambda(1, p) ** p * beta2
    if pulled != phi1_star(y):
        raise CertificateError("pullback of y is not additive/multiplicative")
    series = total_chern(pulled, 2)
    c1_y, c2_y = c1(series), c2(series)
    if c1_y != 0 or c2_y != p or c2_from_character(pulled) != p:
        raise CertificateError(f"y has c1 = {c1_y}, c2 = {c2_y}; expected 0 and {p}")
    return BezoutResult(p, binom, p_power, congruence, g, beta1, beta2, c1_y, c2_y)


# --------------------------------------------------------------------------
# Remark: lambda_p and lambda_1^p restrict trivially to the centre


def remark21_checks(p: int) -> dict[str, Any]:
    n = p * p
    lam_p = delta1_star(SUPolynomial.lam(p, p))
    lam_1p = delta1_star(SUPolynomial.lam(1, p) ** p)
    return {
        "delta1_lambda_p": [str(c) for c in lam_p.coeffs],
        "delta1_lambda_1_pow_p": [str(c) for c in lam_1p.coeffs],
        "lambda_p_trivial": in_trivial_span(lam_p) and lam_p.coeffs[0] == binomial(n, p),
        "lambda_1_pow_p_trivial": in_trivial_span(lam_1p) and lam_1p.coeffs[0] == n**p,
    }


# --------------------------------------------------------------------------
# Oracle sweep


@dataclass
class OracleSummary:
    cap: int
    matched: list[int] = field(default_factory=list)
    mismatched: list[int] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatched

    def to_dict(self) -> dict[str, Any]:
        return {
            "cap": str(self.cap),
            "compared": str(len(self.matched) + len(self.mismatched)),
            "matched": [str(e) for e in self.matched],
            "mismatched": [str(e) for e in self.mismatched],
            "skipped": [str(e) for e in self.skipped],
            "passed": self.passed,
        }


def oracle_sweep(p: int, cap: int = DEFAULT_ORACLE_CAP, workers: int = 1) -> OracleSummary:
    """Closed-form vs enumerated restriction of every lambda_l within the cap."""
    require_prime(p)
    out = OracleSummary(cap)
    for ell in range(1, p * p):
        try:
            brute = phi1_star_lambda_bruteforce(ell, p, cap, workers)
        except OracleSkipped:
            out.skipped.append(ell)
            continue
        (out.matched if brute == phi1_star_lambda(ell, p) else out.mismatched).append(ell)
    return out


# --------------------------------------------------------------------------
# Top-level report


@dataclass
class VerificationReport:
    prime: int
    scope_flag: str | None
    certificate_dim: list[DivisibilityCheck]
    certificate_pk: list[DivisibilityCheck]
    lambda_c2_table: list[LambdaC2]
    remark21: dict[str, Any]
    bezout: BezoutResult | None
    sweep: SweepSummary | None
    oracle: OracleSummary | None
    failures: list[str]
    timings: dict[str, float]
    assumptions: tuple[str, ...] = ASSUMPTIONS

    @property
    def upper_bound(self) -> bool:
        return (
            all(c.passed for c in self.certificate_dim)
            and all(c.passed for c in self.certificate_pk)
            and all(r.passed for r in self.lambda_c2_table)
            and (self.sweep is None or self.sweep.passed)
        )

    @property
    def lower_bound(self) -> bool:
        return self.bezout is not None and self.bezout.c2_y == self.prime

    @property
    def verified(self) -> bool:
        return (
            not self.failures
            and self.upper_bound
            and self.lower_bound
            and self.remark21["lambda_p_trivial"]
            and self.remark21["lambda_1_pow_p_trivial"]
            and (self.oracle is None or self.oracle.passed)
        )

    @property
    def index(self) -> int | None:
        """The Chern-subgroup index, asserted only for odd primes."""
        if self.scope_flag is None and self.verified:
            return self.prime
        return None

    def to_dict(self, timings: bool = True) -> dict[str, Any]:
        p = self.prime
        out = {
            "prime": str(p),
            "scope_flag": self.scope_flag,
            "certificate_dim": {str(c.label): c.to_dict() for c in self.certificate_dim},
            "certificate_pk": {str(c.label): c.to_dict() for c in self.certificate_pk},
            "lambda_c2_table": {str(r.ell): r.to_dict() for r in self.lambda_c2_table},
            "remark21": self.remark21,
            "congruence_mod_p2": {
                "binomial": str(binomial(p * p - 2, p - 1)),
                "modulus": str(p * p),
                "residue": str(binomial(p * p - 2, p - 1) % (p * p)),
            },
            "bezout": None if self.bezout is None else self.bezout.to_dict(),
            "y_c2": None if self.bezout is None else str(self.bezout.c2_y),
            "index": None if self.index is None else str(self.index),
            "sweep": None if self.sweep is None else self.sweep.to_dict(),
            "oracle": None if self.oracle is None else self.oracle.to_dict(),
            "failures": list(self.failures),
            "assumptions": list(self.assumptions),
            "timings": {k: f"{v:.6f}" for k, v in self.timings.items()} if timings else {},
            "version": {"schema": SCHEMA_VERSION, "package": __version__},
        }
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2) + "\n"


def verify_theorem(
    p: int,
    *,
    N: int = 2,
    sweep: bool = True,
    sweep_degree: int | None = None,
    oracle: bool = False,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    workers: int = 1,
) -> VerificationReport:
    """Run every certificate at the prime p and assemble the report.

    p = 2 is computed but flagged; its index is never asserted.
    """
    require_prime(p)
    if N < 2:
        raise ValueError("theorem mode needs truncation degree N >= 2")
    scope_flag = OUT_OF_SCOPE if p == 2 else None
    failures: list[str] = []
    timings: dict[str, float] = {}

    def timed(name, fn, *args, **kwargs):
        t0 = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        except CertificateError as exc:
            failures.append(f"{name}: {exc}")
            return None
        finally:
            timings[name] = time.perf_counter() - t0

    cert_dim = timed("certificate_dim", certify_dim_divisibility, p, allow_even=True)
    cert_pk = timed("certificate_pk", certify_pk_c2_divisibility, p, allow_even=True)
    table = timed("lambda_c2_table", lambda_c2_table, p, N)
    remark = timed("remark21", remark21_checks, p)
    bezout = timed("bezout", construct_y, p, allow_even=True)
    sweep_summary = None
    if sweep:
        degree = 2 * p if sweep_degree is None else sweep_degree
        sweep_summary = timed(
            "sweep", sweep_weight_condition_monomials, p, degree,
            oracle_cap if oracle else None,
        )
    oracle_summary = timed("oracle", oracle_sweep, p, oracle_cap, workers) if oracle else None

    for name, checks in (("certificate_dim", cert_dim), ("certificate_pk", cert_pk)):
        for c in checks or ():
            if not c.passed:
                failures.append(f"{name}: {p} does not divide C({c.n}, {c.k})")
    for row in table:
        if not row.passed:
            failures.append(f"lambda_c2_table: lambda_{row.ell} has c1={row.c1}, c2={row.c2}")
    if not (remark["lambda_p_trivial"] and remark["lambda_1_pow_p_trivial"]):
        failures.append("remark21: a lifted generator restricts non-trivially to the centre")
    if sweep_summary is not None:
        failures.extend(f"sweep: {v}" for v in sweep_summary.violations)
    if oracle_summary is not None and oracle_summary.mismatched:
        failures.append(f"oracle: mismatches at l = {oracle_summary.mismatched}")

    return VerificationReport(
        prime=p,
        scope_flag=scope_flag,
        certificate_dim=cert_dim,
        certificate_pk=cert_pk,
        lambda_c2_table=table,
        remark21=remark,
        bezout=bezout,
        sweep=sweep_summary,
        oracle=oracle_summary,
        failures=failures,
        timings=timings,
    )
