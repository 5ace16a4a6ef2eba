"""Representation rings of S^1, mu_p and SU(p^2), and the restriction maps.

* ``LaurentElement`` -- R(S^1) = Z[z, 1/z] as a sparse weight -> multiplicity map.
* ``CyclotomicElement`` -- R(mu_p) = Z[zeta]/(zeta^p - 1) as a length-p vector.
* ``SUPolynomial`` -- R(SU(p^2)) = Z[lambda_1, ..., lambda_{p^2-1}] in the
  monomial basis lambda_L, L a non-decreasing exponent sequence.

The circle S^1 -> SU(p^2) sends x to diag(x, 1/x, 1, ..., 1), so the weights
of the standard representation restricted to S^1 are (1, -1, 0, ..., 0).
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .exactarith import binomial, require_prime

__all__ = [
    "CyclotomicElement",
    "LaurentElement",
    "OracleSkipped",
    "SUPolynomial",
    "circle_weights",
    "delta1_star",
    "in_trivial_span",
    "laurent_mul",
    "phi1_star",
    "phi1_star_lambda",
    "phi1_star_lambda_bruteforce",
    "weight_sum_condition",
]

DEFAULT_ORACLE_CAP = 10**7


class OracleSkipped(Exception):
    """The brute-force enumeration would exceed its subset budget."""

    def __init__(self, ell: int, p: int, count: int, cap: int):
        super().__init__(f"C({p * p}, {ell}) = {count} subsets exceeds cap {cap}")
        self.ell, self.p, self.count, self.cap = ell, p, count, cap


# --------------------------------------------------------------------------
# R(S^1)


class LaurentElement:
    """Finitely supported map weight -> multiplicity, i.e. sum m_a z^a."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for a, m in items:
            acc[int(a)] = acc.get(int(a), 0) + int(m)
        self._terms = {a: m for a, m in sorted(acc.items()) if m}

    @classmethod
    def unit(cls) -> LaurentElement:
        return cls({0: 1})

    @classmethod
    def z(cls, a: int = 1) -> LaurentElement:
        return cls({a: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, a: int) -> int:
        return self._terms.get(a, 0)

    def dim(self) -> int:
        """Virtual dimension: the total multiplicity."""
        return sum(self._terms.values())

    def is_genuine(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def conjugate(self) -> LaurentElement:
        """Apply z -> 1/z."""
        return LaurentElement({-a: m for a, m in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: LaurentElement) -> LaurentElement:
        return LaurentElement(itertools.chain(self.items(), other.items()))

    def __neg__(self) -> LaurentElement:
        return LaurentElement({a: -m for a, m in self.items()})

    def __sub__(self, other: LaurentElement) -> LaurentElement:
        return self + (-other)

    def __mul__(self, other: LaurentElement | int) -> LaurentElement:
        if isinstance(other, int):
            return LaurentElement({a: other * m for a, m in self.items()})
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentElement:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        result, base = LaurentElement.unit(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"LaurentElement({self._terms})"


def laurent_mul(a: LaurentElement, b: LaurentElement) -> LaurentElement:
    out: dict[int, int] = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            out[wa + wb] = out.get(wa + wb, 0) + ma * mb
    return LaurentElement(out)


# --------------------------------------------------------------------------
# R(mu_p)


class CyclotomicElement:
    """sum_i c_i zeta^i with zeta^p = 1, stored as a length-p tuple."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        if len(coeffs) != p:
            raise ValueError(f"expected {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, p: int, exponent: int, coeff: int = 1) -> CyclotomicElement:
        c = [0] * p
        c[exponent % p] = coeff
        return cls(p, c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def _check(self, other: CyclotomicElement) -> None:
        if self.p != other.p:
            raise ValueError("mismatched primes")

    def __add__(self, other: CyclotomicElement) -> CyclotomicElement:
        self._check(other)
        return CyclotomicElement(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: CyclotomicElement | int) -> CyclotomicElement:
        if isinstance(other, int):
            return CyclotomicElement(self.p, [other * c for c in self.coeffs])
        self._check(other)
        out = [0] * self.p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % self.p] += a * b
        return CyclotomicElement(self.p, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"CyclotomicElement(p={self.p}, {self.coeffs})"


def in_trivial_span(c: CyclotomicElement) -> bool:
    """True iff c lies in Z{1}, i.e. every zeta^i coefficient (i > 0) vanishes."""
    return not any(c.coeffs[1:])


# --------------------------------------------------------------------------
# R(SU(p^2))


def _canonical_key(p: int, key: Iterable[int]) -> tuple[int, ...]:
    k = tuple(sorted(int(e) for e in key))
    top = p * p - 1
    for e in k:
        if not 1 <= e <= top:
            raise ValueError(f"exponent index {e} outside [1, {top}] for p={p}")
    return k


class SUPolynomial:
    """sum_L alpha_L lambda_L over non-decreasing sequences L."""

    __slots__ = ("p", "_coeffs")

    def __init__(self, p: int, coeffs: Mapping[Sequence[int], int] | None = None):
        self.p = p
        acc: dict[tuple[int, ...], int] = {}
        for key, c in (coeffs or {}).items():
            k = _canonical_key(p, key)
            acc[k] = acc.get(k, 0) + int(c)
        self._coeffs = {k: c for k, c in sorted(acc.items()) if c}

    @classmethod
    def unit(cls, p: int) -> SUPolynomial:
        return cls(p, {(): 1})

    @classmethod
    def lam(cls, ell: int, p: int) -> SUPolynomial:
        return cls(p, {(ell,): 1})

    @classmethod
    def monomial(cls, L: Sequence[int], p: int, coeff: int = 1) -> SUPolynomial:
        return cls(p, {tuple(L): coeff})

    def alpha(self, L: Sequence[int]) -> int:
        return self._coeffs.get(tuple(sorted(L)), 0)

    def items(self):
        return self._coeffs.items()

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SUPolynomial):
            return NotImplemented
        return self.p == other.p and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.p, tuple(self._coeffs.items())))

    def _check(self, other: SUPolynomial) -> None:
        if self.p != other.p:
            raise ValueError("mismatched primes")

    def __add__(self, other: SUPolynomial) -> SUPolynomial:
        self._check(other)
        merged = dict(self._coeffs)
        for k, c in other.items():
            merged[k] = merged.get(k, 0) + c
        return SUPolynomial(self.p, merged)

    def __neg__(self) -> SUPolynomial:
        return SUPolynomial(self.p, {k: -c for k, c in self.items()})

    def __sub__(self, other: SUPolynomial) -> SUPolynomial:
        return self + (-other)

    def __mul__(self, other: SUPolynomial | int) -> SUPolynomial:
        if isinstance(other, int):
            return SUPolynomial(self.p, {k: other * c for k, c in self.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for ka, ca in self.items():
            for kb, cb in other.items():
                k = tuple(sorted(ka + kb))
                out[k] = out.get(k, 0) + ca * cb
        return SUPolynomial(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SUPolynomial:
        if n < 0:
            raise ValueError("negative powers are not defined in R(SU(p^2))")
        result, base = SUPolynomial.unit(self.p), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"SUPolynomial(p={self.p}, 0)"
        parts = []
        for k, c in self.items():
            mono = "*".join(f"L{e}" for e in k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return f"SUPolynomial(p={self.p}, {' + '.join(parts)})"


def weight_sum_condition(x: SUPolynomial) -> bool:
    """Necessary condition for x to come from SU(p^2)/mu_p.

    Every monomial lambda_L carrying a nonzero coefficient must have
    sum(L) divisible by p.
    """
    return all(sum(k) % x.p == 0 for k, _ in x.items())


def delta1_star(x: SUPolynomial) -> CyclotomicElement:
    """Restriction to the central mu_p: lambda_l -> C(p^2, l) zeta^l."""
    p = x.p
    n = p * p
    out = [0] * p
    for key, c in x.items():
        coeff = c
        for ell in key:
            coeff *= binomial(n, ell)
        out[sum(key) % p] += coeff
    return CyclotomicElement(p, out)


# --------------------------------------------------------------------------
# Restriction to the circle


def circle_weights(p: int) -> list[int]:
    """Weights of the standard representation of SU(p^2) restricted to S^1."""
    return [1, -1] + [0] * (p * p - 2)


def _check_ell(ell: int, p: int) -> None:
    if not 1 <= ell <= p * p - 1:
        raise ValueError(f"lambda index {ell} outside [1, {p * p - 1}] for p={p}")


@lru_cache(maxsize=None)
def _phi1_star_lambda(ell: int, p: int) -> LaurentElement:
    m = p * p - 2
    side = binomial(m, ell - 1)
    return LaurentElement({1: side, -1: side, 0: binomial(m, ell - 2) + binomial(m, ell)})


def phi1_star_lambda(ell: int, p: int) -> LaurentElement:
    """Closed form for the circle restriction of lambda_ell.

    Subsets containing both the z and 1/z slots contribute weight 0,
    exactly one of them weight +-1, neither weight 0.
    """
    require_prime(p)
    _check_ell(ell, p)
    return _phi1_star_lambda(ell, p)


def phi1_star(x: SUPolynomial) -> LaurentElement:
    total = LaurentElement()
    for key, c in x.items():
        term = LaurentElement.unit()
        for ell in key:
            term = term * phi1_star_lambda(ell, x.p)
        total = total + term * c
    return total


def _tally_with_first(args: tuple[list[int], int, int]) -> Counter:
    weights, first, ell = args
    head = weights[first]
    rest = weights[first + 1 :]
    sums = Counter(map(sum, itertools.combinations(rest, ell - 1)))
    return Counter({head + s: m for s, m in sums.items()})


def phi1_star_lambda_bruteforce(
    ell: int,
    p: int,
    cap: int = DEFAULT_ORACLE_CAP,
    workers: int = 1,
) -> LaurentElement:
    """Weights of lambda_ell on S^1 by enumerating every ell-subset of slots.

    The subsets are partitioned by their smallest slot index; with
    ``workers > 1`` the blocks are tallied in separate processes.  The
    result does not depend on the partition.  Raises ``OracleSkipped`` when
    C(p^2, ell) exceeds ``cap``.
    """
    require_prime(p)
    _check_ell(ell, p)
    n = p * p
    count = binomial(n, ell)
    if count > cap:
        raise OracleSkipped(ell, p, count, cap)
    weights = circle_weights(p)
    jobs = [(weights, first, ell) for first in range(n - ell + 1)]
    tally: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_with_first, jobs):
                tally.update(part)
    else:
        for job in jobs:
            tally.update(_tally_with_first(job))
    return LaurentElement(tally)
