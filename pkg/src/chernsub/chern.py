"""Characteristic classes of circle representations in H*(BS^1; Z) = Z[t].

A virtual S^1-representation sum_a m_a z^a splits into line bundles of
first Chern class a*t, so

    c(v)  = prod_a (1 + a t)^{m_a}
    ch(v) = sum_a m_a exp(a t)

both truncated at t^N.  Negative multiplicities go through the series
inverse of (1 + a t).
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import factorial
from numbers import Rational

from .repring import LaurentElement

__all__ = [
    "TruncatedSeries",
    "c1",
    "c2",
    "c2_from_character",
    "c2_product_rule",
    "chern_character",
    "total_chern",
]

DEFAULT_DEGREE = 2


class TruncatedSeries:
    """Polynomial in t with exact coefficients, truncated above t^N."""

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs: Sequence[Rational], N: int | None = None):
        coeffs = list(coeffs)
        if N is None:
            N = max(len(coeffs) - 1, 0)
        if N < 0:
            raise ValueError("truncation degree must be >= 0")
        coeffs = (coeffs + [0] * (N + 1))[: N + 1]
        self.N = N
        self.coeffs = tuple(_normalize(c) for c in coeffs)

    @classmethod
    def one(cls, N: int = DEFAULT_DEGREE) -> TruncatedSeries:
        return cls([1], N)

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k <= self.N else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.N, self.coeffs))

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        N = min(self.N, other.N)
        return TruncatedSeries([self[k] + other[k] for k in range(N + 1)], N)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.N)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | Rational) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([other * c for c in self.coeffs], self.N)
        N = min(self.N, other.N)
        out = [0] * (N + 1)
        for i in range(N + 1):
            a = self.coeffs[i]
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedSeries:
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [a0 if a0 in (1, -1) else Fraction(1) / a0]
        for k in range(1, self.N + 1):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv.append(-s * inv[0])
        return TruncatedSeries(inv, self.N)

    def __pow__(self, n: int) -> TruncatedSeries:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = TruncatedSeries.one(self.N)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if k == 0:
                terms.append(str(c))
            elif c:
                terms.append(f"{c}*t^{k}" if k > 1 else f"{c}*t")
        return " + ".join(terms) + f" + O(t^{self.N + 1})"


def _normalize(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _signed_binomial(m: int, k: int) -> int:
    """Coefficient of x^k in (1 + x)^m for any integer m."""
    num = 1
    for i in range(k):
        num *= m - i
    return num // factorial(k)


def total_chern(v: LaurentElement, N: int = DEFAULT_DEGREE) -> TruncatedSeries:
    if N < 0:
        raise ValueError("truncation degree must be >= 0")
    result = TruncatedSeries.one(N)
    for a, m in v.items():
        if a == 0:
            continue
        factor = TruncatedSeries(
            [_signed_binomial(m, k) * a**k for k in range(N + 1)], N
        )
        result = result * factor
    if N >= 2:
        _check_newton(v, result)
    return result


def _check_newton(v: LaurentElement, c: TruncatedSeries) -> None:
    # c1 = s1, c2 = (s1^2 - s2) / 2 with s_k the weighted power sums
    s1 = sum(m * a for a, m in v.items())
    s2 = sum(m * a * a for a, m in v.items())
    twice_c2 = s1 * s1 - s2
    if twice_c2 % 2:
        raise ArithmeticError(f"non-integral c2 from power sums {s1}, {s2}")
    if c[1] != s1 or c[2] != twice_c2 // 2:
        raise ArithmeticError(f"total Chern class {c!r} disagrees with power sums")


def _chern_coefficient(s: TruncatedSeries, k: int) -> int:
    if s.N < k:
        raise ValueError(f"c{k} needs truncation degree >= {k}, series has N={s.N}")
    if s[0] != 1:
        raise ValueError("not a total Chern class: constant term is not 1")
    return s[k]


def c1(s: TruncatedSeries) -> int:
    return _chern_coefficient(s, 1)


def c2(s: TruncatedSeries) -> int:
    return _chern_coefficient(s, 2)


def chern_character(v: LaurentElement, N: int = DEFAULT_DEGREE) -> TruncatedSeries:
    if N < 0:
        raise ValueError("truncation degree must be >= 0")
    coeffs = []
    for k in range(N + 1):
        power_sum = sum(m * a**k for a, m in v.items())
        coeffs.append(Fraction(power_sum, factorial(k)))
    return TruncatedSeries(coeffs, N)


def c2_from_character(v: LaurentElement) -> int:
    """c2 read off the degree-2 part of ch, valid when c1 vanishes."""
    ch = chern_character(v, 2)
    if ch[1] != 0:
        raise ValueError(f"c1 = {ch[1]} is nonzero; ch_2 no longer determines c2")
    value = -Fraction(ch[2])
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral c2 {value} from the Chern character")
    return int(value)


def c2_product_rule(dim_a: int, c2_a: int, dim_b: int, c2_b: int) -> int:
    """c2 of a tensor product of two bundles with vanishing c1."""
    return dim_b * c2_a + dim_a * c2_b
