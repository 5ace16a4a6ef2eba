"""Exact integer primitives: binomials, Lucas residues, extended Euclid.

Python ``int`` is the arbitrary-precision integer type throughout the
package and ``fractions.Fraction`` the rational type; both are already
canonical (no negative zero, fractions reduced with positive denominator).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Fraction",
    "binomial",
    "binomial_mod_lucas",
    "ext_gcd",
    "is_prime",
    "require_prime",
]


def is_prime(n: int) -> bool:
    """Trial-division primality test for small inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.

    Running product: after step i the accumulator equals C(n - k + i, i),
    so every division is exact.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    acc = 1
    for i in range(1, k + 1):
        acc = acc * (n - k + i) // i
    return acc


def _digits(n: int, p: int) -> list[int]:
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out


def binomial_mod_lucas(n: int, k: int, p: int) -> int:
    """C(n, k) mod p as the product of binomials of base-p digits."""
    require_prime(p)
    if n < 0 or k < 0:
        raise ValueError("binomial_mod_lucas requires n, k >= 0")
    if k > n:
        return 0
    dn, dk = _digits(n, p), _digits(k, p)
    dk += [0] * (len(dn) - len(dk))
    acc = 1
    for a, b in zip(dn, dk):
        # C(a, b) with a, b < p; zero as soon as a digit of k exceeds n's
        acc = acc * binomial(a, b) % p
        if acc == 0:
            break
    return acc


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(a, b) >= 0`` and ``u*a + v*b == g``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v
