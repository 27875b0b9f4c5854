"""Exact elementary number theory on nonnegative integers."""

from __future__ import annotations

import math


class DomainError(ValueError):
    """Raised when an arithmetic function is called outside its domain."""


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError(f"gcd expects nonnegative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise DomainError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def multiplicative_order(r: int, m: int) -> int:
    """Least k >= 1 with r**k == 1 (mod m)."""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    r %= m
    if math.gcd(r, m) != 1:
        raise DomainError(f"{r} is not a unit modulo {m}")
    one = 1 % m
    k, x = 1, r
    while x != one:
        x = x * r % m
        k += 1
    return k


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def geometric_sum_mod(r: int, step: int, terms: int, modulus: int) -> int:
    """Sum of r**(step*i) for 0 <= i < terms, reduced mod `modulus`.

    Stands in for the integer quotient (r**a - 1) / (r**b - 1) with
    a = b * terms, which is never formed explicitly.
    """
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if step < 0 or terms < 0:
        raise DomainError("step and terms must be nonnegative")
    q = pow(r, step, modulus)
    # left-to-right over the bits of `terms`: total = sum of q^i for i < k, power = q^k
    total, power = 0, 1 % modulus
    for bit in bin(terms)[2:]:
        total = total * (1 + power) % modulus
        power = power * power % modulus
        if bit == "1":
            total = (1 + q * total) % modulus
            power = power * q % modulus
    return total
