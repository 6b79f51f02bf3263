"""Exact integer and rational arithmetic helpers.

Rationals are fractions.Fraction throughout: always normalized, exact, and
str() already gives the canonical "num/den" wire form (denominator omitted
when it is 1).  Integers are plain Python ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 1000


def format_rational(r: Fraction) -> str:
    """Canonical string form: "num/den", "/den" omitted when den == 1."""
    return str(r)


def parse_rational(s: str) -> Fraction:
    """Parse the canonical form produced by format_rational."""
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a canonical rational: {s!r}")
    return Fraction(s)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # smallest witness sets with no pseudoprime below the stated bounds
    if n < 2047:
        witnesses: tuple[int, ...] = (2,)
    elif n < 1373653:
        witnesses = (2, 3)
    elif n < 3215031751:
        witnesses = (2, 3, 5, 7)
    elif n < 3474749660383:
        witnesses = (2, 3, 5, 7, 11, 13)
    else:
        witnesses = _MR_WITNESSES
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending, by sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(n + 1) if sieve[i]]


def _brent_rho(n: int) -> int:
    # Brent's cycle variant with batched gcds; deterministic parameter
    # sequence so factorizations are reproducible.
    from math import gcd

    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


@dataclass(frozen=True)
class PrimeFactorization:
    """Factorization of a positive integer: ((p1, e1), ...), p strictly increasing."""

    pairs: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.pairs)

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def factor_integer(n: int) -> PrimeFactorization:
    """Complete factorization of |n|, certified by Miller-Rabin.

    Trial division by small primes first, then Pollard-Brent rho on what
    remains.  Every recorded prime passes is_prime.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    counts: dict[int, int] = {}
    for p in _small_primes():
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return PrimeFactorization(tuple(sorted(counts.items())))


_SMALL_PRIMES: list[int] | None = None


def _small_primes() -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = primes_up_to(_TRIAL_BOUND)
    return _SMALL_PRIMES


def squarefree_kernel(r: Fraction | int) -> int:
    """Squarefree integer d with r = d * s^2 for some rational s.  Sign kept."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("squarefree kernel of 0 is undefined")
    kernel = 1
    for part in (r.numerator, r.denominator):
        if abs(part) == 1:
            continue
        for p, e in factor_integer(part):
            if e % 2:
                kernel *= p
    return kernel if r > 0 else -kernel


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1} by Euler's criterion; p an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls
