"""Exact integer arithmetic: factorization, p-parts, multiplicative orders.

Group orders are carried as :class:`Factored` values so p-parts and
divisibility never require refactoring.  Factorization is trial division up
to ``TRIAL_LIMIT`` followed by Brent's variant of Pollard rho; primality is
Miller-Rabin with the first twelve primes as witnesses, which is
deterministic for every n < 3.3e24 (in particular below 2**64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

TRIAL_LIMIT = 10**6
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Integers above this are refused rather than risk an unbounded rho run.
MAX_FACTOR_BITS = 512
RHO_ITERATION_BUDGET = 2_000_000


class FactorizationBudgetExceeded(ArithmeticError):
    pass


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES = _small_primes(TRIAL_LIMIT)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    if limit <= TRIAL_LIMIT:
        return [p for p in _PRIMES if p <= limit]
    return _small_primes(limit)


@dataclass(frozen=True)
class Factored:
    """A positive integer together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("Factored values must be >= 1")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    @classmethod
    def from_factors(cls, factors: dict[int, int] | Iterable[tuple[int, int]]) -> "Factored":
        merged: dict[int, int] = {}
        items = factors.items() if isinstance(factors, dict) else factors
        for p, e in items:
            if e:
                merged[p] = merged.get(p, 0) + e
        if any(e < 0 for e in merged.values()):
            raise ValueError("negative exponent: not a natural number")
        value = 1
        for p, e in merged.items():
            value *= p**e
        return cls(value, tuple(sorted((p, e) for p, e in merged.items() if e)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        return self.as_dict().get(p, 0)

    def __mul__(self, other: "Factored") -> "Factored":
        d = self.as_dict()
        for p, e in other.factors:
            d[p] = d.get(p, 0) + e
        return Factored.from_factors(d)

    def __truediv__(self, other: "Factored") -> "Factored":
        d = self.as_dict()
        for p, e in other.factors:
            d[p] = d.get(p, 0) - e
            if d[p] < 0:
                raise ArithmeticError(f"{other.value} does not divide {self.value}")
        return Factored.from_factors(d)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _brent_rho(n: int, budget: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, 50):
        y, m, g, r, q = 2, 128, 1, 1, 1
        spent = 0
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
                g = math.gcd(q, n)
                k += m
            r *= 2
            spent += r
            if spent > budget:
                raise FactorizationBudgetExceeded(
                    f"factorization budget exceeded for {n.bit_length()}-bit cofactor"
                )
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationBudgetExceeded(f"pollard rho failed on {n}")


def _factor_into(n: int, out: dict[int, int], budget: int) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n, budget)
    _factor_into(d, out, budget)
    _factor_into(n // d, out, budget)


def factorize(n: int, *, rho_budget: int = RHO_ITERATION_BUDGET) -> Factored:
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if n.bit_length() > MAX_FACTOR_BITS:
        raise FactorizationBudgetExceeded(
            f"factorization budget exceeded: {n.bit_length()} bits > {MAX_FACTOR_BITS}"
        )
    out: dict[int, int] = {}
    m = n
    for p in _PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m > 1:
        if m < TRIAL_LIMIT * TRIAL_LIMIT:
            out[m] = out.get(m, 0) + 1
        else:
            _factor_into(m, out, rho_budget)
    return Factored.from_factors(out)


def p_part(n: Factored | int, p: int) -> tuple[int, int]:
    """Return ``(p**a, a)`` where p**a exactly divides n."""
    if isinstance(n, Factored):
        a = n.exponent(p)
        return p**a, a
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return p**a, a


def mult_order(q: int, p: int) -> int:
    """Multiplicative order of q modulo the odd prime p."""
    if p == 2:
        raise ValueError("mult_order is only defined here for odd primes p")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if q % p == 0:
        raise ValueError(f"order undefined: {p} divides {q}")
    d = p - 1
    for r, _ in factorize(p - 1).factors:
        while d % r == 0 and pow(q, d // r, p) == 1:
            d //= r
    return d


def prime_power_split(q: int) -> tuple[int, int] | None:
    """Return ``(r, k)`` with q == r**k and r prime, or None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f.factors) != 1:
        return None
    return f.factors[0]


def is_prime_power(q: int) -> bool:
    return prime_power_split(q) is not None
