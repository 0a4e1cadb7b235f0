"""Finite fields GF(q) for small q = r^k.

Elements are encoded as integers 0..q-1 whose base-r digits are the
coordinates in the polynomial basis 1, x, ..., x^(k-1) modulo an
irreducible polynomial.  Multiplication goes through exp/log tables built
from a primitive element, addition through digitwise arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..arith import factorize, prime_power_split

# Irreducible (in fact primitive) monic polynomials, coefficients listed
# from the constant term up to but excluding the leading 1.
IRREDUCIBLE = {
    4: (1, 1),              # x^2 + x + 1
    8: (1, 1, 0),           # x^3 + x + 1
    16: (1, 1, 0, 0),       # x^4 + x + 1
    32: (1, 0, 1, 0, 0),    # x^5 + x^2 + 1
    9: (2, 2),              # x^2 + 2x + 2
    27: (1, 2, 0),          # x^3 + 2x + 1
    25: (2, 1),             # x^2 + x + 2
    49: (3, 1),             # x^2 + x + 3
}
MAX_FIELD = 1 << 12


class FieldError(ValueError):
    pass


def _digits(a: int, r: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, d = divmod(a, r)
        out.append(d)
    return out


def _undigits(ds, r: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * r + d
    return a


def _times_x(ds: list[int], poly: tuple[int, ...], r: int) -> list[int]:
    top = ds[-1]
    shifted = [0] + ds[:-1]
    return [(s - top * c) % r for s, c in zip(shifted, poly)]


def _find_primitive_poly(r: int, k: int) -> tuple[int, ...]:
    for coeffs in itertools.product(range(r), repeat=k):
        if coeffs[0] == 0:
            continue
        if _x_order(coeffs, r, k) == r**k - 1:
            return tuple(coeffs)
    raise FieldError(f"no primitive polynomial found for {r}^{k}")


def _x_order(poly, r, k) -> int:
    one = [1] + [0] * (k - 1)
    cur = _times_x(one, poly, r)
    n = 1
    while cur != one:
        cur = _times_x(cur, poly, r)
        n += 1
        if n > r**k:
            return 0
    return n


@dataclass(frozen=True)
class GF:
    """The field with q elements; build through :func:`field`."""

    q: int
    r: int
    k: int
    poly: tuple[int, ...]
    exp: tuple[int, ...]
    log: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...]

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    @property
    def primitive(self) -> int:
        return self.exp[1 % (self.q - 1)]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        return _undigits([(-d) % self.r for d in _digits(a, self.r, self.k)], self.r)

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg(b)]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if n == 0 else 0
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def frob(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.r**times)

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % self.r

    def elem(self, a: int) -> "FieldElem":
        return FieldElem(self, a)


@lru_cache(maxsize=None)
def field(q: int, poly: tuple[int, ...] | None = None) -> GF:
    split = prime_power_split(q)
    if split is None:
        raise FieldError(f"{q} is not a prime power")
    if q > MAX_FIELD:
        raise FieldError(f"field size {q} above supported bound {MAX_FIELD}")
    r, k = split
    if k == 1:
        g = next(g for g in range(1, r) if _is_generator(g, r))
        exp = [1]
        for _ in range(r - 2):
            exp.append(exp[-1] * g % r)
        poly = ()
    else:
        if poly is None:
            poly = IRREDUCIBLE.get(q) or _find_primitive_poly(r, k)
        if len(poly) != k:
            raise FieldError("polynomial degree does not match the field")
        one = [1] + [0] * (k - 1)
        exp, cur = [], one
        for _ in range(q - 1):
            exp.append(_undigits(cur, r))
            cur = _times_x(cur, tuple(poly), r)
        if len(set(exp)) != q - 1:
            # x is not primitive modulo this polynomial
            return _field_nonprimitive(q, r, k, tuple(poly))
    log = [0] * q
    for i, a in enumerate(exp):
        log[a] = i
    add = tuple(
        tuple(_undigits([(x + y) % r for x, y in zip(_digits(a, r, k), _digits(b, r, k))], r)
              for b in range(q))
        for a in range(q)
    )
    return GF(q, r, k, tuple(poly), tuple(exp), tuple(log), add)


def _field_nonprimitive(q, r, k, poly) -> GF:
    """Tables for an irreducible but non-primitive polynomial."""
    def pmul(a, b):
        da, db = _digits(a, r, k), _digits(b, r, k)
        acc = [0] * k
        for d in reversed(da):
            acc = _times_x(acc, poly, r)
            acc = [(x + d * y) % r for x, y in zip(acc, db)]
        return _undigits(acc, r)

    for g in range(2, q):
        exp, cur = [], 1
        for _ in range(q - 1):
            exp.append(cur)
            cur = pmul(cur, g)
        if len(set(exp)) == q - 1:
            break
    else:
        raise FieldError("supplied polynomial is reducible")
    log = [0] * q
    for i, a in enumerate(exp):
        log[a] = i
    add = tuple(
        tuple(_undigits([(x + y) % r for x, y in zip(_digits(a, r, k), _digits(b, r, k))], r)
              for b in range(q))
        for a in range(q)
    )
    return GF(q, r, k, poly, tuple(exp), tuple(log), add)


def _is_generator(g: int, r: int) -> bool:
    if r == 2:
        return g == 1
    return all(pow(g, (r - 1) // s, r) != 1 for s, _ in factorize(r - 1).factors)


@dataclass(frozen=True)
class FieldElem:
    """Operator-friendly wrapper around an encoded field element."""

    F: GF
    v: int

    def __add__(self, o: "FieldElem") -> "FieldElem":
        return FieldElem(self.F, self.F.add(self.v, o.v))

    def __sub__(self, o: "FieldElem") -> "FieldElem":
        return FieldElem(self.F, self.F.sub(self.v, o.v))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.F, self.F.neg(self.v))

    def __mul__(self, o: "FieldElem") -> "FieldElem":
        return FieldElem(self.F, self.F.mul(self.v, o.v))

    def __truediv__(self, o: "FieldElem") -> "FieldElem":
        return FieldElem(self.F, self.F.mul(self.v, self.F.inv(o.v)))

    def __pow__(self, n: int) -> "FieldElem":
        return FieldElem(self.F, self.F.pow(self.v, n))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.F, self.F.inv(self.v))

    def is_zero(self) -> bool:
        return self.v == 0
