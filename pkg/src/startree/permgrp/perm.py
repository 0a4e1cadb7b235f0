"""Permutations as image tuples on {0, ..., degree-1}.

Products compose left to right: ``mul(a, b)`` applies a first, then b, so
``mul(a, b)[i] == b[a[i]]``.
"""

from __future__ import annotations

import math
from operator import itemgetter
from typing import Iterable, Sequence

Perm = tuple  # images[i] is the image of point i


def check_perm(images: Sequence[int]) -> Perm:
    p = tuple(images)
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def mul(a: Perm, b: Perm) -> Perm:
    if len(a) < 2:
        return tuple(b[x] for x in a)
    return itemgetter(*a)(b)


def inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def conj(x: Perm, g: Perm) -> Perm:
    """g^-1 x g."""
    return mul(mul(inv(g), x), g)


def power(a: Perm, k: int) -> Perm:
    if k < 0:
        a, k = inv(a), -k
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def cycle_lengths(p: Perm) -> list[int]:
    seen = bytearray(len(p))
    out = []
    for i in range(len(p)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
                n += 1
            out.append(n)
    return out


def order(p: Perm) -> int:
    return math.lcm(*cycle_lengths(p))


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a] = b
    return check_perm(img)


def fmt_cycles(p: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"
