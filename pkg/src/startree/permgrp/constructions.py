"""From-scratch constructions behind the shipped generator files.

``python3 -m startree.permgrp.constructions`` rewrites the data directory;
the tests rebuild each group and compare with the shipped file.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

from .builders import PACKAGE_DATA, _line_action, _moebius, dump_generators
from .chain import DEFAULT_SEED, PermGroup
from .field import field
from .perm import Perm, inv, is_identity, mul


def _delta(q: int, on_squares: int, on_nonsquares: int):
    """x -> c x^3 with c depending on whether x is a square (0 counts as one)."""
    F = field(q)
    squares = {F.mul(x, x) for x in F.nonzero}

    def f(x):
        if x is None:
            return None
        c = on_squares if x == 0 or x in squares else on_nonsquares
        return F.mul(F.from_int(c), F.pow(x, 3))
    return f


# Constants for the cubing map; 1/9 is 5 mod 11 and 18 mod 23.
MATHIEU_DELTA = {11: (1, 5), 23: (18, 9)}


def mathieu_large(q: int) -> list[Perm]:
    """PSL(2,q) on the projective line together with a cubing map (q = 11 or 23)."""
    F = field(q)
    minus_one = F.neg(1)
    return _line_action(F, [
        _moebius(F, 1, 1, 0, 1),
        _moebius(F, F.mul(F.primitive, F.primitive), 0, 0, 1),
        _moebius(F, 0, minus_one, 1, 0),
        _delta(q, *MATHIEU_DELTA[q]),
    ])


def point_stabilizer(G: PermGroup, point: int, target: int, seed: int = DEFAULT_SEED,
                     tries: int = 200) -> list[Perm]:
    """Two random elements of G_point generating a subgroup of order ``target``.

    The result acts on the remaining points, relabelled in increasing order.
    """
    rng = random.Random(seed)
    trans = {}
    todo = [point]
    trans[point] = tuple(range(G.degree))
    for x in todo:
        for s in G.generators:
            y = s[x]
            if y not in trans:
                trans[y] = mul(trans[x], s)
                todo.append(y)

    def stab_elem():
        g = G.random_element(rng)
        return mul(g, inv(trans[g[point]]))

    keep = [x for x in range(G.degree) if x != point]
    relabel = {x: i for i, x in enumerate(keep)}
    for _ in range(tries):
        a, b = stab_elem(), stab_elem()
        if is_identity(a) or is_identity(b):
            continue
        gens = [tuple(relabel[g[x]] for x in keep) for g in (a, b)]
        if PermGroup(gens).order() == target:
            return gens
    raise RuntimeError("no generating pair found for the point stabilizer")


# Janko's 7x7 matrices over GF(11); Y is the cyclic shift.
JANKO_Z = (
    (-3, 2, -1, -1, -3, -1, -3),
    (-2, 1, 1, 3, 1, 3, 3),
    (-1, -1, -3, -1, -3, -3, 2),
    (-1, -3, -1, -3, -3, 2, -1),
    (-3, -1, -3, -3, 2, -1, -1),
    (1, 3, 3, -2, 1, 1, 3),
    (3, 3, -2, 1, 1, 3, 1),
)


# A point of PG(6, 11) whose orbit under the two matrices has 1540 points,
# the smallest orbit found by a search over vectors of small support.
JANKO_START = (1, 1, 4, 0, 0, 1, 0)


def janko_j1() -> list[Perm]:
    """Janko's matrix generators acting on the orbit of JANKO_START."""
    p = 11
    Y = tuple(tuple(int(j == (i + 1) % 7) for j in range(7)) for i in range(7))
    Z = tuple(tuple(x % p for x in row) for row in JANKO_Z)
    mats = (Y, Z)

    def act(v, A):
        w = [sum(v[i] * A[i][j] for i in range(7)) % p for j in range(7)]
        s = pow(next(x for x in w if x), -1, p)
        return tuple(x * s % p for x in w)

    orbit = {JANKO_START: 0}
    todo = [JANKO_START]
    for v in todo:
        for A in mats:
            w = act(v, A)
            if w not in orbit:
                orbit[w] = len(orbit)
                todo.append(w)
    pts = sorted(orbit, key=orbit.get)
    return [tuple(orbit[act(v, A)] for v in pts) for A in mats]


def suzuki(q: int) -> list[Perm]:
    """Sz(q) on the q^2 + 1 points of its ovoid, q = 2^(2n+1).

    Affine points (a, b) with the point at infinity; the point stabilizer is
    generated by the translations and the torus, and an involution swaps
    infinity with (0, 0).  Here sigma is x -> x^r with r^2 = 2q.
    """
    F = field(q)
    r = 2
    while r * r < 2 * q:
        r *= 2
    sig = lambda x: F.pow(x, r)
    pts = [(a, b) for a in range(q) for b in range(q)] + [None]
    index = {pt: i for i, pt in enumerate(pts)}

    def trans(al, be):
        def f(pt):
            if pt is None:
                return None
            a, b = pt
            return (F.add(a, al), F.add(F.add(b, be), F.mul(sig(al), a)))
        return f

    def torus(k):
        def f(pt):
            if pt is None:
                return None
            a, b = pt
            return (F.mul(k, a), F.mul(F.pow(k, r + 1), b))
        return f

    def swap(pt):
        if pt is None:
            return (0, 0)
        a, b = pt
        if a == 0 and b == 0:
            return None
        z = F.add(F.add(F.pow(a, r + 2), F.mul(a, b)), sig(b))
        zi = F.inv(z)
        return (F.mul(b, zi), F.mul(a, zi))

    maps = [trans(1, 0), trans(0, 1), torus(F.primitive), swap]
    return [tuple(index[f(pt)] for pt in pts) for f in maps]


def build_all() -> dict[str, tuple[list[Perm], int, str, int]]:
    out = {}
    m12 = mathieu_large(11)
    out["m12"] = (m12, 12, "M12", 95040)
    G12 = PermGroup(m12, expected_order=95040)
    out["m11"] = (point_stabilizer(G12, 11, 7920), 11, "M11", 7920)
    m24 = mathieu_large(23)
    out["m24"] = (m24, 24, "M24", 244823040)
    G24 = PermGroup(m24, expected_order=244823040)
    out["m23"] = (point_stabilizer(G24, 23, 10200960), 23, "M23", 10200960)
    j1 = janko_j1()
    out["j1"] = (j1, len(j1[0]), "J1", 175560)
    sz = suzuki(8)
    out["sz8"] = (sz, 65, "Sz(8)", 29120)
    return out


def write_all(target: Path = PACKAGE_DATA) -> None:
    target.mkdir(parents=True, exist_ok=True)
    for key, (gens, degree, name, order) in build_all().items():
        G = PermGroup(gens, expected_order=order)
        if G.order() != order:
            raise RuntimeError(f"{name}: built order {G.order()} != {order}")
        (target / f"{key}.json").write_text(dump_generators(gens, degree, name, order))


if __name__ == "__main__":
    write_all(Path(sys.argv[1]) if len(sys.argv) > 1 else PACKAGE_DATA)
