"""Stabilizer chains (Schreier-Sims) and the PermGroup container.

The chain is built with the deterministic incremental Schreier-Sims
algorithm; base points are the smallest points moved by the generator that
first needs them.  When the caller supplies the expected order, a
randomized variant first sifts random elements until the transversal
product reaches it; the deterministic pass then checks every Schreier
generator of that chain, so the final order is exact either way.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from ..arith import Factored, factorize
from .perm import Perm, check_perm, identity, inv, is_identity, mul

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240607
ELEMENT_CAP = 10**6
ORBIT_CAP = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration hit its configured cap; the answer is undecided."""


class TrivialGroupError(ValueError):
    pass


def _first_moved(p: Perm) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    raise ValueError("identity moves no point")


def _transversal(gens: list[Perm], point: int, degree: int) -> dict[int, Perm]:
    """Orbit of ``point`` under gens; trans[x] maps point to x."""
    trans = {point: identity(degree)}
    todo = [point]
    for x in todo:
        ux = trans[x]
        for s in gens:
            y = s[x]
            if y not in trans:
                trans[y] = mul(ux, s)
                todo.append(y)
    return trans


@dataclass
class StabilizerChain:
    degree: int
    base: list[int]
    strong: list[list[Perm]]            # strong[i] generates G^(i), the stabilizer of base[:i]
    transversals: list[dict[int, Perm]]

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Sift g from level ``start``; return (residue, level where sifting stopped)."""
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            u = self.transversals[i].get(x)
            if u is None:
                return g, i
            g = mul(g, inv(u))
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        h, j = self.strip(g)
        return j == len(self.base) and is_identity(h)

    def _refresh(self, level: int) -> None:
        self.transversals[level] = _transversal(self.strong[level], self.base[level], self.degree)

    def _insert(self, h: Perm, frm: int, to: int) -> None:
        """Add h as a strong generator on levels frm..to, extending the base if needed."""
        if to == len(self.base):
            self.base.append(_first_moved(h))
            self.strong.append([])
            self.transversals.append({})
        for lev in range(frm, to + 1):
            self.strong[lev].append(h)
            self._refresh(lev)

    def random_element(self, rng: random.Random) -> Perm:
        g = identity(self.degree)
        for t in reversed(self.transversals):
            g = mul(g, rng.choice(list(t.values())))
        return g

    def elements(self) -> Iterator[Perm]:
        reps = [list(t.values()) for t in self.transversals]
        k = len(reps)

        def rec(level: int, prefix: Perm) -> Iterator[Perm]:
            if level < 0:
                yield prefix
                return
            for w in reps[level]:
                yield from rec(level - 1, mul(prefix, w))

        yield from rec(k - 1, identity(self.degree))


def schreier_sims(gens: Sequence[Perm], degree: int,
                  start: StabilizerChain | None = None) -> StabilizerChain:
    """Deterministic incremental Schreier-Sims.

    With ``start`` (a chain whose level-0 generators generate the group)
    the loop only completes and thereby verifies that chain.
    """
    if start is not None:
        chain = start
    else:
        gens = [g for g in gens if not is_identity(g)]
        base: list[int] = []
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        chain = StabilizerChain(degree, base, [], [])
        for i in range(len(base)):
            chain.strong.append([g for g in gens if all(g[b] == b for b in base[:i])])
            chain.transversals.append(_transversal(chain.strong[i], base[i], degree))
    i = len(chain.base) - 1
    while i >= 0:
        jumped = False
        trans = chain.transversals[i]
        for x in list(trans):
            ux = trans[x]
            for s in chain.strong[i]:
                h = mul(mul(ux, s), inv(trans[s[x]]))
                if is_identity(h):
                    continue
                res, j = chain.strip(h, i + 1)
                if j < len(chain.base) or not is_identity(res):
                    chain._insert(res, i + 1, j)
                    i = j
                    jumped = True
                    break
            if jumped:
                break
        if not jumped:
            i -= 1
    return chain


def random_schreier_sims(gens: Sequence[Perm], degree: int, target: int,
                         rng: random.Random, max_rounds: int = 20000) -> StabilizerChain | None:
    """Sift random products until the chain reaches ``target``.

    The result is only a lower bound for the group order; callers must
    complete it with :func:`schreier_sims` before trusting it.  Returns
    None when the target is never reached.
    """
    gens = [g for g in gens if not is_identity(g)]
    chain = StabilizerChain(degree, [], [], [])
    for g in gens:
        res, j = chain.strip(g)
        if not is_identity(res):
            chain._insert(res, 0, j)
    pool = list(gens) * max(1, 10 // max(1, len(gens))) + list(gens)
    for _ in range(50):
        _product_replace(pool, rng)
    for _ in range(max_rounds):
        if chain.order == target:
            return chain
        if chain.order > target:
            return None
        g = _product_replace(pool, rng)
        res, j = chain.strip(g)
        if not is_identity(res):
            chain._insert(res, 0, j)
    return chain if chain.order == target else None


def _product_replace(pool: list[Perm], rng: random.Random) -> Perm:
    i, j = rng.sample(range(len(pool)), 2) if len(pool) > 1 else (0, 0)
    pool[i] = mul(pool[i], pool[j]) if rng.random() < 0.5 else mul(pool[j], pool[i])
    return pool[i]


class PermGroup:
    """A permutation group given by generators, with a lazily built chain."""

    def __init__(self, generators: Sequence[Sequence[int]], degree: int | None = None,
                 name: str | None = None, expected_order: int | None = None,
                 seed: int = DEFAULT_SEED):
        gens = [check_perm(g) for g in generators]
        if not gens or all(is_identity(g) for g in gens):
            raise TrivialGroupError("the trivial group is excluded")
        self.degree = degree if degree is not None else len(gens[0])
        if any(len(g) != self.degree for g in gens):
            raise ValueError("generators have inconsistent degrees")
        self.generators = [g for g in gens if not is_identity(g)]
        self.name = name
        self.expected_order = expected_order
        self.seed = seed
        self._chain: StabilizerChain | None = None

    def __repr__(self) -> str:
        return f"PermGroup({self.name or '?'}, degree={self.degree}, gens={len(self.generators)})"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            chain = None
            if self.expected_order is not None:
                chain = random_schreier_sims(self.generators, self.degree, self.expected_order,
                                             random.Random(self.seed))
                if chain is None:
                    logger.info("randomized chain missed %s; falling back", self.expected_order)
            self._chain = schreier_sims(self.generators, self.degree, start=chain)
        return self._chain

    def build_chain(self) -> StabilizerChain:
        return self.chain

    def order(self) -> int:
        return self.chain.order

    def group_order(self) -> Factored:
        return factorize(self.order())

    def contains(self, x: Sequence[int]) -> bool:
        return self.chain.contains(tuple(x))

    def random_element(self, rng: random.Random) -> Perm:
        return self.chain.random_element(rng)

    def elements(self, cap: int = ELEMENT_CAP) -> Iterator[Perm]:
        if self.order() > cap:
            raise BudgetExceeded(f"element enumeration cap {cap} < |G| = {self.order()}")
        return self.chain.elements()

    def orbit(self, point: int) -> list[int]:
        return list(_transversal(self.generators, point, self.degree))

    def conjugacy_class(self, x: Perm, cap: int = ORBIT_CAP) -> set[Perm]:
        """Orbit of x under conjugation by the generators (breadth first)."""
        cls = {x}
        todo = [x]
        ginv = [inv(g) for g in self.generators]
        for y in todo:
            for g, gi in zip(self.generators, ginv):
                z = mul(mul(gi, y), g)
                if z not in cls:
                    cls.add(z)
                    todo.append(z)
                    if len(cls) > cap:
                        raise BudgetExceeded(f"conjugacy class exceeds orbit cap {cap}")
        return cls

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)
