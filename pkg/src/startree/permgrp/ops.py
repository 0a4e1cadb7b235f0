"""Group-level measurements: cyclic Sylow search, centralizers, normalizers.

All searches are bounded.  When a bound is hit the result is an explicit
"undecided" outcome or a :class:`BudgetExceeded` error, never a silent
negative.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from ..arith import Factored, factorize, p_part
from .chain import DEFAULT_SEED, ELEMENT_CAP, ORBIT_CAP, BudgetExceeded, PermGroup
from .perm import Perm, inv, is_identity, mul, order, power

RANDOM_TRIES = 4000
# Exhaustive element scans stop above this many (element x degree) steps.
SCAN_WORK_CAP = 6 * 10**7


class Search(str, enum.Enum):
    FOUND = "found"
    ABSENT = "absent"
    UNDECIDED = "undecided"


@dataclass
class PPartSearch:
    status: Search
    element: Perm | None = None
    p_part: int = 1
    method: str = ""
    witness: tuple[Perm, Perm] | None = None   # commuting pair spanning C_p x C_p

    @property
    def cyclic(self) -> bool | None:
        return {Search.FOUND: True, Search.ABSENT: False}.get(self.status)


def _p_power_part(g: Perm, p: int) -> Perm | None:
    o = order(g)
    pa, _ = p_part(o, p)
    if pa == 1:
        return None
    return power(g, o // pa)


def _powers(x: Perm) -> set[Perm]:
    out = {x}
    y = mul(x, x)
    while y != x:
        out.add(y)
        y = mul(y, x)
    return out


def element_of_full_p_part(G: PermGroup, p: int, seed: int = DEFAULT_SEED,
                           tries: int = RANDOM_TRIES, element_cap: int = ELEMENT_CAP) -> PPartSearch:
    """Find x whose order is the full p-part of |G|, or prove there is none.

    A random search comes first.  Along the way it looks for two commuting
    elements of order p that generate different subgroups; such a pair shows
    the Sylow subgroup is not cyclic.  If neither turns up, every element is
    scanned when |G| is within the enumeration cap.
    """
    n = G.order()
    pa, _ = p_part(n, p)
    if pa == 1:
        raise ValueError(f"{p} does not divide |G| = {n}")
    rng = random.Random(seed)
    order_p: list[Perm] = []
    for _ in range(tries):
        y = _p_power_part(G.random_element(rng), p)
        if y is None:
            continue
        if order(y) == pa:
            return PPartSearch(Search.FOUND, y, pa, "random search")
        z = power(y, order(y) // p)
        if len(order_p) < 24 and z not in order_p:
            for w in order_p:
                if mul(z, w) == mul(w, z) and z not in _powers(w):
                    return PPartSearch(Search.ABSENT, None, pa, "commuting pair of order p", (w, z))
            order_p.append(z)
            # a random conjugate often commutes with z when P is not cyclic
            g = G.random_element(rng)
            zc = mul(mul(inv(g), z), g)
            if mul(z, zc) == mul(zc, z) and zc not in _powers(z):
                return PPartSearch(Search.ABSENT, None, pa, "commuting pair of order p", (z, zc))
    if n <= element_cap and n * G.degree <= SCAN_WORK_CAP:
        for g in G.elements(element_cap):
            o = order(g)
            if o % pa == 0:
                return PPartSearch(Search.FOUND, power(g, o // pa), pa, "exhaustive scan")
        return PPartSearch(Search.ABSENT, None, pa, "exhaustive scan")
    return PPartSearch(Search.UNDECIDED, None, pa, "budget exhausted")


def centralizer_order(G: PermGroup, x: Perm, cap: int = ORBIT_CAP) -> Factored:
    """|C_G(x)| = |G| / |x^G| with the class found by breadth-first conjugation."""
    if not G.contains(x):
        raise ValueError("element is not in the group")
    size = len(G.conjugacy_class(tuple(x), cap))
    return factorize(G.order() // size)


def _canonical_subgroup(elems) -> tuple:
    return tuple(sorted(elems))


def cyclic_subgroup_normalizer_order(G: PermGroup, x: Perm, cap: int = ORBIT_CAP) -> Factored:
    """|N_G(<x>)| = |G| / (number of conjugates of <x>)."""
    if not G.contains(x):
        raise ValueError("element is not in the group")
    x = tuple(x)
    start = _canonical_subgroup(_powers(x) | {tuple(range(G.degree))})
    seen = {start}
    todo = [start]
    ginv = [inv(g) for g in G.generators]
    for H in todo:
        for g, gi in zip(G.generators, ginv):
            K = _canonical_subgroup(mul(mul(gi, h), g) for h in H)
            if K not in seen:
                seen.add(K)
                todo.append(K)
                if len(seen) > cap:
                    raise BudgetExceeded(f"conjugate count exceeds cap {cap}")
    return factorize(G.order() // len(seen))


def involution_class_count(G: PermGroup, element_cap: int = ELEMENT_CAP,
                           cap: int = ORBIT_CAP) -> int:
    """Number of conjugacy classes of involutions, by enumeration and class merging."""
    n = G.order()
    if n % 2:
        return 0
    if n > element_cap or n * G.degree > SCAN_WORK_CAP:
        raise BudgetExceeded(f"involution count needs |G| = {n} within the element cap")
    remaining = {g for g in G.elements(element_cap) if not is_identity(g) and is_identity(mul(g, g))}
    classes = 0
    while remaining:
        t = next(iter(remaining))
        remaining -= G.conjugacy_class(t, cap)
        classes += 1
    return classes


@dataclass
class SylowMeasurement:
    """Everything measured about a cyclic Sylow subgroup P = <x>."""

    p: int
    sylow_order: int
    generator: Perm
    normalizer_order: int
    centralizer_order: int
    group_order: int
    notes: list[str] = field(default_factory=list)

    @property
    def e(self) -> int:
        return self.normalizer_order // self.centralizer_order

    @property
    def sylow_count(self) -> int:
        return self.group_order // self.normalizer_order


def measure_sylow(G: PermGroup, x: Perm, p: int, cap: int = ORBIT_CAP) -> SylowMeasurement:
    pa, _ = p_part(G.order(), p)
    if order(x) != pa:
        raise ValueError("x does not generate a Sylow subgroup")
    N = cyclic_subgroup_normalizer_order(G, x, cap).value
    C = centralizer_order(G, x, cap).value
    m = SylowMeasurement(p, pa, x, N, C, G.order())
    if N % C:
        raise ArithmeticError("centralizer order does not divide normalizer order")
    return m
