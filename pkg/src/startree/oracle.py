"""Brute-force checks tying permutation-group measurements to classifier claims.

The oracle never decides the shape of a Brauer tree.  It measures what a
permutation representation can certify (cyclicity of the Sylow subgroup,
e = |N_G(P) : C_G(P)|, m = (|P| - 1)/e, involution classes) and compares
that with the verdict of :func:`startree.classifier.in_xp`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from . import catalog
from .arith import p_part
from .catalog import GroupId
from .classifier import Status, Verdict, edges_formula, in_xp
from .permgrp import (BudgetExceeded, PermGroup, Search, element_of_full_p_part,
                      involution_class_count, measure_sylow)
from .permgrp.chain import DEFAULT_SEED, ELEMENT_CAP, ORBIT_CAP
from .permgrp.perm import inv, mul


class OracleError(ValueError):
    pass


class NotCyclicError(OracleError):
    """The Sylow subgroup was certified non-cyclic."""


@dataclass
class Budget:
    element_cap: int = ELEMENT_CAP
    orbit_cap: int = ORBIT_CAP
    seed: int = DEFAULT_SEED


@dataclass
class EMeasurement:
    e: int
    m: int
    sylow_order: int
    normalizer_order: int
    centralizer_order: int
    sylow_count: int
    method: str


def _measure(G: PermGroup, p: int, budget: Budget) -> EMeasurement:
    found = element_of_full_p_part(G, p, seed=budget.seed, element_cap=budget.element_cap)
    if found.status is Search.ABSENT:
        raise NotCyclicError(f"Sylow {p}-subgroup is not cyclic ({found.method})")
    if found.status is Search.UNDECIDED:
        raise BudgetExceeded(f"cyclicity of the Sylow {p}-subgroup undecided")
    s = measure_sylow(G, found.element, p, cap=budget.orbit_cap)
    e = s.e
    if (s.sylow_order - 1) % e:
        raise ArithmeticError(f"e = {e} does not divide |P| - 1 = {s.sylow_order - 1}")
    return EMeasurement(e, (s.sylow_order - 1) // e, s.sylow_order, s.normalizer_order,
                        s.centralizer_order, s.sylow_count, found.method)


def measure_e_m(G: PermGroup, p: int, budget: Budget | None = None) -> tuple[int, int, int]:
    """(e, m, |P|) for a cyclic Sylow p-subgroup P of G.

    Raises NotCyclicError when P is certified non-cyclic and BudgetExceeded
    when the search runs out of budget.
    """
    got = _measure(G, p, budget or Budget())
    return got.e, got.m, got.sylow_order


# ----------------------------------------------------------- necessary conditions

class Check(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    UNDECIDED = "undecided"


@dataclass
class NecessaryReport:
    p: int
    e: int
    centralizer_order: int
    e_even: Check
    involutions: Check
    involution_classes: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return Check.FAIL not in (self.e_even, self.involutions)

    @property
    def decided(self) -> bool:
        return Check.UNDECIDED not in (self.e_even, self.involutions)


def _necessary_from(e: int, c_order: int, G: PermGroup, p: int, budget: Budget) -> NecessaryReport:
    rep = NecessaryReport(p, e, c_order, Check.PASS if e % 2 == 0 else Check.FAIL, Check.VACUOUS)
    if c_order % 2 == 0:
        rep.notes.append("|C_G(P)| is even, the involution condition does not apply")
        return rep
    try:
        k = involution_class_count(G, element_cap=budget.element_cap, cap=budget.orbit_cap)
    except BudgetExceeded as err:
        rep.involutions = Check.UNDECIDED
        rep.notes.append(str(err))
        return rep
    rep.involution_classes = k
    rep.involutions = Check.PASS if k == 1 else Check.FAIL
    return rep


def check_star_necessary(G: PermGroup, p: int, budget: Budget | None = None) -> NecessaryReport:
    """Necessary conditions for a star: e even, and one involution class when |C_G(P)| is odd."""
    budget = budget or Budget()
    got = _measure(G, p, budget)
    return _necessary_from(got.e, got.centralizer_order, G, p, budget)


# ----------------------------------------------------------- divisibility

@dataclass
class DivisibilityRow:
    p: int
    e_sub: int | None = None
    e_group: int | None = None
    status: Check = Check.UNDECIDED
    problems: list[str] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.e_sub is not None and self.e_sub == self.e_group


def _is_normal(H: PermGroup, G: PermGroup) -> bool:
    for g in G.generators:
        gi = inv(g)
        for h in H.generators:
            if not H.contains(mul(mul(gi, h), g)):
                return False
    return True


def check_divisibility(pairs, budget: Budget | None = None) -> list[DivisibilityRow]:
    """For each (H, G, p) with H normal of p'-index in G, check that e_H divides e_G."""
    budget = budget or Budget()
    out = []
    for H, G, p in pairs:
        row = DivisibilityRow(p)
        out.append(row)
        if H.degree != G.degree or not all(G.contains(h) for h in H.generators):
            row.problems.append("H is not a subgroup of G")
        elif (G.order() // H.order()) % p == 0:
            row.problems.append(f"index {G.order() // H.order()} is divisible by {p}")
        elif not _is_normal(H, G):
            row.problems.append("H is not normal in G")
        if row.problems:
            row.status = Check.FAIL
            continue
        try:
            row.e_sub = _measure(H, p, budget).e
            row.e_group = _measure(G, p, budget).e
        except (BudgetExceeded, NotCyclicError) as err:
            row.problems.append(str(err))
            continue
        row.status = Check.PASS if row.e_group % row.e_sub == 0 else Check.FAIL
    return out


# ----------------------------------------------------------- crosscheck

@dataclass
class Measured:
    cyclic: bool | None = None          # None: undecided or p does not divide |G|
    sylow_order: int | None = None
    e: int | None = None
    m: int | None = None
    involution_classes: int | None = None
    centralizer_P_order_parity: str | None = None
    sylow_count: int | None = None

    def to_dict(self) -> dict:
        def s(x):
            return None if x is None else str(x)
        return {
            "cyclic": {True: "yes", False: "no", None: "unknown"}[self.cyclic],
            "sylow_order": s(self.sylow_order),
            "e": s(self.e),
            "m": s(self.m),
            "involution_classes": s(self.involution_classes),
            "centralizer_P_order_parity": self.centralizer_P_order_parity,
            "sylow_count": s(self.sylow_count),
        }


@dataclass
class CrossCheckReport:
    group: GroupId
    p: int
    measured: Measured
    claimed: Verdict
    agreements: list[str] = field(default_factory=list)
    disagreements: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)
    necessary: NecessaryReport | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def oracle_confirmed(self) -> bool:
        """Every measurable consequence of a definite verdict matched."""
        return (self.claimed.status is not Status.CONFLICT
                and not self.disagreements and not self.undecided)

    def to_dict(self) -> dict:
        nec = None
        if self.necessary is not None:
            n = self.necessary
            nec = {"e_even": n.e_even.value, "involutions": n.involutions.value,
                   "centralizer_order": str(n.centralizer_order), "notes": list(n.notes)}
        return {
            "group": catalog.format_group(self.group),
            "p": str(self.p),
            "measured": self.measured.to_dict(),
            "claimed": self.claimed.to_dict(),
            "agreements": list(self.agreements),
            "disagreements": list(self.disagreements),
            "undecided": list(self.undecided),
            "necessary": nec,
            "notes": list(self.notes),
            "oracle_confirmed": self.oracle_confirmed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


_CYCLIC_CLAIMS = (Status.IN_XP, Status.NOT_IN_XP, Status.CONFLICT)


def crosscheck(gid: GroupId, rep: PermGroup, p: int, budget: Budget | None = None) -> CrossCheckReport:
    """Measure (rep, p) and compare every measurable quantity with in_xp(gid, p)."""
    budget = budget or Budget()
    gid = catalog.validate(gid)
    norm, _ = catalog.normalize(gid)
    expected = catalog.order(norm).value
    if rep.order() != expected:
        raise OracleError(f"representation order {rep.order()} != catalog order {expected}")
    claim = in_xp(gid, p)
    rep_ = CrossCheckReport(gid, p, Measured(), claim)
    # Conflict rows keep their measurements but never raise disagreements
    soft = claim.status is Status.CONFLICT
    bad = rep_.notes if soft else rep_.disagreements
    if soft:
        rep_.notes.append("conflicting verdict: measurements attached, nothing to disagree with")

    def compare(what: str, measured, claimed) -> None:
        if measured == claimed:
            rep_.agreements.append(f"{what} = {measured}")
        else:
            bad.append(f"{what}: measured {measured}, claimed {claimed}")

    mes = rep_.measured
    pa, _ = p_part(expected, p)
    mes.sylow_order = pa
    if pa == 1:
        compare("p divides |G|", False, claim.status is not Status.P_NOT_DIVIDING)
        return rep_
    if claim.sylow_order is not None:
        compare("|P|", pa, claim.sylow_order)
    found = element_of_full_p_part(rep, p, seed=budget.seed, element_cap=budget.element_cap)
    if found.status is Search.UNDECIDED:
        rep_.undecided.append(f"cyclicity of P: {found.method}")
        return rep_
    mes.cyclic = found.status is Search.FOUND
    if claim.status is not Status.OUT_OF_SCOPE:
        compare("P cyclic", mes.cyclic, claim.status in _CYCLIC_CLAIMS)
    if not mes.cyclic:
        return rep_
    try:
        s = measure_sylow(rep, found.element, p, cap=budget.orbit_cap)
    except BudgetExceeded as err:
        rep_.undecided.append(f"normalizer/centralizer: {err}")
        return rep_
    mes.e = s.e
    mes.m = (pa - 1) // s.e
    mes.sylow_count = s.sylow_count
    mes.centralizer_P_order_parity = "odd" if s.centralizer_order % 2 else "even"
    if mes.e * mes.m != pa - 1:
        rep_.disagreements.append(f"e * m = {mes.e * mes.m} != |P| - 1 = {pa - 1}")
    if s.sylow_count % p != 1 % p:
        rep_.disagreements.append(f"Sylow count {s.sylow_count} is not 1 mod {p}")
    if (p - 1) * (pa // p) % mes.e:
        rep_.disagreements.append(f"e = {mes.e} does not divide |Aut(P)|")
    formula = edges_formula(gid, p)
    if claim.e is not None:
        compare("e", mes.e, claim.e)
        compare("m", mes.m, claim.m)
    elif formula is not None:
        compare("e", mes.e, formula[0])
    simple = catalog.is_simple(norm) and not catalog.is_abelian(norm)
    if simple and claim.status in (Status.IN_XP, Status.CONFLICT):
        nec = _necessary_from(mes.e, s.centralizer_order, rep, p, budget)
        rep_.necessary = nec
        mes.involution_classes = nec.involution_classes
        if nec.involutions is Check.UNDECIDED:
            rep_.undecided.append("involution classes: budget exhausted")
        if nec.holds:
            rep_.agreements.append("star necessary conditions hold")
        else:
            bad.append(f"star necessary conditions fail (e even: {nec.e_even.value}, "
                       f"involutions: {nec.involutions.value})")
    return rep_


# ----------------------------------------------------------- large-group fixtures

UNVERIFIED = "unverified-at-desk-scale"


@dataclass(frozen=True)
class ExpectedValue:
    """A published e value for a group too large for the default budget."""

    group: str
    p: int
    e: int
    rep_file: str
    status: str = UNVERIFIED


DESK_SCALE_FIXTURES = (
    ExpectedValue("SO(7,3)", 13, 6, "so7_3.json"),
    ExpectedValue("GO(+,8,2)", 7, 6, "go8plus_2.json"),
)


def measure_fixture(fix: ExpectedValue, data=None, budget: Budget | None = None) -> EMeasurement:
    """Measure e for a desk-scale fixture from a user-supplied generator file.

    Raises BuilderError when the file is missing; expect hours of work and
    a raised budget for groups of this size.
    """
    from .permgrp import load_generators
    G = load_generators(fix.rep_file, data)
    expected = catalog.order(catalog.parse_group(fix.group)).value
    if G.order() != expected:
        raise OracleError(f"{fix.rep_file}: order {G.order()} != catalog order {expected}")
    return _measure(G, fix.p, budget or Budget())
