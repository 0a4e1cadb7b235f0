"""Rule engine deciding membership in the star class for a catalog group.

A verdict records the chain of rules that produced it.  Each rule carries
an anchor: a topic label followed by a short formula fragment from the
source classification, so a reader can locate the statement it encodes.

Cyclicity of Sylow subgroups for groups of Lie type with p odd and p not
dividing q is decided from the order polynomial: with d the order of q
mod p, the Sylow p-subgroup is cyclic exactly when the cyclotomic factor
Phi_d occurs once.  This reproduces the d <= n < 2d window for linear
groups and the torus arguments used for the other families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from . import catalog
from .arith import is_prime, mult_order, p_part, primes_up_to
from .catalog import Family, GroupId


class Status(str, enum.Enum):
    IN_XP = "InXp"
    NOT_IN_XP = "NotInXp"
    SYLOW_NOT_CYCLIC = "SylowNotCyclic"
    P_NOT_DIVIDING = "PNotDividingOrder"
    OUT_OF_SCOPE = "OutOfScope"
    CONFLICT = "Conflict"


class Shape(str, enum.Enum):
    STAR = "Star"
    LINE = "Line"
    UNKNOWN = "Unknown"


class Cyclicity(str, enum.Enum):
    CYCLIC = "Cyclic"
    NOT_CYCLIC = "NotCyclic"
    P_NOT_DIVIDING = "PNotDividing"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class Rule:
    id: str
    topic: str
    fragment: str

    @property
    def anchor(self) -> str:
        return f"{self.topic}: {self.fragment}"


_RULE_LIST = [
    Rule("iso.normalize", "exceptional isomorphisms",
         r"$\mathop{{\rm PSU}}\nolimits_2(q^2)\cong \mathop{{\rm PSL}}\nolimits_2(q)$"),
    Rule("order.p_not_dividing", "definition of the class", r"\mathfrak{X}_p"),
    Rule("scope.unclassified", "families outside the classification", r"\mathfrak{X}_p"),
    Rule("sylow.cyclic_group", "cyclic groups", r"$C_p \in \mathfrak{X}_p$"),
    Rule("sylow.sym_window", "symmetric and alternating groups", r"p \leq n < 2p"),
    Rule("sylow.p2_nonsolvable", "nonsolvable groups at p = 2", r"Sylow $2$-subgroup"),
    Rule("sylow.p2_small", "small solvable groups at p = 2", r"$p$-solvable"),
    Rule("sylow.defining_char", "defining characteristic", r"$p \mid q$"),
    Rule("sylow.gl_window", "linear groups", r"d \leq n < 2d"),
    Rule("sylow.cyclotomic", "tori of groups of Lie type", r"\mathop{{\rm ord}}\nolimits_p(q)"),
    Rule("sylow.sporadic", "sporadic groups", r"|N_G(P)/C_G(P)|"),
    Rule("solvable.p_solvable", "p-solvable groups", r"$p$-solvable"),
    Rule("cyclic.prime", "cyclic groups", r"$C_p \in \mathfrak{X}_p$"),
    Rule("alt.edges", "alternating groups", r"$e=(p-1)/2$ if $p \in \{n-1, n\}$"),
    Rule("alt.verdict", "alternating groups", r"$p=5$ and $n \in \{5,6\}$"),
    Rule("sym.edges", "symmetric groups", r"$e = |P| - 1$"),
    Rule("sym.verdict", "symmetric groups", r"$n \in \{3,4,5\}$"),
    Rule("gl.p_equals_q", "GL_2(p)", r"$|N_G(P)/C_G(P)|= p-1$"),
    Rule("gl.edges", "linear groups", r"$|N_G(P)/C_G(P)|=d$"),
    Rule("line.star_iff_small", "line-shaped principal blocks", r"$e \leq 2$"),
    Rule("sl2.p_equals_q", "SL_2(p)", r"$n=2$ and $p = q = 5$"),
    Rule("sl2.p_divides_q_minus_1", "SL_2(q) with p | q - 1", r"$|N_G(P)/C_G(P)|=2$"),
    Rule("psl2.q_pm_1", "PSL_2(q)", r"$p$ divides $q \pm 1$"),
    Rule("psl3.q_plus_1", "PSL_3(q)", r"$p$ divides $q + 1$"),
    Rule("unitary.verdict", "unitary groups", r"$n=3$, $p>2$ and $p$ divides $q-1$"),
    Rule("symplectic.verdict", "symplectic groups", r"G \notin \mathfrak{X}_p"),
    Rule("orth_odd.verdict", "odd-dimensional orthogonal groups",
         r"$e_0(G) =|N_G(P)/C_G(P)| = 6$"),
    Rule("orth_even.verdict", "even-dimensional orthogonal groups", r"are equal $4$"),
    Rule("exceptional.verdict", "exceptional groups", r"$G \notin \mathfrak{X}_p$ for any $p$"),
    Rule("tits.verdict", "Tits group", r"{}^2 F_4(2)'"),
    Rule("suzuki.star", "Suzuki groups", r"either $q-1$ or $q+r+1$"),
    Rule("suzuki.not_star", "Suzuki groups", r"$q-r+1$"),
    Rule("ree.star", "Ree groups", r"$q^2-1$ or $q^2+ \sqrt{3} q+1$"),
    Rule("ree.not_star", "Ree groups", r"$q^2- \sqrt{3} q+1$"),
    Rule("sporadic.star", "sporadic groups", r"$G=J_1$ and $p \in \{3,5\}$"),
    Rule("sporadic.not_star", "sporadic groups", r"$|N_G(P)/C_G(P)|$ is odd"),
    Rule("sporadic.conflict", "sporadic groups", r"\{ M_{11}, M_{12}, J_3 \}"),
    Rule("section.quotient", "simple sections", r"L = K / O_{p'}(G)"),
]
RULES: dict[str, Rule] = {r.id: r for r in _RULE_LIST}

# Sporadic (group, p) pairs in the class, and the pairs where the two
# statements of the source disagree.
SPORADIC_STAR = {("M11", 5), ("J1", 3), ("J1", 5), ("J3", 5)}
SPORADIC_CONFLICT = {("M12", 5), ("M23", 5)}
CONFLICT_WARNINGS = (
    "the general star list includes M12 (with M11 and J3) at p = 5",
    "the sporadic case analysis has M23 in place of M12 at p = 5",
)


class VerdictError(AssertionError):
    pass


@dataclass
class Verdict:
    group: GroupId
    p: int
    status: Status
    shape: Shape = Shape.UNKNOWN
    e: int | None = None
    m: int | None = None
    sylow_order: int | None = None
    justification: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    normalized_from: GroupId | None = None
    simplicity: str = ""

    def __post_init__(self):
        self.check()

    def check(self) -> None:
        if not self.justification:
            raise VerdictError("empty justification")
        if self.status is Status.IN_XP and self.shape is not Shape.STAR:
            raise VerdictError("InXp verdict without Star shape")
        if self.e is not None:
            if self.e < 1:
                raise VerdictError("e must be positive")
            if self.m is not None and self.sylow_order is not None \
                    and self.e * self.m != self.sylow_order - 1:
                raise VerdictError("e * m != |P| - 1")
        if self.status is Status.CONFLICT and not self.warnings:
            raise VerdictError("Conflict verdict without warnings")

    @property
    def terminal_rule(self) -> str:
        return self.justification[-1][0]

    def to_dict(self) -> dict:
        return {
            "group": catalog.format_group(self.group),
            "normalized_from": None if self.normalized_from is None
            else catalog.format_group(self.normalized_from),
            "p": str(self.p),
            "status": self.status.value,
            "shape": self.shape.value,
            "e": None if self.e is None else str(self.e),
            "m": None if self.m is None else str(self.m),
            "sylow_order": None if self.sylow_order is None else str(self.sylow_order),
            "justification": [{"rule": r, "anchor": a} for r, a in self.justification],
            "warnings": list(self.warnings),
            "simplicity": self.simplicity,
        }


def _j(rule_id: str) -> tuple[str, str]:
    return rule_id, RULES[rule_id].anchor


# ----------------------------------------------------------- cyclicity

@dataclass(frozen=True)
class SylowInfo:
    status: Cyclicity
    order: int          # p-part of |G|
    rule: str
    d: int | None = None


def in_scope(g: GroupId) -> bool:
    """Whether the classification covers this (normalized) group."""
    f, n, q = g.family, g.n, g.q
    if f is Family.GU or f is Family.CSO_even:
        return False
    if f in catalog.ODD_ORTHOGONAL:
        return n >= 3 and q % 2 == 1
    if f in catalog.EVEN_ORTHOGONAL:
        return n >= 4
    if f is Family.G2:
        return q >= 3
    if f is Family.twistedF4:
        return g.exponent >= 1
    return True


def _lie_cyclic(g: GroupId, p: int, pa: int) -> SylowInfo:
    f, n, q = g.family, g.n, g.q
    if p == 2:
        if f in catalog.LINEAR and n == 2 and q == 2:
            return SylowInfo(Cyclicity.CYCLIC, pa, "sylow.p2_small")
        return SylowInfo(Cyclicity.NOT_CYCLIC, pa, "sylow.p2_nonsolvable")
    formula = catalog.order_formula(g)
    if q % p == 0 or (f in (Family.Suzuki, Family.twistedG2, Family.twistedF4) and formula.q % p == 0):
        ok = f in catalog.LINEAR and n == 2 and q == p
        return SylowInfo(Cyclicity.CYCLIC if ok else Cyclicity.NOT_CYCLIC, pa, "sylow.defining_char")
    d = mult_order(formula.q, p)
    mult = formula.cyclotomic_multiplicities().get(d, 0)
    rule = "sylow.gl_window" if f in catalog.LINEAR else "sylow.cyclotomic"
    return SylowInfo(Cyclicity.CYCLIC if mult == 1 else Cyclicity.NOT_CYCLIC, pa, rule, d)


def sylow_cyclic(g: GroupId, p: int) -> SylowInfo:
    """Decide whether a Sylow p-subgroup of g is cyclic (g is normalized first)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g, _ = catalog.normalize(g)
    pa, a = p_part(catalog.order(g), p)
    if a == 0:
        return SylowInfo(Cyclicity.P_NOT_DIVIDING, 1, "order.p_not_dividing")
    if not in_scope(g):
        return SylowInfo(Cyclicity.OUT_OF_SCOPE, pa, "scope.unclassified")
    f, n = g.family, g.n
    if f is Family.Cyclic:
        return SylowInfo(Cyclicity.CYCLIC, pa, "sylow.cyclic_group")
    if f in (Family.Alternating, Family.Symmetric):
        ok = p <= n < 2 * p and not (f is Family.Alternating and p == 2)
        return SylowInfo(Cyclicity.CYCLIC if ok else Cyclicity.NOT_CYCLIC, pa, "sylow.sym_window")
    if f in (Family.Sporadic, Family.TitsGroup):
        ok = p > 2 and a == 1
        return SylowInfo(Cyclicity.CYCLIC if ok else Cyclicity.NOT_CYCLIC, pa, "sylow.sporadic")
    return _lie_cyclic(g, p, pa)


# ----------------------------------------------------------- edge counts

def _edges(g: GroupId, p: int, info: SylowInfo) -> tuple[int, str] | None:
    f, n, q = g.family, g.n, g.q
    if f is Family.Cyclic:
        return 1, "cyclic.prime"
    if f is Family.Alternating:
        return ((p - 1) // 2 if p >= n - 1 else p - 1), "alt.edges"
    if f is Family.Symmetric:
        return info.order - 1, "sym.edges"
    if f is Family.GL:
        if q % p == 0:
            return p - 1, "gl.p_equals_q"
        return info.d, "gl.edges"
    if f in (Family.SL, Family.PSL):
        if q % p == 0:
            return (p - 1) // 2 if p > 2 else 1, "sl2.p_equals_q"
        if n == 2 and p > 2:
            return 2, "sl2.p_divides_q_minus_1" if (q - 1) % p == 0 else "psl2.q_pm_1"
        if info.d is not None and info.d >= 2:
            return info.d, "gl.edges"
    return None


def edges_formula(g: GroupId, p: int) -> tuple[int, int] | None:
    """(e, m) when a closed formula pins e down for this family, else None."""
    g, _ = catalog.normalize(g)
    info = sylow_cyclic(g, p)
    if info.status is not Cyclicity.CYCLIC:
        return None
    got = _edges(g, p, info)
    if got is None:
        return None
    e = got[0]
    return e, (info.order - 1) // e


# ----------------------------------------------------------- verdicts

def in_xp(g: GroupId, p: int) -> Verdict:
    """Classify (g, p); g is normalized along exceptional isomorphisms first."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = catalog.validate(g)
    norm, note = catalog.normalize(g)
    just: list[tuple[str, str]] = []
    if note:
        just.append(_j("iso.normalize"))
    base = dict(group=norm, p=p, normalized_from=g if note else None,
                simplicity=catalog.simplicity_note(norm).status.value)
    info = sylow_cyclic(norm, p)
    if info.status is Cyclicity.P_NOT_DIVIDING:
        return Verdict(status=Status.P_NOT_DIVIDING, justification=just + [_j(info.rule)], **base)
    if info.status is Cyclicity.OUT_OF_SCOPE:
        return Verdict(status=Status.OUT_OF_SCOPE, sylow_order=info.order,
                       justification=just + [_j(info.rule)], **base)
    if info.status is Cyclicity.NOT_CYCLIC:
        return Verdict(status=Status.SYLOW_NOT_CYCLIC, sylow_order=info.order,
                       justification=just + [_j(info.rule)], **base)
    just.append(_j(info.rule))
    base["sylow_order"] = info.order
    got = _edges(norm, p, info)
    if got is not None:
        e, rule = got
        base["e"], base["m"] = e, (info.order - 1) // e
        just.append(_j(rule))
    status, shape, terminal, warnings = _family_rule(norm, p, info, base.get("e"))
    if just[-1][0] != terminal:
        just.append(_j(terminal))
    return Verdict(status=status, shape=shape, justification=just,
                   warnings=warnings, **base)


def _line(e: int | None) -> tuple[Status, Shape, str, list]:
    if e is not None and e <= 2:
        return Status.IN_XP, Shape.STAR, "line.star_iff_small", []
    return Status.NOT_IN_XP, Shape.LINE, "line.star_iff_small", []


def _family_rule(g: GroupId, p: int, info: SylowInfo, e: int | None):
    f, n, q = g.family, g.n, g.q
    IN, OUT = Status.IN_XP, Status.NOT_IN_XP
    if f is Family.Cyclic and n == p:
        return IN, Shape.STAR, "cyclic.prime", []
    if catalog.is_solvable(g):
        return IN, Shape.STAR, "solvable.p_solvable", []
    if f is Family.Alternating:
        ok = (p, n) in ((3, 5), (5, 5), (5, 6))
        return (IN if ok else OUT), (Shape.STAR if ok else Shape.UNKNOWN), "alt.verdict", []
    if f is Family.Symmetric:
        status, shape, _, w = _line(e)
        return status, shape, "sym.verdict", w
    if f is Family.GL:
        return _line(e)
    if f in (Family.SL, Family.PSL):
        if q % p == 0:
            status, shape, _, w = _line(e)
            return status, shape, "sl2.p_equals_q", w
        if n == 2:
            rule = "sl2.p_divides_q_minus_1" if (q - 1) % p == 0 else "psl2.q_pm_1"
            return IN, Shape.STAR, rule, []
        status, shape, _, w = _line(e)
        return status, shape, "psl3.q_plus_1" if n == 3 else "line.star_iff_small", w
    if f in (Family.SU, Family.PSU):
        if n == 3:
            ok = p > 2 and (q - 1) % p == 0
            return (IN if ok else OUT), (Shape.STAR if ok else Shape.UNKNOWN), "unitary.verdict", []
        return OUT, Shape.LINE, "unitary.verdict", []
    if f in catalog.SYMPLECTIC:
        return OUT, Shape.LINE, "symplectic.verdict", []
    if f in catalog.ODD_ORTHOGONAL:
        return OUT, Shape.LINE, "orth_odd.verdict", []
    if f in catalog.EVEN_ORTHOGONAL:
        return OUT, Shape.LINE, "orth_even.verdict", []
    if f is Family.TitsGroup:
        return OUT, Shape.UNKNOWN, "tits.verdict", []
    if f in catalog.EXCEPTIONAL:
        return OUT, Shape.UNKNOWN, "exceptional.verdict", []
    if f is Family.Suzuki:
        fac = catalog.suzuki_ree_factors(g)
        if fac["q-1"] % p == 0 or fac["q+r+1"] % p == 0:
            return IN, Shape.STAR, "suzuki.star", []
        return OUT, Shape.UNKNOWN, "suzuki.not_star", []
    if f is Family.twistedG2:
        fac = catalog.suzuki_ree_factors(g)
        if fac["q^2-1"] % p == 0 or fac["q^2+sqrt3q+1"] % p == 0:
            return IN, Shape.STAR, "ree.star", []
        return OUT, Shape.UNKNOWN, "ree.not_star", []
    if f is Family.Sporadic:
        key = (g.name, p)
        if key in SPORADIC_CONFLICT:
            return Status.CONFLICT, Shape.UNKNOWN, "sporadic.conflict", list(CONFLICT_WARNINGS)
        if key in SPORADIC_STAR:
            return IN, Shape.STAR, "sporadic.star", []
        return OUT, Shape.UNKNOWN, "sporadic.not_star", []
    return Status.OUT_OF_SCOPE, Shape.UNKNOWN, "scope.unclassified", []


# ----------------------------------------------------------- sections

class Obstruction(str, enum.Enum):
    OBSTRUCTS = "obstructs"
    NO_OBSTRUCTION = "no-obstruction"
    INAPPLICABLE = "inapplicable"
    UNDETERMINED = "undetermined"


@dataclass
class SectionReport:
    quotient: GroupId
    p: int
    verdict: Verdict
    outcome: Obstruction
    statement: str


def section_necessary(L: GroupId, p: int) -> SectionReport:
    """Necessary condition through the simple section L = K / O_p'(G)."""
    if not catalog.is_simple(catalog.normalize(L)[0]) or catalog.is_abelian(L):
        raise ValueError(f"{catalog.format_group(L)} is not simple non-abelian")
    v = in_xp(L, p)
    v.justification.append(_j("section.quotient"))
    name = catalog.format_group(L)
    if v.status is Status.IN_XP:
        out = Obstruction.NO_OBSTRUCTION
        text = f"{name} is in the class for p = {p}; no obstruction"
    elif v.status in (Status.NOT_IN_XP, Status.SYLOW_NOT_CYCLIC):
        out = Obstruction.OBSTRUCTS
        text = (f"{name} is not in the class for p = {p}, so no group with section "
                f"{name} lies in the class")
    elif v.status is Status.P_NOT_DIVIDING:
        out = Obstruction.INAPPLICABLE
        text = f"p = {p} does not divide |{name}|; it cannot be the section for this p"
    else:
        out = Obstruction.UNDETERMINED
        text = f"verdict for {name} at p = {p} is {v.status.value}"
    return SectionReport(L, p, v, out, text)


# ----------------------------------------------------------- sweep

SWEEP_FAMILIES = ("cyclic", "alternating", "symmetric", "linear", "unitary", "symplectic",
                  "orthogonal", "exceptional", "suzuki", "ree", "sporadic")
SIMPLE_FAMILIES = tuple(f for f in SWEEP_FAMILIES if f != "symmetric")


@dataclass
class SweepRow:
    group: GroupId          # as enumerated
    p: int
    verdict: Verdict

    @property
    def canonical(self) -> GroupId:
        return self.verdict.group


@dataclass(frozen=True)
class SweepBounds:
    order_cap: int = 10**8
    p_max: int = 100
    n_max: int | None = None
    q_max: int | None = None
    exp_max: int | None = None


def _prime_powers(limit: int | None) -> Iterable[int]:
    q = 2
    while limit is None or q <= limit:
        if catalog.prime_power_split(q) is not None:
            yield q
        q += 1


# Orders drop by at most the centre size when q grows, so a member may fall
# under the cap after a larger one; stop only once the slack is used up.
CENTRE_SLACK = 64


def _by_q(make, b: SweepBounds, q_min: int = 2, q_ok=lambda q: True):
    """Members make(q) with order within the cap, for increasing q."""
    for q in _prime_powers(b.q_max):
        if q < q_min or not q_ok(q):
            continue
        g = make(q)
        size = catalog.order(g).value
        if size > b.order_cap * CENTRE_SLACK:
            break
        if size <= b.order_cap:
            yield g


def _ranked(make, n_min: int, b: SweepBounds, q_ok=lambda q: True):
    q0 = next(q for q in _prime_powers(None) if q_ok(q))
    n = n_min
    while (b.n_max is None or n <= b.n_max) \
            and catalog.order(make(n, q0)).value <= b.order_cap * CENTRE_SLACK:
        yield from _by_q(lambda q, n=n: make(n, q), b, q_ok=q_ok)
        n += 1


def _by_exponent(make, b: SweepBounds, start: int = 1):
    k = start
    while b.exp_max is None or k <= b.exp_max:
        g = make(k)
        if catalog.order(g).value > b.order_cap:
            break
        yield g
        k += 1


def enumerate_family(name: str, b: SweepBounds) -> list[GroupId]:
    out: list[GroupId] = []
    if name == "cyclic":
        top = b.n_max if b.n_max is not None else b.p_max
        out = [GroupId(Family.Cyclic, n) for n in range(2, top + 1) if n <= b.order_cap]
    elif name in ("alternating", "symmetric"):
        fam = Family.Alternating if name == "alternating" else Family.Symmetric
        n = 3 if fam is Family.Alternating else 2
        while (b.n_max is None or n <= b.n_max) and catalog.order(GroupId(fam, n)).value <= b.order_cap:
            out.append(GroupId(fam, n))
            n += 1
    elif name == "linear":
        out = list(_ranked(lambda n, q: GroupId(Family.PSL, n, q), 2, b))
    elif name == "unitary":
        out = list(_ranked(lambda n, q: GroupId(Family.PSU, n, q), 3, b))
    elif name == "symplectic":
        out = list(_ranked(lambda m, q: GroupId(Family.PSp, m, q), 2, b))
    elif name == "orthogonal":
        out = list(_ranked(lambda m, q: GroupId(Family.Omega_odd, m, q), 3, b, q_ok=lambda q: q % 2 == 1))
        for sign in (1, -1):
            out += list(_ranked(lambda m, q: GroupId(Family.POmega_even, m, q, sign), 4, b))
    elif name == "exceptional":
        out = list(_by_q(lambda q: GroupId(Family.G2, q=q), b, q_min=3))
        out += list(_by_q(lambda q: GroupId(Family.threeD4, q=q), b))
        for fam in (Family.F4, Family.E6, Family.twistedE6, Family.E7, Family.E8):
            out += list(_by_q(lambda q, fam=fam: GroupId(fam, q=q), b))
        if catalog.order(GroupId(Family.TitsGroup)).value <= b.order_cap:
            out.append(GroupId(Family.TitsGroup))
        out += list(_by_exponent(lambda k: GroupId(Family.twistedF4, q=2 ** (2 * k + 1), exponent=k), b))
    elif name == "suzuki":
        out = list(_by_exponent(lambda k: GroupId(Family.Suzuki, q=2 ** (2 * k + 1), exponent=k), b))
    elif name == "ree":
        out = list(_by_exponent(lambda k: GroupId(Family.twistedG2, q=3 ** (2 * k + 1), exponent=k), b))
    elif name == "sporadic":
        out = [GroupId(Family.Sporadic, name=s) for s in catalog.SPORADIC_ORDERS
               if catalog.order(GroupId(Family.Sporadic, name=s)).value <= b.order_cap]
    else:
        raise ValueError(f"unknown family {name!r}; choose from {SWEEP_FAMILIES}")
    return out


def sweep(families: Iterable[str], bounds: SweepBounds = SweepBounds(),
          simple_only: bool = False) -> list[SweepRow]:
    """Verdicts for every enumerated member and prime p <= p_max dividing its order.

    Members are deduplicated after normalization, keeping the first one
    met; families are visited in the canonical order of SWEEP_FAMILIES.
    """
    wanted = set(families)
    unknown = wanted - set(SWEEP_FAMILIES)
    if unknown:
        raise ValueError(f"unknown families {sorted(unknown)}")
    primes = primes_up_to(bounds.p_max)
    rows: list[SweepRow] = []
    seen: set[GroupId] = set()
    for name in SWEEP_FAMILIES:
        if name not in wanted:
            continue
        for g in enumerate_family(name, bounds):
            canon, _ = catalog.normalize(g)
            if canon in seen:
                continue
            if simple_only and not (catalog.is_simple(canon)):
                continue
            seen.add(canon)
            order = catalog.order(canon)
            for p in primes:
                if order.exponent(p):
                    rows.append(SweepRow(g, p, in_xp(g, p)))
    return rows


def star_list_rows(rows: Iterable[SweepRow]) -> list[SweepRow]:
    """Rows for simple groups whose verdict is InXp or Conflict."""
    return [r for r in rows if r.verdict.status in (Status.IN_XP, Status.CONFLICT)
            and catalog.is_simple(r.canonical)]
