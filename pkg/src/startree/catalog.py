"""Group identifiers, the textual grammar, exact orders and isomorphism rewrites.

Conventions
-----------
* ``Sp(2m,q)`` and the orthogonal families are written with the matrix
  dimension; internally the rank ``m`` is stored.
* Unitary groups ``GU(n,q)``, ``SU(n,q)``, ``PSU(n,q)`` take the q with
  field size q**2 (so ``PSU(3,3)`` has order 6048).
* ``2F4(q)`` and ``Sz(q)`` take q = 2**(2n+1), ``2G2(q)`` takes q = 3**(2n+1);
  ``2F4(2)'`` is the Tits group and ``G2(2)'`` the derived group of G2(2).
* Even-dimensional orthogonal groups carry a sign: ``POmega(+,8,2)``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .arith import Factored, factorize, prime_power_split


class Family(str, enum.Enum):
    Cyclic = "C"
    Alternating = "A"
    Symmetric = "S"
    GL = "GL"
    SL = "SL"
    PSL = "PSL"
    Sp = "Sp"
    PSp = "PSp"
    GU = "GU"
    SU = "SU"
    PSU = "PSU"
    SO_odd = "SO_odd"
    GO_odd = "GO_odd"
    Omega_odd = "Omega_odd"
    GO_even = "GO_even"
    SO_even = "SO_even"
    Omega_even = "Omega_even"
    POmega_even = "POmega_even"
    CSO_even = "CSO_even"
    E6 = "E6"
    twistedE6 = "2E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    twistedF4 = "2F4"
    TitsGroup = "Tits"
    G2 = "G2"
    twistedG2 = "2G2"
    threeD4 = "3D4"
    Suzuki = "Sz"
    Sporadic = "Spor"


LINEAR = {Family.GL, Family.SL, Family.PSL}
UNITARY = {Family.GU, Family.SU, Family.PSU}
SYMPLECTIC = {Family.Sp, Family.PSp}
ODD_ORTHOGONAL = {Family.SO_odd, Family.GO_odd, Family.Omega_odd}
EVEN_ORTHOGONAL = {Family.GO_even, Family.SO_even, Family.Omega_even,
                   Family.POmega_even, Family.CSO_even}
EXCEPTIONAL = {Family.E6, Family.twistedE6, Family.E7, Family.E8, Family.F4,
               Family.twistedF4, Family.G2, Family.threeD4}
LIE_TYPE = (LINEAR | UNITARY | SYMPLECTIC | ODD_ORTHOGONAL | EVEN_ORTHOGONAL
            | EXCEPTIONAL | {Family.Suzuki, Family.twistedG2})
RANKED = LINEAR | UNITARY | SYMPLECTIC | ODD_ORTHOGONAL | EVEN_ORTHOGONAL

# Orders from the ATLAS of Finite Groups.
SPORADIC_ORDERS: dict[str, dict[int, int]] = {
    "M11": {2: 4, 3: 2, 5: 1, 11: 1},
    "M12": {2: 6, 3: 3, 5: 1, 11: 1},
    "M22": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    "M23": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    "M24": {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
    "J1": {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1},
    "J2": {2: 7, 3: 3, 5: 2, 7: 1},
    "J3": {2: 7, 3: 5, 5: 1, 17: 1, 19: 1},
    "J4": {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
    "Co1": {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
    "Co2": {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1},
    "Co3": {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1},
    "Fi22": {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1},
    "Fi23": {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
    "Fi24'": {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
    "HS": {2: 9, 3: 2, 5: 3, 7: 1, 11: 1},
    "McL": {2: 7, 3: 6, 5: 3, 7: 1, 11: 1},
    "Suz": {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1},
    "He": {2: 10, 3: 3, 5: 2, 7: 3, 17: 1},
    "Ly": {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
    "Ru": {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1},
    "O'N": {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1},
    "Th": {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
    "HN": {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1},
    "B": {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1},
    "M": {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1,
          31: 1, 41: 1, 47: 1, 59: 1, 71: 1},
}

SPORADIC_ALIASES = {
    "ON": "O'N", "F24'": "Fi24'", "Fi24": "Fi24'", "BM": "B", "F2": "B",
    "F1": "M", "HJ": "J2", "F3": "Th", "F5": "HN", "Co.1": "Co1",
}


class CatalogError(ValueError):
    """Malformed group text or parameters outside a family's range."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class GroupId:
    family: Family
    n: int | None = None          # degree, dimension (GL/SL/PSL/unitary) or rank m
    q: int | None = None
    sign: int | None = None       # +1 / -1 for even orthogonal families
    name: str | None = None       # sporadic name
    exponent: int | None = None   # n in q = 2^(2n+1) or 3^(2n+1)
    derived: bool = False         # G2(2)'

    def __str__(self) -> str:
        return format_group(self)

    @property
    def suzuki_r(self) -> int:
        """r = 2^(n+1) for Sz(2^(2n+1)); r*r == 2q."""
        if self.family is not Family.Suzuki:
            raise AttributeError("suzuki_r only defined for Suzuki groups")
        return 2 ** (self.exponent + 1)

    @property
    def ree_pair(self) -> tuple[int, int]:
        """(Q, R) = (3^(2n+1), 3^(n+1)) for 2G2; R*R == 3Q."""
        if self.family is not Family.twistedG2:
            raise AttributeError("ree_pair only defined for 2G2")
        return self.q, 3 ** (self.exponent + 1)


def _sign_char(sign: int) -> str:
    return "+" if sign > 0 else "-"


def format_group(g: GroupId) -> str:
    f = g.family
    if f is Family.Cyclic:
        return f"C{g.n}"
    if f is Family.Alternating:
        return f"A{g.n}"
    if f is Family.Symmetric:
        return f"S{g.n}"
    if f in LINEAR or f in UNITARY:
        return f"{f.value}({g.n},{g.q})"
    if f in SYMPLECTIC:
        return f"{f.value}({2 * g.n},{g.q})"
    if f in ODD_ORTHOGONAL:
        return f"{f.value.split('_')[0]}({2 * g.n + 1},{g.q})"
    if f in EVEN_ORTHOGONAL:
        return f"{f.value.split('_')[0]}({_sign_char(g.sign)},{2 * g.n},{g.q})"
    if f is Family.TitsGroup:
        return "2F4(2)'"
    if f is Family.Sporadic:
        return g.name
    if f is Family.G2 and g.derived:
        return "G2(2)'"
    return f"{f.value}({g.q})"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+(?:\^\d+)?)|(?P<sign>[+-])|(?P<comma>,))")

_FUNC_FAMILIES = {
    "GL": Family.GL, "SL": Family.SL, "PSL": Family.PSL, "L": Family.PSL,
    "Sp": Family.Sp, "PSp": Family.PSp, "S": Family.PSp,
    "GU": Family.GU, "SU": Family.SU, "PSU": Family.PSU, "U": Family.PSU,
    "SO": Family.SO_odd, "GO": Family.GO_odd, "O": Family.GO_odd, "Omega": Family.Omega_odd,
    "POmega": Family.POmega_even, "CSO": Family.CSO_even,
    "E6": Family.E6, "2E6": Family.twistedE6, "E7": Family.E7, "E8": Family.E8,
    "F4": Family.F4, "2F4": Family.twistedF4, "G2": Family.G2, "2G2": Family.twistedG2,
    "R": Family.twistedG2, "3D4": Family.threeD4, "Sz": Family.Suzuki, "2B2": Family.Suzuki,
}
_EVEN_OF_ODD = {Family.SO_odd: Family.SO_even, Family.GO_odd: Family.GO_even,
                Family.Omega_odd: Family.Omega_even}


def _parse_args(text: str, start: int) -> tuple[list, int]:
    """Parse ``(a,b,...)`` beginning at text[start] == '('."""
    if start >= len(text) or text[start] != "(":
        raise CatalogError("expected '('", start)
    pos = start + 1
    args: list = []
    expect_value = True
    while True:
        if pos < len(text) and text[pos] == ")":
            if expect_value:
                raise CatalogError("expected a value before ')'", pos)
            return args, pos + 1
        m = _TOKEN.match(text, pos)
        if not m:
            raise CatalogError("unexpected character", pos)
        if m.group("comma"):
            if expect_value:
                raise CatalogError("unexpected ','", pos)
            expect_value = True
        elif expect_value:
            if m.group("int"):
                base, _, exp = m.group("int").partition("^")
                args.append(int(base) ** int(exp) if exp else int(base))
            else:
                args.append(1 if m.group("sign") == "+" else -1)
            expect_value = False
        else:
            raise CatalogError("expected ',' or ')'", pos)
        pos = m.end()
        if pos >= len(text):
            raise CatalogError("unterminated argument list", pos)


def parse_group(text: str) -> GroupId:
    """Parse the canonical grammar (``PSL(3,4)``, ``A7``, ``Sz(8)``, ``M11`` ...)."""
    s = text.strip()
    if not s:
        raise CatalogError("empty group name", 0)
    key = SPORADIC_ALIASES.get(s, s)
    if key in SPORADIC_ORDERS:
        return validate(GroupId(Family.Sporadic, name=key))
    if s in ("2F4(2)'", "Tits"):
        return GroupId(Family.TitsGroup)
    if s == "G2(2)'":
        return GroupId(Family.G2, q=2, derived=True)
    m = re.fullmatch(r"([CAS])(\d+)", s)
    if m:
        fam = {"C": Family.Cyclic, "A": Family.Alternating, "S": Family.Symmetric}[m.group(1)]
        return validate(GroupId(fam, n=int(m.group(2))))
    m = re.match(r"[0-9]?[A-Za-z]+[0-9]?", s)
    if not m or m.group(0) not in _FUNC_FAMILIES:
        raise CatalogError(f"unknown group family in {s!r}", 0)
    fam = _FUNC_FAMILIES[m.group(0)]
    args, end = _parse_args(s, m.end())
    if end != len(s):
        raise CatalogError("trailing characters", end)
    return validate(_from_args(fam, args, s))


def _from_args(fam: Family, args: list, s: str) -> GroupId:
    def need(k):
        if len(args) != k:
            raise CatalogError(f"{s}: expected {k} arguments, got {len(args)}")

    if fam in LINEAR or fam in UNITARY:
        need(2)
        return GroupId(fam, n=args[0], q=args[1])
    if fam in SYMPLECTIC:
        need(2)
        if args[0] % 2:
            raise CatalogError(f"{s}: symplectic dimension must be even")
        return GroupId(fam, n=args[0] // 2, q=args[1])
    if fam in (Family.SO_odd, Family.GO_odd, Family.Omega_odd):
        if len(args) == 3:
            sign, dim, q = args
            if sign not in (1, -1) or dim % 2:
                raise CatalogError(f"{s}: signed orthogonal groups need even dimension")
            return GroupId(_EVEN_OF_ODD[fam], n=dim // 2, q=q, sign=sign)
        need(2)
        if args[0] % 2 == 0:
            raise CatalogError(f"{s}: even dimension requires a sign, e.g. SO(+,{args[0]},q)")
        return GroupId(fam, n=(args[0] - 1) // 2, q=args[1])
    if fam in (Family.POmega_even, Family.CSO_even):
        need(3)
        sign, dim, q = args
        if sign not in (1, -1) or dim % 2:
            raise CatalogError(f"{s}: expected (sign, even dimension, q)")
        return GroupId(fam, n=dim // 2, q=q, sign=sign)
    need(1)
    q = args[0]
    if fam in (Family.Suzuki, Family.twistedF4, Family.twistedG2):
        base = 3 if fam is Family.twistedG2 else 2
        split = prime_power_split(q)
        if split is None or split[0] != base or split[1] % 2 == 0:
            raise CatalogError(f"{s}: q must be {base}^(2n+1)")
        return GroupId(fam, q=q, exponent=(split[1] - 1) // 2)
    return GroupId(fam, q=q)


def validate(g: GroupId) -> GroupId:
    f = g.family
    if f is Family.Sporadic:
        if g.name not in SPORADIC_ORDERS:
            raise CatalogError(f"unknown sporadic group {g.name!r}")
        return g
    if f is Family.TitsGroup:
        return g
    if f is Family.Cyclic:
        if g.n is None or g.n < 2:
            raise CatalogError("the trivial group is excluded; cyclic groups need n >= 2")
        return g
    if f is Family.Alternating and (g.n is None or g.n < 3):
        raise CatalogError("alternating groups need n >= 3")
    if f is Family.Symmetric and (g.n is None or g.n < 2):
        raise CatalogError("symmetric groups need n >= 2")
    if f in (Family.Alternating, Family.Symmetric):
        return g
    if g.q is None or prime_power_split(g.q) is None:
        raise CatalogError(f"{g.q} is not a prime power")
    if (g.sign is not None) != (f in EVEN_ORTHOGONAL):
        raise CatalogError("sign is required exactly for even orthogonal families")
    if f in LINEAR and g.n < 2:
        raise CatalogError("linear groups need n >= 2")
    if f in UNITARY and g.n < 2:
        raise CatalogError("unitary groups need n >= 2")
    if f in SYMPLECTIC | ODD_ORTHOGONAL | EVEN_ORTHOGONAL and g.n < 1:
        raise CatalogError("rank must be >= 1")
    if f in (Family.Suzuki, Family.twistedG2):
        base = 3 if f is Family.twistedG2 else 2
        if g.exponent is None or g.exponent < 1 or g.q != base ** (2 * g.exponent + 1):
            raise CatalogError(f"{format_group(g)}: need q = {base}^(2n+1) with n >= 1")
    if f is Family.twistedF4:
        if g.exponent is None or g.exponent < 0 or g.q != 2 ** (2 * g.exponent + 1):
            raise CatalogError("2F4 needs q = 2^(2n+1)")
    if g.derived and not (f is Family.G2 and g.q == 2):
        raise CatalogError("only G2(2)' is supported as a derived group")
    return g


# ------------------------------------------------------------ order formulas

@dataclass(frozen=True)
class OrderFormula:
    """|G| = multiplier * q^q_exp * prod(atoms) / prod(den_atoms) / divisor.

    Atoms are q^k - 1 (s = -1) or q^k + 1 (s = +1); ``den_atoms`` are divided
    out polynomially (SL, SU, 3D4) while ``divisor`` is a plain integer
    (centers).  ``constant`` covers the sporadic and Tits orders.
    """

    q: int = 1
    q_exp: int = 0
    atoms: tuple[tuple[int, int], ...] = ()
    divisor: int = 1
    multiplier: int = 1
    constant: Factored | None = None
    den_atoms: tuple[tuple[int, int], ...] = ()

    def cyclotomic_multiplicities(self) -> dict[int, int]:
        """Multiplicity of each cyclotomic polynomial Phi_j in the order polynomial."""
        out: dict[int, int] = {}
        for atoms, step in ((self.atoms, 1), (self.den_atoms, -1)):
            for k, s in atoms:
                for j in _atom_cyclotomics(k, s):
                    out[j] = out.get(j, 0) + step
        return {j: m for j, m in out.items() if m}


def _atom_cyclotomics(k: int, s: int) -> list[int]:
    if s < 0:
        return _divisors(k)
    return [j for j in _divisors(2 * k) if k % j]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _prod_atoms(rng, sign_of) -> tuple[tuple[int, int], ...]:
    return tuple((i, sign_of(i)) for i in rng)


def order_formula(g: GroupId) -> OrderFormula:
    f, n, q = g.family, g.n, g.q
    if f is Family.Sporadic:
        return OrderFormula(constant=Factored.from_factors(SPORADIC_ORDERS[g.name]))
    if f is Family.TitsGroup:
        return OrderFormula(constant=Factored.from_factors({2: 11, 3: 3, 5: 2, 13: 1}))
    if f is Family.Cyclic:
        return OrderFormula(constant=factorize(n))
    if f in (Family.Alternating, Family.Symmetric):
        fac = factorize(math.factorial(n))
        return OrderFormula(constant=fac / Factored.from_factors({2: 1}) if f is Family.Alternating else fac)
    minus = lambda i: -1  # noqa: E731
    if f in LINEAR:
        atoms = _prod_atoms(range(1, n + 1), minus)
        if f is Family.GL:
            return OrderFormula(q, n * (n - 1) // 2, atoms)
        div = math.gcd(n, q - 1) if f is Family.PSL else 1
        return OrderFormula(q, n * (n - 1) // 2, atoms, div, den_atoms=((1, -1),))
    if f in UNITARY:
        atoms = tuple((i, 1 if i % 2 else -1) for i in range(1, n + 1))
        if f is Family.GU:
            return OrderFormula(q, n * (n - 1) // 2, atoms)
        div = math.gcd(n, q + 1) if f is Family.PSU else 1
        return OrderFormula(q, n * (n - 1) // 2, atoms, div, den_atoms=((1, 1),))
    if f in SYMPLECTIC:
        atoms = tuple((2 * i, -1) for i in range(1, n + 1))
        div = 1 if f is Family.Sp else math.gcd(2, q - 1)
        return OrderFormula(q, n * n, atoms, div)
    if f in ODD_ORTHOGONAL:
        atoms = tuple((2 * i, -1) for i in range(1, n + 1))
        g2 = math.gcd(2, q - 1)
        if f is Family.Omega_odd:
            return OrderFormula(q, n * n, atoms, g2)
        if f is Family.SO_odd:
            return OrderFormula(q, n * n, atoms)
        return OrderFormula(q, n * n, atoms, multiplier=g2)
    if f in EVEN_ORTHOGONAL:
        eps = g.sign
        atoms = tuple((2 * i, -1) for i in range(1, n)) + ((n, -eps),)
        g2 = math.gcd(2, q - 1)
        if f is Family.POmega_even:
            return OrderFormula(q, n * (n - 1), atoms, math.gcd(4, q**n - eps))
        if f is Family.Omega_even:
            return OrderFormula(q, n * (n - 1), atoms, g2)
        if f is Family.SO_even:
            return OrderFormula(q, n * (n - 1), atoms, g2, multiplier=2)
        if f is Family.GO_even:
            return OrderFormula(q, n * (n - 1), atoms, multiplier=2)
        return OrderFormula(q, n * (n - 1), atoms + ((1, -1),), g2, multiplier=2)  # CSO
    if f is Family.G2:
        base = OrderFormula(q, 6, ((2, -1), (6, -1)))
        if g.derived:
            return replace(base, divisor=2)
        return base
    if f is Family.threeD4:
        # q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
        return OrderFormula(q, 12, ((2, -1), (6, -1), (12, -1)), den_atoms=((4, -1),))
    if f is Family.F4:
        return OrderFormula(q, 24, ((2, -1), (6, -1), (8, -1), (12, -1)))
    if f is Family.E6:
        return OrderFormula(q, 36, ((2, -1), (5, -1), (6, -1), (8, -1), (9, -1), (12, -1)),
                            math.gcd(3, q - 1))
    if f is Family.twistedE6:
        return OrderFormula(q, 36, ((2, -1), (5, 1), (6, -1), (8, -1), (9, 1), (12, -1)),
                            math.gcd(3, q + 1))
    if f is Family.E7:
        return OrderFormula(q, 63, tuple((k, -1) for k in (2, 6, 8, 10, 12, 14, 18)),
                            math.gcd(2, q - 1))
    if f is Family.E8:
        return OrderFormula(q, 120, tuple((k, -1) for k in (2, 8, 12, 14, 18, 20, 24, 30)))
    if f is Family.twistedF4:
        return OrderFormula(q, 12, ((1, -1), (3, 1), (4, -1), (6, 1)))
    if f is Family.twistedG2:
        return OrderFormula(q, 3, ((1, -1), (3, 1)))
    if f is Family.Suzuki:
        return OrderFormula(q, 2, ((1, -1), (2, 1)))
    raise CatalogError(f"no order formula for {f}")


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> Factored:
    return factorize(n)


def evaluate(formula: OrderFormula) -> Factored:
    if formula.constant is not None:
        return formula.constant
    q = formula.q
    total = Factored.from_factors({p: e * formula.q_exp for p, e in _factor_cached(q).factors})
    for k, s in formula.atoms:
        total = total * _factor_cached(q**k + s)
    for k, s in formula.den_atoms:
        total = total / _factor_cached(q**k + s)
    total = total * _factor_cached(formula.multiplier)
    return total / _factor_cached(formula.divisor)


def order(g: GroupId) -> Factored:
    return evaluate(order_formula(g))


def suzuki_ree_factors(g: GroupId) -> dict[str, int]:
    """Integer forms of the irrational-looking torus factors.

    Sz(q): q - 1, q + r + 1, q - r + 1 with r = 2^(n+1).
    2G2(Q): Q - 1, Q + 1, Q + R + 1, Q - R + 1 with R = 3^(n+1).
    """
    if g.family is Family.Suzuki:
        q, r = g.q, g.suzuki_r
        return {"q-1": q - 1, "q+r+1": q + r + 1, "q-r+1": q - r + 1}
    if g.family is Family.twistedG2:
        Q, R = g.ree_pair
        return {"q^2-1": Q - 1, "q^2+1": Q + 1, "q^2+sqrt3q+1": Q + R + 1,
                "q^2-sqrt3q+1": Q - R + 1}
    raise CatalogError("suzuki_ree_factors needs a Suzuki or 2G2 group")


# ------------------------------------------------------------ normalization

@dataclass(frozen=True)
class Rewrite:
    source: GroupId
    target: GroupId
    note: str


def _rewrite_once(g: GroupId) -> tuple[GroupId, str] | None:
    f, n, q = g.family, g.n, g.q
    if f is Family.Omega_odd:
        if n == 1:
            return GroupId(Family.PSL, n=2, q=q), "Omega_3(q) = PSL_2(q)"
        if q % 2 == 0:
            return GroupId(Family.PSp, n=n, q=q), "Omega_{2m+1}(q) = PSp_{2m}(q) for even q"
        if n == 2:
            return GroupId(Family.PSp, n=2, q=q), "Omega_5(q) = PSp_4(q)"
    if f is Family.PSU and n == 2:
        return GroupId(Family.PSL, n=2, q=q), "PSU_2(q^2) = PSL_2(q)"
    if f is Family.SU and n == 2:
        return GroupId(Family.SL, n=2, q=q), "SU_2(q^2) = SL_2(q) (standard)"
    if f is Family.POmega_even:
        if n == 2 and g.sign < 0:
            return GroupId(Family.PSL, n=2, q=q * q), "POmega^-_4(q) = PSL_2(q^2)"
        if n == 3:
            if g.sign > 0:
                return GroupId(Family.PSL, n=4, q=q), "POmega^+_6(q) = PSL_4(q)"
            return GroupId(Family.PSU, n=4, q=q), "POmega^-_6(q) = PSU_4(q^2)"
    if f in SYMPLECTIC and n == 1:
        tgt = Family.SL if f is Family.Sp else Family.PSL
        return GroupId(tgt, n=2, q=q), f"{f.value}_2(q) = {tgt.value}_2(q)"
    if f in SYMPLECTIC and n == 2 and q == 2:
        return GroupId(Family.Symmetric, n=6), "PSp_4(2) = Sp_4(2) = S_6"
    if f is Family.G2 and g.derived:
        return GroupId(Family.PSU, n=3, q=3), "G2(2)' = PSU(3,3)"
    if f is Family.PSL and n == 2 and q in (4, 5):
        return GroupId(Family.Alternating, n=5), f"PSL_2({q}) = A_5 (standard)"
    if f is Family.PSL and n == 2 and q == 9:
        return GroupId(Family.Alternating, n=6), "PSL_2(9) = A_6 (standard)"
    if f is Family.PSL and n == 3 and q == 2:
        return GroupId(Family.PSL, n=2, q=7), "PSL_3(2) = PSL_2(7) (standard)"
    if f is Family.PSL and n == 4 and q == 2:
        return GroupId(Family.Alternating, n=8), "PSL_4(2) = A_8 (standard)"
    if f is Family.PSU and n == 4 and q == 2:
        return GroupId(Family.PSp, n=2, q=3), "PSU_4(2^2) = PSp_4(3) (standard)"
    if f is Family.Alternating and n == 3:
        return GroupId(Family.Cyclic, n=3), "A_3 = C_3"
    if f is Family.Symmetric and n == 2:
        return GroupId(Family.Cyclic, n=2), "S_2 = C_2"
    return None


def normalize(g: GroupId) -> tuple[GroupId, str | None]:
    """Rewrite along exceptional isomorphisms to a canonical representative."""
    notes = []
    cur = g
    while True:
        step = _rewrite_once(cur)
        if step is None:
            break
        cur, note = step
        notes.append(note)
    return cur, ("; ".join(notes) if notes else None)


def rewrite_rules() -> list[Rewrite]:
    """Every rewrite exercised over small q, for isomorphism-order checks."""
    out = []
    seen = set()
    qs = [2, 3, 4, 5, 7, 8, 9]
    cands = []
    for q in qs:
        cands += [GroupId(Family.Omega_odd, n=m, q=q) for m in (1, 2, 3)]
        cands += [GroupId(Family.PSU, n=2, q=q), GroupId(Family.SU, n=2, q=q)]
        cands += [GroupId(Family.POmega_even, n=2, q=q, sign=-1),
                  GroupId(Family.POmega_even, n=3, q=q, sign=1),
                  GroupId(Family.POmega_even, n=3, q=q, sign=-1)]
        cands += [GroupId(Family.Sp, n=1, q=q), GroupId(Family.PSp, n=1, q=q)]
        cands += [GroupId(Family.PSL, n=2, q=q), GroupId(Family.PSL, n=3, q=q),
                  GroupId(Family.PSL, n=4, q=q)]
    cands += [GroupId(Family.Sp, n=2, q=2), GroupId(Family.PSp, n=2, q=2),
              GroupId(Family.G2, q=2, derived=True), GroupId(Family.PSU, n=4, q=2),
              GroupId(Family.Alternating, n=3), GroupId(Family.Symmetric, n=2)]
    for c in cands:
        step = _rewrite_once(c)
        if step and c not in seen:
            seen.add(c)
            out.append(Rewrite(c, step[0], step[1]))
    return out


# ------------------------------------------------------------ simplicity

class Simplicity(str, enum.Enum):
    Simple = "Simple"
    NotSimple = "NotSimple"
    SimpleExceptParams = "SimpleExceptParams"


@dataclass(frozen=True)
class SimplicityNote:
    status: Simplicity
    exceptions: tuple[str, ...] = field(default=())
    reason: str = ""


def _is_prime(n: int) -> bool:
    from .arith import is_prime
    return is_prime(n)


def _psl_simple(n: int, q: int) -> bool:
    return not (n == 2 and q in (2, 3))


def simplicity_note(g: GroupId) -> SimplicityNote:
    """Whether this parameterized group is simple, with the family's exceptions."""
    f, n, q = g.family, g.n, g.q
    S, N = Simplicity.Simple, Simplicity.NotSimple
    if f is Family.Sporadic or f is Family.TitsGroup:
        return SimplicityNote(S)
    if f is Family.Cyclic:
        return SimplicityNote(S if _is_prime(n) else N, reason="cyclic of prime order only")
    if f is Family.Alternating:
        return SimplicityNote(S if n != 4 else N, ("A4",), "A3 is cyclic of order 3")
    if f is Family.Symmetric:
        return SimplicityNote(S if n == 2 else N, reason="A_n has index 2")
    if f is Family.GL:
        return SimplicityNote(N, reason="has center and determinant quotient")
    if f is Family.PSL:
        return SimplicityNote(S if _psl_simple(n, q) else N, ("PSL(2,2)", "PSL(2,3)"))
    if f is Family.SL:
        ok = _psl_simple(n, q) and math.gcd(n, q - 1) == 1
        return SimplicityNote(S if ok else N, reason="simple only when the center is trivial")
    if f is Family.GU:
        return SimplicityNote(N, reason="has center and determinant quotient")
    if f in (Family.PSU, Family.SU):
        ok = not (n == 2 and q in (2, 3)) and not (n == 3 and q == 2)
        if f is Family.SU:
            ok = ok and math.gcd(n, q + 1) == 1
        return SimplicityNote(S if ok else N, ("PSU(3,2)",))
    if f in SYMPLECTIC:
        ok = not (n == 1 and q in (2, 3)) and not (n == 2 and q == 2)
        if f is Family.Sp:
            ok = ok and q % 2 == 0
        return SimplicityNote(S if ok else N, ("PSp(4,2)",))
    if f is Family.Omega_odd:
        if n == 1:
            return simplicity_note(GroupId(Family.PSL, n=2, q=q))
        return simplicity_note(GroupId(Family.PSp, n=n, q=q))
    if f in (Family.SO_odd, Family.GO_odd):
        if q % 2:
            return SimplicityNote(N, reason="Omega has index 2")
        return simplicity_note(GroupId(Family.PSp, n=n, q=q))
    if f is Family.POmega_even:
        if n >= 3 or (n == 2 and g.sign < 0 and q > 1):
            return SimplicityNote(S)
        return SimplicityNote(N, reason="POmega^+_4 and rank 1 are not simple")
    if f is Family.Omega_even:
        center = math.gcd(4, q**n - g.sign) // math.gcd(2, q - 1)
        base = simplicity_note(GroupId(Family.POmega_even, n=n, q=q, sign=g.sign))
        return SimplicityNote(base.status if center == 1 else N)
    if f in (Family.SO_even, Family.GO_even, Family.CSO_even):
        return SimplicityNote(N)
    if f is Family.G2:
        if g.derived:
            return SimplicityNote(S)
        return SimplicityNote(S if q != 2 else N, ("G2(2)",))
    if f is Family.twistedF4:
        return SimplicityNote(S if g.exponent >= 1 else N, ("2F4(2)",))
    return SimplicityNote(S)


def is_simple(g: GroupId) -> bool:
    return simplicity_note(g).status is Simplicity.Simple


def is_abelian(g: GroupId) -> bool:
    return g.family is Family.Cyclic or (g.family is Family.Alternating and g.n == 3) or (
        g.family is Family.Symmetric and g.n == 2)


def is_solvable(g: GroupId) -> bool:
    """Solvable members of the catalog (all small)."""
    f, n, q = g.family, g.n, g.q
    if f is Family.Cyclic:
        return True
    if f in (Family.Alternating, Family.Symmetric):
        return n <= 4
    if f in LINEAR:
        return n == 2 and q <= 3
    if f in UNITARY:
        return (n == 2 and q <= 3) or (n == 3 and q == 2)
    if f in SYMPLECTIC:
        return n == 1 and q <= 3
    if f in ODD_ORTHOGONAL:
        return n == 1 and q <= 3
    if f in EVEN_ORTHOGONAL:
        return n == 1 or (n == 2 and g.sign > 0 and q <= 3)
    return False
