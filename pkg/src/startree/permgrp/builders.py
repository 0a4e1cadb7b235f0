"""Concrete permutation representations of catalog groups.

Every builder checks the order of what it built against the catalog order
formula and raises :class:`BuilderError` on a mismatch, since a mismatch
can only mean the construction itself is wrong.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from pathlib import Path
from typing import Callable, Sequence

from .. import catalog
from ..catalog import Family, GroupId
from .chain import PermGroup
from .field import GF, field
from .perm import from_cycles

Matrix = tuple[tuple[int, ...], ...]

DATA_DIR_ENV = "STARTREE_DATA_DIR"
PACKAGE_DATA = Path(__file__).with_name("data")
FORMAT_VERSION = 1


class BuilderError(ValueError):
    pass


def data_dir() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV) or PACKAGE_DATA)


def _checked(gens, gid: GroupId | None, name: str, expected: int | None = None) -> PermGroup:
    if expected is None:
        expected = catalog.order(catalog.normalize(gid)[0]).value
    G = PermGroup(gens, name=name, expected_order=expected)
    if G.order() != expected:
        raise BuilderError(f"{name}: chain order {G.order()} != catalog order {expected}")
    G.gid = gid
    return G


# ----------------------------------------------------------- small families

def cyclic(n: int) -> PermGroup:
    if n < 2:
        raise BuilderError("cyclic group needs n >= 2")
    return _checked([from_cycles(n, [list(range(n))])], GroupId(Family.Cyclic, n), f"C{n}")


def symmetric(n: int) -> PermGroup:
    if n < 2:
        raise BuilderError("symmetric group needs n >= 2")
    gens = [from_cycles(n, [list(range(n))]), from_cycles(n, [[0, 1]])]
    return _checked(gens, GroupId(Family.Symmetric, n), f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        raise BuilderError("alternating group needs n >= 3")
    gens = [from_cycles(n, [[i, i + 1, i + 2]]) for i in range(n - 2)]
    return _checked(gens, GroupId(Family.Alternating, n), f"A{n}")


# ----------------------------------------------------------- projective line

def _line_action(F: GF, maps: list[Callable[[int | None], int | None]]) -> list[tuple]:
    """Permutations of the q+1 points (field elements, then infinity = q)."""
    q = F.q
    pts: list[int | None] = list(range(q)) + [None]
    out = []
    for f in maps:
        out.append(tuple(q if (y := f(x)) is None else y for x in pts))
    return out


def _moebius(F: GF, a: int, b: int, c: int, d: int):
    """x -> (a x + b) / (c x + d)."""
    def f(x):
        if x is None:
            return None if c == 0 else F.mul(a, F.inv(c))
        num = F.add(F.mul(a, x), b)
        den = F.add(F.mul(c, x), d)
        return None if den == 0 else F.mul(num, F.inv(den))
    return f


def _line_generators(F: GF, scale: int) -> list[tuple]:
    minus_one = F.neg(1)
    return _line_action(F, [
        _moebius(F, 1, 1, 0, 1),
        _moebius(F, scale, 0, 0, 1),
        _moebius(F, 0, minus_one, 1, 0),
    ])


def psl2_action(q: int) -> PermGroup:
    """PSL(2,q) on the projective line."""
    F = field(q)
    gens = _line_generators(F, F.mul(F.primitive, F.primitive))
    return _checked(gens, GroupId(Family.PSL, 2, q), f"PSL(2,{q})")


def pgl2_action(q: int) -> PermGroup:
    F = field(q)
    gens = _line_generators(F, F.primitive)
    expected = catalog.order(GroupId(Family.GL, 2, q)).value // (q - 1)
    return _checked(gens, None, f"PGL(2,{q})", expected)


# ----------------------------------------------------------- matrix groups

def mat_mul(F: GF, A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add(s, F.mul(A[i][k], B[k][j]))
            row.append(s)
        rows.append(tuple(row))
    return tuple(rows)


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def det(F: GF, A: Matrix) -> int:
    n = len(A)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = 1
        for i in range(n):
            term = F.mul(term, A[i][perm[i]])
        total = F.add(total, term if sign > 0 else F.neg(term))
    return total


def _vec_times(F: GF, v: Sequence[int], A: Matrix) -> tuple[int, ...]:
    n = len(A)
    out = []
    for j in range(n):
        s = 0
        for i in range(n):
            if v[i]:
                s = F.add(s, F.mul(v[i], A[i][j]))
        out.append(s)
    return tuple(out)


def _normalize(F: GF, v: tuple[int, ...]) -> tuple[int, ...]:
    lead = next(x for x in v if x)
    if lead == 1:
        return v
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in v)


def vector_points(F: GF, n: int, projective: bool) -> list[tuple[int, ...]]:
    pts = [v for v in itertools.product(range(F.q), repeat=n) if any(v)]
    if projective:
        pts = [v for v in pts if next(x for x in v if x) == 1]
    return pts


def matrices_to_perms(F: GF, mats: Sequence[Matrix], projective: bool) -> list[tuple]:
    n = len(mats[0])
    pts = vector_points(F, n, projective)
    index = {v: i for i, v in enumerate(pts)}
    perms = []
    for A in mats:
        img = []
        for v in pts:
            w = _vec_times(F, v, A)
            img.append(index[_normalize(F, w) if projective else w])
        perms.append(tuple(img))
    return perms


def _elementary(F: GF, n: int, i: int, j: int, a: int) -> Matrix:
    rows = [list(r) for r in mat_identity(n)]
    rows[i][j] = a
    return tuple(tuple(r) for r in rows)


def _diag(n: int, entries: Sequence[int]) -> Matrix:
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def _additive_basis(F: GF) -> list[int]:
    return [F.pow(F.primitive, i) for i in range(F.k)]


def sl_generators(F: GF, n: int) -> list[Matrix]:
    return [_elementary(F, n, i, j, a) for i in range(n) for j in range(n) if i != j
            for a in _additive_basis(F)]


def gl_generators(F: GF, n: int) -> list[Matrix]:
    return sl_generators(F, n) + [_diag(n, [F.primitive] + [1] * (n - 1))]


def _conj_transpose(F: GF, A: Matrix, r: int) -> Matrix:
    n = len(A)
    return tuple(tuple(F.pow(A[j][i], r) for j in range(n)) for i in range(n))


def su3_generators(F: GF) -> list[Matrix]:
    """Unipotent elements of SU(3) for the antidiagonal Hermitian form.

    F has q^2 elements and the bar map is x -> x^q.  Upper and lower
    unipotent radicals generate the group.
    """
    q = math.isqrt(F.q)
    W = tuple(tuple(int(i + j == 2) for j in range(3)) for i in range(3))
    upper = []
    for a, b in itertools.product(range(F.q), repeat=2):
        A = ((1, a, b), (0, 1, F.neg(F.pow(a, q))), (0, 0, 1))
        if mat_mul(F, mat_mul(F, A, W), _conj_transpose(F, A, q)) == W and A != mat_identity(3):
            upper.append(A)
    lower = [tuple(tuple(A[2 - i][2 - j] for j in range(3)) for i in range(3)) for A in upper]
    return upper + lower


def sp4_generators(F: GF) -> list[Matrix]:
    """Symplectic transvections x -> x + a B(x, u) u for B with Gram [[0, I], [-I, 0]]."""
    def B(x, y):
        s = 0
        for i in range(2):
            s = F.add(s, F.mul(x[i], y[i + 2]))
            s = F.sub(s, F.mul(x[i + 2], y[i]))
        return s

    units = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    dirs = units + [(1, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0)]
    mats = []
    for u in dirs:
        for a in _additive_basis(F):
            rows = []
            for e in units:
                c = F.mul(a, B(e, u))
                rows.append(tuple(F.add(e[k], F.mul(c, u[k])) for k in range(4)))
            mats.append(tuple(rows))
    return mats


MATRIX_FAMILIES = ("SL2", "GL2", "SL3", "GL3", "SU3", "Sp4")


def matrix_projective_action(family: str, q: int) -> PermGroup:
    """Permutation image of a classical matrix group.

    GL and SL act on the nonzero vectors of the natural module, which is
    faithful.  SU(3) and Sp(4) act on projective points, so their image is
    the projective group, and the order is compared with PSU / PSp.
    """
    if family not in MATRIX_FAMILIES:
        raise BuilderError(f"unsupported matrix family {family!r}; choose from {MATRIX_FAMILIES}")
    kind, n = family[:-1], int(family[-1])
    if kind == "SU":
        F = field(q * q)
        mats = su3_generators(F)
        gid = GroupId(Family.PSU, 3, q)
        name = f"SU(3,{q})"
        projective = True
    elif kind == "Sp":
        F = field(q)
        mats = sp4_generators(F)
        gid = GroupId(Family.PSp, 2, q)
        name = f"Sp(4,{q})"
        projective = True
    else:
        F = field(q)
        mats = gl_generators(F, n) if kind == "GL" else sl_generators(F, n)
        gid = GroupId(Family.GL if kind == "GL" else Family.SL, n, q)
        name = f"{kind}({n},{q})"
        projective = False
    catalog.validate(gid)
    return _checked(matrices_to_perms(F, mats, projective), gid, name)


# ----------------------------------------------------------- generator files

def load_generators(path: str | os.PathLike, data: Path | None = None) -> PermGroup:
    """Read a generator file: JSON with degree, 1-based generators, name, expected_order.

    Relative paths that do not exist are looked up in ``data`` (default
    :func:`data_dir`).
    """
    p = Path(path)
    if not p.exists() and not p.is_absolute():
        p = Path(data or data_dir()) / p
    try:
        rec = json.loads(p.read_text())
        degree = int(rec["degree"])
        gens = [tuple(int(x) - 1 for x in g) for g in rec["generators"]]
    except (OSError, ValueError, KeyError, TypeError) as err:
        raise BuilderError(f"malformed generator file {p}: {err}") from err
    if any(len(g) != degree for g in gens):
        raise BuilderError(f"{p}: generator length differs from degree {degree}")
    expected = int(rec["expected_order"]) if rec.get("expected_order") is not None else None
    try:
        G = PermGroup(gens, degree=degree, name=rec.get("name"), expected_order=expected)
    except ValueError as err:
        raise BuilderError(f"{p}: {err}") from err
    if expected is not None and G.order() != expected:
        raise BuilderError(f"{p}: chain order {G.order()} != expected {expected}")
    G.gid = None
    if rec.get("name"):
        try:
            G.gid = catalog.parse_group(rec["name"])
        except catalog.CatalogError:
            pass
    return G


def dump_generators(G_gens: Sequence[Sequence[int]], degree: int, name: str,
                    expected_order: int) -> str:
    rec = {
        "format": FORMAT_VERSION,
        "name": name,
        "degree": degree,
        "expected_order": str(expected_order),
        "generators": [[x + 1 for x in g] for g in G_gens],
    }
    return json.dumps(rec, separators=(",", ":")) + "\n"


# ----------------------------------------------------------- dispatch

def representation(gid: GroupId, rep: str | os.PathLike | None = None,
                   data: Path | None = None) -> PermGroup:
    """A permutation representation for gid, or BuilderError when none is known."""
    if rep is not None:
        return load_generators(rep, data)
    g, _ = catalog.normalize(gid)
    fam = g.family
    if fam is Family.Cyclic:
        return cyclic(g.n)
    if fam is Family.Alternating:
        return alternating(g.n)
    if fam is Family.Symmetric:
        return symmetric(g.n)
    if fam is Family.PSL and g.n == 2:
        return psl2_action(g.q)
    if fam in (Family.GL, Family.SL) and g.n in (2, 3):
        return matrix_projective_action(f"{fam.value}{g.n}", g.q)
    if fam is Family.PSL and g.n == 3 and math.gcd(3, g.q - 1) == 1:
        return matrix_projective_action("SL3", g.q)
    if fam in (Family.SU, Family.PSU) and g.n == 3 and math.gcd(3, g.q + 1) == 1:
        return matrix_projective_action("SU3", g.q)
    if fam is Family.PSp and g.n == 2:
        return matrix_projective_action("Sp4", g.q)
    fname = {Family.Sporadic: (g.name or "").lower().replace("'", ""),
             Family.Suzuki: f"sz{g.q}"}.get(fam)
    if fname:
        path = Path(data or data_dir()) / f"{fname}.json"
        if path.exists():
            return load_generators(path)
    raise BuilderError(f"no permutation representation available for {catalog.format_group(g)}")
