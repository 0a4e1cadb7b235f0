"""Brauer trees as plain data: shape predicates, winding, similarity, real stem.

A tree is stored as vertex records plus an edge list over vertex indices.
Similarity is decided through the *primitive root* of a tree at its
exceptional vertex Q: the multiset of rooted branch shapes at Q with every
multiplicity divided by their gcd.  Two trees are windings of a common
rooted tree exactly when their primitive roots coincide.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field, replace


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    label: str
    real: bool = True
    degree: int | str | None = None   # int when evaluated, str when symbolic


@dataclass(frozen=True)
class BrauerTree:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int, str], ...]
    exceptional: tuple[int, int] | None = None   # (vertex index, multiplicity)

    def __post_init__(self):
        nv = len(self.vertices)
        if nv == 0:
            raise TreeError("a tree needs at least one vertex")
        if len(self.edges) != nv - 1:
            raise TreeError(f"{nv} vertices need {nv - 1} edges, got {len(self.edges)}")
        labels = [lab for _, _, lab in self.edges]
        if len(set(labels)) != len(labels):
            raise TreeError("edge labels must be distinct")
        for u, v, _ in self.edges:
            if not (0 <= u < nv and 0 <= v < nv) or u == v:
                raise TreeError(f"bad edge ({u}, {v})")
        if nv > 1 and len(_bfs(self.adjacency(), 0)) != nv:
            raise TreeError("edges do not connect all vertices")
        if self.exceptional is not None:
            idx, mult = self.exceptional
            if not 0 <= idx < nv or mult < 1:
                raise TreeError(f"bad exceptional vertex {self.exceptional}")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def _bfs(adj: list[list[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    todo = deque([src])
    while todo:
        u = todo.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                todo.append(w)
    return dist


# ----------------------------------------------------------- constructors

def path(n_edges: int, exceptional: int | None = None, multiplicity: int = 1) -> BrauerTree:
    verts = tuple(Vertex(f"v{i}") for i in range(n_edges + 1))
    edges = tuple((i, i + 1, f"e{i}") for i in range(n_edges))
    exc = None if exceptional is None else (exceptional, multiplicity)
    return BrauerTree(verts, edges, exc)


def star(n_edges: int, exceptional_center: bool = True, multiplicity: int = 1) -> BrauerTree:
    verts = tuple(Vertex(f"v{i}") for i in range(n_edges + 1))
    edges = tuple((0, i, f"e{i - 1}") for i in range(1, n_edges + 1))
    return BrauerTree(verts, edges, (0, multiplicity) if exceptional_center else None)


def from_parent_list(parents: list[int], multiplicity: int = 1) -> BrauerTree:
    """Rooted tree with vertex 0 as root (and exceptional vertex); parents[i] is the parent of i+1."""
    verts = tuple(Vertex(f"v{i}") for i in range(len(parents) + 1))
    edges = tuple((p, i + 1, f"e{i}") for i, p in enumerate(parents))
    return BrauerTree(verts, edges, (0, multiplicity))


# ----------------------------------------------------------- shape

def edge_count(t: BrauerTree) -> int:
    return len(t.edges)


def diameter(t: BrauerTree) -> int:
    adj = t.adjacency()
    d0 = _bfs(adj, 0)
    far = max(d0, key=d0.get)
    return max(_bfs(adj, far).values())


def is_star(t: BrauerTree) -> bool:
    return diameter(t) <= 2


def has_center_vertex(t: BrauerTree) -> bool:
    """True when one vertex meets every edge (the direct definition of a star)."""
    if len(t.edges) <= 1:
        return True
    return any(all(c in (u, v) for u, v, _ in t.edges) for c in range(len(t.vertices)))


def is_line(t: BrauerTree) -> bool:
    return all(len(nb) <= 2 for nb in t.adjacency())


# ----------------------------------------------------------- winding

def _require_exceptional(t: BrauerTree) -> int:
    if t.exceptional is None:
        raise TreeError("operation requires a designated exceptional vertex")
    return t.exceptional[0]


def wind(t: BrauerTree, n: int) -> BrauerTree:
    """Glue n copies of t at its exceptional vertex; copy 0 keeps its labels."""
    if n < 1:
        raise TreeError("winding factor must be >= 1")
    q = _require_exceptional(t)
    verts = list(t.vertices)
    edges = list(t.edges)
    nv = len(t.vertices)
    for k in range(1, n):
        index = {q: q}
        for i, v in enumerate(t.vertices):
            if i != q:
                index[i] = len(verts)
                verts.append(replace(v, label=f"{v.label}#{k}"))
        for u, v, lab in t.edges:
            edges.append((index[u], index[v], f"{lab}#{k}"))
    assert len(verts) == 1 + n * (nv - 1)
    return BrauerTree(tuple(verts), tuple(edges), t.exceptional)


def rooted_encoding(t: BrauerTree, root: int) -> str:
    """AHU canonical string of t rooted at ``root``."""
    return _enc_from(t.adjacency(), root, -1)


def primitive_root(t: BrauerTree) -> tuple[tuple[tuple[str, int], ...], int]:
    """(primitive branch multiset at Q, winding number k with t = wind(sigma, k))."""
    q = _require_exceptional(t)
    adj = t.adjacency()
    branches = Counter()
    for w in adj[q]:
        branches[_enc_from(adj, w, q)] += 1
    if not branches:
        return (), 1
    k = math.gcd(*branches.values())
    return tuple(sorted((b, c // k) for b, c in branches.items())), k


def _enc_from(adj, u: int, parent: int) -> str:
    return "(" + "".join(sorted(_enc_from(adj, w, u) for w in adj[u] if w != parent)) + ")"


def similar(t1: BrauerTree, t2: BrauerTree) -> bool:
    return primitive_root(t1)[0] == primitive_root(t2)[0]


def isomorphic_rooted(t1: BrauerTree, t2: BrauerTree) -> bool:
    return rooted_encoding(t1, _require_exceptional(t1)) == rooted_encoding(t2, _require_exceptional(t2))


# ----------------------------------------------------------- real stem

@dataclass(frozen=True)
class RealStem:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, str], ...]
    is_line: bool
    issues: tuple[str, ...] = field(default=())

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def real_stem(t: BrauerTree) -> RealStem:
    """Induced subgraph on real vertices; a non-path result is reported, not raised."""
    keep = [i for i, v in enumerate(t.vertices) if v.real]
    ks = set(keep)
    edges = tuple(e for e in t.edges if e[0] in ks and e[1] in ks)
    issues = []
    deg = Counter()
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    if keep:
        adj = {i: [] for i in keep}
        for u, v, _ in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {keep[0]}
        todo = [keep[0]]
        while todo:
            u = todo.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(keep):
            issues.append("real vertices do not form a connected subtree")
    if any(d > 2 for d in deg.values()):
        issues.append("a real vertex has more than two real neighbours")
    return RealStem(tuple(keep), edges, not issues, tuple(issues))


# ----------------------------------------------------------- SO7 fixture

SO7_DEGREES = (
    1,
    "q^2(q^4+q^2+1)",
    "q^4(q^3+1)(q+1)/2",
    "(q^6-1)(q^2-1)",
    "q^4(q^3-1)(q-1)/2",
)
SO7_SYMBOLS = ("(3;-)", "(0,2;2)", "(0,1,2;1,3)", "exc", "(1;0,1,2,3)")
SO7_EXCEPTIONAL_INDEX = 3


def so7_degrees(q: int) -> tuple[int, ...]:
    return (
        1,
        q**2 * (q**4 + q**2 + 1),
        q**4 * (q**3 + 1) * (q + 1) // 2,
        (q**6 - 1) * (q**2 - 1),
        q**4 * (q**3 - 1) * (q - 1) // 2,
    )


def so7_fixture(q: int | None = None, multiplicity: int = 1) -> BrauerTree:
    """Principal-block tree of SO_7(q) for p | q^2 + 1: a 4-edge line.

    With ``q`` the character degrees are evaluated, otherwise they stay
    symbolic.  The exceptional vertex sits second from the right.
    """
    degs = so7_degrees(q) if q is not None else SO7_DEGREES
    verts = tuple(Vertex(sym, True, d) for sym, d in zip(SO7_SYMBOLS, degs))
    edges = tuple((i, i + 1, f"phi{i + 1}") for i in range(4))
    return BrauerTree(verts, edges, (SO7_EXCEPTIONAL_INDEX, multiplicity))


# ----------------------------------------------------------- text form

def dumps(t: BrauerTree) -> str:
    lines = []
    for v in t.vertices:
        line = f"vertex {v.label} {'real' if v.real else 'nonreal'}"
        if v.degree is not None:
            line += f" deg={v.degree}"
        lines.append(line)
    for u, v, lab in t.edges:
        lines.append(f"edge {u} {v} {lab}")
    if t.exceptional is not None:
        lines.append(f"exceptional {t.exceptional[0]} {t.exceptional[1]}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> BrauerTree:
    verts, edges, exc = [], [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        try:
            kind = parts[0]
            if kind == "vertex":
                deg = None
                if len(parts) > 3 and parts[3].startswith("deg="):
                    val = parts[3][4:]
                    deg = int(val) if val.lstrip("-").isdigit() else val
                verts.append(Vertex(parts[1], parts[2] == "real", deg))
            elif kind == "edge":
                edges.append((int(parts[1]), int(parts[2]), parts[3]))
            elif kind == "exceptional":
                exc = (int(parts[1]), int(parts[2]))
            else:
                raise TreeError(f"unknown record {kind!r}")
        except (IndexError, ValueError) as err:
            raise TreeError(f"line {lineno}: {err}") from err
    return BrauerTree(tuple(verts), tuple(edges), exc)


def to_dict(t: BrauerTree) -> dict:
    return {
        "vertices": [{"label": v.label, "real": v.real,
                      "degree": None if v.degree is None else str(v.degree)} for v in t.vertices],
        "edges": [[u, v, lab] for u, v, lab in t.edges],
        "exceptional": None if t.exceptional is None else list(t.exceptional),
        "edge_count": edge_count(t),
        "diameter": diameter(t),
        "is_star": is_star(t),
        "is_line": is_line(t),
    }
