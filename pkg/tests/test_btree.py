import itertools

import pytest
from hypothesis import given, strategies as st

from startree import btree
from startree.btree import (BrauerTree, TreeError, Vertex, diameter, edge_count, from_parent_list,
                            has_center_vertex, is_line, is_star, path, real_stem, similar, star, wind)


def rooted_trees(max_edges):
    """One representative per rooted-isomorphism class, root = vertex 0."""
    seen = {}
    for k in range(max_edges + 1):
        for parents in itertools.product(*[range(i + 1) for i in range(k)]):
            t = from_parent_list(list(parents))
            key = btree.rooted_encoding(t, 0)
            seen.setdefault(key, t)
    return list(seen.values())


TREES6 = rooted_trees(6)
TREES4 = rooted_trees(4)


def test_enumeration_counts():
    # rooted unlabelled trees with 1..7 vertices: 1, 1, 2, 4, 9, 20, 48
    assert [sum(edge_count(t) == k for t in TREES6) for k in range(7)] == [1, 1, 2, 4, 9, 20, 48]


def test_single_vertex():
    t = BrauerTree((Vertex("a"),), ())
    assert (diameter(t), is_star(t), is_line(t)) == (0, True, True)


def test_path_four_edges():
    t = path(4)
    assert (diameter(t), is_star(t), is_line(t)) == (4, False, True)


def test_star_four_edges():
    t = star(4)
    assert (diameter(t), is_star(t), edge_count(t)) == (2, True, 4)


@pytest.mark.parametrize("vertices,edges", [
    ((Vertex("a"), Vertex("b")), ()),
    ((Vertex("a"), Vertex("b"), Vertex("c")), ((0, 1, "x"), (0, 1, "y"))),
    ((Vertex("a"), Vertex("b"), Vertex("c")), ((0, 1, "x"), (1, 2, "x"))),
    ((Vertex("a"), Vertex("b")), ((0, 0, "x"),)),
])
def test_invalid_trees(vertices, edges):
    with pytest.raises(TreeError):
        BrauerTree(vertices, edges)


def test_bad_exceptional():
    with pytest.raises(TreeError):
        BrauerTree((Vertex("a"),), (), (0, 0))
    with pytest.raises(TreeError):
        BrauerTree((Vertex("a"),), (), (1, 2))


def test_wind_single_edge_gives_star():
    w = wind(path(1, exceptional=0), 4)
    assert edge_count(w) == 4 and is_star(w) and w.exceptional[0] == 0
    assert btree.rooted_encoding(w, 0) == btree.rooted_encoding(star(4), 0)


def test_wind_one_is_identity():
    t = path(3, exceptional=1)
    assert wind(t, 1) == t


def test_wind_two_path():
    w = wind(path(2, exceptional=0), 2)
    assert edge_count(w) == 4 and diameter(w) == 4
    assert btree.isomorphic_rooted(w, path(4, exceptional=2))


def test_wind_requires_exceptional():
    with pytest.raises(TreeError):
        wind(path(2), 2)
    with pytest.raises(TreeError):
        similar(path(2), path(2, exceptional=0))
    with pytest.raises(TreeError):
        wind(path(2, exceptional=0), 0)


def test_wind_labels_distinct_and_deterministic():
    w1 = wind(path(2, exceptional=0), 3)
    w2 = wind(path(2, exceptional=0), 3)
    assert w1 == w2
    assert len({lab for _, _, lab in w1.edges}) == 6


def test_similar_examples():
    assert similar(star(2), star(6))
    assert similar(path(4, exceptional=2), path(2, exceptional=0))
    assert not similar(path(3, exceptional=0), star(4))


def test_wind_similarity_exhaustive():
    for s in TREES6:
        for m in range(1, 5):
            wm = wind(s, m)
            assert edge_count(wm) == m * edge_count(s)
            for n in range(1, 5):
                assert similar(wm, wind(s, n))


def test_similarity_matches_definition():
    # brute force: t1 ~ t2 iff both are windings of one rooted tree sigma
    windings = {}
    for s in TREES4:
        for k in range(1, 5):
            w = wind(s, k)
            if edge_count(w) <= 4:
                windings.setdefault(btree.rooted_encoding(w, 0), set()).add(btree.rooted_encoding(s, 0))
    for t1, t2 in itertools.product(TREES4, repeat=2):
        e1, e2 = btree.rooted_encoding(t1, 0), btree.rooted_encoding(t2, 0)
        expected = bool(windings[e1] & windings[e2])
        assert similar(t1, t2) == expected, (e1, e2)


def test_similar_reflexive_symmetric():
    for t1 in TREES4:
        assert similar(t1, t1)
        for t2 in TREES4:
            assert similar(t1, t2) == similar(t2, t1)


def test_star_iff_diameter_two_independent():
    for t in TREES6:
        assert is_star(t) == has_center_vertex(t) == (diameter(t) <= 2)


def test_line_is_max_degree_two():
    for t in TREES6:
        degs = [len(a) for a in t.adjacency()]
        assert is_line(t) == (max(degs, default=0) <= 2)


def test_real_stem_all_real_path():
    t = path(3)
    rs = real_stem(t)
    assert rs.is_line and rs.edge_count == 3


def test_real_stem_star_two_leaves():
    verts = (Vertex("c"), Vertex("a"), Vertex("b", real=False), Vertex("d"), Vertex("e", real=False))
    t = BrauerTree(verts, tuple((0, i, f"e{i}") for i in range(1, 5)), (0, 1))
    rs = real_stem(t)
    assert rs.is_line and rs.edge_count == 2 and rs.vertices == (0, 1, 3)


def test_real_stem_violation_reported():
    rs = real_stem(star(3))
    assert not rs.is_line and rs.issues


def test_so7_fixture_figure():
    t = btree.so7_fixture(3)
    assert edge_count(t) == 4 and is_line(t) and not is_star(t)
    assert t.exceptional[0] == 3 == len(t.vertices) - 2
    assert real_stem(t).edge_count == 4 and real_stem(t).is_line


def test_so7_degrees_at_3():
    degs = [v.degree for v in btree.so7_fixture(3).vertices]
    assert degs == [1, 9 * 91, 81 * 28 * 4 // 2, 728 * 8, 81 * 26 * 2 // 2]


@given(st.integers(min_value=2, max_value=11).filter(lambda q: q not in (6, 10)))
def test_so7_any_q(q):
    t = btree.so7_fixture(q)
    assert t.exceptional[0] == btree.SO7_EXCEPTIONAL_INDEX == 3
    assert is_line(t) and edge_count(t) == 4


def test_so7_symbolic():
    t = btree.so7_fixture()
    assert t.vertices[1].degree == "q^2(q^4+q^2+1)"


@pytest.mark.parametrize("t", [btree.so7_fixture(3), btree.so7_fixture(), star(3), path(2, 1, 5)])
def test_text_round_trip(t):
    assert btree.loads(btree.dumps(t)) == t


def test_loads_rejects_garbage():
    with pytest.raises(TreeError):
        btree.loads("vertex a real\nwhatever 1 2\n")
