import json

import pytest

from startree import catalog
from startree.catalog import Family, GroupId, parse_group
from startree.permgrp import (BuilderError, alternating, cyclic, load_generators,
                              matrix_projective_action, pgl2_action, psl2_action, representation,
                              symmetric)
from startree.permgrp.builders import DATA_DIR_ENV, PACKAGE_DATA, dump_generators


def cat_order(text):
    return catalog.order(catalog.normalize(parse_group(text))[0]).value


def test_psl2_11():
    G = psl2_action(11)
    assert G.degree == 12 and G.order() == 660 == 11 * 120 // 2


def test_psl2_5_is_a5_sized():
    G = psl2_action(5)
    assert (G.degree, G.order()) == (6, 60)


def test_su3_3():
    G = matrix_projective_action("SU3", 3)
    assert G.order() == 6048 == cat_order("PSU(3,3)")


def test_load_m11():
    G = load_generators("m11.json")
    assert (G.degree, G.order()) == (11, 7920)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27, 32])
def test_line_actions_match_catalog(q):
    assert psl2_action(q).order() == cat_order(f"PSL(2,{q})")
    assert pgl2_action(q).order() == cat_order(f"GL(2,{q})") // (q - 1)


@pytest.mark.parametrize("family,q,text", [
    ("SL2", 3, "SL(2,3)"), ("SL2", 5, "SL(2,5)"), ("SL2", 8, "SL(2,8)"), ("SL2", 9, "SL(2,9)"),
    ("GL2", 3, "GL(2,3)"), ("GL2", 4, "GL(2,4)"), ("GL2", 5, "GL(2,5)"), ("GL2", 7, "GL(2,7)"),
    ("SL3", 2, "SL(3,2)"), ("SL3", 3, "SL(3,3)"), ("SL3", 4, "SL(3,4)"),
    ("GL3", 2, "GL(3,2)"), ("GL3", 3, "GL(3,3)"),
    ("SU3", 3, "PSU(3,3)"), ("SU3", 4, "PSU(3,4)"),
    ("Sp4", 2, "PSp(4,2)"), ("Sp4", 3, "PSp(4,3)"), ("Sp4", 4, "PSp(4,4)"),
])
def test_matrix_actions_match_catalog(family, q, text):
    assert matrix_projective_action(family, q).order() == cat_order(text)


def test_matrix_action_unknown_family():
    with pytest.raises(BuilderError):
        matrix_projective_action("E8", 2)


def test_non_prime_power_rejected():
    with pytest.raises(Exception):
        psl2_action(6)


@pytest.mark.parametrize("n", [2, 7, 13])
def test_cyclic(n):
    G = cyclic(n)
    assert G.order() == n == G.degree


def test_dump_and_load_round_trip(tmp_path):
    G = symmetric(5)
    path = tmp_path / "s5.json"
    path.write_text(dump_generators(G.generators, 5, "S5", 120))
    H = load_generators(path)
    assert H.order() == 120 and H.gid == parse_group("S5")
    rec = json.loads(path.read_text())
    assert rec["expected_order"] == "120" and min(min(g) for g in rec["generators"]) == 1


@pytest.mark.parametrize("content", [
    "not json",
    '{"degree": 3}',
    '{"degree": 3, "generators": [[1, 2]]}',
    '{"degree": 3, "generators": [[1, 1, 2]]}',
    '{"degree": 3, "generators": [[2, 3, 1]], "expected_order": "6"}',
])
def test_malformed_files(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(BuilderError):
        load_generators(path)


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / "m11.json").write_text(dump_generators(alternating(5).generators, 5, "fake", 60))
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    assert load_generators("m11.json").order() == 60
    monkeypatch.delenv(DATA_DIR_ENV)
    assert load_generators("m11.json").order() == 7920


@pytest.mark.parametrize("text,order", [
    ("A6", 360), ("S5", 120), ("C7", 7), ("PSL(2,13)", 1092), ("GL(2,5)", 480), ("SL(2,5)", 120),
    ("GL(3,2)", 168), ("PSL(3,3)", 5616), ("SU(3,3)", 6048), ("PSp(4,3)", 25920),
    ("M11", 7920), ("M12", 95040), ("J1", 175560), ("Sz(8)", 29120), ("Omega(3,7)", 168),
])
def test_representation_dispatch(text, order):
    assert representation(parse_group(text)).order() == order == cat_order(text)


def test_representation_missing():
    with pytest.raises(BuilderError):
        representation(parse_group("E8(2)"))
    with pytest.raises(BuilderError):
        representation(parse_group("PSL(3,4)"))   # center of order 3, no builder


def test_shipped_files_present():
    names = sorted(p.name for p in PACKAGE_DATA.glob("*.json"))
    assert names == ["j1.json", "m11.json", "m12.json", "m23.json", "m24.json", "sz8.json"]
