import pytest

from startree import catalog
from startree.catalog import parse_group
from startree.permgrp import PermGroup, load_generators
from startree.permgrp.builders import PACKAGE_DATA
from startree.permgrp.constructions import janko_j1, mathieu_large, suzuki, write_all


def test_regenerated_files_match_shipped(tmp_path):
    write_all(tmp_path)
    for shipped in PACKAGE_DATA.glob("*.json"):
        assert (tmp_path / shipped.name).read_text() == shipped.read_text(), shipped.name


@pytest.mark.parametrize("key,text", [("m11", "M11"), ("m12", "M12"), ("m23", "M23"),
                                      ("m24", "M24"), ("j1", "J1"), ("sz8", "Sz(8)")])
def test_shipped_orders_match_catalog(key, text):
    G = load_generators(PACKAGE_DATA / f"{key}.json")
    assert G.order() == catalog.order(parse_group(text)).value


def test_mathieu_12_transitivity():
    G = PermGroup(mathieu_large(11))
    assert G.degree == 12 and G.order() == 95040
    assert sorted(G.orbit(0)) == list(range(12))


def test_janko_orbit_size():
    gens = janko_j1()
    assert len(gens[0]) == 1540
    assert PermGroup(gens).order() == 175560


def test_suzuki_ovoid():
    gens = suzuki(8)
    G = PermGroup(gens)
    assert G.degree == 65 and G.order() == 29120
    assert sorted(G.orbit(64)) == list(range(65))
