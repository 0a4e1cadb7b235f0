import math

import pytest
from hypothesis import given, strategies as st

from startree import catalog
from startree.arith import factorize, mult_order, primes_up_to
from startree.catalog import (CatalogError, Family, GroupId, Simplicity, format_group, normalize,
                              order, parse_group, rewrite_rules, simplicity_note)

GRAMMAR = ["PSL(3,4)", "A7", "S6", "Sp(6,3)", "POmega(+,8,2)", "Sz(8)", "2G2(27)", "3D4(2)",
           "2F4(2)'", "M11", "J1", "C13", "GL(2,3)", "SU(3,3)", "PSU(3,5)", "G2(2)'", "E8(2)",
           "Omega(7,3)", "2F4(8)", "2E6(2)", "F4(2)", "E7(3)"]


def test_parse_alternating():
    assert parse_group("A5") == GroupId(Family.Alternating, n=5)


def test_parse_suzuki_carries_r():
    g = parse_group("Sz(8)")
    assert (g.family, g.q, g.exponent, g.suzuki_r) == (Family.Suzuki, 8, 1, 4)
    assert g.suzuki_r ** 2 == 2 * g.q


def test_parse_ree_pair():
    g = parse_group("2G2(27)")
    Q, R = g.ree_pair
    assert (Q, R) == (27, 9) and R * R == 3 * Q


@pytest.mark.parametrize("bad", ["GL(2,6)", "Sz(4)", "Sz(2)", "2G2(3)", "C1", "A2", "PSL(2,5",
                                 "POmega(8,2)", "M99", "", "PSL(2,)"])
def test_parse_errors(bad):
    with pytest.raises(CatalogError):
        parse_group(bad)


def test_parse_error_reports_position():
    with pytest.raises(CatalogError) as err:
        parse_group("PSL(2,5")
    assert err.value.position is not None


@pytest.mark.parametrize("text", GRAMMAR)
def test_grammar_round_trip(text):
    g = parse_group(text)
    assert parse_group(format_group(g)) == g


def test_order_gl23():
    assert order(parse_group("GL(2,3)")).as_dict() == {2: 4, 3: 1}


def test_order_sz8():
    assert order(parse_group("Sz(8)")).value == 8**2 * (8**2 + 1) * 7 == 29120


def test_order_tits():
    assert order(parse_group("2F4(2)'")).as_dict() == {2: 11, 3: 3, 5: 2, 13: 1}


def test_order_a5():
    assert order(parse_group("A5")).value == 60


@pytest.mark.parametrize("text,value", [
    ("PSL(2,11)", 660), ("PSL(3,4)", 20160), ("PSU(3,3)", 6048), ("PSU(3,5)", 126000),
    ("PSp(4,3)", 25920), ("Sp(6,2)", 1451520), ("Omega(7,3)", 4585351680),
    ("POmega(+,8,2)", 174182400), ("POmega(-,8,2)", 197406720), ("G2(3)", 4245696),
    ("3D4(2)", 211341312), ("2G2(27)", 10073444472), ("Sz(32)", 32537600),
    ("F4(2)", 3311126603366400), ("M23", 10200960), ("J1", 175560), ("GL(3,2)", 168),
    ("SL(2,5)", 120), ("GL(2,5)", 480), ("SU(3,3)", 6048), ("2F4(8)", 264905352699586176614400),
])
def test_order_known_values(text, value):
    # standard orders of small groups
    assert order(parse_group(text)).value == value


def test_sporadic_table_consistent():
    assert len(catalog.SPORADIC_ORDERS) == 26
    for name, fac in catalog.SPORADIC_ORDERS.items():
        value = math.prod(p**e for p, e in fac.items())
        assert order(GroupId(Family.Sporadic, name=name)).value == value
        assert factorize(value).as_dict() == dict(fac)
    assert order(parse_group("M23")).value == 10200960


def test_normalize_omega3():
    g, note = normalize(GroupId(Family.Omega_odd, n=1, q=7))
    assert g == parse_group("PSL(2,7)") and note


def test_normalize_psp42():
    g, note = normalize(parse_group("PSp(4,2)"))
    assert g == parse_group("S6") and note


def test_normalize_identity():
    assert normalize(parse_group("A7")) == (parse_group("A7"), None)


def test_rewrites_preserve_order():
    rules = rewrite_rules()
    assert len(rules) > 20
    for r in rules:
        assert order(r.source).value == order(r.target).value, r


@pytest.mark.parametrize("text,status", [
    ("PSU(3,2)", Simplicity.NotSimple), ("PSU(3,4)", Simplicity.Simple), ("PSp(6,3)", Simplicity.Simple),
    ("GL(3,5)", Simplicity.NotSimple), ("A5", Simplicity.Simple), ("A4", Simplicity.NotSimple),
    ("G2(2)", Simplicity.NotSimple), ("2F4(2)'", Simplicity.Simple), ("PSL(2,3)", Simplicity.NotSimple),
])
def test_simplicity(text, status):
    assert simplicity_note(parse_group(text)).status is status


def test_unitary_convention():
    # the unitary parameter is q with field GF(q^2); PSU(3,2) is the solvable exception
    assert order(parse_group("PSU(3,2)")).value == 72
    assert "PSU(3,2)" in simplicity_note(parse_group("PSU(3,5)")).exceptions


def _q_families(q):
    out = [GroupId(Family.PSL, n, q) for n in (2, 3, 4)]
    out += [GroupId(Family.GL, n, q) for n in (2, 3)]
    out += [GroupId(Family.PSU, n, q) for n in (3, 4)]
    out += [GroupId(Family.PSp, m, q) for m in (2, 3)]
    out += [GroupId(Family.POmega_even, 4, q, s) for s in (1, -1)]
    out += [GroupId(f, q=q) for f in (Family.G2, Family.threeD4, Family.F4, Family.E6)]
    if q % 2:
        out.append(GroupId(Family.Omega_odd, 3, q))
    return out


def test_cyclotomic_divisibility_grid():
    # p | |G| for p not dividing q iff Phi_d occurs in the order polynomial, d = ord_p(q)
    for q in (q for q in range(2, 17) if catalog.prime_power_split(q)):
        for g in _q_families(q):
            f = catalog.order_formula(g)
            mults = f.cyclotomic_multiplicities()
            val = order(g).value
            for p in primes_up_to(50)[1:]:
                if q % p == 0:
                    continue
                if f.divisor % p == 0:
                    continue
                assert (val % p == 0) == (mult_order(q, p) in mults), (g, p)


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13]), st.integers(min_value=2, max_value=5))
def test_psl_order_is_gl_over_center(q, n):
    gl = order(GroupId(Family.GL, n, q)).value
    psl = order(GroupId(Family.PSL, n, q)).value
    assert gl == psl * (q - 1) * math.gcd(n, q - 1)
