import pytest
from hypothesis import given, strategies as st

from startree.permgrp.field import IRREDUCIBLE, FieldError, field

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


@st.composite
def triples(draw):
    q = draw(st.sampled_from(QS))
    a, b, c = (draw(st.integers(0, q - 1)) for _ in range(3))
    return field(q), a, b, c


@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, 0) == a and F.mul(a, 1) == a
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", QS)
def test_primitive_element_generates(q):
    F = field(q)
    g = F.primitive
    assert len({F.pow(g, k) for k in range(q - 1)}) == q - 1


@pytest.mark.parametrize("q", QS)
def test_frobenius_is_additive(q):
    F = field(q)
    for a in F.elements:
        for b in range(0, q, max(1, q // 7)):
            assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert all(F.frob(a, F.k) == a for a in F.elements)


def test_table_polynomials_are_primitive():
    for q in IRREDUCIBLE:
        F = field(q)
        assert F.poly == IRREDUCIBLE[q]


def test_supplied_nonprimitive_polynomial():
    # x^2 + 1 is irreducible but not primitive over GF(3)
    F = field(9, (1, 0))
    assert len(set(F.exp)) == 8
    for a in F.nonzero:
        assert F.mul(a, F.inv(a)) == 1


def test_reducible_polynomial_rejected():
    with pytest.raises(FieldError):
        field(9, (2, 0))   # x^2 + 2 = (x - 1)(x + 1)


def test_search_for_uncatalogued_field():
    F = field(81)
    assert len(set(F.exp)) == 80


@pytest.mark.parametrize("q", [6, 1, 10, 2**13])
def test_bad_field_sizes(q):
    with pytest.raises(FieldError):
        field(q)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field(5).inv(0)


def test_field_elem_operators():
    F = field(8)
    a, b = F.elem(3), F.elem(5)
    assert (a * b / b) == a
    assert (a + b - b) == a
    assert (a ** 7).v == 1
    assert (-a + a).is_zero()
    assert a.inverse() * a == F.elem(1)
