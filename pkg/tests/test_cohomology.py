"""Direct-limit cohomology groups and their supernatural invariants.

The closed-form invariant (cycle primes go infinite, leftover prefix
primes keep finite counts) is cross-checked against ``ref_supernatural``,
which expands the sequence to two horizons and compares prime counts,
and ``ref_member``, which scans partial products directly.
"""

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from longsol import (
    DirectLimitElement,
    InvalidPointError,
    SequenceDescriptor,
    StageDomainError,
    SupernaturalNumber,
    dl_add,
    dl_element,
    dl_equal,
    dl_neg,
    dl_of_rational,
    dl_value,
    h1_action,
    h1_of_solenoid,
    inequivalent_family,
    mccord_equivalent,
    member,
    supernatural_of,
)
from reference_models import ref_member, ref_supernatural


def d(prefix, cycle):
    return SequenceDescriptor(tuple(prefix), tuple(cycle))


DESCRIPTORS = [
    d(p, c)
    for p in [(), (2,), (12,), (2, 3), (8, 9), (4,)]
    for c in [(2,), (3,), (5,), (2, 3), (6,), (10,), (2, 2)]
]


def test_descriptor_basics():
    s = d((2, 3), (5, 7))
    assert [s.entry(i) for i in range(1, 7)] == [2, 3, 5, 7, 5, 7]
    assert s.partial_product(0) == 1
    assert s.partial_product(4) == 210
    assert str(s) == "2,3:5,7"
    assert str(d((), (2,))) == ":2"
    with pytest.raises(InvalidPointError):
        d((2,), ())
    with pytest.raises(InvalidPointError):
        d((1,), (2,))
    with pytest.raises(InvalidPointError):
        s.entry(0)


def test_supernatural_number_basics():
    v = SupernaturalNumber(((3, 1), (2, 2)), frozenset({5}))
    assert v.finite == ((2, 2), (3, 1))
    assert v.multiplicity(2) == 2
    assert v.multiplicity(5) is None
    assert v.multiplicity(7) == 0
    with pytest.raises(InvalidPointError):
        SupernaturalNumber(((2, 0),))
    with pytest.raises(InvalidPointError):
        SupernaturalNumber(((2, 1),), frozenset({2}))


def test_supernatural_frozen():
    assert supernatural_of(d((12,), (5,))) == SupernaturalNumber(
        ((2, 2), (3, 1)), frozenset({5})
    )
    assert supernatural_of(d((), (2,))) == SupernaturalNumber((), frozenset({2}))
    # prefix primes swallowed by the cycle lose their finite count
    assert supernatural_of(d((6,), (6,))) == SupernaturalNumber(
        (), frozenset({2, 3})
    )
    assert supernatural_of(d((8, 9), (5, 7))) == SupernaturalNumber(
        ((2, 3), (3, 2)), frozenset({5, 7})
    )


def test_supernatural_matches_expansion_model():
    for s in DESCRIPTORS:
        finite, infinite = ref_supernatural(s)
        got = supernatural_of(s)
        assert dict(got.finite) == finite, str(s)
        assert got.infinite == frozenset(infinite), str(s)


def test_mccord_frozen():
    assert mccord_equivalent(d((), (2,)), d((3,), (2,)))
    assert not mccord_equivalent(d((), (2,)), d((), (3,)))
    assert mccord_equivalent(d((), (2, 3)), d((), (6,)))
    assert mccord_equivalent(d((), (4,)), d((), (2,)))
    assert not mccord_equivalent(d((), (2,)), d((), (2, 5)))
    assert mccord_equivalent(d((2,), (3,)), d((), (3,)))


def test_mccord_hand_built_pairs():
    pairs_equivalent = [
        (d((), (2,)), d((2,), (2,))),
        (d((5,), (6,)), d((7,), (2, 3))),
        (d((), (10,)), d((), (2, 5))),
        (d((2, 2, 2), (3,)), d((), (9,))),
        (d((), (12,)), d((), (6, 2))),
    ]
    for a, b in pairs_equivalent:
        assert mccord_equivalent(a, b), "%s ~ %s" % (a, b)
        assert mccord_equivalent(b, a)
    pairs_distinct = [
        (d((), (2,)), d((), (6,))),
        (d((3,), (2,)), d((2,), (3,))),
        (d((), (5,)), d((5,), (7,))),
        (d((), (30,)), d((), (6,))),
    ]
    for a, b in pairs_distinct:
        assert not mccord_equivalent(a, b), "%s !~ %s" % (a, b)
        assert not mccord_equivalent(b, a)


small_descriptors = st.builds(
    SequenceDescriptor,
    st.lists(st.sampled_from([2, 3, 4, 12]), max_size=2).map(tuple),
    st.lists(st.sampled_from([2, 3, 5, 6]), min_size=1, max_size=2).map(tuple),
)


@given(small_descriptors, small_descriptors, small_descriptors)
def test_mccord_is_an_equivalence(a, b, c):
    assert mccord_equivalent(a, a)
    assert mccord_equivalent(a, b) == mccord_equivalent(b, a)
    if mccord_equivalent(a, b) and mccord_equivalent(b, c):
        assert mccord_equivalent(a, c)


def test_member_frozen():
    s = d((), (2,))
    assert member(s, F(5, 8))
    assert not member(s, F(1, 3))
    twelve_five = d((12,), (5,))
    assert member(twelve_five, F(1, 6))
    assert not member(twelve_five, F(1, 9))
    assert member(twelve_five, 7)


def test_member_matches_partial_product_scan():
    rationals = [F(a, b) for a in (0, 1, 5, -3) for b in (1, 2, 3, 8, 9, 12, 25)]
    for s in DESCRIPTORS:
        for r in rationals:
            assert member(s, r) == ref_member(s, r), "%s, %s" % (s, r)


def test_dl_canonicalization():
    s = d((), (2, 3))
    assert dl_element(s, 2, 6) == DirectLimitElement(0, 1)
    assert dl_element(s, 1, 2) == DirectLimitElement(0, 1)
    assert dl_element(s, 2, 8) == DirectLimitElement(2, 8)
    assert dl_element(s, 3, 0) == DirectLimitElement(0, 0)
    with pytest.raises(InvalidPointError):
        DirectLimitElement(-1, 1)


def test_dl_add_frozen():
    doubling = d((), (2,))
    u = dl_element(doubling, 1, 1)
    total = dl_add(doubling, u, u)
    assert total == DirectLimitElement(0, 1)
    assert dl_value(doubling, total) == 1
    s = d((), (2, 3))
    mixed = dl_add(s, dl_element(s, 0, 1), dl_element(s, 2, 1))
    assert mixed == DirectLimitElement(2, 7)
    assert dl_value(s, mixed) == F(7, 6)


def test_dl_equal():
    s = d((), (2,))
    assert dl_equal(s, DirectLimitElement(1, 2), DirectLimitElement(0, 1))
    assert not dl_equal(s, DirectLimitElement(1, 1), DirectLimitElement(0, 1))


elements = st.tuples(st.integers(0, 4), st.integers(-24, 24))


@given(small_descriptors, elements, elements, elements)
def test_dl_group_laws(s, eu, ev, ew):
    u = dl_element(s, *eu)
    v = dl_element(s, *ev)
    w = dl_element(s, *ew)
    zero = DirectLimitElement(0, 0)
    assert dl_add(s, u, v) == dl_add(s, v, u)
    assert dl_add(s, dl_add(s, u, v), w) == dl_add(s, u, dl_add(s, v, w))
    assert dl_add(s, u, zero) == u
    assert dl_add(s, u, dl_neg(u)) == zero
    assert dl_value(s, dl_add(s, u, v)) == dl_value(s, u) + dl_value(s, v)


@given(small_descriptors, elements)
def test_dl_membership_and_round_trip(s, eu):
    u = dl_element(s, *eu)
    r = dl_value(s, u)
    assert member(s, r)
    assert dl_of_rational(s, r) == u


def test_dl_of_rational_rejects_non_members():
    with pytest.raises(StageDomainError):
        dl_of_rational(d((), (2,)), F(1, 3))


def test_h1_action():
    assert h1_action(3, 2) == 3
    for n in range(1, 7):
        assert h1_action(1, n) == 1
    for m in range(1, 7):
        for n in range(1, 7):
            assert h1_action(m, n) == m
    # covering multiplicities compose
    for m1, m2, n in itertools.product((1, 2, 3), (1, 2, 3), (1, 2)):
        assert h1_action(m1 * m2, n) == h1_action(m1, m2 * n) * h1_action(m2, n)
    with pytest.raises(StageDomainError):
        h1_action(0, 2)


def test_h1_of_solenoid():
    s = d((12,), (5,))
    assert h1_of_solenoid(s) == supernatural_of(s)


def test_inequivalent_family():
    family = inequivalent_family(12)
    assert len(family) == 12
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            assert not mccord_equivalent(a, b)
            assert supernatural_of(a).infinite != supernatural_of(b).infinite
    assert inequivalent_family(1) == [d((), (2,))]
    assert inequivalent_family(0) == []
