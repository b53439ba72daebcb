from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lamina.circle import Angle
from lamina.chords import (
    Chord,
    chord_image,
    is_critical,
    linked,
    sibling_collections,
    validate_collection,
)

A = Angle


def C(p, q, r, s):
    return Chord(A(p, q), A(r, s))


def test_chord_canonical_form():
    assert Chord(A(2, 3), A(1, 3)) == Chord(A(1, 3), A(2, 3))
    assert Chord.parse("1/3 2/3") == Chord(A(1, 3), A(2, 3))
    assert str(Chord(A(2, 3), A(0))) == "0 2/3"
    assert Chord(A(1, 5), A(1, 5)).degenerate


def test_linked_examples():
    assert linked(C(0, 1, 1, 2), C(1, 4, 3, 4))
    assert linked(C(0, 1, 1, 12), C(1, 24, 1, 8))
    assert not linked(C(0, 1, 1, 3), C(1, 3, 2, 3))  # shared endpoint
    assert not linked(C(0, 1, 1, 2), C(0, 1, 1, 2))
    assert not linked(Chord(A(1, 3), A(1, 3)), C(0, 1, 1, 2))


def test_linked_is_symmetric_on_samples():
    chords = [C(0, 1, 1, 3), C(1, 4, 2, 3), C(1, 8, 7, 8), C(1, 2, 3, 4)]
    for c1 in chords:
        for c2 in chords:
            assert linked(c1, c2) == linked(c2, c1)


def test_image_and_criticality():
    assert is_critical(3, C(0, 1, 1, 3))
    assert chord_image(3, C(342, 728, 579, 728)) == C(149, 364, 281, 728)
    assert not is_critical(2, C(1, 7, 2, 7))
    assert not is_critical(3, Chord(A(1, 3), A(1, 3)))


def test_sibling_collection_unique_for_period_six_leaf():
    N = C(38, 728, 307, 728)
    colls = sibling_collections(3, N)
    assert len(colls) == 1
    rest = {c for c in colls[0] if c != N}
    assert rest == {C(193, 2184, 842, 2184), C(1570, 2184, 1649, 2184)}


def test_sibling_collection_quadratic():
    colls = sibling_collections(2, C(1, 7, 2, 7))
    assert colls == [[C(1, 7, 2, 7), C(9, 14, 11, 14)]]


def test_sibling_collections_reject_critical():
    with pytest.raises(ValueError):
        sibling_collections(3, C(0, 1, 1, 3))


def test_sibling_collections_all_share_image():
    c = C(342, 728, 579, 728)
    img = chord_image(3, c)
    for coll in sibling_collections(3, c):
        assert len(coll) == 3
        assert all(chord_image(3, m) == img for m in coll)
        for i, u in enumerate(coll):
            for v in coll[i + 1 :]:
                assert not linked(u, v)
                assert not set(u.endpoints) & set(v.endpoints)


def test_validate_collection_examples():
    triangle = [C(0, 1, 1, 3), C(1, 3, 2, 3), C(2, 3, 1, 1)]
    assert validate_collection(3, triangle).has_loop
    vee = [C(0, 1, 1, 3), C(0, 1, 2, 3)]
    rep = validate_collection(3, vee)
    assert not rep.has_loop and rep.is_full_collection
    twice = [C(0, 1, 1, 3), C(0, 1, 1, 3)]
    assert validate_collection(3, twice).has_loop
    # full collections must be critical chords
    assert not validate_collection(3, [C(0, 1, 1, 3), C(0, 1, 1, 2)]).is_full_collection


def _cycle_oracle(chords):
    """Independent loop oracle: a multigraph on the endpoint angles has a
    cycle iff some connected component has at least as many edges as
    vertices, or some chord repeats."""
    if len(set(chords)) != len(chords):
        return True
    vertices = {e for c in chords for e in c.endpoints if not c.degenerate}
    adjacency = {v: set() for v in vertices}
    edge_count = {}
    for c in chords:
        if c.degenerate:
            continue
        adjacency[c.a].add(c.b)
        adjacency[c.b].add(c.a)
    unseen = set(vertices)
    while unseen:
        start = unseen.pop()
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    unseen.discard(w)
                    stack.append(w)
        n_edges = sum(1 for c in chords if not c.degenerate and c.a in comp)
        if n_edges >= len(comp):
            return True
    return False


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_loop_detection_agrees_with_graph_oracle(data):
    d = data.draw(st.integers(min_value=2, max_value=5))
    n = data.draw(st.integers(min_value=1, max_value=d + 2))
    qs = data.draw(st.lists(st.integers(1, 60), min_size=n, max_size=n))
    ps = data.draw(st.lists(st.integers(0, 59), min_size=n, max_size=n))
    ks = data.draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    chords = []
    for q, p, k in zip(qs, ps, ks):
        a = Angle(p, q)
        chords.append(Chord(a, Angle(a + Fraction(k % d or 1, d))))
    assert validate_collection(d, chords).has_loop == _cycle_oracle(chords)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=2, max_value=4),
    st.integers(min_value=0, max_value=119),
    st.integers(min_value=1, max_value=119),
)
def test_sibling_collections_property(d, p, q):
    a = Angle(p, 120)
    b = Angle(q, 121)
    c = Chord(a, b)
    img = chord_image(d, c)
    if img.degenerate:
        return
    colls = sibling_collections(d, c)
    assert colls, "a disjoint sibling collection always exists"
    for coll in colls:
        assert len(coll) == d and coll[0] == c
        assert all(chord_image(d, m) == img for m in coll)
        for i, u in enumerate(coll):
            for v in coll[i + 1 :]:
                assert not linked(u, v) and not set(u.endpoints) & set(v.endpoints)
