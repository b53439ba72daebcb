from fractions import Fraction

import pytest

from lamina.circle import Angle, sigma
from lamina.chords import Chord, chord_image, linked
from lamina.lamination import FiniteLamination, orbit_classify, pullback_build
from lamina.qc_portrait import QcPortrait, make_quadrilateral
from lamina.accordion import (
    PERIODIC_GAP,
    SINGLE,
    THREE_LEAF,
    TWO_LEAF_DISJOINT,
    TWO_LEAF_FLIP,
    WANDERING,
    accordion,
    choose_unlinked_spikes,
    compgap_analyze,
    detect_collapse,
    order_preserving_accordions,
)

A = Angle


def C(*args):
    if len(args) == 4:
        return Chord(A(args[0], args[1]), A(args[2], args[3]))
    return Chord(A(args[0]), A(args[1]))


def leaf_quad(a, b, d=3):
    return make_quadrilateral([a, a, b, b], d)


def test_accordion_against_lamination():
    lam = FiniteLamination(2, [C(1, 7, 2, 7), C(2, 7, 4, 7), C(1, 7, 4, 7)])
    rep = accordion(C(0, 1, 1, 2), lam)
    # the diameter crosses the long triangle edge only
    assert C(1, 7, 4, 7) in rep.members
    lam2 = FiniteLamination(2, [C(1, 16, 2, 16)])
    rep2 = accordion(C(0, 1, 1, 2), lam2)
    assert rep2.members == (C(0, 1, 1, 2),) and rep2.classification == SINGLE


def test_accordion_of_triangle_edge_orbit():
    rep = accordion(C(1, 7, 2, 7), C(1, 7, 2, 7), d=2)
    assert rep.classification == SINGLE and rep.exact


def test_accordion_period_six_sibling_orbit():
    M = C(1026, 2184, 1737, 2184)
    sibling = C(1009, 2184, 1754, 2184)
    rep = accordion(M, sibling, d=3, horizon=12)
    # the sibling orbit merges into the unlinked orbit of M after one step
    assert rep.members == (M,)
    assert rep.classification == SINGLE and rep.exact


def test_accordion_flip_classification():
    rep = accordion(C(1, 8, 3, 8), C(1, 4, 3, 4), d=3)
    assert rep.classification == TWO_LEAF_FLIP
    assert rep.order_preserving


def test_accordion_wandering_cutoff():
    # the partner's chord orbit closes after three steps; a one-step horizon
    # leaves the verdict provisional
    rep = accordion(C(1, 8, 3, 8), C(1, 26, 7, 26), d=3, horizon=1)
    assert not rep.exact
    assert rep.classification == WANDERING


def test_order_preserving_examples():
    assert order_preserving_accordions(3, C(1, 8, 3, 8), C(1, 4, 3, 4))
    # a critical axis never has order preserving accordions
    assert not order_preserving_accordions(3, C(0, 1, 1, 3), C(1, 4, 2, 4))
    with pytest.raises(ValueError):
        order_preserving_accordions(3, C(0, 1, 1, 8), C(1, 2, 3, 4))


def test_choose_unlinked_spikes():
    qcp = QcPortrait(3, (
        make_quadrilateral([Fraction(1, 3), Fraction(5, 12), Fraction(2, 3), Fraction(3, 4)], 3),
        leaf_quad(A(5, 6), A(1, 6)),
    ))
    # a leaf crossing the spike 5/12 3/4 forces the other diagonal
    axis = C(3, 8, 1, 2)
    assert linked(axis, C(5, 12, 3, 4)) and not linked(axis, C(1, 3, 2, 3))
    choice = choose_unlinked_spikes(qcp, axis)
    assert choice.spikes[0] == C(1, 3, 2, 3)
    assert all(not linked(s, axis) for s in choice.spikes)
    # avoidance of a named endpoint that is not forced
    choice2 = choose_unlinked_spikes(qcp, C(1, 48, 5, 48), avoid=A(3, 4))
    assert choice2.avoided
    assert all(not s.has_endpoint(A(3, 4)) for s in choice2.spikes)


def test_choose_unlinked_spikes_flags_forced_endpoint():
    qcp = QcPortrait(3, (leaf_quad(A(0), A(1, 3)), leaf_quad(A(1, 2), A(5, 6))))
    choice = choose_unlinked_spikes(qcp, C(1, 24, 2, 24), avoid=A(0))
    assert not choice.avoided  # the only spike of the first leaf uses 0


def test_detect_collapse_chain():
    # leaves whose shared-image endpoints are joined by spike chains in both
    # portraits
    qcp1 = QcPortrait(3, (leaf_quad(A(0), A(1, 3)), leaf_quad(A(1, 3), A(2, 3))))
    qcp2 = QcPortrait(3, (leaf_quad(A(0), A(1, 3)), leaf_quad(A(1, 3), A(2, 3))))
    l1 = C(0, 1, 7, 9)
    l2 = C(2, 3, 8, 9)
    assert sigma(3, A(0)) == sigma(3, A(2, 3))
    rep = detect_collapse(l1, l2, qcp1, qcp2)
    assert rep.kind == "chains"
    assert rep.junction == (A(0), A(2, 3))
    assert rep.chain1 == (C(0, 1, 1, 3), C(1, 3, 2, 3))


def test_detect_collapse_negative_and_special():
    qcp = QcPortrait(3, (leaf_quad(A(0), A(1, 3)), leaf_quad(A(1, 2), A(5, 6))))
    # endpoints with a common image but no chain through the spikes
    l1 = C(1, 12, 2, 3)
    l2 = C(5, 12, 3, 4)
    rep = detect_collapse(l1, l2, qcp, qcp)
    assert rep.kind == "none"
    special = [(A(0), A(1, 3), A(2, 3))]
    rep2 = detect_collapse(C(0, 1, 1, 3), C(1, 3, 2, 3), qcp, qcp, special_clusters=special)
    assert rep2.kind == "special_cluster"
    with pytest.raises(ValueError):
        detect_collapse(C(0, 1, 1, 8), C(1, 2, 5, 8), qcp, qcp)


def test_compgap_flip_case():
    rep = compgap_analyze(3, C(1, 8, 3, 8), C(1, 4, 3, 4))
    assert rep.classification == PERIODIC_GAP
    assert rep.vertices == (A(1, 8), A(1, 4), A(3, 8), A(3, 4))
    assert len(rep.orbit_groups) == 2
    assert set(rep.periods) == {2}
    assert rep.remap_is_identity is False


def test_compgap_requires_order_preservation():
    with pytest.raises(ValueError):
        compgap_analyze(3, C(0, 1, 1, 3), C(1, 4, 2, 4))


def test_smart_criticality_images_stay_close():
    # linked leaves of strongly linked portraits without chain collapse:
    # their images intersect at every step (equal, touching, or crossing)
    d = 3
    l1 = C(1, 8, 3, 8)
    l2 = C(1, 4, 3, 4)
    assert linked(l1, l2)
    a, b = l1, l2
    for _ in range(12):
        a, b = chord_image(d, a), chord_image(d, b)
        touching = bool(set(a.endpoints) & set(b.endpoints))
        assert a == b or touching or linked(a, b)


def test_accordion_three_leaf_search():
    # exhaustive small search over period-two chords finds flip pairs only;
    # three-leaf examples need period >= 3 data
    found = set()
    pts = [A(j, 26) for j in range(26)]
    chords = []
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            info_x, info_y = orbit_classify(3, x), orbit_classify(3, y)
            if info_x.period == info_y.period == 3 and info_x.preperiod == info_y.preperiod == 0:
                c = Chord(x, y)
                orbit = orbit_classify(3, c).orbit
                if all(
                    not linked(orbit[i], orbit[j])
                    for i in range(len(orbit))
                    for j in range(i + 1, len(orbit))
                ):
                    chords.append(c)
    for i, c1 in enumerate(chords):
        for c2 in chords:
            if c1 == c2 or not linked(c1, c2):
                continue
            try:
                if order_preserving_accordions(3, c1, c2):
                    found.add(accordion(c1, c2, d=3).classification)
            except ValueError:
                continue
    assert found <= {TWO_LEAF_FLIP, TWO_LEAF_DISJOINT, THREE_LEAF}
    assert THREE_LEAF in found


def test_accordion_reports_touching_leaves():
    lam = FiniteLamination(3, [C(0, 1, 1, 3), C(1, 3, 2, 3)])
    rep = accordion(C(0, 1, 2, 3), lam)
    assert rep.members == (C(0, 1, 2, 3),)
    assert set(rep.touching) == {C(0, 1, 1, 3), C(1, 3, 2, 3)}


def test_accordion_disjoint_orbit_label():
    # single crossing, no flip, equal periods, four distinct endpoint
    # orbits: the crossing pattern is labelled even though this pair is not
    # order preserving (no such order-preserving pair exists at small periods)
    axis, partner = C(1, 8, 3, 4), C(1, 4, 7, 8)
    rep = accordion(axis, partner, d=3)
    assert rep.classification == TWO_LEAF_DISJOINT
    assert rep.order_preserving is False


def test_period_six_strip_pair_is_unlinked():
    # regression fixture: the wide-strip sibling never crosses the original
    # leaf, so their accordion is trivial and order preservation is undefined
    M = Chord(A(1026, 2184), A(1737, 2184))
    Nprime = Chord(A(193, 2184), A(842, 2184))
    assert not linked(M, Nprime)
    with pytest.raises(ValueError):
        order_preserving_accordions(3, M, Nprime)
