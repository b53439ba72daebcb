"""Seeded verification suites behind the ``verify`` CLI command.

Each suite samples its inputs with the documented linear generator, runs
the corresponding property at desk scale with exact arithmetic, and returns
a report of pass/fail plus counters.  Every failure is a hard failure: the
properties are exact identities, not statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .circle import Angle, sigma
from .chords import Chord, chord_image, linked
from .lamination import (
    FiniteLamination,
    InconsistentPortrait,
    critical_analysis,
    gap_degree,
    gaps,
    orbit_classify,
    pullback_build,
    vertex_orbit_period,
)
from .quad_minor import build_from_minor, minor_of, qml_enumerate, strip_between
from .qc_portrait import tune_insert, COLLAPSING
from .accordion import accordion, compgap_analyze
from .cubic_tags import (
    ConvexSet,
    FullPortrait,
    cocritical_set,
    full_portraits_of,
    linked_pair_cocritical_quads,
    mixed_tag,
    reconstruct,
    separation_check,
    tags_relation,
)
from .sampling import Lcg

__all__ = ["SuiteResult", "SUITES", "run_suite", "sample_cubic_library", "hexagon_fixtures"]

ONE_THIRD = Fraction(1, 3)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def lines(self):
        out = [f"suite: {self.name}", f"status: {'pass' if self.passed else 'FAIL'}"]
        for key in sorted(self.counts):
            out.append(f"{key}: {self.counts[key]}")
        for f in self.failures[:20]:
            out.append(f"failure: {f}")
        if len(self.failures) > 20:
            out.append(f"failure: ... and {len(self.failures) - 20} more")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


# ---------------------------------------------------------------------------
# reconstruct: co-critical duality and reconstruction
# ---------------------------------------------------------------------------


def run_reconstruct(samples: int = 1000, seed: int = 1) -> SuiteResult:
    rng = Lcg(seed)
    failures = []
    for i in range(samples):
        # alternate critical leaves and collapsing quadrilaterals
        a = rng.angle()
        leaf = ConvexSet.of([a, Angle(a + ONE_THIRD)])
        if reconstruct(leaf) != leaf:
            failures.append(f"critical leaf {leaf} fails reconstruction")
        base = rng.chord_in_window()
        quad = cocritical_set(ConvexSet.of(base.endpoints))
        if len(quad.vertices) != 4:
            failures.append(f"co-critical set of {base} is not a quadrilateral")
            continue
        if reconstruct(quad) != quad:
            failures.append(f"collapsing quadrilateral {quad} fails reconstruction")
    dual_fail = 0
    for i in range(samples):
        c = rng.chord_in_window()
        S = ConvexSet.of(c.endpoints)
        if cocritical_set(cocritical_set(S)) != S:
            dual_fail += 1
            failures.append(f"coc o coc != id on {c}")
    return SuiteResult(
        "reconstruct",
        passed=not failures,
        counts={"reconstructions": 2 * samples, "duality_checks": samples},
        failures=failures,
    )


# ---------------------------------------------------------------------------
# linkco: linked chords give strongly linked collapsing co-critical quads
# ---------------------------------------------------------------------------


def run_linkco(samples: int = 1000, seed: int = 1) -> SuiteResult:
    failures = []
    # pinned fixture: the /24 witness chain
    q1, q2, rep = linked_pair_cocritical_quads(
        Chord(Angle(0), Angle(1, 12)), Chord(Angle(1, 24), Angle(1, 8))
    )
    expected_a = tuple(Angle(n, 24) for n in (8, 10, 16, 18))
    expected_b = tuple(Angle(n, 24) for n in (9, 11, 17, 19))
    if not rep.linked or rep.witness != (expected_a, expected_b):
        failures.append(f"fixture witness mismatch: {rep}")
    rng = Lcg(seed)
    for i in range(samples):
        l1, l2 = rng.linked_pair_in_window()
        quad1, quad2, srep = linked_pair_cocritical_quads(l1, l2)
        if quad1.classification != COLLAPSING or quad2.classification != COLLAPSING:
            failures.append(f"{l1} / {l2}: co-critical sets not collapsing")
            continue
        if not srep.linked:
            failures.append(f"{l1} / {l2}: quadrilaterals not strongly linked")
            continue
        merged = [v for pair in zip(srep.witness[0], srep.witness[1]) for v in pair]
        desc = sum(1 for k in range(8) if merged[k] > merged[(k + 1) % 8])
        if desc > 1:
            failures.append(f"{l1} / {l2}: witness chain not circularly ordered")
    return SuiteResult(
        "linkco",
        passed=not failures,
        counts={"pairs": samples, "fixture": 1},
        failures=failures,
    )


# ---------------------------------------------------------------------------
# shared cubic lamination library
# ---------------------------------------------------------------------------

# hexagonal degree-2 critical gaps found by search: (vertices, second
# critical chord, spike); they provide nontrivial quadrilateral tuning
_HEXAGONS = (
    ((19, 28, 31, 32 + 39, 2 + 39, 5 + 39), 39, (16, 55), 117),
    ((29, 35, 53, 55, 61, 1 + 78), 78, (2, 41), 117),
    ((29, 35, 40, 68, 74, 79), 117, (10, 244), 351),
)


def hexagon_fixtures(depth: int = 3):
    """Laminations with a hexagonal degree-2 critical gap plus a critical
    leaf; used for nontrivial quadrilateral insertion."""
    out = []
    for verts_num, q, (s1, s2), q2 in _HEXAGONS:
        verts = [Angle(n, q) for n in verts_num]
        hexagon = [Chord(verts[i], verts[(i + 1) % 6]) for i in range(6)]
        second = Chord(Angle(s1, q2), Angle(s2, q2))
        spike = Chord(verts[0], verts[3])
        lam = pullback_build(3, hexagon + [second], depth, sectors=[spike, second])
        out.append(lam)
    return out


def _quad_portrait(rng: Lcg):
    """Collapsing quadrilateral (as the co-critical set of a short chord
    with preperiodic endpoints) plus a critical leaf in its long hole."""
    for _ in range(64):
        x = rng.preperiodic_cubic_angle()
        y = rng.preperiodic_cubic_angle()
        if not 0 < (y - x) % 1 < ONE_THIRD:
            continue
        quad = ConvexSet.of(
            [Angle(x + ONE_THIRD), Angle(y + ONE_THIRD), Angle(x + 2 * ONE_THIRD), Angle(y + 2 * ONE_THIRD)]
        )
        edges = list(quad.edges)
        spike = Chord(Angle(x + ONE_THIRD), Angle(x + 2 * ONE_THIRD))
        # second critical chord inside the hole (y + 2/3, x + 1/3)
        hole_start = Angle(y + 2 * ONE_THIRD)
        hole_len = (Angle(x + ONE_THIRD) - hole_start) % 1
        for _ in range(32):
            b = rng.preperiodic_cubic_angle()
            t = Angle(b + ONE_THIRD)
            if 0 < (b - hole_start) % 1 < hole_len and 0 < (t - hole_start) % 1 < hole_len:
                second = Chord(b, t)
                if any(linked(second, e) for e in edges):
                    continue
                return edges + [second], [spike, second]
    return None


def sample_cubic_library(rng: Lcg, count: int, depth: int = 3):
    """Pullback-built cubic laminations from distinct sampled portraits with
    two distinct critical sets, heuristically dendritic."""
    library = []
    seen = set()
    attempts = 0
    while len(library) < count and attempts < 100 * count:
        attempts += 1
        try:
            if rng.below(3) < 2:
                c1, c2 = rng.disjoint_critical_pair()
                key = tuple(sorted((c1, c2)))
                if key in seen:
                    continue
                seen.add(key)
                lam = pullback_build(3, [c1, c2], depth)
            else:
                sampled = _quad_portrait(rng)
                if sampled is None:
                    continue
                portrait, sectors = sampled
                key = tuple(sorted(portrait))
                if key in seen:
                    continue
                seen.add(key)
                lam = pullback_build(3, portrait, depth, sectors=sectors)
        except (InconsistentPortrait, ValueError):
            continue
        if not heuristically_dendritic(lam):
            continue
        if len(critical_analysis(lam).critical_sets) != 2:
            continue
        library.append(lam)
    return library


def heuristically_dendritic(lam: FiniteLamination) -> bool:
    """Finite-depth stand-in for dendriticity: no arc-bearing gap whose
    vertex set recurs (the footprint a Fatou gap would leave)."""
    for g in gaps(lam):
        if g.is_disk or g.finite:
            continue
        vop = vertex_orbit_period(lam.degree, g.vertices, max_steps=16)
        if vop is not None and vop[0] == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# crifar: 1/12 separation of distinct critical sets
# ---------------------------------------------------------------------------


def _as_convex(s) -> ConvexSet:
    return ConvexSet.from_chord(s) if isinstance(s, Chord) else ConvexSet.of(s.vertices)


def run_crifar(samples: int = 100, seed: int = 1) -> SuiteResult:
    rng = Lcg(seed)
    library = sample_cubic_library(rng, max(samples, 100))
    failures = []
    for idx, lam in enumerate(library):
        sets = [_as_convex(s) for s in critical_analysis(lam).critical_sets]
        if len(sets) != 2:
            failures.append(f"lamination {idx}: expected two critical sets")
            continue
        gap = separation_check(sets[0], sets[1])
        if gap < Fraction(1, 12):
            failures.append(f"lamination {idx}: separation {gap} < 1/12 for {sets[0]} / {sets[1]}")
    return SuiteResult(
        "crifar",
        passed=not failures,
        counts={"laminations": len(library)},
        failures=failures,
    )


# ---------------------------------------------------------------------------
# maintag: tags pairwise disjoint-or-equal, tuning shrinks tags
# ---------------------------------------------------------------------------


def run_maintag(samples: int = 100, seed: int = 1) -> SuiteResult:
    rng = Lcg(seed)
    library = sample_cubic_library(rng, max(samples, 100))
    library += hexagon_fixtures()
    failures = []
    tagged = []
    for idx, lam in enumerate(library):
        for fp in full_portraits_of(lam):
            try:
                tagged.append((idx, fp, mixed_tag(lam, fp)))
            except ValueError as exc:
                failures.append(f"lamination {idx}: tag failure {exc}")
    overlap = equal_distinct = 0
    for i in range(len(tagged)):
        for j in range(i + 1, len(tagged)):
            rel = tags_relation(tagged[i][2], tagged[j][2])
            if rel == "properly_overlapping":
                overlap += 1
                failures.append(
                    f"tags overlap: {tagged[i][2]} (lam {tagged[i][0]}) vs {tagged[j][2]} (lam {tagged[j][0]})"
                )
            elif rel == "equal" and tagged[i][0] != tagged[j][0]:
                equal_distinct += 1
                failures.append(
                    f"equal tags from distinct laminations {tagged[i][0]} / {tagged[j][0]}"
                )

    # the intersection dichotomy must agree with the containment cases on a
    # slice of pairs (including same-lamination opposite orderings)
    from .cubic_tags import classify_tag_relation

    checked_cases = 0
    for i in range(0, min(len(tagged), 24)):
        for j in range(i + 1, min(len(tagged), 24)):
            idx_i, fp_i, _ = tagged[i]
            idx_j, fp_j, _ = tagged[j]
            rep = classify_tag_relation(library[idx_i], fp_i, library[idx_j], fp_j)
            checked_cases += 1
            if not rep.consistent:
                failures.append(
                    f"dichotomy mismatch for lam {idx_i} vs lam {idx_j}: relation {rep.relation}"
                )

    tunings = 0
    for idx, lam in enumerate(library):
        analysis = critical_analysis(lam)
        sets = [_as_convex(s) for s in analysis.critical_sets]
        if len(sets) != 2:
            continue
        for g in analysis.critical_gaps:
            if len(g.vertices) < 4 or gap_degree(3, g) != 2:
                continue
            try:
                lam2, quad = tune_insert(lam, g)
            except ValueError:
                continue
            coarse = ConvexSet.of(g.vertices)
            fine = ConvexSet.of(quad.vertices)
            other = sets[0] if sets[1] == coarse else sets[1]
            for fp_coarse, fp_fine in (
                (FullPortrait(coarse, other), FullPortrait(fine, other)),
                (FullPortrait(other, coarse), FullPortrait(other, fine)),
            ):
                tunings += 1
                if not fp_fine.refines(fp_coarse):
                    failures.append(f"lamination {idx}: tuned portrait does not refine")
                    continue
                t_coarse = mixed_tag(None, fp_coarse)
                t_fine = mixed_tag(None, fp_fine)
                if not t_coarse.contains(t_fine):
                    failures.append(
                        f"lamination {idx}: tag {t_fine} escapes {t_coarse} after tuning"
                    )
    return SuiteResult(
        "maintag",
        passed=not failures,
        counts={
            "laminations": len(library),
            "tags": len(tagged),
            "relations": len(tagged) * (len(tagged) - 1) // 2,
            "dichotomy_checks": checked_cases,
            "tunings": tunings,
        },
        failures=failures,
    )


# ---------------------------------------------------------------------------
# compgap: exhaustive accordion classification at small periods
# ---------------------------------------------------------------------------


def _compgap_universe(kmax: int):
    N = math.lcm(*[3**k - 1 for k in range(1, kmax + 1)])
    pts = set()
    for k in range(1, kmax + 1):
        q = 3**k - 1
        step = N // q
        pts.update(j * step for j in range(q))
    pts = sorted(pts)
    period = {}
    for p in pts:
        x, n = 3 * p % N, 1
        while x != p:
            x, n = 3 * x % N, n + 1
        period[p] = n
    return N, pts, period


def _linked_int(c1, c2) -> bool:
    a, b = c1
    x, y = c2
    if a in c2 or b in c2:
        return False
    return (a < x < b) != (a < y < b)


def _survivor_pairs(kmax: int):
    """All linked pairs of equal-endpoint-period chords (denominators
    dividing 3^k - 1, k <= kmax) with mutually order preserving accordions,
    via integer arithmetic modulo the common denominator."""
    N, pts, period = _compgap_universe(kmax)
    candidates = [
        (a, b)
        for i, a in enumerate(pts)
        for b in pts[i + 1 :]
        if period[a] == period[b]
    ]
    # leaf-eligible chords: equal endpoint periods and a pairwise unlinked
    # forward orbit (leaves of an invariant lamination satisfy both)
    chords = []
    orbit = {}
    for c in candidates:
        o = [c]
        x = c
        while True:
            x = tuple(sorted(((3 * x[0]) % N, (3 * x[1]) % N)))
            if x == c:
                break
            o.append(x)
        if any(
            _linked_int(o[i], o[j]) for i in range(len(o)) for j in range(i + 1, len(o))
        ):
            continue
        chords.append(c)
        orbit[c] = o

    def one_sided(axis, other):
        oo = orbit[other]
        for ax in orbit[axis]:
            pset = set(ax)
            for c in oo:
                if _linked_int(ax, c):
                    pset.update(c)
            pl = sorted(pset)
            im = [3 * p % N for p in pl]
            if len(set(im)) != len(im):
                return False
            if len(pl) > 2:
                desc = sum(1 for i in range(len(im)) if im[i] > im[(i + 1) % len(im)])
                if desc != 1:
                    return False
        return True

    survivors = []
    nlinked = 0
    for i in range(len(chords)):
        c1 = chords[i]
        for j in range(i + 1, len(chords)):
            c2 = chords[j]
            if not _linked_int(c1, c2):
                continue
            nlinked += 1
            if one_sided(c1, c2) and one_sided(c2, c1):
                survivors.append((c1, c2))
    return N, nlinked, survivors


def _classify_case(d: int, l1: Chord, l2: Chord):
    """Crossing-pattern case of a linked, mutually order preserving periodic
    pair; returns (case name, detail) or (None, reason)."""
    rep = accordion(l1, l2, d=d)
    crossing = [c for c in rep.members[1:]]
    if len(crossing) == 1:
        partner = crossing[0]
        pinfo = orbit_classify(d, partner)
        if pinfo.preperiod != 0:
            return None, "single crossing with preperiodic partner"
        endpoints = [orbit_classify(d, p) for p in list(l1.endpoints) + list(l2.endpoints)]
        if any(e.preperiod for e in endpoints):
            return None, "non-periodic endpoint"
        periods = {e.period for e in endpoints}
        # flip: some power swaps the partner's endpoints
        x, y = partner.endpoints
        per = orbit_classify(d, x).period
        flip_j = None
        u, v = x, y
        for j in range(1, per + 1):
            u, v = sigma(d, u), sigma(d, v)
            if (u, v) == (y, x):
                flip_j = j
                break
            if (u, v) == (x, y):
                break
        if flip_j is not None:
            if any(e.period != 2 * flip_j for e in endpoints):
                return None, "flip with wrong endpoint periods"
            return "two_leaf_periodic_flip", f"flip power {flip_j}"
        if len(periods) != 1:
            return None, f"mixed endpoint periods {sorted(periods)}"
        orbits = [frozenset(orbit_classify(d, p).orbit) for p in l2.endpoints]
        orbits += [frozenset(orbit_classify(d, p).orbit) for p in l1.endpoints]
        if orbits[0] == orbits[1] or orbits[2] == orbits[3]:
            return None, "shared endpoint orbit without flip"
        return "two_leaf_periodic_disjoint_orbits", "four orbit check"
    if len(crossing) == 2:
        # a recrossing image must either be separated from its source by the
        # axis or fix the partner's endpoints
        partner = min(crossing, key=lambda c: c != l2)
        other = max(crossing, key=lambda c: c != l2)
        if partner == l2:
            k = orbit_classify(d, l2).orbit.index(other)
            x, y = l2.endpoints
            separated = _separates(l1, x, sigma_power(d, x, k)) and _separates(
                l1, y, sigma_power(d, y, k)
            )
            fixed = sigma_power(d, x, k) == x and sigma_power(d, y, k) == y
            if not (separated or fixed):
                return None, "recrossing image neither separated nor fixed"
        return "three_leaf", "two crossing images"
    if len(crossing) == 0:
        return None, "no crossing members"
    return None, f"{len(crossing)} crossing images"


def sigma_power(d: int, p: Angle, k: int) -> Angle:
    for _ in range(k):
        p = sigma(d, p)
    return p


def _separates(axis: Chord, u: Angle, v: Angle) -> bool:
    """Does the chord separate the two circle points in the open disk?"""
    if u in axis.endpoints or v in axis.endpoints or u == v:
        return False
    return (axis.a < u < axis.b) != (axis.a < v < axis.b)


def run_compgap(samples: int = 0, seed: int = 1, kmax: int = 4) -> SuiteResult:
    """Exhaustive: every linked equal-period pair (denominators dividing
    3^k - 1, k <= kmax) with mutually order preserving accordions falls in
    exactly one case, and its hull orbit closes into a polygon with 2 to 4
    vertex orbits of one period.  ``samples`` > 0 caps the pairs that get
    the full exact treatment (0 = all)."""
    N, nlinked, survivors = _survivor_pairs(kmax)
    failures = []
    counts = {"linked_pairs": nlinked, "order_preserving_pairs": len(survivors)}
    case_counts: dict[str, int] = {}
    chosen = survivors if samples in (0, None) else survivors[: samples]
    for (a1, b1), (a2, b2) in chosen:
        l1 = Chord(Angle(a1, N), Angle(b1, N))
        l2 = Chord(Angle(a2, N), Angle(b2, N))
        # order preservation forces images of crossing leaves to keep crossing
        img1, img2 = l1, l2
        closure = orbit_classify(3, l1).closes_at * orbit_classify(3, l2).closes_at
        for _ in range(min(closure, 24)):
            img1, img2 = chord_image(3, img1), chord_image(3, img2)
            if not linked(img1, img2):
                failures.append(f"{l1} / {l2}: images {img1} / {img2} no longer cross")
                break
        case, detail = _classify_case(3, l1, l2)
        if case is None:
            failures.append(f"unclassified pair {l1} / {l2}: {detail}")
            continue
        case_counts[case] = case_counts.get(case, 0) + 1
        cg = compgap_analyze(3, l1, l2)
        if cg.classification != "periodic_gap":
            failures.append(f"{l1} / {l2}: hull orbit did not close ({cg.classification})")
            continue
        if not 2 <= len(cg.orbit_groups) <= 4:
            failures.append(f"{l1} / {l2}: {len(cg.orbit_groups)} vertex orbits")
        if len(set(cg.periods)) != 1:
            failures.append(f"{l1} / {l2}: unequal orbit periods {cg.periods}")
    counts.update({f"case_{k}": v for k, v in case_counts.items()})
    counts["classified"] = len(chosen)
    return SuiteResult("compgap", passed=not failures, counts=counts, failures=failures)


# ---------------------------------------------------------------------------
# qml-unlinked: quadratic minor enumeration agrees with built minors
# ---------------------------------------------------------------------------


def run_qml(samples: int = 0, seed: int = 1, period: int = 6) -> SuiteResult:
    failures = []
    try:
        q = qml_enumerate(period)
    except AssertionError as exc:
        return SuiteResult("qml-unlinked", False, {}, [str(exc)])
    rabbit_minor = Chord(Angle(1, 7), Angle(2, 7))
    bad_minor = Chord(Angle(2, 7), Angle(4, 7))
    if rabbit_minor not in q:
        failures.append("enumeration misses 1/7 2/7")
    if bad_minor in q:
        failures.append("enumeration contains 2/7 4/7")
    from .quad_minor import major_quadrilateral

    cross = strips = 0
    for m in q:
        lam = build_from_minor(m, depth=4)
        rep = minor_of(lam)
        cross += 1
        if rep.minor != m:
            failures.append(f"built minor {rep.minor} != {m}")
            continue
        expected_majors = set(major_quadrilateral(m)[2])
        if set(rep.majors) != expected_majors:
            failures.append(f"majors of {m}: {rep.majors} != preimage pair")
            continue
        if len(rep.majors) == 2:
            strip = strip_between(*rep.majors)
            major = rep.majors[0]
            seen = {major}
            img = major
            while True:
                img = chord_image(2, img)
                if strip.meets_open(img):
                    failures.append(f"image of major {major} enters its central strip")
                    break
                if img in seen:
                    break
                seen.add(img)
            strips += 1
    # the length-1/3 minor is reachable through the built-lamination path only
    basilica = build_from_minor(Chord(Angle(1, 3), Angle(2, 3)), depth=4)
    if minor_of(basilica).minor != Chord(Angle(1, 3), Angle(2, 3)):
        failures.append("basilica minor mismatch")
    return SuiteResult(
        "qml-unlinked",
        passed=not failures,
        counts={"enumerated": len(q), "cross_validated": cross, "central_strips": strips},
        failures=failures,
    )


# ---------------------------------------------------------------------------
# gaptrans: structural checks on generated laminations
# ---------------------------------------------------------------------------


def _fixture_laminations(rng: Lcg, extra: int):
    fixtures = []
    rabbit_edges = [
        Chord(Angle(1, 14), Angle(1, 7)),
        Chord(Angle(1, 7), Angle(4, 7)),
        Chord(Angle(4, 7), Angle(9, 14)),
        Chord(Angle(9, 14), Angle(1, 14)),
    ]
    fixtures.append(pullback_build(2, rabbit_edges, 5, sectors=[Chord(Angle(1, 14), Angle(4, 7))]))
    fixtures.append(build_from_minor(Chord(Angle(1, 3), Angle(2, 3)), 5))
    tri = [Chord(Angle(0), Angle(1, 3)), Chord(Angle(1, 3), Angle(2, 3)), Chord(Angle(0), Angle(2, 3))]
    fixtures.append(pullback_build(3, tri, 3))
    A = lambda n: Angle(n, 2184)
    qn = [Chord(A(1009), A(1026)), Chord(A(1026), A(1737)), Chord(A(1737), A(1754)), Chord(A(1754), A(1009))]
    qw = [Chord(A(114), A(193)), Chord(A(193), A(842)), Chord(A(842), A(921)), Chord(A(921), A(114))]
    fixtures.append(pullback_build(3, qn + qw, 3, sectors=[Chord(A(1009), A(1737)), Chord(A(114), A(842))]))
    fixtures += hexagon_fixtures()
    fixtures += sample_cubic_library(rng, extra)
    return fixtures


def _remap_orbits(d: int, vertices, k: int):
    remaining = set(vertices)
    orbits = []
    while remaining:
        v = min(remaining)
        orb = {v}
        x = v
        while True:
            for _ in range(k):
                x = sigma(d, x)
            if x == v:
                break
            orb.add(x)
        orbits.append(orb)
        remaining -= orb
    return orbits


def run_gaptrans(samples: int = 12, seed: int = 1) -> SuiteResult:
    rng = Lcg(seed)
    fixtures = _fixture_laminations(rng, samples)
    failures = []
    counts = {"laminations": len(fixtures), "periodic_gaps": 0, "leaves": 0, "edges": 0}
    for idx, lam in enumerate(fixtures):
        d = lam.degree
        for leaf in lam.leaves:
            counts["leaves"] += 1
            infos = [orbit_classify(d, p) for p in leaf.endpoints]
            for this, other in (infos, infos[::-1]):
                if this.preperiod == 0 and other.period != this.period:
                    failures.append(
                        f"lam {idx}: leaf {leaf} has periodic endpoint of period "
                        f"{this.period} but companion period {other.period}"
                    )
        for g in gaps(lam):
            if g.is_disk or not g.finite:
                continue
            vop = vertex_orbit_period(d, g.vertices, max_steps=64)
            if vop is None or vop[0] != 0:
                continue
            counts["periodic_gaps"] += 1
            k = vop[1]
            orbits = _remap_orbits(d, g.vertices, k)
            is_dgon_fixed = len(g.vertices) == d and all(len(o) == 1 for o in orbits)
            if not (is_dgon_fixed or len(orbits) <= d - 1):
                failures.append(
                    f"lam {idx}: periodic gap {g} has {len(orbits)} vertex orbits under the remap"
                )
            if d == 2 and len(orbits) != 1:
                failures.append(f"lam {idx}: degree-2 remap not transitive on {g}")
            for e in g.edges:
                counts["edges"] += 1
                info = orbit_classify(d, e)
                precritical = any(
                    isinstance(x, Chord) and x.degenerate for x in info.orbit
                )
                if info.period < 1 and not precritical:
                    failures.append(f"lam {idx}: edge {e} neither (pre)periodic nor (pre)critical")
    return SuiteResult("gaptrans", passed=not failures, counts=counts, failures=failures)


SUITES = {
    "crifar": run_crifar,
    "linkco": run_linkco,
    "reconstruct": run_reconstruct,
    "compgap": run_compgap,
    "maintag": run_maintag,
    "qml-unlinked": run_qml,
    "gaptrans": run_gaptrans,
}


def run_suite(name: str, samples: int, seed: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](samples, seed)
