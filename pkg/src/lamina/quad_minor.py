"""Quadratic machinery: critical strips, the minor test, QML enumeration.

A chord of length < 1/3 determines a *critical strip*, the hull of the two
halving preimages of its short arc.  A chord belongs to the quadratic minor
lamination exactly when no forward image under angle doubling meets the open
strip; enumerating all such chords with periodic endpoints up to a period
bound yields the finite approximations of QML used by the CLI and suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circle import Angle, Arc, preimages, shortest_dist
from .chords import Chord, chord_image, linked
from .lamination import FiniteLamination, pullback_build

__all__ = [
    "Strip",
    "critical_strip",
    "strip_between",
    "StripVerdict",
    "strip_test",
    "MinorReport",
    "minor_of",
    "qml_enumerate",
    "major_quadrilateral",
    "build_from_minor",
]

ONE_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Strip:
    """Closed region bounded by two disjoint chords and the two circle arcs
    between them; ``degenerate`` strips (a single diameter) have no interior."""

    bound1: Chord
    bound2: Chord
    arc1: Arc | None
    arc2: Arc | None
    degenerate: bool = False

    def meets_open(self, c: Chord) -> bool:
        """Does the chord meet the interior of the strip?

        True when it crosses a boundary chord, or when both endpoints lie on
        the closed strip arcs and the chord is not a boundary chord itself.
        Circle points never lie in the interior, so degenerate chords never
        meet it.
        """
        if self.degenerate or c.degenerate:
            return False
        if linked(c, self.bound1) or linked(c, self.bound2):
            return True
        if c == self.bound1 or c == self.bound2:
            return False
        on_arcs = all(
            (self.arc1 is not None and self.arc1.contains(p, closed=True))
            or (self.arc2 is not None and self.arc2.contains(p, closed=True))
            for p in c.endpoints
        )
        return on_arcs


def strip_between(c1: Chord, c2: Chord) -> Strip:
    """The strip between two disjoint nondegenerate chords (no shared
    endpoints, no crossing)."""
    if c1.degenerate or c2.degenerate:
        raise ValueError("strip_between needs nondegenerate chords")
    if linked(c1, c2) or set(c1.endpoints) & set(c2.endpoints):
        raise ValueError("strip_between needs disjoint chords")
    # both endpoints of c2 lie in one arc of c1; walk that arc positively
    # from its start and meet the nearer endpoint of c2 first
    start = c1.a if c1.a < c2.a < c1.b else c1.b
    end = c1.b if start == c1.a else c1.a
    x, y = sorted(c2.endpoints, key=lambda p: (p - start) % 1)
    return Strip(c1, c2, Arc(start, x), Arc(y, end), False)


def critical_strip(c: Chord) -> Strip:
    """The hull of the two halving preimages of the short closed arc of a
    chord of length < 1/3 (strict); a degenerate chord collapses the strip
    to a diameter with empty interior."""
    if c.degenerate:
        half = Chord(Angle(c.a / 2), Angle(c.a / 2 + Fraction(1, 2)))
        return Strip(half, half, None, None, True)
    if c.length >= ONE_THIRD:
        raise ValueError(f"critical strip needs length < 1/3, got {c.length}")
    if (c.b - c.a) % 1 <= Fraction(1, 2):
        u, v = c.a, c.b
    else:
        u, v = c.b, c.a
    u2, v2 = Angle(u / 2), Angle(v / 2)
    u2h, v2h = Angle(u2 + Fraction(1, 2)), Angle(v2 + Fraction(1, 2))
    return Strip(
        bound1=Chord(v2, u2h),
        bound2=Chord(v2h, u2),
        arc1=Arc(u2, v2),
        arc2=Arc(u2h, v2h),
        degenerate=False,
    )


@dataclass(frozen=True)
class StripVerdict:
    passes: bool
    exact: bool               # orbit closed within the horizon
    fail_index: int | None    # n with sigma^n meeting the open strip
    fail_chord: Chord | None
    orbit: tuple              # images inspected, sigma^1 .. sigma^n


def strip_test(c: Chord, horizon: int = 4096) -> StripVerdict:
    """Iterate angle doubling on the chord and test every image against the
    open critical strip of ``c``.  Exact for (pre)periodic chords (the orbit
    closes); otherwise the verdict holds up to the horizon only."""
    strip = critical_strip(c)
    seen = {c}
    inspected = []
    current = c
    for n in range(1, horizon + 1):
        current = chord_image(2, current)
        inspected.append(current)
        if strip.meets_open(current):
            return StripVerdict(False, True, n, current, tuple(inspected))
        if current in seen:
            return StripVerdict(True, True, None, None, tuple(inspected))
        seen.add(current)
    return StripVerdict(True, False, None, None, tuple(inspected))


@dataclass(frozen=True)
class MinorReport:
    minor: Chord
    majors: tuple


def minor_of(lam: FiniteLamination) -> MinorReport:
    """The image of a longest leaf, plus the major pair (or single critical
    major).  Raises when two longest leaves disagree about their image."""
    if lam.degree != 2:
        raise ValueError("minors are defined for degree-2 laminations")
    if not lam.leaves:
        raise ValueError("empty lamination has no minor")
    top = max(c.length for c in lam.leaves)
    majors = tuple(c for c in lam.leaves if c.length == top)
    images = {chord_image(2, c) for c in majors}
    if len(images) != 1:
        raise ValueError(f"longest leaves have distinct images: {sorted(map(str, images))}")
    return MinorReport(minor=next(iter(images)), majors=majors)


def periodic_angles(period_bound: int) -> list[Angle]:
    """All angles periodic under doubling with period <= period_bound, i.e.
    fractions with denominator dividing some 2^k - 1."""
    out = set()
    for k in range(1, period_bound + 1):
        q = 2**k - 1
        for j in range(q):
            out.add(Angle(j, q))
    return sorted(out)


def qml_enumerate(period_bound: int, image_reading: bool = False) -> list[Chord]:
    """Chords with both endpoints periodic of period <= period_bound and
    length < 1/3 that pass the strip test, canonically sorted.

    The test is applied to the candidate chord itself; the alternative
    reading that returns doubling images of the passing chords is provided
    behind ``image_reading`` for comparison.  The result is verified to be
    pairwise unlinked.
    """
    if not 1 <= period_bound <= 12:
        raise ValueError("period bound must be between 1 and 12")
    angles = periodic_angles(period_bound)
    passing = []
    for i, a in enumerate(angles):
        for b in angles[i + 1 :]:
            if not 0 < shortest_dist(a, b) < ONE_THIRD:
                continue
            c = Chord(a, b)
            if strip_test(c).passes:
                passing.append(c)
    passing.sort()
    for i, ci in enumerate(passing):
        for cj in passing[i + 1 :]:
            if linked(ci, cj):
                raise AssertionError(f"enumerated chords cross: {ci} x {cj}")
    if image_reading:
        return sorted({chord_image(2, c) for c in passing})
    return passing


def major_quadrilateral(minor: Chord):
    """The doubling-preimage quadrilateral of a nondegenerate minor: its
    vertices, its four edges in circular order, and the major pair (the two
    long opposite edges)."""
    if minor.degenerate:
        raise ValueError("degenerate minor has a critical major, not a quadrilateral")
    verts = sorted(set(preimages(2, minor.a)) | set(preimages(2, minor.b)))
    assert len(verts) == 4
    edges = [Chord(verts[i], verts[(i + 1) % 4]) for i in range(4)]
    pair_a = (edges[0], edges[2])
    pair_b = (edges[1], edges[3])
    majors = pair_a if edges[0].length >= edges[1].length else pair_b
    return verts, edges, majors


def build_from_minor(minor: Chord, depth: int) -> FiniteLamination:
    """Pullback lamination generated by the major data of a minor chord."""
    if minor.degenerate:
        diameter = Chord(Angle(minor.a / 2), Angle(minor.a / 2 + Fraction(1, 2)))
        return pullback_build(2, [diameter], depth)
    verts, edges, _ = major_quadrilateral(minor)
    spike = Chord(verts[0], verts[2])
    return pullback_build(2, edges, depth, sectors=[spike])
