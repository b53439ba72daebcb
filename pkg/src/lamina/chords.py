"""Chords of the closed disk: linking, criticality, siblings, loop detection.

A chord is an unordered pair of circle angles (possibly degenerate).  Two
chords are *linked* when they cross inside the open disk; a chord is
*critical* under sigma_d when its endpoints share an image.  Collections of
critical chords are validated against loops (closed concatenations or
repeated chords), and sibling collections enumerate the ways a chord extends
to d pairwise disjoint chords with a common image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .circle import Angle, shortest_dist, sigma, preimages

__all__ = [
    "Chord",
    "linked",
    "chord_image",
    "is_critical",
    "sibling_collections",
    "validate_collection",
    "CollectionReport",
]


@dataclass(frozen=True, order=True)
class Chord:
    """Unordered pair of angles, stored canonically as (min, max)."""

    a: Angle
    b: Angle

    def __post_init__(self):
        a, b = Angle(self.a), Angle(self.b)
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def parse(cls, text: str) -> "Chord":
        parts = text.split()
        if len(parts) != 2:
            raise ValueError(f"chord text must be two angle tokens: {text!r}")
        return cls(Angle(parts[0]), Angle(parts[1]))

    @property
    def degenerate(self) -> bool:
        return self.a == self.b

    @property
    def length(self):
        return shortest_dist(self.a, self.b)

    @property
    def endpoints(self) -> tuple[Angle, Angle]:
        return (self.a, self.b)

    def has_endpoint(self, x) -> bool:
        return self.a == x or self.b == x

    def other_endpoint(self, x) -> Angle:
        if self.a == x:
            return self.b
        if self.b == x:
            return self.a
        raise ValueError(f"{x} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"{self.a} {self.b}"

    def __iter__(self):
        return iter((self.a, self.b))


def linked(c1: Chord, c2: Chord) -> bool:
    """True iff the chords strictly cross inside the open disk.

    Degenerate chords never link; chords sharing an endpoint never link.
    """
    if c1.degenerate or c2.degenerate:
        return False
    if c1 == c2:
        return False
    if c1.a in (c2.a, c2.b) or c1.b in (c2.a, c2.b):
        return False
    # endpoints interleave iff exactly one endpoint of c2 lies in the open
    # interval (c1.a, c1.b) of the canonical ordering
    return (c1.a < c2.a < c1.b) != (c1.a < c2.b < c1.b)


def chord_image(d: int, c: Chord) -> Chord:
    """Apply sigma_d to both endpoints; the image may be degenerate."""
    return Chord(sigma(d, c.a), sigma(d, c.b))


def is_critical(d: int, c: Chord) -> bool:
    """A nondegenerate chord whose endpoints share a sigma_d-image."""
    return not c.degenerate and chord_image(d, c).degenerate


def sibling_collections(d: int, c: Chord) -> list[list[Chord]]:
    """All collections of d pairwise disjoint chords containing ``c`` whose
    members all map onto chord_image(d, c).

    Disjoint means no shared endpoints and no crossings.  Rejects chords
    with degenerate image (critical or degenerate input), for which sibling
    collections are not defined.
    """
    img = chord_image(d, c)
    if img.degenerate:
        raise ValueError(f"chord {c} has degenerate image; no sibling collections")
    pre_a = preimages(d, img.a)
    pre_b = preimages(d, img.b)
    if sigma(d, c.a) == img.a:
        ca, cb = c.a, c.b
    else:
        ca, cb = c.b, c.a
    rest_a = [p for p in pre_a if p != ca]
    rest_b = [q for q in pre_b if q != cb]
    collections = []
    for perm in itertools.permutations(rest_b):
        coll = [c] + [Chord(p, q) for p, q in zip(rest_a, perm)]
        ok = True
        for u, v in itertools.combinations(coll, 2):
            if linked(u, v) or u.a in (v.a, v.b) or u.b in (v.a, v.b):
                ok = False
                break
        if ok:
            collections.append(coll)
    return collections


@dataclass(frozen=True)
class CollectionReport:
    has_loop: bool
    is_full_collection: bool


def validate_collection(d: int, chords) -> CollectionReport:
    """Loop detection and full-collection test for an ordered chord list.

    A loop is a subset concatenating into a closed curve, or two equal
    chords.  A full collection is exactly d-1 critical chords with no loop.
    """
    chords = list(chords)
    has_loop = len(set(chords)) != len(chords)
    if not has_loop:
        # union-find on endpoint angles; an edge joining an already
        # connected pair closes a curve
        parent: dict[Angle, Angle] = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ch in chords:
            if ch.degenerate:
                continue
            ra, rb = find(ch.a), find(ch.b)
            if ra == rb:
                has_loop = True
                break
            parent[ra] = rb
    full = (
        not has_loop
        and len(chords) == d - 1
        and all(is_critical(d, ch) for ch in chords)
    )
    return CollectionReport(has_loop=has_loop, is_full_collection=full)
