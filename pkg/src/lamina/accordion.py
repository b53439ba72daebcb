"""Accordions of linked leaves, order preservation, and collision structure.

The accordion of an axis chord collects the leaves of another lamination
(or of a chord's forward orbit) crossing it.  For mutually order-preserving
linked pairs the possible exact patterns are rigid: one extra crossing leaf
(periodic flip or four disjoint endpoint orbits), two crossing images, or a
periodic polygon swept out by the pair's convex hull.  Smart-criticality
helpers pick full spike collections unlinked with a given leaf and detect
collapses around chains of spikes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .circle import Angle, sigma
from .chords import Chord, chord_image, is_critical, linked, validate_collection
from .lamination import FiniteLamination, orbit_classify, vertex_orbit_period
from .qc_portrait import QcPortrait, complete_samples

__all__ = [
    "AccordionReport",
    "accordion",
    "order_preserving_accordions",
    "SpikeChoice",
    "choose_unlinked_spikes",
    "CollapseReport",
    "detect_collapse",
    "CompgapReport",
    "compgap_analyze",
]

SINGLE = "single"
TWO_LEAF_FLIP = "two_leaf_periodic_flip"
TWO_LEAF_DISJOINT = "two_leaf_periodic_disjoint_orbits"
THREE_LEAF = "three_leaf"
WANDERING = "wandering_up_to_horizon"
PERIODIC_GAP = "periodic_gap"


@dataclass(frozen=True)
class AccordionReport:
    axis: Chord
    members: tuple            # axis plus every leaf strictly crossing it
    touching: tuple           # leaves sharing an endpoint with the axis only
    horizon: int
    exact: bool               # orbit closed within the horizon
    order_preserving: bool | None
    classification: str | None


def _default_horizon(d: int, chords) -> int:
    pre, per = 0, 1
    for c in chords:
        info = orbit_classify(d, c)
        pre = max(pre, info.preperiod)
        per = math.lcm(per, info.period)
    return pre + 2 * per


def _is_flip(d: int, c: Chord, bound: int) -> bool:
    """Does some sigma_d^j swap the endpoints of the chord?"""
    x, y = c.a, c.b
    for _ in range(bound):
        x, y = sigma(d, x), sigma(d, y)
        if (x, y) == (c.b, c.a):
            return True
        if (x, y) == (c.a, c.b):
            return False
    return False


def accordion(axis: Chord, other, horizon: int | None = None, d: int | None = None) -> AccordionReport:
    """Accordion of ``axis`` with respect to a lamination or to the forward
    orbit of a second chord.

    With a chord, the orbit is followed to closure (exact) or to the horizon
    (flagged non-exact); classification labels the crossing pattern.  With a
    lamination, the members are its leaves crossing the axis and the
    classification is ``single`` or undetermined (None).
    """
    if isinstance(other, FiniteLamination):
        members = [axis] + [c for c in other if linked(c, axis)]
        touching = [
            c
            for c in other
            if c != axis and not linked(c, axis) and set(c.endpoints) & set(axis.endpoints)
        ]
        classification = SINGLE if len(members) == 1 else None
        return AccordionReport(
            axis=axis,
            members=tuple(members),
            touching=tuple(touching),
            horizon=0,
            exact=True,
            order_preserving=None,
            classification=classification,
        )

    if d is None:
        raise ValueError("chord-orbit accordions need the degree d")
    info = orbit_classify(d, other)
    steps = info.closes_at if horizon is None else min(horizon, info.closes_at)
    exact = steps >= info.closes_at
    orbit = [c for c in info.orbit[:steps] if isinstance(c, Chord) and not c.degenerate]
    members = [axis] + [c for c in orbit if linked(c, axis)]
    touching = [
        c
        for c in orbit
        if c != axis and not linked(c, axis) and set(c.endpoints) & set(axis.endpoints)
    ]
    op = order_preserving_accordions(d, axis, other) if linked(axis, other) else None

    crossing = len(members) - 1
    if crossing == 0:
        classification = SINGLE
    elif not exact:
        classification = WANDERING
    elif crossing == 1:
        partner = members[1]
        pinfo = orbit_classify(d, partner)
        if pinfo.preperiod > 0:
            # crosses once and the closed orbit never returns to the axis
            classification = WANDERING
        elif _is_flip(d, partner, 2 * pinfo.period):
            classification = TWO_LEAF_FLIP
        else:
            classification = TWO_LEAF_DISJOINT
    elif crossing == 2:
        classification = THREE_LEAF
    else:
        classification = PERIODIC_GAP
    return AccordionReport(
        axis=axis,
        members=tuple(members),
        touching=tuple(touching),
        horizon=steps,
        exact=exact,
        order_preserving=op,
        classification=classification,
    )


def _positively_ordered_images(points, images) -> bool:
    """Is the image sequence positively circularly ordered along the sources?

    ``points`` ascending and pairwise distinct; the images must be pairwise
    distinct and wrap around the circle exactly once.
    """
    n = len(points)
    if len(set(images)) != n:
        return False
    if n <= 2:
        return True
    descents = sum(1 for i in range(n) if images[i] > images[(i + 1) % n])
    return descents == 1


def _one_sided_order_preserving(d: int, axis: Chord, other: Chord, horizon: int | None) -> bool:
    info_a = orbit_classify(d, axis)
    info_b = orbit_classify(d, other)
    # (pre)critical leaves never have order preserving accordions
    if any(c.degenerate for c in info_a.orbit if isinstance(c, Chord)):
        return False
    if any(c.degenerate for c in info_b.orbit if isinstance(c, Chord)):
        return False
    orbit_b = [c for c in info_b.orbit if isinstance(c, Chord)]
    steps = info_a.closes_at
    if horizon is not None:
        steps = min(steps, horizon)
    axis_k = axis
    for _ in range(steps):
        pts = set(axis_k.endpoints)
        for c in orbit_b:
            if linked(c, axis_k):
                pts.update(c.endpoints)
        pts = sorted(pts)
        images = [sigma(d, p) for p in pts]
        if not _positively_ordered_images(pts, images):
            return False
        axis_k = chord_image(d, axis_k)
    return True


def order_preserving_accordions(d: int, l1: Chord, l2: Chord, horizon: int | None = None) -> bool:
    """Mutual order preservation: at every step, sigma_d is injective and
    positively order preserving on the accordion of each chord's image with
    respect to the other's forward orbit.  Exact for rational data (orbits
    close); a horizon merely truncates."""
    if not linked(l1, l2):
        raise ValueError("order preserving accordions are defined for linked chords")
    return _one_sided_order_preserving(d, l1, l2, horizon) and _one_sided_order_preserving(
        d, l2, l1, horizon
    )


# ---------------------------------------------------------------------------
# Smart criticality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpikeChoice:
    spikes: tuple
    avoided: bool  # True when no chosen spike has the avoided endpoint


def choose_unlinked_spikes(
    qcp: QcPortrait,
    l1: Chord,
    avoid: Angle | None = None,
    special_clusters=(),
) -> SpikeChoice:
    """One spike per portrait quadrilateral, each unlinked with ``l1``;
    optionally avoiding a named endpoint when possible.

    Fails when ``l1`` is a special critical leaf (inside a special cluster),
    for which no unlinked full collection needs to exist.
    """
    d = qcp.degree
    if is_critical(d, l1):
        for cluster in special_clusters:
            if set(l1.endpoints) <= set(cluster):
                raise ValueError("special critical leaves admit no unlinked spike choice")
    options = []
    for quad in qcp.quads:
        unlinked = [s for s in quad.spike_set if not linked(s, l1)]
        if not unlinked:
            raise ValueError(f"every spike of {quad} crosses {l1}")
        options.append(unlinked)
    avoided = True
    chosen = []
    if avoid is not None:
        for opts in options:
            clean = [s for s in opts if not s.has_endpoint(avoid)]
            if clean:
                chosen.append(clean[0])
            else:
                chosen.append(opts[0])
                avoided = False
    else:
        chosen = [opts[0] for opts in options]
    if not validate_collection(d, chosen).is_full_collection:
        # fall back to any full collection among the unlinked choices
        for combo in itertools.product(*options):
            if validate_collection(d, combo).is_full_collection:
                chosen = list(combo)
                avoided = avoid is not None and not any(s.has_endpoint(avoid) for s in combo)
                break
        else:
            raise ValueError("no unlinked complete sample forms a full collection")
    return SpikeChoice(spikes=tuple(chosen), avoided=avoided if avoid is not None else True)


@dataclass(frozen=True)
class CollapseReport:
    kind: str                  # "chains" | "special_cluster" | "none"
    junction: tuple | None     # the adjacent endpoints (a, x) with equal image
    chain1: tuple | None
    chain2: tuple | None


def _chain_between(sample, start: Angle, end: Angle):
    """Concatenation of sample spikes from start to end whose junction
    points move monotonically along the positive arc [start, end]."""
    span = (end - start) % 1

    def pos(p):
        return (p - start) % 1

    best = None

    def dfs(point, used, chain):
        nonlocal best
        if best is not None:
            return
        if point == end:
            best = tuple(chain)
            return
        for s in sample:
            if s in used or not s.has_endpoint(point):
                continue
            nxt = s.other_endpoint(point)
            if pos(nxt) <= pos(point) and nxt != end:
                continue
            if pos(nxt) > span:
                continue
            dfs(nxt, used | {s}, chain + [s])

    dfs(start, frozenset(), [])
    return best


def detect_collapse(
    l1: Chord,
    l2: Chord,
    qcp1: QcPortrait,
    qcp2: QcPortrait,
    special_clusters=(),
) -> CollapseReport:
    """Do the two leaves collapse around chains of spikes?

    Requires non-disjoint leaves with a pair of adjacent endpoints sharing a
    sigma_d-image; searches both portraits for spike chains joining those
    endpoints monotonically.  Leaves inside a common special cluster are
    reported as that case instead.
    """
    d = qcp1.degree
    if l1 == l2 or (not linked(l1, l2) and not set(l1.endpoints) & set(l2.endpoints)):
        raise ValueError("collapse detection needs non-disjoint distinct leaves")
    for cluster in special_clusters:
        cset = set(cluster)
        if set(l1.endpoints) <= cset and set(l2.endpoints) <= cset:
            return CollapseReport("special_cluster", None, None, None)
    pairs = [
        (u, v)
        for u in l1.endpoints
        for v in l2.endpoints
        if u != v and sigma(d, u) == sigma(d, v)
    ]
    if not pairs:
        raise ValueError("no adjacent endpoints with a common image")
    others = set(l1.endpoints) | set(l2.endpoints)
    for u, v in pairs:
        for start, end in ((u, v), (v, u)):
            arc_len = (end - start) % 1
            if any(0 < (p - start) % 1 < arc_len for p in others - {start, end}):
                continue  # not the adjacent side
            chain1 = chain2 = None
            for sample in complete_samples(qcp1):
                chain1 = _chain_between(sample, start, end)
                if chain1:
                    break
            for sample in complete_samples(qcp2):
                chain2 = _chain_between(sample, start, end)
                if chain2:
                    break
            if chain1 and chain2:
                return CollapseReport("chains", (start, end), chain1, chain2)
    return CollapseReport("none", None, None, None)


# ---------------------------------------------------------------------------
# Convex-hull collision structure
# ---------------------------------------------------------------------------


def _hull_edges(vertices):
    n = len(vertices)
    if n < 2:
        return []
    if n == 2:
        return [Chord(vertices[0], vertices[1])]
    return [Chord(vertices[i], vertices[(i + 1) % n]) for i in range(n)]


def _interiors_intersect(u, v) -> bool:
    """Interiors of convex hulls of circle points (sorted tuples)."""
    if len(u) < 2 or len(v) < 2:
        return False
    if set(u) <= set(v) or set(v) <= set(u):
        return True
    for e1 in _hull_edges(u):
        for e2 in _hull_edges(v):
            if linked(e1, e2):
                return True
    return False


@dataclass(frozen=True)
class CompgapReport:
    classification: str        # PERIODIC_GAP or WANDERING
    r: int | None              # first index whose image hull recurs
    step: int | None           # return time of the hull at index r
    vertices: tuple            # the periodic polygon's vertex set
    orbit_groups: tuple        # vertices grouped by sigma_d-orbit
    periods: tuple             # period of each group
    remap_is_identity: bool | None
    horizon: int


def compgap_analyze(d: int, l1: Chord, l2: Chord, horizon: int | None = None) -> CompgapReport:
    """Follow the convex hull of two linked, mutually order-preserving
    chords; locate the first recurring image and the periodic polygon its
    orbit sweeps out, reporting vertex orbits and the return behavior."""
    if not linked(l1, l2):
        raise ValueError("hull analysis needs linked chords")
    if not order_preserving_accordions(d, l1, l2):
        raise ValueError("hull analysis needs mutually order preserving accordions")
    if horizon is None:
        horizon = _default_horizon(d, (l1, l2))

    hulls = [tuple(sorted(set(l1.endpoints) | set(l2.endpoints)))]
    seen = {hulls[0]: 0}
    closes = None
    for i in range(1, horizon + 1):
        nxt = tuple(sorted({sigma(d, p) for p in hulls[-1]}))
        if nxt in seen:
            closes = (seen[nxt], i - seen[nxt])
            hulls.append(nxt)
            break
        seen[nxt] = i
        hulls.append(nxt)
    if closes is None:
        return CompgapReport(WANDERING, None, None, (), (), (), None, horizon)
    preperiod, period = closes
    total = preperiod + 2 * period

    def hull_at(i):
        if i < len(hulls):
            return hulls[i]
        j = preperiod + (i - preperiod) % period
        return hulls[j]

    r = None
    for i in range(preperiod + period):
        if any(_interiors_intersect(hull_at(i), hull_at(j)) for j in range(i + 1, total + 1)):
            r = i
            break
    if r is None:
        return CompgapReport(WANDERING, None, None, (), (), (), None, horizon)
    base = hull_at(r)
    step = next(
        t for t in range(1, total + 1) if _interiors_intersect(base, hull_at(r + t))
    )
    vertices = set(base)
    current = set(base)
    seen_sets = {frozenset(base)}
    while True:
        for _ in range(step):
            current = {sigma(d, p) for p in current}
        key = frozenset(current)
        if key in seen_sets:
            break
        seen_sets.add(key)
        vertices |= current
    vertices = tuple(sorted(vertices))

    groups = []
    remaining = set(vertices)
    while remaining:
        v = min(remaining)
        info = orbit_classify(d, v)
        cycle = set(info.orbit[info.preperiod :])
        members = sorted((cycle & remaining) | {v})
        groups.append(tuple(members))
        remaining -= set(members)
    periods = tuple(orbit_classify(d, g[0]).period for g in groups)
    vop = vertex_orbit_period(d, vertices)
    remap_identity = None
    if vop is not None and vop[0] == 0:
        gap_period = vop[1]
        remap_identity = all(
            orbit_classify(d, v).preperiod == 0 and gap_period % orbit_classify(d, v).period == 0
            and _power_fixes(d, v, gap_period)
            for v in vertices
        )
    return CompgapReport(
        classification=PERIODIC_GAP,
        r=r,
        step=step,
        vertices=vertices,
        orbit_groups=tuple(groups),
        periods=periods,
        remap_is_identity=remap_identity,
        horizon=horizon,
    )


def _power_fixes(d: int, v: Angle, n: int) -> bool:
    x = v
    for _ in range(n):
        x = sigma(d, x)
    return x == v
