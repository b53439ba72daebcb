"""Text formats: lamination files, portrait files, tag reports.

Lamination files carry a ``degree d`` header and one chord per line in
canonical order; ``#`` starts a comment.  Portrait files share the header
and list ordered critical data: ``leaf p/q p/q``, ``quad`` with four
angles, or ``poly`` with three or more vertices.  Round-trips are
bit-exact because angles serialize as reduced fractions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle import Angle
from .chords import Chord, is_critical, validate_collection
from .lamination import FiniteLamination, pullback_build
from .qc_portrait import make_quadrilateral
from .cubic_tags import ConvexSet

__all__ = [
    "lamination_text",
    "parse_lamination",
    "PortraitSpec",
    "parse_portrait",
    "portrait_text",
    "tag_report",
]


def lamination_text(lam: FiniteLamination) -> str:
    lines = [f"degree {lam.degree}"]
    lines += [str(c) for c in lam.leaves]
    return "\n".join(lines) + "\n"


def parse_lamination(text: str) -> FiniteLamination:
    degree = None
    leaves = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("degree"):
            degree = int(line.split()[1])
            continue
        if degree is None:
            raise ValueError("lamination file must start with a degree header")
        leaves.append(Chord.parse(line))
    if degree is None:
        raise ValueError("missing degree header")
    return FiniteLamination(degree, leaves)


@dataclass(frozen=True)
class PortraitSpec:
    """Parsed portrait file: ordered critical sets of one lamination."""

    degree: int
    entries: tuple  # ("leaf", Chord) | ("quad", CriticalQuadrilateral) | ("poly", tuple of Angles)

    def initial_chords(self) -> list:
        chords = []
        for kind, obj in self.entries:
            if kind == "leaf":
                chords.append(obj)
            elif kind == "quad":
                chords.extend(obj.edges)
            else:
                v = obj
                chords.extend(Chord(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))
        return chords

    def sector_chords(self) -> list:
        """A full collection derived from the entries: quad spikes, polygon
        critical diagonals and critical leaves, greedily without loops."""
        d = self.degree
        candidates = []
        for kind, obj in self.entries:
            if kind == "quad":
                candidates.append(obj.spikes[0])
            elif kind == "poly":
                v = obj
                diagonals = [
                    Chord(v[i], v[j])
                    for i in range(len(v))
                    for j in range(i + 1, len(v))
                    if is_critical(d, Chord(v[i], v[j]))
                ]
                candidates.extend(diagonals[:1] if len(v) > 3 else diagonals)
            elif is_critical(d, obj):
                candidates.append(obj)
        chosen = []
        for c in candidates:
            if not validate_collection(d, chosen + [c]).has_loop:
                chosen.append(c)
        if len(chosen) != d - 1:
            raise ValueError(
                f"portrait yields {len(chosen)} branch cuts; degree {d} needs {d - 1}"
            )
        return chosen

    def convex_sets(self) -> list[ConvexSet]:
        out = []
        for kind, obj in self.entries:
            if kind == "leaf":
                out.append(ConvexSet.of(obj.endpoints))
            elif kind == "quad":
                out.append(ConvexSet.of(obj.hull))
            else:
                out.append(ConvexSet.of(obj))
        return out

    def build(self, depth: int) -> FiniteLamination:
        return pullback_build(
            self.degree, self.initial_chords(), depth, sectors=self.sector_chords()
        )


def parse_portrait(text: str) -> PortraitSpec:
    degree = None
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "degree":
            degree = int(parts[1])
            continue
        if degree is None:
            raise ValueError("portrait file must start with a degree header")
        if parts[0] == "leaf":
            if len(parts) != 3:
                raise ValueError(f"leaf line needs two angles: {line!r}")
            entries.append(("leaf", Chord(Angle(parts[1]), Angle(parts[2]))))
        elif parts[0] == "quad":
            if len(parts) != 5:
                raise ValueError(f"quad line needs four angles: {line!r}")
            entries.append(("quad", make_quadrilateral([Angle(p) for p in parts[1:]], degree)))
        elif parts[0] == "poly":
            if len(parts) < 4:
                raise ValueError(f"poly line needs at least three angles: {line!r}")
            entries.append(("poly", tuple(sorted(Angle(p) for p in parts[1:]))))
        else:
            raise ValueError(f"unknown portrait line: {line!r}")
    if degree is None:
        raise ValueError("missing degree header")
    return PortraitSpec(degree=degree, entries=tuple(entries))


def portrait_text(spec: PortraitSpec) -> str:
    lines = [f"degree {spec.degree}"]
    for kind, obj in spec.entries:
        if kind == "leaf":
            lines.append(f"leaf {obj.a} {obj.b}")
        elif kind == "quad":
            lines.append("quad " + " ".join(str(v) for v in obj.vertices))
        else:
            lines.append("poly " + " ".join(str(v) for v in obj))
    return "\n".join(lines) + "\n"


def tag_report(blocks, matrix) -> str:
    """Key-value blocks per tagged lamination plus a relation matrix.

    ``blocks`` is a list of (name, tag); ``matrix[i][j]`` the relation.
    """
    lines = []
    for name, tag in blocks:
        lines.append(f"[{name}]")
        lines.append(f"cocritical: {tag.cocritical_factor}")
        lines.append(f"minor: {tag.minor_factor}")
        lines.append("")
    lines.append("relations:")
    header = "    " + " ".join(f"{i:>8d}" for i in range(len(blocks)))
    lines.append(header)
    short = {"disjoint": "disj", "equal": "equal", "properly_overlapping": "OVERLAP"}
    for i, row in enumerate(matrix):
        cells = " ".join(f"{short.get(rel, rel):>8s}" for rel in row)
        lines.append(f"{i:>3d} {cells}")
    return "\n".join(lines) + "\n"
