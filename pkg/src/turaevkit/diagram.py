"""Connected link diagrams on the 2-sphere as 4-valent combinatorial maps.

A diagram with ``c`` crossings has ``4c`` darts.  Dart ``4*x + k`` is the
``k``-th end (slot) at crossing ``x``; slots are listed counterclockwise on
the sphere, so the vertex rotation sends slot ``k`` to slot ``k+1 (mod 4)``.
Each dart carries a pass label (``"under"`` or ``"over"``); opposite slots
always share a label.

PD text follows the usual convention: in ``X(a,b,c,d)`` the entry ``a`` is
the incoming under-strand and ``b, c, d`` follow counterclockwise.
"""

from __future__ import annotations

import json
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

UNDER = "under"
OVER = "over"

ALTERNATING = "alternating"
UNDER_UNDER = "under-under"
OVER_OVER = "over-over"

SHADE_ALPHA = "shade-alpha"
SHADE_BETA = "shade-beta"


class DiagramError(ValueError):
    """Raised when diagram input is malformed or not an accepted diagram."""


def _flip(label: str) -> str:
    return OVER if label == UNDER else UNDER


@dataclass(frozen=True)
class LinkDiagram:
    """A link diagram given by PD-style edge labels and per-slot pass labels.

    ``labels[x][k]`` is the edge label at slot ``k`` of crossing ``x``; the two
    slots carrying the same label are the two ends of one edge.
    """

    labels: tuple[tuple[int, int, int, int], ...]
    passes: tuple[tuple[str, str, str, str], ...]

    def __post_init__(self) -> None:
        labels = tuple(tuple(int(v) for v in rec) for rec in self.labels)
        passes = tuple(tuple(rec) for rec in self.passes)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "passes", passes)
        if len(labels) != len(passes):
            raise DiagramError("labels and passes must have one record per crossing")
        for x, (rec, prec) in enumerate(zip(labels, passes)):
            if len(rec) != 4 or len(prec) != 4:
                raise DiagramError(f"crossing {x} must have exactly 4 slots")
            if any(v <= 0 for v in rec):
                raise DiagramError(f"crossing {x}: edge labels must be positive integers")
            if any(p not in (UNDER, OVER) for p in prec):
                raise DiagramError(f"crossing {x}: pass labels must be 'under' or 'over'")
        counts: dict[int, int] = {}
        for rec in labels:
            for v in rec:
                counts[v] = counts.get(v, 0) + 1
        bad = sorted(v for v, n in counts.items() if n != 2)
        if bad:
            raise DiagramError(f"edge labels {bad} do not appear exactly twice")

    # -- darts ---------------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.labels)

    @property
    def n_darts(self) -> int:
        return 4 * len(self.labels)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.labels)

    @cached_property
    def involution(self) -> tuple[int, ...]:
        where: dict[int, list[int]] = {}
        for x, rec in enumerate(self.labels):
            for k, v in enumerate(rec):
                where.setdefault(v, []).append(4 * x + k)
        inv = [0] * self.n_darts
        for a, b in where.values():
            inv[a], inv[b] = b, a
        return tuple(inv)

    @cached_property
    def rotation(self) -> tuple[int, ...]:
        return tuple(4 * (d // 4) + (d % 4 + 1) % 4 for d in range(self.n_darts))

    def pass_of(self, dart: int) -> str:
        return self.passes[dart // 4][dart % 4]

    def is_under(self, dart: int) -> bool:
        return self.passes[dart // 4][dart % 4] == UNDER

    def label_of(self, dart: int) -> int:
        return self.labels[dart // 4][dart % 4]

    @staticmethod
    def opposite(dart: int) -> int:
        """The dart continuing the same strand straight through the crossing."""
        return 4 * (dart // 4) + (dart % 4 + 2) % 4

    def edges(self) -> list[tuple[int, int]]:
        """Edges as dart pairs ``(d, d')`` with ``d < d'``, ordered by ``d``."""
        inv = self.involution
        return [(d, inv[d]) for d in range(self.n_darts) if d < inv[d]]

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Faces on the sphere: orbits of rotation after involution."""
        rot, inv = self.rotation, self.involution
        seen = [False] * self.n_darts
        out = []
        for d in range(self.n_darts):
            if seen[d]:
                continue
            orbit = []
            e = d
            while not seen[e]:
                seen[e] = True
                orbit.append(e)
                e = rot[inv[e]]
            out.append(tuple(orbit))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        out = [0] * self.n_darts
        for i, face in enumerate(self.faces):
            for d in face:
                out[d] = i
        return tuple(out)

    def is_connected(self) -> bool:
        if self.n_crossings == 0:
            return False
        inv = self.involution
        seen = {0}
        todo = [0]
        while todo:
            x = todo.pop()
            for k in range(4):
                y = inv[4 * x + k] // 4
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == self.n_crossings

    def euler_characteristic(self) -> int:
        return self.n_crossings - self.n_edges + len(self.faces)

    @cached_property
    def n_components(self) -> int:
        """Number of link components (strands run straight through crossings)."""
        inv = self.involution
        seen = [False] * self.n_darts
        count = 0
        for d in range(self.n_darts):
            if seen[d]:
                continue
            count += 1
            e = d
            while not seen[e]:
                seen[e] = True
                f = inv[e]
                seen[f] = True
                e = self.opposite(f)
        return count

    # -- serialization -------------------------------------------------------

    def to_pd(self) -> str:
        """PD text; records are rotated so the first slot is an under-pass."""
        out = []
        for rec, prec in zip(self.labels, self.passes):
            shift = 0 if prec[0] == UNDER else 1
            r = rec[shift:] + rec[:shift]
            out.append("X({})".format(",".join(str(v) for v in r)))
        return " ".join(out)

    def to_json(self) -> dict:
        return {
            "crossings": [list(rec) for rec in self.labels],
            "overUnder": [list(rec) for rec in self.passes],
        }

    @classmethod
    def from_json(cls, doc: dict, check: bool = True) -> "LinkDiagram":
        try:
            crossings = doc["crossings"]
            passes = doc.get("overUnder")
        except (KeyError, TypeError) as exc:
            raise DiagramError("diagram JSON needs a 'crossings' field") from exc
        if passes is None:
            passes = [[UNDER, OVER, UNDER, OVER] for _ in crossings]
        d = cls(tuple(tuple(r) for r in crossings), tuple(tuple(p) for p in passes))
        if check:
            _require_accepted(d)
        return d

    @classmethod
    def from_pairing(cls, involution: Sequence[int], passes: Sequence[Sequence[str]]) -> "LinkDiagram":
        """Build a diagram from a dart involution; edges are labelled 1, 2, ... by least dart."""
        n = len(involution)
        labels = [0] * n
        nxt = 1
        for d in range(n):
            if labels[d] == 0:
                labels[d] = labels[involution[d]] = nxt
                nxt += 1
        recs = tuple(tuple(labels[4 * x:4 * x + 4]) for x in range(n // 4))
        return cls(recs, tuple(tuple(p) for p in passes))


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    euler_characteristic: int
    crossing_labels_ok: tuple[bool, ...]
    n_crossings: int
    n_faces: int

    @property
    def accepted(self) -> bool:
        return (
            self.n_crossings > 0
            and self.connected
            and self.euler_characteristic == 2
            and all(self.crossing_labels_ok)
        )

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "chi": self.euler_characteristic,
            "crossingLabelsOk": list(self.crossing_labels_ok),
            "accepted": self.accepted,
        }


def validate(d: LinkDiagram) -> ValidationReport:
    labels_ok = []
    for prec in d.passes:
        labels_ok.append(
            prec[0] == prec[2] and prec[1] == prec[3] and prec[0] != prec[1]
        )
    return ValidationReport(
        connected=d.is_connected(),
        euler_characteristic=d.euler_characteristic(),
        crossing_labels_ok=tuple(labels_ok),
        n_crossings=d.n_crossings,
        n_faces=len(d.faces),
    )


def _require_accepted(d: LinkDiagram) -> None:
    if d.n_crossings == 0:
        raise DiagramError("diagrams without crossings are not supported")
    report = validate(d)
    if not all(report.crossing_labels_ok):
        bad = [x for x, ok in enumerate(report.crossing_labels_ok) if not ok]
        raise DiagramError(f"crossings {bad} do not have opposite under/over pairs")
    if not report.connected:
        raise DiagramError("diagram is disconnected")
    if report.euler_characteristic != 2:
        raise DiagramError(
            f"diagram is not planar: face-traced Euler characteristic is "
            f"{report.euler_characteristic}, expected 2"
        )


_RECORD = re.compile(r"X\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_SEPARATOR = re.compile(r"[\s,;]*")


def parse_pd(text: str, check: bool = True) -> LinkDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` records.

    With ``check=False`` only the arity of edge labels is enforced, which is
    handy for building deliberately non-planar test inputs.
    """
    body = text.strip()
    if body.startswith("PD"):
        body = body[2:].strip()
        if body[:1] in "[(" and body[-1:] in "])":
            body = body[1:-1]
    records = []
    pos = 0
    while True:
        sep = _SEPARATOR.match(body, pos)
        pos = sep.end()
        if pos >= len(body):
            break
        m = _RECORD.match(body, pos)
        if m is None:
            raise DiagramError(f"malformed token at offset {pos}: {body[pos:pos + 20]!r}")
        records.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if not records:
        raise DiagramError("no crossing records found")
    passes = tuple((UNDER, OVER, UNDER, OVER) for _ in records)
    d = LinkDiagram(tuple(records), passes)
    if check:
        _require_accepted(d)
    return d


def load_diagram(text: str, check: bool = True) -> LinkDiagram:
    """Parse either the JSON document form or PD text."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return LinkDiagram.from_json(json.loads(stripped), check=check)
    return parse_pd(text, check=check)


@dataclass(frozen=True)
class CheckerboardColoring:
    faces: tuple[tuple[int, ...], ...]
    colors: tuple[str, ...]
    face_of_dart: tuple[int, ...]

    def color_of_dart(self, dart: int) -> str:
        """Color of the face on the right of ``dart`` (the face whose orbit holds it)."""
        return self.colors[self.face_of_dart[dart]]

    def swapped(self) -> "CheckerboardColoring":
        flipped = tuple(SHADE_BETA if c == SHADE_ALPHA else SHADE_ALPHA for c in self.colors)
        return CheckerboardColoring(self.faces, flipped, self.face_of_dart)

    def is_valid_for(self, d: LinkDiagram) -> bool:
        inv = d.involution
        return all(
            self.colors[self.face_of_dart[a]] != self.colors[self.face_of_dart[inv[a]]]
            for a in range(d.n_darts)
        )


def checkerboard(d: LinkDiagram) -> CheckerboardColoring:
    """Two-color the faces; the face holding dart 0 gets shade-alpha."""
    faces, fod, inv = d.faces, d.face_of_dart, d.involution
    color: list[str | None] = [None] * len(faces)
    color[fod[0]] = SHADE_ALPHA
    queue = deque([fod[0]])
    while queue:
        f = queue.popleft()
        other = SHADE_BETA if color[f] == SHADE_ALPHA else SHADE_ALPHA
        for a in faces[f]:
            g = fod[inv[a]]
            if color[g] is None:
                color[g] = other
                queue.append(g)
            elif color[g] != other:
                raise DiagramError("faces are not checkerboard colorable")
    if any(c is None for c in color):
        raise DiagramError("diagram is disconnected")
    return CheckerboardColoring(faces, tuple(color), fod)


@dataclass(frozen=True)
class EdgeAlternation:
    edges: tuple[tuple[int, int], ...]
    tags: tuple[str, ...]

    @property
    def is_alternating(self) -> bool:
        return all(t == ALTERNATING for t in self.tags)

    def non_alternating(self) -> list[tuple[int, int]]:
        return [e for e, t in zip(self.edges, self.tags) if t != ALTERNATING]

    def tag_of(self, edge: tuple[int, int]) -> str:
        return self.tags[self.edges.index(tuple(sorted(edge)))]


def edge_alternation(d: LinkDiagram) -> EdgeAlternation:
    edges = d.edges()
    tags = []
    for a, b in edges:
        ua, ub = d.is_under(a), d.is_under(b)
        if ua != ub:
            tags.append(ALTERNATING)
        elif ua:
            tags.append(UNDER_UNDER)
        else:
            tags.append(OVER_OVER)
    return EdgeAlternation(tuple(edges), tuple(tags))


def switch_crossings(d: LinkDiagram, crossings: Iterable[int]) -> LinkDiagram:
    """Reverse the given crossings (swap over and under); the rotation is unchanged."""
    chosen = set(crossings)
    for x in chosen:
        if not 0 <= x < d.n_crossings:
            raise IndexError(f"crossing index {x} out of range")
    passes = tuple(
        tuple(_flip(p) for p in prec) if x in chosen else prec
        for x, prec in enumerate(d.passes)
    )
    return LinkDiagram(d.labels, passes)


def alternating_version(d: LinkDiagram) -> LinkDiagram:
    """The alternating diagram with the same projection; crossing 0 keeps its labels."""
    inv = d.involution
    flip: list[bool | None] = [None] * d.n_crossings
    flip[0] = False
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for k in range(4):
            a = 4 * x + k
            b = inv[a]
            y = b // 4
            under_a = d.is_under(a) != flip[x]
            # b must end up with the opposite label of a
            want_flip = d.is_under(b) == under_a
            if flip[y] is None:
                flip[y] = want_flip
                queue.append(y)
            elif flip[y] != want_flip:
                raise DiagramError("projection admits no alternating labelling")
    return switch_crossings(d, [x for x, f in enumerate(flip) if f])


# -- random corpus -------------------------------------------------------------


def _curl_maps() -> tuple[list[int], list[int]]:
    # one crossing, slots 0-3 and 1-2 joined: the figure-eight curve
    return [1, 2, 3, 0], [3, 2, 1, 0]


def random_diagram(seed: int, c: int, alternating: bool = False) -> LinkDiagram:
    """A deterministic pseudo-random connected diagram with ``c`` crossings.

    The projection is grown from a single curl by repeatedly pinching two
    edge-sides of a random face together into a new crossing, which keeps the
    map planar and connected.  Each candidate is still re-validated.
    """
    if c < 1:
        raise DiagramError("random diagrams need at least one crossing")
    rng = random.Random(seed)
    while True:
        rot, inv = _curl_maps()
        for _ in range(c - 1):
            _pinch(rot, inv, rng)
        n = len(inv) // 4
        passes = []
        for _ in range(n):
            if rng.random() < 0.5:
                passes.append((UNDER, OVER, UNDER, OVER))
            else:
                passes.append((OVER, UNDER, OVER, UNDER))
        d = LinkDiagram.from_pairing(inv, passes)
        if alternating:
            d = alternating_version(d)
        if validate(d).accepted:
            return d


def _pinch(rot: list[int], inv: list[int], rng: random.Random) -> None:
    n = len(inv)
    seen = [False] * n
    faces = []
    for d in range(n):
        if seen[d]:
            continue
        orbit = []
        e = d
        while not seen[e]:
            seen[e] = True
            orbit.append(e)
            e = rot[inv[e]]
        faces.append(orbit)
    face = faces[rng.randrange(len(faces))]
    b1 = face[rng.randrange(len(face))]
    b2 = face[rng.randrange(len(face))]
    v = [n, n + 1, n + 2, n + 3]
    rot.extend([v[1], v[2], v[3], v[0]])
    inv.extend([0, 0, 0, 0])
    c1 = inv[b1]
    if b1 == b2:
        # kink on the edge, loop drawn inside the face
        pairs = [(v[1], b1), (v[0], c1), (v[2], v[3])]
    else:
        c2 = inv[b2]
        pairs = [(v[1], b1), (v[0], c1), (v[3], b2), (v[2], c2)]
    for a, b in pairs:
        inv[a], inv[b] = b, a
