"""Link-adapted Heegaard diagrams built from (generalized) Turaev surfaces.

The cellulation refines a Turaev surface: every edge of the diagram that is
non-alternating for the auxiliary diagram (crossings reversed where the state
picks B) receives a triple point, and every state face receives a parallel
copy of its boundary made of attaching-circle arcs.  Arcs are labelled alpha
or beta by the checkerboard class of the projection-sphere region they bound.

Vertex labels are ``crossing``/``triple``; edge labels ``D``/``alpha``/``beta``;
face labels ``empty`` (a state disk bounded by attaching circles) or ``link``
(a piece of the neighbourhood of the diagram).  Every face also carries the
``green``/``brown`` tag of the state face it lies in.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Sequence

from .diagram import (
    ALTERNATING,
    OVER,
    SHADE_ALPHA,
    UNDER,
    DiagramError,
    LinkDiagram,
    checkerboard,
    edge_alternation,
    switch_crossings,
    validate,
)
from .states import State, smoothing_corners
from .surface import (
    CellulatedSurface,
    CombinatorialMap,
    SurfaceError,
    classes_generate,
    components,
    euler_characteristic,
    first_homology,
    genus as map_genus,
    is_isomorphic,
    map_from_faces,
)
from .turaev import BROWN, GREEN, TuraevSurface, build_generalized

CROSSING = "crossing"
TRIPLE = "triple"
D_EDGE = "D"
ALPHA = "alpha"
BETA = "beta"
EMPTY = "empty"
LINK = "link"

ALTERNATING_MODE = "alternating"
GENERALIZED_MODE = "generalized"

FORMAT = "link-adapted-heegaard/1"


class SurgeryError(ValueError):
    """The surgered surface is not a connected sphere carrying the diagram."""


@dataclass(frozen=True)
class LinkAdaptedHeegaardDiagram:
    surface: CellulatedSurface
    face_state: tuple[str, ...]
    crossing_index: tuple[int, ...]
    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[int, ...], ...]
    pruned: tuple[dict, ...] = field(default=(), compare=False)

    @property
    def map(self) -> CombinatorialMap:
        return self.surface.map

    @cached_property
    def genus(self) -> int:
        return map_genus(self.map)

    def faces_of_kind(self, kind: str) -> list[tuple[int, ...]]:
        labels = self.surface.face_labels
        return [f for f in self.map.faces if labels[f[0]] == kind]

    @property
    def circles(self) -> tuple[tuple[int, ...], ...]:
        return self.alpha + self.beta

    def vertices_of_kind(self, kind: str) -> list[int]:
        labels = self.surface.vertex_labels
        return [v for v, orb in enumerate(self.map.vertices) if labels[orb[0]] == kind]

    def to_json(self) -> dict:
        s = self.surface
        return {
            "format": FORMAT,
            "rotation": list(self.map.rotation),
            "involution": list(self.map.involution),
            "vertex": list(s.vertex_labels),
            "edge": list(s.edge_labels),
            "face": list(s.face_labels),
            "state": list(self.face_state),
            "pass": list(s.dart_labels),
            "crossing": list(self.crossing_index),
            "alpha": [list(c) for c in self.alpha],
            "beta": [list(c) for c in self.beta],
            "sides": {ALPHA: "H_alpha", BETA: "H_beta"},
            "pruned": list(self.pruned),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LinkAdaptedHeegaardDiagram":
        if doc.get("format", FORMAT) != FORMAT:
            raise ValueError(f"unsupported format {doc.get('format')!r}")
        surface = CellulatedSurface(
            CombinatorialMap(tuple(doc["rotation"]), tuple(doc["involution"])),
            tuple(doc["vertex"]),
            tuple(doc["edge"]),
            tuple(doc["face"]),
            tuple(doc["pass"]),
        )
        return cls(
            surface,
            tuple(doc["state"]),
            tuple(int(x) for x in doc["crossing"]),
            tuple(tuple(c) for c in doc["alpha"]),
            tuple(tuple(c) for c in doc["beta"]),
            tuple(doc.get("pruned", ())),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# -- construction ----------------------------------------------------------------


def build_heegaard(t: TuraevSurface) -> LinkAdaptedHeegaardDiagram:
    d, s, sign = t.diagram, t.state, t.orientation
    n0 = d.n_darts
    d_inv = d.involution
    aux = switch_crossings(d, s.b_crossings())
    alt = edge_alternation(aux)
    split = [e for e, tag in zip(alt.edges, alt.tags) if tag != ALTERNATING]

    inv: list[int] = list(d_inv)
    din: dict[int, int] = {}  # crossing dart -> dart leaving the triple point toward that crossing
    for a, b in split:
        din[a], din[b] = len(inv), len(inv) + 1
        inv.extend([a, b])
        inv[a], inv[b] = din[a], din[b]

    board = checkerboard(d)

    def region(prev: int, b: int) -> int:
        # projection-sphere face at the corner entered from inv(prev), left along b
        if sign[b // 4] > 0:
            return board.face_of_dart[b]
        return board.face_of_dart[d_inv[prev]]

    cycles: list[list[int]] = []
    kinds: list[str] = []
    states: list[str] = []
    arc_region: dict[int, int] = {}
    tface = t.surface.face_labels
    for F in t.map.faces:
        m = len(F)
        tag = tface[F[0]]
        pos = [i for i, b in enumerate(F) if b in din]
        if not pos:
            cycles.append(list(F))
            kinds.append(LINK)
            states.append(tag)
            continue
        k = len(pos)
        fwd = []
        for _ in range(k):
            a = len(inv)
            inv.extend([a + 1, a])
            fwd.append(a)
        for j in range(k):
            i0 = pos[j]
            i1 = pos[j + 1] if j + 1 < k else pos[0] + m
            span = range(i0 + 1, i1 + 1)
            cyc = [din[d_inv[F[i0]]]] + [F[i % m] for i in span] + [fwd[j] + 1]
            found = {region(F[(i - 1) % m], F[i % m]) for i in span}
            assert len(found) == 1, "arc runs along more than one sphere region"
            arc_region[fwd[j]] = found.pop()
            cycles.append(cyc)
            kinds.append(LINK)
            states.append(tag)
        cycles.append(fwd)
        kinds.append(EMPTY)
        states.append(tag)

    hmap, signs = map_from_faces(cycles, inv, root=0)
    assert all(x > 0 for x in signs)
    n = len(inv)
    vertex = [CROSSING if a < n0 else TRIPLE for a in range(n)]
    edge = [D_EDGE] * n
    for a, r in arc_region.items():
        lab = ALPHA if board.colors[r] == SHADE_ALPHA else BETA
        edge[a] = edge[a + 1] = lab
    face = [""] * n
    face_state = [""] * n
    for cyc, kind, tag in zip(cycles, kinds, states):
        for a in cyc:
            face[a] = kind
            face_state[a] = tag
    passes = [t.pass_on_surface(a) if a < n0 else "" for a in range(n)]
    crossing = [a // 4 if a < n0 else -1 for a in range(n)]
    surface = CellulatedSurface(hmap, tuple(vertex), tuple(edge), tuple(face), tuple(passes))

    by_region: dict[int, list[int]] = {}
    for a, r in arc_region.items():
        by_region.setdefault(r, []).extend([a, a + 1])
    alpha, beta = [], []
    for r, darts in by_region.items():
        circle = _chain_circle(hmap, darts)
        (alpha if board.colors[r] == SHADE_ALPHA else beta).append(circle)
    pruned = []
    for r, f in enumerate(board.faces):
        if r not in by_region:
            side = ALPHA if board.colors[r] == SHADE_ALPHA else BETA
            pruned.append({"region": r, "side": side, "boundary": list(f)})
    return LinkAdaptedHeegaardDiagram(
        surface,
        tuple(face_state),
        tuple(crossing),
        tuple(sorted(alpha)),
        tuple(sorted(beta)),
        tuple(pruned),
    )


def _chain_circle(m: CombinatorialMap, darts: Sequence[int]) -> tuple[int, ...]:
    leaving: dict[int, list[int]] = {}
    for a in darts:
        leaving.setdefault(m.tail(a), []).append(a)
    start = min(darts)
    out = [start]
    cur = start
    while True:
        nxt = [e for e in leaving[m.head(cur)] if e != m.involution[cur]]
        if len(nxt) != 1:
            raise AssertionError("attaching circle does not pass simply through a triple point")
        cur = nxt[0]
        if cur == start:
            return tuple(out)
        out.append(cur)


def build_from_diagram(d: LinkDiagram, s: State | None = None) -> LinkAdaptedHeegaardDiagram:
    if s is None:
        s = State.all_a(d.n_crossings)
    return build_heegaard(build_generalized(d, s))


# -- verification ------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    structural: tuple[str, ...]
    bullets: dict[str, bool]
    messages: dict[str, list[str]]

    @property
    def passed(self) -> bool:
        return not self.structural and all(self.bullets.values())

    def failed(self) -> list[str]:
        return [k for k, ok in self.bullets.items() if not ok]

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "structural": list(self.structural),
            "bullets": dict(self.bullets),
            "messages": {k: v for k, v in self.messages.items() if v},
            "passed": self.passed,
        }


_VOCAB = {
    "vertex": {CROSSING, TRIPLE},
    "edge": {D_EDGE, ALPHA, BETA},
    "face": {EMPTY, LINK},
    "state": {GREEN, BROWN},
}


def _structural_problems(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    s, m = h.surface, h.map
    n = m.n_darts
    out = []
    if len(h.face_state) != n or len(h.crossing_index) != n:
        return ["per-dart arrays have the wrong length"]
    columns = {
        "vertex": s.vertex_labels,
        "edge": s.edge_labels,
        "face": s.face_labels,
        "state": h.face_state,
    }
    for name, col in columns.items():
        bad = set(col) - _VOCAB[name]
        if bad:
            out.append(f"unknown {name} labels {sorted(bad)}")
    if out:
        return out
    if not s.labels_consistent():
        out.append("labels are not constant on cells")
    for orb in m.faces:
        if len({h.face_state[a] for a in orb}) != 1:
            out.append("state tag is not constant on a face")
            break
    seen_index = {}
    for v, orb in enumerate(m.vertices):
        if s.vertex_labels[orb[0]] == CROSSING:
            idx = {h.crossing_index[a] for a in orb}
            if len(idx) != 1 or min(idx) < 0:
                out.append(f"crossing vertex {v} has no single crossing index")
            elif idx <= set(seen_index):
                out.append(f"crossing index {min(idx)} used twice")
            else:
                seen_index[min(idx)] = v
            if any(s.dart_labels[a] not in (OVER, UNDER) for a in orb):
                out.append(f"crossing vertex {v} lacks pass labels")
    for circle in h.circles:
        if not circle or any(not 0 <= a < n for a in circle):
            out.append("attaching circle refers to missing darts")
            continue
        for a, b in zip(circle, circle[1:] + circle[:1]):
            if m.head(a) != m.tail(b):
                out.append("attaching circle is not a closed edge path")
                break
    return out


def _position(m: CombinatorialMap, dart: int) -> tuple[int, int]:
    orb = m.vertices[m.vertex_of[dart]]
    return orb.index(dart), len(orb)


def _check_transversality(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    s, m = h.surface, h.map
    msgs = []
    for v, orb in enumerate(m.vertices):
        kind = s.vertex_labels[orb[0]]
        labels = [s.edge_labels[a] for a in orb]
        if kind == CROSSING:
            if len(orb) != 4 or any(x != D_EDGE for x in labels):
                msgs.append(f"crossing vertex {v} is not a 4-valent vertex of D")
            continue
        if len(orb) != 6 or Counter(labels) != Counter({D_EDGE: 2, ALPHA: 2, BETA: 2}):
            msgs.append(f"vertex {v} is not a triple point of D, alpha and beta")
            continue
        for i in range(3):
            if labels[i] != labels[i + 3]:
                msgs.append(f"curves at triple point {v} are not pairwise transverse")
                break
    for name, circles in ((ALPHA, h.alpha), (BETA, h.beta)):
        used = Counter()
        vertex_owner: dict[int, int] = {}
        for ci, circle in enumerate(circles):
            verts = [m.tail(a) for a in circle]
            if len(set(verts)) != len(verts):
                msgs.append(f"{name} circle {ci} is not simple")
            for u in verts:
                if vertex_owner.setdefault(u, ci) != ci:
                    msgs.append(f"{name} circles {vertex_owner[u]} and {ci} meet")
            for a in circle:
                if s.edge_labels[a] != name:
                    msgs.append(f"{name} circle {ci} runs along a non-{name} edge")
                    break
                used[m.edge_of[a]] += 1
            for a, b in zip(circle, circle[1:] + circle[:1]):
                p, k = _position(m, m.involution[a])
                q, _ = _position(m, b)
                if (q - p) % k != k // 2:
                    msgs.append(f"{name} circle {ci} does not cross straight through a vertex")
                    break
        labelled = {m.edge_of[a] for a in range(m.n_darts) if s.edge_labels[a] == name}
        if set(used) != labelled or any(c != 1 for c in used.values()):
            msgs.append(f"{name} edges are not exactly the union of the listed {name} circles")
    return msgs


def _strand_partner(h: LinkAdaptedHeegaardDiagram, dart: int) -> int:
    """Follow D from a crossing dart through triple points to the next crossing."""
    s, m = h.surface, h.map
    b = m.involution[dart]
    for _ in range(m.n_darts):
        if s.vertex_labels[b] == CROSSING:
            return b
        orb = m.vertices[m.vertex_of[b]]
        others = [a for a in orb if s.edge_labels[a] == D_EDGE and a != b]
        if len(others) != 1:
            raise SurgeryError("diagram does not pass straight through a triple point")
        b = m.involution[others[0]]
    raise SurgeryError("diagram strand never reaches a crossing")


def _merge_faces(m: CombinatorialMap, across) -> list[int]:
    """Union faces across edges selected by ``across(dart)``; returns a component id per face."""
    parent = list(range(len(m.faces)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in m.edges:
        if across(a):
            parent[find(m.face_of[a])] = find(m.face_of[b])
    return [find(i) for i in range(len(m.faces))]


def _check_diagram_on_surface(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    s, m = h.surface, h.map
    msgs = []
    d_darts = [a for a in range(m.n_darts) if s.edge_labels[a] == D_EDGE]
    if not d_darts:
        return ["surface carries no diagram"]
    reached = {m.tail(d_darts[0])}
    todo = [m.tail(d_darts[0])]
    while todo:
        v = todo.pop()
        for a in m.vertices[v]:
            if s.edge_labels[a] == D_EDGE and m.head(a) not in reached:
                reached.add(m.head(a))
                todo.append(m.head(a))
    if reached != {m.tail(a) for a in d_darts}:
        msgs.append("D is disconnected")
    for v, orb in enumerate(m.vertices):
        if s.vertex_labels[orb[0]] != CROSSING or len(orb) != 4:
            continue
        p = [s.dart_labels[a] for a in orb]
        if not (p[0] == p[2] and p[1] == p[3] and p[0] != p[1]):
            msgs.append(f"crossing vertex {v} has no opposite under/over pairs")
    comp = _merge_faces(m, lambda a: s.edge_labels[a] != D_EDGE)
    cells: dict[int, list[int]] = {}
    for f, c in enumerate(comp):
        cells.setdefault(c, [0, 0, 0])[0] += 1
    for a, b in m.edges:
        if s.edge_labels[a] != D_EDGE:
            cells[comp[m.face_of[a]]][1] += 1
    for v, orb in enumerate(m.vertices):
        if all(s.edge_labels[a] != D_EDGE for a in orb):
            cells[comp[m.face_of[orb[0]]]][2] += 1
    for c, (nf, ne, nv) in cells.items():
        if nf - ne + nv != 1:
            msgs.append("D does not cut the surface into disks")
            break
    for c in set(comp):
        tags = {h.face_state[m.faces[f][0]] for f in range(len(comp)) if comp[f] == c}
        if len(tags) != 1:
            msgs.append("a disk of the complement of D mixes state tags")
            break
    for a, b in m.edges:
        if s.edge_labels[a] == D_EDGE and h.face_state[a] == h.face_state[b]:
            msgs.append("state tags do not alternate across D")
            break
    return msgs


def _check_alternation(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    s, m = h.surface, h.map
    for a in range(m.n_darts):
        if s.vertex_labels[a] == CROSSING:
            try:
                b = _strand_partner(h, a)
            except SurgeryError as exc:
                return [str(exc)]
            if s.dart_labels[a] == s.dart_labels[b]:
                return ["D does not alternate on the surface"]
    return []


def _check_intersections(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    s, m = h.surface, h.map
    incident: dict[str, set[int]] = {D_EDGE: set(), ALPHA: set(), BETA: set()}
    for a in range(m.n_darts):
        incident[s.edge_labels[a]].add(m.tail(a))
    msgs = []
    va, vb, vd = incident[ALPHA], incident[BETA], incident[D_EDGE]
    if not (va & vd == vb & vd == va & vb):
        msgs.append("D, alpha and beta do not meet in a common point set")
    if va != vb or not va <= vd:
        msgs.append("alpha and beta meet away from D")
    crossings = set(h.vertices_of_kind(CROSSING))
    if (va | vb) & crossings:
        msgs.append("an attaching circle passes through a crossing")
    if set(h.vertices_of_kind(TRIPLE)) != va & vb:
        msgs.append("triple-point labels disagree with the intersections")
    return msgs


def _check_partition(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    s, m = h.surface, h.map
    msgs = []
    kind = [s.face_labels[f[0]] for f in m.faces]
    for a, b in m.edges:
        if s.edge_labels[a] != D_EDGE:
            pair = {kind[m.face_of[a]], kind[m.face_of[b]]}
            if pair != {EMPTY, LINK}:
                msgs.append("checkerboard partition fails across an attaching circle")
                break
    for f, orb in enumerate(m.faces):
        if kind[f] == EMPTY and any(s.edge_labels[a] == D_EDGE for a in orb):
            msgs.append("an empty face meets D")
            break
    for f, orb in enumerate(m.faces):
        if kind[f] != LINK:
            continue
        verts = [s.vertex_labels[a] for a in orb]
        if CROSSING not in verts or verts.count(TRIPLE) > 2:
            msgs.append("a disk of the link region has a bad boundary")
            break
    for circle in h.circles:
        hits = sum(1 for a in circle if s.vertex_labels[a] == TRIPLE)
        if hits == 0:
            msgs.append("an attaching circle is disjoint from D")
        elif hits % 2:
            msgs.append("an attaching circle meets D an odd number of times")
    if components(m) != 1:
        msgs.append("surface is disconnected")
        return msgs
    n_empty = sum(1 for k in kind if k == EMPTY)
    if 2 * map_genus(m) + n_empty != len(h.alpha) + len(h.beta):
        msgs.append(
            f"Euler identity fails: 2*{map_genus(m)} + {n_empty} != "
            f"{len(h.alpha)} + {len(h.beta)}"
        )
    return msgs


def verify(h: LinkAdaptedHeegaardDiagram, mode: str = ALTERNATING_MODE) -> VerificationReport:
    """Check the characterizing properties bullet by bullet.

    B1 transversality of D, alpha and beta; B2 D is a connected diagram cutting
    the surface into disks (and alternating, in alternating mode); B3 the
    triple-point identity; B4 the checkerboard partition and Euler identity;
    B0 the converse surgery gives back a sphere diagram whose rebuild is
    isomorphic to the input.
    """
    if mode not in (ALTERNATING_MODE, GENERALIZED_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    problems = _structural_problems(h)
    if problems:
        return VerificationReport(mode, tuple(problems), {}, {})
    messages = {
        "B1": _check_transversality(h),
        "B2": _check_diagram_on_surface(h),
        "B3": _check_intersections(h),
        "B4": _check_partition(h),
    }
    # the sphere certificate needs only the generalized form of B1-B4
    if any(messages.values()):
        messages["B0"] = ["skipped: surgery needs B1-B4"]
    else:
        messages["B0"] = _check_sphere_certificate(h)
    if mode == ALTERNATING_MODE and not messages["B2"]:
        messages["B2"] = _check_alternation(h)
    bullets = {k: not messages[k] for k in ("B0", "B1", "B2", "B3", "B4")}
    return VerificationReport(mode, (), bullets, messages)


def _check_sphere_certificate(h: LinkAdaptedHeegaardDiagram) -> list[str]:
    try:
        result = surgery_to_sphere(h)
    except (SurgeryError, SurfaceError, DiagramError) as exc:
        return [f"surgery failed: {exc}"]
    rebuilt = build_from_diagram(result.diagram, result.state)
    if not heegaard_isomorphic(rebuilt, h):
        return ["rebuilding from the surgered diagram does not reproduce the input"]
    return []


# -- isomorphism -------------------------------------------------------------------


def _iso_surface(h: LinkAdaptedHeegaardDiagram, swap_sides: bool = False) -> CellulatedSurface:
    s = h.surface
    edges = s.edge_labels
    if swap_sides:
        flip = {ALPHA: BETA, BETA: ALPHA}
        edges = tuple(flip.get(x, x) for x in edges)
    darts = tuple(f"{p}/{t}" for p, t in zip(s.dart_labels, h.face_state))
    return CellulatedSurface(s.map, s.vertex_labels, edges, s.face_labels, darts)


def heegaard_isomorphic(h1: LinkAdaptedHeegaardDiagram, h2: LinkAdaptedHeegaardDiagram) -> bool:
    """Label-preserving isomorphism, where the names alpha and beta may be exchanged."""
    a = _iso_surface(h1)
    return is_isomorphic(a, _iso_surface(h2)) or is_isomorphic(a, _iso_surface(h2, swap_sides=True))


def diagram_state_surface(d: LinkDiagram, s: State) -> CellulatedSurface:
    n = d.n_darts
    return CellulatedSurface(
        CombinatorialMap(d.rotation, d.involution),
        tuple(s[a // 4] for a in range(n)),
        ("",) * n,
        ("",) * n,
        tuple(d.pass_of(a) for a in range(n)),
    )


def diagrams_isomorphic(d1: LinkDiagram, s1: State, d2: LinkDiagram, s2: State) -> bool:
    """Isomorphism of diagrams with states on the oriented sphere."""
    return is_isomorphic(diagram_state_surface(d1, s1), diagram_state_surface(d2, s2))


# -- converse surgery --------------------------------------------------------------


@dataclass(frozen=True)
class SurgeryResult:
    diagram: LinkDiagram
    state: State
    euler_characteristic: int
    augmentation: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter((self.diagram, self.state))

    def to_json(self) -> dict:
        return {
            "pd": self.diagram.to_pd(),
            "diagram": self.diagram.to_json(),
            "state": str(self.state),
            "chi": self.euler_characteristic,
            "augmentationCircles": len(self.augmentation),
        }


def surgery_to_sphere(h: LinkAdaptedHeegaardDiagram) -> SurgeryResult:
    """Replace the empty faces by the compressing disks of the attaching circles.

    The result must be a connected sphere; the diagram is read off it, and
    the state from which corners at each crossing lie in green faces.
    """
    problems = _structural_problems(h)
    if problems:
        raise SurgeryError("; ".join(problems))
    s, m = h.surface, h.map
    inv = m.involution
    link_faces = [list(f) for f in m.faces if s.face_labels[f[0]] == LINK]
    cycles = link_faces + [list(c) for c in h.circles]
    crossing_darts = [a for a in range(m.n_darts) if s.vertex_labels[a] == CROSSING]
    if not crossing_darts:
        raise SurgeryError("no crossings on the surface")
    first = min(crossing_darts, key=lambda a: (h.crossing_index[a], a))
    owner = {}
    for i, cyc in enumerate(cycles):
        for a in cyc:
            owner.setdefault(a, i)
    if first not in owner:
        raise SurgeryError("crossing lies outside the link region")
    try:
        sphere, signs = map_from_faces(cycles, inv, root=owner[first])
    except SurfaceError as exc:
        raise SurgeryError(f"surgered surface is not a closed oriented surface: {exc}") from exc
    chi = euler_characteristic(sphere)
    if components(sphere) != 1:
        raise SurgeryError("surgered surface is disconnected")
    if chi != 2:
        raise SurgeryError(f"surgered surface has Euler characteristic {chi}, not a sphere")
    if {frozenset(v) for v in sphere.vertices} != {frozenset(v) for v in m.vertices}:
        raise SurgeryError("surgered surface is not a manifold at some vertex")

    by_index: dict[int, list[int]] = {}
    for a in crossing_darts:
        by_index.setdefault(h.crossing_index[a], []).append(a)
    order = sorted(by_index)
    new_id: dict[int, int] = {}
    passes = []
    for j, x in enumerate(order):
        darts = by_index[x]
        face_signs = {signs[owner[a]] for a in darts if a in owner}
        if len(face_signs) != 1:
            raise SurgeryError(f"orientation is inconsistent around crossing {x}")
        flip = face_signs.pop() < 0

        def on_sphere(a: int) -> str:
            p = s.dart_labels[a]
            return (OVER if p == UNDER else UNDER) if flip else p

        start = min(a for a in darts if on_sphere(a) == UNDER)
        ring = [start]
        while len(ring) < 4:
            ring.append(sphere.rotation[ring[-1]])
        if sorted(ring) != sorted(darts):
            raise SurgeryError(f"crossing {x} is not 4-valent on the sphere")
        for k, a in enumerate(ring):
            new_id[a] = 4 * j + k
        passes.append(tuple(on_sphere(a) for a in ring))
    pairing = [0] * (4 * len(order))
    for a in crossing_darts:
        pairing[new_id[a]] = new_id[_strand_partner(h, a)]
    diagram = LinkDiagram.from_pairing(pairing, passes)
    report = validate(diagram)
    if not report.accepted:
        raise SurgeryError(f"recovered diagram is not accepted: {report.to_json()}")

    letters = []
    for j, x in enumerate(order):
        green = set()
        for a in by_index[x]:
            b = m.rotation[a]
            if h.face_state[b] == GREEN:
                green.add(frozenset((new_id[a], new_id[b])))
        corner_pairs = {
            choice: {frozenset((4 * j + k, 4 * j + (k + 1) % 4)) for k in smoothing_corners(diagram, j, choice)}
            for choice in "AB"
        }
        if green == corner_pairs["A"]:
            letters.append("A")
        elif green == corner_pairs["B"]:
            letters.append("B")
        else:
            raise SurgeryError(f"green corners at crossing {x} are not a smoothing")
    state = State("".join(letters))

    # regions of the sphere minus D that received no compressing disk
    region = _merge_faces(sphere, lambda a: s.edge_labels[a] != D_EDGE)
    holds_disk = set()
    for i in range(len(link_faces), len(cycles)):
        first_dart = cycles[i][0] if signs[i] > 0 else inv[cycles[i][0]]
        holds_disk.add(region[sphere.face_of[first_dart]])
    augmentation = []
    for r in sorted(set(region)):
        if r not in holds_disk:
            darts = [a for f, orb in enumerate(sphere.faces) if region[f] == r for a in orb]
            augmentation.append(tuple(sorted(darts)))
    return SurgeryResult(diagram, state, chi, tuple(augmentation))


# -- homology ----------------------------------------------------------------------


def attaching_circles_generate_h1(h: LinkAdaptedHeegaardDiagram) -> bool:
    hom = first_homology(h.surface)
    return classes_generate(hom, h.circles)


def homology_report(h: LinkAdaptedHeegaardDiagram) -> dict:
    hom = first_homology(h.surface)
    return {
        "genus": h.genus,
        "rank": hom.rank,
        "torsion": list(hom.torsion),
        "alpha": [list(hom.coordinates(c)) for c in h.alpha],
        "beta": [list(hom.coordinates(c)) for c in h.beta],
        "generates": classes_generate(hom, h.circles),
    }


def with_faces_retagged(h: LinkAdaptedHeegaardDiagram, face: int, kind: str) -> LinkAdaptedHeegaardDiagram:
    """Copy of ``h`` with one face's empty/link label replaced (used for mutation checks)."""
    labels = list(h.surface.face_labels)
    for a in h.map.faces[face]:
        labels[a] = kind
    return replace(h, surface=replace(h.surface, face_labels=tuple(labels)))
