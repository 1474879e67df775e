"""Turaev surfaces and generalized Turaev surfaces as ribbon graphs.

The surface built from a diagram ``d`` and a state ``s`` has the crossings
as vertices, the diagram edges as edges and one face per circle of ``s``
and of its dual.  Near each crossing the surface coincides with a disk of
the projection sphere, possibly with the opposite orientation; the
orientation sign per crossing is what the construction solves for.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .diagram import OVER, UNDER, DiagramError, LinkDiagram, _require_accepted, switch_crossings
from .states import (
    DEFAULT_ENUMERATION_CAP,
    State,
    count_circles,
    enumerate_states,
    smoothing_corners,
    _check_state,
)
from .surface import CellulatedSurface, CombinatorialMap, genus as map_genus, is_isomorphic

GREEN = "green"  # faces capping circles of s
BROWN = "brown"  # faces capping circles of the dual state


@dataclass(frozen=True)
class TuraevSurface:
    diagram: LinkDiagram
    state: State
    orientation: tuple[int, ...]
    surface: CellulatedSurface

    @property
    def map(self) -> CombinatorialMap:
        return self.surface.map

    @cached_property
    def genus(self) -> int:
        return map_genus(self.surface.map)

    def pass_on_surface(self, dart: int) -> str:
        return self.surface.dart_labels[dart]

    def faces_tagged(self, tag: str) -> list[tuple[int, ...]]:
        labels = self.surface.face_labels
        return [f for f in self.map.faces if labels[f[0]] == tag]

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram.to_json(),
            "state": str(self.state),
            "genus": self.genus,
            "orientation": list(self.orientation),
            "surface": self.surface.to_json(),
        }


def _in_type_is_s(d: LinkDiagram, s: State, dart: int, sign: int) -> bool:
    """Whether a face arriving at ``dart`` turns along a smoothing arc of ``s``."""
    x, k = divmod(dart, 4)
    corner = k if sign > 0 else (k - 1) % 4
    return corner in smoothing_corners(d, x, s[x])


def _orientation_signs(d: LinkDiagram, s: State) -> tuple[int, ...]:
    inv = d.involution
    sign = [0] * d.n_crossings
    sign[0] = 1
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for k in range(4):
            a = 4 * x + k
            b = inv[a]
            y = b // 4
            here = _in_type_is_s(d, s, a, sign[x])
            options = [
                t for t in (1, -1)
                if (y != x or t == sign[x]) and _in_type_is_s(d, s, b, t) != here
            ]
            if sign[y]:
                if sign[y] not in options:
                    raise DiagramError("no coherent orientation: diagram is not planar")
            else:
                if len(options) != 1:
                    raise DiagramError("orientation constraint is degenerate")
                sign[y] = options[0]
                queue.append(y)
    return tuple(sign)


def build_generalized(d: LinkDiagram, s: State) -> TuraevSurface:
    _require_accepted(d)
    _check_state(d, s)
    sign = _orientation_signs(d, s)
    n = d.n_darts
    rot = []
    for a in range(n):
        x, k = divmod(a, 4)
        rot.append(4 * x + (k + sign[x]) % 4)
    m = CombinatorialMap(tuple(rot), d.involution)
    face_labels = [""] * n
    for orb in m.faces:
        # the corner entered from inv(orb[-1]) into orb[0]
        arriving = d.involution[orb[-1]]
        x = arriving // 4
        tag = GREEN if _in_type_is_s(d, s, arriving, sign[x]) else BROWN
        for a in orb:
            face_labels[a] = tag
    passes = []
    for a in range(n):
        p = d.pass_of(a)
        passes.append(p if sign[a // 4] > 0 else (OVER if p == UNDER else UNDER))
    surface = CellulatedSurface(
        m,
        ("crossing",) * n,
        ("D",) * n,
        tuple(face_labels),
        tuple(passes),
    )
    return TuraevSurface(d, s, sign, surface)


def build_turaev(d: LinkDiagram) -> TuraevSurface:
    return build_generalized(d, State.all_a(d.n_crossings))


def turaev_genus(d: LinkDiagram) -> int:
    return build_turaev(d).genus


def genus_from_counts(d: LinkDiagram, s: State) -> int:
    twice = d.n_crossings + 2 - count_circles(d, s) - count_circles(d, s.dual())
    return twice // 2


def passes_via_switched_diagram(t: TuraevSurface) -> tuple[str, ...]:
    """Pass labels of ``D`` on the surface, computed through the auxiliary diagram.

    Reverse the crossings where ``s`` picks B so that ``s`` becomes the all-A
    state, read off the alternating labelling of that diagram on the surface,
    then reverse the same crossings back.
    """
    d, s = t.diagram, t.state
    flipped = set(s.b_crossings())
    aux = switch_crossings(d, flipped)
    aux_t = build_generalized(aux, State.all_a(d.n_crossings))
    out = []
    for a in range(d.n_darts):
        p = aux_t.pass_on_surface(a)
        out.append((OVER if p == UNDER else UNDER) if a // 4 in flipped else p)
    return tuple(out)


def is_alternating_on_surface(t: TuraevSurface) -> bool:
    labels = t.surface.dart_labels
    return all(labels[a] != labels[b] for a, b in t.map.edges)


def min_genus_over_states(
    d: LinkDiagram, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[int, State]:
    """Least generalized Turaev genus over all states, with the lexicographically least witness."""
    best: tuple[int, State] | None = None
    for s in enumerate_states(d, cap):
        g = genus_from_counts(d, s)
        if best is None or g < best[0]:
            best = (g, s)
    assert best is not None
    return best


def genus_sweep(d: LinkDiagram, cap: int = DEFAULT_ENUMERATION_CAP) -> list[dict]:
    rows = []
    for s in enumerate_states(d, cap):
        ns, nd = count_circles(d, s), count_circles(d, s.dual())
        rows.append({
            "state": str(s),
            "circles": ns,
            "dualCircles": nd,
            "genus": (d.n_crossings + 2 - ns - nd) // 2,
        })
    return rows


def swap_face_tags(t: TuraevSurface) -> CellulatedSurface:
    s = t.surface
    swapped = tuple(BROWN if f == GREEN else GREEN for f in s.face_labels)
    return CellulatedSurface(s.map, s.vertex_labels, s.edge_labels, swapped, s.dart_labels)


def dual_surfaces_isomorphic(d: LinkDiagram, s: State) -> bool:
    t1 = build_generalized(d, s)
    t2 = build_generalized(d, s.dual())
    return is_isomorphic(t1.surface, swap_face_tags(t2))
