"""Closed oriented surfaces as combinatorial maps.

A map is a pair of permutations of the darts: the vertex rotation and a
fixed-point-free edge involution.  Faces are the orbits of
``rotation[involution[d]]``; the face holding ``d`` lies to the right of ``d``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .smith import smith_normal_form


class SurfaceError(ValueError):
    pass


def _orbits(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for d in range(len(perm)):
        if seen[d]:
            continue
        orbit = []
        e = d
        while not seen[e]:
            seen[e] = True
            orbit.append(e)
            e = perm[e]
        out.append(tuple(orbit))
    return tuple(out)


def _index(orbits: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    out = [0] * n
    for i, orb in enumerate(orbits):
        for d in orb:
            out[d] = i
    return tuple(out)


@dataclass(frozen=True)
class CombinatorialMap:
    rotation: tuple[int, ...]
    involution: tuple[int, ...]

    def __post_init__(self) -> None:
        rot = tuple(int(v) for v in self.rotation)
        inv = tuple(int(v) for v in self.involution)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "involution", inv)
        n = len(rot)
        if len(inv) != n:
            raise SurfaceError("rotation and involution act on different dart sets")
        if sorted(rot) != list(range(n)):
            raise SurfaceError("rotation is not a permutation")
        for d, e in enumerate(inv):
            if not 0 <= e < n or e == d or inv[e] != d:
                raise SurfaceError("involution must be a fixed-point-free involution")

    @property
    def n_darts(self) -> int:
        return len(self.rotation)

    @cached_property
    def face_permutation(self) -> tuple[int, ...]:
        rot, inv = self.rotation, self.involution
        return tuple(rot[inv[d]] for d in range(len(rot)))

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return _orbits(self.rotation)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return _orbits(self.face_permutation)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        inv = self.involution
        return tuple((d, inv[d]) for d in range(len(inv)) if d < inv[d])

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _index(self.vertices, self.n_darts)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _index(self.faces, self.n_darts)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        return _index(self.edges, self.n_darts)

    def head(self, dart: int) -> int:
        return self.vertex_of[self.involution[dart]]

    def tail(self, dart: int) -> int:
        return self.vertex_of[dart]

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        n = self.n_darts
        comp = [-1] * n
        count = 0
        for d in range(n):
            if comp[d] >= 0:
                continue
            comp[d] = count
            todo = [d]
            while todo:
                e = todo.pop()
                for f in (self.rotation[e], self.involution[e]):
                    if comp[f] < 0:
                        comp[f] = count
                        todo.append(f)
            count += 1
        return tuple(comp)

    def relabel(self, perm: Sequence[int]) -> "CombinatorialMap":
        """Conjugate by the dart bijection ``d -> perm[d]``."""
        n = self.n_darts
        rot = [0] * n
        inv = [0] * n
        for d in range(n):
            rot[perm[d]] = perm[self.rotation[d]]
            inv[perm[d]] = perm[self.involution[d]]
        return CombinatorialMap(tuple(rot), tuple(inv))

    def mirror(self) -> "CombinatorialMap":
        """The same cellulation with the opposite orientation."""
        rot = [0] * self.n_darts
        for d, e in enumerate(self.rotation):
            rot[e] = d
        return CombinatorialMap(tuple(rot), self.involution)


def euler_characteristic(m: CombinatorialMap) -> int:
    return len(m.vertices) - len(m.edges) + len(m.faces)


def components(m: CombinatorialMap) -> int:
    return len(set(m.component_of)) if m.n_darts else 0


def genus(m: CombinatorialMap) -> int:
    if components(m) != 1:
        raise SurfaceError("genus is defined here for connected maps only")
    twice = 2 - euler_characteristic(m)
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def disjoint_union(*maps: CombinatorialMap) -> CombinatorialMap:
    rot: list[int] = []
    inv: list[int] = []
    for m in maps:
        off = len(rot)
        rot.extend(off + d for d in m.rotation)
        inv.extend(off + d for d in m.involution)
    return CombinatorialMap(tuple(rot), tuple(inv))


def map_from_faces(
    faces: Sequence[Sequence[int]],
    involution: Sequence[int],
    root: int = 0,
) -> tuple[CombinatorialMap, tuple[int, ...]]:
    """Glue polygons into an oriented surface.

    Each face is a cyclic list of darts.  Faces may be listed with either
    orientation; they are re-oriented (breadth first from ``root``, which
    keeps its given direction) so that every edge is traversed once in each
    direction.  Returns the map and the sign (+1 kept, -1 reversed) per face.
    """
    n = len(involution)
    inv = list(involution)
    where: dict[int, list[tuple[int, int]]] = {}
    for f, cyc in enumerate(faces):
        for d in cyc:
            where.setdefault(min(d, inv[d]), []).append((f, d))
    for e in range(n):
        if e < inv[e] and len(where.get(e, ())) != 2:
            raise SurfaceError(f"edge {e} is used {len(where.get(e, ()))} times, expected 2")
    sign = [0] * len(faces)
    for start in [root] + list(range(len(faces))):
        if sign[start]:
            continue
        sign[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for d in faces[f]:
                (f1, a), (f2, b) = where[min(d, inv[d])]
                g, mine, theirs = (f2, a, b) if (f1, a) == (f, d) else (f1, b, a)
                # traversals of one edge by two faces must be opposite darts
                want = -sign[f] if mine == theirs else sign[f]
                if sign[g] == 0:
                    sign[g] = want
                    queue.append(g)
                elif sign[g] != want:
                    raise SurfaceError("faces cannot be oriented coherently")
    phi = [-1] * n
    for f, cyc in enumerate(faces):
        k = len(cyc)
        if sign[f] > 0:
            for i in range(k):
                phi[cyc[i]] = cyc[(i + 1) % k]
        else:
            for i in range(k):
                phi[inv[cyc[(i + 1) % k]]] = inv[cyc[i]]
    if -1 in phi:
        raise SurfaceError("faces do not cover every dart exactly once")
    rot = tuple(phi[inv[d]] for d in range(n))
    return CombinatorialMap(rot, tuple(inv)), tuple(sign)


# -- labelled surfaces ---------------------------------------------------------


@dataclass(frozen=True)
class CellulatedSurface:
    """A map with a label on every dart for its vertex, edge and face, plus one free dart label."""

    map: CombinatorialMap
    vertex_labels: tuple[str, ...]
    edge_labels: tuple[str, ...]
    face_labels: tuple[str, ...]
    dart_labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.map.n_darts
        if not self.dart_labels:
            object.__setattr__(self, "dart_labels", ("",) * n)
        for name in ("vertex_labels", "edge_labels", "face_labels", "dart_labels"):
            value = tuple(getattr(self, name))
            object.__setattr__(self, name, value)
            if len(value) != n:
                raise SurfaceError(f"{name} must have one entry per dart")

    def labels_consistent(self) -> bool:
        m = self.map
        for orb in m.vertices:
            if len({self.vertex_labels[d] for d in orb}) != 1:
                return False
        for orb in m.faces:
            if len({self.face_labels[d] for d in orb}) != 1:
                return False
        return all(self.edge_labels[d] == self.edge_labels[e] for d, e in m.edges)

    def dart_key(self, d: int) -> tuple[str, str, str, str]:
        return (self.vertex_labels[d], self.edge_labels[d], self.face_labels[d], self.dart_labels[d])

    def to_json(self) -> dict:
        return {
            "rotation": list(self.map.rotation),
            "involution": list(self.map.involution),
            "vertex": list(self.vertex_labels),
            "edge": list(self.edge_labels),
            "face": list(self.face_labels),
            "dart": list(self.dart_labels),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CellulatedSurface":
        return cls(
            CombinatorialMap(tuple(doc["rotation"]), tuple(doc["involution"])),
            tuple(doc["vertex"]),
            tuple(doc["edge"]),
            tuple(doc["face"]),
            tuple(doc.get("dart", ())),
        )

    @classmethod
    def plain(cls, m: CombinatorialMap) -> "CellulatedSurface":
        blank = ("",) * m.n_darts
        return cls(m, blank, blank, blank, blank)


def _word_from(m: CombinatorialMap, keys: Sequence, root: int, comp_size: int):
    rot, inv = m.rotation, m.involution
    order = {root: 0}
    queue = [root]
    i = 0
    while i < len(queue):
        d = queue[i]
        i += 1
        for e in (rot[d], inv[d]):
            if e not in order:
                order[e] = len(queue)
                queue.append(e)
    assert len(queue) == comp_size
    return tuple((order[rot[d]], order[inv[d]], keys[d]) for d in queue)


def canonical_form(s: CellulatedSurface) -> tuple:
    """A complete isomorphism invariant: least traversal word over candidate roots.

    Roots are restricted to the rarest dart key in each component, a choice
    that is itself invariant under label-preserving relabelling.
    """
    m = s.map
    keys = [s.dart_key(d) for d in range(m.n_darts)]
    comps: dict[int, list[int]] = {}
    for d, c in enumerate(m.component_of):
        comps.setdefault(c, []).append(d)
    forms = []
    for darts in comps.values():
        tally = Counter(keys[d] for d in darts)
        rare = min(tally, key=lambda k: (tally[k], k))
        roots = [d for d in darts if keys[d] == rare]
        forms.append(min(_word_from(m, keys, r, len(darts)) for r in roots))
    return tuple(sorted(forms))


def is_isomorphic(s1: CellulatedSurface, s2: CellulatedSurface) -> bool:
    """Whether an orientation- and label-preserving dart bijection carries s1 to s2."""
    if s1.map.n_darts != s2.map.n_darts:
        return False
    k1 = Counter(s1.dart_key(d) for d in range(s1.map.n_darts))
    k2 = Counter(s2.dart_key(d) for d in range(s2.map.n_darts))
    if k1 != k2:
        return False
    if sorted(len(v) for v in s1.map.vertices) != sorted(len(v) for v in s2.map.vertices):
        return False
    if sorted(len(f) for f in s1.map.faces) != sorted(len(f) for f in s2.map.faces):
        return False
    return canonical_form(s1) == canonical_form(s2)


# -- homology ------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyPresentation:
    """First homology of a closed connected surface, presented through a spanning tree.

    Cycle-space coordinates of a 1-cycle are its coefficients on the edges
    outside the spanning tree; ``transform`` (left factor of the Smith form
    of the face boundaries in those coordinates) maps them to H1 coordinates.
    """

    surface: CellulatedSurface
    cotree_edges: tuple[int, ...]
    divisors: tuple[int, ...]
    transform: tuple[tuple[int, ...], ...]

    @property
    def cycle_rank(self) -> int:
        return len(self.cotree_edges)

    @property
    def rank(self) -> int:
        return self.cycle_rank - len(self.divisors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(x for x in self.divisors if x > 1)

    def chain(self, cycle: Sequence[int]) -> list[int]:
        """Edge coefficients of a closed dart path; raises if it is not closed."""
        m = self.surface.map
        if not cycle:
            return [0] * len(m.edges)
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            if m.head(a) != m.tail(b):
                raise SurfaceError("curve is not a closed edge path")
        vec = [0] * len(m.edges)
        for d in cycle:
            e = m.edge_of[d]
            vec[e] += 1 if m.edges[e][0] == d else -1
        return vec

    def coordinates(self, cycle: Sequence[int]) -> tuple[int, ...]:
        """Full H1 coordinates: torsion part (reduced) followed by the free part."""
        vec = self.chain(cycle)
        z = [vec[e] for e in self.cotree_edges]
        y = [sum(c * v for c, v in zip(row, z)) for row in self.transform]
        r = len(self.divisors)
        tors = [y[i] % self.divisors[i] for i in range(r) if self.divisors[i] > 1]
        return tuple(tors) + tuple(y[r:])

    def free_coordinates(self, cycle: Sequence[int]) -> tuple[int, ...]:
        return self.coordinates(cycle)[len(self.torsion):]

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "cycleRank": self.cycle_rank}


def first_homology(s: CellulatedSurface | CombinatorialMap) -> HomologyPresentation:
    if isinstance(s, CombinatorialMap):
        s = CellulatedSurface.plain(s)
    m = s.map
    if components(m) != 1:
        raise SurfaceError("first_homology expects a connected surface")
    # spanning tree by BFS over vertices
    tree = set()
    seen_v = {m.vertex_of[0]}
    queue = deque([m.vertex_of[0]])
    while queue:
        v = queue.popleft()
        for d in m.vertices[v]:
            w = m.head(d)
            if w not in seen_v:
                seen_v.add(w)
                tree.add(m.edge_of[d])
                queue.append(w)
    cotree = tuple(e for e in range(len(m.edges)) if e not in tree)
    col = {e: i for i, e in enumerate(cotree)}
    boundary = [[0] * len(m.faces) for _ in cotree]
    for f, orb in enumerate(m.faces):
        for d in orb:
            e = m.edge_of[d]
            if e in col:
                boundary[col[e]][f] += 1 if m.edges[e][0] == d else -1
    snf = smith_normal_form(boundary, n_cols=len(m.faces))
    return HomologyPresentation(s, cotree, snf.divisors, snf.left)


def classes_generate(h: HomologyPresentation, curves: Iterable[Sequence[int]]) -> bool:
    """Whether the classes of the given closed edge paths generate H1."""
    rows = len(h.torsion) + h.rank
    if rows == 0:
        for c in curves:
            h.chain(c)
        return True
    cols = [list(h.coordinates(c)) for c in curves]
    for i, t in enumerate(h.torsion):
        col = [0] * rows
        col[i] = t
        cols.append(col)
    if not cols:
        return False
    matrix = [[col[i] for col in cols] for i in range(rows)]
    snf = smith_normal_form(matrix)
    return snf.rank == rows and all(x == 1 for x in snf.divisors)
