"""Targeted corruptions of a valid Heegaard diagram, each paired with the check it must trip."""

from __future__ import annotations

from dataclasses import replace

from turaevkit.diagram import OVER, UNDER
from turaevkit.heegaard import (
    ALPHA,
    BETA,
    CROSSING,
    EMPTY,
    LINK,
    TRIPLE,
    LinkAdaptedHeegaardDiagram,
    with_faces_retagged,
)
from turaevkit.turaev import BROWN, GREEN


def _relabel(h: LinkAdaptedHeegaardDiagram, **columns) -> LinkAdaptedHeegaardDiagram:
    return replace(h, surface=replace(h.surface, **columns))


def empty_face_as_link(h):
    return with_faces_retagged(h, h.map.faces.index(h.faces_of_kind(EMPTY)[0]), LINK)


def link_face_as_empty(h):
    return with_faces_retagged(h, h.map.faces.index(h.faces_of_kind(LINK)[0]), EMPTY)


def delete_alpha_circle(h):
    return replace(h, alpha=h.alpha[1:])


def duplicate_beta_circle(h):
    return replace(h, beta=h.beta + h.beta[:1])


def alpha_circle_as_beta(h):
    moved = h.alpha[0]
    edges = list(h.surface.edge_labels)
    for a in moved:
        edges[a] = edges[h.map.involution[a]] = BETA
    return replace(_relabel(h, edge_labels=tuple(edges)), alpha=h.alpha[1:], beta=tuple(sorted(h.beta + (moved,))))


def flip_passes_at_crossing(h):
    passes = list(h.surface.dart_labels)
    for a in h.map.vertices[h.vertices_of_kind(CROSSING)[0]]:
        passes[a] = OVER if passes[a] == UNDER else UNDER
    return _relabel(h, dart_labels=tuple(passes))


def crossing_as_triple(h):
    labels = list(h.surface.vertex_labels)
    for a in h.map.vertices[h.vertices_of_kind(CROSSING)[-1]]:
        labels[a] = TRIPLE
    return _relabel(h, vertex_labels=tuple(labels))


def swap_state_tag_of_face(h):
    tags = list(h.face_state)
    face = h.faces_of_kind(LINK)[0]
    for a in face:
        tags[a] = BROWN if tags[a] == GREEN else GREEN
    return replace(h, face_state=tuple(tags))


def all_faces_swapped(h):
    flip = {EMPTY: LINK, LINK: EMPTY}
    return _relabel(h, face_labels=tuple(flip[x] for x in h.surface.face_labels))


def open_a_circle(h):
    return replace(h, alpha=(h.alpha[0][:-1],) + h.alpha[1:])


def alpha_edges_as_beta_only(h):
    """Relabel the edges of one alpha circle without moving it between the lists."""
    edges = list(h.surface.edge_labels)
    for a in h.alpha[0]:
        edges[a] = edges[h.map.involution[a]] = BETA
    return _relabel(h, edge_labels=tuple(edges))


# (mutation, bullets that must fail; "structural" means rejected before the bullets)
MUTATIONS = [
    (empty_face_as_link, {"B4"}),
    (link_face_as_empty, {"B4"}),
    (delete_alpha_circle, {"B1"}),
    (duplicate_beta_circle, {"B1"}),
    (alpha_circle_as_beta, {"B1"}),
    (flip_passes_at_crossing, {"B2"}),
    (crossing_as_triple, {"B3"}),
    (swap_state_tag_of_face, {"B2"}),
    (all_faces_swapped, {"B4"}),
    (alpha_edges_as_beta_only, {"B1"}),
    (open_a_circle, "structural"),
]
