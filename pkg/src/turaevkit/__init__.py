"""Turaev surfaces and link-adapted Heegaard diagrams in exact combinatorics."""

from __future__ import annotations

from .diagram import (
    DiagramError,
    LinkDiagram,
    checkerboard,
    edge_alternation,
    load_diagram,
    parse_pd,
    random_diagram,
    switch_crossings,
    validate,
)
from .heegaard import (
    LinkAdaptedHeegaardDiagram,
    SurgeryError,
    VerificationReport,
    attaching_circles_generate_h1,
    build_from_diagram,
    build_heegaard,
    surgery_to_sphere,
    verify,
)
from .states import State, count_circles, dual, enumerate_states, extreme_states, trace_circles
from .surface import (
    CellulatedSurface,
    CombinatorialMap,
    classes_generate,
    first_homology,
    genus,
    is_isomorphic,
)
from .turaev import (
    TuraevSurface,
    build_generalized,
    build_turaev,
    is_alternating_on_surface,
    min_genus_over_states,
    turaev_genus,
)

__version__ = "0.1.0"

__all__ = [
    "CellulatedSurface",
    "CombinatorialMap",
    "DiagramError",
    "LinkAdaptedHeegaardDiagram",
    "LinkDiagram",
    "State",
    "SurgeryError",
    "TuraevSurface",
    "VerificationReport",
    "attaching_circles_generate_h1",
    "build_from_diagram",
    "build_generalized",
    "build_heegaard",
    "build_turaev",
    "checkerboard",
    "classes_generate",
    "count_circles",
    "dual",
    "edge_alternation",
    "enumerate_states",
    "extreme_states",
    "first_homology",
    "genus",
    "is_alternating_on_surface",
    "is_isomorphic",
    "load_diagram",
    "min_genus_over_states",
    "parse_pd",
    "random_diagram",
    "surgery_to_sphere",
    "switch_crossings",
    "trace_circles",
    "turaev_genus",
    "validate",
    "verify",
]
