"""Shared diagrams and corpora for the test suite."""

from __future__ import annotations

from functools import lru_cache

from turaevkit.diagram import LinkDiagram, edge_alternation, parse_pd, random_diagram, switch_crossings

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
CURL_PD = "X(1,2,2,1)"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF_PD = "X(4,1,3,2) X(2,3,1,4)"
NONPLANAR_PD = "X(3,7,6,2) X(2,3,4,4) X(6,8,1,5) X(1,7,8,5)"

# curated alternating codes (standard table codes)
ALTERNATING_PDS = [
    TREFOIL_PD,
    FIGURE_EIGHT_PD,
    HOPF_PD,
    "X(1,5,2,4) X(3,9,4,8) X(5,1,6,10) X(7,3,8,2) X(9,7,10,6)",
    "X(2,8,3,7) X(4,10,5,9) X(6,2,7,1) X(8,4,9,3) X(10,6,1,5)",
    "X(1,4,2,5) X(5,10,6,11) X(3,9,4,8) X(9,3,10,2) X(7,12,8,1) X(11,6,12,7)",
]


def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL_PD)


def switched_trefoil() -> LinkDiagram:
    return switch_crossings(trefoil(), [2])


def curl() -> LinkDiagram:
    return parse_pd(CURL_PD)


def is_alternating(d: LinkDiagram) -> bool:
    return edge_alternation(d).is_alternating


@lru_cache(maxsize=None)
def random_corpus(count: int, c_max: int, base_seed: int = 0) -> tuple[LinkDiagram, ...]:
    """``count`` diagrams cycling through crossing numbers 1..c_max."""
    return tuple(random_diagram(base_seed + i, 1 + i % c_max) for i in range(count))


@lru_cache(maxsize=None)
def alternating_corpus(per_size: int = 5, c_max: int = 10) -> tuple[LinkDiagram, ...]:
    """Curated alternating codes plus generator output that happens to alternate.

    For each crossing number the generator is scanned by seed until
    ``per_size`` distinct alternating diagrams turn up.
    """
    out = [parse_pd(pd) for pd in ALTERNATING_PDS]
    seen = {d.to_pd() for d in out}
    for c in range(1, c_max + 1):
        found = 0
        seed = 0
        while found < per_size and seed < 200_000:
            d = random_diagram(seed, c)
            seed += 1
            if is_alternating(d) and d.to_pd() not in seen:
                seen.add(d.to_pd())
                out.append(d)
                found += 1
    return tuple(out)


@lru_cache(maxsize=None)
def duality_corpus() -> tuple[LinkDiagram, ...]:
    """Twenty diagrams with at most six crossings."""
    fixed = [trefoil(), switched_trefoil(), curl(), parse_pd(FIGURE_EIGHT_PD), parse_pd(HOPF_PD)]
    rest = [random_diagram(500 + i, 2 + i % 5) for i in range(20 - len(fixed))]
    return tuple(fixed + rest)
