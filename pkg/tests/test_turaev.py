from __future__ import annotations

from hypothesis import given, settings, strategies as st

from corpus import alternating_corpus, curl, is_alternating, switched_trefoil, trefoil
from turaevkit.diagram import alternating_version, parse_pd, random_diagram, switch_crossings
from turaevkit.states import State, count_circles, trace_circles
from turaevkit.surface import genus
from turaevkit.turaev import (
    BROWN,
    GREEN,
    build_generalized,
    dual_surfaces_isomorphic,
    genus_from_counts,
    genus_sweep,
    is_alternating_on_surface,
    min_genus_over_states,
    passes_via_switched_diagram,
    turaev_genus,
)


@st.composite
def diagram_and_state(draw, c_max=8):
    d = random_diagram(draw(st.integers(0, 10_000)), draw(st.integers(1, c_max)))
    letters = draw(st.text("AB", min_size=d.n_crossings, max_size=d.n_crossings))
    return d, State(letters)


def test_trefoil_surface():
    t = build_generalized(trefoil(), State("AAA"))
    assert t.genus == 0
    assert len(t.map.faces) == 5


def test_switched_trefoil_surface():
    t = build_generalized(switched_trefoil(), State("AAA"))
    assert t.genus == 1
    assert len(t.map.faces) == 3


def test_turaev_genus_values():
    assert turaev_genus(trefoil()) == 0
    assert turaev_genus(switched_trefoil()) == 1
    assert all(turaev_genus(d) == 0 for d in alternating_corpus(2, 6))


def test_min_genus():
    assert min_genus_over_states(trefoil()) == (0, State("AAA"))
    assert min_genus_over_states(curl()) == (0, State("A"))
    g, witness = min_genus_over_states(switched_trefoil())
    assert g == 0
    # flipping the reversed crossing's smoothing undoes the switch
    assert witness == State("AAB")


def test_alternation_examples():
    assert is_alternating_on_surface(build_generalized(trefoil(), State("AAA")))
    assert is_alternating_on_surface(build_generalized(trefoil(), State("BBB")))
    assert not is_alternating_on_surface(build_generalized(trefoil(), State("AAB")))


def test_sweep_rows():
    rows = genus_sweep(trefoil())
    assert len(rows) == 8
    assert rows[0] == {"state": "AAA", "circles": 2, "dualCircles": 3, "genus": 0}


def test_dual_surfaces_swap_tags():
    assert dual_surfaces_isomorphic(switched_trefoil(), State("ABA"))


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_genus_formula(pair):
    d, s = pair
    t = build_generalized(d, s)
    assert genus(t.map) == genus_from_counts(d, s)
    assert 2 * t.genus == d.n_crossings + 2 - count_circles(d, s) - count_circles(d, s.dual())


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_faces_are_state_circles(pair):
    d, s = pair
    t = build_generalized(d, s)
    inv = d.involution

    def edges(darts):
        return frozenset(min(a, inv[a]) for a in darts)

    faces = sorted((t.surface.face_labels[f[0]], sorted(edges(f))) for f in t.map.faces)
    expected = [(GREEN, sorted(edges(c))) for c in trace_circles(d, s).circles]
    expected += [(BROWN, sorted(edges(c))) for c in trace_circles(d, s.dual()).circles]
    assert faces == sorted(expected)
    for orb in t.map.vertices:
        tags = []
        for a in orb:
            f = t.map.face_of[t.map.rotation[a]]
            tags.append(t.surface.face_labels[t.map.faces[f][0]])
        assert all(x != y for x, y in zip(tags, tags[1:] + tags[:1]))


@settings(max_examples=150, deadline=None)
@given(diagram_and_state())
def test_duality(pair):
    d, s = pair
    assert dual_surfaces_isomorphic(d, s)


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_alternation_characterization(pair):
    d, s = pair
    extreme = str(s) in ("A" * len(s), "B" * len(s))
    assert is_alternating_on_surface(build_generalized(d, s)) == extreme


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_pass_labels_agree_with_switch_rule(pair):
    d, s = pair
    t = build_generalized(d, s)
    assert passes_via_switched_diagram(t) == t.surface.dart_labels


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 10))
def test_alternating_implies_genus_zero(seed, c):
    d = random_diagram(seed, c)
    if is_alternating(d):
        assert turaev_genus(d) == 0
    assert turaev_genus(alternating_version(d)) == 0


def test_genus_zero_does_not_force_alternation():
    # two curls of opposite type joined in a chain: a connected sum of
    # alternating diagrams that is not itself alternating
    d = parse_pd("X(1,2,2,3) X(3,1,4,4)", check=False)
    d = switch_crossings(d, [1])
    assert not is_alternating(d)
    assert turaev_genus(d) == 0
