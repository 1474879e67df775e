from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from corpus import CURL_PD, TREFOIL_PD, curl, switched_trefoil, trefoil
from oracles import circle_count
from turaevkit.diagram import random_diagram, switch_crossings
from turaevkit.states import (
    State,
    StateError,
    count_circles,
    dual,
    enumerate_states,
    extreme_states,
    trace_circles,
)

diagrams = st.builds(random_diagram, st.integers(0, 10_000), st.integers(1, 8))


@st.composite
def diagram_and_state(draw):
    d = draw(diagrams)
    letters = draw(st.text("AB", min_size=d.n_crossings, max_size=d.n_crossings))
    return d, State(letters)


def test_extreme_states():
    assert extreme_states(trefoil()) == (State("AAA"), State("BBB"))
    assert extreme_states(curl()) == (State("A"), State("B"))
    for d in (trefoil(), curl()):
        a, b = extreme_states(d)
        assert dual(a) == b


def test_dual():
    assert dual(State("AAB")) == State("BBA")
    assert dual(dual(State("ABBA"))) == State("ABBA")


def test_state_parsing():
    assert str(State("aba")) == "ABA"
    with pytest.raises(StateError):
        State("AXB")
    with pytest.raises(StateError):
        count_circles(trefoil(), State("AA"))


def test_trefoil_counts_match_oracle():
    a, b = extreme_states(trefoil())
    counts = (count_circles(trefoil(), a), count_circles(trefoil(), b))
    assert counts == (circle_count(TREFOIL_PD, "AAA"), circle_count(TREFOIL_PD, "BBB"))
    assert sorted(counts) == [2, 3]
    assert counts == (2, 3)


def test_curl_counts():
    counts = [count_circles(curl(), s) for s in extreme_states(curl())]
    assert sorted(counts) == [1, 2]
    assert counts == [circle_count(CURL_PD, "A"), circle_count(CURL_PD, "B")]


def test_switched_trefoil_counts():
    d = switched_trefoil()
    counts = [count_circles(d, s) for s in extreme_states(d)]
    assert counts == [1, 2]
    # the oracle reads the same diagram from its PD text
    assert counts == [circle_count(d.to_pd(), "AAA"), circle_count(d.to_pd(), "BBB")]


def test_enumeration():
    assert list(enumerate_states(curl())) == [State("A"), State("B")]
    states = list(enumerate_states(trefoil()))
    assert len(states) == 8 and states[0] == State("AAA") and len(set(states)) == 8
    assert [str(s) for s in states] == sorted(str(s) for s in states)
    pairs = {frozenset((s, s.dual())) for s in states}
    assert len(pairs) == 4
    with pytest.raises(StateError):
        list(enumerate_states(trefoil(), cap=2))


def test_circles_ordered_by_least_dart():
    circles = trace_circles(trefoil(), State("ABA")).circles
    assert [min(c) for c in circles] == sorted(min(c) for c in circles)


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_matches_oracle(pair):
    d, s = pair
    assert count_circles(d, s) == circle_count(d.to_pd(), str(s))


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_edge_coverage(pair):
    d, s = pair
    sc = trace_circles(d, s)
    covered = sorted(a for c in sc.circles for a in c)
    assert covered == list(range(d.n_darts))
    for a, b in d.edges():
        assert sc.circle_of_dart[a] == sc.circle_of_dart[b]
    assert len(sc) >= 1


@settings(max_examples=200, deadline=None)
@given(diagram_and_state(), st.data())
def test_single_flip_changes_count_by_one(pair, data):
    d, s = pair
    x = data.draw(st.integers(0, d.n_crossings - 1))
    flipped = State(s.choices[:x] + ("B" if s[x] == "A" else "A") + s.choices[x + 1:])
    assert abs(count_circles(d, flipped) - count_circles(d, s)) == 1


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_parity_and_bound(pair):
    d, s = pair
    total = count_circles(d, s) + count_circles(d, s.dual())
    assert (d.n_crossings + total) % 2 == 0
    assert total <= d.n_crossings + 2


@settings(max_examples=200, deadline=None)
@given(diagram_and_state())
def test_switching_all_exchanges_smoothings(pair):
    d, s = pair
    mirror = switch_crossings(d, range(d.n_crossings))
    assert trace_circles(mirror, s.dual()).circles == trace_circles(d, s).circles
