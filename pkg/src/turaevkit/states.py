"""Kauffman states: smoothing choices, state circles and state enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .diagram import LinkDiagram

A = "A"
B = "B"

# The A-smoothing at a crossing joins slot k to slot k+1 whenever slot k is an
# over-pass (with the B-smoothing taking the other two corners).  Setting this
# to "under" mirrors the convention globally.
A_CORNER_STARTS_AT = "over"

DEFAULT_ENUMERATION_CAP = 20


class StateError(ValueError):
    pass


@dataclass(frozen=True)
class State:
    """One smoothing letter per crossing, e.g. ``State("ABA")``."""

    choices: str

    def __post_init__(self) -> None:
        s = str(self.choices).strip().upper()
        if any(ch not in (A, B) for ch in s):
            raise StateError(f"state must be a string over {{A, B}}: {self.choices!r}")
        object.__setattr__(self, "choices", s)

    def __len__(self) -> int:
        return len(self.choices)

    def __getitem__(self, x: int) -> str:
        return self.choices[x]

    def __str__(self) -> str:
        return self.choices

    def dual(self) -> "State":
        return State(self.choices.translate(str.maketrans("AB", "BA")))

    def b_crossings(self) -> list[int]:
        return [x for x, ch in enumerate(self.choices) if ch == B]

    @classmethod
    def all_a(cls, n: int) -> "State":
        return cls(A * n)

    @classmethod
    def all_b(cls, n: int) -> "State":
        return cls(B * n)


def dual(s: State) -> State:
    return s.dual()


def extreme_states(d: LinkDiagram) -> tuple[State, State]:
    return State.all_a(d.n_crossings), State.all_b(d.n_crossings)


def smoothing_corners(d: LinkDiagram, x: int, choice: str) -> tuple[int, int]:
    """Corner indices ``k`` (corner = slots ``k, k+1``) joined by the smoothing at ``x``."""
    first_over = d.passes[x][0] == "over"
    a_starts_even = first_over == (A_CORNER_STARTS_AT == "over")
    even = a_starts_even == (choice == A)
    return (0, 2) if even else (1, 3)


def smoothing_partner(d: LinkDiagram, dart: int, choice: str) -> int:
    """The dart joined to ``dart`` by the given smoothing at its crossing."""
    x, k = divmod(dart, 4)
    corners = smoothing_corners(d, x, choice)
    if k in corners:
        return 4 * x + (k + 1) % 4
    return 4 * x + (k - 1) % 4


@dataclass(frozen=True)
class StateCircles:
    """State circles as dart cycles ``(d0, inv(d0), d1, inv(d1), ...)``.

    Consecutive pairs are edges; the step from ``inv(d_i)`` to ``d_{i+1}`` is a
    smoothing arc.  Circles are ordered by least dart.
    """

    circles: tuple[tuple[int, ...], ...]
    circle_of_dart: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.circles)

    def circle_of_edge(self, edge: tuple[int, int]) -> int:
        return self.circle_of_dart[edge[0]]


def _check_state(d: LinkDiagram, s: State) -> None:
    if len(s) != d.n_crossings:
        raise StateError(f"state has {len(s)} letters but diagram has {d.n_crossings} crossings")


def trace_circles(d: LinkDiagram, s: State) -> StateCircles:
    _check_state(d, s)
    inv = d.involution
    owner = [-1] * d.n_darts
    circles = []
    for start in range(d.n_darts):
        if owner[start] >= 0:
            continue
        idx = len(circles)
        cyc = []
        a = start
        while owner[a] < 0:
            b = inv[a]
            owner[a] = owner[b] = idx
            cyc.extend((a, b))
            a = smoothing_partner(d, b, s[b // 4])
        circles.append(tuple(cyc))
    return StateCircles(tuple(circles), tuple(owner))


def count_circles(d: LinkDiagram, s: State) -> int:
    return len(trace_circles(d, s).circles)


def enumerate_states(d: LinkDiagram, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[State]:
    """All ``2^c`` states in lexicographic order (A before B, crossing 0 first)."""
    c = d.n_crossings
    if c > cap:
        raise StateError(f"{c} crossings exceeds the enumeration cap of {cap}")
    for letters in product((A, B), repeat=c):
        yield State("".join(letters))
