"""Independent reference computations used to cross-check the library.

These work directly on PD edge labels and never touch the dart machinery.
"""

from __future__ import annotations

import re


def pd_records(text: str) -> list[tuple[int, int, int, int]]:
    return [tuple(map(int, m)) for m in re.findall(r"X\((\d+),(\d+),(\d+),(\d+)\)", text.replace(" ", ""))]


def circle_count(pd_text: str, state: str) -> int:
    """Count state circles by union-find on edge labels.

    In a record X(a,b,c,d) the A-smoothing joins a with d and b with c; the
    B-smoothing joins a with b and c with d.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    records = pd_records(pd_text)
    for (a, b, c, d), ch in zip(records, state):
        if ch == "A":
            union(a, d)
            union(b, c)
        else:
            union(a, b)
            union(c, d)
    return len({find(x) for r in records for x in r})


def euler_faces(pd_text: str) -> int:
    """Faces forced by planarity for a connected code: F = V + 2."""
    return len(pd_records(pd_text)) + 2
