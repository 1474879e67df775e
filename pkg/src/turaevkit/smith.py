"""Smith normal form over the integers with exact (Python int) arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``D`` diagonal; ``divisors`` are its nonzero entries."""

    divisors: tuple[int, ...]
    shape: tuple[int, int]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.divisors)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[int]], n_cols: int | None = None) -> SmithForm:
    """Reduce ``matrix`` by unimodular row and column operations.

    The pivot is always the nonzero entry of least magnitude in the remaining
    block, ties broken by (row, column).  ``n_cols`` is needed only for
    matrices with zero rows.
    """
    a = [[int(v) for v in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else (n_cols or 0)
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        ra, rs = a[dst], a[src]
        for k in range(n):
            if rs[k]:
                ra[k] += q * rs[k]
        ua, us = u[dst], u[src]
        for k in range(m):
            if us[k]:
                ua[k] += q * us[k]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        for row in v:
            if row[src]:
                row[dst] += q * row[src]

    divisors = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            small = None
            for i in range(t + 1, m):
                x = a[i][t]
                if x and (small is None or abs(x) < small[0]):
                    small = (abs(x), i, "row")
            for j in range(t + 1, n):
                x = a[t][j]
                if x and (small is None or abs(x) < small[0]):
                    small = (abs(x), j, "col")
            if small is not None:
                if small[2] == "row":
                    swap_rows(t, small[1])
                else:
                    swap_cols(t, small[1])
                continue
            bad = None
            for i in range(t + 1, m):
                if any(a[i][j] % p for j in range(t + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        divisors.append(a[t][t])
        t += 1
    return SmithForm(
        divisors=tuple(divisors),
        shape=(m, n),
        left=tuple(tuple(r) for r in u),
        right=tuple(tuple(r) for r in v),
    )
