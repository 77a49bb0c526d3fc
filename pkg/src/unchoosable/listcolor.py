"""List-coloring decisions on small graphs.

A list assignment gives every vertex a finite set of allowed colors.
The graph is L-colorable when a proper coloring exists that draws each
vertex's color from its own list.  The backtracking solver carries
per-vertex domains as bitmasks (color c lives at bit c-1), picks the
smallest remaining domain first, forward-checks neighbors, and splits
the uncolored subgraph into connected components so independent parts
never multiply.  All domain edits go through one global trail so a
failing component rolls back its siblings' work too.

`exhaustive_l_colorable` re-decides the same question by enumerating the
full product of the lists; it exists to cross-check the solver and is
capped, not clever.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidArgumentError, PreconditionError, ResourceLimitError
from .graphs import Graph, _bits

EXHAUSTIVE_CAP = 10**7


@dataclass(frozen=True)
class ListAssignment:
    """Immutable per-vertex color lists over palette [1, palette_size]."""

    palette_size: int
    lists: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(
        cls, palette_size: int, lists: Iterable[Iterable[int]]
    ) -> "ListAssignment":
        if palette_size < 0:
            raise InvalidArgumentError(f"palette size must be >= 0, got {palette_size}")
        rows = []
        for v, row in enumerate(lists):
            colors = sorted(set(int(c) for c in row))
            for c in colors:
                if not (1 <= c <= palette_size):
                    raise InvalidArgumentError(
                        f"vertex {v} lists color {c}, outside [1,{palette_size}]"
                    )
            rows.append(tuple(colors))
        return cls(palette_size=palette_size, lists=tuple(rows))

    @property
    def n(self) -> int:
        return len(self.lists)

    def masks(self) -> list[int]:
        out = []
        for row in self.lists:
            m = 0
            for c in row:
                m |= 1 << (c - 1)
            out.append(m)
        return out

    def to_json_dict(self) -> dict:
        return {
            "palette_size": self.palette_size,
            "lists": {str(v): list(row) for v, row in enumerate(self.lists)},
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "ListAssignment":
        if "palette_size" not in doc or "lists" not in doc:
            raise InvalidArgumentError("list assignment needs palette_size and lists")
        raw = doc["lists"]
        n = len(raw)
        rows: list[list[int]] = [[] for _ in range(n)]
        for key, row in raw.items():
            v = int(key)
            if not (0 <= v < n):
                raise InvalidArgumentError(
                    f"list key {key} outside the contiguous range [0,{n})"
                )
            rows[v] = list(row)
        return cls.from_lists(int(doc["palette_size"]), rows)


@dataclass(frozen=True)
class SolveResult:
    colorable: bool
    coloring: tuple[int, ...] | None
    backtracks: int


def check_coloring(g: Graph, la: ListAssignment, coloring: Iterable[int]) -> bool:
    """True iff `coloring` is proper and drawn from the lists."""
    colors = list(coloring)
    if len(colors) != g.n or la.n != g.n:
        raise InvalidArgumentError(
            f"coloring/list length must match graph order {g.n}"
        )
    for v, c in enumerate(colors):
        if c not in la.lists[v]:
            return False
    for u, w in g.edges:
        if colors[u] == colors[w]:
            return False
    return True


def l_colorable(
    g: Graph,
    la: ListAssignment,
    precoloring: Mapping[int, int] | None = None,
) -> SolveResult:
    """Decide L-colorability; on success the coloring is proper and
    list-respecting.  `precoloring` pins vertices to single colors and
    must agree with their lists."""
    if la.n != g.n:
        raise InvalidArgumentError(
            f"list assignment covers {la.n} vertices, graph has {g.n}"
        )
    domains = la.masks()
    if precoloring:
        for v, c in precoloring.items():
            if not (0 <= v < g.n):
                raise InvalidArgumentError(f"precolored vertex {v} out of range")
            bit = 1 << (c - 1)
            if not domains[v] & bit:
                raise PreconditionError(
                    f"precoloring pins vertex {v} to {c}, not in its list"
                )
            domains[v] = bit

    adj = g.adj
    colored = [False] * g.n
    result = [0] * g.n
    trail: list[tuple[int, int]] = []  # (vertex, previous domain)
    backtracks = 0

    def set_domain(v: int, mask: int) -> None:
        trail.append((v, domains[v]))
        domains[v] = mask

    def rewind(mark: int) -> None:
        while len(trail) > mark:
            v, old = trail.pop()
            domains[v] = old

    def assign(v: int, bit: int) -> bool:
        # returns False if a neighbor domain empties
        colored[v] = True
        result[v] = bit.bit_length()
        for u in _bits(adj[v]):
            if not colored[u] and domains[u] & bit:
                left = domains[u] & ~bit
                if not left:
                    return False
                set_domain(u, left)
        return True

    def components(live_mask: int) -> list[int]:
        comps = []
        rest = live_mask
        while rest:
            comp = rest & -rest
            while True:
                grow = 0
                for v in _bits(comp):
                    grow |= adj[v]
                grow &= rest & ~comp
                if not grow:
                    break
                comp |= grow
            comps.append(comp)
            rest &= ~comp
        return comps

    def solve(live_mask: int) -> bool:
        nonlocal backtracks
        if live_mask == 0:
            return True
        parts = components(live_mask)
        if len(parts) > 1:
            mark = len(trail)
            undo: list[int] = []
            for comp in parts:
                if not solve(comp):
                    for v in undo:
                        colored[v] = False
                    rewind(mark)
                    return False
                undo.extend(_bits(comp))
            return True
        comp = parts[0]
        best, best_count = -1, 1 << 62
        for v in _bits(comp):
            cnt = domains[v].bit_count()
            if cnt < best_count:
                best, best_count = v, cnt
                if cnt <= 1:
                    break
        if best_count == 0:
            return False
        v = best
        rest = comp & ~(1 << v)
        dom = domains[v]
        for c in _bits(dom):
            bit = 1 << c
            mark = len(trail)
            if assign(v, bit) and solve(rest):
                return True
            colored[v] = False
            rewind(mark)
            backtracks += 1
        return False

    live = 0
    for v in range(g.n):
        if domains[v] == 0:
            return SolveResult(False, None, 0)
        live |= 1 << v
    if solve(live):
        return SolveResult(True, tuple(result), backtracks)
    return SolveResult(False, None, backtracks)


def exhaustive_l_colorable(g: Graph, la: ListAssignment) -> SolveResult:
    """Brute-force reference: try every member of the list product."""
    if la.n != g.n:
        raise InvalidArgumentError(
            f"list assignment covers {la.n} vertices, graph has {g.n}"
        )
    total = 1
    for row in la.lists:
        total *= max(len(row), 1)
        if total > EXHAUSTIVE_CAP:
            raise ResourceLimitError(
                f"list product exceeds the exhaustive cap of {EXHAUSTIVE_CAP}"
            )
    if any(not row for row in la.lists):
        return SolveResult(False, None, 0)
    edges = g.edges
    tried = 0
    for combo in itertools.product(*la.lists):
        tried += 1
        if all(combo[u] != combo[w] for u, w in edges):
            return SolveResult(True, tuple(combo), tried - 1)
    return SolveResult(False, None, tried)


def read_list_assignment(path: str) -> ListAssignment:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return ListAssignment.from_json_dict(doc)


def write_list_assignment(la: ListAssignment, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(la.to_json_dict(), fh, indent=2)
        fh.write("\n")
