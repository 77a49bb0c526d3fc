"""Immutable simple graphs, complete multipartite constructors, clique
pasting, and degeneracy orderings.

Vertices are dense 0-based ids.  Edges are stored normalized (u < v,
lexicographically sorted) so that equal graphs compare equal and every
serialization is canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgumentError, PreconditionError

Edge = tuple[int, int]


def _bits(mask: int):
    """Yield the indices of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Immutable and hashable, hence safely shareable across concurrent
    readers.  `labels` holds optional role tags, e.g. 'v'/'w' for the
    endpoints of a deleted matching.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[tuple[int, str], ...] = ()

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Mapping[int, str] | Iterable[tuple[int, str]] | None = None,
    ) -> Graph:
        """Validate, normalize and deduplicate `edges` into a Graph."""
        if n < 0:
            raise InvalidArgumentError(f"vertex count must be >= 0, got {n}")
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u},{v}) out of range [0,{n})")
            norm.add((u, v) if u < v else (v, u))
        lab: tuple[tuple[int, str], ...] = ()
        if labels:
            items = labels.items() if hasattr(labels, "items") else labels
            merged = {int(v): str(tag) for v, tag in items}
            for v in merged:
                if not (0 <= v < n):
                    raise InvalidArgumentError(f"label on unknown vertex {v}")
            lab = tuple(sorted(merged.items()))
        return cls(n=n, edges=tuple(sorted(norm)), labels=lab)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks: bit u of adj[v] is set iff uv is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def label_map(self) -> dict[int, str]:
        return dict(self.labels)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def check_vertices(self, vertices: Sequence[int]) -> tuple[int, ...]:
        """Validate a duplicate-free vertex set; returns it as given."""
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise InvalidArgumentError(f"duplicate vertices in {vs}")
        for v in vs:
            if not (0 <= v < self.n):
                raise InvalidArgumentError(f"vertex {v} out of range [0,{self.n})")
        return vs


@dataclass(frozen=True)
class DegeneracyResult:
    """Outcome of the min-degree elimination process.

    Removing vertices in `elimination_order`, every vertex has at most
    `degeneracy` neighbors among the vertices not yet removed, and some
    suffix of the process attains that bound exactly.
    """

    degeneracy: int
    elimination_order: tuple[int, ...]


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with classes of the given sizes.

    Classes occupy consecutive ids in input order; two vertices are
    adjacent iff they lie in different classes.
    """
    if not part_sizes:
        raise InvalidArgumentError("part_sizes must be non-empty")
    for s in part_sizes:
        if s <= 0:
            raise InvalidArgumentError(f"class sizes must be positive, got {s}")
    offsets = [0]
    for s in part_sizes:
        offsets.append(offsets[-1] + s)
    n = offsets[-1]
    edges = []
    for a, b in itertools.combinations(range(len(part_sizes)), 2):
        for u in range(offsets[a], offsets[a + 1]):
            for v in range(offsets[b], offsets[b + 1]):
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def k_r_times_2(r: int) -> Graph:
    """K_{2r} minus a perfect matching: r classes of size 2.

    The matched pair of class i is (2i, 2i+1), tagged 'v' and 'w'.
    """
    if r <= 0:
        raise InvalidArgumentError(f"r must be positive, got {r}")
    g = complete_multipartite([2] * r)
    labels = {}
    for i in range(r):
        labels[2 * i] = "v"
        labels[2 * i + 1] = "w"
    return Graph(n=g.n, edges=g.edges, labels=tuple(sorted(labels.items())))


def k_1_r_times_2(r: int) -> Graph:
    """K_{2r+1} minus a near-perfect matching: r classes of size 2 plus a
    singleton class (vertex 2r, unlabeled)."""
    if r <= 0:
        raise InvalidArgumentError(f"r must be positive, got {r}")
    g = complete_multipartite([2] * r + [1])
    labels = {}
    for i in range(r):
        labels[2 * i] = "v"
        labels[2 * i + 1] = "w"
    return Graph(n=g.n, edges=g.edges, labels=tuple(sorted(labels.items())))


def matching_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    """The (v_i, w_i) pairs recorded in a graph's labels, by pair order."""
    vs = sorted(v for v, tag in g.labels if tag == "v")
    ws = sorted(v for v, tag in g.labels if tag == "w")
    if len(vs) != len(ws):
        raise InvalidArgumentError("unbalanced v/w labels")
    return tuple(zip(vs, ws))


def paste(g1: Graph, s1: Sequence[int], g2: Graph, s2: Sequence[int]) -> Graph:
    """Identify the clique `s1` of g1 with the clique `s2` of g2 pairwise:
    s1[i] is identified with s2[i].

    g1's vertex ids are preserved; g2's remaining vertices are appended in
    ascending order of their original ids.  The identified set stays a
    clique and both originals survive as induced subgraphs.
    """
    s1 = g1.check_vertices(s1)
    s2 = g2.check_vertices(s2)
    if len(s1) != len(s2):
        raise InvalidArgumentError(f"clique sizes differ: {len(s1)} vs {len(s2)}")
    if not g1.is_clique(s1):
        raise PreconditionError(f"{s1} is not a clique in the first graph")
    if not g2.is_clique(s2):
        raise PreconditionError(f"{s2} is not a clique in the second graph")

    relabel = dict(zip(s2, s1))
    fresh = g1.n
    for v in range(g2.n):
        if v not in relabel:
            relabel[v] = fresh
            fresh += 1

    edges = set(g1.edges)
    for u, v in g2.edges:
        a, b = relabel[u], relabel[v]
        edges.add((a, b) if a < b else (b, a))  # identification cannot create
        # loops (s2 is duplicate-free) and duplicates are merged here

    labels = {relabel[v]: tag for v, tag in g2.labels}
    labels.update(g1.label_map)  # g1 wins on identified vertices
    return Graph.from_edges(fresh, edges, labels or None)


def degeneracy(g: Graph) -> DegeneracyResult:
    """Min-degree elimination with lowest-id tie-break.

    The reported degeneracy equals the largest minimum degree over all
    subgraphs; the elimination order witnesses the upper bound.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    order = []
    d = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if alive[u]), key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        alive[v] = False
        order.append(v)
        for u in _bits(g.adj[v]):
            if alive[u]:
                deg[u] -= 1
    return DegeneracyResult(degeneracy=d, elimination_order=tuple(order))
