"""Shared test helpers: independent oracles and random instance makers.

The oracles here deliberately avoid the package's own kernels.  Minor
containment is re-decided by enumerating set partitions of vertex
subsets, degeneracy by scanning all induced subgraphs, list coloring by
trying the whole list product.  Slow and obviously correct.
"""

from __future__ import annotations

import itertools
import random

from unchoosable import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def adjacency_sets(g: Graph) -> list[set[int]]:
    nbr: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    return nbr


def _connected_block(nbr: list[set[int]], block: list[int]) -> bool:
    todo = [block[0]]
    seen = {block[0]}
    inside = set(block)
    while todo:
        x = todo.pop()
        for y in nbr[x] & inside:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen == inside


def _set_partitions(items: list[int], t: int):
    # every split of items into exactly t nonempty blocks
    if t <= 0 or len(items) < t:
        return
    if t == 1:
        yield [list(items)]
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, t - 1):
        yield [[first]] + part
    for part in _set_partitions(rest, t):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def oracle_has_minor(g: Graph, t: int) -> bool:
    """Reference decision for a K_t minor: try every family of t
    disjoint connected blocks over every vertex subset."""
    if t <= 0:
        raise ValueError("t must be positive")
    if t > g.n:
        return False
    nbr = adjacency_sets(g)
    verts = list(range(g.n))
    for k in range(t, g.n + 1):
        for subset in itertools.combinations(verts, k):
            for part in _set_partitions(list(subset), t):
                if not all(_connected_block(nbr, b) for b in part):
                    continue
                good = True
                for i in range(t):
                    for j in range(i + 1, t):
                        if not any(
                            y in nbr[x] for x in part[i] for y in part[j]
                        ):
                            good = False
                            break
                    if not good:
                        break
                if good:
                    return True
    return False


def oracle_degeneracy(g: Graph) -> int:
    """Degeneracy as the max over induced subgraphs of the min degree."""
    nbr = adjacency_sets(g)
    best = 0
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            inside = set(subset)
            dmin = min(len(nbr[v] & inside) for v in subset)
            best = max(best, dmin)
    return best


def oracle_list_colorable(g: Graph, lists: list[list[int]]) -> bool:
    """Try every assignment in the product of the lists."""
    if any(not row for row in lists):
        return False
    for combo in itertools.product(*lists):
        if all(combo[u] != combo[v] for u, v in g.edges):
            return True
    return False


def random_lists(
    rng: random.Random, n: int, palette: int, max_size: int
) -> list[list[int]]:
    out = []
    for _ in range(n):
        size = rng.randint(1, max_size)
        out.append(sorted(rng.sample(range(1, palette + 1), size)))
    return out
