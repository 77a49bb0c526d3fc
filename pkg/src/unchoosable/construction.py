"""The counterexample family and its verification pipeline.

Three parameter rows, indexed by a case letter and a scale t, each give
a clique order p, a list size q, and a root count r:

    case a: p = 3t+2,  q = 4t,    r = 2t+1,  gadget K_{r x 2}
    case b: p = 3t+1,  q = 4t-2,  r = 2t,    gadget K_{r x 2}
    case c: p = 3t,    q = 4t-3,  r = 2t-1,  gadget K_{1, r x 2}

The gadget is a complete multipartite graph on q+2 vertices whose r
two-vertex classes form a deleted matching v_i w_i.  For a color vector
c in [1,q]^r, give w_i the list [1,q+1] minus {c_i} and every other
vertex the list [1,q]; coloring each v_i with c_i then leaves no proper
completion (q+2 vertices, q+1 colors, and the only non-adjacent pairs
are the matched ones).  Pasting one gadget copy per vector onto the
shared root clique v_1..v_r produces a graph that is K_p-minor-free,
q-degenerate, and not q-choosable.

Verification runs in two modes.  Direct mode materializes the graph and
asks the solvers.  Compositional mode never builds the graph: it checks
the gadget exhaustively for a K_p minor, checks the gluing set is a
clique (so pasting cannot create new clique minors), and checks every
color vector blocked, optionally collapsing vectors into equality
pattern classes since blockedness only depends on which positions of c
coincide.  Both modes emit JSON certificates.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ConstructionRefuted,
    InvalidArgumentError,
    ResourceLimitError,
)
from .graphs import (
    Graph,
    degeneracy,
    k_1_r_times_2,
    k_r_times_2,
    matching_pairs,
)
from .listcolor import ListAssignment, l_colorable
from .minors import has_clique_minor

VERTEX_CAP = 100_000
DIRECT_MINOR_LIMIT = 12

CASES = ("a", "b", "c")


@dataclass(frozen=True)
class ConstructionParams:
    case: str
    t: int
    p: int
    q: int
    r: int
    gadget_kind: str  # "K_{rx2}" or "K_{1,rx2}"


def params_for(case: str, t: int) -> ConstructionParams:
    """Parameter row for a case letter and scale t >= 1."""
    if case not in CASES:
        raise InvalidArgumentError(f"case must be one of a, b, c, got {case!r}")
    if t < 1:
        raise InvalidArgumentError(f"scale t must be >= 1, got {t}")
    if case == "a":
        p, q, r, kind = 3 * t + 2, 4 * t, 2 * t + 1, "K_{rx2}"
        assert (3 * r) // 2 + 1 == p
    elif case == "b":
        p, q, r, kind = 3 * t + 1, 4 * t - 2, 2 * t, "K_{rx2}"
        assert (3 * r) // 2 + 1 == p
    else:
        p, q, r, kind = 3 * t, 4 * t - 3, 2 * t - 1, "K_{1,rx2}"
        assert (3 * r) // 2 + 2 == p
    return ConstructionParams(case=case, t=t, p=p, q=q, r=r, gadget_kind=kind)


@dataclass(frozen=True)
class GadgetTemplate:
    """One gadget copy before any lists are attached.

    root_clique holds the v_i ids, pairs the deleted matching (v_i, w_i),
    extra the id of the lone odd vertex in case c (None otherwise).
    """

    graph: Graph
    pairs: tuple[tuple[int, int], ...]
    root_clique: tuple[int, ...]
    extra: int | None


def gadget_template(params: ConstructionParams) -> GadgetTemplate:
    if params.gadget_kind == "K_{rx2}":
        g = k_r_times_2(params.r)
        extra = None
    else:
        g = k_1_r_times_2(params.r)
        extra = 2 * params.r
    pairs = matching_pairs(g)
    roots = tuple(v for v, _ in pairs)
    assert g.n == params.q + 2
    assert g.is_clique(roots)
    return GadgetTemplate(graph=g, pairs=pairs, root_clique=roots, extra=extra)


def check_vector(params: ConstructionParams, c: Sequence[int]) -> tuple[int, ...]:
    vec = tuple(int(x) for x in c)
    if len(vec) != params.r:
        raise InvalidArgumentError(
            f"color vector must have length r={params.r}, got {len(vec)}"
        )
    for x in vec:
        if not (1 <= x <= params.q):
            raise InvalidArgumentError(f"vector entry {x} outside [1,{params.q}]")
    return vec


def vector_is_proper(c: Sequence[int]) -> bool:
    """The roots are pairwise adjacent, so a vector is realizable as a
    proper root coloring exactly when its entries are distinct."""
    return len(set(c)) == len(c)


def gadget_lists(params: ConstructionParams, c: Sequence[int]) -> ListAssignment:
    """Lists over the template: w_i avoids c_i within [1,q+1], every
    other vertex gets [1,q]."""
    vec = check_vector(params, c)
    tpl = gadget_template(params)
    q = params.q
    full = list(range(1, q + 1))
    rows: list[list[int]] = [full] * tpl.graph.n
    for (v, w), ci in zip(tpl.pairs, vec):
        rows[w] = [x for x in range(1, q + 2) if x != ci]
    return ListAssignment.from_lists(q + 1, rows)


def gadget_blocked_detail(params: ConstructionParams, c: Sequence[int]) -> dict:
    """Decide whether the gadget copy for vector c shuts out the root
    coloring c.  Vectors repeating a color on the (pairwise adjacent)
    roots can never arise from a proper coloring and are vacuously
    blocked, reported as status improper-root without running the
    solver."""
    vec = check_vector(params, c)
    if not vector_is_proper(vec):
        return {"vector": list(vec), "status": "improper-root", "blocked": True}
    tpl = gadget_template(params)
    la = gadget_lists(params, vec)
    pin = {v: ci for (v, _), ci in zip(tpl.pairs, vec)}
    res = l_colorable(tpl.graph, la, precoloring=pin)
    return {
        "vector": list(vec),
        "status": "blocked" if not res.colorable else "completable",
        "blocked": not res.colorable,
        "backtracks": res.backtracks,
    }


def gadget_blocked(params: ConstructionParams, c: Sequence[int]) -> bool:
    return gadget_blocked_detail(params, c)["blocked"]


@dataclass(frozen=True)
class PatternClass:
    """Equality pattern of a color vector: a set partition of the r
    positions, carried by its smallest-colors representative."""

    representative: tuple[int, ...]
    size: int


def color_pattern_classes(params: ConstructionParams) -> list[PatternClass]:
    """One representative per equality pattern, sizes summing to q^r.

    Patterns are restricted growth strings: position 0 gets color 1 and
    each later position either reuses an earlier color or opens the next
    one.  A pattern with k distinct colors covers q(q-1)...(q-k+1)
    vectors; patterns needing more than q colors cover none and are
    dropped."""
    q, r = params.q, params.r
    out: list[PatternClass] = []

    def grow(rgs: list[int], used: int) -> None:
        if len(rgs) == r:
            if used <= q:
                size = 1
                for i in range(used):
                    size *= q - i
                out.append(PatternClass(tuple(rgs), size))
            return
        for k in range(1, used + 2):
            rgs.append(k)
            grow(rgs, max(used, k))
            rgs.pop()

    grow([], 0)
    return out


@dataclass(frozen=True)
class ConstructionStats:
    params: ConstructionParams
    n_vertices: int
    n_edges: int
    n_gadgets: int
    gadget_vertices: int
    gadget_edges: int

    def manifest(self, mode: str) -> dict:
        p = self.params
        return {
            "case": p.case,
            "t": p.t,
            "p": p.p,
            "q": p.q,
            "r": p.r,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "n_gadgets": self.n_gadgets,
            "mode": mode,
        }


def build_stats(params: ConstructionParams) -> ConstructionStats:
    """Counts for the pasted graph, pure arithmetic: each of the q^r
    copies contributes q+2-r fresh vertices and the gadget's non-root
    edges; the root clique is shared."""
    q, r = params.q, params.r
    copies = q**r
    gv = q + 2
    ge = 2 * r * (r - 1) if params.gadget_kind == "K_{rx2}" else 2 * r * r
    root_edges = r * (r - 1) // 2
    return ConstructionStats(
        params=params,
        n_vertices=r + copies * (gv - r),
        n_edges=copies * (ge - root_edges) + root_edges,
        n_gadgets=copies,
        gadget_vertices=gv,
        gadget_edges=ge,
    )


def _copy_base(params: ConstructionParams, k: int) -> int:
    return params.r + k * (params.q + 2 - params.r)


def build(
    params: ConstructionParams, vertex_cap: int = VERTEX_CAP
) -> tuple[Graph, ListAssignment]:
    """Materialize the pasted graph and its list assignment.

    Ids 0..r-1 are the shared roots with list [1,q].  Copy k, ordered
    lexicographically by its color vector, owns ids base..base+(q+1-r)
    with base = r + k(q+2-r): the w_i in pair order, then the extra
    vertex in case c.  Raises ResourceLimitError above the vertex cap;
    use build_stats for the counts instead."""
    stats = build_stats(params)
    if stats.n_vertices > vertex_cap:
        raise ResourceLimitError(
            f"full build needs {stats.n_vertices} vertices, cap is {vertex_cap}; "
            "use stats-only"
        )
    q, r = params.q, params.r
    tpl = gadget_template(params)
    root_of = {v: i for i, (v, _) in enumerate(tpl.pairs)}
    w_slot = {w: i for i, (_, w) in enumerate(tpl.pairs)}

    slot_of = dict(w_slot)
    if tpl.extra is not None:
        slot_of[tpl.extra] = params.r  # extra vertex sits after the w's

    # template edges, expressed as slots relative to a copy base
    copy_edges: list[tuple[int, int]] = []  # both ends local to the copy
    cross_edges: list[tuple[int, int]] = []  # (root id, local slot)
    for u, v in tpl.graph.edges:
        if u in root_of and v in root_of:
            continue  # shared clique, emitted once
        if u in root_of:
            cross_edges.append((root_of[u], slot_of[v]))
        elif v in root_of:
            cross_edges.append((root_of[v], slot_of[u]))
        else:
            copy_edges.append((slot_of[u], slot_of[v]))

    edges: list[tuple[int, int]] = list(
        itertools.combinations(range(r), 2)
    )
    full = list(range(1, q + 1))
    rows: list[list[int]] = [full] * r
    for k, vec in enumerate(itertools.product(range(1, q + 1), repeat=r)):
        base = _copy_base(params, k)
        for root, slot in cross_edges:
            edges.append((root, base + slot))
        for a, b in copy_edges:
            edges.append((base + a, base + b))
        for i, ci in enumerate(vec):
            rows.append([x for x in range(1, q + 2) if x != ci])
        if tpl.extra is not None:
            rows.append(full)
    g = Graph.from_edges(stats.n_vertices, edges)
    la = ListAssignment.from_lists(q + 1, rows)
    assert g.n == stats.n_vertices and g.m == stats.n_edges
    return g, la


# --- verification -----------------------------------------------------------


def verify_minor_free(
    params: ConstructionParams,
    built: Graph | None = None,
    direct_limit: int = DIRECT_MINOR_LIMIT,
    timeout: float | None = None,
) -> dict:
    """Certify the pasted graph has no K_p minor.

    The gadget is searched exhaustively; the gluing set is checked to be
    a clique; pasting minor-free graphs on a shared clique stays
    minor-free, which covers every copy by induction.  When the built
    graph is small enough a direct whole-graph search must agree."""
    tpl = gadget_template(params)
    stats = build_stats(params)
    ans = has_clique_minor(tpl.graph, params.p, timeout=timeout)
    if ans.contains:
        raise ConstructionRefuted(
            f"gadget for case {params.case}, t={params.t} contains a "
            f"K_{params.p} minor",
            witness=ans.witness,
        )
    child = {
        "kind": "exhaustive-negative",
        "scope": "gadget-template",
        "case": params.case,
        "t": params.t,
        "target": params.p,
        "n": tpl.graph.n,
        "method": "exhaustive",
        "nodes": ans.nodes,
    }
    cert = {
        "kind": "compositional-pasting",
        "case": params.case,
        "t": params.t,
        "p": params.p,
        "q": params.q,
        "r": params.r,
        "n_gadgets": stats.n_gadgets,
        "glue": list(tpl.root_clique),
        "glue_is_clique": True,
        "children": [child],
    }
    if built is not None and built.n <= direct_limit:
        direct = has_clique_minor(built, params.p, timeout=timeout)
        if direct.contains:
            raise ConstructionRefuted(
                f"whole graph for case {params.case}, t={params.t} contains "
                f"a K_{params.p} minor",
                witness=direct.witness,
            )
        cert["direct_agreement"] = {
            "ran": True,
            "n": built.n,
            "contains": False,
            "nodes": direct.nodes,
        }
    return cert


def _class_entry(args: tuple[ConstructionParams, tuple[int, ...], int]) -> dict:
    params, rep, size = args
    detail = gadget_blocked_detail(params, rep)
    detail["representative"] = detail.pop("vector")
    detail["size"] = size
    return detail


def verify_not_colorable(
    params: ConstructionParams,
    mode: str = "compositional",
    symmetry: bool | None = None,
    jobs: int | None = None,
    built: tuple[Graph, ListAssignment] | None = None,
) -> dict:
    """Certify the pasted graph is not colorable from its lists.

    Compositional mode checks each color vector's own gadget copy
    blocked (every proper coloring of the roots is some vector, and that
    vector's copy cannot be completed).  With symmetry on, one solver
    run per equality pattern stands for its whole class.  Direct mode
    builds the graph and runs the solver on all of it."""
    if mode not in ("direct", "compositional"):
        raise InvalidArgumentError(f"unknown verification mode {mode!r}")
    q, r = params.q, params.r
    if mode == "direct":
        g, la = built if built is not None else build(params)
        res = l_colorable(g, la)
        if res.colorable:
            raise ConstructionRefuted(
                f"whole graph for case {params.case}, t={params.t} is "
                "colorable from its lists"
            )
        return {
            "kind": "non-colorability",
            "case": params.case,
            "t": params.t,
            "q": q,
            "r": r,
            "mode": "direct",
            "n": g.n,
            "palette_size": la.palette_size,
            "backtracks": res.backtracks,
            "total_vectors": q**r,
        }

    if symmetry is None:
        symmetry = params.t >= 2
    if symmetry:
        classes = [
            (c.representative, c.size) for c in color_pattern_classes(params)
        ]
    else:
        classes = [
            (vec, 1) for vec in itertools.product(range(1, q + 1), repeat=r)
        ]
    tasks = [(params, rep, size) for rep, size in classes]
    if jobs is not None and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_class_entry, tasks, chunksize=16))
    else:
        entries = [_class_entry(task) for task in tasks]
    for entry in entries:
        if not entry["blocked"]:
            raise ConstructionRefuted(
                f"vector {tuple(entry['representative'])} admits a completion "
                f"in case {params.case}, t={params.t}",
                vector=tuple(entry["representative"]),
            )
    covered = sum(e["size"] for e in entries)
    if covered != q**r:
        raise ConstructionRefuted(
            f"pattern classes cover {covered} vectors, expected {q**r}"
        )
    return {
        "kind": "non-colorability",
        "case": params.case,
        "t": params.t,
        "q": q,
        "r": r,
        "mode": "compositional",
        "symmetry": symmetry,
        "palette_size": q + 1,
        "classes": entries,
        "covered": covered,
        "total_vectors": q**r,
    }


def verify_degeneracy(params: ConstructionParams, built: Graph) -> dict:
    """Every list in the construction has size q, so q-degeneracy is
    what makes the family tight against greedy coloring."""
    res = degeneracy(built)
    return {
        "degeneracy": res.degeneracy,
        "bound": params.q,
        "ok": res.degeneracy <= params.q,
    }


def verify_construction(
    params: ConstructionParams,
    mode: str = "compositional",
    symmetry: bool | None = None,
    jobs: int | None = None,
    vertex_cap: int = VERTEX_CAP,
) -> dict:
    """Full pipeline: minor-freeness plus non-colorability, bundled with
    the instance manifest.  Direct mode materializes the graph (subject
    to the vertex cap) and adds the degeneracy check."""
    built = build(params, vertex_cap=vertex_cap) if mode == "direct" else None
    g = built[0] if built else None
    minor_cert = verify_minor_free(params, built=g)
    color_cert = verify_not_colorable(
        params, mode=mode, symmetry=symmetry, jobs=jobs, built=built
    )
    stats = build_stats(params)
    bundle = {
        "kind": "construction-verified",
        "manifest": stats.manifest("full" if built else "stats-only"),
        "children": [minor_cert, color_cert],
    }
    if g is not None:
        bundle["degeneracy"] = verify_degeneracy(params, g)
    return bundle


def lower_bound_table() -> dict[int, dict]:
    """Choice-number lower bounds by forbidden clique order p in [3,11].

    Each p is hit by exactly one table row (p mod 3 selects the case),
    and the witness instance is not q-choosable, so the choice number of
    K_p-minor-free graphs is at least q+1."""
    rows: dict[int, dict] = {}
    for p in range(3, 12):
        if p % 3 == 0:
            case, t = "c", p // 3
        elif p % 3 == 1:
            case, t = "b", (p - 1) // 3
        else:
            case, t = "a", (p - 2) // 3
        params = params_for(case, t)
        assert params.p == p
        rows[p] = {
            "p": p,
            "lower_bound": params.q + 1,
            "case": case,
            "t": t,
            "q": params.q,
            "r": params.r,
        }
    return rows
