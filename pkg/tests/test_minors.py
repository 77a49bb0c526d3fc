import random

import pytest

from unchoosable import (
    BranchSetWitness,
    Graph,
    InvalidArgumentError,
    SearchTimeout,
    check_witness,
    hadwiger_number,
    has_clique_minor,
    k_1_r_times_2,
    k_r_times_2,
)

from conftest import oracle_has_minor, random_graph


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_check_witness_accepts_singletons_on_k4():
    g = complete(4)
    w = BranchSetWitness(((0,), (1,), (2,), (3,)))
    assert check_witness(g, w)


def test_check_witness_rejects_overlap_disconnection_nonadjacency():
    g = cycle(5)
    assert not check_witness(g, BranchSetWitness(((0, 1), (1, 2),)))
    assert not check_witness(g, BranchSetWitness(((0, 2),)))
    assert not check_witness(g, BranchSetWitness(((0,), (2,))))
    assert not check_witness(g, BranchSetWitness(((0,), ())))
    with pytest.raises(InvalidArgumentError):
        check_witness(g, BranchSetWitness(((0,), (7,))))


def test_witness_json_roundtrip():
    w = BranchSetWitness(((0, 1), (2,), (3, 4)))
    doc = w.to_json_dict()
    assert doc["t"] == 3
    assert BranchSetWitness.from_json_dict(doc) == w


def test_k4_minor_in_k4_found_with_singleton_witness():
    ans = has_clique_minor(complete(4), 4)
    assert ans.contains
    assert ans.witness.branch_sets == ((0,), (1,), (2,), (3,))


def test_positive_answers_carry_valid_witnesses():
    rng = random.Random(17)
    for _ in range(100):
        g = random_graph(rng, rng.randint(3, 8), 0.6)
        t = rng.randint(2, 5)
        for strategy in ("branch", "contract"):
            ans = has_clique_minor(g, t, strategy=strategy)
            if ans.contains:
                assert len(ans.witness.branch_sets) == t
                assert check_witness(g, ans.witness)


def test_trees_have_no_k3_minor():
    tree = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert has_clique_minor(tree, 2).contains
    assert not has_clique_minor(tree, 3).contains
    assert hadwiger_number(tree) == 2


def test_cycle_contracts_to_triangle_not_k4():
    g = cycle(6)
    assert has_clique_minor(g, 3).contains
    assert not has_clique_minor(g, 4).contains


def test_octahedron_hadwiger_four():
    g = k_r_times_2(3)
    assert not has_clique_minor(g, 5).contains
    assert has_clique_minor(g, 4).contains
    assert hadwiger_number(g) == 4


def test_petersen_hadwiger_five():
    # contracting the five spokes yields K_5; K_6 would need 15 cross
    # edges plus connectors, more than the 15 edges available
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    g = Graph.from_edges(10, edges)
    assert has_clique_minor(g, 5).contains
    assert not has_clique_minor(g, 6).contains
    assert hadwiger_number(g) == 5


def test_hadwiger_of_cliques():
    for n in range(1, 7):
        assert hadwiger_number(complete(n)) == n


def test_minus_matching_family():
    # r doubled classes: hadwiger floor(3r/2); with a dominating vertex, +1
    for r in range(1, 5):
        bound = (3 * r) // 2
        assert hadwiger_number(k_r_times_2(r)) == bound
        assert hadwiger_number(k_1_r_times_2(r)) == bound + 1


def test_strategy_answers_never_differ():
    rng = random.Random(23)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 8), rng.choice([0.3, 0.6, 0.9]))
        t = rng.randint(2, g.n)
        a = has_clique_minor(g, t, strategy="branch")
        b = has_clique_minor(g, t, strategy="contract")
        assert a.contains == b.contains


def test_matches_partition_oracle():
    rng = random.Random(29)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 7), rng.choice([0.25, 0.5, 0.75]))
        t = rng.randint(2, min(g.n, 5))
        assert has_clique_minor(g, t).contains == oracle_has_minor(g, t)


def test_edge_bound_short_circuits():
    # too few edges for the target clique: decided without search
    g = Graph.from_edges(30, [(i, i + 1) for i in range(29)])
    ans = has_clique_minor(g, 9)
    assert not ans.contains and ans.nodes == 0


def test_timeout_raises():
    # target above the hadwiger number forces the search to exhaust
    g = k_r_times_2(7)
    with pytest.raises(SearchTimeout):
        has_clique_minor(g, 11, strategy="branch", timeout=1e-4)


def test_invalid_arguments():
    g = complete(3)
    with pytest.raises(InvalidArgumentError):
        has_clique_minor(g, 0)
    with pytest.raises(InvalidArgumentError):
        has_clique_minor(g, 2, strategy="magic")
