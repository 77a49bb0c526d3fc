import json

import pytest

from unchoosable import (
    Graph,
    check_certificate,
    has_clique_minor,
    params_for,
    verify_construction,
    verify_minor_free,
    verify_not_colorable,
)


@pytest.fixture(scope="module")
def bundles():
    return {
        "b1": verify_construction(params_for("b", 1), mode="direct"),
        "c1": verify_construction(params_for("c", 1), mode="direct"),
        "a1": verify_construction(params_for("a", 1), mode="direct"),
        "a2": verify_construction(params_for("a", 2), mode="compositional"),
    }


def roundtrip(cert: dict) -> dict:
    return json.loads(json.dumps(cert))


def test_bundles_accepted(bundles):
    for name, cert in bundles.items():
        res = check_certificate(roundtrip(cert))
        assert res.ok, (name, res.reason)


def test_witness_certificate_accepted():
    g = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    ans = has_clique_minor(g, 4)
    cert = {"kind": "branch-set-positive"}
    cert.update(ans.witness.to_json_dict())
    assert check_certificate(roundtrip(cert), g).ok
    # bare witness file without the kind marker still checks
    bare = ans.witness.to_json_dict()
    assert check_certificate(roundtrip(bare), g).ok


def test_witness_needs_its_graph():
    cert = {"kind": "branch-set-positive", "t": 2, "branch_sets": [[0], [1]]}
    assert not check_certificate(cert).ok


def test_flipped_witness_vertex_rejected():
    g = Graph.from_edges(
        5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]
    )
    ans = has_clique_minor(g, 4)
    assert ans.contains
    doc = ans.witness.to_json_dict()
    doc["branch_sets"][0][0] = 4  # vertex 4 hangs off the K_4
    assert not check_certificate({"kind": "branch-set-positive", **doc}, g).ok


def test_witness_t_mismatch_rejected():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    cert = {"kind": "branch-set-positive", "t": 2, "branch_sets": [[0], [1], [2]]}
    assert not check_certificate(cert, g).ok


def test_dropped_class_rejected(bundles):
    cert = roundtrip(bundles["a2"])
    color = cert["children"][1]
    removed = color["classes"].pop(3)
    color["covered"] -= removed["size"]
    res = check_certificate(cert)
    assert not res.ok


def test_inflated_class_size_rejected(bundles):
    cert = roundtrip(bundles["a2"])
    color = cert["children"][1]
    color["classes"][0]["size"] += 8
    color["covered"] += 8
    assert not check_certificate(cert).ok


def test_forged_class_status_rejected(bundles):
    cert = roundtrip(bundles["a2"])
    color = cert["children"][1]
    entry = next(e for e in color["classes"] if e["status"] == "blocked")
    entry["status"] = "improper-root"
    assert not check_certificate(cert).ok


def test_wrong_gadget_count_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    cert["children"][0]["n_gadgets"] = 3
    assert not check_certificate(cert).ok


def test_wrong_glue_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    cert["children"][0]["glue"] = [0, 1]  # template roots are 0 and 2
    assert not check_certificate(cert).ok


def test_tampered_manifest_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    cert["manifest"]["n_vertices"] = 11
    assert not check_certificate(cert).ok
    cert = roundtrip(bundles["b1"])
    cert["manifest"]["p"] = 5
    assert not check_certificate(cert).ok


def test_degeneracy_lie_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    cert["degeneracy"]["degeneracy"] = 1
    assert not check_certificate(cert).ok


def test_wrong_child_target_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    cert["children"][0]["children"][0]["target"] = 3
    assert not check_certificate(cert).ok


def test_missing_child_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    cert["children"] = cert["children"][:1]
    assert not check_certificate(cert).ok


def test_unknown_kind_rejected():
    assert not check_certificate({"kind": "trust-me"}).ok
    assert not check_certificate({"payload": 1}).ok
    assert not check_certificate([1, 2]).ok


def test_malformed_payload_rejected(bundles):
    cert = roundtrip(bundles["b1"])
    del cert["manifest"]["case"]
    res = check_certificate(cert)
    assert not res.ok and "malformed" in res.reason


def test_standalone_certs_accepted():
    minor = verify_minor_free(params_for("b", 1))
    assert check_certificate(roundtrip(minor)).ok
    color = verify_not_colorable(params_for("b", 1), mode="compositional",
                                 symmetry=False)
    assert check_certificate(roundtrip(color)).ok
    direct = verify_not_colorable(params_for("b", 1), mode="direct")
    assert check_certificate(roundtrip(direct)).ok


def test_gadget_child_checks_standalone(bundles):
    child = roundtrip(bundles["a1"]["children"][0]["children"][0])
    assert child["kind"] == "exhaustive-negative"
    assert check_certificate(child).ok  # rebuilds the gadget from case/t