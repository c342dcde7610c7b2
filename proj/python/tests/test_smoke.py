import json

import jsonschema
import pytest

import folklab


def test_graph_basics():
    g = folklab.Graph.from_expression("join(K3,C5)")
    assert g.order == 8
    assert g.edge_count() == 23
    assert folklab.Graph.from_graph6(g.graph6()) == g
    assert folklab.Graph.from_edges(3, [(0, 1), (2, 1), (0, 2)]).graph6() == "Bw"


def test_q_graph():
    q = folklab.q_graph()
    assert q.order == 13
    assert q.clique_number() == 4
    assert q.independence_number() == 2
    assert q == folklab.Graph.from_expression("complement(circulant(13,1,5))")


def test_ramsey_calibration():
    k6 = folklab.Graph.from_expression("K6")
    k5 = folklab.Graph.from_expression("K5")
    assert folklab.arrows("edge", k6, (3, 3))["outcome"] == "arrows"
    free = folklab.arrows("edge", k5, (3, 3))
    assert free["outcome"] == "free"
    assert free["witness"]["kind"] == "edge"
    assert len(free["witness"]["colours"]) == 10


def test_oracle_matches_decider():
    for expr in ("K5", "K6", "C5", "join(K1,C5)"):
        g = folklab.Graph.from_expression(expr)
        assert folklab.arrows("edge", g, (3, 3))["outcome"] == folklab.oracle("edge", g, (3, 3))["outcome"]


def test_cnf_header():
    text = folklab.cnf("edge", folklab.Graph.from_expression("K3"), (3, 3))
    assert "p cnf 3 2" in text


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        folklab.Graph.from_graph6("B\x01")
    with pytest.raises(ValueError):
        folklab.Graph.from_expression("C2")
    with pytest.raises(ValueError):
        folklab.arrows("edge", folklab.Graph.from_expression("K3"), (1, 3))


def test_registry_and_certifier():
    reg = folklab.registry()
    assert any(e["statement"] == "R(3,4) = 9" for e in reg["entries"])
    report = folklab.certify_theorem1(5)
    assert report["bound"]["text"] == "F_e(3,5;13) <= 21"
    assert report["overall"] == "refuted-hypothesis"
    assert report == folklab.certify_theorem1(5)


COMMANDS = [
    ["arrow-edge", "K5", "3,3", "--recheck"],
    ["arrow-edge", "K6", "3,3"],
    ["arrow-edge", "K9", "3,4", "--max-nodes", "10", "--expect", "unknown"],
    ["arrow-vertex", "Q", "4,4", "--recheck"],
    ["arrow-vertex", "C5", "2,2"],
    ["clique", "--graph", "Q"],
    ["build", "--expr", "join(K3,C5)"],
    ["cnf", "C5", "3,3", "--mode", "edge"],
    ["certify-thm1", "--a", "5", "--alpha", "0", "--U", "Q"],
    ["certify-thm1", "--a", "4", "--U", "C5"],
    ["certify-thm2"],
    ["registry"],
    ["verify-known", "--entry", "R(3,3)"],
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_json_matches_schema(run, schema, args):
    out = json.loads(run(*args, "--json", "--workers", "1").stdout
                     if args[0] not in ("clique", "build", "cnf", "registry")
                     else run(*args, "--json").stdout)
    jsonschema.validate(out, schema)
    assert out["command"] == args[0]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_single_worker_output_is_deterministic(run, args):
    extra = ["--json", "--workers", "1"] if args[0] not in ("clique", "build", "cnf", "registry") else ["--json"]
    first = json.loads(run(*args, *extra).stdout)
    second = json.loads(run(*args, *extra).stdout)
    first.pop("timing", None)
    second.pop("timing", None)
    assert first == second


def test_cli_examples(run):
    assert run("arrow-edge", "--graph", "K6", "--tuple", "3,3", "--expect", "arrows").returncode == 0
    g6 = run("build", "--expr", "join(K3,C5)", "--emit", "graph6").stdout.strip()
    assert folklab.Graph.from_graph6(g6).order == 8
    assert run("clique", "--graph", "Q", "--expect", "4").returncode == 0
    assert run("clique", "--graph", "Q", "--expect", "5", check=False).returncode == 3
    assert run("certify-thm2", "--Q", "K13", check=False).returncode == 5
    assert run("arrow-edge", "K5", check=False).returncode == 2


def test_witness_revalidates_through_bindings(run):
    out = json.loads(run("arrow-vertex", "Q", "4,4", "--json", "--recheck").stdout)
    assert out["outcome"] == "free"
    assert out["witness_rechecked"] is True
    q = folklab.q_graph()
    colours = out["witness"]["colours"]
    for colour in (1, 2):
        members = [v for v, c in enumerate(colours) if c == colour]
        sub = folklab.Graph.from_edges(len(members), [
            (i, j) for i in range(len(members)) for j in range(i + 1, len(members))
            if q.adjacent(members[i], members[j])])
        assert sub.clique_number() < 4
