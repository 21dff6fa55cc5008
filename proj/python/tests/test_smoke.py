import json

import pytest

import pygkm


def test_polynomial_arithmetic():
    a = pygkm.Polynomial("x1 - x2", 3)
    b = pygkm.Polynomial("x1 + x2", 3)
    assert str(a * b) == "x1^2 - x2^2"
    assert a + b == pygkm.Polynomial("2*x1", 3)
    assert a.eval([3, 1, 0]) == "2"


def test_flag_graph_of_s3():
    g = pygkm.coset_graph("A", 2)
    assert g.vertex_count == 6
    assert all(ok for _, ok, _ in g.verify())
    back = pygkm.Graph.from_json(g.to_json())
    assert back.hash() == g.hash()
    assert json.loads(g.to_json())["varcount"] == 3


def test_k3_dot():
    dot = pygkm.coset_graph("A", 2, sigma1=[2]).to_dot()
    assert dot.count(" -- ") == 3


def test_bundle_and_holonomy():
    assert all(ok for _, ok, _ in pygkm.verify_bundle("A", 3, sigma2=[1, 3]))
    assert pygkm.holonomy_order("A", 2) == 2
    assert pygkm.holonomy_order("A", 3) == 6


def test_basis_table_and_counts():
    rows = pygkm.basis_table("A", 2).splitlines()
    assert rows[0].split("\t")[2:] == ["c[0,0]", "c[0,1]", "c[1,0]", "c[1,1]", "c[2,0]", "c[2,1]"]
    assert rows[5].split("\t")[:2] == ["s2s1", "3,1,2"]
    assert rows[5].split("\t")[7] == "x1*x3^2"
    assert len(pygkm.index_set("D", 3)) == 24
    assert pygkm.verify_basis("B", 2) == {"independent": True, "spanning": True, "witness": ""}


def test_schubert_values():
    v = pygkm.schubert_values("A", 2)
    assert v["2,1,3"]["3,2,1"] == "x1 - x3"
    assert v["1,2,3"]["2,3,1"] == "1"


def test_cli_and_errors():
    code, out, _ = pygkm.run(["table", "--type", "A", "--rank", "2"])
    assert code == 0 and out.startswith("word\toneline")
    assert pygkm.run(["verify", "--graph", "missing.json"])[0] == 2
    with pytest.raises(pygkm.GkmError):
        pygkm.index_set("E", 2)
