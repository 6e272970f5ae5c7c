import pytest

import koszul_pairs as kp


def test_graph_round_trip():
    g = kp.Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert g.n == 4
    assert g.edges == [(1, 2), (2, 3), (3, 4)]
    assert kp.Graph.parse(g.to_json()) == g
    assert kp.Graph.parse(g.to_edge_list()) == g
    assert kp.Graph.path(4) == g


def test_bad_graph_text():
    with pytest.raises(kp.ParseError):
        kp.Graph.parse('{"n": 2, "edges": [[1, 3]]}')
    with pytest.raises(ValueError):
        kp.Graph.parse("n two")


def test_closedness():
    cert = kp.is_closed(kp.Graph.complete(4))
    assert cert["kind"] == "closed"
    assert kp.is_closed(kp.Graph.net())["kind"] == "net"
    assert kp.is_closed(kp.Graph.cycle(5))["kind"] == "induced-cycle"
    lab = kp.closed_labeling(kp.Graph.path(4))
    assert kp.verify_closed_labeling(kp.Graph.path(4), lab)
    assert kp.closed_labeling(kp.Graph.sun()) is None
    assert kp.brute_force_closed(kp.Graph.sun()) is None


def test_pair_verdicts():
    assert kp.decide_pair(kp.Graph.path(4), kp.Graph.complete(3))["status"] == "Koszul"
    v = kp.decide_pair(kp.Graph.net(), kp.Graph.complete(3))
    assert v["status"] == "NotKoszul"
    assert v["certificates"]["G1"]["kind"] == "net"
    c = kp.cross_check(kp.Graph.path(3), kp.Graph.path(3))
    assert c["status"] == "NotKoszul"
    assert c["cross_check"]["consistent"]


def test_groebner_and_colon():
    p3 = kp.Graph.path(3)
    gb = kp.groebner_basis(p3, p3)
    assert len(gb) == 7
    assert "x[1,2]^2*x[2,1]*x[3,3] - x[1,2]*x[1,3]*x[2,2]*x[3,1]" in gb
    assert kp.groebner_basis(kp.Graph.complete(2), kp.Graph.complete(2)) == ["x[1,1]*x[2,2] - x[1,2]*x[2,1]"]
    assert len(kp.groebner_basis(p3, p3, order="revlex", p=0)) == 7
    with pytest.raises(ValueError):
        kp.groebner_basis(p3, p3, order="deglex")
    with pytest.raises(kp.CapExceeded):
        kp.groebner_basis(p3, p3, cap_gb=3)

    h = ["x[1,1]*x[2,2] - x[1,2]*x[2,1]", "x[1,2]*x[2,3] - x[1,3]*x[2,2]"]
    q = kp.colon(2, 3, h, "x[2,2]", order="revlex")
    assert "x[1,1]*x[2,3] - x[1,3]*x[2,1]" in q
    assert len(q) == 3


def test_linear_quotients():
    r = kp.linear_quotients(kp.Graph.path(3), kp.Graph.path(3))
    assert not r["ok"]
    assert r["steps"][-1]["variable"] == (2, 1)
    assert r["steps"][-1]["witness"] == "x[1,2]^2*x[3,3]"
    assert kp.linear_quotients(kp.Graph.path(3), kp.Graph.complete(3))["ok"]


def test_betti():
    p3 = kp.Graph.path(3)
    assert kp.betti(p3, p3, 0, 0) == 1
    assert kp.betti(p3, p3, 2, 2) == 40
    assert kp.betti(p3, p3, 3, 5) == 2
    with pytest.raises(kp.CapExceeded):
        kp.betti(p3, p3, 3, 5, cap_bar=100)
    probe = kp.koszul_probe(p3, p3, 3, 5)
    assert probe["nonzero"] == (3, 5)


def test_verify_paper():
    items = kp.verify_paper()
    assert len(items) == 17
    assert all(item["status"] == "pass" for item in items)
