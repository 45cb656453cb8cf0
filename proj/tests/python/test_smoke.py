import pytest

import wmnca


def test_version():
    assert wmnca.__version__


def test_grid_shape_and_tid():
    g = wmnca.generate_grid(5, 5)
    assert g.node_count == 25
    assert g.total_radios == 50

    ca = wmnca.ChannelAssignment()
    for node in range(25):
        for radio in range(2):
            ca.set(node, radio, 1)
    tid_c = wmnca.tid(g, ca, "c")
    tid_e = wmnca.tid(g, ca, "e")
    assert tid_c > 0
    assert tid_e >= tid_c


def test_assign_produces_valid_assignments():
    g = wmnca.generate_grid(3, 3)
    cs = wmnca.ChannelSet.first_n(3)
    for scheme in ("CEN", "BFS", "CLQ", "MIS", "OIS", "GSCA"):
        ca = wmnca.assign(scheme, g, cs, model="e", seed=3)
        assert wmnca.validate(ca, g, cs) == []
    assert wmnca.scheme_label("CEN", "c") == "CEN_C"
    assert wmnca.scheme_label("GSCA") == "GSCA"
    with pytest.raises(ValueError):
        wmnca.assign("NOPE", g, cs)


def test_cdal_estimate_splits_mass():
    g = wmnca.generate_grid(1, 2)
    cs = wmnca.ChannelSet([1, 2])
    ca = wmnca.ChannelAssignment()
    ca.set(0, 0, 1)
    ca.set(0, 1, 2)
    ca.set(1, 0, 1)
    ca.set(1, 1, 2)
    cost, dist, pairs = wmnca.cdal_estimate(g, ca, cs)
    assert cost == pytest.approx(0.0)
    assert dist == pytest.approx({1: 0.5, 2: 0.5})
    assert pairs == 1
    assert len(wmnca.find_link_set(g, ca)) == 2


def test_eis_and_doc_fixtures():
    reference = ["CEN_C", "CLQ_C", "CEN_E", "CLQ_E", "BFS_C",
                 "BFS_E", "MIS_C", "MIS_E", "GSCA"]
    tid_order = ["BFS_E", "CLQ_C", "MIS_E", "BFS_C", "CEN_E",
                 "CEN_C", "CLQ_E", "MIS_C", "GSCA"]
    cdal_order = ["CEN_C", "CEN_E", "CLQ_C", "CLQ_E", "MIS_C",
                  "BFS_E", "BFS_C", "MIS_E", "GSCA"]
    assert wmnca.eis_from_orders(reference, tid_order) == 15
    assert wmnca.eis_from_orders(reference, cdal_order) == 4
    assert wmnca.doc(15, 9) == pytest.approx(58.33, abs=0.01)
    assert wmnca.doc(4, 9) == pytest.approx(88.89, abs=0.01)


def test_simulate_grid():
    g = wmnca.generate_grid(5, 5)
    cs = wmnca.ChannelSet.first_n(3)
    ca = wmnca.assign("BFS", g, cs, model="e", seed=1)
    out = wmnca.simulate_grid(g, ca, 5, 5, scenario=5)
    assert len(out["per_flow_throughput"]) == 5
    assert out["aggregate_throughput_mbps"] == pytest.approx(
        sum(out["per_flow_throughput"]))
    assert 0.0 <= out["plr_proxy"] <= 1.0


def test_topology_json_round_trip():
    g = wmnca.generate_grid(2, 3)
    g2 = wmnca.topology_from_json(wmnca.topology_to_json(g))
    assert g2.node_count == 6
    with pytest.raises(ValueError):
        wmnca.topology_from_json("{ nope")


def test_rank_labels():
    assert wmnca.rank_labels({"A": 1.0, "B": 2.0}, higher_is_better=True) == ["A", "B"]
    assert wmnca.rank_labels({"A": 1.0, "B": 2.0}, higher_is_better=False) == ["B", "A"]


def test_run_all(tmp_path):
    ranking = wmnca.run_all(seed=2, out_dir=str(tmp_path))
    assert len(ranking) == 8
    assert {row["estimator"] for row in ranking} == {
        "tid_c", "tid_e", "tid_native", "cdal_cost"}
    for row in ranking:
        assert row["n"] == 9
        assert 0.0 <= row["doc_percent"] <= 100.0
    assert (tmp_path / "metrics.csv").exists()
    assert (tmp_path / "ranking.csv").exists()
    assert (tmp_path / "ca_GSCA.json").exists()
