import json

import networkx as nx
import pytest

import model.sweep
import model.validator
from model.bounds import BoundDomainError
from model.classifier import ClassTag, classify
from model.family import make_complete_multipartite, make_cycle, make_path, make_wheel
from model.graph6 import parse_graph6, to_graph6
from model.sweep import SweepInputError, sweep


def _connected_transmission_regular(texts: list[str]) -> int:
    count = 0
    for text in texts:
        h = nx.from_graph6_bytes(text.encode())
        if nx.is_connected(h):
            sums = {sum(lengths.values()) for _, lengths in nx.all_pairs_shortest_path_length(h)}
            count += len(sums) == 1
    return count


@pytest.mark.parametrize("n, connected", [(4, 6), (5, 21), (6, 112)])
def test_exhaustive_small_orders(n, connected, atlas):
    texts = atlas(n)
    report = sweep(texts, [0.0, 0.5], jobs=1)

    assert report.n == n
    assert report.graphs_total == len(texts)
    assert report.graphs_connected == connected
    assert report.graphs_nontransmission_regular == connected - _connected_transmission_regular(texts)
    assert report.violations == []
    assert report.inconsistencies == []
    assert report.unexplained_equalities == []
    assert report.equality_set_stable
    assert report.passed
    assert len(report.equality_set) == 1
    assert classify(parse_graph6(report.equality_set[0])).is_extremal
    for alpha in (0.0, 0.5):
        assert set(report.argmin[alpha]) <= set(report.equality_set)
    assert report.min_slack == pytest.approx(0.0, abs=1e-9)


def test_order_six_equality_graph_is_the_wheel(atlas, to_nx):
    report = sweep(atlas(6, connected_only=True), [0.0, 0.5], jobs=1)
    assert report.argmin[0.0] == report.equality_set
    assert nx.is_isomorphic(to_nx(parse_graph6(report.equality_set[0])), nx.wheel_graph(6))


def test_order_seven_equality_graph_is_the_cocktail_party_plus_apex(atlas, to_nx):
    texts = atlas(7, connected_only=True)
    assert len(texts) == 853
    report = sweep(texts, [0.0], jobs=2)
    assert report.passed
    assert len(report.equality_set) == 1
    g = parse_graph6(report.equality_set[0])
    assert classify(g).tag is ClassTag.EXTREMAL_ODD
    assert nx.is_isomorphic(to_nx(g), to_nx(make_complete_multipartite([1, 2, 2, 2])))


def test_report_is_independent_of_worker_count(atlas):
    texts = atlas(6)
    serial = sweep(texts, [0.0, 0.25], jobs=1)
    parallel = sweep(texts, [0.0, 0.25], jobs=2)
    assert json.dumps(serial.to_dict()) == json.dumps(parallel.to_dict())
    assert [(r.graph6, r.check.alpha, r.check.mu) for r in serial.rows] == [
        (r.graph6, r.check.alpha, r.check.mu) for r in parallel.rows
    ]


def test_only_transmission_regular_graphs():
    report = sweep([to_graph6(make_cycle(6))], [0.0])
    assert report.graphs_connected == 1
    assert report.graphs_nontransmission_regular == 0
    assert report.no_eligible_graphs
    assert report.min_slack is None
    assert report.to_dict()["no_eligible_graphs"] is True


def test_empty_stream():
    report = sweep([], [0.0])
    assert report.n is None and report.graphs_total == 0 and report.no_eligible_graphs


def test_rows_follow_input_order():
    texts = [to_graph6(make_path(4)), to_graph6(make_wheel(4)), "C?"]
    report = sweep(texts, [0.0, 0.5])
    assert report.graphs_total == 3
    assert report.graphs_connected == 2
    assert [(r.graph6, r.check.alpha) for r in report.rows] == [(texts[0], 0.0), (texts[0], 0.5)]


def test_parse_error_carries_line_number():
    with pytest.raises(SweepInputError) as error:
        sweep(["Bg", "", "B!"], [0.0])
    assert error.value.line_number == 3


def test_mixed_orders_are_rejected():
    with pytest.raises(SweepInputError, match="line 2"):
        sweep(["Bg", "Ch"], [0.0])


def test_alpha_one_is_rejected():
    with pytest.raises(BoundDomainError):
        sweep(["Ch"], [1.0])


def test_empty_alpha_grid_is_rejected():
    with pytest.raises(SweepInputError):
        sweep(["Ch"], [])


def test_json_floats_are_rounded():
    report = sweep([to_graph6(make_path(4))], [0.0])
    document = report.to_dict()
    assert document["min_gap"]["0"] == float(f"{report.min_gap[0.0]:.15g}")
    assert "rows" not in document
    assert document["argmin"] == {"0": [to_graph6(make_path(4))]}


def test_each_graph_is_classified_once(monkeypatch):
    calls = []

    def counting(g, t=None):
        calls.append(g)
        return classify(g, t)

    monkeypatch.setattr(model.sweep, "classify", counting)
    monkeypatch.setattr(model.validator, "classify", counting)
    texts = [to_graph6(make_path(5)), to_graph6(make_complete_multipartite([1, 2, 2]))]
    report = sweep(texts, [0.0, 0.25, 0.5, 0.75], jobs=1)
    assert len(report.rows) == 8
    assert len(calls) == 2
