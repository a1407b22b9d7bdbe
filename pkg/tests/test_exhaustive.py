import time
from pathlib import Path

import networkx as nx
import pytest

from model.classifier import ClassTag, classify
from model.family import cycle_partitions, enumerate_n4_dvdr
from model.graph6 import parse_graph6, to_graph6
from model.sweep import sweep
from model.theorem import verify_family, verify_sweep

ALPHAS = [0.0, 0.25, 0.5, 0.75]
CONNECTED_ORDER_EIGHT = Path(__file__).parent / "data" / "connected8.g6"


@pytest.fixture(scope="module")
def order_eight():
    """Every connected graph on 8 vertices, one graph6 line each, swept once over the full grid."""
    texts = CONNECTED_ORDER_EIGHT.read_text(encoding="ascii").split()
    start = time.perf_counter()
    report = sweep(texts, ALPHAS, jobs=None)
    return texts, report, time.perf_counter() - start


def test_enumeration_is_complete(order_eight):
    texts, report, _ = order_eight
    assert len(texts) == len(set(texts)) == 11117
    assert report.n == 8
    assert report.graphs_total == report.graphs_connected == 11117


def test_graph6_round_trip(order_eight):
    texts, _, _ = order_eight
    assert all(to_graph6(parse_graph6(text)) == text for text in texts)


def test_no_violations_at_any_alpha(order_eight):
    _, report, _ = order_eight
    assert report.violations == []
    assert report.inconsistencies == []
    assert report.min_slack >= -1e-9
    assert report.passed


def test_numeric_equality_only_on_extremal_graphs(order_eight):
    _, report, _ = order_eight
    assert report.unexplained_equalities == []
    assert report.equality_set_stable
    for alpha in ALPHAS:
        assert set(report.argmin[alpha]) <= set(report.equality_set)


def test_equality_set_is_the_dvdr_family(order_eight, to_nx):
    _, report, _ = order_eight
    classes = [classify(parse_graph6(text)) for text in report.equality_set]
    assert all(c.tag is ClassTag.EXTREMAL_EVEN_DVDR for c in classes)
    assert sorted(c.cycle_lengths for c in classes) == sorted(cycle_partitions(7))

    found = [to_nx(parse_graph6(text)) for text in report.equality_set]
    family = [to_nx(g) for g in enumerate_n4_dvdr(8)]
    assert len(found) == len(family) == 2
    for h in family:
        assert sum(nx.is_isomorphic(h, f) for f in found) == 1


def test_theorem_checks_pass(order_eight):
    _, report, _ = order_eight
    theorem = verify_sweep(verify_family(8, ALPHAS), report)
    assert theorem.passed, theorem.failures


def test_sweep_finishes_within_a_minute(order_eight):
    _, _, elapsed = order_eight
    assert elapsed < 60.0
