import math

import numpy as np
import pytest

from model.distance import apsp
from model.family import make_complete_multipartite, make_path, make_wheel
from model.quotient import QuotientError, equitable_quotient
from model.spectra import build_d_alpha, spectral_radius, transmissions


def d_alpha(g, alpha):
    d = apsp(g)
    return build_d_alpha(d, transmissions(d), alpha)


def test_p4_end_and_middle_partition_is_equitable():
    q = equitable_quotient(d_alpha(make_path(4), 0), [[0, 3], [1, 2]])
    assert q.equitable
    assert q.b.tolist() == [[3.0, 3.0], [3.0, 1.0]]
    assert q.spectral_radius() == pytest.approx(2 + math.sqrt(10))


def test_p4_hub_partition_is_not_equitable():
    q = equitable_quotient(d_alpha(make_path(4), 0), [[0], [1, 2, 3]])
    assert q.t == 2
    assert not q.equitable


def test_wheel_quotient():
    m = d_alpha(make_wheel(6), 0)
    q = equitable_quotient(m, [[0], [1, 2, 3, 4, 5]])
    assert q.equitable
    assert q.b.tolist() == [[0.0, 5.0], [1.0, 6.0]]
    assert q.spectral_radius() == pytest.approx(spectral_radius(m).mu, abs=1e-10)


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
def test_cocktail_party_plus_apex_quotient(alpha):
    m = d_alpha(make_complete_multipartite([1, 2, 2]), alpha)
    q = equitable_quotient(m, [[0], [1, 2, 3, 4]])
    assert q.equitable
    assert np.allclose(q.b, [[4 * alpha, 4 * (1 - alpha)], [1 - alpha, 5 * alpha + 4 * (1 - alpha)]])
    assert q.spectral_radius() == pytest.approx(spectral_radius(m).mu, abs=1e-10)


def test_cocktail_party_plus_apex_distance_quotient():
    q = equitable_quotient(d_alpha(make_complete_multipartite([1, 2, 2]), 0), [[0], [1, 2, 3, 4]])
    assert q.b.tolist() == [[0.0, 4.0], [1.0, 4.0]]


def test_singleton_partition_reproduces_the_matrix():
    m = d_alpha(make_path(5), 0.3)
    q = equitable_quotient(m, [[v] for v in range(5)])
    assert q.equitable
    assert np.array_equal(q.b, m.entries)


@pytest.mark.parametrize("partition, message", [
    ([[0, 1], [], [2, 3]], "empty block"),
    ([[0, 1], [1, 2, 3]], "more than one block"),
    ([[0, 1], [2]], "does not cover"),
    ([[0, 1], [2, 3, 4]], "outside"),
])
def test_invalid_partitions(partition, message):
    with pytest.raises(QuotientError, match=message):
        equitable_quotient(d_alpha(make_path(4), 0), partition)
