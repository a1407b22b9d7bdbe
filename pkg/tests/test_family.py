import itertools

import networkx as nx
import pytest

from model.family import (
    FamilyError,
    FamilyKind,
    FamilySpec,
    build_family,
    cycle_partitions,
    enumerate_n4_dvdr,
    extremal_family,
    make_cocktail_party,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_dvdr,
    make_path,
    make_star,
    make_wheel,
)
from model.graph import degree_sequence, empty_graph, is_connected


def test_simple_families(to_nx):
    assert make_path(5).edge_count == 4
    assert make_cycle(5).edge_count == 5
    assert make_complete(6).edge_count == 15
    assert degree_sequence(make_star(4)) == [3, 1, 1, 1]
    assert degree_sequence(make_wheel(6)) == [5, 3, 3, 3, 3, 3]
    assert nx.is_isomorphic(to_nx(make_wheel(7)), nx.wheel_graph(7))


def test_complete_multipartite_labels_parts_consecutively():
    g = make_complete_multipartite([1, 2, 2])
    assert degree_sequence(g) == [4, 3, 3, 3, 3]
    assert not g.adjacent(1, 2) and not g.adjacent(3, 4)
    assert g.adjacent(2, 3)


def test_cocktail_party_is_regular():
    g = make_cocktail_party(3)
    assert g.n == 6
    assert set(degree_sequence(g)) == {4}


@pytest.mark.parametrize("call", [
    lambda: make_cycle(2),
    lambda: make_star(1),
    lambda: make_wheel(3),
    lambda: make_complete_multipartite([]),
    lambda: make_complete_multipartite([2, 0]),
    lambda: make_cocktail_party(0),
    lambda: make_dvdr(make_path(3)),
    lambda: enumerate_n4_dvdr(5),
    lambda: enumerate_n4_dvdr(2),
    lambda: extremal_family(2),
])
def test_invalid_parameters_raise_family_error(call):
    with pytest.raises(FamilyError):
        call()


def test_make_dvdr_puts_hub_first():
    g = make_dvdr(make_cycle(5))
    assert g.n == 6
    assert g.neighbors(0) == (1, 2, 3, 4, 5)
    assert g == make_wheel(6)
    assert make_dvdr(empty_graph(3)) == make_star(4)


def test_cycle_partitions():
    assert list(cycle_partitions(9)) == [(9,), (6, 3), (5, 4), (3, 3, 3)]
    assert list(cycle_partitions(3)) == [(3,)]
    assert list(cycle_partitions(5)) == [(5,)]
    assert list(cycle_partitions(7)) == [(7,), (4, 3)]


@pytest.mark.parametrize("n, size", [(4, 1), (6, 1), (8, 2), (10, 4), (12, 6)])
def test_n4_dvdr_family_sizes(n, size):
    assert len(enumerate_n4_dvdr(n)) == size


def test_n4_dvdr_members_are_pairwise_non_isomorphic(to_nx):
    members = [to_nx(g) for g in enumerate_n4_dvdr(10)]
    for a, b in itertools.combinations(members, 2):
        assert not nx.is_isomorphic(a, b)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_n4_dvdr_degrees(n):
    for g in enumerate_n4_dvdr(n):
        assert degree_sequence(g) == [n - 1] + [n - 3] * (n - 1)


def test_enumerate_n4_dvdr_at_four_is_the_star():
    assert enumerate_n4_dvdr(4) == [make_star(4)]


def test_extremal_family_dispatches_on_parity():
    assert extremal_family(5) == [make_complete_multipartite([1, 2, 2])]
    assert degree_sequence(extremal_family(5)[0]) == [4, 3, 3, 3, 3]
    assert extremal_family(3) == [make_star(3)]
    assert extremal_family(8) == enumerate_n4_dvdr(8)


def test_family_kind_labels():
    assert FamilyKind.from_label("cocktail-party") is FamilyKind.COCKTAIL_PARTY
    with pytest.raises(FamilyError, match="unknown family"):
        FamilyKind.from_label("petersen")


@pytest.mark.parametrize("spec", [
    lambda: FamilySpec(FamilyKind.EXTREMAL, 2),
    lambda: FamilySpec(FamilyKind.CYCLE, 2),
    lambda: FamilySpec(FamilyKind.COMPLETE_MULTIPARTITE, 5, parts=(1, 2)),
    lambda: FamilySpec(FamilyKind.COCKTAIL_PARTY, 5),
    lambda: FamilySpec(FamilyKind.DVDR_FROM_REGULAR, 4, base=make_path(3)),
])
def test_family_spec_invariants(spec):
    with pytest.raises(FamilyError):
        spec()


def test_build_family():
    assert build_family(FamilySpec(FamilyKind.EXTREMAL, 10)) == enumerate_n4_dvdr(10)
    assert build_family(FamilySpec(FamilyKind.CYCLE, 5)) == [make_cycle(5)]
    assert build_family(FamilySpec(FamilyKind.COCKTAIL_PARTY, 8)) == [make_cocktail_party(4)]
    assert build_family(FamilySpec(FamilyKind.COMPLETE_MULTIPARTITE, 5, parts=(1, 2, 2))) == extremal_family(5)
    assert build_family(FamilySpec(FamilyKind.DVDR_FROM_REGULAR, 6, base=make_cycle(5))) == [make_wheel(6)]


def test_random_family_is_seeded_and_connected():
    spec = FamilySpec(FamilyKind.RANDOM, 12, count=5, seed=3, edge_probability=0.1)
    first = build_family(spec)
    assert first == build_family(spec)
    assert len(first) == 5
    assert all(g.n == 12 and is_connected(g) for g in first)
    assert first != build_family(FamilySpec(FamilyKind.RANDOM, 12, count=5, seed=4, edge_probability=0.1))
