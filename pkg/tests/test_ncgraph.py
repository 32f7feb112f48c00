from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from ncsieve.ncgraph import (
    Family,
    InvalidOrder,
    NcGraph,
    NcPartition,
    components,
    count,
    count_antipodal_pairs,
    count_by_k,
    count_fixed,
    count_two_components_separated,
    count_with_edge_1n,
    crosses,
    enumerate_family,
    enumerate_fixed,
    enumerate_partitions,
    format_graph,
    format_partition,
    is_noncrossing,
    parse_graph,
    parse_partition,
    rotate,
)


def test_crosses():
    assert crosses((1, 3), (2, 4))
    assert not crosses((1, 3), (3, 5))
    assert not crosses((1, 2), (3, 4))
    assert crosses((2, 4), (1, 3))
    assert not crosses((1, 6), (2, 5))


def test_graph_normalizes_and_checks():
    g = NcGraph(4, ((3, 1), (1, 2), (1, 3)))
    assert g.edges == ((1, 2), (1, 3))
    with pytest.raises(ValueError):
        NcGraph(3, ((1, 4),))
    with pytest.raises(ValueError):
        NcGraph(4, ((1, 3), (2, 4))).validate()


def test_enumerate_examples():
    assert [g.edges for g in enumerate_family(2, 1, Family.connected())] == [((1, 2),)]
    assert len(list(enumerate_family(4, 3, Family.connected()))) == 12
    five = list(enumerate_family(4, 5, Family.connected()))
    assert len(five) == 2
    cycle = {(1, 2), (2, 3), (3, 4), (1, 4)}
    assert all(cycle < set(g.edges) for g in five)


def test_enumeration_is_lexicographic_and_valid():
    graphs = list(enumerate_family(6, 7, Family.connected()))
    assert [g.edges for g in graphs] == sorted(g.edges for g in graphs)
    assert len(set(graphs)) == len(graphs)
    for g in graphs:
        assert is_noncrossing(g.edges)
        assert len(components(6, g.edges)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts_match_oracle(n):
    want = Counter(len(g) for g in oracle.connected_graphs(n))
    got = count_by_k(n, Family.connected())
    assert {k: v for k, v in got.items() if v} == dict(want)


@pytest.mark.parametrize("n", range(2, 7))
def test_enumerated_sets_match_oracle(n):
    for k in range(n - 1, 2 * n - 2):
        ours = [g.edges for g in enumerate_family(n, k, Family.connected())]
        assert ours == sorted(oracle.connected_graphs(n, k))


def test_rotate_examples():
    square = NcGraph(4, ((1, 2), (2, 3), (3, 4), (1, 4)))
    assert rotate(square, 1) == square
    assert rotate(NcGraph(2, ((1, 2),)), 1) == NcGraph(2, ((1, 2),))
    path = NcGraph(3, ((1, 2), (2, 3)))
    assert rotate(path, 1).edges == ((1, 3), (2, 3))


@settings(max_examples=40)
@given(st.integers(3, 7), st.integers(0, 20), st.integers(-10, 10), st.integers(-10, 10))
def test_rotation_is_a_group_action(n, pick, s, t):
    graphs = list(enumerate_family(n, n, Family.connected()))
    g = graphs[pick % len(graphs)]
    assert rotate(rotate(g, s), t) == rotate(g, s + t)
    assert rotate(g, n) == g
    assert is_noncrossing(rotate(g, s).edges)


def test_fixed_examples():
    assert count_fixed(4, 3, 2) == 4
    assert count_fixed(4, 4, 2) == 1
    assert count_fixed(6, 6, 3) == 5
    assert count_fixed(4, 5, 4) == 0
    with pytest.raises(InvalidOrder):
        count_fixed(4, 3, 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_fixed_counts_match_oracle(n):
    for d in range(2, n + 1):
        if n % d:
            continue
        for k in range(n - 1, 2 * n - 2):
            assert count_fixed(n, k, d) == oracle.fixed_connected(n, k, d), (n, k, d)


@pytest.mark.parametrize("tag", ["connected", "tree", "dissection", "graph"])
def test_fixed_enumeration_is_the_filter(tag):
    n = 6
    fam = Family(tag)
    for k in range(0, 10):
        for d in (1, 2, 3, 6):
            everything = list(enumerate_family(n, k, fam))
            want = [g for g in everything if rotate(g, n // d) == g]
            assert list(enumerate_fixed(n, k, d, fam)) == want


def test_identity_fixes_everything():
    for tag in ("connected", "dissection", "graph"):
        for k in range(0, 10):
            assert count_fixed(7, k, 1, Family(tag)) == count(7, k, Family(tag))


def test_auxiliary_examples():
    assert count_with_edge_1n(3, 2) == 2
    assert count_with_edge_1n(2, 1) == 1
    assert count_with_edge_1n(4, 5) == 2
    assert count_two_components_separated(4, 2) == 7
    assert count_two_components_separated(3, 1) == 2
    assert count_two_components_separated(3, 2) == 0
    assert count_antipodal_pairs(2, 2) == 5
    assert count_antipodal_pairs(2, 3) == 2
    assert count_antipodal_pairs(1, 1) == 1


@pytest.mark.parametrize("n", range(3, 7))
def test_auxiliary_counts_match_oracle(n):
    for k in range(0, 2 * n - 2):
        assert count_with_edge_1n(n, k) == oracle.with_edge_1n(n, k)
        assert count_two_components_separated(n, k) == oracle.two_components_separated(n, k)


@pytest.mark.parametrize("n", range(1, 4))
def test_antipodal_matches_oracle(n):
    for k in range(0, 2 * n + 1):
        assert count_antipodal_pairs(n, k) == oracle.antipodal_pairs(n, k)


@pytest.mark.parametrize("n", range(2, 8))
def test_other_families_match_oracle(n):
    assert count(n, n - 1, Family.tree()) == len(oracle.trees(n))
    for c in range(1, n + 1):
        assert count(n, n - c, Family.forest(c)) == len(oracle.forests(n, c))
    for k in range(0, 2 * n - 2):
        assert count(n, k, Family.any_graph()) == len(oracle.any_graphs(n, k))
        if n >= 3:
            assert count(n, k, Family.dissection()) == len(oracle.dissections(n, k))


@pytest.mark.parametrize("n", range(1, 8))
def test_partitions_match_oracle(n):
    for b in range(1, n + 1):
        ours = [p.blocks for p in enumerate_partitions(n, b)]
        assert sorted(ours) == sorted(oracle.nc_partitions(n, b))
        assert all(NcPartition(n, p).is_noncrossing() for p in ours)


def test_partition_rotation():
    p = NcPartition(4, ((1, 4), (2, 3)))
    assert rotate(p, 1) == NcPartition(4, ((1, 2), (3, 4)))
    assert not NcPartition(4, ((1, 3), (2, 4))).is_noncrossing()
    with pytest.raises(ValueError):
        NcPartition(3, ((1, 2),))


def test_text_formats():
    g = NcGraph(6, ((1, 2), (2, 3), (1, 6)))
    assert format_graph(g) == "n=6; 1-2 1-6 2-3"
    assert parse_graph(format_graph(g)) == g
    assert format_graph(NcGraph(3, ())) == "n=3;"
    assert parse_graph("n=3;") == NcGraph(3, ())
    p = NcPartition(4, ((1, 4), (2, 3)))
    assert format_partition(p) == "n=4; {1,4}{2,3}"
    assert parse_partition(format_partition(p)) == p
    with pytest.raises(ValueError):
        parse_graph("n=4; 1-3 2-4")
    with pytest.raises(ValueError):
        parse_graph("six vertices")


@settings(max_examples=30)
@given(st.integers(2, 7), st.integers(0, 10**6))
def test_format_round_trip(n, pick):
    graphs = list(enumerate_family(n, None, Family.tree()))
    g = graphs[pick % len(graphs)]
    assert parse_graph(format_graph(g)) == g


def test_families_validate():
    with pytest.raises(ValueError):
        Family("nonsense")
    with pytest.raises(ValueError):
        Family("forest")
    assert str(Family.forest(2)) == "forest(2)"
