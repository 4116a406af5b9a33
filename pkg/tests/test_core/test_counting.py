"""Tests for triangle and bowtie counting."""

import networkx as nx
import numpy as np
import pytest

from supersat.core.constructions import turan
from supersat.core.counting import (
    CountMethod,
    bowties_containing_edge,
    classify_bowties,
    count_bowties,
    count_bowties_naive,
    count_triangles,
    iter_bowties,
)
from supersat.core.errors import EdgeAbsent
from supersat.core.graph import Graph, random_graph


def test_k4_triangles():
    """Test K4 has four triangles, three through each vertex."""
    k4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    report = count_triangles(k4)
    assert report.triangles == 4
    assert report.per_vertex_triangles == [3, 3, 3, 3]
    assert report.bowties == 0


def test_k5_counts(k5):
    """Test K5 has 10 triangles, 3 per edge, and 15 bowties."""
    report = count_triangles(k5)
    assert report.triangles == 10
    assert set(report.per_edge_triangles.values()) == {3}
    assert count_bowties(k5) == 15
    assert count_bowties(k5, CountMethod.NAIVE) == 15


def test_bipartite_graph_has_no_bowties():
    """Test K(3,3) is triangle-free."""
    k33 = turan(2, 6)
    assert count_triangles(k33).triangles == 0
    assert count_bowties(k33) == 0
    assert bowties_containing_edge(k33, 0, 3) == 0


def test_bowtie_graph_counts(bowtie_graph):
    """Test the bowtie contains itself once and every edge lies in it."""
    assert count_bowties(bowtie_graph) == 1
    for u, v in bowtie_graph.edges():
        assert bowties_containing_edge(bowtie_graph, u, v) == 1
    assert list(iter_bowties(bowtie_graph)) == [(0, (1, 2), (3, 4))]


def test_k5_edge_participation(k5):
    """Test each edge of K5 lies in 9 bowties."""
    assert all(bowties_containing_edge(k5, u, v) == 9 for u, v in k5.edges())


def test_bowties_containing_missing_edge(path3):
    """Test a non-edge raises EdgeAbsent."""
    with pytest.raises(EdgeAbsent):
        bowties_containing_edge(path3, 0, 2)


def test_tally_invariants():
    """Test per-vertex and per-edge triangle sums equal three times the total."""
    for seed in range(50):
        g = random_graph(14, 0.5, seed)
        report = count_triangles(g)
        assert sum(report.per_vertex_triangles) == 3 * report.triangles
        assert sum(report.per_edge_triangles.values()) == 3 * report.triangles
        assert report.triangles == sum(nx.triangles(g.to_networkx()).values()) // 3


def test_formula_matches_naive_enumeration():
    """Test the per-vertex identity against 5-subset enumeration."""
    rng = np.random.default_rng(2024)
    for seed in range(500):
        n = int(rng.integers(0, 13))
        g = random_graph(n, float(rng.uniform(0.2, 0.9)), seed)
        expected = count_bowties_naive(g)
        assert count_bowties(g) == expected
        assert sum(1 for _ in iter_bowties(g)) == expected


def test_adding_edges_never_lowers_count():
    """Test monotonicity under random edge insertions."""
    rng = np.random.default_rng(5)
    g = Graph.empty(9)
    count = 0
    for _ in range(30):
        candidates = list(g.iter_non_edges())
        if not candidates:
            break
        u, v = candidates[int(rng.integers(len(candidates)))]
        g = g.with_edge(u, v)
        new_count = count_bowties(g)
        assert new_count >= count
        count = new_count


def test_edge_differencing_definition():
    """Test per-edge participation equals the count drop on deletion."""
    for seed in range(100):
        g = random_graph(9, 0.6, seed)
        total = count_bowties(g)
        for u, v in g.edges():
            assert bowties_containing_edge(g, u, v) == total - count_bowties(g.without_edge(u, v))
            assert 0 <= bowties_containing_edge(g, u, v) <= total


def test_classify_bowtie_types():
    """Test each placement of the two within-part edges."""
    base = turan(2, 8)
    part1 = frozenset(range(4))
    disjoint = base.with_edge(0, 1).with_edge(2, 3)
    assert classify_bowties(disjoint, part1).model_dump() == {
        "type1": 4,
        "type2": 0,
        "type3": 0,
        "other": 0,
    }
    adjacent = base.with_edge(0, 1).with_edge(1, 2)
    assert classify_bowties(adjacent, part1).type2 == 4 * 3
    cross = base.with_edge(0, 1).with_edge(4, 5)
    types = classify_bowties(cross, part1)
    assert types.type3 == 2 * (8 - 4)
    assert types.total == count_bowties(cross)


def test_count_report_serialises_edges(path3):
    """Test per-edge tallies dump as [u, v, t] triples."""
    dumped = count_triangles(path3).model_dump()
    assert dumped["per_edge_triangles"] == [[0, 1, 0], [1, 2, 0]]
