"""Tests for the graph constructions."""

from collections import Counter

import networkx as nx
import pytest

from supersat.core.constructions import (
    DegreeProfile,
    ExtremalVariant,
    PartitionSpec,
    build_hstar,
    ex_bowtie,
    extremal_bowtie_free,
    near_regular_degrees,
    part_realizable,
    partition_spec,
    realize_part,
    realize_trifree,
    search_trifree,
    trifree_even,
    trifree_odd,
    trifree_regular,
    turan,
    upper_bound_graph,
)
from supersat.core.counting import count_bowties, count_triangles
from supersat.core.errors import (
    PreconditionViolated,
    TooSmall,
    Unrealizable,
    UnrealizableReason,
)
from supersat.core.formulas import upper_bound_value


def _is_trifree(g):
    return count_triangles(g).triangles == 0


@pytest.mark.parametrize(("r", "n", "m"), [(2, 4, 4), (2, 5, 6), (3, 6, 12), (1, 4, 0)])
def test_turan_edge_counts(r, n, m):
    """Test Turán graphs have the standard edge counts."""
    assert turan(r, n).m == m


def test_turan_larger_part_first():
    """Test T2(5) puts its part of size 3 on vertices 0..2."""
    g = turan(2, 5)
    assert g.degrees() == [2, 2, 2, 3, 3]


def test_ex_bowtie():
    """Test the Turán number of the bowtie."""
    assert ex_bowtie(5) == 7
    assert ex_bowtie(6) == 10
    with pytest.raises(TooSmall):
        ex_bowtie(4)


def test_extremal_n5():
    """Test T2(5) plus an edge in the larger part."""
    g = extremal_bowtie_free(5)
    assert g.m == 7
    assert count_bowties(g) == 0
    # the extra edge closes one triangle with each vertex of the smaller part
    assert count_triangles(g).triangles == 2


def test_extremal_variants_differ_for_odd_n():
    """Test the two variants are non-isomorphic exactly when n is odd."""
    for n, expected in ((5, False), (6, True), (7, False)):
        larger = extremal_bowtie_free(n, ExtremalVariant.LARGER).to_networkx()
        smaller = extremal_bowtie_free(n, ExtremalVariant.SMALLER).to_networkx()
        assert nx.is_isomorphic(larger, smaller) is expected


def test_extremal_graphs_are_bowtie_free():
    """Test every extremal graph has ex(n) edges and no bowtie."""
    for n in range(5, 65):
        for variant in ExtremalVariant:
            g = extremal_bowtie_free(n, variant)
            assert g.m == ex_bowtie(n)
            assert count_bowties(g) == 0


def test_upper_bound_graph_examples():
    """Test the upper-bound construction on small cases."""
    g = upper_bound_graph(8, 0)
    assert g.m == 17
    assert count_bowties(g) == 0

    g = upper_bound_graph(12, 2)
    assert g.m == 39
    assert count_bowties(g) <= 468

    with pytest.raises(Unrealizable) as excinfo:
        upper_bound_graph(8, 10)
    assert excinfo.value.reason is UnrealizableReason.DENSITY


def test_upper_bound_graph_respects_bound():
    """Test the bowtie count never exceeds (q+1)^2 (13n/4 + 13)."""
    for n in range(8, 65, 4):
        for q in range(min(10, n * n // 20) + 1):
            quarter = n // 4
            if (q + 1) // quarter >= quarter:
                with pytest.raises(Unrealizable):
                    upper_bound_graph(n, q)
                continue
            g = upper_bound_graph(n, q)
            assert g.m == ex_bowtie(n) + q
            assert count_bowties(g) <= upper_bound_value(n, q)


def test_trifree_even_examples():
    """Test the bipartite two-degree construction."""
    g = trifree_even(1, 1, 1)
    assert g.edges() == [(0, 2), (0, 3), (1, 2)]
    assert sorted(g.degrees()) == [1, 1, 2, 2]

    matching = trifree_even(0, 2, 0)
    assert matching.degrees() == [1, 1, 1, 1]
    assert matching.m == 2

    cycle = trifree_even(2, 0, 3)
    assert cycle.degrees() == [2] * 6
    assert _is_trifree(cycle)

    with pytest.raises(PreconditionViolated):
        trifree_even(3, 1, 1)
    with pytest.raises(PreconditionViolated):
        trifree_even(0, 0, 0)


def test_trifree_odd_examples():
    """Test the construction with one special vertex."""
    g = trifree_odd(1, 0)
    assert g.edges() == [(1, 3), (2, 4)]
    assert g.degrees() == [0, 1, 1, 1, 1]

    g = trifree_odd(1, 1)
    assert g.neighbors(0) == [1, 3]
    assert g.degrees() == [2, 1, 1, 1, 1]

    assert trifree_odd(0, 0).n == 1
    with pytest.raises(PreconditionViolated):
        trifree_odd(1, 2)


def test_trifree_odd_degrees():
    """Test degrees and triangle-freeness over a grid."""
    for k in range(8):
        for m in range(k + 1):
            g = trifree_odd(k, m)
            assert g.degree(0) == 2 * m
            assert all(g.degree(v) == k for v in range(1, g.n))
            assert _is_trifree(g)


def test_trifree_regular():
    """Test regular triangle-free graphs in both parities."""
    assert trifree_regular(7, 2).degrees() == [2] * 7
    assert _is_trifree(trifree_regular(13, 4))
    assert trifree_regular(6, 3).m == 9
    with pytest.raises(Unrealizable) as excinfo:
        trifree_regular(5, 1)
    assert excinfo.value.reason is UnrealizableReason.PARITY
    with pytest.raises(Unrealizable) as excinfo:
        trifree_regular(6, 4)
    assert excinfo.value.reason is UnrealizableReason.DENSITY


def test_realize_trifree_examples():
    """Test the worked cases of the two-degree realiser."""
    g = realize_trifree(DegreeProfile(alpha=7, a=2, beta=4, b=1))
    assert Counter(g.degrees()) == {2: 7, 1: 4}
    assert _is_trifree(g)

    matching = realize_trifree(DegreeProfile(alpha=4, a=1, beta=0, b=0))
    assert matching.degrees() == [1, 1, 1, 1]

    with pytest.raises(Unrealizable) as excinfo:
        realize_trifree(DegreeProfile(alpha=3, a=1, beta=3, b=2))
    assert excinfo.value.reason is UnrealizableReason.PARITY

    with pytest.raises(Unrealizable) as excinfo:
        realize_trifree(DegreeProfile(alpha=4, a=1, beta=4, b=3))
    assert excinfo.value.reason is UnrealizableReason.UNSUPPORTED


def test_realize_trifree_density_is_strict_only():
    """Test the density precondition is skipped in non-strict mode."""
    profile = DegreeProfile(alpha=2, a=2, beta=4, b=1)
    with pytest.raises(Unrealizable) as excinfo:
        realize_trifree(profile)
    assert excinfo.value.reason is UnrealizableReason.DENSITY
    g = realize_trifree(profile, strict=False)
    assert Counter(g.degrees()) == {2: 2, 1: 4}
    assert _is_trifree(g)


def test_realize_trifree_sweep():
    """Test every profile meeting the preconditions up to 40 vertices is realized."""
    built = 0
    for order in range(1, 41):
        for alpha in range(order + 1):
            beta = order - alpha
            for a in range(order):
                for b in (a - 1, a + 1):
                    if b < 0 or (alpha * a + beta * b) % 2:
                        continue
                    if not 3 * (a + b) < order - 1:
                        continue
                    g = realize_trifree(DegreeProfile(alpha=alpha, a=a, beta=beta, b=b))
                    expected = Counter({a: alpha}) + Counter({b: beta})
                    assert Counter(g.degrees()) == expected, (alpha, a, beta, b)
                    assert _is_trifree(g)
                    built += 1
    assert built > 0


@pytest.mark.parametrize(
    ("alpha", "a", "beta", "b"),
    [(7, 2, 10, 3), (10, 3, 7, 2), (2, 1, 9, 2), (9, 2, 2, 1)],
)
def test_odd_class_profiles_without_core_room(alpha, a, beta, b):
    """Test two-degree profiles with exactly one odd class."""
    g = realize_trifree(DegreeProfile(alpha=alpha, a=a, beta=beta, b=b))
    assert Counter(g.degrees()) == Counter({a: alpha}) + Counter({b: beta})
    assert _is_trifree(g)


def test_odd_class_fallback_is_bipartite():
    """Test a profile with no odd-core room comes back bipartite."""
    g = realize_trifree(DegreeProfile(alpha=7, a=2, beta=10, b=3))
    assert nx.is_bipartite(g.to_networkx())
    assert g.m == 22


def test_near_regular_degrees():
    """Test larger degrees come first and the sum is 2b."""
    assert near_regular_degrees(3, 2) == [2, 1, 1]
    assert near_regular_degrees(4, 2) == [1, 1, 1, 1]
    assert near_regular_degrees(0, 0) == []
    with pytest.raises(PreconditionViolated):
        near_regular_degrees(0, 1)


def test_partition_spec_validation():
    """Test odd part sums and wrong lengths are refused."""
    spec = partition_spec(4, 4, 2, 0)
    assert spec.part1 == (1, 1, 1, 1)
    assert (spec.b1, spec.b2, spec.n) == (2, 0, 8)
    assert not spec.within_density_cap
    assert partition_spec(8, 8, 4, 0).within_density_cap
    with pytest.raises(PreconditionViolated):
        PartitionSpec(v1=2, v2=1, phi=(1, 0, 0))
    with pytest.raises(PreconditionViolated):
        PartitionSpec(v1=2, v2=1, phi=(1, 1))


def test_search_trifree():
    """Test the small-part search on a path and on an impossible sequence."""
    path = search_trifree([2, 1, 1])
    assert path is not None
    assert path.degrees() == [2, 1, 1]
    assert search_trifree([2, 2, 2]) is None


def test_realize_part_falls_back_to_search():
    """Test a part that needs a blown-up 5-cycle is found by search."""
    profile = DegreeProfile(alpha=1, a=2, beta=6, b=3)
    with pytest.raises(Unrealizable) as excinfo:
        realize_trifree(profile, strict=False)
    assert excinfo.value.reason is UnrealizableReason.UNSUPPORTED

    g = realize_part(7, 10)
    assert g.degrees() == [3, 3, 3, 3, 3, 3, 2]
    assert _is_trifree(g)
    assert not nx.is_bipartite(g.to_networkx())


def test_part_realizable():
    """Test P3 via the bipartite route and the triangle on three vertices."""
    assert realize_part(3, 2).degrees() == [2, 1, 1]
    assert part_realizable(3, 2)
    assert not part_realizable(3, 3)


@pytest.mark.parametrize(
    ("v1", "v2", "b1", "b2", "bowties"),
    [(4, 4, 1, 0, 0), (4, 4, 2, 0, 4), (3, 2, 2, 0, 2), (3, 3, 1, 1, 4)],
)
def test_build_hstar_examples(v1, v2, b1, b2, bowties):
    """Test H* on the worked examples."""
    g = build_hstar(partition_spec(v1, v2, b1, b2))
    assert g.m == v1 * v2 + b1 + b2
    assert count_bowties(g) == bowties


def test_build_hstar_follows_phi():
    """Test higher phi entries receive the higher realised degrees."""
    spec = PartitionSpec(v1=3, v2=2, phi=(1, 1, 2, 0, 0))
    g = build_hstar(spec)
    assert g.induced_degrees(range(3)) == [1, 1, 2]
