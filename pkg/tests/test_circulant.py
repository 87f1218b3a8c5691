import random

import pytest

from frobcirc.circulant import (
    Circulant,
    FrobeniusCirculant,
    bfs_distances,
    canonical_generator,
    distance_closed_form,
    hamilton_decomposition,
    is_complete_rotation,
    new_frobenius,
)
from frobcirc.numtheory import constructible_orders
from conftest import distance_multiset


def test_new_frobenius_figure_one():
    g = new_frobenius(49, 31)
    assert g.connection_set == (1, 18, 19, 30, 31, 48)


def test_new_frobenius_k7():
    assert new_frobenius(7, 3).connection_set == (1, 2, 3, 4, 5, 6)


def test_new_frobenius_rejects_non_solution():
    with pytest.raises(ValueError):
        new_frobenius(49, 30)
    with pytest.raises(ValueError):
        new_frobenius(5, 3)


def test_generic_circulant_validation():
    Circulant(13, (1, 3, 4))
    with pytest.raises(ValueError):
        Circulant(13, (1, 3, 10))  # 10 = -3, not 6-valent
    with pytest.raises(ValueError):
        Circulant(12, (2, 4, 6))  # disconnected


def test_neighbors():
    g = new_frobenius(49, 31)
    assert g.neighbors(0) == [1, 18, 19, 30, 31, 48]
    assert g.neighbors(48) == [0, 17, 18, 29, 30, 47]
    assert new_frobenius(7, 3).neighbors(0) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(ValueError):
        g.neighbors(49)


def test_h_orbits():
    g = new_frobenius(49, 31)
    assert g.h_orbit(1) == {1, 18, 19, 30, 31, 48}
    assert new_frobenius(13, 4).h_orbit(5) == {2, 5, 6, 7, 8, 11}
    assert new_frobenius(7, 3).h_orbit(1) == {1, 2, 3, 4, 5, 6}
    with pytest.raises(ValueError):
        g.h_orbit(0)


def test_h_orbits_partition(small_graphs):
    for g in small_graphs:
        seen = set()
        orbits = 0
        for x in range(1, g.n):
            if x in seen:
                continue
            orb = g.h_orbit(x)
            assert not orb & seen
            seen |= orb
            orbits += 1
        assert seen == set(range(1, g.n))
        assert orbits == (g.n - 1) // 6


def test_bfs_examples():
    g = new_frobenius(49, 31)
    d = bfs_distances(g)
    assert max(d) == 4
    d7 = bfs_distances(new_frobenius(7, 3))
    assert d7[0] == 0 and all(x == 1 for x in d7[1:])
    d13 = bfs_distances(new_frobenius(13, 4))
    assert distance_multiset(d13) == {0: 1, 1: 6, 2: 6}


def test_distance_closed_form_examples():
    g = new_frobenius(49, 31)
    assert distance_closed_form(g, 34) == 4
    assert distance_closed_form(g, 0) == 0
    assert distance_closed_form(new_frobenius(13, 4), 6) == 2


def test_distance_closed_form_matches_bfs(small_graphs):
    for g in small_graphs:
        dist = bfs_distances(g)
        for u in range(g.n):
            assert distance_closed_form(g, u) == dist[u], (g.n, g.a, u)


def test_distance_closed_form_sampled_large():
    # spot checks across the full 50000 range the module invariant names
    rng = random.Random(7)
    for n, cls in constructible_orders(50000, start=5000):
        if rng.random() > 0.008:
            continue
        g = FrobeniusCirculant(n, cls.solutions[0])
        dist = bfs_distances(g)
        for u in rng.sample(range(n), 40):
            assert distance_closed_form(g, u) == dist[u]


def test_vertex_transitivity_consequence(small_graphs):
    for g in small_graphs[:20]:
        base = distance_multiset(bfs_distances(g, 0))
        for src in (1, g.n // 2, g.n - 1):
            assert distance_multiset(bfs_distances(g, src)) == base


def test_complete_rotations():
    g = new_frobenius(49, 31)
    assert is_complete_rotation(g, 31)
    assert is_complete_rotation(g, 19)  # -a^2 mod 49
    assert not is_complete_rotation(g, 48)
    with pytest.raises(ValueError):
        is_complete_rotation(g, 7)


def test_multiplication_by_a_six_cycles_s(small_graphs):
    for g in small_graphs:
        assert is_complete_rotation(g, g.a)
        assert is_complete_rotation(g, (-g.a * g.a) % g.n)


def test_hamilton_decomposition_k7():
    cycles = hamilton_decomposition(new_frobenius(7, 3))
    assert cycles[0] == [0, 1, 2, 3, 4, 5, 6]
    assert cycles[1] == [0, 3, 6, 2, 5, 1, 4]
    assert cycles[2] == [0, 2, 4, 6, 1, 3, 5]


@pytest.mark.parametrize("n,a", [(49, 31), (13, 4), (91, 17)])
def test_hamilton_decomposition_partitions_edges(n, a):
    g = new_frobenius(n, a)
    cycles = hamilton_decomposition(g)
    all_edges = set()
    for cycle in cycles:
        assert len(cycle) == n and len(set(cycle)) == n
        edges = set()
        for x, y in zip(cycle, cycle[1:] + cycle[:1]):
            assert (y - x) % n in g.connection_set
            edges.add(frozenset({x, y}))
        assert len(edges) == n
        assert not edges & all_edges
        all_edges |= edges
    assert len(all_edges) == 3 * n


def test_canonical_generator():
    assert canonical_generator(49, 31) == 19
    assert canonical_generator(49, 19) == 19
    assert canonical_generator(91, 17) == 17
    with pytest.raises(ValueError):
        canonical_generator(49, 30)


def test_canonical_generator_separates_classes():
    # n = 91 has two classes; their graphs have different edge sets
    gens = {canonical_generator(91, a) for a in (10, 17, 75, 82)}
    assert gens == {10, 17}
    g1, g2 = new_frobenius(91, 10), new_frobenius(91, 17)
    assert g1.connection_set != g2.connection_set
