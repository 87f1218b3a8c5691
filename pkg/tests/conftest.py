from __future__ import annotations

from collections import Counter, deque

import pytest

from frobcirc.circulant import FrobeniusCirculant
from frobcirc.numtheory import constructible_orders


def brute_solutions(n: int) -> list[int]:
    """Direct-scan oracle for x^2 - x + 1 = 0 (mod n)."""
    return [a for a in range(n) if (a * a - a + 1) % n == 0]


def ej_bfs_distances(ej, source: int = 0) -> list[int]:
    dist = [-1] * ej.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in ej._neighbors[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    assert min(dist) >= 0
    return dist


def distance_multiset(dist: list[int]) -> Counter:
    return Counter(dist)


@pytest.fixture(scope="session")
def small_graphs() -> list[FrobeniusCirculant]:
    """One graph per isomorphism class for every constructible n <= 600."""
    from frobcirc.circulant import canonical_generator

    out = []
    for n, cls in constructible_orders(600):
        for a in sorted({canonical_generator(n, s) for s in cls.solutions}):
            out.append(FrobeniusCirculant(n, a))
    return out
