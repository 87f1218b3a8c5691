"""Circulant graphs on Z_n, specialized to 6-valent first-kind Frobenius circulants.

Graphs are stored implicitly as (order, step set); adjacency is computed on
demand so metric formulas run in O(1) memory.  BFS distance vectors serve as
the independent oracle for every closed-form distance result.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, isqrt

from .numtheory import solve_frobenius_eq

# Materializing adjacency (BFS, exports) is restricted to this many vertices.
MAX_MATERIALIZED = 10**6


@dataclass(frozen=True)
class Circulant:
    """Connected 6-valent circulant Cay(Z_n, {±a, ±b, ±c})."""

    n: int
    steps: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.n < 7:
            raise ValueError(f"order must be at least 7, got {self.n}")
        a, b, c = (s % self.n for s in self.steps)
        signed = {a, b, c, self.n - a, self.n - b, self.n - c}
        if 0 in signed or len(signed) != 6:
            raise ValueError(f"steps {self.steps} do not give a 6-valent circulant")
        if gcd(gcd(a, b), gcd(c, self.n)) != 1:
            raise ValueError(f"Cay(Z_{self.n}, ±{self.steps}) is disconnected")
        object.__setattr__(self, "steps", (a, b, c))

    @cached_property
    def connection_set(self) -> tuple[int, ...]:
        a, b, c = self.steps
        return tuple(sorted({a, b, c, self.n - a, self.n - b, self.n - c}))

    def neighbors(self, v: int) -> list[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        return sorted((v + s) % self.n for s in self.connection_set)


@dataclass(frozen=True)
class FrobeniusCirculant:
    """TL_n(a, a-1, 1): the 6-valent first-kind Frobenius circulant of order n.

    Requires a^2 - a + 1 = 0 (mod n).  The connection set then equals the
    multiplicative group H = <a> = {±1, ±a, ±a^2} and all structural
    invariants (semiregularity, |H| = 6) are checked eagerly on construction.
    """

    n: int
    a: int

    def __post_init__(self) -> None:
        n, a = self.n, self.a
        if n < 7:
            raise ValueError(f"order must be at least 7, got {n}")
        if n % 6 != 1:
            raise ValueError(f"order {n} is not 1 mod 6")
        if not 0 <= a < n or (a * a - a + 1) % n != 0:
            raise ValueError(f"a = {a} does not solve x^2 - x + 1 = 0 mod {n}")
        H = set(self.multipliers)
        if len(H) != 6 or H != set(self.connection_set):
            raise ValueError(f"H = <{a}> mod {n} is not a group of order 6 equal to S")
        for h in H:
            if h != 1 and gcd(h - 1, n) != 1:
                raise ValueError(f"H not semiregular: gcd({h} - 1, {n}) > 1")

    @cached_property
    def multipliers(self) -> tuple[int, ...]:
        """Powers (a^0, a^1, ..., a^5) mod n, the sector rotation order."""
        n, a = self.n, self.a
        out = [1]
        for _ in range(5):
            out.append(out[-1] * a % n)
        return tuple(out)

    @cached_property
    def connection_set(self) -> tuple[int, ...]:
        n, a = self.n, self.a
        return tuple(sorted({1, a, (a - 1) % n, n - 1, n - a, (1 - a) % n}))

    @property
    def steps(self) -> tuple[int, int, int]:
        return (self.a, (self.a - 1) % self.n, 1)

    def neighbors(self, v: int) -> list[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        return sorted((v + s) % self.n for s in self.connection_set)

    def h_orbit(self, x: int) -> set[int]:
        """The orbit {x * h : h in H}; has exactly 6 elements for x != 0."""
        if x % self.n == 0:
            raise ValueError("0 is fixed by H; orbits are defined on Z_n \\ {0}")
        orbit = {x * h % self.n for h in self.multipliers}
        if len(orbit) != 6:
            raise AssertionError(f"orbit of {x} mod {self.n} has size {len(orbit)}")
        return orbit

    def diameter_upper_bound(self) -> int:
        # From the maximal order 3k^2+3k+1 of a diameter-k geometric circulant.
        return (1 + isqrt(12 * self.n - 3)) // 3 + 1


def new_frobenius(n: int, a: int) -> FrobeniusCirculant:
    """Validated constructor; rejects a that is not a root of x^2 - x + 1 mod n."""
    if a not in solve_frobenius_eq(n):
        raise ValueError(f"a = {a} does not solve x^2 - x + 1 = 0 mod {n}")
    return FrobeniusCirculant(n, a)


def canonical_generator(n: int, a: int) -> int:
    """Representative min(a, -a^2 mod n) of the isomorphism class of TL_n(a, a-1, 1).

    The roots a and -a^2 generate the same subgroup H, hence the same graph;
    distinct canonical values mean non-isomorphic graphs.
    """
    if (a * a - a + 1) % n != 0:
        raise ValueError(f"a = {a} does not solve x^2 - x + 1 = 0 mod {n}")
    return min(a, (-a * a) % n)


def bfs_distances(g, source: int = 0) -> list[int]:
    """Exact distances from ``source`` to every vertex, by breadth-first search.

    Works for any object with fields ``n`` and ``neighbors``; this is the
    oracle against which all closed-form distance results are checked.
    """
    n = g.n
    if n > MAX_MATERIALIZED:
        raise ValueError(f"n = {n} too large to materialize for BFS")
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g.neighbors(v):
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    if min(dist) < 0:
        raise AssertionError("graph is disconnected")
    return dist


def distance_closed_form(g: FrobeniusCirculant, u: int) -> int:
    """Distance from vertex 0 to u as min{i + j : u = (i + j*a) * a^k mod n}.

    Scans hexagonal rings of increasing radius; the scan is capped by a bound
    provably at least the diameter, so failure to hit means a broken graph.
    """
    n, a = g.n, g.a
    u %= n
    if u == 0:
        return 0
    # {u * a^-k} = u * H since H is a group, so no inversion needed
    targets = {u * m % n for m in g.multipliers}
    cap = g.diameter_upper_bound()
    for ell in range(1, cap + 1):
        ja = 0
        for j in range(ell + 1):
            if (ell - j + ja) % n in targets:
                return ell
            ja += a
    raise AssertionError(f"no representation of {u} within radius {cap} (n={n}, a={a})")


def is_complete_rotation(g: FrobeniusCirculant, m: int) -> bool:
    """True iff multiplication by m fixes S setwise as a single 6-cycle."""
    if gcd(m, g.n) != 1:
        raise ValueError(f"gcd({m}, {g.n}) != 1")
    S = set(g.connection_set)
    image = {s * m % g.n for s in S}
    if image != S:
        return False
    x = next(iter(S))
    length = 1
    y = x * m % g.n
    while y != x:
        y = y * m % g.n
        length += 1
    return length == 6


def hamilton_decomposition(g: FrobeniusCirculant) -> list[list[int]]:
    """Three edge-disjoint Hamilton cycles stepping by 1, a, and a-1."""
    n = g.n
    cycles = []
    for s in (1, g.a, (g.a - 1) % n):
        cycle = [0]
        v = s
        while v != 0:
            cycle.append(v)
            v = (v + s) % n
        if len(cycle) != n:
            raise AssertionError(f"step {s} is not coprime to {n}")
        cycles.append(cycle)
    return cycles
