"""Topological covers: circulant quotients and EJ cover expansion.

A cover is a surjection of vertex sets that restricts to a bijection on every
neighborhood; a k-fold cover additionally has all fibers of size k.  The
verifier re-proves these properties exhaustively rather than trusting the
constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .circulant import FrobeniusCirculant, canonical_generator
from .eisenstein import (
    UNITS,
    ZERO,
    EJGraph,
    EJInt,
    canonicalize,
    ej_mod,
    ej_to_circulant,
)


@dataclass(frozen=True)
class CoverMap:
    """Projection from a covering graph onto a base graph, by vertex index."""

    total_order: int
    base_order: int
    projection: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.projection) != self.total_order:
            raise ValueError("projection length differs from total order")
        if self.total_order % self.base_order != 0:
            raise ValueError("base order does not divide total order")

    @property
    def fold(self) -> int:
        return self.total_order // self.base_order

    def to_json(self) -> list[int]:
        return list(self.projection)


@dataclass(frozen=True)
class CoverViolation:
    kind: str
    vertex: int | None
    detail: str


def check_cover(cover: CoverMap, total, base) -> CoverViolation | None:
    """First cover-property violation, or None if the map is a valid cover.

    Checks surjectivity, uniform fiber size, and that the projection is a
    bijection from each vertex's neighborhood onto its image's neighborhood.
    """
    if total.n != cover.total_order or base.n != cover.base_order:
        return CoverViolation("orders", None, "graph orders disagree with cover map")
    fibers = [0] * base.n
    for img in cover.projection:
        if not 0 <= img < base.n:
            return CoverViolation("range", None, f"image {img} out of range")
        fibers[img] += 1
    if min(fibers) == 0:
        return CoverViolation("surjectivity", fibers.index(0), "empty fiber")
    if max(fibers) != cover.fold or min(fibers) != cover.fold:
        v = fibers.index(max(fibers))
        return CoverViolation("fibers", v, f"fiber sizes range {min(fibers)}..{max(fibers)}")
    proj = cover.projection
    for u in range(total.n):
        image = [proj[w] for w in total.neighbors(u)]
        if len(set(image)) != len(image):
            return CoverViolation("local-injectivity", u, "neighbors collapse")
        if sorted(image) != sorted(base.neighbors(proj[u])):
            return CoverViolation("local-surjectivity", u, "neighborhood image differs")
    return None


def verify_cover(cover: CoverMap, total, base) -> bool:
    return check_cover(cover, total, base) is None


def quotient_circulant(g: FrobeniusCirculant, m: int) -> tuple[FrobeniusCirculant, CoverMap]:
    """Quotient of TL_n(a, a-1, 1) by the subgroup of multiples of m, for m | n.

    The image is the order-m Frobenius circulant with generator a mod m
    (stored in canonical form; same graph either way) and v -> v mod m is an
    (n/m)-fold cover projection.
    """
    n = g.n
    if m <= 1 or m >= n or n % m != 0:
        raise ValueError(f"m = {m} is not a proper nontrivial divisor of {n}")
    base = FrobeniusCirculant(m, canonical_generator(m, g.a % m))
    cover = CoverMap(n, m, tuple(v % m for v in range(n)))
    return base, cover


def ej_cover_expand(alpha: EJInt, beta: EJInt) -> tuple[EJGraph, CoverMap]:
    """Build EJ on alpha*beta from EJ_alpha by its edge-lifting rule and verify.

    Every edge [xi] ~ [xi - eps] of EJ_alpha (eps a unit) lifts to the edges
    [alpha*delta + xi] ~ [alpha*delta + xi - eps] over all residues delta mod
    beta.  The lifted graph must coincide with the directly constructed EJ
    graph on alpha*beta; the natural residue map is an N(beta)-fold cover.
    """
    if alpha.norm() < 7:
        raise ValueError(f"N(alpha) = {alpha.norm()} < 7")
    if not beta:
        raise ValueError("beta must be nonzero")
    small = EJGraph(alpha)
    big = EJGraph(alpha * beta)

    deltas = _residues_mod(beta)
    if len(deltas) != beta.norm():
        raise AssertionError("residue system mod beta has wrong size")

    lifted: set[tuple[int, int]] = set()
    for xi in small.vertices:
        for eps in UNITS:
            for delta in deltas:
                top = alpha * delta + xi
                e = (big.reduce(top), big.reduce(top - eps))
                lifted.add(e)
                lifted.add((e[1], e[0]))
    if lifted != set(big.arcs()):
        raise AssertionError(
            f"lifted graph differs from EJ on {alpha * beta}"
        )

    proj = tuple(small.reduce(v) for v in big.vertices)
    cover = CoverMap(big.n, small.n, proj)
    return big, cover


def _residues_mod(beta: EJInt) -> list[EJInt]:
    """A complete residue system mod beta (the canonical division remainders)."""
    if beta.norm() == 1:
        return [ZERO]
    seen: dict[EJInt, None] = {}
    frontier = [ej_mod(ZERO, beta)]
    seen[frontier[0]] = None
    while frontier:
        v = frontier.pop()
        for u in UNITS:
            w = ej_mod(v + u, beta)
            if w not in seen:
                seen[w] = None
                frontier.append(w)
    return list(seen)


def frobenius_reduction(alpha: EJInt) -> tuple[FrobeniusCirculant, CoverMap]:
    """Reduce EJ_alpha with gcd(c, d) = l to its underlying Frobenius circulant.

    Requires N(alpha) = 1 (mod 6) and alpha not an associate of a real
    integer.  Returns the circulant isomorphic to EJ_{alpha/l} together with
    the l^2-fold cover projection (trivial bijection when l = 1).
    """
    if not alpha:
        raise ValueError("alpha must be nonzero")
    n = alpha.norm()
    if n % 6 != 1:
        raise ValueError(f"norm {n} is not 1 mod 6")
    if canonicalize(alpha)[1] == 0:
        raise ValueError(f"{alpha} is an associate of a real integer")
    ell = gcd(alpha.x, alpha.y)
    reduced = EJInt(alpha.x // ell, alpha.y // ell)
    base = ej_to_circulant(reduced)
    total = EJGraph(alpha)
    # project along residues mod alpha/l, then through the ring map
    # x + y*rho -> x + y*a_raw mod m, where a_raw annihilates the reduced ideal
    m = base.n
    a_raw = -reduced.x * pow(reduced.y % m, -1, m) % m
    proj = tuple((v.x + v.y * a_raw) % m for v in total.vertices)
    cover = CoverMap(total.n, m, proj)
    violation = check_cover(cover, total, base)
    if violation is not None:
        raise AssertionError(f"reduction of {alpha} is not a cover: {violation}")
    return base, cover
