"""Eisenstein-Jacobi integer arithmetic and EJ graphs.

The ring Z[rho] with rho = (1 + sqrt(-3))/2 satisfies rho^2 = rho - 1 and
rho^3 = -1; its units are the six powers of rho and its norm is
N(x + y*rho) = x^2 + x*y + y^2.  EJ_alpha is the Cayley graph on the additive
group of Z[rho]/(alpha) whose connection set is the six units.

This module also carries the bidirectional conversion between EJ graphs with
coprime coordinates and 6-valent first-kind Frobenius circulants, the
closed-form distance distribution, and an arc-transitivity verifier.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd, isqrt

from .circulant import FrobeniusCirculant, canonical_generator, new_frobenius


@dataclass(frozen=True)
class EJInt:
    """The Eisenstein-Jacobi integer x + y*rho."""

    x: int
    y: int

    def __add__(self, other: EJInt) -> EJInt:
        return EJInt(self.x + other.x, self.y + other.y)

    def __sub__(self, other: EJInt) -> EJInt:
        return EJInt(self.x - other.x, self.y - other.y)

    def __neg__(self) -> EJInt:
        return EJInt(-self.x, -self.y)

    def __mul__(self, other: EJInt | int) -> EJInt:
        if isinstance(other, int):
            return EJInt(self.x * other, self.y * other)
        # (x1 + y1 rho)(x2 + y2 rho) with rho^2 = rho - 1
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        return EJInt(x1 * x2 - y1 * y2, x1 * y2 + x2 * y1 + y1 * y2)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def conj(self) -> EJInt:
        """Complex conjugate: x + y*rho maps to (x + y) - y*rho."""
        return EJInt(self.x + self.y, -self.y)

    def norm(self) -> int:
        return self.x * self.x + self.x * self.y + self.y * self.y

    def __str__(self) -> str:
        return f"{self.x}{self.y:+}r"

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y}


ZERO = EJInt(0, 0)
ONE = EJInt(1, 0)
RHO = EJInt(0, 1)
#: The six units 1, rho, rho^2, -1, -rho, -rho^2 in rotation order.
UNITS = (ONE, RHO, EJInt(-1, 1), EJInt(-1, 0), EJInt(0, -1), EJInt(1, -1))


def _round_half_down(p: int, m: int) -> int:
    """Nearest integer to p/m (m > 0), ties toward negative infinity."""
    return (2 * p + m - 1) // (2 * m)


def ej_divmod(u: EJInt, v: EJInt) -> tuple[EJInt, EJInt]:
    """Euclidean division u = q*v + r with N(r) < N(v).

    The quotient rounds the exact complex quotient to the nearest lattice
    point coordinate-wise; nearest rounding makes N(r) <= (3/4) N(v).
    """
    if not v:
        raise ZeroDivisionError("division by zero EJ integer")
    nv = v.norm()
    w = u * v.conj()  # u/v = w / nv exactly
    q = EJInt(_round_half_down(w.x, nv), _round_half_down(w.y, nv))
    r = u - q * v
    if r.norm() >= nv:
        raise AssertionError(f"division failed: N({r}) >= N({v})")
    return q, r


def ej_mod(u: EJInt, v: EJInt) -> EJInt:
    return ej_divmod(u, v)[1]


def canonical_associate(alpha: EJInt) -> EJInt:
    """The unique associate rho^j * alpha with x > 0 and y >= 0.

    Associates generate the same ideal, so this normalizes gcd outputs
    without changing the quotient ring.
    """
    if not alpha:
        raise ValueError("zero has no canonical associate")
    a = alpha
    for _ in range(6):
        if a.x > 0 and a.y >= 0:
            return a
        a = a * RHO
    raise AssertionError(f"no associate of {alpha} in the positive sector")


def ej_gcd(u: EJInt, v: EJInt) -> EJInt:
    """Greatest common divisor in Z[rho], returned as the canonical associate."""
    if not u and not v:
        raise ValueError("gcd(0, 0) is undefined")
    while v:
        u, v = v, ej_mod(u, v)
    return canonical_associate(u)


def canonicalize(alpha: EJInt) -> tuple[int, int]:
    """Representative (c, d) with c >= d >= 0 of alpha's associate/conjugate class.

    Searched over the 12 candidates {rho^j * alpha} and {rho^j * swap(alpha)};
    when more than one lies in the sector (only for d = 0 or c = d) the
    lexicographically largest is returned.
    """
    if not alpha:
        raise ValueError("cannot canonicalize zero")
    candidates = []
    for seed in (alpha, EJInt(alpha.y, alpha.x)):
        a = seed
        for _ in range(6):
            if a.x >= a.y >= 0:
                candidates.append((a.x, a.y))
            a = a * RHO
    if not candidates:
        raise AssertionError(f"no canonical form found for {alpha}")
    return max(candidates)


class EJGraph:
    """The Cayley graph EJ_alpha on Z[rho]/(alpha), materialized.

    Vertices are the canonical division remainders mod alpha, indexed in the
    deterministic order discovered by a BFS from 0 along the six units.
    """

    def __init__(self, alpha: EJInt):
        if not alpha:
            raise ValueError("alpha must be nonzero")
        self.alpha = alpha
        self.n = alpha.norm()
        if self.n < 7:
            raise ValueError(f"EJ graph needs norm >= 7, got {self.n}")
        self.canonical_cd = canonicalize(alpha)
        self.vertices: list[EJInt] = []
        self.index: dict[EJInt, int] = {}
        self._neighbors: list[tuple[int, ...]] = []
        start = ej_mod(ZERO, alpha)
        self._add(start)
        queue = deque([0])
        while queue:
            i = queue.popleft()
            v = self.vertices[i]
            row = []
            for u in UNITS:
                w = ej_mod(v + u, alpha)
                j = self.index.get(w)
                if j is None:
                    j = self._add(w)
                    queue.append(j)
                row.append(j)
            if len(set(row)) != 6 or i in row:
                raise AssertionError(f"vertex {v} mod {alpha} is not 6-valent")
            self._neighbors.append(tuple(row))
        if len(self.vertices) != self.n:
            raise AssertionError(
                f"found {len(self.vertices)} residues mod {alpha}, expected {self.n}"
            )

    def _add(self, v: EJInt) -> int:
        i = len(self.vertices)
        self.index[v] = i
        self.vertices.append(v)
        return i

    def reduce(self, v: EJInt) -> int:
        """Index of the residue class of v."""
        return self.index[ej_mod(v, self.alpha)]

    def neighbors(self, i: int) -> list[int]:
        return sorted(self._neighbors[i])

    def arcs(self):
        for i, nbrs in enumerate(self._neighbors):
            for j in nbrs:
                yield i, j


def distance_distribution(alpha: EJInt) -> list[int]:
    """Vertex counts (W_0, ..., W_D) by distance from 0 in EJ_alpha, closed form.

    With canonical (c, d): W_t = 6t below the midpoint (c+d)/2, then
    6(2c+d) - 18t up to the diameter D = floor((2c+d)/3), with W = 2 at the
    endpoint t = (2c+d)/3 when c = d (mod 3).  An even c+d puts a midpoint
    layer at t* = (c+d)/2 whose size is n minus everything else.
    """
    if not alpha:
        raise ValueError("alpha must be nonzero")
    c, d = canonicalize(alpha)
    n = c * c + c * d + d * d
    diam = (2 * c + d) // 3
    w = [0] * (diam + 1)
    w[0] = 1
    tstar = (c + d) // 2 if (c + d) % 2 == 0 else None
    for t in range(1, diam + 1):
        if t == tstar:
            continue
        if 2 * t < c + d:
            w[t] = 6 * t
        elif 3 * t < 2 * c + d:
            w[t] = 6 * (2 * c + d) - 18 * t
        elif 3 * t == 2 * c + d and (c - d) % 3 == 0:
            w[t] = 2
    if tstar is not None and tstar <= diam:
        w[tstar] = n - sum(w)
    if sum(w) != n or min(w) < 0:
        raise AssertionError(f"distribution for ({c}, {d}) does not sum to {n}: {w}")
    return w


def ej_diameter(alpha: EJInt) -> int:
    c, d = canonicalize(alpha)
    return (2 * c + d) // 3


def circulant_to_ej(g: FrobeniusCirculant) -> EJGraph:
    """The EJ graph isomorphic to g, via the kernel of x + y*rho -> x + y*a mod n.

    The kernel of that ring homomorphism is the principal ideal generated by
    gcd(n, a - rho); its norm equals n and its coordinates are coprime.
    """
    alpha = ej_gcd(EJInt(g.n, 0), EJInt(g.a, -1))
    if alpha.norm() != g.n:
        raise AssertionError(f"kernel norm {alpha.norm()} != {g.n}")
    if gcd(alpha.x, alpha.y) != 1:
        raise AssertionError(f"kernel generator {alpha} has non-coprime coordinates")
    return EJGraph(alpha)


def ej_to_circulant(alpha: EJInt) -> FrobeniusCirculant:
    """The Frobenius circulant isomorphic to EJ_alpha, canonical generator form.

    Requires gcd(c, d) = 1 and N(alpha) = 1 (mod 6).  The generator is
    a = -c * d^{-1} mod n, reduced to the canonical member of its pair.
    """
    c, d = alpha.x, alpha.y
    if gcd(c, d) != 1:
        raise ValueError(f"gcd({c}, {d}) != 1")
    n = alpha.norm()
    if n < 7:
        raise ValueError(f"norm {n} < 7")
    if n % 6 != 1:
        raise ValueError(f"norm {n} is not 1 mod 6")
    a = -c * pow(d % n, -1, n) % n
    return new_frobenius(n, canonical_generator(n, a))


def iso_map(g: FrobeniusCirculant, ej: EJGraph) -> list[int]:
    """Vertex bijection Z_n -> EJ_alpha as u -> [-u*rho], as index list.

    Valid whenever N(alpha) = n and the residue of a is a unit mod alpha,
    which holds for the kernel ideal and its conjugate; raises otherwise.
    """
    if ej.n != g.n:
        raise ValueError(f"order mismatch: {g.n} vs N(alpha) = {ej.n}")
    alpha = ej.alpha
    a_res = ej_mod(EJInt(g.a, 0), alpha)
    units = {ej_mod(u, alpha) for u in UNITS}
    if a_res not in units:
        raise ValueError(f"{alpha} is not compatible with TL_{g.n}({g.a}, ...)")
    out = []
    minus_rho = EJInt(0, -1)
    for u in range(g.n):
        out.append(ej.reduce(minus_rho * u))
    if len(set(out)) != g.n:
        raise AssertionError("iso map is not a bijection")
    return out


@dataclass(frozen=True)
class DiophantineWitness:
    """Solution (m, r, s) of one of the three coordinate-form equations.

    ``case`` is 7, 8 or 9; the corresponding exact identities are
      7:  alpha = (r*n + m) + (s*n - m*a) rho
      8:  alpha = (r*n + m) + (s*n + m*(a-1)) rho
      9:  alpha = (r*n + m*a) + (s*n - m*(a-1)) rho
    and k*m^2 + (case-specific linear term)*m + (r^2 + r*s + s^2)*n = 1.
    """

    case: int
    m: int
    r: int
    s: int


def _witness_equation(case: int, k: int, n: int, a: int, m: int, r: int, s: int) -> int:
    quad = (r * r + r * s + s * s) * n
    if case == 7:
        return k * m * m - ((a - 2) * r + (2 * a - 1) * s) * m + quad
    if case == 8:
        return k * m * m + ((a + 1) * r + (2 * a - 1) * s) * m + quad
    if case == 9:
        return k * m * m + ((a + 1) * r - (a - 2) * s) * m + quad
    raise ValueError(f"unknown case {case}")


def find_witness(g: FrobeniusCirculant, alpha: EJInt, bound: int | None = None) -> DiophantineWitness:
    """Search the three coordinate forms for an exact witness tying alpha to g.

    r and s are searched in [-bound, bound]; m is forced by the case form.
    The coordinates of any norm-n representative are O(sqrt(n)), so the
    default bound 2 + ceil(sqrt(n)) is generous.
    """
    n, a = g.n, g.a
    c, d = alpha.x, alpha.y
    k = (a * a - a + 1) // n
    if bound is None:
        bound = 2 + isqrt(n - 1) + 1
    # search small |r| first so the minimal witness is reported
    r_order = [0]
    for v in range(1, bound + 1):
        r_order += [v, -v]
    for case in (7, 8, 9):
        for r in r_order:
            rest = c - r * n
            if case in (7, 8):
                m = rest
            else:
                if rest % a != 0:
                    continue
                m = rest // a
            if case == 7:
                num = d + m * a
            elif case == 8:
                num = d - m * (a - 1)
            else:
                num = d + m * (a - 1)
            if num % n != 0:
                continue
            s = num // n
            if abs(s) > bound or gcd(m, n) != 1:
                continue
            if _witness_equation(case, k, n, a, m, r, s) == 1:
                return DiophantineWitness(case, m, r, s)
    raise ValueError(
        f"no witness for alpha = {alpha} and TL_{n}({a}, ...) with |r|, |s| <= {bound}"
    )


def verify_arc_transitive(alpha: EJInt, bound: int = 2000) -> bool:
    """Check arc-transitivity of EJ_alpha by explicit orbit computation.

    Generators: translation by 1, translation by rho, and multiplication by
    rho.  Each generator is verified to preserve adjacency while the orbit of
    a seed arc is expanded; returns True iff the orbit is the whole arc set.
    """
    if alpha.norm() > bound:
        raise ValueError(f"norm {alpha.norm()} exceeds bound {bound}")
    ej = EJGraph(alpha)
    n = ej.n

    def permutation(f) -> list[int]:
        perm = [ej.reduce(f(v)) for v in ej.vertices]
        if len(set(perm)) != n:
            raise AssertionError("generator is not a bijection")
        return perm

    gens = [
        permutation(lambda v: v + ONE),
        permutation(lambda v: v + RHO),
        permutation(lambda v: v * RHO),
    ]
    arc_set = set(ej.arcs())
    for perm in gens:
        for (i, j) in arc_set:
            if (perm[i], perm[j]) not in arc_set:
                return False  # not even an automorphism

    seed = next(iter(arc_set))
    seen = {seed}
    queue = deque([seed])
    while queue:
        (i, j) = queue.popleft()
        for perm in gens:
            img = (perm[i], perm[j])
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen) == len(arc_set)
