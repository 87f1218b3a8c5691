"""Exact modular arithmetic for the defining congruence x^2 - x + 1 = 0 (mod n).

Everything here is deterministic pure-integer arithmetic: trial-division
factorization, Tonelli-Shanks square roots, Hensel lifting, CRT, and the
classification of orders that admit a 6-valent first-kind Frobenius circulant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

# Practical ceiling for the trial-division factorizer.  Python integers are
# arbitrary precision, so this is a runtime guard, not an overflow limit.
MAX_ORDER = 10**12


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod p_i^e_i with p_i strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError(f"malformed factorization of {self.n}")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    @property
    def num_primes(self) -> int:
        return len(self.factors)

    def totient(self) -> int:
        phi = 1
        for p, e in self.factors:
            phi *= p ** (e - 1) * (p - 1)
        return phi


@dataclass(frozen=True)
class Classification:
    """Existence record for 6-valent first-kind Frobenius circulants of order n.

    ``solutions`` are all residues a with a^2 - a + 1 = 0 (mod n), sorted.
    ``graph_count`` counts the pairwise non-isomorphic graphs: solutions pair
    up under a -> -a^2 (mod n), each pair defining one graph.
    """

    n: int
    exists: bool
    solutions: tuple[int, ...]
    graph_count: int


def factorize(n: int) -> Factorization:
    """Trial-division factorization, smallest prime first."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"n = {n} exceeds MAX_ORDER = {MAX_ORDER}")
    m = n
    factors: list[tuple[int, int]] = []
    for p in _trial_divisors():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def _trial_divisors():
    yield 2
    yield 3
    k = 5
    while True:
        yield k
        yield k + 2
        k += 6


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (fixed witness set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_mod_prime(r: int, p: int) -> set[int]:
    """All x in [0, p) with x^2 = r (mod p), p an odd prime.

    Uses the (p+1)/4 exponent shortcut for p = 3 (mod 4) and Tonelli-Shanks
    otherwise, with the smallest quadratic non-residue as the fixed helper.
    """
    r %= p
    if r == 0:
        return {0}
    if pow(r, (p - 1) // 2, p) != 1:
        return set()
    if p % 4 == 3:
        x = pow(r, (p + 1) // 4, p)
        return {x, p - x}
    # Tonelli-Shanks: write p - 1 = q * 2^s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(r, (q + 1) // 2, p)
    t = pow(r, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return {x, p - x}


def sqrt_mod_prime_power(r: int, p: int, e: int) -> set[int]:
    """All x in [0, p^e) with x^2 = r (mod p^e), for odd prime p, gcd(r, p) = 1.

    Solves mod p first, then Hensel-lifts each root one exponent at a time.
    The lift is unique at every level because 2x is invertible mod p.
    """
    if p == 2 or not is_probable_prime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    if gcd(r, p) != 1:
        raise ValueError(f"gcd({r}, {p}) != 1")
    roots = sqrt_mod_prime(r, p)
    mod = p
    for _ in range(e - 1):
        nxt = mod * p
        lifted = set()
        for x in roots:
            # solve (x + mod*t)^2 = r (mod nxt):  2x*t = (r - x^2)/mod (mod p)
            inv = pow(2 * x % p, -1, p)
            t = (r - x * x) // mod % p * inv % p
            lifted.add((x + mod * t) % nxt)
        roots = lifted
        mod = nxt
    return roots


def crt_combine(residues: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine congruences x = v_i (mod m_i) into one residue mod prod(m_i).

    Moduli must be pairwise coprime.
    """
    x, m = 0, 1
    for v, mi in residues:
        if gcd(m, mi) != 1:
            raise ValueError(f"moduli not pairwise coprime: {m}, {mi}")
        # x + m*t = v (mod mi)
        t = (v - x) * pow(m, -1, mi) % mi
        x += m * t
        m *= mi
    return x % m, m


def solve_frobenius_eq(n: int) -> list[int]:
    """All residues a in [0, n) with a^2 - a + 1 = 0 (mod n), sorted.

    For odd n this is equivalent to (2a-1)^2 = -3 (mod n).  We solve
    x^2 = -3 per prime power, CRT-combine to roots v mod n, and map each v
    back via a = (v+1)/2 when v is odd, (n+v+1)/2 when v is even.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return [0]
    if n % 2 == 0:
        return []  # a^2 - a + 1 is always odd
    fac = factorize(n)
    per_prime: list[list[tuple[int, int]]] = []
    for p, e in fac.factors:
        if p == 3:
            # (2a-1)^2 = -3 forces 3 | (2a-1); solvable only for e = 1.
            if e > 1:
                return []
            per_prime.append([(0, 3)])
            continue
        roots = sqrt_mod_prime_power(-3, p, e)
        if not roots:
            return []
        per_prime.append([(v, p**e) for v in sorted(roots)])

    sols = []
    for chosen in product(*per_prime):
        v, _ = crt_combine(list(chosen))
        a = (v + 1) // 2 if v % 2 == 1 else (n + v + 1) // 2
        sols.append(a % n)
    return sorted(sols)


def lift_solution(p: int, a_s: int, s: int) -> int:
    """Lift a root of x^2 - x + 1 mod p^s to the unique root mod p^{s+1} above it.

    a_{s+1} = a_s + p^s * t with (2*a_s - 1) * t = -(a_s^2 - a_s + 1) / p^s (mod p).
    """
    ps = p**s
    val = a_s * a_s - a_s + 1
    if val % ps != 0:
        raise ValueError(f"{a_s} does not solve the congruence mod {p}^{s}")
    if (2 * a_s - 1) % p == 0:
        raise ValueError(f"2*{a_s} - 1 not invertible mod {p}")
    t = -(val // ps) * pow((2 * a_s - 1) % p, -1, p) % p
    return a_s + ps * t


def classify(n: int) -> Classification:
    """Decide whether order n admits a 6-valent first-kind Frobenius circulant.

    Exists iff n = 1 (mod 6) and x^2 - x + 1 = 0 (mod n) is solvable, in which
    case every prime factor of n is 1 (mod 6), there are 2^l solutions and
    2^(l-1) non-isomorphic graphs (l = number of distinct primes).
    """
    if n < 7:
        raise ValueError(f"order must be at least 7, got {n}")
    if n % 6 != 1:
        return Classification(n, False, (), 0)
    fac = factorize(n)
    # cheap necessary condition: phi(n) = 0 (mod 6)
    if fac.totient() % 6 != 0:
        return Classification(n, False, (), 0)
    sols = solve_frobenius_eq(n)
    if not sols:
        return Classification(n, False, (), 0)
    for p, _ in fac.factors:
        if p % 6 != 1:  # Theorem guarantee; a failure here is a bug
            raise AssertionError(f"solvable n = {n} has prime factor {p} != 1 mod 6")
    l = fac.num_primes
    if len(sols) != 2**l:
        raise AssertionError(f"n = {n}: expected {2**l} solutions, got {len(sols)}")
    return Classification(n, True, tuple(sols), 2 ** (l - 1))


def constructible_orders(limit: int, start: int = 7):
    """Yield (n, Classification) for every constructible order in [start, limit]."""
    first = max(start, 7)
    first += (1 - first) % 6
    for n in range(first, limit + 1, 6):
        c = classify(n)
        if c.exists:
            yield n, c
