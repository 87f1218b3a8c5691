import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobcirc.circulant import FrobeniusCirculant, canonical_generator, new_frobenius
from frobcirc.eisenstein import (
    ONE,
    RHO,
    UNITS,
    ZERO,
    EJGraph,
    EJInt,
    canonical_associate,
    canonicalize,
    circulant_to_ej,
    distance_distribution,
    ej_diameter,
    ej_divmod,
    ej_gcd,
    ej_to_circulant,
    find_witness,
    iso_map,
    verify_arc_transitive,
)
from frobcirc.numtheory import constructible_orders
from conftest import distance_multiset, ej_bfs_distances

ej_ints = st.builds(EJInt, st.integers(-400, 400), st.integers(-400, 400))
nonzero_ej = ej_ints.filter(bool)


def test_rho_powers():
    assert RHO * RHO == EJInt(-1, 1)  # rho^2 = rho - 1
    assert RHO * RHO * RHO == EJInt(-1, 0)  # rho^3 = -1
    assert [u * RHO for u in UNITS] == list(UNITS[1:]) + [UNITS[0]]


def test_norm_examples():
    assert EJInt(5, 3).norm() == 49
    assert EJInt(1, 2).norm() == 7
    assert ZERO.norm() == 0


@given(ej_ints, ej_ints, ej_ints)
def test_ring_laws(u, v, w):
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u * v).norm() == u.norm() * v.norm()


@given(ej_ints)
def test_conjugate_gives_norm(u):
    assert u * u.conj() == EJInt(u.norm(), 0)


@given(ej_ints, nonzero_ej)
def test_divmod_contract(u, v):
    q, r = ej_divmod(u, v)
    assert q * v + r == u
    assert r.norm() < v.norm()


def test_divmod_examples():
    q, r = ej_divmod(EJInt(7, 0), EJInt(1, 2))
    assert r.norm() < 7
    assert ej_divmod(EJInt(5, 3), EJInt(5, 3)) == (ONE, ZERO)
    assert ej_divmod(ZERO, EJInt(5, 3)) == (ZERO, ZERO)
    with pytest.raises(ZeroDivisionError):
        ej_divmod(ONE, ZERO)


def test_gcd_examples():
    g = ej_gcd(EJInt(49, 0), EJInt(31, -1))
    assert g.norm() == 49 and canonicalize(g) == (5, 3)
    assert ej_gcd(EJInt(5, 3), ZERO) == canonical_associate(EJInt(5, 3))
    g7 = ej_gcd(EJInt(7, 0), EJInt(3, -1))
    assert g7.norm() == 7 and canonicalize(g7) == (2, 1)
    with pytest.raises(ValueError):
        ej_gcd(ZERO, ZERO)


@settings(max_examples=150)
@given(nonzero_ej, nonzero_ej)
def test_gcd_divides_both(u, v):
    g = ej_gcd(u, v)
    _, r1 = ej_divmod(u, g)
    _, r2 = ej_divmod(v, g)
    assert r1 == ZERO and r2 == ZERO


def test_gcd_is_greatest():
    # any common divisor divides the gcd, on a worked instance
    u, v = EJInt(14, 7), EJInt(21, 0)
    g = ej_gcd(u, v)
    for x in range(-5, 6):
        for y in range(-5, 6):
            w = EJInt(x, y)
            if not w or w.norm() == 1:
                continue
            _, ru = ej_divmod(u, w)
            _, rv = ej_divmod(v, w)
            if ru == ZERO and rv == ZERO:
                _, rg = ej_divmod(g, w)
                assert rg == ZERO


def test_canonical_associate_sector():
    for alpha in (EJInt(5, 3), EJInt(-5, -3), EJInt(3, -8), EJInt(0, 4), EJInt(-2, 0)):
        c = canonical_associate(alpha)
        assert c.x > 0 and c.y >= 0
        assert c.norm() == alpha.norm()


def test_canonicalize_examples():
    assert canonicalize(EJInt(7, -6)) == (6, 1)
    assert canonicalize(EJInt(3, 5)) == (5, 3)
    assert canonicalize(EJInt(5, 3)) == (5, 3)
    assert canonicalize(EJInt(4, 0)) == (4, 0)
    assert canonicalize(EJInt(0, 4)) == (4, 0)
    assert canonicalize(EJInt(3, 3)) == (3, 3)


@given(nonzero_ej)
def test_canonicalize_class_invariant(alpha):
    c, d = canonicalize(alpha)
    assert c >= d >= 0
    assert EJInt(c, d).norm() == alpha.norm()
    assert canonicalize(alpha * RHO) == (c, d)
    assert canonicalize(EJInt(alpha.y, alpha.x)) == (c, d)


def test_ej_graph_basics():
    ej = EJGraph(EJInt(5, 3))
    assert ej.n == 49
    assert len(ej.vertices) == 49
    EJGraph(EJInt(1, 2))  # norm 7 is the smallest valid order
    with pytest.raises(ValueError):
        EJGraph(EJInt(2, 0))  # norm 4
    with pytest.raises(ValueError):
        EJGraph(EJInt(1, 1))  # norm 3


def test_circulant_to_ej_examples():
    assert circulant_to_ej(new_frobenius(49, 31)).canonical_cd == (5, 3)
    assert circulant_to_ej(new_frobenius(7, 3)).canonical_cd == (2, 1)
    # HARTS family lands on (k+1, k)
    for k in (2, 3, 4, 5):
        n = 3 * k * k + 3 * k + 1
        ej = circulant_to_ej(new_frobenius(n, 3 * k + 2))
        assert ej.canonical_cd == (k + 1, k)


def test_ej_to_circulant_examples():
    g = ej_to_circulant(EJInt(3, 5))
    assert (g.n, g.a) == (49, 19)
    g7 = ej_to_circulant(EJInt(1, 2))
    assert (g7.n, g7.a) == (7, 3)
    with pytest.raises(ValueError):
        ej_to_circulant(EJInt(2, 2))
    with pytest.raises(ValueError):
        ej_to_circulant(EJInt(4, 1))  # norm 21 = 3 mod 6


def test_round_trip_small():
    for n, cls in constructible_orders(800):
        for a in cls.solutions:
            g = FrobeniusCirculant(n, a)
            ej = circulant_to_ej(g)
            assert ej.n == n
            back = ej_to_circulant(ej.alpha)
            assert back.n == n and back.a == canonical_generator(n, a)


def test_iso_map_examples():
    g = new_frobenius(49, 31)
    ej = circulant_to_ej(g)
    mapping = iso_map(g, ej)
    assert mapping[0] == ej.reduce(ZERO)
    assert mapping[1] == ej.reduce(EJInt(0, -1))  # 1 -> -rho
    arcs = set(ej.arcs())
    for u in range(49):
        for v in g.neighbors(u):
            assert (mapping[u], mapping[v]) in arcs


def test_iso_map_conjugate_ideal_also_works():
    # the worked example pairs TL_49(31, 30, 1) with 3+5rho
    g = new_frobenius(49, 31)
    ej = EJGraph(EJInt(3, 5))
    mapping = iso_map(g, ej)
    arcs = set(ej.arcs())
    for u in range(49):
        for v in g.neighbors(u):
            assert (mapping[u], mapping[v]) in arcs


def test_iso_map_rejects_incompatible():
    g = new_frobenius(49, 31)
    with pytest.raises(ValueError):
        iso_map(g, EJGraph(EJInt(1, 2)))


def test_distance_distribution_examples():
    assert distance_distribution(EJInt(5, 3)) == [1, 6, 12, 18, 12]
    assert distance_distribution(EJInt(2, 1)) == [1, 6]
    assert ej_diameter(EJInt(6, 1)) == 4


def test_distance_distribution_vs_bfs_cases():
    # midpoint (even c+d), endpoint (c = d mod 3), gcd > 1, real axis
    for c, d in [(5, 3), (6, 1), (4, 1), (2, 2), (3, 0), (6, 2), (4, 4), (9, 3), (7, 0)]:
        if EJInt(c, d).norm() < 7:
            continue
        ej = EJGraph(EJInt(c, d))
        dist = ej_bfs_distances(ej)
        counts = distance_multiset(dist)
        want = distance_distribution(EJInt(c, d))
        assert [counts[t] for t in range(max(dist) + 1)] == want, (c, d)


def test_frobenius_subfamily_w_is_six_nt():
    from frobcirc.scheduler import build_diagram, type_vector

    for n, a in [(49, 31), (91, 10), (133, 12)]:
        g = new_frobenius(n, a)
        ej = circulant_to_ej(g)
        w = distance_distribution(ej.alpha)
        nt = type_vector(build_diagram(g))
        assert w[1:] == [6 * t for t in nt]
        assert sum(w) == n


def test_find_witness_examples():
    g43 = new_frobenius(43, 7)
    w = find_witness(g43, EJInt(1, -7))
    assert (w.case, w.m, w.r, w.s) == (7, 1, 0, 0)
    g49 = new_frobenius(49, 31)
    w2 = find_witness(g49, EJInt(3, 5))
    assert (w2.case, w2.m, w2.r, w2.s) == (7, 3, 0, 2)
    w3 = find_witness(g49, EJInt(3, -8))
    assert (w3.case, w3.m, w3.r, w3.s) == (8, 3, 0, -2)


def test_find_witness_roundtrip_family():
    # the witness always exists for the kernel ideal of a valid graph
    for n, cls in constructible_orders(400):
        for a in cls.solutions[:2]:
            g = FrobeniusCirculant(n, a)
            alpha = circulant_to_ej(g).alpha
            w = find_witness(g, alpha)
            k = (a * a - a + 1) // n
            quad = (w.r * w.r + w.r * w.s + w.s * w.s) * n
            if w.case == 7:
                lin = -((a - 2) * w.r + (2 * a - 1) * w.s)
            elif w.case == 8:
                lin = (a + 1) * w.r + (2 * a - 1) * w.s
            else:
                lin = (a + 1) * w.r - (a - 2) * w.s
            assert k * w.m * w.m + lin * w.m + quad == 1


def test_arc_transitivity():
    assert verify_arc_transitive(EJInt(5, 3))
    assert verify_arc_transitive(EJInt(2, 1))
    assert verify_arc_transitive(EJInt(6, 2))  # gcd 2, not Frobenius
    with pytest.raises(ValueError):
        verify_arc_transitive(EJInt(100, 1), bound=2000)


def test_json_round_trip():
    alpha = EJInt(5, -3)
    blob = alpha.to_json()
    assert blob == {"x": 5, "y": -3}
    assert EJInt(**blob) == alpha
