import pytest

from clustercat import (
    ALL_TYPES,
    DynkinType,
    NotExchangeableError,
    NotFiniteTypeError,
    root_system,
)

SMALL = ("A2", "A3", "A4", "D4", "D5")

# closed forms for the number of positive roots and the Coxeter number
NU = {"A": lambda n: n * (n + 1) // 2, "D": lambda n: n * (n - 1), "E": {6: 36, 7: 63, 8: 120}}
COX = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}}


def expected(table, t):
    entry = table[t.series]
    return entry[t.rank] if isinstance(entry, dict) else entry(t.rank)


def test_parse_and_validation():
    assert DynkinType.parse("a3") == DynkinType("A", 3)
    assert DynkinType.parse(DynkinType("D", 5)).name == "D5"
    for bad in ("B3", "D3", "E9", "A0", "F4", "x", "7"):
        with pytest.raises(NotFiniteTypeError):
            DynkinType.parse(bad)


def test_counts_and_coxeter_numbers():
    for t in ALL_TYPES:
        rs = root_system(t)
        assert rs.nu == expected(NU, t), t.name
        assert rs.coxeter_number == expected(COX, t), t.name
        assert len(rs.almost_positive) == rs.nu + rs.n


def test_bipartition():
    for t in ALL_TYPES:
        rs = root_system(t)
        assert 1 in rs.i_minus
        assert rs.i_minus | rs.i_plus == set(range(1, rs.n + 1))
        assert not rs.i_minus & rs.i_plus
        for a, b in rs.edges:
            assert (a in rs.i_minus) != (b in rs.i_minus)


def test_alternating_arrows_small_cases():
    assert root_system("A3").alternating_arrows() == ((1, 2), (3, 2))
    assert root_system("D4").alternating_arrows() == ((1, 2), (3, 2), (4, 2))


def test_highest_root_samples():
    assert root_system("A3").highest_root == (1, 1, 1)
    assert root_system("D4").highest_root == (1, 2, 1, 1)
    assert root_system("E8").highest_root == (2, 3, 4, 6, 5, 4, 3, 2)


def test_tau_is_an_involution_on_the_lattice():
    probes = [(-2, 3, 0, 1, -1, 2, 5, -3), (1, 1, 1, 1, 1, 1, 1, 1), (0,) * 8]
    for t in ALL_TYPES:
        rs = root_system(t)
        vecs = list(rs.almost_positive) + [p[: rs.n] for p in probes]
        for eps in (+1, -1):
            for v in vecs:
                assert rs.tau(eps, rs.tau(eps, v)) == tuple(v)


def test_tau_matches_case_description_on_almost_positive_roots():
    # on positive roots tau is the product of sign-eps simple reflections;
    # negative simples are fixed or flipped according to their part
    for t in ALL_TYPES:
        rs = root_system(t)
        for eps, part in ((+1, rs.i_plus), (-1, rs.i_minus)):
            for beta in rs.positive_roots:
                w = beta
                for i in sorted(part):
                    w = rs.reflect(i, w)
                assert rs.tau(eps, beta) == w
            for i in range(1, rs.n + 1):
                image = rs.tau(eps, rs.neg_simple(i))
                if i in part:
                    assert image == rs.simple(i)
                else:
                    assert image == rs.neg_simple(i)


def test_tau_permutes_almost_positive_roots():
    for t in ALL_TYPES:
        rs = root_system(t)
        for eps in (+1, -1):
            image = {rs.tau(eps, v) for v in rs.almost_positive}
            assert image == set(rs.almost_positive)


def test_rotation_order_divides_h_plus_2_and_orbits_reach_neg_simples():
    for t in ALL_TYPES:
        rs = root_system(t)
        h = rs.coxeter_number
        for v in rs.almost_positive:
            w = v
            meets = False
            for _ in range(h + 2):
                if rs.neg_simple_index(w) is not None:
                    meets = True
                w = rs.tau_minus(rs.tau_plus(w))
            assert w == v, t.name
            assert meets, (t.name, v)


def test_coxeter_maps_are_mutually_inverse():
    for name in SMALL:
        rs = root_system(name)
        for v in rs.almost_positive:
            assert rs.coxeter_inv(rs.coxeter(v)) == v
            assert rs.coxeter(rs.coxeter_inv(v)) == v


def test_compatibility_degree_base_case():
    for name in SMALL:
        rs = root_system(name)
        for i in range(1, rs.n + 1):
            for beta in rs.positive_roots:
                assert rs.compatibility_degree(rs.neg_simple(i), beta) == beta[i - 1]
            for j in range(1, rs.n + 1):
                assert rs.compatibility_degree(rs.neg_simple(i), rs.neg_simple(j)) == 0


def test_compatibility_degree_symmetric_and_tau_invariant():
    for name in ("A3", "D4"):
        rs = root_system(name)
        roots = rs.almost_positive
        for a in roots:
            for b in roots:
                d = rs.compatibility_degree(a, b)
                assert d == rs.compatibility_degree(b, a)
                for eps in (+1, -1):
                    assert d == rs.compatibility_degree(rs.tau(eps, a), rs.tau(eps, b))


A2_CLUSTERS = [
    {(-1, 0), (0, -1)},
    {(-1, 0), (0, 1)},
    {(0, 1), (1, 1)},
    {(1, 1), (1, 0)},
    {(1, 0), (0, -1)},
]


def test_a2_compatibility_table():
    rs = root_system("A2")
    for a in rs.almost_positive:
        for b in rs.almost_positive:
            together = a == b or any({a, b} <= c for c in A2_CLUSTERS)
            assert rs.compatibility_degree(a, b) == (0 if together else 1)


def test_a2_exchangeable_pairs_are_the_pentagon_edges():
    rs = root_system("A2")
    pairs = {
        frozenset(p)
        for p in (
            ((0, -1), (0, 1)),
            ((-1, 0), (1, 1)),
            ((0, 1), (1, 0)),
            ((1, 1), (0, -1)),
            ((1, 0), (-1, 0)),
        )
    }
    found = {
        frozenset((a, b))
        for a in rs.almost_positive
        for b in rs.almost_positive
        if rs.is_exchangeable(a, b)
    }
    assert found == pairs


def test_uplus_a2_values():
    rs = root_system("A2")
    assert rs.uplus((1, 1), (0, -1)) == (0, 0)
    assert rs.uplus((1, 0), (-1, 0)) == (0, -1)
    assert rs.uplus((0, 1), (1, 0)) == (0, 0)
    assert rs.uplus((1, 1), (-1, 0)) == (0, 0)
    assert rs.uplus((0, 1), (0, -1)) == (-1, 0)
    with pytest.raises(NotExchangeableError):
        rs.uplus((-1, 0), (0, -1))


def test_uplus_symmetric():
    for name in ("A3", "D4"):
        rs = root_system(name)
        for a in rs.almost_positive:
            for b in rs.almost_positive:
                if rs.is_exchangeable(a, b):
                    assert rs.uplus(a, b) == rs.uplus(b, a)


def test_uplus_with_negative_simple_has_closed_form():
    for name in SMALL:
        rs = root_system(name)
        for beta in rs.positive_roots:
            for l in range(1, rs.n + 1):
                if not rs.is_exchangeable(beta, rs.neg_simple(l)):
                    continue
                expect = list(beta)
                expect[l - 1] -= 1
                for j in rs.adj[l]:
                    expect[j - 1] -= 1
                assert rs.uplus(beta, rs.neg_simple(l)) == tuple(expect)


def test_sign_eps_skew_and_base_cases():
    for name in ("A2", "A3", "D4"):
        rs = root_system(name)
        for a in rs.almost_positive:
            for b in rs.almost_positive:
                if not rs.is_exchangeable(a, b):
                    continue
                s = rs.sign_eps(a, b)
                assert s in (-1, 1)
                assert s == -rs.sign_eps(b, a)
                j = rs.neg_simple_index(a)
                if j is not None:
                    assert s == -rs.vertex_sign(j)
                j = rs.neg_simple_index(b)
                if j is not None:
                    assert s == rs.vertex_sign(j)
    with pytest.raises(NotExchangeableError):
        root_system("A2").sign_eps((-1, 0), (0, -1))


def test_expand_in_basis():
    rs = root_system("A3")
    coeffs = rs.expand_in_basis((1, 1, 0), rs.neg_simples)
    assert coeffs == [-1, -1, 0]
    assert rs.expand_in_basis((1, 0, 0), [(1, 1, 0), (0, 1, 0), (0, 1, 1)]) == [1, -1, 0]
