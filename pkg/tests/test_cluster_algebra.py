from itertools import combinations

import pytest

from clustercat.cluster_algebra import (
    Laurent,
    atlas,
    exchange_terms,
    initial_seed,
    mutate_seed,
    rebase,
)
from clustercat.errors import ContractViolationError
from clustercat.root_system import root_system


def L(n, terms):
    return Laurent(n, terms)


class TestLaurent:
    def test_ring_ops(self):
        x = Laurent.var(2, 1)
        y = Laurent.var(2, 2)
        one = Laurent.one(2)
        assert (x + y) * (x - y) == x * x - y * y
        assert x * Laurent.zero(2) == Laurent.zero(2)
        assert (x + one) - x == one
        assert -(x - y) == y - x

    def test_exact_div_roundtrip(self):
        x = Laurent.var(3, 1)
        y = Laurent.var(3, 2)
        z = Laurent.var(3, 3)
        f = (x + y) * (y + z) * (x + z)
        assert f.exact_div(y + z) == (x + y) * (x + z)
        g = L(3, {(-2, 1, 0): 3, (0, 0, -1): 5})
        assert (f * g).exact_div(g) == f

    def test_inexact_div_raises(self):
        x = Laurent.var(1, 1)
        one = Laurent.one(1)
        with pytest.raises(ContractViolationError):
            x.exact_div(x + one)
        with pytest.raises(ContractViolationError):
            (x * x + one).exact_div(x + x)
        with pytest.raises(ZeroDivisionError):
            one.exact_div(Laurent.zero(1))

    def test_denominator_exponents(self):
        v = L(2, {(-1, 1): 1, (-1, 0): 1})
        assert v.denominator_exponents() == (1, 0)
        assert Laurent.var(2, 2).denominator_exponents() == (0, -1)

    def test_to_str(self):
        v = L(2, {(-1, 1): 1, (-1, 0): 1})
        assert v.to_str() == "x1^-1*x2 + x1^-1"
        assert Laurent.one(2).to_str() == "1"
        assert L(1, {(2,): -3}).to_str() == "-3*x1^2"


class TestSeeds:
    def test_mutation_involutive(self):
        s = initial_seed("A3")
        for k in (1, 2, 3):
            assert mutate_seed(mutate_seed(s, k), k) == s

    def test_exchange_terms_initial(self):
        # at a sink every neighbor contributes to the incoming monomial
        s = initial_seed("A3")
        m_in, m_out = exchange_terms(s, 2)
        assert m_in == Laurent.var(3, 1) * Laurent.var(3, 3)
        assert m_out == Laurent.one(3)

    def test_pentagon_walk(self):
        x3 = L(2, {(-1, 1): 1, (-1, 0): 1})
        x4 = L(2, {(0, -1): 1, (-1, 0): 1, (-1, -1): 1})
        x5 = L(2, {(1, -1): 1, (0, -1): 1})
        x1 = Laurent.var(2, 1)
        x2 = Laurent.var(2, 2)
        expected = [
            (x1, x2),
            (x3, x2),
            (x3, x4),
            (x5, x4),
            (x5, x1),
            (x2, x1),
        ]
        s = initial_seed("A2")
        seen = [s.variables]
        for k in (1, 2, 1, 2, 1):
            s = mutate_seed(s, k)
            seen.append(s.variables)
        assert seen == expected
        assert s.cluster_key() == initial_seed("A2").cluster_key()


class TestAtlas:
    def test_counts(self):
        expected = {
            "A2": (5, 5, 5),
            "A3": (14, 9, 21),
            "A4": (42, 14, 84),
            "D4": (50, 16, 100),
            "D5": (182, 25, 455),
        }
        for t, (clusters, variables, edges) in expected.items():
            a = atlas(t)
            assert len(a.clusters) == clusters
            assert len(a.root_of) == variables
            assert len(a.edges) == edges

    def test_root_bijection(self):
        a = atlas("A3")
        rs = a.rs
        for i in (1, 2, 3):
            assert a.root_of[Laurent.var(3, i)] == rs.neg_simple(i)
        non_initial = [r for v, r in a.root_of.items() if not v.is_monomial()]
        assert all(rs.is_positive_root(r) for r in non_initial)
        assert len(non_initial) == rs.nu

    def test_clusters_compatible_edges_exchangeable(self):
        for t in ("A3", "D4"):
            a = atlas(t)
            rs = a.rs
            for cid in range(len(a.clusters)):
                for x, y in combinations(sorted(a.cluster_roots(cid)), 2):
                    assert rs.compatibility_degree(x, y) == 0
            for e in a.edges:
                assert rs.is_exchangeable(a.root_of[e.var_a], a.root_of[e.var_b])

    def test_neighbor_count(self):
        a = atlas("A3")
        for cid in range(len(a.clusters)):
            assert len(a.neighbors(cid)) == 3

    def test_rebase(self):
        a = atlas("A3")
        assert all(k == v for k, v in rebase(a, 0).items())
        rs = root_system("A3")
        m = rebase(a, 5)
        assert sorted(v.denominator_exponents() for v in m.values()) == sorted(rs.almost_positive)
        a2 = atlas("A2")
        for cid in range(5):
            m = rebase(a2, cid)
            assert sorted(v.denominator_exponents() for v in m.values()) == sorted(
                a2.rs.almost_positive
            )
