"""Tilting objects against seeds: quivers, triangles, relations, denominators."""

import pytest

from clustercat.cluster_algebra import atlas
from clustercat.errors import ContractViolationError, NotExchangeableError
from clustercat.repcat import cluster_category
from clustercat.tilting import (
    CONVENTION_FLIP,
    calibrate_flip,
    check_all_denominators,
    check_denominators,
    check_exchange,
    check_quiver_identity,
    check_relations,
    complements,
    exchange_triangles,
    quiver_QT,
    tilting_from_cluster,
    triangle_fan_check,
)


def test_orientation_calibration():
    # rank-two comparison fixes the global convention once
    assert calibrate_flip() is False
    assert CONVENTION_FLIP is False


def test_rejects_bad_summand_lists():
    with pytest.raises(ValueError):
        tilting_from_cluster("A2", ((1, 0), (-1, 0)))
    with pytest.raises(ValueError):
        tilting_from_cluster("A2", ((1, 0),))
    with pytest.raises(ValueError):
        tilting_from_cluster("A2", ((1, 0), (2, 0)))


def test_endomorphism_quiver_of_the_initial_cluster():
    tilt = tilting_from_cluster("A3", ((-1, 0, 0), (0, -1, 0), (0, 0, -1)))
    qt = quiver_QT(tilt)
    # sorted roots put -a1 at vertex 1, -a2 at 2, -a3 at 3; the alternating
    # orientation points the outer vertices at the middle one
    assert sorted(qt.arrows()) == [(1, 2), (3, 2)]


def test_quiver_identity_small_types():
    assert check_quiver_identity("A2") == {"type": "A2", "clusters": 5, "flip": False}
    assert check_quiver_identity("A3") == {"type": "A3", "clusters": 14, "flip": False}
    assert check_quiver_identity("D4") == {"type": "D4", "clusters": 50, "flip": False}


def test_completion_pair_is_found_by_scan():
    assert set(complements("A2", ((0, -1),))) == {(-1, 0), (1, 0)}
    with pytest.raises(ContractViolationError):
        complements("A3", ((-1, 0, 0),))


def test_non_exchange_pair_is_rejected():
    with pytest.raises(NotExchangeableError):
        exchange_triangles("A3", ((0, -1, 0),), (1, 0, 0), (0, 0, 1))


def test_degenerate_triangle_sides_at_rank_two():
    # m is the translate of m': the right triangle collapses
    ed = exchange_triangles("A2", ((0, -1),), (1, 0), (-1, 0))
    assert ed.right == () and set(ed.left) == {(0, -1)}
    # m' is the translate of m: the left triangle collapses
    ed = exchange_triangles("A2", ((-1, 0),), (0, 1), (0, -1))
    assert set(ed.right) == {(-1, 0)} and ed.left == ()


def test_exchange_on_every_edge():
    assert check_exchange("A2") == {
        "type": "A2",
        "edges": 5,
        "degenerate_sides": 10,
        "negative_simple_views": 4,
    }
    assert check_exchange("A3") == {
        "type": "A3",
        "edges": 21,
        "degenerate_sides": 30,
        "negative_simple_views": 14,
    }
    assert check_exchange("D4") == {
        "type": "D4",
        "edges": 100,
        "degenerate_sides": 104,
        "negative_simple_views": 50,
    }


def test_relations_hold_in_every_cluster():
    assert check_relations("A3") == {
        "type": "A3",
        "clusters": 14,
        "arrows": 30,
        "zero_relations": 6,
        "commutativity_relations": 0,
        "nonshortest_zero": 0,
        "shortest_closed_paths": 6,
        "shortest_windings_all_one": True,
    }
    # doubled shortest paths first appear here
    assert check_relations("D4") == {
        "type": "D4",
        "clusters": 50,
        "arrows": 180,
        "zero_relations": 72,
        "commutativity_relations": 12,
        "nonshortest_zero": 0,
        "shortest_closed_paths": 96,
        "shortest_windings_all_one": True,
    }


def test_nonshortest_returns_compose_to_zero():
    # smallest type where non-cycle-inducing return paths exist at all
    out = check_relations("D6")
    assert out["nonshortest_zero"] == 24
    assert out["commutativity_relations"] == 324
    assert out["shortest_windings_all_one"] is True


def test_denominators_match_ext_vectors():
    got = check_denominators("D4", 0)
    assert got == {"type": "D4", "cluster": 0, "distinct_vectors": 12}
    assert check_all_denominators("A3") == {
        "type": "A3",
        "clusters": 14,
        "distinct_vectors_each": 6,
    }


def test_fan_quiver_witnesses():
    out = triangle_fan_check(limit=3)
    assert out["matching_clusters"] == 10
    assert out["verified"] == 3
    assert out["witness_roots"] == [(0, 0, 1, 0, 1), (0, 0, 1, 1, 0), (1, 1, 1, 0, 1)]
