"""Acceptance gate: one verdict line per stated criterion.

Each test prints exactly one [PASS]/[FAIL] line (visible under -s, and on
any failure) and fails loudly when its criterion does not hold.  The
winding test is a finding: it always reports, never fails on the finding
itself.
"""

import itertools
import time
from contextlib import contextmanager

from clustercat.cluster_algebra import atlas
from clustercat.cluster_algebra.seeds import Atlas
from clustercat.quiver import appendix_report
from clustercat.repcat import cluster_category
from clustercat.tilting import (
    CONVENTION_FLIP,
    calibrate_flip,
    check_all_denominators,
    check_exchange,
    check_presentation,
    check_quiver_identity,
    check_relations,
    quiver_QT,
    triangle_fan_check,
)


@contextmanager
def criterion(name):
    info = {"extra": "", "ok": True}
    try:
        yield info
    except BaseException as e:
        print(f"[FAIL] {name}  ({type(e).__name__}: {e})")
        raise
    tag = "PASS" if info["ok"] else "FAIL"
    line = f"[{tag}] {name}"
    if info["extra"]:
        line += f"  ({info['extra']})"
    print(line)
    if not info["ok"]:
        raise AssertionError(line)


def test_atlas_counts_exact_and_fast():
    expected = {"A2": (5, 5), "A3": (14, 9), "A4": (42, 14), "D4": (50, 16)}
    with criterion("atlas counts: A2 5/5, A3 14/9, A4 42/14, D4 50/16, each under a minute") as info:
        times = []
        for ty, (ncl, nvar) in expected.items():
            t0 = time.perf_counter()
            at = Atlas(ty)  # fresh build, no cache, so the timing is real
            dt = time.perf_counter() - t0
            times.append(f"{ty} {dt:.2f}s")
            assert len(at.clusters) == ncl, f"{ty}: {len(at.clusters)} clusters"
            assert len(at.root_of) == nvar, f"{ty}: {len(at.root_of)} variables"
            assert nvar == at.rs.nu + at.rs.n
            assert dt < 60, f"{ty} took {dt:.1f}s"
        info["extra"] = ", ".join(times)


def test_seed_quiver_equals_endomorphism_quiver_everywhere():
    with criterion("endomorphism quiver = seed quiver at 100% of clusters of A3, A4, D4, D5 under one fixed convention") as info:
        quiver_QT.cache_clear()
        assert calibrate_flip() == CONVENTION_FLIP
        t0 = time.perf_counter()
        total = 0
        for ty in ("A3", "A4", "D4", "D5"):
            out = check_quiver_identity(ty)
            assert out["flip"] == CONVENTION_FLIP
            total += out["clusters"]
        dt = time.perf_counter() - t0
        assert dt < 600, f"sweep took {dt:.1f}s"
        info["extra"] = f"{total} clusters, flip={CONVENTION_FLIP}, {dt:.1f}s"


def test_hom_spaces_between_summands_are_at_most_one_dimensional():
    with criterion("hom dimension <= 1 for every ordered summand pair of every tilting object (A3, A4, D4, D5), zero violations") as info:
        pairs = 0
        for ty in ("A3", "A4", "D4", "D5"):
            at = atlas(ty)
            cc = cluster_category(ty)
            for cid in range(len(at.clusters)):
                for a, b in itertools.permutations(at.seed_roots(cid), 2):
                    assert cc.hom_C_dim(a, b) <= 1, f"{ty} cluster {cid}: {a} -> {b}"
                    pairs += 1
        info["extra"] = f"{pairs} ordered pairs"


def test_approximation_triangles_match_arrows_and_root_sums():
    with criterion("triangle middle terms = arrow neighborhoods at every exchange of A3 and D4; root-sum identities at every shifted-projective exchange") as info:
        a3 = check_exchange("A3")
        d4 = check_exchange("D4")
        info["extra"] = (
            f"A3 {a3['edges']} edges / {a3['negative_simple_views']} shifted-projective views, "
            f"D4 {d4['edges']} / {d4['negative_simple_views']}"
        )


def test_path_relations_hold_in_every_endomorphism_algebra():
    with criterion("single returns compose to zero, doubled returns are nonzero in a shared line, non-shortest returns vanish (A3, A4, D4)") as info:
        parts = []
        for ty in ("A3", "A4", "D4"):
            out = check_relations(ty)
            parts.append(
                f"{ty} {out['arrows']} arrows, {out['zero_relations']}z/"
                f"{out['commutativity_relations']}c/{out['nonshortest_zero']}ns"
            )
        info["extra"] = "; ".join(parts)


def test_exchange_products_reproduce_the_exchange_relation():
    with criterion("z z' = prod(right) + prod(left) exactly, matching the exchange matrix monomials, at every edge of A3 and D4") as info:
        a3 = check_exchange("A3")
        d4 = check_exchange("D4")
        info["extra"] = f"A3 {a3['edges']} edges x2 views, D4 {d4['edges']} x2"


def test_denominator_vectors_equal_ext_dimensions():
    with criterion("denominator exponents = ext dimensions for all (cluster, object) pairs of A3, and the rank-5 fan cluster gives d = (1,1,1,1,0)") as info:
        a3 = check_all_denominators("A3")
        fan = triangle_fan_check()
        assert a3["clusters"] == 14
        assert fan["verified"] == fan["matching_clusters"]
        info["extra"] = (
            f"A3 14 clusters x 9 objects; D5 fan clusters {fan['matching_clusters']}, "
            f"each with a unique (1,1,1,1,0) witness"
        )


def test_type_a_presentation_content():
    with criterion("type A presentation: relations pass and exactly nu distinct denominator vectors per cluster (A3, A4)") as info:
        a3 = check_presentation("A3")
        a4 = check_presentation("A4")
        assert a3["indecomposables_per_cluster"] == 6
        assert a4["indecomposables_per_cluster"] == 10
        info["extra"] = (
            f"A3 {a3['arrows']} arrows / 6 vectors, A4 {a4['arrows']} arrows / 10 vectors"
        )


def test_structure_census_rank_at_most_six():
    sizes = {
        "A2": 1, "A3": 4, "A4": 6, "A5": 19, "A6": 49,
        "D4": 6, "D5": 26, "D6": 80, "E6": 67,
    }
    with criterion("census rank <= 6: <= 2 shortest paths per arrow, oriented chordless cycles, link profiles always allowed, never forbidden") as info:
        total = 0
        for ty, size in sizes.items():
            rep = appendix_report(ty)
            assert rep["class_size"] == size, f"{ty}: class size {rep['class_size']}"
            assert rep["max_shortest_paths"] <= 2
            total += size
        info["extra"] = f"{total} quivers across {len(sizes)} classes"


def test_winding_numbers_reported_not_asserted():
    with criterion("finding: winding numbers of shortest closed paths in A4 and D4") as info:
        parts = []
        for ty in ("A4", "D4"):
            out = check_relations(ty)
            state = "all 1" if out["shortest_windings_all_one"] else "DEVIATIONS SEEN"
            parts.append(f"{ty}: {out['shortest_closed_paths']} paths, {state}")
        info["extra"] = "; ".join(parts)
