import itertools
from collections import Counter

import pytest

from quivertilt import linalg
from quivertilt.algebra import parse_algebra
from quivertilt.checkers import (
    EXCEEDS,
    check_cluster_tilting,
    check_left_n_cotorsion,
    check_n_cotorsion,
    check_right_n_cotorsion,
    coresdim,
    enumerate_cluster_tilting,
    enumerate_cotorsion_diagonal,
    orthogonal,
    resdim,
    vee,
    verify_left_pair_characterization,
    verify_orthogonal_containment,
    verify_theorem,
    wedge,
    within,
)
from quivertilt.contexts import ContextError, build_exact_context


def test_orthogonal_examples(exact_contexts):
    ctx = exact_contexts["a2"]
    s1 = ctx.resolve_name("S1")
    s2 = ctx.resolve_name("S2")
    assert orthogonal(ctx, [], "right", 1) == frozenset(range(3))
    right = orthogonal(ctx, [s1], "right", 1)
    assert right == frozenset(range(3)) - {s2}
    assert orthogonal(ctx, ctx.projective_ids, "right", 3) == frozenset(range(3))


def test_resdim_examples(exact_contexts):
    ctx = exact_contexts["a2"]
    projs = sorted(ctx.projective_ids)
    s1 = ctx.resolve_name("S1")
    assert resdim(ctx, projs, s1, 3) == 1
    assert resdim(ctx, projs, projs[0], 3) == 0
    ctx3 = exact_contexts["a3_rad2"]
    assert resdim(ctx3, sorted(ctx3.projective_ids), ctx3.resolve_name("I1"), 4) == 2
    ctxd = exact_contexts["dual_numbers"]
    lam = ctxd.resolve_name("P1")
    s = ctxd.resolve_name("S1")
    assert resdim(ctxd, [lam], s, 5) is EXCEEDS
    assert resdim(ctxd, [lam], s, 5, exhaustive=True) is EXCEEDS


def test_coresdim_dual_examples(exact_contexts):
    ctx = exact_contexts["a2"]
    injs = sorted(ctx.injective_ids)
    s2 = ctx.resolve_name("S2")
    assert coresdim(ctx, injs, s2, 3) == 1
    assert vee(ctx, injs, 1) == frozenset(range(3))


def test_wedge_examples(exact_contexts):
    ctx = exact_contexts["a2"]
    projs = sorted(ctx.projective_ids)
    assert wedge(ctx, projs, 0) == frozenset(projs)
    assert wedge(ctx, projs, 1) == frozenset(range(3))
    ctxd = exact_contexts["dual_numbers"]
    lam = ctxd.resolve_name("P1")
    for m in range(4):
        assert wedge(ctxd, [lam], m) == frozenset({lam})


def test_wedge_monotone(exact_contexts):
    for ctx in exact_contexts.values():
        ids = sorted(ctx.projective_ids)
        for m in range(3):
            assert wedge(ctx, ids, m) <= wedge(ctx, ids, m + 1)


def test_greedy_equals_exhaustive_resdim(exact_contexts):
    """Spec default oracle scope: multiplicity bound 2, depth bound 4."""
    for name in ("a2", "dual_numbers", "nak22"):
        ctx = exact_contexts[name]
        n = ctx.n_objects
        for r in range(1, n + 1):
            for members in itertools.combinations(range(n), r):
                for target in range(n):
                    greedy = resdim(ctx, members, target, 4, exhaustive=False)
                    brute = resdim(ctx, members, target, 4, exhaustive=True)
                    assert greedy == brute, (name, members, target, greedy, brute)


def test_trivial_pairs(exact_contexts):
    for name, ctx in exact_contexts.items():
        everything = range(ctx.n_objects)
        for n in (1, 2, 3):
            assert check_n_cotorsion(ctx, ctx.projective_ids, everything, n).passed, name
            assert check_n_cotorsion(ctx, everything, ctx.injective_ids, n).passed, name


def test_cotorsion_failure_witness(exact_contexts):
    ctx = exact_contexts["a2"]
    verdict = check_n_cotorsion(ctx, range(3), range(3), 1)
    assert not verdict.passed
    failure = verdict.first_failure()
    assert failure.clause == "left.orthogonality"
    assert failure.witness["witness_object"] == "I1"
    assert failure.witness["against"] == "P2"
    assert failure.witness["degree"] == 1


def test_left_right_components(exact_contexts):
    ctx = exact_contexts["a2"]
    everything = range(ctx.n_objects)
    assert check_left_n_cotorsion(ctx, ctx.projective_ids, everything, 2).passed
    assert check_right_n_cotorsion(ctx, everything, ctx.injective_ids, 2).passed


def test_cluster_tilting_examples(exact_contexts):
    ctx3 = exact_contexts["a3_rad2"]
    x = [ctx3.resolve_name(n) for n in ("P1", "P2", "P3", "I1")]
    assert check_cluster_tilting(ctx3, x, 2).passed
    ctx = exact_contexts["a2"]
    for r in range(0, 4):
        for members in itertools.combinations(range(3), r):
            assert not check_cluster_tilting(ctx, members, 2).passed
    # X = all objects fails with a witness naming the extension
    verdict = check_cluster_tilting(ctx, range(3), 2)
    assert not verdict.passed
    assert verdict.first_failure().witness["extra"] or verdict.first_failure().witness["missing"]


def test_cluster_tilting_degree_bound(exact_contexts):
    with pytest.raises(ContextError):
        check_cluster_tilting(exact_contexts["a2"], [0], 1)


def test_enumerators(exact_contexts):
    ctx = exact_contexts["a2"]
    assert enumerate_cluster_tilting(ctx, 2) == []
    assert enumerate_cotorsion_diagonal(ctx, 1) == []
    ctx3 = exact_contexts["a3_rad2"]
    hits = enumerate_cluster_tilting(ctx3, 2)
    assert len(hits) == 1
    assert hits[0].names() == ["I1", "P1", "P2", "P3"]
    cot = enumerate_cotorsion_diagonal(ctx3, 1)
    assert [h.names() for h in cot] == [["I1", "P1", "P2", "P3"]]


def test_enumeration_on_semisimple_context():
    alg = parse_algebra("field 2\nvertices 1 2\n")
    ctx = build_exact_context(alg)
    for n in (1, 2, 3):
        report = verify_theorem(ctx, n)
        assert report["sets_equal"]
        assert report["cluster_tilting"] == [sorted(ctx.object_names)]


def test_verify_theorem_small(exact_contexts, stable_contexts):
    for name, ctx in {**exact_contexts, **stable_contexts}.items():
        for n in (1, 2, 3):
            report = verify_theorem(ctx, n)
            assert report["sets_equal"], (name, n, report)


def test_verify_theorem_expected_sets(exact_contexts, stable_contexts):
    assert verify_theorem(exact_contexts["a2"], 1)["cotorsion_diagonal"] == []
    t3 = verify_theorem(exact_contexts["a3_rad2"], 1)
    assert t3["cotorsion_diagonal"] == [["I1", "P1", "P2", "P3"]]
    n22 = verify_theorem(exact_contexts["nak22"], 1)
    assert len(n22["cotorsion_diagonal"]) == 2
    stable22 = verify_theorem(stable_contexts["nak22"], 1)
    assert stable22["cotorsion_diagonal"] == [["S1"], ["S2"]]


def test_orthogonal_containment_statement(exact_contexts):
    ctx = exact_contexts["a2"]
    s1 = ctx.resolve_name("S1")
    ok, detail = verify_orthogonal_containment(ctx, [s1], 1)
    assert ok
    ok, _ = verify_orthogonal_containment(ctx, sorted(ctx.projective_ids), 2)
    assert ok


def test_orthogonal_containment_fuzz(exact_contexts):
    rng = linalg.stable_rng(41)
    for name, ctx in exact_contexts.items():
        for _ in range(40):
            r = rng.randrange(0, ctx.n_objects + 1)
            x = rng.sample(range(ctx.n_objects), r)
            n = rng.randrange(1, 4)
            ok, detail = verify_orthogonal_containment(ctx, x, n)
            assert ok, (name, x, n, detail)


def test_left_pair_characterization_exhaustive_small(exact_contexts):
    ctx = exact_contexts["a2"]
    n_obj = ctx.n_objects
    for x_bits in range(2**n_obj):
        for y_bits in range(2**n_obj):
            x = [i for i in range(n_obj) if x_bits >> i & 1]
            y = [i for i in range(n_obj) if y_bits >> i & 1]
            for n in (1, 2):
                ok, detail = verify_left_pair_characterization(ctx, x, y, n)
                assert ok, (x, y, n, detail)


def test_within_helper():
    assert within(2, 3) and within(3, 3)
    assert not within(4, 3) and not within(EXCEEDS, 3)
