import numpy as np
import pytest

from quivertilt import linalg
from quivertilt.algebra import injective_module, projective_module, simple_module
from quivertilt.decompose import is_isomorphic
from quivertilt.homology import (
    cosyzygy,
    ext_dim,
    injective_hull,
    left_approximation,
    projective_cover,
    right_approximation,
    syzygy,
)
from quivertilt.modules import direct_sum, hom_basis, kernel, radical_subspaces

from oracle import ext1_dim_oracle


def _indecomposables(alg):
    mods = {}
    for v in alg.quiver.vertex_ids:
        mods[f"P{v}"] = projective_module(alg, v)
        mods[f"I{v}"] = injective_module(alg, v)
        mods[f"S{v}"] = simple_module(alg, v)
    return mods


def test_cover_examples(a2, dual_numbers):
    s1 = simple_module(a2, 1)
    p, epi = projective_cover(s1)
    assert is_isomorphic(p, projective_module(a2, 1))
    assert epi.is_epi()
    p1 = projective_module(a2, 1)
    pc, cover = projective_cover(p1)
    assert cover.is_iso()
    lam = projective_module(dual_numbers, 1)
    pc2, cover2 = projective_cover(simple_module(dual_numbers, 1))
    assert is_isomorphic(pc2, lam)


def test_cover_kernel_lies_in_radical(test_algebras):
    for alg in test_algebras.values():
        for v in alg.quiver.vertex_ids:
            m = simple_module(alg, v)
            p, epi = projective_cover(m)
            k, incl = kernel(epi)
            rad = radical_subspaces(p)
            for vtx in range(alg.quiver.n_vertices):
                for col in range(incl.blocks[vtx].shape[1]):
                    assert linalg.in_span(
                        rad[vtx], incl.blocks[vtx][:, col : col + 1], alg.p
                    )


def test_syzygy_examples(a2, dual_numbers):
    s1 = simple_module(a2, 1)
    assert is_isomorphic(syzygy(s1), simple_module(a2, 2))
    assert syzygy(projective_module(a2, 1)).total_dim == 0
    s = simple_module(dual_numbers, 1)
    m = s
    for _ in range(3):
        m = syzygy(m)
        assert is_isomorphic(m, s)


def test_cosyzygy_examples(a2):
    s2 = simple_module(a2, 2)
    assert is_isomorphic(cosyzygy(s2), simple_module(a2, 1))
    hull, mono = injective_hull(s2)
    assert mono.is_mono()
    assert is_isomorphic(hull, projective_module(a2, 1))  # I2 = P1 here


def test_ext_examples(a2, dual_numbers):
    s1, s2 = simple_module(a2, 1), simple_module(a2, 2)
    p1 = projective_module(a2, 1)
    assert ext_dim(1, s1, s2) == 1
    assert ext_dim(1, p1, s1) == 0 and ext_dim(1, p1, s2) == 0
    assert ext_dim(0, s1, s1) == 1
    s = simple_module(dual_numbers, 1)
    for k in range(6):
        assert ext_dim(k, s, s) == 1


def test_ext_vanishes_on_injective_targets(test_algebras):
    for alg in test_algebras.values():
        mods = _indecomposables(alg)
        for m in mods.values():
            for v in alg.quiver.vertex_ids:
                for k in (1, 2, 3):
                    assert ext_dim(k, m, injective_module(alg, v)) == 0


def test_dimension_shift(test_algebras):
    for alg in test_algebras.values():
        mods = _indecomposables(alg)
        for m in mods.values():
            om = syzygy(m)
            for n in mods.values():
                for k in (1, 2, 3):
                    assert ext_dim(k + 1, m, n) == ext_dim(k, om, n)


def test_ext_table_matches_independent_oracle(test_algebras):
    """Resolution-based Ext^1 equals the cocycle-coboundary count on every
    pair of canonical indecomposables, for every test algebra."""
    for name, alg in test_algebras.items():
        mods = list(_indecomposables(alg).values())
        for m in mods:
            for n in mods:
                assert ext_dim(1, m, n) == ext1_dim_oracle(m, n), name


def test_ext_additivity(a3_rad2):
    s1 = simple_module(a3_rad2, 1)
    s2 = simple_module(a3_rad2, 2)
    s3 = simple_module(a3_rad2, 3)
    both, _, _ = direct_sum([s2, s3])
    assert ext_dim(1, s1, both) == ext_dim(1, s1, s2) + ext_dim(1, s1, s3)
    assert ext_dim(1, both, s3) == ext_dim(1, s2, s3) + ext_dim(1, s3, s3)


def test_right_approximation_examples(a2):
    p1 = projective_module(a2, 1)
    p2 = projective_module(a2, 2)
    s1 = simple_module(a2, 1)
    h = right_approximation([p1, p2], s1)
    assert h.is_epi()
    h_empty = right_approximation([], s1)
    assert h_empty.is_epi() and is_isomorphic(h_empty.source, p1)
    h_zero_homs = right_approximation([s1], p1)
    assert h_zero_homs.is_epi()


def test_right_approximation_factorization_law(a3_rad2):
    """Every map from a member factors through the approximation."""
    p = a3_rad2.p
    mods = _indecomposables(a3_rad2)
    members = [mods["P1"], mods["S1"], mods["S3"]]
    for target in mods.values():
        h = right_approximation(members, target)
        composed = [h.compose(g) for g in hom_basis(h.source, h.source)]
        hmat = np.stack(
            [h.compose(g).flatten() for g in hom_basis(h.source, h.source)], axis=1
        ) if hom_basis(h.source, h.source) else None
        for member in members:
            for f in hom_basis(member, target):
                lifts = hom_basis(member, h.source)
                if not lifts:
                    assert f.is_zero()
                    continue
                mat = np.stack([h.compose(g).flatten() for g in lifts], axis=1)
                assert linalg.solve(mat, f.flatten().reshape(-1, 1), p) is not None


def test_left_approximation_examples(a2):
    s1 = simple_module(a2, 1)
    p1 = projective_module(a2, 1)
    g = left_approximation([s1], p1)
    assert g.is_mono()
    g2 = left_approximation([], s1)
    assert g2.is_mono()
