"""Projective covers, injective hulls, syzygies, Ext and approximations.

Covers are built from lifts of a basis of top(M) = M/rad M; hulls are covers
of the dual module over the opposite algebra, dualized back.  Minimal
resolutions are extended lazily and cached on the representation object, so
repeated Ext queries against the same module share work.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import projective_module
from .modules import (
    ModuleMap,
    Representation,
    cokernel,
    direct_sum,
    dual_map,
    dual_representation,
    hom_basis,
    kernel,
    radical_subspaces,
    zero_map,
    zero_representation,
)


def top_generator_lifts(m: Representation) -> list[tuple[int, np.ndarray]]:
    """(vertex, column) pairs projecting to a basis of top(M), in vertex order."""
    p = m.algebra.p
    rad = radical_subspaces(m)
    out = []
    for v in range(len(m.dims)):
        quot = linalg.QuotientSpace(m.dims[v], rad[v], p)
        for free_col in quot.free:
            e = linalg.zeros(m.dims[v], 1)
            e[free_col, 0] = 1
            out.append((v, e))
    return out


def projective_cover(m: Representation) -> tuple[Representation, ModuleMap]:
    """Minimal projective cover (P, epi); kernel of the epi lies in rad P."""
    alg = m.algebra
    p = alg.p
    gens = top_generator_lifts(m)
    if not gens:
        z = zero_representation(alg)
        return z, zero_map(z, m)
    summands = []
    maps = []
    for v, gen in gens:
        pv = projective_module(alg, alg.quiver.vertex_ids[v])
        summands.append(pv)
        # basis path q of P_v (source v) is sent to M_q(gen)
        blocks = []
        by_vertex: list[list] = [[] for _ in range(alg.quiver.n_vertices)]
        for b in alg.paths_from(v):
            by_vertex[alg.path_target(b)].append(b)
        from .algebra import path_key

        for w in range(alg.quiver.n_vertices):
            paths = sorted(by_vertex[w], key=path_key)
            block = linalg.zeros(m.dims[w], len(paths))
            for col, q in enumerate(paths):
                vec = linalg.matmul(m.path_matrix(q), gen, p)
                block[:, col : col + 1] = vec
            blocks.append(block)
        maps.append((pv, blocks))
    total, incls, projs = direct_sum([pv for pv, _ in maps])
    cover = zero_map(total, m)
    for (pv, blocks), proj in zip(maps, projs):
        cover = cover.add(ModuleMap(pv, m, blocks, validate=False).compose(proj))
    if not cover.is_epi():
        raise RuntimeError("projective cover construction failed to be surjective")
    return total, cover


def injective_hull(m: Representation) -> tuple[Representation, ModuleMap]:
    """Minimal injective hull (I, mono), via the cover of the dual module."""
    dm = dual_representation(m)
    pd, epi = projective_cover(dm)
    mono_raw = dual_map(epi)  # D(dm) -> D(pd); D(dm) has the same matrices as m
    hull = mono_raw.target
    mono = ModuleMap(m, hull, mono_raw.blocks, validate=False)
    if not mono.is_mono():
        raise RuntimeError("injective hull construction failed to be injective")
    return hull, mono


def syzygy(m: Representation) -> Representation:
    """Kernel of the projective cover; zero for projectives."""
    _, cover = projective_cover(m)
    return kernel(cover)[0]


def cosyzygy(m: Representation) -> Representation:
    """Cokernel of the injective hull; zero for injectives."""
    _, mono = injective_hull(m)
    return cokernel(mono)[0]


class MinimalResolution:
    """Lazily extended minimal projective resolution of a module.

    terms[k] is P_k, diffs[k]: P_k -> P_{k-1} (diffs[0] is the augmentation
    P_0 -> M), syzygy_incls[k]: Omega^{k+1} -> P_k.
    """

    def __init__(self, target: Representation):
        self.target = target
        self.terms: list[Representation] = []
        self.diffs: list[ModuleMap] = []
        self.syzygies: list[Representation] = []
        self.syzygy_incls: list[ModuleMap] = []

    def extend(self, upto: int):
        while len(self.terms) <= upto:
            k = len(self.terms)
            tail = self.target if k == 0 else self.syzygies[k - 1]
            pk, cover = projective_cover(tail)
            ker, incl = kernel(cover)
            self.terms.append(pk)
            if k == 0:
                self.diffs.append(cover)
            else:
                self.diffs.append(self.syzygy_incls[k - 1].compose(cover))
            self.syzygies.append(ker)
            self.syzygy_incls.append(incl)

    def syzygy_module(self, k: int) -> Representation:
        """Omega^k of the target (k >= 1)."""
        self.extend(k - 1)
        return self.syzygies[k - 1]


def minimal_resolution(m: Representation) -> MinimalResolution:
    res = getattr(m, "_minres", None)
    if res is None:
        res = MinimalResolution(m)
        m._minres = res
    return res


def _hom_coord_matrix(maps: list[ModuleMap]) -> np.ndarray:
    if not maps:
        return linalg.zeros(0, 0)
    return np.stack([f.flatten() for f in maps], axis=1)


def induced_map_on_hom(
    basis_src: list[ModuleMap], basis_tgt: list[ModuleMap], transform, p: int
) -> np.ndarray:
    """Matrix (over the given hom bases) of f |-> transform(f)."""
    if not basis_src or not basis_tgt:
        return linalg.zeros(len(basis_tgt), len(basis_src))
    tgt_mat = _hom_coord_matrix(basis_tgt)
    cols = []
    for f in basis_src:
        g = transform(f)
        sol = linalg.solve(tgt_mat, g.flatten().reshape(-1, 1), p)
        if sol is None:
            raise RuntimeError("transformed hom element escaped the target hom space")
        cols.append(sol.reshape(-1))
    return np.stack(cols, axis=1) % p


def ext_dim(k: int, m: Representation, n: Representation) -> int:
    """dim Ext^k(m, n) from the minimal resolution; k = 0 gives dim Hom."""
    if k < 0:
        raise ValueError("negative cohomological degree")
    if k == 0:
        return len(hom_basis(m, n))
    if m.total_dim == 0 or n.total_dim == 0:
        return 0
    p = m.algebra.p
    res = minimal_resolution(m)
    res.extend(k + 1)
    h_prev = hom_basis(res.terms[k - 1], n)
    h_cur = hom_basis(res.terms[k], n)
    h_next = hom_basis(res.terms[k + 1], n)
    d_in = induced_map_on_hom(h_prev, h_cur, lambda f: f.compose(res.diffs[k]), p)
    d_out = induced_map_on_hom(h_cur, h_next, lambda f: f.compose(res.diffs[k + 1]), p)
    return len(h_cur) - linalg.rank(d_in, p) - linalg.rank(d_out, p)


def right_approximation(
    members: list[Representation], c: Representation, include_cover: bool = True
) -> ModuleMap:
    """Right approximation of c by add(members), made a surjection by an
    added projective cover summand; with no members this is the cover alone."""
    summands: list[tuple[Representation, ModuleMap]] = []
    for x in members:
        for f in hom_basis(x, c):
            summands.append((x, f))
    if include_cover:
        pc, cover = projective_cover(c)
        if pc.total_dim:
            summands.append((pc, cover))
    if not summands:
        z = zero_representation(c.algebra)
        return zero_map(z, c)
    total, incls, projs = direct_sum([s for s, _ in summands])
    h = zero_map(total, c)
    for (s, f), proj in zip(summands, projs):
        h = h.add(f.compose(proj))
    return h


def left_approximation(
    members: list[Representation], c: Representation, include_hull: bool = True
) -> ModuleMap:
    """Left approximation of c by add(members), made injective by an added
    injective hull summand."""
    summands: list[tuple[Representation, ModuleMap]] = []
    for x in members:
        for f in hom_basis(c, x):
            summands.append((x, f))
    if include_hull:
        ih, mono = injective_hull(c)
        if ih.total_dim:
            summands.append((ih, mono))
    if not summands:
        z = zero_representation(c.algebra)
        return zero_map(c, z)
    total, incls, projs = direct_sum([s for s, _ in summands])
    h = zero_map(c, total)
    for (s, f), incl in zip(summands, incls):
        h = h.add(incl.compose(f))
    return h


def syzygy_transport(f: ModuleMap) -> ModuleMap:
    """Omega(f): induced map on minimal first syzygies, via a cover lift."""
    p = f.p
    res_s = minimal_resolution(f.source)
    res_t = minimal_resolution(f.target)
    res_s.extend(0)
    res_t.extend(0)
    p_s, cover_s = res_s.terms[0], res_s.diffs[0]
    p_t, cover_t = res_t.terms[0], res_t.diffs[0]
    lifted = lift_through_epi(f.compose(cover_s), cover_t)
    incl_s = res_s.syzygy_incls[0]
    incl_t = res_t.syzygy_incls[0]
    blocks = []
    for v in range(len(incl_s.blocks)):
        rhs = linalg.matmul(lifted.blocks[v], incl_s.blocks[v], p)
        sol = linalg.solve(incl_t.blocks[v], rhs, p)
        if sol is None:
            raise RuntimeError("cover lift does not restrict to syzygies")
        blocks.append(sol)
    return ModuleMap(res_s.syzygies[0], res_t.syzygies[0], blocks, validate=False)


def lift_through_epi(f: ModuleMap, epi: ModuleMap) -> ModuleMap:
    """Some g with epi o g = f, assuming f's source is projective."""
    p = f.p
    basis = hom_basis(f.source, epi.source)
    if not basis:
        if f.is_zero():
            return zero_map(f.source, epi.source)
        raise RuntimeError("no maps available to lift through the surjection")
    composed = [epi.compose(g) for g in basis]
    mat = _hom_coord_matrix(composed)
    sol = linalg.solve(mat, f.flatten().reshape(-1, 1), p)
    if sol is None:
        raise RuntimeError("lift through surjection does not exist")
    out = zero_map(f.source, epi.source)
    for i, g in enumerate(basis):
        c = int(sol[i, 0]) % p
        if c:
            out = out.add(g.scale(c))
    return out


def extend_through_mono(f: ModuleMap, mono: ModuleMap) -> ModuleMap:
    """Some g with g o mono = f, assuming f's target is injective."""
    p = f.p
    basis = hom_basis(mono.target, f.target)
    if not basis:
        if f.is_zero():
            return zero_map(mono.target, f.target)
        raise RuntimeError("no maps available to extend over the inclusion")
    composed = [g.compose(mono) for g in basis]
    mat = _hom_coord_matrix(composed)
    sol = linalg.solve(mat, f.flatten().reshape(-1, 1), p)
    if sol is None:
        raise RuntimeError("extension over inclusion does not exist")
    out = zero_map(mono.target, f.target)
    for i, g in enumerate(basis):
        c = int(sol[i, 0]) % p
        if c:
            out = out.add(g.scale(c))
    return out
