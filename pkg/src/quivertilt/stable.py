"""Stable module category of a self-injective algebra.

Morphisms are module maps modulo those factoring through projectives
(= injectives here); the factoring subspace is computed as the image of
composition with the injective hull inclusion.  Suspension is the cokernel
of the hull, loop the kernel of the cover, and cones come from the mapping
cylinder M -> I(M) + N.  Objects handed to identity-sensitive callers are
normalized to projective-free form.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import BoundQuiverAlgebra, is_self_injective, projective_module
from .decompose import indecomposable_isomorphic, summand_split
from .homology import (
    _hom_coord_matrix,
    extend_through_mono,
    injective_hull,
    lift_through_epi,
    minimal_resolution,
    projective_cover,
)
from .modules import (
    ModuleMap,
    Representation,
    cokernel,
    direct_sum,
    hom_basis,
    kernel,
    zero_map,
    zero_representation,
)


class NotSelfInjectiveError(Exception):
    """Stable-category operations require a self-injective algebra."""


def require_self_injective(algebra: BoundQuiverAlgebra):
    flag = getattr(algebra, "_self_injective", None)
    if flag is None:
        flag = is_self_injective(algebra)
        algebra._self_injective = flag
    if not flag:
        raise NotSelfInjectiveError(
            "stable module categories are only formed over self-injective algebras"
        )


def _indecomposable_projectives(algebra) -> list[Representation]:
    cache = getattr(algebra, "_indec_projectives", None)
    if cache is None:
        cache = [projective_module(algebra, v) for v in algebra.quiver.vertex_ids]
        algebra._indec_projectives = cache
    return cache


def is_projective_rep(m: Representation, seed: int = 0) -> bool:
    """True iff m is a direct sum of indecomposable projectives."""
    if m.total_dim == 0:
        return True
    for piece, _, _ in summand_split(m, seed):
        if not any(
            indecomposable_isomorphic(piece, pj, seed)
            for pj in _indecomposable_projectives(m.algebra)
        ):
            return False
    return True


def strip_projectives(m: Representation, seed: int = 0):
    """Projective-free core with split maps (core, incl, retr); retr o incl = id."""
    if m.total_dim == 0:
        return m, None, None
    pieces = summand_split(m, seed)
    projs = _indecomposable_projectives(m.algebra)
    kept = [
        (piece, incl, retr)
        for piece, incl, retr in pieces
        if not any(indecomposable_isomorphic(piece, pj, seed) for pj in projs)
    ]
    if not kept:
        z = zero_representation(m.algebra)
        return z, zero_map(z, m), zero_map(m, z)
    core, core_incls, core_projs = direct_sum([piece for piece, _, _ in kept])
    incl = zero_map(core, m)
    retr = zero_map(m, core)
    for (piece, pi, pr), ci, cp in zip(kept, core_incls, core_projs):
        incl = incl.add(pi.compose(cp))
        retr = retr.add(ci.compose(pr))
    return core, incl, retr


class StableHomSpace:
    """Hom(m, n) modulo maps factoring through projectives, with coordinates."""

    def __init__(self, m: Representation, n: Representation):
        require_self_injective(m.algebra)
        self.m = m
        self.n = n
        self.p = m.algebra.p
        self.basis = hom_basis(m, n)
        hull, mono = injective_hull(m)
        through = [g.compose(mono) for g in hom_basis(hull, n)]
        ncols = len(self.basis)
        if ncols == 0:
            self.quot = linalg.QuotientSpace(0, linalg.zeros(0, 0), self.p)
        else:
            basis_mat = _hom_coord_matrix(self.basis)
            cols = []
            for f in through:
                sol = linalg.solve(basis_mat, f.flatten().reshape(-1, 1), self.p)
                if sol is None:
                    raise RuntimeError("projectively-factoring map escaped the hom space")
                cols.append(sol.reshape(-1))
            sub = np.stack(cols, axis=1) % self.p if cols else linalg.zeros(ncols, 0)
            self.quot = linalg.QuotientSpace(ncols, sub, self.p)
        self.dim = self.quot.dim

    def class_of(self, f: ModuleMap) -> np.ndarray:
        if not self.basis:
            return np.zeros(0, dtype=np.int64)
        basis_mat = _hom_coord_matrix(self.basis)
        sol = linalg.solve(basis_mat, f.flatten().reshape(-1, 1), self.p)
        if sol is None:
            raise ValueError("map does not lie in this hom space")
        return self.quot.to_coords(sol.reshape(-1))

    def representative(self, coords: np.ndarray) -> ModuleMap:
        out = zero_map(self.m, self.n)
        if self.dim == 0:
            return out
        lifted = self.quot.lift(coords)
        for i, f in enumerate(self.basis):
            c = int(lifted[i]) % self.p
            if c:
                out = out.add(f.scale(c))
        return out

    def equal(self, f: ModuleMap, g: ModuleMap) -> bool:
        return np.array_equal(self.class_of(f), self.class_of(g))


def stable_hom_dim(m: Representation, n: Representation) -> int:
    return StableHomSpace(m, n).dim


def suspension_raw(m: Representation):
    """Cokernel of the injective hull, with the hull data: (sigma, hull, mono, proj)."""
    require_self_injective(m.algebra)
    hull, mono = injective_hull(m)
    sigma, proj = cokernel(mono)
    return sigma, hull, mono, proj


def suspension(m: Representation, seed: int = 0) -> Representation:
    """Projective-free cosyzygy; quasi-inverse to loop on projective-free objects."""
    sigma = suspension_raw(m)[0]
    return strip_projectives(sigma, seed)[0]


def loop_raw(m: Representation):
    """Kernel of the projective cover: (omega, cover_term, incl, cover)."""
    require_self_injective(m.algebra)
    res = minimal_resolution(m)
    res.extend(0)
    return res.syzygies[0], res.terms[0], res.syzygy_incls[0], res.diffs[0]


def loop(m: Representation, seed: int = 0) -> Representation:
    omega = loop_raw(m)[0]
    return strip_projectives(omega, seed)[0]


def suspension_map(f: ModuleMap) -> ModuleMap:
    """Induced map on raw suspensions (cokernels of hulls)."""
    p = f.p
    sig_m, hull_m, mono_m, proj_m = suspension_raw(f.source)
    sig_n, hull_n, mono_n, proj_n = suspension_raw(f.target)
    lifted = extend_through_mono(mono_n.compose(f), mono_m)  # hull_m -> hull_n
    blocks = []
    for v in range(len(proj_m.blocks)):
        rhs = linalg.matmul(proj_n.blocks[v], lifted.blocks[v], p)
        sol = linalg.solve(proj_m.blocks[v].T, rhs.T, p)
        if sol is None:
            raise RuntimeError("suspension of a map is not well defined")
        blocks.append(sol.T % p)
    return ModuleMap(sig_m, sig_n, blocks, validate=False)


def loop_map(f: ModuleMap) -> ModuleMap:
    """Induced map on raw loops (kernels of covers)."""
    p = f.p
    om_m, pm, incl_m, cover_m = loop_raw(f.source)
    om_n, pn, incl_n, cover_n = loop_raw(f.target)
    lifted = lift_through_epi(f.compose(cover_m), cover_n)  # P(m) -> P(n)
    blocks = []
    for v in range(len(incl_m.blocks)):
        rhs = linalg.matmul(lifted.blocks[v], incl_m.blocks[v], p)
        sol = linalg.solve(incl_n.blocks[v], rhs, p)
        if sol is None:
            raise RuntimeError("loop of a map is not well defined")
        blocks.append(sol)
    return ModuleMap(om_m, om_n, blocks, validate=False)


def cone(f: ModuleMap):
    """Mapping cone of f: M -> N in the stable category.

    Returns (cone_raw, to_cone, connecting) where the module sequence
    0 -> M -> I(M) + N -> cone_raw -> 0 is exact, to_cone: N -> cone_raw,
    and connecting: cone_raw -> Sigma_raw(M).
    """
    require_self_injective(f.source.algebra)
    p = f.p
    m, n = f.source, f.target
    sig_m, hull, mono, sig_proj = suspension_raw(m)
    total, (incl_hull, incl_n), (proj_hull, proj_n) = _sum2(hull, n)
    glue = incl_hull.compose(mono).add(incl_n.compose(f))
    cone_raw, cone_proj = cokernel(glue)
    to_cone = cone_proj.compose(incl_n)
    # connecting: induced by projecting the cylinder onto the hull component
    onto_sigma = sig_proj.compose(proj_hull)
    blocks = []
    for v in range(len(cone_proj.blocks)):
        sol = linalg.solve(cone_proj.blocks[v].T, onto_sigma.blocks[v].T, p)
        if sol is None:
            raise RuntimeError("cone connecting map is not well defined")
        blocks.append(sol.T % p)
    connecting = ModuleMap(cone_raw, sig_m, blocks, validate=False)
    return cone_raw, to_cone, connecting


def _sum2(a: Representation, b: Representation):
    total, incls, projs = direct_sum([a, b])
    return total, (incls[0], incls[1]), (projs[0], projs[1])
