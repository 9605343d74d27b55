"""Rank bookkeeping for the two long exact Hom/E sequences of a conflation.

For a conflation A -> B -> C and a test object X the covariant sequence

  Hom(X,A) -> Hom(X,B) -> Hom(X,C) -> E(X,A) -> E(X,B) -> E(X,C) -> E^2(X,A) ...

must be exact.  The in-row maps (images of x and y under the Hom and E^k
functors) are computed as matrices on explicit coordinates; connecting maps
are not constructed.  Exactness is verified by rank bookkeeping: full rank
balance at every middle node, and consistency of the two deductions of each
connecting map's rank at the junctions.  The contravariant sequence is
checked dually.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .contexts import Conflation, Context, ContextError, ExactExtSpace
from .homology import minimal_resolution, syzygy_transport
from .modules import ModuleMap, Representation, hom_basis
from .stable import StableHomSpace, loop_map, loop_raw


class _HomNode:
    """Plain Hom(anchor, m) with hom-basis coordinates (exact model)."""

    def __init__(self, anchor: Representation, m: Representation):
        self.anchor = anchor
        self.m = m
        self.basis = hom_basis(anchor, m)
        self.dim = len(self.basis)

    def postcompose_matrix(self, f: ModuleMap, target: "_HomNode") -> np.ndarray:
        p = self.anchor.algebra.p
        mat = linalg.zeros(target.dim, self.dim)
        if self.dim and target.dim:
            tgt = np.stack([g.flatten() for g in target.basis], axis=1) % p
            for i, g in enumerate(self.basis):
                sol = linalg.solve(tgt, f.compose(g).flatten().reshape(-1, 1), p)
                if sol is None:
                    raise ContextError("postcomposition escaped the hom space")
                mat[:, i] = sol.reshape(-1)
        return mat


class _StableHomNode:
    def __init__(self, anchor: Representation, m: Representation):
        self.anchor = anchor
        self.m = m
        self.space = StableHomSpace(anchor, m)
        self.dim = self.space.dim

    def postcompose_matrix(self, f: ModuleMap, target: "_StableHomNode") -> np.ndarray:
        p = self.anchor.algebra.p
        mat = linalg.zeros(target.dim, self.dim)
        for i in range(self.dim):
            coords = linalg.zeros(self.dim, 1).reshape(-1)
            coords[i] = 1
            rep_map = self.space.representative(coords)
            mat[:, i] = target.space.class_of(f.compose(rep_map))
        return mat


class _ExactEkNode:
    """E^k(X, m) via Yoneda coordinates anchored at the raw (k-1)-st syzygy."""

    def __init__(self, anchor: Representation, m: Representation):
        self.anchor = anchor
        self.space = ExactExtSpace(anchor, m)
        self.dim = self.space.dim

    def postcompose_matrix(self, f: ModuleMap, target: "_ExactEkNode") -> np.ndarray:
        p = self.anchor.algebra.p
        mat = linalg.zeros(target.dim, self.dim)
        for i in range(self.dim):
            coords = linalg.zeros(self.dim, 1).reshape(-1)
            coords[i] = 1
            t = self.space._rep_map(coords)
            mat[:, i] = target.space.class_of(f.compose(t))
        return mat


def _covariant_nodes_and_maps(ctx: Context, conf: Conflation, x_rep: Representation, depth: int):
    """Node dims and in-row map matrices of the covariant sequence."""
    root = ctx._root_kind()
    reps = (conf.a_rep, conf.b_rep, conf.c_rep)
    maps = (conf.x, conf.y)
    nodes = []
    arrows = []
    if root == "mod":
        anchors = [x_rep]
        res = minimal_resolution(x_rep)
        for k in range(1, depth + 1):
            anchors.append(res.syzygy_module(k))
        level0 = [_HomNode(x_rep, r) for r in reps]
        nodes.append(level0)
        for k in range(1, depth + 1):
            nodes.append([_ExactEkNode(anchors[k - 1], r) for r in reps])
    else:
        anchors = [x_rep]
        cur = x_rep
        for k in range(1, depth + 1):
            cur = loop_raw(cur)[0]
            anchors.append(cur)
        for k in range(0, depth + 1):
            nodes.append([_StableHomNode(anchors[k], r) for r in reps])
    for level in nodes:
        arrows.append(
            (
                level[0].postcompose_matrix(maps[0], level[1]),
                level[1].postcompose_matrix(maps[1], level[2]),
            )
        )
    return nodes, arrows


def _contravariant_nodes_and_maps(ctx: Context, conf: Conflation, x_rep: Representation, depth: int):
    root = ctx._root_kind()
    reps = (conf.c_rep, conf.b_rep, conf.a_rep)
    p = ctx.algebra.p
    nodes = []
    arrows = []
    if root == "mod":
        # the level-k Yoneda space is anchored at the (k-1)-st syzygy but its
        # class representatives start at the k-th, so transport uses Omega^k
        ys = [conf.y]
        xs = [conf.x]
        for k in range(1, depth + 1):
            ys.append(syzygy_transport(ys[-1]))
            xs.append(syzygy_transport(xs[-1]))
        level0 = [_HomNode(r, x_rep) for r in reps]
        nodes.append(level0)
        for k in range(1, depth + 1):
            anchor_reps = [
                minimal_resolution(r).syzygy_module(k - 1) if k > 1 else r for r in reps
            ]
            nodes.append([_ExactEkNode(a, x_rep) for a in anchor_reps])
        for k, level in enumerate(nodes):
            arrows.append(
                (
                    _precompose_matrix(level[0], level[1], ys[k], p),
                    _precompose_matrix(level[1], level[2], xs[k], p),
                )
            )
    else:
        ys = [conf.y]
        xs = [conf.x]
        for k in range(1, depth + 1):
            ys.append(loop_map(ys[-1]))
            xs.append(loop_map(xs[-1]))
        anchor_sets = [reps]
        cur = list(reps)
        for k in range(1, depth + 1):
            cur = [loop_raw(r)[0] for r in cur]
            anchor_sets.append(tuple(cur))
        for k in range(0, depth + 1):
            nodes.append([_StableHomNode(a, x_rep) for a in anchor_sets[k]])
        for k, level in enumerate(nodes):
            arrows.append(
                (
                    _precompose_matrix(level[0], level[1], ys[k], p),
                    _precompose_matrix(level[1], level[2], xs[k], p),
                )
            )
    return nodes, arrows


def _precompose_matrix(src_node, tgt_node, f: ModuleMap, p: int) -> np.ndarray:
    mat = linalg.zeros(tgt_node.dim, src_node.dim)
    for i in range(src_node.dim):
        coords = linalg.zeros(src_node.dim, 1).reshape(-1)
        coords[i] = 1
        if isinstance(src_node, _HomNode):
            rep_map = src_node.basis[i]
            mat[:, i] = _hom_class(tgt_node, rep_map.compose(f), p)
        elif isinstance(src_node, _StableHomNode):
            rep_map = src_node.space.representative(coords)
            mat[:, i] = tgt_node.space.class_of(rep_map.compose(f))
        else:
            t = src_node.space._rep_map(coords)
            mat[:, i] = tgt_node.space.class_of(t.compose(f))
    return mat


def _hom_class(node: _HomNode, f: ModuleMap, p: int) -> np.ndarray:
    if node.dim == 0:
        if not f.is_zero():
            raise ContextError("precomposition escaped the hom space")
        return np.zeros(0, dtype=np.int64)
    tgt = np.stack([g.flatten() for g in node.basis], axis=1) % p
    sol = linalg.solve(tgt, f.flatten().reshape(-1, 1), p)
    if sol is None:
        raise ContextError("precomposition escaped the hom space")
    return sol.reshape(-1)


def _bookkeeping(nodes, arrows, p: int) -> tuple[bool, list[str]]:
    problems = []
    for k, level in enumerate(nodes):
        a_mat, b_mat = arrows[k]
        comp = linalg.matmul(b_mat, a_mat, p)
        if np.any(comp):
            problems.append(f"level {k}: consecutive maps do not compose to zero")
        ra, rb = linalg.rank(a_mat, p), linalg.rank(b_mat, p)
        if ra + rb != level[1].dim:
            problems.append(
                f"level {k}: middle node fails exactness "
                f"(rank-in {ra} + rank-out {rb} != dim {level[1].dim})"
            )
        if k + 1 < len(nodes):
            next_a = arrows[k + 1][0]
            lhs = level[2].dim - rb
            rhs = nodes[k + 1][0].dim - linalg.rank(next_a, p)
            if lhs != rhs:
                problems.append(
                    f"junction {k}->{k + 1}: connecting rank deduced as {lhs} "
                    f"from the end node but {rhs} from the next start node"
                )
    return not problems, problems


def les_bookkeeping(ctx: Context, conf: Conflation, x_idx: int, depth: int | None = None) -> tuple[bool, dict]:
    """Exactness bookkeeping for both long sequences of a conflation against
    one test object, through E^depth."""
    if depth is None:
        depth = ctx.config.les_depth
    x_rep = ctx.objects[x_idx].rep
    nodes_c, arrows_c = _covariant_nodes_and_maps(ctx, conf, x_rep, depth)
    ok_c, probs_c = _bookkeeping(nodes_c, arrows_c, ctx.algebra.p)
    nodes_x, arrows_x = _contravariant_nodes_and_maps(ctx, conf, x_rep, depth)
    ok_x, probs_x = _bookkeeping(nodes_x, arrows_x, ctx.algebra.p)
    detail = {
        "conflation": conf.describe(),
        "test_object": ctx.object_names[x_idx],
        "covariant": probs_c,
        "contravariant": probs_x,
    }
    return ok_c and ok_x, detail
