"""Exploratory search for cluster-tilting subcategories of extension-closed
subcategories of a stable Nakayama context.

Candidate subcategories come from two sources: complements of subquotient
cones of single objects (a structured family that captures wedge-shaped
deletions from the AR quiver), and seeded random generator sets closed under
extensions and optionally syzygy/cosyzygy.  Every candidate is checked for
extension closure; inside each surviving sub-context the checker looks for
cluster-tilting subcategories of the requested size, and every hit is
cross-checked with the full theorem verifier.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

from . import linalg
from .algebra import nakayama_cyclic
from .checkers import check_cluster_tilting, check_n_cotorsion, verify_theorem
from .contexts import (
    Context,
    ContextError,
    RunConfig,
    build_stable_context,
    build_sub_context,
    is_extension_closed,
)
from .modules import Representation, hom_basis


def _submodule_vertex_choices(rep: Representation):
    """Arrow-invariant vertex-subspace tuples; feasible for small dims only."""
    import numpy as np

    p = rep.algebra.p
    q = rep.algebra.quiver
    per_vertex: list[list] = []
    for v in range(q.n_vertices):
        d = rep.dims[v]
        subs = []
        # all subspaces of F_p^d, enumerated via spanning sets
        vectors = list(itertools.product(range(p), repeat=d))[1:]
        seen = set()
        for size in range(0, d + 1):
            for combo in itertools.combinations(vectors, size):
                mat = np.array(combo, dtype=np.int64).T if combo else linalg.zeros(d, 0)
                basis = linalg.column_space_basis(mat, p)
                key = basis.tobytes() + bytes([basis.shape[1]])
                if key not in seen:
                    seen.add(key)
                    subs.append(basis)
        per_vertex.append(subs)
    for choice in itertools.product(*per_vertex):
        yield list(choice)


def _invariant(rep: Representation, bases) -> bool:
    p = rep.algebra.p
    q = rep.algebra.quiver
    for a in range(q.n_arrows):
        s, t = q.arrow_source[a], q.arrow_target[a]
        img = linalg.matmul(rep.matrices[a], bases[s], p)
        for col in range(img.shape[1]):
            if not linalg.in_span(bases[t], img[:, col : col + 1], p):
                return False
    return True


def is_subquotient(m: Representation, n: Representation, dim_budget: int = 6) -> bool:
    """True iff m is a quotient of a submodule of n (small modules only)."""
    if m.total_dim > n.total_dim:
        return False
    if n.total_dim > dim_budget:
        raise ContextError("subquotient test is limited to small modules")
    from .modules import _subspace_with_induced_action

    p = n.algebra.p
    for bases in _submodule_vertex_choices(n):
        if sum(b.shape[1] for b in bases) < m.total_dim:
            continue
        if not _invariant(n, bases):
            continue
        sub, _ = _subspace_with_induced_action(n, bases)
        homs = hom_basis(sub, m)
        if not homs or p ** len(homs) > 4096:
            continue
        for coeffs in itertools.product(range(p), repeat=len(homs)):
            if not any(coeffs):
                continue
            f = None
            for g, c in zip(homs, coeffs):
                if c:
                    f = g.scale(c) if f is None else f.add(g.scale(c))
            if f.is_epi():
                return True
    return False


def _structured_candidates(ctx: Context) -> list[frozenset[int]]:
    """Complements of subquotient cones {M : M sub of Z} and co-cones
    {M : Z sub of M}, for each object Z."""
    out = []
    n = ctx.n_objects
    table = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = is_subquotient(ctx.objects[i].rep, ctx.objects[j].rep)
    for z in range(n):
        cone = frozenset(i for i in range(n) if table[i][z])
        cocone = frozenset(i for i in range(n) if table[z][i])
        for cut in (cone, cocone):
            comp = frozenset(range(n)) - cut
            if comp and comp != frozenset(range(n)):
                out.append(comp)
    return out


def close_under_operations(
    ctx: Context, seed_ids, close_loops: bool = True, budget: int = 200
) -> frozenset[int] | None:
    """Closure of a generator set under extensions (and loop/suspension when
    requested); None when the closure exceeds the budget."""
    current = set(int(i) for i in seed_ids)
    for _ in range(budget):
        added = False
        if close_loops:
            for i in list(current):
                for j in set(ctx.ctx_syzygy(i)) | set(ctx.ctx_cosyzygy(i)):
                    if j not in current:
                        current.add(j)
                        added = True
        for c in sorted(current):
            for a in sorted(current):
                for coords in ctx.all_class_coords(c, a):
                    conf = ctx.realize(c, a, coords)
                    for j in conf.b_ids:
                        if j not in current:
                            current.add(j)
                            added = True
        if not added:
            return frozenset(current)
        if len(current) >= ctx.n_objects:
            return frozenset(range(ctx.n_objects))
    return None


def search_nakayama_stable(
    n_vertices: int,
    nilpotency: int,
    ct_size: int,
    ct_degree: int,
    config: RunConfig | None = None,
    generator_samples: int = 20,
    close_loops: bool = True,
    max_candidates: int = 64,
    verify_hits: bool = True,
) -> dict:
    """Search extension-closed sub-contexts of the stable Nakayama context for
    cluster-tilting subcategories of the requested size and degree."""
    config = config or RunConfig()
    algebra = nakayama_cyclic(n_vertices, nilpotency, config.field_char)
    parent = build_stable_context(algebra, config)
    report: dict = {
        "parent_objects": parent.n_objects,
        "ct_size": ct_size,
        "ct_degree": ct_degree,
        "candidates_examined": 0,
        "candidates_skipped": [],
        "hits": [],
    }
    candidates: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()

    def push(subset):
        if subset is None:
            return
        subset = frozenset(subset)
        if subset and subset not in seen:
            seen.add(subset)
            candidates.append(subset)

    for comp in _structured_candidates(parent):
        ok, _ = is_extension_closed(parent, comp)
        if ok:
            push(comp)
    rng = linalg.stable_rng(config.seed, 7, n_vertices, nilpotency)
    for _ in range(generator_samples):
        size = rng.randrange(2, max(3, parent.n_objects // 3))
        gens = rng.sample(range(parent.n_objects), size)
        closed = close_under_operations(parent, gens, close_loops=close_loops)
        if closed is None:
            report["candidates_skipped"].append({"generators": sorted(gens), "reason": "budget"})
            continue
        push(closed)
    push(frozenset(range(parent.n_objects)))

    for subset in candidates[:max_candidates]:
        report["candidates_examined"] += 1
        try:
            sub = (
                build_sub_context(parent, sorted(subset), config)
                if subset != frozenset(range(parent.n_objects))
                else parent
            )
        except ContextError as exc:
            report["candidates_skipped"].append(
                {"subset_size": len(subset), "reason": str(exc)}
            )
            continue
        if not sub.has_enough_projectives()[0] or not sub.has_enough_injectives()[0]:
            report["candidates_skipped"].append(
                {"subset_size": len(subset), "reason": "not enough projectives/injectives"}
            )
            continue
        forced = sorted(sub.projective_ids | sub.injective_ids)
        if len(forced) > ct_size:
            continue
        free = [i for i in range(sub.n_objects) if i not in forced]
        n_combos = math.comb(len(free), ct_size - len(forced))
        if n_combos > config.subset_budget // 64:
            report["candidates_skipped"].append(
                {
                    "subset_size": len(subset),
                    "reason": f"{n_combos} candidate subcategories exceed the budget",
                }
            )
            continue
        for extra in itertools.combinations(free, ct_size - len(forced)):
            x_ids = frozenset(forced) | frozenset(extra)
            try:
                verdict = check_cluster_tilting(sub, x_ids, ct_degree)
            except ContextError as exc:
                report["candidates_skipped"].append(
                    {"subset_size": len(subset), "reason": str(exc)}
                )
                break
            if not verdict.passed:
                continue
            cot = check_n_cotorsion(sub, x_ids, x_ids, ct_degree - 1)
            hit = {
                "context_objects": sorted(parent.object_names[i] for i in subset),
                "context_size": len(subset),
                "tilting_objects": sorted(sub.object_names[i] for i in x_ids),
                "cluster_tilting_verdict": verdict.to_dict(),
                "diagonal_cotorsion_verdict": cot.to_dict(),
            }
            if verify_hits:
                theorem = verify_theorem(sub, ct_degree - 1)
                hit["theorem_report"] = theorem
                hit["theorem_concurs"] = bool(
                    theorem["sets_equal"]
                    and sorted(sub.object_names[i] for i in x_ids)
                    in theorem["cluster_tilting"]
                )
            report["hits"].append(hit)
    report["hit_count"] = len(report["hits"])
    return report
