"""Finite extriangulated contexts over a bound quiver algebra.

Three concrete models share one interface: the exact model (all of mod L for
a finite-representation-type algebra L), the triangulated model (the stable
category of a self-injective L), and extension-closed subcategories of either.
A Context owns a finite list of indecomposable objects, an E-dimension table,
lazily built extension-class coordinate spaces with conflation realizations,
detected projectives/injectives, enough-projectives witnesses, and
context-relative syzygies.  Higher E-dimensions are always computed along
both the syzygy and the cosyzygy route and must agree; a mismatch raises.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import (
    BoundQuiverAlgebra,
    injective_module,
    projective_module,
    simple_module,
)
from .decompose import (
    fingerprint,
    indecomposable_isomorphic,
    summand_split,
)
from .homology import (
    ext_dim,
    injective_hull,
    left_approximation,
    minimal_resolution,
    projective_cover,
    right_approximation,
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
from .stable import (
    StableHomSpace,
    cone,
    loop_raw,
    require_self_injective,
    strip_projectives,
    suspension_raw,
)


class ContextError(Exception):
    pass


@dataclass
class RunConfig:
    """Budgets and reproducibility knobs shared by builders, checkers and CLI."""

    field_char: int = 2
    seed: int = 0
    enumeration_budget: int = 10000
    subset_budget: int = 1 << 20
    exhaustion_bound: int = 4096
    max_multiplicity: int = 2
    les_depth: int = 4
    exhaustive: bool = False
    output_format: str = "text"

    def validate(self):
        if min(self.enumeration_budget, self.exhaustion_bound, self.max_multiplicity) <= 0:
            raise ContextError("budgets must be positive")
        if self.les_depth < 1:
            raise ContextError("LES depth must be positive")

    def to_dict(self) -> dict:
        return {
            "field_char": self.field_char,
            "seed": self.seed,
            "enumeration_budget": self.enumeration_budget,
            "subset_budget": self.subset_budget,
            "exhaustion_bound": self.exhaustion_bound,
            "max_multiplicity": self.max_multiplicity,
            "les_depth": self.les_depth,
            "exhaustive": self.exhaustive,
        }


@dataclass
class ContextObject:
    index: int
    label: str
    rep: Representation
    aliases: tuple[str, ...] = ()


@dataclass
class Conflation:
    """A -> B -> C with module-level maps and the class coordinates."""

    ctx: "Context"
    a_idx: int
    c_idx: int
    delta: tuple[int, ...]
    a_rep: Representation
    b_rep: Representation
    c_rep: Representation
    x: ModuleMap
    y: ModuleMap
    b_ids: Counter

    def describe(self) -> str:
        names = self.ctx.object_names
        mid = "+".join(
            names[i] if m == 1 else f"{m}*{names[i]}"
            for i, m in sorted(self.b_ids.items())
        ) or "0"
        return (
            f"{names[self.a_idx]} -> {mid} -> {names[self.c_idx]} "
            f"(delta={list(self.delta)})"
        )


# -- extension-class coordinate spaces --------------------------------------


class ExactExtSpace:
    """Ext^1(C, A) with Yoneda coordinates on Hom(Omega C, A) modulo the
    restrictions of Hom(P(C), A); realizes classes as pushouts of the
    presentation conflation."""

    def __init__(self, c_rep: Representation, a_rep: Representation):
        self.c = c_rep
        self.a = a_rep
        self.p = c_rep.algebra.p
        res = minimal_resolution(c_rep)
        res.extend(0)
        self.p0 = res.terms[0]
        self.cover = res.diffs[0]
        self.omega = res.syzygies[0]
        self.j = res.syzygy_incls[0]
        self.hom = hom_basis(self.omega, a_rep)
        restricted = [g.compose(self.j) for g in hom_basis(self.p0, a_rep)]
        ncols = len(self.hom)
        if ncols == 0:
            self.quot = linalg.QuotientSpace(0, linalg.zeros(0, 0), self.p)
        else:
            basis_mat = np.stack([f.flatten() for f in self.hom], axis=1) % self.p
            cols = []
            for f in restricted:
                sol = linalg.solve(basis_mat, f.flatten().reshape(-1, 1), self.p)
                if sol is None:
                    raise ContextError("restriction map escaped Hom(Omega C, A)")
                cols.append(sol.reshape(-1))
            sub = np.stack(cols, axis=1) % self.p if cols else linalg.zeros(ncols, 0)
            self.quot = linalg.QuotientSpace(ncols, sub, self.p)
        self.dim = self.quot.dim

    def _rep_map(self, coords) -> ModuleMap:
        out = zero_map(self.omega, self.a)
        if self.dim:
            lifted = self.quot.lift(np.asarray(coords, dtype=np.int64))
            for i, f in enumerate(self.hom):
                c = int(lifted[i]) % self.p
                if c:
                    out = out.add(f.scale(c))
        return out

    def realize(self, coords) -> tuple[Representation, ModuleMap, ModuleMap]:
        """Middle term with maps (B, x: A -> B, y: B -> C) for the class."""
        p = self.p
        t = self._rep_map(coords)
        total, (incl_p0, incl_a), (proj_p0, proj_a) = _sum2(self.p0, self.a)
        glue = incl_p0.compose(self.j).add(incl_a.compose(t).negate())
        b, proj_b = cokernel(glue)
        x = proj_b.compose(incl_a)
        onto_c = self.cover.compose(proj_p0)
        y = _factor_through_projection(proj_b, onto_c)
        return b, x, y

    def class_of(self, t: ModuleMap) -> np.ndarray:
        """Coordinates of the class represented by t: Omega C -> A."""
        if not self.hom:
            return np.zeros(0, dtype=np.int64)
        basis_mat = np.stack([f.flatten() for f in self.hom], axis=1) % self.p
        sol = linalg.solve(basis_mat, t.flatten().reshape(-1, 1), self.p)
        if sol is None:
            raise ContextError("cocycle outside Hom(Omega C, A)")
        return self.quot.to_coords(sol.reshape(-1))


class StableExtSpace:
    """E(C, A) = stable Hom(Omega C, A) in the stable category, realized by
    cones over class representatives."""

    def __init__(self, c_rep: Representation, a_rep: Representation, seed: int):
        from .decompose import is_isomorphic

        self.c = c_rep
        self.a = a_rep
        self.p = c_rep.algebra.p
        self.seed = seed
        omega_raw = loop_raw(c_rep)[0]
        self.omega, _, _ = strip_projectives(omega_raw, seed)
        self.space = StableHomSpace(self.omega, a_rep)
        self.dim = self.space.dim
        self._iso_to_c: ModuleMap | None = None

    def _sigma_omega_iso(self) -> ModuleMap:
        """A stable isomorphism core(Sigma Omega C) -> C, computed once."""
        if self._iso_to_c is None:
            sigma_raw, _, _, proj = suspension_raw(self.omega)
            core, incl, retr = strip_projectives(sigma_raw, self.seed)
            iso = _find_stable_iso(core, self.c, self.seed)
            if iso is None:
                raise ContextError("suspension of the syzygy is not the object back")
            self._iso_to_c = (iso, retr)
        return self._iso_to_c

    def realize(self, coords) -> tuple[Representation, ModuleMap, ModuleMap]:
        t = self.space.representative(np.asarray(coords, dtype=np.int64))
        cone_raw, to_cone, connecting = cone(t)
        iso, retr = self._sigma_omega_iso()
        y = iso.compose(retr.compose(connecting))
        return cone_raw, to_cone, y


def _sum2(a: Representation, b: Representation):
    total, incls, projs = direct_sum([a, b])
    return total, (incls[0], incls[1]), (projs[0], projs[1])


def _factor_through_projection(proj: ModuleMap, through: ModuleMap) -> ModuleMap:
    """g with g o proj = through (proj a vertex-wise surjection)."""
    p = proj.p
    blocks = []
    for v in range(len(proj.blocks)):
        sol = linalg.solve(proj.blocks[v].T, through.blocks[v].T, p)
        if sol is None:
            raise ContextError("map does not factor through the projection")
        blocks.append(sol.T % p)
    return ModuleMap(proj.target, through.target, blocks, validate=False)


def _find_stable_iso(a: Representation, b: Representation, seed: int) -> ModuleMap | None:
    if a.total_dim == 0 and b.total_dim == 0:
        return None  # callers treat the zero case separately
    p = a.algebra.p
    maps = hom_basis(a, b)
    if not maps:
        return None
    rng = linalg.stable_rng(seed, 4, a.dims, b.dims)
    for _ in range(64):
        combo = None
        for f in maps:
            c = rng.randrange(p)
            if c:
                combo = f.scale(c) if combo is None else combo.add(f.scale(c))
        if combo is not None and combo.is_iso():
            return combo
    if p ** len(maps) <= 4096:
        for coeffs in itertools.product(range(p), repeat=len(maps)):
            combo = None
            for f, c in zip(maps, coeffs):
                if c:
                    combo = f.scale(c) if combo is None else combo.add(f.scale(c))
            if combo is not None and combo.is_iso():
                return combo
    return None


# -- the context itself ------------------------------------------------------


class Context:
    def __init__(self, kind: str, algebra: BoundQuiverAlgebra, config: RunConfig):
        self.kind = kind  # "mod" | "stable" | "sub"
        self.algebra = algebra
        self.config = config
        self.objects: list[ContextObject] = []
        self.parent: Context | None = None
        self.parent_ids: list[int] = []  # sub only: parent index per object
        self.e1: np.ndarray | None = None
        self._ext_spaces: dict[tuple[int, int], object] = {}
        self._syzygy_cache: dict[tuple[int, int], Counter] = {}
        self._cosyzygy_cache: dict[tuple[int, int], Counter] = {}
        self._ek_cache: dict[tuple[int, int, int], int] = {}
        self._sum_rep_cache: dict[tuple, tuple[Representation, list[int]]] = {}
        self._proj_witness: dict[int, dict] | None = None
        self._inj_witness: dict[int, dict] | None = None
        self.projective_ids: frozenset[int] = frozenset()
        self.injective_ids: frozenset[int] = frozenset()

    # -- object bookkeeping ---------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def object_names(self) -> list[str]:
        return [o.label for o in self.objects]

    def resolve_name(self, name: str) -> int:
        for o in self.objects:
            if name == o.label or name in o.aliases:
                return o.index
        raise ContextError(f"unknown object id {name!r}")

    def identify(self, rep: Representation) -> int | None:
        """Index of the isomorphism class of an indecomposable rep, or None."""
        fp = fingerprint(rep)
        for o in self.objects:
            if fingerprint(o.rep) == fp and indecomposable_isomorphic(
                o.rep, rep, self.config.seed
            ):
                return o.index
        return None

    def identify_sum(self, rep: Representation, strict: bool = True) -> Counter:
        """Decompose a rep into context object ids (stripping projectives in
        triangulated models); unknown pieces raise when strict."""
        out: Counter = Counter()
        if rep.total_dim == 0:
            return out
        work = rep
        if self.kind == "stable" or (self.kind == "sub" and self._root_kind() == "stable"):
            work, _, _ = strip_projectives(rep, self.config.seed)
            if work.total_dim == 0:
                return out
        for piece, _, _ in summand_split(work, self.config.seed):
            idx = self.identify(piece)
            if idx is None:
                if strict:
                    raise ContextError(
                        f"summand of dimension vector {piece.dims} is not a context object"
                    )
                return Counter({-1: 1})
            out[idx] += 1
        return out

    def _root_kind(self) -> str:
        ctx = self
        while ctx.parent is not None:
            ctx = ctx.parent
        return ctx.kind

    def sum_rep(self, ids: Counter) -> Representation:
        """Materialized direct sum for a multiset of object ids (cached)."""
        key = tuple(sorted(ids.items()))
        hit = self._sum_rep_cache.get(key)
        if hit is not None:
            return hit[0]
        reps = []
        order = []
        for idx, mult in sorted(ids.items()):
            for _ in range(mult):
                reps.append(self.objects[idx].rep)
                order.append(idx)
        rep = direct_sum(reps)[0] if reps else zero_representation(self.algebra)
        self._sum_rep_cache[key] = (rep, order)
        return rep

    # -- E-dimensions ------------------------------------------------------

    def e_dim(self, c, a) -> int:
        """dim E(c, a); arguments are object ids or Counters over ids."""
        if isinstance(c, Counter) or isinstance(a, Counter):
            cs = c if isinstance(c, Counter) else Counter({c: 1})
            asum = a if isinstance(a, Counter) else Counter({a: 1})
            return sum(
                mc * ma * int(self.e1[ci][ai])
                for ci, mc in cs.items()
                for ai, ma in asum.items()
            )
        return int(self.e1[c][a])

    def ext_space(self, c_idx: int, a_idx: int):
        key = (c_idx, a_idx)
        space = self._ext_spaces.get(key)
        if space is None:
            space = self._build_ext_space(c_idx, a_idx)
            self._ext_spaces[key] = space
        return space

    def _build_ext_space(self, c_idx: int, a_idx: int):
        raise NotImplementedError

    def realize(self, c_idx: int, a_idx: int, coords) -> Conflation:
        """Conflation realizing the class with the given coordinates (cached)."""
        key = (c_idx, a_idx, tuple(int(v) for v in coords))
        cache = self.__dict__.setdefault("_conflation_cache", {})
        hit = cache.get(key)
        if hit is not None:
            return hit
        space = self.ext_space(c_idx, a_idx)
        b, x, y = space.realize(coords)
        b_ids = self.identify_sum(b)
        conf = Conflation(
            ctx=self,
            a_idx=a_idx,
            c_idx=c_idx,
            delta=key[2],
            a_rep=self.objects[a_idx].rep,
            b_rep=b,
            c_rep=self.objects[c_idx].rep,
            x=x,
            y=y,
            b_ids=b_ids,
        )
        cache[key] = conf
        return conf

    def all_class_coords(self, c_idx: int, a_idx: int, include_zero: bool = False):
        """Every class in E(c, a), exhaustively; respects the exhaustion bound."""
        d = self.e_dim(c_idx, a_idx)
        p = self.algebra.p
        if d and p**d > self.config.exhaustion_bound:
            raise ContextError(
                f"E({self.object_names[c_idx]}, {self.object_names[a_idx]}) has "
                f"{p**d} classes, above the exhaustion bound "
                f"{self.config.exhaustion_bound}; lower p or the context size"
            )
        for coords in itertools.product(range(p), repeat=d):
            if include_zero or any(coords):
                yield coords

    # -- deflations, cocones, cones ----------------------------------------

    def is_deflation(self, y: ModuleMap) -> bool:
        root = self._root_kind()
        if root == "mod":
            if not y.is_epi():
                return False
        if self.kind == "sub":
            try:
                self.cocone_ids(y)
            except ContextError:
                return False
        return True

    def is_inflation(self, x: ModuleMap) -> bool:
        root = self._root_kind()
        if root == "mod":
            if not x.is_mono():
                return False
        if self.kind == "sub":
            try:
                self.cone_ids(x)
            except ContextError:
                return False
        return True

    def cocone_ids(self, y: ModuleMap) -> Counter:
        """Object ids of the cocone of a deflation, normalized to the context."""
        root = self._root_kind()
        if root == "mod":
            k = kernel(y)[0]
        else:
            cone_raw = cone(y)[0]
            k = loop_raw(cone_raw)[0] if cone_raw.total_dim else cone_raw
        ids = self._home().identify_sum(k)
        return self._pull_ids(ids)

    def cone_ids(self, x: ModuleMap) -> Counter:
        root = self._root_kind()
        if root == "mod":
            c = cokernel(x)[0]
        else:
            c = cone(x)[0]
        ids = self._home().identify_sum(c)
        return self._pull_ids(ids)

    def _home(self) -> "Context":
        return self.parent if self.kind == "sub" else self

    def _pull_ids(self, parent_ids: Counter) -> Counter:
        if self.kind != "sub":
            return parent_ids
        back = {pid: i for i, pid in enumerate(self.parent_ids)}
        out = Counter()
        for pid, m in parent_ids.items():
            if pid not in back:
                raise ContextError(
                    f"object {self.parent.object_names[pid]} falls outside the subcategory"
                )
            out[back[pid]] += m
        return out

    # -- projectives, injectives, witnesses ---------------------------------

    def detect_projectives(self):
        n = self.n_objects
        self.projective_ids = frozenset(
            c for c in range(n) if all(self.e1[c][a] == 0 for a in range(n))
        )
        self.injective_ids = frozenset(
            a for a in range(n) if all(self.e1[c][a] == 0 for c in range(n))
        )

    def has_enough_projectives(self) -> tuple[bool, dict[int, dict]]:
        if self._proj_witness is None:
            self._proj_witness = self._find_enough_witnesses(projective_side=True)
        ok = all(idx in self._proj_witness for idx in range(self.n_objects))
        return ok, self._proj_witness

    def has_enough_injectives(self) -> tuple[bool, dict[int, dict]]:
        if self._inj_witness is None:
            self._inj_witness = self._find_enough_witnesses(projective_side=False)
        ok = all(idx in self._inj_witness for idx in range(self.n_objects))
        return ok, self._inj_witness

    def _find_enough_witnesses(self, projective_side: bool) -> dict[int, dict]:
        raise NotImplementedError

    # -- context-relative syzygies ------------------------------------------

    def ctx_syzygy(self, idx: int) -> Counter:
        """Cocone of the enough-projectives witness, context projectives stripped."""
        hit = self._syzygy_cache.get((1, idx))
        if hit is not None:
            return hit
        ok, witnesses = self.has_enough_projectives()
        if idx not in witnesses:
            raise ContextError(
                f"object {self.object_names[idx]} has no deflation from a projective"
            )
        ids = Counter(witnesses[idx]["cocone"])
        ids = Counter({i: m for i, m in ids.items() if i not in self.projective_ids})
        self._syzygy_cache[(1, idx)] = ids
        return ids

    def ctx_cosyzygy(self, idx: int) -> Counter:
        hit = self._cosyzygy_cache.get((1, idx))
        if hit is not None:
            return hit
        ok, witnesses = self.has_enough_injectives()
        if idx not in witnesses:
            raise ContextError(
                f"object {self.object_names[idx]} has no inflation into an injective"
            )
        ids = Counter(witnesses[idx]["cone"])
        ids = Counter({i: m for i, m in ids.items() if i not in self.injective_ids})
        self._cosyzygy_cache[(1, idx)] = ids
        return ids

    def syzygy_power(self, k: int, idx: int) -> Counter:
        """Omega^k within the context, as a multiset of object ids."""
        if k == 0:
            return Counter({idx: 1})
        hit = self._syzygy_cache.get((k, idx))
        if hit is None:
            prev = self.syzygy_power(k - 1, idx)
            hit = Counter()
            for i, m in prev.items():
                for j, mj in self.ctx_syzygy(i).items():
                    hit[j] += m * mj
            self._syzygy_cache[(k, idx)] = hit
        return hit

    def cosyzygy_power(self, k: int, idx: int) -> Counter:
        if k == 0:
            return Counter({idx: 1})
        hit = self._cosyzygy_cache.get((k, idx))
        if hit is None:
            prev = self.cosyzygy_power(k - 1, idx)
            hit = Counter()
            for i, m in prev.items():
                for j, mj in self.ctx_cosyzygy(i).items():
                    hit[j] += m * mj
            self._cosyzygy_cache[(k, idx)] = hit
        return hit

    def e_k_dim(self, k: int, c, a) -> int:
        """dim E^k; computes the syzygy route and checks the cosyzygy route."""
        if k < 1:
            raise ContextError("extension degree must be >= 1")
        if isinstance(c, Counter) or isinstance(a, Counter):
            cs = c if isinstance(c, Counter) else Counter({c: 1})
            asum = a if isinstance(a, Counter) else Counter({a: 1})
            return sum(
                mc * ma * self.e_k_dim(k, ci, ai)
                for ci, mc in cs.items()
                for ai, ma in asum.items()
            )
        if k == 1:
            return self.e_dim(c, a)
        hit = self._ek_cache.get((k, c, a))
        if hit is not None:
            return hit
        omega_route = self.e_dim(self.syzygy_power(k - 1, c), a)
        sigma_route = self.e_dim(c, self.cosyzygy_power(k - 1, a))
        if omega_route != sigma_route:
            raise ContextError(
                f"syzygy route E^{k}({self.object_names[c]},{self.object_names[a]}) = "
                f"{omega_route} but cosyzygy route = {sigma_route}; "
                "context construction is inconsistent"
            )
        self._ek_cache[(k, c, a)] = omega_route
        return omega_route

    def e_k_table(self, k: int) -> np.ndarray:
        n = self.n_objects
        out = np.zeros((n, n), dtype=np.int64)
        for c in range(n):
            for a in range(n):
                out[c][a] = self.e_k_dim(k, c, a)
        return out

    # -- approximations within the context ------------------------------------

    def right_approx(self, member_ids, c_idx: int, augment: bool) -> ModuleMap:
        """Canonical right approximation of the object by add(members); when
        `augment`, a deflation from a context projective is added so the
        total map is a deflation (the approximation-deflation construction)."""
        c_rep = self.objects[c_idx].rep
        members = [self.objects[i].rep for i in sorted(set(member_ids))]
        if self._root_kind() == "mod" and self.kind != "sub":
            return right_approximation(members, c_rep, include_cover=augment)
        summands: list[tuple[Representation, ModuleMap]] = []
        for x in members:
            for f in hom_basis(x, c_rep):
                summands.append((x, f))
        if augment:
            ok, witnesses = self.has_enough_projectives()
            w = witnesses.get(c_idx)
            if w is not None and w["map"] is not None:
                summands.append((w["map"].source, w["map"]))
        if not summands:
            z = zero_representation(self.algebra)
            return zero_map(z, c_rep)
        total, incls, projs = direct_sum([s for s, _ in summands])
        h = zero_map(total, c_rep)
        for (s, f), proj in zip(summands, projs):
            h = h.add(f.compose(proj))
        return h

    def left_approx(self, member_ids, c_idx: int, augment: bool) -> ModuleMap:
        c_rep = self.objects[c_idx].rep
        members = [self.objects[i].rep for i in sorted(set(member_ids))]
        if self._root_kind() == "mod" and self.kind != "sub":
            return left_approximation(members, c_rep, include_hull=augment)
        summands: list[tuple[Representation, ModuleMap]] = []
        for x in members:
            for f in hom_basis(c_rep, x):
                summands.append((x, f))
        if augment:
            ok, witnesses = self.has_enough_injectives()
            w = witnesses.get(c_idx)
            if w is not None and w["map"] is not None:
                summands.append((w["map"].target, w["map"]))
        if not summands:
            z = zero_representation(self.algebra)
            return zero_map(c_rep, z)
        total, incls, projs = direct_sum([s for s, _ in summands])
        h = zero_map(c_rep, total)
        for (s, f), incl in zip(summands, incls):
            h = h.add(incl.compose(f))
        return h

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "algebra": repr(self.algebra),
            "objects": [
                {
                    "label": o.label,
                    "dims": list(o.rep.dims),
                    "projective": o.index in self.projective_ids,
                    "injective": o.index in self.injective_ids,
                    "aliases": list(o.aliases),
                }
                for o in self.objects
            ],
        }


# -- exact model -------------------------------------------------------------


class ExactContext(Context):
    def __init__(self, algebra, config):
        super().__init__("mod", algebra, config)

    def _build_ext_space(self, c_idx, a_idx):
        space = ExactExtSpace(self.objects[c_idx].rep, self.objects[a_idx].rep)
        if space.dim != self.e1[c_idx][a_idx]:
            raise ContextError("Yoneda coordinates disagree with the Ext table")
        return space

    def _find_enough_witnesses(self, projective_side: bool) -> dict[int, dict]:
        out = {}
        for o in self.objects:
            if projective_side:
                p0, cover = projective_cover(o.rep)
                ids = self.identify_sum(kernel(cover)[0])
                out[o.index] = {"map": cover, "source": p0, "cocone": ids}
            else:
                i0, mono = injective_hull(o.rep)
                ids = self.identify_sum(cokernel(mono)[0])
                out[o.index] = {"map": mono, "target": i0, "cone": ids}
        return out


class StableContext(Context):
    def __init__(self, algebra, config):
        super().__init__("stable", algebra, config)

    def _build_ext_space(self, c_idx, a_idx):
        space = StableExtSpace(
            self.objects[c_idx].rep, self.objects[a_idx].rep, self.config.seed
        )
        if space.dim != self.e1[c_idx][a_idx]:
            raise ContextError("stable extension coordinates disagree with the E table")
        return space

    def _find_enough_witnesses(self, projective_side: bool) -> dict[int, dict]:
        # triangulated: the zero map from/into the zero object always works
        out = {}
        for o in self.objects:
            if projective_side:
                ids = self.identify_sum(loop_raw(o.rep)[0])
                out[o.index] = {
                    "map": None,  # deflation 0 -> C
                    "source": zero_representation(self.algebra),
                    "cocone": ids,
                }
            else:
                ids = self.identify_sum(suspension_raw(o.rep)[0])
                out[o.index] = {
                    "map": None,
                    "target": zero_representation(self.algebra),
                    "cone": ids,
                }
        return out


class SubContext(Context):
    def __init__(self, parent: Context, parent_ids: list[int], config):
        super().__init__("sub", parent.algebra, config)
        self.parent = parent
        self.parent_ids = list(parent_ids)

    def _build_ext_space(self, c_idx, a_idx):
        return self.parent.ext_space(self.parent_ids[c_idx], self.parent_ids[a_idx])

    def _find_enough_witnesses(self, projective_side: bool) -> dict[int, dict]:
        out = {}
        for o in self.objects:
            w = self._witness_for(o.index, projective_side)
            if w is not None:
                out[o.index] = w
        return out

    def _witness_for(self, idx: int, projective_side: bool):
        forced = sorted(self.projective_ids if projective_side else self.injective_ids)
        c_rep = self.objects[idx].rep
        # objects that are themselves projective/injective: identity works
        if (projective_side and idx in self.projective_ids) or (
            not projective_side and idx in self.injective_ids
        ):
            from .modules import identity_map

            key = "cocone" if projective_side else "cone"
            return {"map": identity_map(c_rep), key: Counter()}
        # the zero map: cocone Omega C (cone Sigma C) computed in the parent
        pidx = self.parent_ids[idx]
        if self._root_kind() == "stable":
            try:
                if projective_side:
                    ids = self._pull_ids(self.parent.ctx_syzygy(pidx) + Counter())
                    return {"map": None, "cocone": ids}
            except ContextError:
                pass
            try:
                if not projective_side:
                    ids = self._pull_ids(self.parent.ctx_cosyzygy(pidx) + Counter())
                    return {"map": None, "cone": ids}
            except ContextError:
                pass
        # canonical: approximation by the context projectives/injectives
        if forced:
            if projective_side:
                h = self.right_approx(forced, idx, augment=False)
                if self.is_deflation(h):
                    return {"map": h, "cocone": self.cocone_ids(h)}
            else:
                h = self.left_approx(forced, idx, augment=False)
                if self.is_inflation(h):
                    return {"map": h, "cone": self.cone_ids(h)}
        # bounded exhaustive search over maps from small sums of projectives
        p = self.algebra.p
        for size in range(1, self.config.max_multiplicity + 1):
            for combo in itertools.combinations_with_replacement(forced, size):
                src = self.sum_rep(Counter(combo))
                homs = (
                    hom_basis(src, c_rep) if projective_side else hom_basis(c_rep, src)
                )
                if not homs or p ** len(homs) > self.config.exhaustion_bound:
                    continue
                for coeffs in itertools.product(range(p), repeat=len(homs)):
                    if not any(coeffs):
                        continue
                    f = None
                    for g, c in zip(homs, coeffs):
                        if c:
                            f = g.scale(c) if f is None else f.add(g.scale(c))
                    if projective_side and self.is_deflation(f):
                        return {"map": f, "cocone": self.cocone_ids(f)}
                    if not projective_side and self.is_inflation(f):
                        return {"map": f, "cone": self.cone_ids(f)}
        return None


# -- object enumeration and builders ----------------------------------------


def _register(pool: list[Representation], fps: list, rep: Representation, seed: int) -> bool:
    """Add an indecomposable rep to the pool if genuinely new."""
    fp = fingerprint(rep)
    for known, known_fp in zip(pool, fps):
        if known_fp == fp and indecomposable_isomorphic(known, rep, seed):
            return False
    pool.append(rep)
    fps.append(fp)
    return True


def enumerate_indecomposables(algebra: BoundQuiverAlgebra, config: RunConfig) -> list[Representation]:
    """All indecomposables of mod L, by closing the simples, projectives and
    injectives under syzygy, cosyzygy and middle terms of extensions."""
    from .homology import cosyzygy as cosyz_op
    from .homology import syzygy as syz_op

    seed = config.seed
    pool: list[Representation] = []
    fps: list = []
    for v in algebra.quiver.vertex_ids:
        for rep in (
            simple_module(algebra, v),
            projective_module(algebra, v),
            injective_module(algebra, v),
        ):
            for piece, _, _ in summand_split(rep, seed):
                _register(pool, fps, piece, seed)

    sweeps = 0
    syz_done = 0
    pairs_done: set[tuple[int, int]] = set()
    while True:
        sweeps += 1
        if sweeps > config.enumeration_budget:
            raise ContextError("enumeration budget exceeded (possibly infinite type)")
        changed = False
        while syz_done < len(pool):
            rep = pool[syz_done]
            syz_done += 1
            for out in (syz_op(rep), cosyz_op(rep)):
                if out.total_dim:
                    for piece, _, _ in summand_split(out, seed):
                        changed |= _register(pool, fps, piece, seed)
        count = len(pool)
        for ci in range(count):
            for ai in range(count):
                if (ci, ai) in pairs_done:
                    continue
                pairs_done.add((ci, ai))
                c_rep, a_rep = pool[ci], pool[ai]
                d = ext_dim(1, c_rep, a_rep)
                if d == 0:
                    continue
                p = algebra.p
                if p**d > config.exhaustion_bound:
                    raise ContextError(
                        "extension class space too large to enumerate exhaustively"
                    )
                space = ExactExtSpace(c_rep, a_rep)
                for coords in itertools.product(range(p), repeat=d):
                    if not any(coords):
                        continue
                    b, _, _ = space.realize(coords)
                    for piece, _, _ in summand_split(b, seed):
                        changed |= _register(pool, fps, piece, seed)
                        if len(pool) > config.enumeration_budget:
                            raise ContextError(
                                "enumeration budget exceeded (possibly infinite type)"
                            )
        if not changed and syz_done == len(pool):
            break
    pool.sort(key=lambda r: (r.total_dim, r.dims, fingerprint(r)))
    return pool


def _label_objects(ctx: Context):
    """Stable labels: P/I/S aliases where the object is one, else m<k>."""
    algebra = ctx.algebra
    seed = ctx.config.seed
    named: list[tuple[str, Representation]] = []
    for v in algebra.quiver.vertex_ids:
        named.append((f"P{v}", projective_module(algebra, v)))
        named.append((f"I{v}", injective_module(algebra, v)))
        named.append((f"S{v}", simple_module(algebra, v)))
    for o in ctx.objects:
        aliases = []
        for name, rep in named:
            if rep.dims == o.rep.dims and indecomposable_isomorphic(o.rep, rep, seed):
                aliases.append(name)
        o.aliases = tuple(aliases)
        o.label = aliases[0] if aliases else f"m{o.index}"


def build_exact_context(algebra: BoundQuiverAlgebra, config: RunConfig | None = None) -> Context:
    config = config or RunConfig(field_char=algebra.p)
    config.validate()
    ctx = ExactContext(algebra, config)
    pool = enumerate_indecomposables(algebra, config)
    ctx.objects = [ContextObject(i, f"m{i}", rep) for i, rep in enumerate(pool)]
    n = len(pool)
    ctx.e1 = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        for a in range(n):
            ctx.e1[c][a] = ext_dim(1, pool[c], pool[a])
    ctx.detect_projectives()
    _label_objects(ctx)
    return ctx


def build_stable_context(algebra: BoundQuiverAlgebra, config: RunConfig | None = None) -> Context:
    config = config or RunConfig(field_char=algebra.p)
    config.validate()
    require_self_injective(algebra)
    ctx = StableContext(algebra, config)
    pool = enumerate_indecomposables(algebra, config)
    from .stable import is_projective_rep

    pool = [rep for rep in pool if not is_projective_rep(rep, config.seed)]
    ctx.objects = [ContextObject(i, f"m{i}", rep) for i, rep in enumerate(pool)]
    n = len(pool)
    ctx.e1 = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        for a in range(n):
            # E(C, A) = stable Hom(Omega C, A); over a self-injective algebra
            # this equals module Ext^1.  Spaces built lazily re-check the dims.
            ctx.e1[c][a] = ext_dim(1, pool[c], pool[a])
    ctx.detect_projectives()
    if ctx.projective_ids or ctx.injective_ids:
        raise ContextError("a triangulated context detected nonzero projectives")
    _label_objects(ctx)
    return ctx


def is_extension_closed(parent: Context, subset_ids) -> tuple[bool, dict | None]:
    """Exhaustive pairwise closure check; returns (ok, witness)."""
    subset = sorted(set(subset_ids))
    inside = set(subset)
    for c in subset:
        for a in subset:
            for coords in parent.all_class_coords(c, a):
                conf = parent.realize(c, a, coords)
                if any(i not in inside for i in conf.b_ids):
                    outside = [
                        parent.object_names[i] for i in conf.b_ids if i not in inside
                    ]
                    return False, {
                        "c": parent.object_names[c],
                        "a": parent.object_names[a],
                        "delta": list(coords),
                        "middle": outside,
                    }
    return True, None


def build_sub_context(parent: Context, subset_ids, config: RunConfig | None = None) -> Context:
    config = config or parent.config
    subset = sorted(set(subset_ids))
    if any(i < 0 or i >= parent.n_objects for i in subset):
        raise ContextError("subset contains unknown parent object ids")
    ok, witness = is_extension_closed(parent, subset)
    if not ok:
        raise ContextError(
            "subset is not extension closed: class delta="
            f"{witness['delta']} in E({witness['c']}, {witness['a']}) has middle "
            f"summands {witness['middle']} outside the subset"
        )
    ctx = SubContext(parent, subset, config)
    ctx.objects = [
        ContextObject(i, parent.objects[pid].label, parent.objects[pid].rep, parent.objects[pid].aliases)
        for i, pid in enumerate(subset)
    ]
    n = len(subset)
    ctx.e1 = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        for a in range(n):
            ctx.e1[c][a] = parent.e1[subset[c]][subset[a]]
    ctx.detect_projectives()
    return ctx
