"""Krull-Schmidt decomposition and isomorphism testing.

Splitting strategy: hunt for a nontrivial idempotent endomorphism (minimal
polynomials with coprime factors give exact idempotents; failing that, lift
an idempotent of End/rad), falling back to Fitting splittings with seeded
random endomorphisms.  Indecomposability is never assumed: it is certified
by checking that End modulo its radical is a field (commutative with a
one-dimensional Frobenius fixed space).

The radical is computed by the characteristic-p chain of coefficient
conditions c_{p^k}((xy)) = 0 and then *certified* at runtime to be a
nilpotent two-sided ideal, so a wrong radical can only raise, never
silently corrupt a decomposition.
"""

from __future__ import annotations

import random

import numpy as np
import sympy

from . import linalg
from .modules import ModuleMap, Representation, hom_basis, identity_map


class DecompositionError(Exception):
    """Splitting machinery exhausted without a certificate; never silent."""


# -- endomorphism algebra helpers -------------------------------------------


def action_matrix(f: ModuleMap) -> np.ndarray:
    """Block-diagonal matrix of f on the total space of its source."""
    n = f.source.total_dim
    out = linalg.zeros(n, n)
    pos = 0
    for v, b in enumerate(f.blocks):
        d = f.source.dims[v]
        out[pos : pos + d, pos : pos + d] = b
        pos += d
    return out


def _char_coeff(a: np.ndarray, idx: int, p: int) -> int:
    poly = linalg.char_poly(a, p)
    return poly[idx] if 0 <= idx < len(poly) else 0


def radical_basis(endos: list[ModuleMap], p: int) -> list[np.ndarray]:
    """Coordinate vectors (over the given endo basis) spanning rad End.

    Chain: I_0 = End, I_{k+1} = {x in I_k : c_{p^k}(xy) = 0 for all y in I_k},
    for p^k <= dim of the module.  The result is certified to be a nilpotent
    two-sided ideal; certification failure raises.
    """
    if not endos:
        return []
    n = endos[0].source.total_dim
    dim_e = len(endos)
    acts = [action_matrix(f) for f in endos]
    basis_flat = np.stack([a.reshape(-1) for a in acts], axis=1) % p

    cur = [linalg.eye(dim_e)[:, i] for i in range(dim_e)]  # coords over endo basis

    def coord_to_matrix(c):
        m = linalg.zeros(n, n)
        for i, ci in enumerate(c):
            if ci % p:
                m = (m + (ci % p) * acts[i]) % p
        return m

    k = 0
    while p**k <= n and cur:
        pk = p**k
        mats = [coord_to_matrix(c) for c in cur]
        rows = []
        for y in mats:
            row = [
                _char_coeff(linalg.matmul(x, y, p), n - pk, p)
                for x in mats
            ]
            rows.append(row)
        constraint = np.array(rows, dtype=np.int64) % p
        null = linalg.nullspace(constraint, p)
        new = []
        for j in range(null.shape[1]):
            combo = linalg.zeros(dim_e, 1).reshape(-1)
            for i, c in enumerate(cur):
                if null[i, j] % p:
                    combo = (combo + null[i, j] * c) % p
            new.append(combo)
        cur = new
        k += 1

    rad = cur
    # certification: two-sided ideal, nilpotent
    rad_flat = (
        np.stack([coord_to_matrix(c).reshape(-1) for c in rad], axis=1) % p
        if rad
        else linalg.zeros(n * n, 0)
    )

    def in_rad_span(mat):
        return linalg.solve(rad_flat, mat.reshape(-1, 1), p) is not None if rad else not np.any(mat)

    rad_mats = [coord_to_matrix(c) for c in rad]
    for r in rad_mats:
        for b in acts:
            if not in_rad_span(linalg.matmul(r, b, p)) or not in_rad_span(linalg.matmul(b, r, p)):
                raise DecompositionError("radical chain did not produce an ideal")
    power = [m for m in rad_mats if np.any(m)]
    for _ in range(dim_e + 1):
        if not power:
            break
        prods = []
        for a in power:
            for r in rad_mats:
                prod = linalg.matmul(a, r, p)
                if np.any(prod):
                    prods.append(prod)
        if not prods:
            power = []
            break
        flat = np.stack([m.reshape(-1) for m in prods], axis=0) % p
        span = linalg.row_space_basis(flat, p)
        power = [span[i].reshape(n, n) for i in range(span.shape[0])]
    if power:
        raise DecompositionError("radical chain did not produce a nilpotent ideal")
    return rad


class _QuotientAlgebra:
    """End modulo a certified ideal, with multiplication and Frobenius."""

    def __init__(self, endos: list[ModuleMap], rad_coords: list[np.ndarray], p: int):
        self.p = p
        self.endos = endos
        dim_e = len(endos)
        sub = (
            np.stack(rad_coords, axis=1) % p if rad_coords else linalg.zeros(dim_e, 0)
        )
        self.quot = linalg.QuotientSpace(dim_e, sub, p)
        self.dim = self.quot.dim
        flats = [f.flatten() for f in endos]
        self.basis_flat = np.stack(flats, axis=1) % p if flats else linalg.zeros(0, 0)
        self.acts = [action_matrix(f) for f in endos]

    def endo_coords(self, f: ModuleMap) -> np.ndarray:
        sol = linalg.solve(self.basis_flat, f.flatten().reshape(-1, 1), self.p)
        if sol is None:
            raise DecompositionError("endomorphism outside its own algebra")
        return sol.reshape(-1)

    def lift(self, qcoords: np.ndarray) -> np.ndarray:
        return self.quot.lift(qcoords)

    def to_q(self, ecoords: np.ndarray) -> np.ndarray:
        return self.quot.to_coords(ecoords)

    def mult_e(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Product in End, both in endo-basis coordinates."""
        p = self.p
        n = self.acts[0].shape[0] if self.acts else 0
        ma = linalg.zeros(n, n)
        mb = linalg.zeros(n, n)
        for i in range(len(self.endos)):
            if a[i] % p:
                ma = (ma + (a[i] % p) * self.acts[i]) % p
            if b[i] % p:
                mb = (mb + (b[i] % p) * self.acts[i]) % p
        prod = linalg.matmul(ma, mb, p)
        # products of endomorphisms are endomorphisms: expand over the basis
        flat_blocks = []
        pos = 0
        src = self.endos[0].source
        for v in range(len(src.dims)):
            d = src.dims[v]
            flat_blocks.append(prod[pos : pos + d, pos : pos + d].reshape(-1))
            pos += d
        flat = np.concatenate(flat_blocks) if flat_blocks else np.zeros(0, dtype=np.int64)
        sol = linalg.solve(self.basis_flat, flat.reshape(-1, 1), self.p)
        if sol is None:
            raise DecompositionError("endomorphism product escaped the algebra")
        return sol.reshape(-1)

    def is_commutative(self) -> bool:
        reps = [self.lift(linalg.eye(self.dim)[:, i]) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                ab = self.to_q(self.mult_e(reps[i], reps[j]))
                ba = self.to_q(self.mult_e(reps[j], reps[i]))
                if not np.array_equal(ab, ba):
                    return False
        return True

    def frobenius_fixed_dim(self) -> int:
        """dim of {x : x^p = x}; counts the simple factors when commutative."""
        cols = []
        for i in range(self.dim):
            e = self.lift(linalg.eye(self.dim)[:, i])
            power = e
            for _ in range(self.p - 1):
                power = self.mult_e(power, e)
            cols.append(self.to_q(power))
        frob = np.stack(cols, axis=1) % self.p
        return int(linalg.nullspace((frob - linalg.eye(self.dim)) % self.p, self.p).shape[1])


# -- idempotent hunting ------------------------------------------------------


def _poly_from_sympy(expr_poly, p: int) -> list[int]:
    cs = [int(c) % p for c in expr_poly.all_coeffs()]
    return list(reversed(cs))


def _splitting_idempotent_from_minpoly(minpoly: list[int], p: int):
    """If the minimal polynomial has >= 2 coprime factors, return a polynomial
    g with g(z) idempotent and nontrivial; else None."""
    x = sympy.symbols("x")
    f = sympy.Poly(list(reversed([c % p for c in minpoly])), x, modulus=p)
    _, factors = f.factor_list()
    if len(factors) < 2:
        return None
    f1, e1 = factors[0]
    part1 = sympy.Poly(f1**e1, x, modulus=p)
    rest = sympy.Poly(1, x, modulus=p)
    for fi, ei in factors[1:]:
        rest = sympy.Poly(rest * fi**ei, x, modulus=p)
    u, v, g = sympy.gcdex(part1.as_expr(), rest.as_expr(), x, modulus=p)
    # u*part1 + v*rest = 1; e := v*rest is 1 mod part1 and 0 mod rest
    e_poly = sympy.Poly(sympy.expand(v * rest.as_expr()), x, modulus=p)
    return _poly_from_sympy(e_poly, p)


def _apply_poly_to_endo(f: ModuleMap, poly: list[int]) -> ModuleMap:
    src = f.source
    p = f.p
    blocks = [linalg.poly_eval_matrix(poly, b, p) for b in f.blocks]
    # poly(f) includes the constant term as a multiple of the identity
    return ModuleMap(src, src, blocks, validate=False)


def _split_by_subspaces(m: Representation, bases_a, bases_b):
    """Split m as A + B given complementary invariant vertex subspaces.

    Returns (A, incl_a, retr_a, B, incl_b, retr_b).
    """
    from .modules import _subspace_with_induced_action

    p = m.algebra.p
    a_rep, a_incl = _subspace_with_induced_action(m, bases_a)
    b_rep, b_incl = _subspace_with_induced_action(m, bases_b)
    retr_a_blocks = []
    retr_b_blocks = []
    for v in range(len(m.dims)):
        joint = np.concatenate([bases_a[v], bases_b[v]], axis=1)
        inv = linalg.inverse(joint, p)
        if inv is None:
            raise DecompositionError("subspaces do not split the module")
        da = bases_a[v].shape[1]
        retr_a_blocks.append(inv[:da])
        retr_b_blocks.append(inv[da:])
    retr_a = ModuleMap(m, a_rep, retr_a_blocks, validate=False)
    retr_b = ModuleMap(m, b_rep, retr_b_blocks, validate=False)
    return a_rep, a_incl, retr_a, b_rep, b_incl, retr_b


def _split_by_idempotent(m: Representation, e: ModuleMap):
    p = m.algebra.p
    one_minus = identity_map(m).add(e.negate())
    bases_a = [linalg.column_space_basis(b, p) for b in e.blocks]
    bases_b = [linalg.column_space_basis(b, p) for b in one_minus.blocks]
    return _split_by_subspaces(m, bases_a, bases_b)


def _hunt_idempotent(m: Representation, endos: list[ModuleMap], rng: random.Random):
    """Nontrivial idempotent endomorphism of m, or None."""
    p = m.algebra.p
    candidates: list[ModuleMap] = list(endos)
    for i in range(min(len(endos), 6)):
        for j in range(min(len(endos), 6)):
            candidates.append(endos[i].compose(endos[j]))
    for _ in range(24):
        combo = None
        for f in endos:
            c = rng.randrange(p)
            if c:
                term = f.scale(c)
                combo = term if combo is None else combo.add(term)
        if combo is not None:
            candidates.append(combo)
    ident = identity_map(m)
    for z in candidates:
        act = action_matrix(z)
        minpoly = linalg.min_poly(act, p)
        g = _splitting_idempotent_from_minpoly(minpoly, p)
        if g is None:
            continue
        e = _apply_poly_to_endo(z, g)
        if e.is_zero() or e.add(ident.negate()).is_zero():
            continue
        assert e.compose(e).add(e.negate()).is_zero()
        return e
    return None


def _lift_idempotent(m: Representation, e: ModuleMap, bound: int = 40) -> ModuleMap:
    """Newton lift e <- 3e^2 - 2e^3 until exactly idempotent."""
    ident = identity_map(m)
    for _ in range(bound):
        if e.compose(e).add(e.negate()).is_zero():
            return e
        e2 = e.compose(e)
        e3 = e2.compose(e)
        e = e2.scale(3).add(e3.scale((-2) % m.algebra.p))
    raise DecompositionError("idempotent lifting did not converge")


def _is_certified_local(m: Representation, endos: list[ModuleMap]) -> bool:
    """End(m)/rad is a field: commutative with Frobenius fixed space of dim 1."""
    p = m.algebra.p
    rad = radical_basis(endos, p)
    q = _QuotientAlgebra(endos, rad, p)
    if q.dim == 0:
        raise DecompositionError("endomorphism algebra equals its radical")
    return q.is_commutative() and q.frobenius_fixed_dim() == 1


def _quotient_idempotent(m: Representation, endos: list[ModuleMap], rng: random.Random):
    """Idempotent of End/rad lifted to End, or None."""
    p = m.algebra.p
    rad = radical_basis(endos, p)
    q = _QuotientAlgebra(endos, rad, p)
    dim_e = len(endos)
    candidate_coords = [q.lift(linalg.eye(q.dim)[:, i]) for i in range(q.dim)]
    for _ in range(24):
        c = np.array([rng.randrange(p) for _ in range(q.dim)], dtype=np.int64)
        if np.any(c):
            candidate_coords.append(q.lift(c))
    ident_coords = q.endo_coords(identity_map(m))
    for ec in candidate_coords:
        # regular representation of the class in the quotient
        cols = []
        for i in range(q.dim):
            b = q.lift(linalg.eye(q.dim)[:, i])
            cols.append(q.to_q(q.mult_e(ec, b)))
        reg = np.stack(cols, axis=1) % p if cols else linalg.zeros(0, 0)
        minpoly = linalg.min_poly(reg, p)
        g = _splitting_idempotent_from_minpoly(minpoly, p)
        if g is None:
            continue
        # evaluate g at the class inside End, then lift through the radical
        acc = linalg.zeros(dim_e, 1).reshape(-1)
        power = ident_coords
        for coeff in g:
            if coeff % p:
                acc = (acc + coeff * power) % p
            power = q.mult_e(power, ec)
        e_map = _endo_from_coords(m, endos, acc)
        try:
            e_map = _lift_idempotent(m, e_map)
        except DecompositionError:
            continue
        ident = identity_map(m)
        if e_map.is_zero() or e_map.add(ident.negate()).is_zero():
            continue
        return e_map
    return None


def _endo_from_coords(m: Representation, endos: list[ModuleMap], coords) -> ModuleMap:
    out = None
    p = m.algebra.p
    for i, f in enumerate(endos):
        c = int(coords[i]) % p
        if c:
            term = f.scale(c)
            out = term if out is None else out.add(term)
    if out is None:
        from .modules import zero_map

        out = zero_map(m, m)
    return out


# -- decomposition -----------------------------------------------------------


def summand_split(m: Representation, seed: int = 0):
    """All indecomposable summands with inclusion and retraction maps.

    Returns a list of (piece, inclusion, retraction); retr o incl = id piece.
    """
    rng = linalg.stable_rng(seed, 1)
    out = []
    bound = 4 * max(m.total_dim, 1)
    _split_rec(m, identity_map(m), identity_map(m), out, rng, bound)
    out.sort(key=lambda t: (t[0].dims, -t[0].total_dim))
    return out


def _split_rec(piece, incl, retr, out, rng, bound, depth=0):
    if piece.total_dim == 0:
        return
    if depth > bound:
        raise DecompositionError("splitting recursion exceeded its depth bound")
    endos = hom_basis(piece, piece)
    if len(endos) == 1:
        out.append((piece, incl, retr))
        return
    e = _hunt_idempotent(piece, endos, rng)
    if e is None:
        if _is_certified_local(piece, endos):
            out.append((piece, incl, retr))
            return
        e = _quotient_idempotent(piece, endos, rng)
    if e is None:
        split = _fitting_split(piece, endos, rng)
        if split is None:
            raise DecompositionError(
                "no locality certificate and no splitting found "
                f"for a module of dimension vector {piece.dims}"
            )
        a, ia, ra, b, ib, rb = split
    else:
        a, ia, ra, b, ib, rb = _split_by_idempotent(piece, e)
    _split_rec(a, incl.compose(ia), ra.compose(retr), out, rng, bound, depth + 1)
    _split_rec(b, incl.compose(ib), rb.compose(retr), out, rng, bound, depth + 1)


def _fitting_split(m: Representation, endos: list[ModuleMap], rng: random.Random):
    p = m.algebra.p
    n = m.total_dim
    for _ in range(60):
        coords = [rng.randrange(p) for _ in endos]
        phi = _endo_from_coords(m, endos, coords)
        power = phi
        for _ in range(max(n.bit_length(), 1)):
            power = power.compose(power)  # phi^(2^k), k >= log2(n): stabilized
        k_bases = [linalg.nullspace(b, p) for b in power.blocks]
        i_bases = [linalg.column_space_basis(b, p) for b in power.blocks]
        dim_k = sum(b.shape[1] for b in k_bases)
        dim_i = sum(b.shape[1] for b in i_bases)
        if dim_k == 0 or dim_i == 0:
            continue
        try:
            return _split_by_subspaces(m, k_bases, i_bases)
        except DecompositionError:
            continue
    return None


def decompose(m: Representation, seed: int = 0) -> list[tuple[Representation, int]]:
    """Non-isomorphic indecomposable summands with multiplicities."""
    pieces = [t[0] for t in summand_split(m, seed)]
    groups: list[tuple[Representation, int]] = []
    for piece in pieces:
        for i, (rep, mult) in enumerate(groups):
            if indecomposable_isomorphic(rep, piece, seed=seed):
                groups[i] = (rep, mult + 1)
                break
        else:
            groups.append((piece, 1))
    groups.sort(key=lambda t: (t[0].dims, fingerprint(t[0])))
    return groups


# -- isomorphism testing -----------------------------------------------------


def _random_invertible_combo(maps: list[ModuleMap], rng: random.Random, p: int, tries: int):
    for _ in range(tries):
        combo = None
        for f in maps:
            c = rng.randrange(p)
            if c:
                term = f.scale(c)
                combo = term if combo is None else combo.add(term)
        if combo is not None and combo.is_iso():
            return combo
    return None


def indecomposable_isomorphic(a: Representation, b: Representation, seed: int = 0) -> bool:
    """Exact isomorphism test assuming both inputs are indecomposable."""
    if a.dims != b.dims:
        return False
    if a.total_dim == 0:
        return True
    p = a.algebra.p
    ab = hom_basis(a, b)
    ba = hom_basis(b, a)
    if len(ab) != len(ba) or not ab:
        return False
    rng = linalg.stable_rng(seed, 2, a.dims)
    if _random_invertible_combo(ab, rng, p, 24) is not None:
        return True
    # deterministic: a ~ b iff some composite b->a->b ... lands outside rad End(a)
    endos = hom_basis(a, a)
    rad = radical_basis(endos, p)
    flats = [f.flatten() for f in endos]
    basis_flat = np.stack(flats, axis=1) % p
    rad_flat = (
        np.stack([_coords_to_flat(endos, c, p) for c in rad], axis=1) % p
        if rad
        else linalg.zeros(basis_flat.shape[0], 0)
    )
    for f in ab:
        for g in ba:
            comp = g.compose(f)
            inside = (
                linalg.solve(rad_flat, comp.flatten().reshape(-1, 1), p) is not None
                if rad
                else comp.is_zero()
            )
            if not inside:
                return True
    return False


def _coords_to_flat(endos, coords, p):
    out = None
    for i, f in enumerate(endos):
        c = int(coords[i]) % p
        if c:
            term = (c * f.flatten()) % p
            out = term if out is None else (out + term) % p
    return out if out is not None else np.zeros_like(endos[0].flatten())


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> bool:
    if m.algebra is not n.algebra:
        raise ValueError("representations live over different algebras")
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    p = m.algebra.p
    maps = hom_basis(m, n)
    back = hom_basis(n, m)
    if len(maps) != len(back) or not maps:
        return False
    rng = linalg.stable_rng(seed, 3, m.dims)
    if _random_invertible_combo(maps, rng, p, 24) is not None:
        return True
    left = [t[0] for t in summand_split(m, seed)]
    right = [t[0] for t in summand_split(n, seed)]
    if len(left) != len(right):
        return False
    used = [False] * len(right)
    for piece in left:
        for j, other in enumerate(right):
            if not used[j] and indecomposable_isomorphic(piece, other, seed):
                used[j] = True
                break
        else:
            return False
    return True


# -- fingerprints ------------------------------------------------------------


def _probes(algebra) -> list[Representation]:
    cache = getattr(algebra, "_probe_cache", None)
    if cache is None:
        from .algebra import projective_module, simple_module

        cache = [simple_module(algebra, v) for v in algebra.quiver.vertex_ids]
        cache += [projective_module(algebra, v) for v in algebra.quiver.vertex_ids]
        algebra._probe_cache = cache
    return cache


def fingerprint(m: Representation) -> tuple:
    """Isomorphism-invariant index key: dimension vector, Hom profile against
    the simples and projectives, arrow matrix ranks.  Collisions are resolved
    by is_isomorphic; the fingerprint is never the final arbiter."""
    cached = getattr(m, "_fp", None)
    if cached is not None:
        return cached
    p = m.algebra.p
    profile = []
    for probe in _probes(m.algebra):
        profile.append(len(hom_basis(probe, m)))
        profile.append(len(hom_basis(m, probe)))
    ranks = tuple(linalg.rank(a, p) for a in m.matrices)
    fp = (m.dims, tuple(profile), ranks)
    m._fp = fp
    return fp
