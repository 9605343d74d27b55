"""Representations of bound quiver algebras and their morphisms.

A representation assigns to each vertex an F_p-space (recorded by dimension)
and to each arrow s -> t a (dims[t] x dims[s]) matrix; relation matrices must
vanish.  Morphisms are vertex-indexed blocks satisfying the intertwining
equations.  Everything is immutable by convention: no routine mutates a
Representation or ModuleMap after construction.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import BoundQuiverAlgebra, Path


class Representation:
    def __init__(self, algebra: BoundQuiverAlgebra, dims, matrices, validate: bool = True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        q = algebra.quiver
        if len(self.dims) != q.n_vertices:
            raise ValueError("dimension vector length mismatch")
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension")
        self.matrices = []
        for a in range(q.n_arrows):
            m = linalg.normalize(matrices[a], algebra.p)
            want = (self.dims[q.arrow_target[a]], self.dims[q.arrow_source[a]])
            if m.shape != want:
                raise ValueError(f"arrow {q.arrow_names[a]}: matrix shape {m.shape}, expected {want}")
            self.matrices.append(m)
        if validate:
            self._check_relations()

    def _check_relations(self):
        for rel in self.algebra.relations:
            acc = None
            for path, coeff in rel.items():
                m = (coeff * self.path_matrix(path)) % self.algebra.p
                acc = m if acc is None else (acc + m) % self.algebra.p
            if acc is not None and np.any(acc):
                raise ValueError("relation matrix does not vanish on this representation")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, path: Path) -> np.ndarray:
        """Matrix of the path acting from its source space to its target space."""
        alg = self.algebra
        v = path[0]
        m = linalg.eye(self.dims[v])
        for a in path[1]:
            m = linalg.matmul(self.matrices[a], m, alg.p)
        return m

    def __repr__(self):
        return f"Rep{self.dims}"


def zero_representation(algebra: BoundQuiverAlgebra) -> Representation:
    q = algebra.quiver
    dims = (0,) * q.n_vertices
    mats = [linalg.zeros(0, 0) for _ in range(q.n_arrows)]
    return Representation(algebra, dims, mats, validate=False)


class ModuleMap:
    def __init__(self, source: Representation, target: Representation, blocks, validate: bool = True):
        if source.algebra is not target.algebra:
            raise ValueError("source and target live over different algebras")
        self.source = source
        self.target = target
        self.p = source.algebra.p
        self.blocks = []
        for v in range(source.algebra.quiver.n_vertices):
            b = linalg.normalize(blocks[v], self.p)
            want = (target.dims[v], source.dims[v])
            if b.shape != want:
                raise ValueError(f"vertex {v}: block shape {b.shape}, expected {want}")
            self.blocks.append(b)
        if validate:
            self._check_intertwining()

    def _check_intertwining(self):
        q = self.source.algebra.quiver
        for a in range(q.n_arrows):
            s, t = q.arrow_source[a], q.arrow_target[a]
            lhs = linalg.matmul(self.blocks[t], self.source.matrices[a], self.p)
            rhs = linalg.matmul(self.target.matrices[a], self.blocks[s], self.p)
            if not np.array_equal(lhs, rhs):
                raise ValueError(f"blocks do not intertwine arrow {q.arrow_names[a]}")

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self after first."""
        if first.target is not self.source and first.target.dims != self.source.dims:
            raise ValueError("maps not composable")
        blocks = [linalg.matmul(self.blocks[v], first.blocks[v], self.p) for v in range(len(self.blocks))]
        return ModuleMap(first.source, self.target, blocks, validate=False)

    def add(self, other: "ModuleMap") -> "ModuleMap":
        blocks = [(a + b) % self.p for a, b in zip(self.blocks, other.blocks)]
        return ModuleMap(self.source, self.target, blocks, validate=False)

    def scale(self, c: int) -> "ModuleMap":
        blocks = [(c * b) % self.p for b in self.blocks]
        return ModuleMap(self.source, self.target, blocks, validate=False)

    def negate(self) -> "ModuleMap":
        return self.scale(self.p - 1)

    def is_zero(self) -> bool:
        return all(not np.any(b) for b in self.blocks)

    def is_epi(self) -> bool:
        return all(linalg.rank(b, self.p) == self.target.dims[v] for v, b in enumerate(self.blocks))

    def is_mono(self) -> bool:
        return all(linalg.rank(b, self.p) == self.source.dims[v] for v, b in enumerate(self.blocks))

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and all(
            linalg.is_invertible(b, self.p) for b in self.blocks
        )

    def inverse(self) -> "ModuleMap":
        blocks = [linalg.inverse(b, self.p) for b in self.blocks]
        if any(b is None for b in blocks):
            raise ValueError("map is not invertible")
        return ModuleMap(self.target, self.source, blocks, validate=False)

    def flatten(self) -> np.ndarray:
        """Row-major concatenation of all blocks; coordinates for hom spaces."""
        parts = [b.reshape(-1) for b in self.blocks]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def __repr__(self):
        return f"ModuleMap({self.source!r} -> {self.target!r})"


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(m, m, [linalg.eye(d) for d in m.dims], validate=False)


def zero_map(source: Representation, target: Representation) -> ModuleMap:
    blocks = [linalg.zeros(target.dims[v], source.dims[v]) for v in range(len(source.dims))]
    return ModuleMap(source, target, blocks, validate=False)


def map_from_flat(source: Representation, target: Representation, flat: np.ndarray) -> ModuleMap:
    blocks = []
    pos = 0
    for v in range(len(source.dims)):
        rows, cols = target.dims[v], source.dims[v]
        blocks.append(flat[pos : pos + rows * cols].reshape(rows, cols))
        pos += rows * cols
    return ModuleMap(source, target, blocks, validate=False)


def hom_basis(m: Representation, n: Representation) -> list[ModuleMap]:
    """Deterministic basis of Hom(m, n): nullspace of the intertwining system."""
    if m.algebra is not n.algebra:
        raise ValueError("representations live over different algebras")
    p = m.algebra.p
    q = m.algebra.quiver
    var_dims = [n.dims[v] * m.dims[v] for v in range(q.n_vertices)]
    offsets = np.cumsum([0] + var_dims)
    total = int(offsets[-1])
    if total == 0:
        return []
    rows = []
    for a in range(q.n_arrows):
        s, t = q.arrow_source[a], q.arrow_target[a]
        n_eq = n.dims[t] * m.dims[s]
        if n_eq == 0:
            continue
        block = linalg.zeros(n_eq, total)
        # vec(f_t @ M_a) = (I_{n_t} kron M_a^T) vec(f_t)   (row-major vec)
        if var_dims[t]:
            k1 = np.kron(linalg.eye(n.dims[t]), m.matrices[a].T)
            block[:, offsets[t] : offsets[t + 1]] = k1
        # vec(N_a @ f_s) = (N_a kron I_{m_s}) vec(f_s)
        if var_dims[s]:
            k2 = np.kron(n.matrices[a], linalg.eye(m.dims[s]))
            block[:, offsets[s] : offsets[s + 1]] = (block[:, offsets[s] : offsets[s + 1]] - k2) % p
        rows.append(block % p)
    system = np.concatenate(rows, axis=0) if rows else linalg.zeros(0, total)
    basis = linalg.nullspace(system, p)
    return [map_from_flat(m, n, basis[:, k]) for k in range(basis.shape[1])]


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


def _subspace_with_induced_action(rep: Representation, bases: list[np.ndarray]):
    """Subrepresentation on given vertex-wise column bases; returns (sub, inclusion)."""
    p = rep.algebra.p
    q = rep.algebra.quiver
    dims = tuple(b.shape[1] for b in bases)
    mats = []
    for a in range(q.n_arrows):
        s, t = q.arrow_source[a], q.arrow_target[a]
        img = linalg.matmul(rep.matrices[a], bases[s], p)
        sol = linalg.solve(bases[t], img, p)
        if sol is None:
            raise ValueError("vertex subspaces are not arrow-invariant")
        mats.append(sol)
    sub = Representation(rep.algebra, dims, mats, validate=False)
    incl = ModuleMap(sub, rep, bases, validate=False)
    return sub, incl


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Vertex-wise kernel with induced arrow action; returns (ker, inclusion)."""
    p = f.p
    bases = [linalg.nullspace(b, p) for b in f.blocks]
    return _subspace_with_induced_action(f.source, bases)


def image(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Image as a subrepresentation of the target; returns (im, inclusion)."""
    p = f.p
    bases = [linalg.column_space_basis(b, p) for b in f.blocks]
    return _subspace_with_induced_action(f.target, bases)


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Quotient of the target by the image; returns (coker, projection)."""
    p = f.p
    rep = f.target
    q = rep.algebra.quiver
    projections = []
    dims = []
    for v in range(q.n_vertices):
        quot = linalg.QuotientSpace(rep.dims[v], f.blocks[v], p)
        dims.append(quot.dim)
        proj = linalg.zeros(quot.dim, rep.dims[v])
        for col in range(rep.dims[v]):
            e = linalg.zeros(rep.dims[v], 1).reshape(-1)
            e[col] = 1
            proj[:, col] = quot.to_coords(e)
        projections.append(proj)
    mats = []
    for a in range(q.n_arrows):
        s, t = q.arrow_source[a], q.arrow_target[a]
        # Q_a @ proj_s = proj_t @ N_a ; solve on a section of proj_s
        rhs = linalg.matmul(projections[t], rep.matrices[a], p)
        sol = linalg.solve(projections[s].T, rhs.T, p)
        if sol is None:
            raise ValueError("cokernel action is not well defined")
        mats.append(sol.T % p)
    coker = Representation(rep.algebra, tuple(dims), mats, validate=False)
    proj_map = ModuleMap(rep, coker, projections, validate=False)
    return coker, proj_map


def direct_sum(reps: list[Representation]):
    """Direct sum with inclusion and projection maps per summand."""
    if not reps:
        raise ValueError("empty direct sum; use zero_representation")
    alg = reps[0].algebra
    p = alg.p
    q = alg.quiver
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(q.n_vertices))
    mats = []
    for a in range(q.n_arrows):
        s, t = q.arrow_source[a], q.arrow_target[a]
        m = linalg.zeros(dims[t], dims[s])
        ro = co = 0
        for r in reps:
            m[ro : ro + r.dims[t], co : co + r.dims[s]] = r.matrices[a]
            ro += r.dims[t]
            co += r.dims[s]
        mats.append(m)
    total = Representation(alg, dims, mats, validate=False)
    inclusions = []
    projections = []
    offsets = [0] * q.n_vertices
    for r in reps:
        inc_blocks = []
        prj_blocks = []
        for v in range(q.n_vertices):
            inc = linalg.zeros(dims[v], r.dims[v])
            prj = linalg.zeros(r.dims[v], dims[v])
            for k in range(r.dims[v]):
                inc[offsets[v] + k, k] = 1
                prj[k, offsets[v] + k] = 1
            inc_blocks.append(inc)
            prj_blocks.append(prj)
        inclusions.append(ModuleMap(r, total, inc_blocks, validate=False))
        projections.append(ModuleMap(total, r, prj_blocks, validate=False))
        for v in range(q.n_vertices):
            offsets[v] += r.dims[v]
    return total, inclusions, projections


def dual_representation(rep: Representation) -> Representation:
    """The F_p-dual as a representation of the opposite algebra."""
    op = rep.algebra.opposite()
    mats = []
    for a in range(op.quiver.n_arrows):
        # opposite arrow a runs t -> s where the original runs s -> t
        mats.append(rep.matrices[a].T.copy())
    return Representation(op, rep.dims, mats, validate=False)


def dual_map(f: ModuleMap) -> ModuleMap:
    """Dual of f: A -> B, as D(B) -> D(A) over the opposite algebra."""
    da = dual_representation(f.source)
    db = dual_representation(f.target)
    blocks = [b.T.copy() for b in f.blocks]
    return ModuleMap(db, da, blocks, validate=False)


def radical_subspaces(rep: Representation) -> list[np.ndarray]:
    """Vertex-wise bases of rad(M) = sum of arrow images."""
    p = rep.algebra.p
    q = rep.algebra.quiver
    pieces: list[list[np.ndarray]] = [[] for _ in range(q.n_vertices)]
    for a in range(q.n_arrows):
        t = q.arrow_target[a]
        if rep.matrices[a].size:
            pieces[t].append(rep.matrices[a])
    out = []
    for v in range(q.n_vertices):
        if pieces[v]:
            stacked = np.concatenate(pieces[v], axis=1)
            out.append(linalg.column_space_basis(stacked, p))
        else:
            out.append(linalg.zeros(rep.dims[v], 0))
    return out


def socle_subspaces(rep: Representation) -> list[np.ndarray]:
    """Vertex-wise bases of soc(M) = joint kernel of all outgoing arrows."""
    p = rep.algebra.p
    q = rep.algebra.quiver
    out = []
    for v in range(q.n_vertices):
        rows = [rep.matrices[a] for a in range(q.n_arrows) if q.arrow_source[a] == v]
        if rows:
            stacked = np.concatenate(rows, axis=0)
            out.append(linalg.nullspace(stacked, p))
        else:
            out.append(linalg.eye(rep.dims[v]))
    return out
