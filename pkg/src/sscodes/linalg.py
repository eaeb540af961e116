"""Vectors, matrices and subspaces over GF(q).

A vector of F_q^k is a length-k integer array of field elements.  Vectors are
also identified with integers ``sum(v[i] * q**(k-1-i))``, so the first
coordinate is most significant and integer order is lexicographic order on
coordinate tuples.  Every canonical ordering in the package uses this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .gf import FieldSpec

MATERIALIZE_LIMIT = 1 << 16


def as_matrix(rows, k: int | None = None) -> np.ndarray:
    M = np.array(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(-1, k if k is not None else len(M)) if M.size else np.zeros((0, k or 0), np.int64)
    return M


def vec_to_int(F: FieldSpec, v) -> int:
    r = 0
    for c in v:
        r = r * F.q + int(c)
    return r


def int_to_vec(F: FieldSpec, x: int, k: int) -> np.ndarray:
    out = np.zeros(k, dtype=np.int64)
    for i in range(k - 1, -1, -1):
        x, out[i] = divmod(x, F.q)
    return out


def ints_to_vecs(F: FieldSpec, xs, k: int) -> np.ndarray:
    """Rows of the returned array are the vectors encoded by ``xs``."""
    xs = np.asarray(xs, dtype=np.int64)
    powers = F.q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (xs[:, None] // powers[None, :]) % F.q


def vecs_to_ints(F: FieldSpec, V: np.ndarray) -> np.ndarray:
    V = np.asarray(V, dtype=np.int64)
    powers = F.q ** np.arange(V.shape[1] - 1, -1, -1, dtype=np.int64)
    return V @ powers


def all_vectors(F: FieldSpec, k: int) -> np.ndarray:
    """Every vector of F_q^k in lexicographic order, shape (q^k, k)."""
    return ints_to_vecs(F, np.arange(F.q ** k), k)


def dot(F: FieldSpec, x, v) -> int:
    x = np.asarray(x)
    v = np.asarray(v)
    if x.shape != v.shape:
        raise ValueError(f"length mismatch: {len(x)} vs {len(v)}")
    acc = 0
    for prod in F.mul[x, v]:
        acc = F.add[acc, prod]
    return int(acc)


def matvec_columns(F: FieldSpec, x, M: np.ndarray) -> np.ndarray:
    """Row vector times matrix: entry j is dot(x, M[:, j])."""
    out = np.zeros(M.shape[1], dtype=np.int64)
    for xi, row in zip(x, M):
        if xi:
            out = F.add[out, F.mul[xi, row]]
    return out


def matmul(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.stack([matvec_columns(F, row, B) for row in A]) if len(A) else np.zeros((0, B.shape[1]), np.int64)


def rref(F: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = F.mul[F.inv[A[r, c]], A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = F.sub[A[i], F.mul[A[i, c], A[r]]]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: FieldSpec, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def in_span(F: FieldSpec, basis: np.ndarray, v) -> bool:
    if len(basis) == 0:
        return not np.any(v)
    return rank(F, np.vstack([basis, v])) == rank(F, basis)


@dataclass(frozen=True, eq=False)
class Subspace:
    """Linear subspace of F_q^k given by a basis (rows of ``basis``)."""

    field: FieldSpec
    ambient_dim: int
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        B = as_matrix(self.basis, self.ambient_dim)
        if B.shape[1] != self.ambient_dim:
            raise ValueError("basis vectors must have length ambient_dim")
        if np.any((B < 0) | (B >= self.field.q)):
            raise ValueError("basis entries must be field elements")
        if rank(self.field, B) != len(B):
            raise ValueError("basis vectors are linearly dependent")
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self):
        rows = ", ".join("".join(str(c) for c in r) for r in self.basis)
        return f"Subspace(dim={self.dim}, basis=[{rows}])"

    def point_ints(self) -> np.ndarray:
        """Integer encodings of all q^dim points, sorted."""
        return np.sort(vecs_to_ints(self.field, subspace_points(self)))

    def contains(self, v) -> bool:
        return in_span(self.field, self.basis, v)


def subspace_points(S: Subspace) -> np.ndarray:
    """All q^dim linear combinations of the basis (zero included), shape (q^dim, k)."""
    F = S.field
    if F.q ** S.dim > MATERIALIZE_LIMIT * 64:
        raise MemoryError(f"refusing to materialise {F.q}^{S.dim} points; use membership_mask")
    pts = np.zeros((1, S.ambient_dim), dtype=np.int64)
    for b in S.basis:
        scaled = F.mul[np.arange(F.q)[:, None], b[None, :]]  # (q, k)
        pts = F.add[pts[:, None, :], scaled[None, :, :]].reshape(-1, S.ambient_dim)
    return pts


def nullspace(F: FieldSpec, M) -> np.ndarray:
    """Basis (rows) of {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    if len(M) == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for row, f in enumerate(free):
        out[row, f] = 1
        for i, pc in enumerate(pivots):
            out[row, pc] = F.neg[R[i, f]]
    return out


def membership_mask(S: Subspace, V: np.ndarray) -> np.ndarray:
    """Boolean mask over the rows of V: which vectors lie in S.

    Tests against a basis of the annihilator of S instead of listing the points
    of S, so the cost does not depend on q^dim.
    """
    F = S.field
    H = nullspace(F, S.basis)
    inside = np.ones(len(V), dtype=bool)
    for h in H:
        inside &= matvec_columns(F, h, np.asarray(V).T) == 0
    return inside


def pairwise_trivial(subspaces) -> bool:
    """True iff every pair of subspaces meets only in the zero vector."""
    subspaces = list(subspaces)
    for A, B in itertools.combinations(subspaces, 2):
        if A.ambient_dim != B.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")
        if A.dim == 0 or B.dim == 0:
            continue
        if rank(A.field, np.vstack([A.basis, B.basis])) != A.dim + B.dim:
            return False
    return True


def normalize(F: FieldSpec, v) -> np.ndarray:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    v = np.asarray(v, dtype=np.int64)
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        raise ValueError("the zero vector has no projective representative")
    return F.mul[F.inv[v[nz[0]]], v]


def projective_rep_ints(F: FieldSpec, k: int) -> np.ndarray:
    """Integer encodings of the canonical projective representatives, ascending."""
    vecs = all_vectors(F, k)[1:]
    first = np.argmax(vecs != 0, axis=1)
    lead = vecs[np.arange(len(vecs)), first]
    return np.arange(1, F.q ** k)[lead == 1]


def projective_reps(F: FieldSpec, k: int) -> np.ndarray:
    """One vector per scalar orbit of nonzero vectors, shape ((q^k-1)/(q-1), k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return ints_to_vecs(F, projective_rep_ints(F, k), k)


def coordinate_subspace(F: FieldSpec, k: int, coords) -> Subspace:
    B = np.zeros((len(coords), k), dtype=np.int64)
    for row, c in enumerate(coords):
        B[row, c] = 1
    return Subspace(F, k, B)


def line(F: FieldSpec, v) -> Subspace:
    v = np.asarray(v, dtype=np.int64)
    return Subspace(F, len(v), v.reshape(1, -1))
