"""Generator matrices for affine and modified affine Solomon-Stiffler codes.

The affine code for ``(k, u)`` keeps every nonzero vector of F_q^k outside the
chosen subspaces S_1, ..., S_h as a column.  The modified code keeps, for each
surviving projective point v, only the multiples ``lam * v`` with ``lam`` in
the order-e subgroup of F_q^*.  ``e = q - 1`` gives the affine code again and
``e = 1`` gives projective Solomon-Stiffler codes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .gf import FieldSpec, mult_subgroup
from .linalg import (
    Subspace,
    coordinate_subspace,
    ints_to_vecs,
    line,
    matmul,
    nullspace,
    normalize,
    pairwise_trivial,
    projective_rep_ints,
    vecs_to_ints,
    rank,
    vec_to_int,
)

CONSTRUCTION_GUARD = 1 << 22


class ConstructionError(ValueError):
    pass


class RankError(ConstructionError):
    pass


@dataclass(frozen=True)
class ShapeRecord:
    """Multiplicities of the distinct values in u, in ascending order of value."""

    values: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.s)

    @property
    def g(self) -> int:
        return sum(si - 1 for si in self.s)


def shape_record(u: Sequence[int]) -> ShapeRecord:
    c = Counter(u)
    values = tuple(sorted(c))
    return ShapeRecord(values, tuple(c[v] for v in values))


@dataclass(frozen=True, eq=False)
class SSParams:
    """Parameters ``(k, u)`` of a (modified) affine Solomon-Stiffler code.

    ``e`` defaults to q - 1 (the plain affine code).  ``bases``, when given,
    must list one subspace per entry of u; they are sorted by dimension.
    """

    field: FieldSpec
    k: int
    u: tuple[int, ...] = ()
    e: int | None = None
    bases: tuple[Subspace, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        q = self.field.q
        object.__setattr__(self, "u", tuple(sorted(int(x) for x in self.u)))
        if self.e is None:
            object.__setattr__(self, "e", q - 1)
        if self.k < 2:
            raise ConstructionError(f"k must be >= 2, got {self.k}")
        if any(x < 1 or x >= self.k for x in self.u):
            raise ConstructionError(f"every u_i must satisfy 1 <= u_i < k={self.k}, got {self.u}")
        if self.e < 1 or (q - 1) % self.e:
            raise ConstructionError(f"e={self.e} does not divide q-1={q - 1}")
        deleted = sum(q ** x - 1 for x in self.u)
        if deleted >= q ** self.k - q ** (self.k - 1):
            raise ConstructionError(
                f"condition 2: sum(q^u_i - 1) = {deleted} >= q^k - q^(k-1) = {q ** self.k - q ** (self.k - 1)}"
            )
        if self.bases is not None:
            bases = tuple(sorted(self.bases, key=lambda S: S.dim))
            if tuple(S.dim for S in bases) != self.u:
                raise ConstructionError(f"basis dimensions {[S.dim for S in bases]} do not match u={self.u}")
            if any(S.ambient_dim != self.k or S.field != self.field for S in bases):
                raise ConstructionError("bases must live in F_q^k over the same field")
            if not pairwise_trivial(bases):
                raise ConstructionError("condition 1: the given subspaces do not intersect pairwise trivially")
            object.__setattr__(self, "bases", bases)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def h(self) -> int:
        return len(self.u)

    @property
    def shape(self) -> ShapeRecord:
        return shape_record(self.u)

    def affine_length(self) -> int:
        q = self.q
        return q ** self.k - 1 - sum(q ** x - 1 for x in self.u)

    def length(self) -> int:
        return self.e * self.affine_length() // (self.q - 1)

    def distance_lower_bound(self) -> int:
        q = self.q
        return self.e * (q ** (self.k - 1) - sum(q ** (x - 1) for x in self.u))

    def describe(self) -> str:
        u = ",".join(map(str, self.u))
        return f"q={self.q},k={self.k},u=({u}),e={self.e}"


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear [n, k]_q code given by a full-rank k x n generator matrix."""

    field: FieldSpec
    G: np.ndarray = field(repr=False)
    provenance: tuple[str, ...] = ()
    params: SSParams | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        G = np.array(self.G, dtype=np.int64)
        if G.ndim != 2:
            raise ValueError("generator matrix must be 2-d")
        if np.any((G < 0) | (G >= self.field.q)):
            raise ValueError("generator matrix entries must be field elements")
        r = rank(self.field, G)
        if r != G.shape[0]:
            raise RankError(f"generator matrix has rank {r} < {G.shape[0]} rows")
        G.setflags(write=False)
        object.__setattr__(self, "G", G)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def n(self) -> int:
        return self.G.shape[1]

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def derive(self, G, step: str, params=None) -> "LinearCode":
        return LinearCode(self.field, G, self.provenance + (step,), params)


def select_subspaces(params: SSParams) -> list[Subspace]:
    """Deterministic subspaces for ``params.u`` satisfying both conditions.

    Largest dimensions first take disjoint coordinate blocks.  Once the
    coordinates run out, the remaining entries must all be 1; each becomes the
    first canonical projective point not already inside a chosen subspace.
    """
    F, k = params.field, params.k
    chosen: list[Subspace] = []
    next_coord = 0
    covered = reps = None
    for d in sorted(params.u, reverse=True):
        if next_coord + d <= k:
            chosen.append(coordinate_subspace(F, k, range(next_coord, next_coord + d)))
            next_coord += d
            continue
        if d > 1:
            raise ConstructionError(
                f"cannot place a {d}-dimensional subspace: coordinates exhausted; supply explicit bases"
            )
        if covered is None:
            covered = deleted_mask(params, chosen)
            reps = iter(projective_rep_ints(F, k))
        x = next((int(r) for r in reps if not covered[r]), None)
        if x is None:
            raise ConstructionError("no projective point left outside the chosen subspaces")
        v = ints_to_vecs(F, [x], k)[0]
        covered[vecs_to_ints(F, F.mul[np.arange(1, F.q)[:, None], v[None, :]])] = True
        chosen.append(line(F, v))
    chosen.sort(key=lambda S: S.dim)
    if not pairwise_trivial(chosen):  # pragma: no cover - guaranteed by the strategy
        raise ConstructionError("selected subspaces are not pairwise trivial")
    return chosen


def _subspaces(params: SSParams) -> tuple[Subspace, ...]:
    return params.bases if params.bases is not None else tuple(select_subspaces(params))


def _functional_values(F: FieldSpec, h: np.ndarray, ints: np.ndarray, k: int) -> np.ndarray:
    acc = np.zeros(len(ints), dtype=np.int64)
    for i, hi in enumerate(h):
        if hi:
            digit = (ints // F.q ** (k - 1 - i)) % F.q
            acc = F.add[acc, F.mul[hi, digit]]
    return acc


def deleted_mask(params: SSParams, subspaces=None) -> np.ndarray:
    """Mask over the integers 0..q^k-1: True where the vector lies in some S_i."""
    F, k = params.field, params.k
    if F.q ** k > CONSTRUCTION_GUARD:
        raise ConstructionError(f"q^k = {F.q ** k} exceeds the construction guard {CONSTRUCTION_GUARD}")
    subspaces = _subspaces(params) if subspaces is None else subspaces
    ints = np.arange(F.q ** k, dtype=np.int64)
    mask = np.zeros(len(ints), dtype=bool)
    for S in subspaces:
        inside = np.ones(len(ints), dtype=bool)
        for h in nullspace(F, S.basis):
            inside &= _functional_values(F, h, ints, k) == 0
        mask |= inside
    return mask


def affine_ss(params: SSParams) -> LinearCode:
    """Columns: nonzero vectors outside S_1 u ... u S_h, in lexicographic order."""
    if params.e != params.q - 1:
        raise ConstructionError("affine_ss needs e = q - 1; use modified_affine_ss")
    F, k = params.field, params.k
    subspaces = _subspaces(params)
    mask = deleted_mask(params, subspaces)
    mask[0] = True
    cols = np.nonzero(~mask)[0]
    G = ints_to_vecs(F, cols, k).T
    assert G.shape[1] == params.affine_length()
    return LinearCode(F, G, (f"affine_ss({params.describe()})",), _with_bases(params, subspaces))


def modified_affine_ss(params: SSParams) -> LinearCode:
    """Columns ``lam * v`` for each surviving canonical point v and each lam of order dividing e."""
    F, k = params.field, params.k
    subspaces = _subspaces(params)
    mask = deleted_mask(params, subspaces)
    reps = projective_rep_ints(F, k)
    reps = reps[~mask[reps]]
    R = ints_to_vecs(F, reps, k)  # (r, k)
    group = np.array(mult_subgroup(F, params.e))
    cols = F.mul[group[None, :, None], R[:, None, :]].reshape(-1, k)  # rep-major
    G = cols.T
    assert G.shape[1] == params.length()
    return LinearCode(F, G, (f"modified_affine_ss({params.describe()})",), _with_bases(params, subspaces))


def _with_bases(params: SSParams, subspaces) -> SSParams:
    if params.bases is not None:
        return params
    return SSParams(params.field, params.k, params.u, params.e, tuple(subspaces))


def simplex_code(F: FieldSpec, k: int) -> LinearCode:
    return affine_ss(SSParams(F, k))


def repetition_copy(C: LinearCode, copies: int) -> LinearCode:
    if copies < 1:
        raise ValueError("copies must be >= 1")
    return C.derive(np.tile(C.G, (1, copies)), f"repeat({copies})", C.params if copies == 1 else None)


def gaussian_binomial(n: int, r: int, q: int) -> int:
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rref_subspace_bases(F: FieldSpec, n: int, r: int) -> Iterator[np.ndarray]:
    """Every r-dimensional subspace of F_q^n, once each, as its RREF basis."""
    q = F.q
    for pivots in itertools.combinations(range(n), r):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            B = np.zeros((r, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                B[i, p] = 1
            for (i, j), v in zip(free, values):
                B[i, j] = v
            yield B


def subcodes(C: LinearCode, codim: int) -> Iterator[LinearCode]:
    """Every (k - codim)-dimensional subcode, one generator matrix each."""
    if codim not in (1, 2):
        raise ValueError("codim must be 1 or 2")
    if C.k - codim < 1:
        raise ValueError(f"cannot take a codimension-{codim} subcode of a {C.k}-dimensional code")
    for idx, B in enumerate(rref_subspace_bases(C.field, C.k, C.k - codim)):
        yield C.derive(matmul(C.field, B, C.G), f"subcode(codim={codim},index={idx})")


def puncture(C: LinearCode, position: int | None = None) -> LinearCode:
    """Delete one coordinate.

    With ``position=None`` the smallest index in the support of the
    lexicographically first minimum-weight codeword is used.
    """
    if position is None:
        from .weights import min_weight_support

        position = min(min_weight_support(C).support)
    if not 0 <= position < C.n:
        raise IndexError(f"position {position} outside 0..{C.n - 1}")
    G = np.delete(C.G, position, axis=1)
    try:
        return C.derive(G, f"puncture({position})")
    except RankError as exc:
        raise RankError(f"puncturing position {position} drops the dimension: {exc}") from None


def lines_code(F: FieldSpec, k: int, lines: Sequence, e: int | None = None) -> LinearCode:
    """Affine (or, with e, modified) code deleting h projective lines.

    Either h >= k lines spanning F_q^k, or h < k independent lines.
    """
    L = np.array([normalize(F, v) for v in lines], dtype=np.int64).reshape(-1, k)
    h = len(L)
    if not 1 <= h < F.q ** (k - 1):
        raise ConstructionError(f"need 1 <= h < q^(k-1), got h={h}")
    if len({vec_to_int(F, v) for v in L}) != h:
        raise ConstructionError("lines must be distinct projective points")
    # h >= k: the lines must span; h < k: they must be independent
    if rank(F, L) != min(h, k):
        raise ConstructionError("lines do not span F_q^k" if h >= k else "fewer than k lines must be linearly independent")
    params = SSParams(F, k, (1,) * h, e, tuple(line(F, v) for v in L))
    return affine_ss(params) if params.e == F.q - 1 else modified_affine_ss(params)
