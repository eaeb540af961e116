"""Exact weight distributions by two independent engines.

``weight_distribution_enum`` forms every codeword ``xG`` and counts its
nonzero entries.  ``weight_distribution_hyperplane`` never forms a codeword:
it histograms the columns of G as points of F_q^k, then a coordinate-by-
coordinate transform counts, for every functional x, how many columns lie on
the hyperplane ``x . s = 0``.  The weight of ``xG`` is n minus that count.

Both return weights indexed by the message integer (see :mod:`sscodes.linalg`
for the encoding), so the engines can be compared entry by entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .linalg import int_to_vec, matvec_columns, vecs_to_ints

ENUM_GUARD = 1 << 22
_CHUNK = 1 << 22


class EnumerationGuardError(ValueError):
    pass


def _check_guard(code, guard):
    total = code.q ** code.k
    if total > guard:
        raise EnumerationGuardError(f"q^k = {total} exceeds the enumeration guard {guard}")


@dataclass(frozen=True)
class WeightDistribution:
    q: int
    n: int
    k: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", {int(w): int(c) for w, c in sorted(self.counts.items()) if c})

    @classmethod
    def from_weights(cls, q, n, k, weights: np.ndarray) -> "WeightDistribution":
        w, c = np.unique(weights, return_counts=True)
        return cls(q, n, k, dict(zip(w.tolist(), c.tolist())))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_distance(self) -> int:
        nonzero = [w for w in self.counts if w > 0]
        return min(nonzero) if nonzero else 0

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.counts if w > 0]

    def check(self):
        """Raise AssertionError unless the basic invariants hold."""
        assert self.counts.get(0) == 1, "A_0 must be 1"
        assert self.total == self.q ** self.k, f"counts sum to {self.total}, not q^k"
        assert all(0 <= w <= self.n for w in self.counts)
        bad = [w for w, c in self.counts.items() if w and c % (self.q - 1)]
        assert not bad, f"counts not divisible by q-1 at weights {bad}"

    def to_json(self) -> str:
        body = {"q": self.q, "n": self.n, "k": self.k, "weights": {str(w): c for w, c in self.counts.items()}}
        return json.dumps(body, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "WeightDistribution":
        obj = json.loads(text)
        return cls(obj["q"], obj["n"], obj["k"], {int(w): c for w, c in obj["weights"].items()})

    def diff(self, other: "WeightDistribution") -> dict[int, tuple[int, int]]:
        keys = sorted(set(self.counts) | set(other.counts))
        return {
            w: (self.counts.get(w, 0), other.counts.get(w, 0))
            for w in keys
            if self.counts.get(w, 0) != other.counts.get(w, 0)
        }


def codeword_weights_enum(code, guard: int = ENUM_GUARD) -> np.ndarray:
    """Weight of ``xG`` for every message x, by explicit codeword arithmetic."""
    _check_guard(code, guard)
    F, G = code.field, code.G
    q, k, n = code.q, code.k, code.n
    add = F.add
    # scaled[i, a] = a * G[i]
    scaled = F.mul[np.arange(q)[None, :, None], G[:, None, :]]
    low = 0
    while low < k and q ** (low + 1) * max(n, 1) <= _CHUNK:
        low += 1
    low = max(low, 1)
    inner = np.zeros((1, n), dtype=np.int64)
    for i in range(k - low, k):
        inner = add[inner[:, None, :], scaled[i][None, :, :]].reshape(-1, n)
    high = k - low
    out = np.empty(q ** k, dtype=np.int64)
    block = q ** low
    for t in range(q ** high):
        msg = int_to_vec(F, t, high) if high else ()
        outer = np.zeros(n, dtype=np.int64)
        for i, a in enumerate(msg):
            if a:
                outer = add[outer, scaled[i, a]]
        words = add[inner, outer[None, :]] if high else inner
        out[t * block:(t + 1) * block] = np.count_nonzero(words, axis=1)
    return out


def hyperplane_counts(code, guard: int = ENUM_GUARD) -> np.ndarray:
    """For every functional x, the number of columns s of G with ``x . s = 0``."""
    _check_guard(code, guard)
    F = code.field
    q, k = code.q, code.k
    hist = np.bincount(vecs_to_ints(F, code.G.T), minlength=q ** k).astype(np.int64)
    # T[(processed x digits), (remaining s digits), c]: columns with partial dot = c
    T = np.zeros((q ** k, q), dtype=np.int64)
    T[:, 0] = hist
    for j in range(k):
        A, B = q ** j, q ** (k - j - 1)
        old = T.reshape(A, q, B, q)
        new = np.zeros((A, q, B, q), dtype=np.int64)
        for b in range(q):
            # new[:, a, :, c] += old[:, b, :, c - a*b]
            src = F.sub[np.arange(q)[None, :], F.mul[:, b][:, None]]  # (a, c)
            new += np.moveaxis(old[:, b, :, :][:, :, src], 2, 1)
        T = new.reshape(q ** k, q)
    return T[:, 0]


def codeword_weights_hyperplane(code, guard: int = ENUM_GUARD) -> np.ndarray:
    w = code.n - hyperplane_counts(code, guard)
    w[0] = 0
    return w


def weight_distribution_enum(code, guard: int = ENUM_GUARD) -> WeightDistribution:
    return WeightDistribution.from_weights(code.q, code.n, code.k, codeword_weights_enum(code, guard))


def weight_distribution_hyperplane(code, guard: int = ENUM_GUARD) -> WeightDistribution:
    return WeightDistribution.from_weights(code.q, code.n, code.k, codeword_weights_hyperplane(code, guard))


def weight_distribution(code, method: str = "hyperplane", guard: int = ENUM_GUARD) -> WeightDistribution:
    if method == "enum":
        return weight_distribution_enum(code, guard)
    if method == "hyperplane":
        return weight_distribution_hyperplane(code, guard)
    raise ValueError(f"unknown method {method!r}")


def min_distance(code, method: str = "hyperplane", guard: int = ENUM_GUARD) -> int:
    return weight_distribution(code, method, guard).min_distance


@dataclass(frozen=True)
class MinWeightWitness:
    weight: int
    message: tuple[int, ...]
    codeword: tuple[int, ...]
    support: tuple[int, ...]


def min_weight_support(code, guard: int = ENUM_GUARD) -> MinWeightWitness:
    """Lexicographically first message of minimum nonzero weight, with its codeword."""
    weights = codeword_weights_enum(code, guard)
    weights[0] = code.n + 1
    t = int(np.argmin(weights))
    msg = int_to_vec(code.field, t, code.k)
    word = matvec_columns(code.field, msg, code.G)
    support = tuple(int(i) for i in np.nonzero(word)[0])
    return MinWeightWitness(int(weights[t]), tuple(msg.tolist()), tuple(word.tolist()), support)
