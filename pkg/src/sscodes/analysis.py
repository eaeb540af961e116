"""Griesmer bound, defects, optimality labels and best-known-table lookups."""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .construction import shape_record
from .gf import FieldSpec
from .linalg import normalize
from .weights import ENUM_GUARD, EnumerationGuardError, min_distance


def griesmer_sum(q: int, k: int, d: int) -> int:
    """sum_{i<k} ceil(d / q^i), in exact integer arithmetic."""
    if q < 2 or k < 1 or d < 1:
        raise ValueError(f"need q >= 2, k >= 1, d >= 1; got q={q}, k={k}, d={d}")
    return sum(-(-d // q ** i) for i in range(k))


def classify_distance_optimal(q: int, n: int, k: int, d: int) -> bool:
    """True iff no [n, k, d+1]_q code can satisfy the Griesmer bound."""
    return griesmer_sum(q, k, d + 1) > n


def max_griesmer_distance(q: int, n: int, k: int) -> int:
    """Largest d with griesmer_sum(q, k, d) <= n (0 if none)."""
    d = 0
    while griesmer_sum(q, k, d + 1) <= n:
        d += 1
    return d


class TableFormatError(ValueError):
    pass


@dataclass
class BestKnownTable:
    entries: dict[tuple[int, int, int], int]
    source: str = "<memory>"

    def lookup(self, q: int, n: int, k: int) -> int | None:
        return self.entries.get((q, n, k))

    def __len__(self):
        return len(self.entries)


def load_best_known_table(source) -> BestKnownTable:
    """Read a ``q,n,k,d`` CSV of best-known minimum distances.

    ``source`` is a path, an open text file, or an iterable of lines.  Blank
    lines and lines starting with ``#`` are skipped.  All malformed rows are
    reported together, with line numbers.
    """
    name = "<lines>"
    if isinstance(source, (str, os.PathLike)):
        name = str(source)
        with open(source, newline="") as fh:
            lines = fh.read().splitlines()
    elif isinstance(source, io.TextIOBase):
        name = getattr(source, "name", "<stream>")
        lines = source.read().splitlines()
    else:
        lines = list(source)

    numbered = [(i, ln) for i, ln in enumerate(lines, 1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not numbered or [c.strip() for c in numbered[0][1].split(",")] != ["q", "n", "k", "d"]:
        raise TableFormatError(f"{name}: first row must be the header 'q,n,k,d'")
    entries: dict[tuple[int, int, int], int] = {}
    problems = []
    for lineno, row in zip((i for i, _ in numbered[1:]), csv.reader(ln for _, ln in numbered[1:])):
        try:
            if len(row) != 4:
                raise ValueError(f"expected 4 fields, got {len(row)}")
            q, n, k, d = (int(x) for x in row)
            if min(q, n, k, d) < 1:
                raise ValueError("values must be positive")
        except ValueError as exc:
            problems.append(f"line {lineno}: {exc}")
            continue
        entries[(q, n, k)] = d
    if problems:
        raise TableFormatError(f"{name}: " + "; ".join(problems))
    return BestKnownTable(entries, name)


@dataclass(frozen=True)
class OptimalityReport:
    q: int
    n: int
    k: int
    d: int
    griesmer_sum: int
    defect: int
    label: str
    distance_optimal: bool
    table_label: str | None = None
    best_known: int | None = None
    table_source: str | None = None

    def summary(self) -> str:
        s = f"[{self.n},{self.k},{self.d}]_{self.q}: griesmer_sum={self.griesmer_sum} defect={self.defect} {self.label}"
        if self.table_label is not None:
            s += f" {self.table_label} (best known {self.best_known}, {self.table_source})"
        return s


def classify(q: int, n: int, k: int, d: int, table: BestKnownTable | None = None) -> OptimalityReport:
    gs = griesmer_sum(q, k, d)
    defect = n - gs
    optimal = classify_distance_optimal(q, n, k, d)
    if defect == 0:
        label = "griesmer"
    elif optimal:
        label = "griesmer-distance-optimal"
    else:
        label = f"defect-{defect}"
    table_label = best = source = None
    if table is not None:
        source = table.source
        best = table.lookup(q, n, k)
        table_label = "unknown"
        if best is not None and best - d <= 2:
            table_label = ("table-optimal", "table-almost-optimal", "table-near-optimal")[max(best - d, 0)]
    return OptimalityReport(q, n, k, d, gs, defect, label, optimal, table_label, best, source)


def griesmer_defect(code, d: int | None = None, table: BestKnownTable | None = None) -> OptimalityReport:
    """Optimality report for a code; d is measured by enumeration when omitted."""
    if d is None:
        d = min_distance(code)
    return classify(code.q, code.n, code.k, d, table)


def defect_upper_bound_thm2(params) -> int | None:
    """Upper bound on the Griesmer defect of the affine code for ``params``, or None."""
    return shape_defect_bound(params.u, params.field.q)


def shape_defect_bound(u: Sequence[int], q: int) -> int | None:
    """Defect bound read off the shape of u alone; None when no case applies.

    0 if u is strictly increasing; h-1 if all entries are equal and h <= q;
    g = sum(s_i - 1) if there are at least two distinct values and consecutive
    distinct values differ by at least 2.
    """
    u = sorted(u)
    shape = shape_record(u)
    if all(si == 1 for si in shape.s):
        return 0
    if shape.t == 1:
        return len(u) - 1 if len(u) <= q else None
    if all(b - a >= 2 for a, b in zip(shape.values, shape.values[1:])):
        return shape.g
    return None


def defect_upper_bound_lines(q: int, k: int, h: int) -> int:
    """sum_{i<k} floor(h / q^i): defect bound for projective codes deleting h lines."""
    return sum(h // q ** i for i in range(k))


def find_avoiding_functional(F: FieldSpec, k: int, lines: Iterable, guard: int = ENUM_GUARD):
    """First nonzero x (lexicographic) with ``x . l != 0`` for every line generator l, or None."""
    if F.q ** k > guard:
        raise EnumerationGuardError(f"q^k = {F.q ** k} exceeds the enumeration guard {guard}")
    L = np.array([normalize(F, v) for v in lines], dtype=np.int64).reshape(-1, k)
    ints = np.arange(1, F.q ** k, dtype=np.int64)
    ok = np.ones(len(ints), dtype=bool)
    digits = [(ints // F.q ** (k - 1 - i)) % F.q for i in range(k)]
    for ell in L:
        acc = np.zeros(len(ints), dtype=np.int64)
        for i, li in enumerate(ell):
            if li:
                acc = F.add[acc, F.mul[li, digits[i]]]
        ok &= acc != 0
    hits = np.nonzero(ok)[0]
    if hits.size == 0:
        return None
    return np.array([d[hits[0]] for d in digits], dtype=np.int64)
