"""Generator-matrix text format.

Line 1 is ``q k n``; then k lines of n whitespace-separated element indices.
Output uses single spaces and a trailing newline, so equal matrices give
byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .construction import LinearCode
from .gf import field_of_order


class MatrixFormatError(ValueError):
    pass


def format_matrix(code: LinearCode) -> str:
    lines = [f"{code.q} {code.k} {code.n}"]
    lines += [" ".join(str(int(x)) for x in row) for row in code.G]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, provenance: str = "parsed") -> LinearCode:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 3:
        raise MatrixFormatError("header must be 'q k n'")
    try:
        q, k, n = (int(x) for x in rows[0])
        body = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer entry: {exc}") from None
    if len(body) != k:
        raise MatrixFormatError(f"header says k={k} rows, found {len(body)}")
    for i, r in enumerate(body, 2):
        if len(r) != n:
            raise MatrixFormatError(f"line {i}: expected {n} entries, found {len(r)}")
        if any(not 0 <= x < q for x in r):
            raise MatrixFormatError(f"line {i}: entries must lie in [0, {q})")
    G = np.array(body, dtype=np.int64).reshape(k, n)
    return LinearCode(field_of_order(q), G, (provenance,))


def write_matrix(code: LinearCode, path) -> None:
    Path(path).write_text(format_matrix(code))


def read_matrix(path) -> LinearCode:
    return parse_matrix(Path(path).read_text(), provenance=f"read({path})")
