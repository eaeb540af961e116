"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on a
usage error (bad flags, violated preconditions, unreadable input).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import TableFormatError, classify, defect_upper_bound_thm2, load_best_known_table
from .construction import (
    ConstructionError,
    SSParams,
    affine_ss,
    gaussian_binomial,
    modified_affine_ss,
    puncture,
    repetition_copy,
    subcodes,
)
from .gf import FieldError, field_of_order
from .io import MatrixFormatError, format_matrix, read_matrix
from .linalg import Subspace
from .reproduce import TABLES, run
from .weights import EnumerationGuardError, weight_distribution, weight_distribution_enum, weight_distribution_hyperplane

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_u(text: str) -> tuple[int, ...]:
    """Comma-separated ascending integers; the empty string means no subspaces."""
    text = text.strip()
    if not text:
        return ()
    try:
        u = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--u must be comma-separated integers, got {text!r}") from None
    if list(u) != sorted(u):
        raise UsageError(f"--u must be ascending, got {text!r}")
    return u


def read_bases(path, F, k: int) -> tuple[Subspace, ...]:
    """One subspace per blank-line-separated block; each line is a basis vector."""
    blocks, cur = [], []
    for ln in Path(path).read_text().splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append([int(x) for x in ln.split()])
    if cur:
        blocks.append(cur)
    out = []
    for i, rows in enumerate(blocks, 1):
        if any(len(r) != k for r in rows):
            raise UsageError(f"{path}: subspace {i} has a vector whose length is not k={k}")
        out.append(Subspace(F, k, np.array(rows, dtype=np.int64)))
    return tuple(out)


def _params(args) -> SSParams:
    if args.q is None or args.k is None:
        raise UsageError("give --matrix, or --q and --k (with --u, --e) to construct a code")
    F = field_of_order(args.q)
    u = parse_u(args.u)
    bases = read_bases(args.bases, F, args.k) if getattr(args, "bases", None) else None
    e = args.e
    if getattr(args, "variant", "affine") == "affine" and e not in (None, args.q - 1):
        raise UsageError(f"--variant affine needs e = q-1 = {args.q - 1}; use --variant modified")
    return SSParams(F, args.k, u, e, bases)


def _code(args):
    if args.matrix:
        return read_matrix(args.matrix)
    params = _params(args)
    return modified_affine_ss(params) if getattr(args, "variant", "affine") == "modified" else affine_ss(params)


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _note(args, line: str) -> None:
    # summaries go to stdout when the payload goes to a file, else to stderr
    print(line, file=sys.stdout if args.out else sys.stderr)


def cmd_construct(args) -> int:
    params = _params(args)
    code = modified_affine_ss(params) if args.variant == "modified" else affine_ss(params)
    _emit(format_matrix(code), args.out)
    q, k = params.q, params.k
    _note(args, f"[{code.n},{k}]_{q} {args.variant} code, {params.describe()}")
    _note(args, f"n = e(q^k - 1 - sum(q^u_i - 1))/(q-1) = {params.length()}")
    _note(args, f"d >= e(q^(k-1) - sum q^(u_i-1)) = {params.distance_lower_bound()}")
    if args.variant == "affine":
        bound = defect_upper_bound_thm2(params)
        if bound is not None:
            _note(args, f"Griesmer defect <= {bound} by the shape of u")
    return EXIT_OK


def cmd_wdist(args) -> int:
    code = _code(args)
    if args.method == "both":
        a, b = weight_distribution_enum(code, args.guard), weight_distribution_hyperplane(code, args.guard)
        if a != b:
            print(f"engines disagree: {a.diff(b)}", file=sys.stderr)
            return EXIT_MISMATCH
        wd = a
    else:
        wd = weight_distribution(code, args.method, args.guard)
    _emit(wd.to_json(), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    table = load_best_known_table(args.table) if args.table else None
    if args.n is not None or args.d is not None:
        if None in (args.q, args.n, args.k, args.d):
            raise UsageError("classify by parameters needs --q, --n, --k and --d")
        q, n, k, d = args.q, args.n, args.k, args.d
    else:
        code = _code(args)
        q, n, k = code.q, code.n, code.k
        d = weight_distribution(code, "hyperplane", args.guard).min_distance
    print(classify(q, n, k, d, table).summary())
    return EXIT_OK


def cmd_subcode(args) -> int:
    code = _code(args)
    base_d = weight_distribution(code, "hyperplane", args.guard).min_distance
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    failures = count = 0
    for i, sub in enumerate(subcodes(code, args.codim)):
        count += 1
        d = weight_distribution(sub, "hyperplane", args.guard).min_distance
        rep = classify(sub.q, sub.n, sub.k, d)
        kept = d == base_d
        failures += not (kept and rep.distance_optimal)
        if args.verbose:
            print(f"subcode {i}: [{sub.n},{sub.k},{d}]_{sub.q} {rep.label}")
        if out_dir:
            (out_dir / f"subcode_{i:05d}.txt").write_text(format_matrix(sub))
    expected = gaussian_binomial(code.k, code.k - args.codim, code.q)
    print(
        f"{count} codimension-{args.codim} subcodes of [{code.n},{code.k},{base_d}]_{code.q} "
        f"(expected {expected}); {count - failures} keep d={base_d} and are distance-optimal"
    )
    return EXIT_MISMATCH if args.verify and (failures or count != expected) else EXIT_OK


def cmd_puncture(args) -> int:
    code = _code(args)
    P = puncture(code, args.position)
    _emit(format_matrix(P), args.out)
    d = weight_distribution(P, "hyperplane", args.guard).min_distance
    _note(args, f"{P.provenance[-1]}: {classify(P.q, P.n, P.k, d).summary()}")
    return EXIT_OK


def cmd_repeat(args) -> int:
    code = _code(args)
    R = repetition_copy(code, args.copies)
    _emit(format_matrix(R), args.out)
    _note(args, f"[{R.n},{R.k}]_{R.q} {args.copies}-copy repetition")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    checks = run(args.table)
    for c in checks:
        if c.ok and args.failures_only:
            continue
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_MISMATCH if failed else EXIT_OK


def _add_code_source(p, with_variant=True):
    g = p.add_argument_group("code source (a matrix file, or construction flags)")
    g.add_argument("--matrix", help="generator matrix file")
    g.add_argument("--q", type=int, help="field order")
    g.add_argument("--k", type=int, help="dimension")
    g.add_argument("--u", default="", help="comma-separated ascending subspace dimensions; empty for none")
    g.add_argument("--e", type=int, help="subgroup order (modified variant); defaults to q-1")
    g.add_argument("--bases", help="file of explicit subspace bases (blank-line-separated blocks)")
    if with_variant:
        g.add_argument("--variant", choices=("affine", "modified"), default="affine")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sscodes", description="Affine Solomon-Stiffler code toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--guard", type=int, default=1 << 22, help="largest q^k to enumerate")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="build a generator matrix")
    _add_code_source(p)
    p.add_argument("--out", help="matrix output file (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("wdist", help="weight distribution as JSON")
    _add_code_source(p)
    p.add_argument("--method", choices=("enum", "hyperplane", "both"), default="hyperplane")
    p.add_argument("--out")
    p.set_defaults(func=cmd_wdist)

    p = sub.add_parser("classify", help="Griesmer defect and optimality label")
    _add_code_source(p)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--table", help="best-known CSV (q,n,k,d)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("subcode", help="enumerate codimension-1 or -2 subcodes")
    _add_code_source(p)
    p.add_argument("--codim", type=int, choices=(1, 2), default=1)
    p.add_argument("--out-dir")
    p.add_argument("--verify", action="store_true", help="exit 1 unless every subcode keeps d and is distance-optimal")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_subcode)

    p = sub.add_parser("puncture", help="delete one coordinate")
    _add_code_source(p)
    p.add_argument("--position", type=int, help="column index (default: canonical min-weight support)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("repeat", help="repetition copies of a code")
    _add_code_source(p)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_repeat)

    p = sub.add_parser("reproduce", help="regression suite over the shipped expected values")
    p.add_argument("--table", choices=(*TABLES, "all"), default="all")
    p.add_argument("--failures-only", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        UsageError,
        ConstructionError,
        FieldError,
        MatrixFormatError,
        TableFormatError,
        EnumerationGuardError,
        OSError,
        IndexError,
        ValueError,
    ) as exc:
        print(f"sscodes {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
