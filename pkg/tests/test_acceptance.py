"""Acceptance criteria 1-8.

Each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line (shown even under
capture) and then asserts.  Nothing here is relaxed to make a criterion pass;
the known failures are explained in the project notes.
"""

import itertools

import numpy as np
import pytest

from sscodes.analysis import (
    classify,
    classify_distance_optimal,
    find_avoiding_functional,
    griesmer_defect,
    griesmer_sum,
    shape_defect_bound,
)
from sscodes.construction import (
    ConstructionError,
    SSParams,
    affine_ss,
    gaussian_binomial,
    lines_code,
    modified_affine_ss,
    puncture,
    shape_record,
    subcodes,
)
from sscodes.families import FamilySpec, closed_form_wdist
from sscodes.gf import field_of_order
from sscodes.reproduce import _subcode_hypotheses, read_rows
from sscodes.weights import (
    min_distance,
    weight_distribution_enum,
    weight_distribution_hyperplane,
)


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}")
        return ok

    return emit


def build(q, k, u, e=None):
    p = SSParams(field_of_order(q), k, u, e)
    return affine_ss(p) if p.e == q - 1 else modified_affine_ss(p)


# 1 -------------------------------------------------------------------------

def test_criterion_1_table1(report):
    rows = read_rows("table1.csv")
    bad = []
    for r in rows:
        q, k = int(r["q"]), int(r["k"])
        u = tuple(int(x) for x in r["u"].split())
        C = build(q, k, u)
        d = min_distance(C)
        if (C.n, C.k, d) != (int(r["n"]), k, int(r["d"])):
            bad.append(f"q={q} {(k, *u)} printed [{r['n']},{k},{r['d']}] measured [{C.n},{C.k},{d}]")
    assert build(3, 4, (2, 2)).n == 64 and min_distance(build(3, 4, (2, 2))) == 42
    assert (build(3, 5, (1, 2, 3)).n, min_distance(build(3, 5, (1, 2, 3)))) == (206, 136)
    ok = len(rows) == 32 and not bad
    detail = f"{len(rows)} rows in the table (32 expected), {len(rows) - len(bad)} reproduced"
    if bad:
        detail += "; mismatches: " + "; ".join(bad)
    assert report(1, ok, detail), detail


# 2 -------------------------------------------------------------------------

GOLDEN = [
    ("Example 5", 3, 4, (2, 2), 2, {42: 64, 48: 16}, FamilySpec("T3", 3, 2)),
    ("Example 6", 3, 5, (2, 3), 2, {138: 208, 144: 26, 156: 8}, FamilySpec("C3", 3, 2)),
    ("Example 7", 5, 3, (1, 1, 1), 4, {88: 40, 92: 72, 96: 12}, FamilySpec("T4", 5, 1)),
    ("Example 8", 2, 7, (2, 2, 3), 1, {56: 91, 58: 8, 60: 22, 62: 6}, FamilySpec("T5", 2, 2)),
    ("Example 11", 9, 3, (1, 1, 1), 1, {78: 464, 79: 240, 80: 24}, FamilySpec("C5", 9, 1, 1)),
]


def test_criterion_2_golden_distributions(report):
    lines = []
    all_ok = True
    for name, q, k, u, e, printed, fam in GOLDEN:
        C = build(q, k, u, e)
        got = {
            "enum": weight_distribution_enum(C),
            "hyperplane": weight_distribution_hyperplane(C),
            "closed form": closed_form_wdist(fam),
        }
        for engine, wd in got.items():
            nonzero = {w: c for w, c in wd.counts.items() if w}
            if nonzero != printed:
                all_ok = False
                lines.append(f"{name} {engine}: printed {printed}, computed {nonzero}")
    detail = "all five printed distributions reproduced by all three sources" if all_ok else "; ".join(lines)
    assert report(2, all_ok, detail), detail


# 3 -------------------------------------------------------------------------

def random_params(rng, count, cost_cap=4_000_000):
    out = []
    while len(out) < count:
        q = int(rng.choice([2, 3, 4, 5]))
        k = int(rng.integers(2, 9))
        if q ** k > 100_000:
            continue
        budget = q ** k - q ** (k - 1)
        u, used = [], 0
        for _ in range(int(rng.integers(0, 5))):
            v = int(rng.integers(1, k))
            if used + q ** v - 1 < budget:
                u.append(v)
                used += q ** v - 1
        divisors = [e for e in range(1, q) if (q - 1) % e == 0]
        e = int(rng.choice(divisors))
        try:
            p = SSParams(field_of_order(q), k, tuple(u), e)
            if q ** k * p.length() > cost_cap:
                continue
            C = affine_ss(p) if e == q - 1 else modified_affine_ss(p)
        except ConstructionError:
            continue
        out.append((p, C))
    return out


def test_criterion_3_dual_engines(report):
    rng = np.random.default_rng(20261019)
    cases = random_params(rng, 60)
    bad = []
    for p, C in cases:
        a, b = weight_distribution_enum(C), weight_distribution_hyperplane(C)
        total = sum(a.counts.values())
        divisible = all(c % (p.q - 1) == 0 for w, c in a.counts.items() if w)
        if a != b or total != p.q ** p.k or not divisible:
            bad.append(p.describe())
    qs = sorted({p.q for p, _ in cases})
    ok = not bad and len(cases) >= 50
    detail = f"{len(cases)} random parameter sets over q in {qs}, k <= {max(p.k for p, _ in cases)}"
    detail += ": engines agree, counts sum to q^k, divisible by q-1" if ok else f": failures {bad}"
    assert report(3, ok, detail), detail


# 4 -------------------------------------------------------------------------

# multiplicity cap per subspace dimension; without one the multisets allowed by
# the length budget run into the thousands for q = 4, k = 7
MULTIPLICITY_CAP = 6


def u_configurations(q, k):
    budget = q ** k - q ** (k - 1)

    def rec(start, cur, used):
        yield tuple(cur)
        for v in range(start, k):
            cost = q ** v - 1
            if used + cost < budget and cur.count(v) < MULTIPLICITY_CAP:
                cur.append(v)
                yield from rec(v, cur, used + cost)
                cur.pop()

    yield from rec(1, [], 0)


def thm2_case(u, q):
    shape = shape_record(u)
    if all(s == 1 for s in shape.s):
        return 1
    if shape.t == 1:
        return 2 if len(u) <= q else None
    if all(b - a >= 2 for a, b in zip(shape.values, shape.values[1:])):
        return 3
    return None


def test_criterion_4_thm2_grid(report):
    tally = {1: 0, 2: 0, 3: 0}
    impossible = unplaced = 0
    violations = []
    for q in (2, 3, 4):
        F = field_of_order(q)
        for k in range(2, 8):
            for u in u_configurations(q, k):
                case = thm2_case(u, q)
                if case is None:
                    continue
                try:
                    C = affine_ss(SSParams(F, k, u))
                except ConstructionError:
                    # two subspaces with u_i + u_j > k always meet
                    if any(a + b > k for a, b in itertools.combinations(u, 2)):
                        impossible += 1
                    else:
                        unplaced += 1
                    continue
                tally[case] += 1
                bound = shape_defect_bound(u, q)
                defect = griesmer_defect(C, weight_distribution_hyperplane(C).min_distance).defect
                if defect > bound or (case == 1 and defect != 0):
                    violations.append(f"q={q} {(k, *u)} case {case}: defect {defect} > bound {bound}")
    ok = not violations
    detail = (
        f"{sum(tally.values())} instances (case 1: {tally[1]}, case 2: {tally[2]}, case 3: {tally[3]}),"
        f" multiplicity <= {MULTIPLICITY_CAP}; skipped {impossible} dimensionally impossible"
        f" and {unplaced} beyond the default subspace placement"
    )
    if violations:
        detail += f"; {len(violations)} violations: " + "; ".join(violations)
    assert report(4, ok, detail), detail


# 5 -------------------------------------------------------------------------

SUBCODE_CASES = [
    (4, (2,)),
    (5, (3,)),
    (5, (2, 3)),
    (6, (4,)),
    # beyond the listed codes: the ones where the codimension-2 hypotheses hold
    (5, (4,)),
    (6, (5,)),
]


def test_criterion_5_subcodes(report):
    notes, bad = [], []
    checked = 0
    for k, u in SUBCODE_CASES:
        C = build(2, k, u)
        d = min_distance(C)
        for codim in (1, 2):
            why = _subcode_hypotheses(2, k, d, C.n, codim)
            if why is not None:
                notes.append(f"{(k, *u)} codim {codim} skipped ({why})")
                continue
            count = 0
            for S in subcodes(C, codim):
                count += 1
                ds = min_distance(S)
                if ds != d or not classify_distance_optimal(2, S.n, S.k, ds):
                    bad.append(f"{(k, *u)} codim {codim} subcode {count - 1}: d={ds}")
            if count != gaussian_binomial(k, k - codim, 2):
                bad.append(f"{(k, *u)} codim {codim}: {count} subcodes")
            checked += count
            notes.append(f"[{C.n},{k},{d}] codim {codim}: {count} subcodes ok")
    ok = not bad
    detail = f"{checked} subcodes checked; " + "; ".join(notes + bad)
    assert report(5, ok, detail), detail


# 6 -------------------------------------------------------------------------

PUNCTURE_DEFECT_ONE = [(4, (1, 2)), (5, (1, 2)), (5, (1, 2, 3)), (6, (1, 2)), (6, (1, 2, 3)), (6, (1, 2, 4))]


def test_criterion_6_puncturing(report):
    problems, seen = [], []
    C = build(2, 4, (2,))
    assert (C.n, min_distance(C)) == (12, 6)
    P = puncture(C)
    dp = min_distance(P)
    if (P.n, P.k, dp) != (11, 4, 5) or griesmer_sum(2, 4, 5) != 11:
        problems.append(f"[12,4,6] punctured to [{P.n},{P.k},{dp}]")
    for k, u in PUNCTURE_DEFECT_ONE:
        C = build(2, k, u)
        d = min_distance(C)
        P = puncture(C)
        rep = classify(2, P.n, P.k, min_distance(P))
        seen.append(f"[{C.n},{k},{d}]->[{P.n},{P.k},{rep.d}] defect {rep.defect}")
        if griesmer_sum(2, k, d) != C.n or rep.defect != 1 or not rep.distance_optimal:
            problems.append(f"{(k, *u)}: defect {rep.defect}, distance-optimal {rep.distance_optimal}")
    ok = not problems
    detail = "[12,4,6]->[11,4,5] Griesmer; " + ", ".join(seen)
    if problems:
        detail += "; expected defect 1: " + "; ".join(problems)
    assert report(6, ok, detail), detail


# 7 -------------------------------------------------------------------------

def test_criterion_7_lines(report):
    F2 = field_of_order(2)
    eye = np.eye(6, dtype=np.int64)
    C = lines_code(F2, 6, [eye[i] for i in range(4)], e=1)
    d = min_distance(C)
    checks = {
        "n = 59": C.n == 59,
        f"d = {d} >= 28": d >= 28,
        "griesmer_sum(2,6,30) > 59": griesmer_sum(2, 6, 30) > 59,
        "no avoiding functional for dependent lines": find_avoiding_functional(F2, 2, [[1, 0], [0, 1], [1, 1]]) is None,
    }
    F11 = field_of_order(11)
    e4 = np.eye(4, dtype=np.int64)
    ex12 = [e4[i] for i in range(4)] + [e4[i] + e4[j] for i, j in itertools.combinations(range(4), 2)]
    x = find_avoiding_functional(F11, 4, ex12)
    checks[f"Example 12 witness {None if x is None else x.tolist()}"] = x is not None
    for q in (2, 3):
        F = field_of_order(q)
        for k in range(2 * q, 2 * q + 2):
            eye = np.eye(k, dtype=np.int64)
            L = lines_code(F, k, [eye[i] for i in range(2 * q)], e=1)
            dl = min_distance(L)
            target = q ** (k - 1) - 2 * q
            checks[f"q={q} k={k} [{L.n},{k},{dl}] almost optimal"] = (
                dl >= target and griesmer_sum(q, k, target + 2) > L.n
            )
    ok = all(checks.values())
    detail = "; ".join(f"{'ok' if v else 'FAILED'} {name}" for name, v in checks.items())
    assert report(7, ok, detail), detail


# 8 -------------------------------------------------------------------------

def test_criterion_8_negative_control(report):
    C = build(7, 2, (1, 1), 6)
    d = min_distance(C)
    over_claims = classify_distance_optimal(7, 36, 2, 30)
    ok = (C.n, C.k, d) == (36, 2, 30) and not over_claims and griesmer_sum(7, 2, 31) <= 36
    detail = f"built [{C.n},{C.k},{d}]_7, distance-optimal={over_claims}, g(2,31)={griesmer_sum(7, 2, 31)} <= 36"
    assert report(8, ok, detail), detail
