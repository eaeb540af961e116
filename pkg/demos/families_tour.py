"""Compare closed-form family distributions with enumeration and with the printed tables."""

from sscodes.families import FamilySpec, printed_wdist, verify_family

for fam in [
    FamilySpec("T3", 3, 2),
    FamilySpec("T4", 5, 1),
    FamilySpec("T5", 2, 2),
    FamilySpec("C5", 9, 1, 1),
    FamilySpec("T7", 7, 1, 2, 3),
]:
    rep = verify_family(fam)
    print(*rep.lines(), sep="\n")
    printed = printed_wdist(fam)
    if printed is not None and printed != rep.enumerated:
        print("  printed table differs:", printed.diff(rep.enumerated))
    print(f"  defect {rep.defect}, sum of floor(e*h/q^j) = {fam.predicted_defect}")
