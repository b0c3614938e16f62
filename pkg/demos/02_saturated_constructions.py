#!/usr/bin/env python3
"""The extremal constructions behind the minimum-gray values.

A trigraph is induced-P4-saturated when no realization contains an
induced 4-path but flipping any black or white pair to gray creates one.
The layered construction achieves the least possible number of gray
pairs, ceil((n+1)/3), for every n >= 4; an alternative family matches it
when n is divisible by 3.
"""

from indsat import (
    GRAY,
    P4,
    classify_gray_components,
    construct_alternative,
    construct_tn,
    is_indsat,
    isat_formula,
    parse_family,
    sat_formula,
)

print("== the layered construction ==")
t5, spec = construct_tn(5)
print("labeling:", spec.labeling)
print("gray pairs:", list(t5.pairs_of(GRAY)))
report = is_indsat(t5, P4, want_witnesses=True)
print("saturated:", report.is_indsat)
print("sample flip witnesses (flip -> path image):")
for pair in list(report.witness_flips)[:3]:
    print("  ", pair, "->", report.witness_flips[pair].vertices)

print()
print("== gray counts match the closed form for n = 4..40 ==")
fam = parse_family("p4")
rows = []
for n in range(4, 41):
    t, _ = construct_tn(n)
    assert is_indsat(t, P4).is_indsat
    assert t.gray_count == isat_formula(fam, n)
print("all verified:", "ceil((n+1)/3) =", [isat_formula(fam, n) for n in range(4, 13)], "...")

print()
print("== gray components are stars and trivial vertices ==")
t14, _ = construct_tn(14)
for comp in classify_gray_components(t14):
    print("  ", comp.vertices, comp.shape.value, "center" if comp.center is not None else "",
          comp.center if comp.center is not None else "")

print()
print("== the alternative family for n divisible by 3 ==")
for n in (6, 9, 12):
    t = construct_alternative(n)
    print(f"  n={n}: gray={t.gray_count}, saturated={is_indsat(t, P4).is_indsat}")

print()
print("== classical vs induced saturation values ==")
print("  family      n   classical  induced")
for fam_id, n in (("p3", 10), ("p4", 10), ("k3", 10), ("khminus:4", 10)):
    fam = parse_family(fam_id)
    sat = sat_formula(fam, n)
    try:
        ind = isat_formula(fam, n)
    except ValueError:
        ind = "?"
    print(f"  {fam_id:<12}{n:<4}{str(sat) if sat is not None else 'unknown':<11}{ind}")
