"""The resonance identity on synthetic closed-geodesic data.

Each geodesic contributes (mean Euler number) / (mean index); for data on
the non-contractible component the contributions must sum to (n+1)/(2n),
the average Betti number computed in demo 04.  Truncated Morse counts
converge to the same value at rate 1/q.
"""

from fractions import Fraction

from loopbv import (
    GeodesicRecord,
    index_sequence,
    morse_truncation,
    nondegenerate_check,
    nondegenerate_record,
    resonance_check,
)

print("Two nondegenerate geodesics with mean index 1 close the n=1 identity:")
records = [nondegenerate_record("short", 0, 1), nondegenerate_record("long", 2, 1)]
report = resonance_check(records, 1)
for label, chi in report.per_geodesic.items():
    print(f"  {label}: mean Euler number {chi}")
print(f"  sum of contributions = {report.total}, target = {report.target}, "
      f"verdict: {'pass' if report.passed else 'fail'}")

print("\nThe all-nondegenerate specialisation doubles the sum:")
nd = nondegenerate_check(records, 1)
print(f"  signed reciprocal mean indices sum to {nd.total} "
      f"(target {nd.target}); consistent with the full check: {nd.consistent_with_full}")

print("\nA mixed-period instance built to satisfy the identity (n=1):")
mixed = [
    GeodesicRecord("twisted", 0, Fraction(1), 4, {(1, 0): 1, (2, 2): 1}),
    nondegenerate_record("plain", 2, 1),
]
rep = resonance_check(mixed, 1)
print(f"  periods {[r.period for r in mixed]}, sum = {rep.total}, "
      f"verdict: {'pass' if rep.passed else 'fail'}")
print(f"  mean Euler numbers: "
      f"{ {label: str(chi) for label, chi in rep.per_geodesic.items()} }")

print("\nIndex sequences respect parity and stay near the linear growth line:")
rec = GeodesicRecord("c", 0, Fraction(4, 3), 2, {(1, 0): 1})
print(f"  first odd-iterate indices (mean index 4/3): "
      f"{index_sequence(rec, 1, 'rounded-linear', 8)}")

print("\nTruncated Morse averages converge to the resonance sum:")
target = rep.total
for q in (100, 1000, 10000):
    trunc = morse_truncation(mixed, 1, q)
    err = abs(trunc.average - target)
    print(f"  q={q:6d}: average {trunc.average}  |error| = {err}")

print("\nA sum that misses the target is reported, not silently accepted:")
lonely = resonance_check([nondegenerate_record("lonely", 0, 1)], 1)
print(f"  single geodesic: sum = {lonely.total} != target {lonely.target} -> "
      f"{'pass' if lonely.passed else 'fail'}")
