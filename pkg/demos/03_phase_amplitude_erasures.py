"""A union that trades general erasures for phase-only and amplitude-only ones.

Doubling the ((4,4,2)) code with its image under a Y on the last qubit gives
a ((4,8,1)) code: it can no longer absorb an arbitrary single-qubit operator,
but every single X (amplitude flip) and every single Z (phase flip) still
passes, on every position.  The scan identifies exactly the single-qubit Y
operators as the obstruction.
"""

from qerasure import (
    check_erasure,
    classify_paulis,
    enumerate_paulis,
    fixture_gbp_code,
    gbp_pair_transform,
    get_fixture,
    minimum_distance,
    pauli_to_string,
    transform_code,
    union_code,
    weight,
)

base = fixture_gbp_code()
image = transform_code(base, gbp_pair_transform(), label="tau(gbp)")
union, report = union_code([base, image])
print(f"components: {report.component_labels}")
print(f"union: n={report.n}, K={report.k}")
print(f"minimum distance: {minimum_distance(union)}")

print("\nsingle-qubit operators against the union:")
for p in enumerate_paulis(4, 1):
    if weight(p) != 1:
        continue
    verdict = check_erasure(union, p)
    mark = "member" if verdict.member else "VIOLATES"
    print(f"  {pauli_to_string(p)}: {mark}")

rows = classify_paulis(union, 1)
print(f"\nweight-1 tally: {rows[1].members} members, "
      f"{rows[1].non_members} violators ({' '.join(rows[1].violators)})")
print("so amplitude-only (X) and phase-only (Z) single erasures are fine; "
      "combined (Y) ones are not")

assert get_fixture("gbp-union").k == union.k
