"""Union erasure spaces computed two ways: directly and by intersection.

The direct route applies the membership conditions to the concatenated basis
of the union.  The intersection route never touches the union basis: it
combines subspaces derived from one component (its erasure space, a
conjugate, one-sided multiples of the zero-block space, and an
expectation-matching constraint).  Both must agree to machine precision.
"""

from qerasure import (
    conjugate_subspace,
    cross_check_intersection_formulas,
    equality_residual,
    erasure_space,
    fixture_gbp_code,
    fixture_rains_subcode,
    gbp_pair_transform,
    rains_component_transform,
    transform_code,
    union_code,
    union_erasure_space_via_intersection,
    union_pure_space_via_intersection,
)

code = fixture_gbp_code()
t = gbp_pair_transform()

pipeline = union_erasure_space_via_intersection(code, t)
union, _ = union_code([code, transform_code(code, t)])
direct = erasure_space(union)
print(f"erasure space of the ((4,8,1)) union:")
print(f"  intersection route: dim {pipeline.dim}")
print(f"  direct route:       dim {direct.dim}")
print(f"  equality residual:  {equality_residual(pipeline, direct):.2e}")

pure_pipeline = union_pure_space_via_intersection(code, t)
print(f"pure space via intersection: dim {pure_pipeline.dim}")

# The packaged cross-check runs both formulas and reports residuals.
report = cross_check_intersection_formulas(code, t)
print("\ncross-check report for the gbp pair:")
for key, entry in report.items():
    print(f"  {key}: dim {entry['dim']} vs direct {entry['direct_dim']}, "
          f"residual {entry['residual']:.2e}, matches={entry['matches_direct']}")

# Same story for each orthogonal pair of the five-qubit family.
base = fixture_rains_subcode()
print("\nfive-qubit pairs:")
for i in range(5):
    rep = cross_check_intersection_formulas(base, rains_component_transform(i))
    print(f"  shift {i}: erasure dim {rep['theorem4']['dim']} "
          f"(residual {rep['theorem4']['residual']:.1e}), "
          f"pure dim {rep['theorem5']['dim']} "
          f"(residual {rep['theorem5']['residual']:.1e})")

# Conjugating a component's erasure space equals the image code's own space.
image_space = erasure_space(transform_code(code, t))
conjugated = conjugate_subspace(erasure_space(code), t)
print(f"\nconjugation consistency: residual "
      f"{equality_residual(image_space, conjugated):.2e}")
