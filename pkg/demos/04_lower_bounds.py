"""Lower bounds, verified by exhaustive search at small n.

Four independent computations, each an exact enumeration:

* the minimax depth of the query game (optimal deterministic learner),
* the counting floor ceil(log2 |family|),
* the classical relational adversary value of the column-swap relation on
  matchings (a randomized lower bound; comes out to exactly C(n, 2)),
* the extremal parameters (m, m', l, l') of the adjacent-weight column-swap
  relation on column-permuted half graphs (a quantum lower bound of
  sqrt(m m' / l l') = n - 1).
"""

from edgeprobe import (
    FamilyTag,
    cra_value_matching,
    exact_det_depth,
    family_size,
    info_lower_bound,
    quantum_adversary_params_colperm,
)

print("matchings: exact minimax depth vs the n(n-1)/2 formula")
for n in (2, 3, 4):
    depth = exact_det_depth(FamilyTag.MATCHING, n)
    floor = info_lower_bound(family_size(FamilyTag.MATCHING, n))
    print(f"  n={n}: depth={depth}  formula={n * (n - 1) // 2}  counting floor={floor}")

print("\ncolumn-permuted half graphs: depth meets the counting floor")
for n in (2, 3, 4):
    depth = exact_det_depth(FamilyTag.COL_PERMUTED, n)
    floor = info_lower_bound(family_size(FamilyTag.COL_PERMUTED, n))
    print(f"  n={n}: depth={depth}  counting floor={floor}")

print("\nrandomized adversary value for matchings (exact rationals)")
for n in (2, 3, 4, 5):
    print(f"  n={n}: CRA = {cra_value_matching(n)}  = C({n},2)")

print("\nquantum adversary parameters for column-permuted half graphs")
for n in (2, 4, 6, 7):
    m, mp, l, lp = quantum_adversary_params_colperm(n)
    bound = (m * mp / (l * lp)) ** 0.5
    print(f"  n={n}: (m, m', l, l') = {(m, mp, l, lp)}  -> bound sqrt(mm'/ll') = {bound:.0f}")
