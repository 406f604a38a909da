"""Learning a hidden matching with edge probes.

A hidden perfect matching between two sides of n vertices is an n x n
permutation matrix.  The greedy learner probes, for each left vertex, all but
one of the still-unmatched right vertices; an all-zero row of answers forces
the last candidate for free.  Against a lazy adversary -- which answers 0
whenever some matching is still consistent with that answer -- greedy pays
the full worst case of n(n-1)/2 probes, and no deterministic strategy can do
better.
"""

from edgeprobe import (
    FamilyTag,
    LazyMatchingAdversary,
    QueryOracle,
    gen_instance,
    learn_matching_full,
    learn_matching_greedy,
)

# On a random hidden matching, greedy often gets lucky.
inst = gen_instance(FamilyTag.MATCHING, 12, seed=7)
oracle = QueryOracle(inst)
learned = learn_matching_greedy(oracle, 12)
assert learned == inst
print(f"random instance, n=12:  greedy used {oracle.transcript.total_queries} queries "
      f"(worst case {12 * 11 // 2})")

# The naive baseline reads rows until each one's 1 shows up.
oracle = QueryOracle(inst)
learn_matching_full(oracle, 12)
print(f"random instance, n=12:  full scan used {oracle.transcript.total_queries} queries")

# Against the lazy adversary there is no luck to be had.
print("\nagainst the lazy adversary (worst case is forced):")
for n in (4, 8, 16, 32):
    adv = LazyMatchingAdversary(n)
    out = learn_matching_greedy(adv, n)
    assert out == adv.final_instance()
    print(f"  n={n:3d}:  {adv.transcript.total_queries:4d} queries  = n(n-1)/2 = {n * (n - 1) // 2}")
