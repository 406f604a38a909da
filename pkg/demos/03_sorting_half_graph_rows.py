"""Quicksorting the rows of a hidden half graph.

A half graph hides two permutations: row values R and column values B, with
cell (i, j) = 1 iff R[i] >= B[j].  Rows are pairwise comparable, so a
quicksort works: pick a pivot row, read it fully, compare every other row to
it, and recurse -- rows below the pivot keep its 1-columns, rows above keep
its 0-columns.  The comparison subroutine is pluggable:

* sampling: probe random columns of both rows until they differ
  (expected 2m/d probes at restricted distance d) -> about n log^2 n total;
* charged: a search-style subroutine booked at ceil(sqrt(m/d)) per
  comparison -> about n log n total charge.

This is bipartite sorting with cross-list comparisons only (nuts and bolts,
without the promised matching): sort the nuts, then place the bolts by
binary search.
"""

import math

from edgeprobe import (
    CostModel,
    FamilyTag,
    QueryOracle,
    Rng,
    gen_instance,
    interleaved_lists,
    learn_half_graph,
)

inst = gen_instance(FamilyTag.HALF_GRAPH, 8, seed=1)
rp, bp = interleaved_lists(inst)
print("nuts  (even values):", rp)
print("bolts (odd values): ", bp)

oracle = QueryOracle(inst, CostModel.SAMPLING)
out = learn_half_graph(oracle, 8, Rng(5), CostModel.SAMPLING)
print(f"n=8 sampling run: correct={out == inst}, "
      f"{oracle.transcript.total_queries} queries\n")

print("mean cost over 20 runs, sampling queries vs charged-model charge:")
print(f"{'n':>6} {'sampling':>10} {'/n ln^2 n':>10} {'charged':>9} {'/n ln n':>9}")
for n in (64, 256, 1024):
    inst = gen_instance(FamilyTag.HALF_GRAPH, n, seed=n)
    q_total = c_total = 0
    for t in range(20):
        o = QueryOracle(inst, CostModel.SAMPLING)
        learn_half_graph(o, n, Rng(t), CostModel.SAMPLING)
        q_total += o.transcript.total_queries
        o = QueryOracle(inst, CostModel.GROVER)
        learn_half_graph(o, n, Rng(t), CostModel.GROVER)
        c_total += o.transcript.total_charge
    q, c = q_total / 20, c_total / 20
    print(f"{n:>6} {q:>10.0f} {q / (n * math.log(n) ** 2):>10.2f} "
          f"{c:>9.0f} {c / (n * math.log(n)):>9.2f}")
print("\nflat normalized columns = the predicted n log^2 n and n log n growth")
