"""Column-permuted half graphs are threshold sorting in disguise.

A column-permuted half graph's column j is 0...01...1 with X[j] ones, where X
is a hidden permutation of 1..n.  Probing cell (i, j) asks exactly the
threshold question "is X[j] >= n - i + 1?", so learning the matrix and
sorting the hidden list with threshold comparisons are the same problem,
query for query.  Binary search per column learns everything in about
n log2 n probes, a whisker above the counting floor of log2(n!).
"""

import math

from edgeprobe import (
    FamilyTag,
    QueryOracle,
    gen_instance,
    learn_column_permuted,
    sort_threshold_list,
    threshold_list_view,
)

n = 16
inst = gen_instance(FamilyTag.COL_PERMUTED, n, seed=3)
print("hidden column weights X:", threshold_list_view(inst))

edge_oracle = QueryOracle(inst)
learned = learn_column_permuted(edge_oracle, n)
print(f"edge-probe learner:      {edge_oracle.transcript.total_queries} queries, "
      f"correct={learned == inst}")

thr_oracle = QueryOracle(inst)
x = sort_threshold_list(thr_oracle, n)
print(f"threshold-query sorter:  {thr_oracle.transcript.total_queries} queries, "
      f"correct={x == threshold_list_view(inst)}")

# Same search, two query languages: the transcripts agree answer for answer.
pairs = zip(edge_oracle.transcript, thr_oracle.transcript)
agree = all(e_ans == t_ans for (_, _, e_ans, _), (_, _, t_ans, _) in pairs)
print(f"pointwise-equal answer sequences: {agree}")

print(f"\ncounting floor ceil(log2 {n}!) = {(math.factorial(n) - 1).bit_length()}  "
      f"vs upper bound n(ceil(log2 n)+1) = {n * (math.ceil(math.log2(n)) + 1)}")

first = edge_oracle.transcript.records[0]
print(f"first probe: cell {first[1]} -> {first[2]}   "
      f"(same as asking: is X[{first[1][1]}] >= {n - first[1][0] + 1}?)")
