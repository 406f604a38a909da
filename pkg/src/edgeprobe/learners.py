"""Reconstruction algorithms for the three hidden-graph families.

All learners are Las Vegas: the output equals the hidden instance on every
run, and randomness (where present) affects only the query cost.

* :func:`learn_matching_greedy` -- row-by-row candidate elimination,
  worst case n(n-1)/2 edge queries.
* :func:`learn_matching_full` -- the naive scan baseline.
* :func:`learn_column_permuted` / :func:`sort_threshold_list` -- per-column
  binary search for the topmost 1, in the edge-query and threshold-query
  languages respectively; the two produce pointwise-identical transcripts
  under the cell translation (i, j) <-> (j, n - i + 1).
* :func:`quicksort_rows` -- pivot-partition row ordering with pluggable
  comparison subroutines (uniform sampling, or charged whole-row compare).
* :func:`locate_columns` / :func:`learn_half_graph` -- full half-graph
  reconstruction: sort the rows, then binary-search each column's flip
  position along the sorted order.

Learners are single-threaded per (oracle, rng) pair; run concurrent trials
with one oracle and one Rng stream each.
"""

from dataclasses import dataclass

from .instances import ColumnPermutedHalfGraph, HalfGraph, Matching
from .oracles import CostModel, InconsistencyError, Ordering
from .rng import Rng


@dataclass(frozen=True)
class SubProblem:
    """Live (rows, cols) pair during the quicksort recursion.

    Restricted to ``cols``, any two rows in ``rows`` are entrywise comparable
    and unequal, and the shape satisfies len(rows) <= len(cols) <=
    len(rows) + 1 throughout the recursion.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]


def learn_matching_greedy(oracle, n: int) -> Matching:
    """Find each left vertex's partner among the still-unmatched right vertices.

    For each row, probe all but one candidate; if every probe answers 0 the
    last candidate is forced by elimination at no query cost.  With k rows
    already matched the next row costs at most n - k - 1 queries, for a
    worst-case total of n(n-1)/2.
    """
    unmatched = list(range(1, n + 1))
    perm = [0] * n
    for i in range(1, n + 1):
        hit = None
        for c in unmatched[:-1]:
            if oracle.edge_query(i, c):
                hit = c
                break
        if hit is None:
            hit = unmatched[-1]
        perm[i - 1] = hit
        unmatched.remove(hit)
    return Matching(tuple(perm))


def learn_matching_full(oracle, n: int) -> Matching:
    """Naive baseline: scan each row left to right until its 1 appears."""
    perm = [0] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if oracle.edge_query(i, j):
                perm[i - 1] = j
                break
        else:
            raise InconsistencyError(f"row {i} has no 1-entry; oracle is not a matching")
    return Matching(tuple(perm))


def _find_first_one(probe, n: int) -> int:
    """Least position p in 1..n with probe(p) = 1, assuming probes are
    monotone 0...01...1 with a 1 guaranteed at position n.

    Uses ceil(log2 n) probes, plus one verification probe when the boundary
    position was never observed directly; a 0 there means the monotonicity
    promise is broken and raises.
    """
    lo, hi = 1, n
    seen_one_at = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if probe(mid):
            hi = mid
            seen_one_at = mid
        else:
            lo = mid + 1
    if seen_one_at != lo and not probe(lo):
        raise InconsistencyError("column is not monotone along the probed order")
    return lo


def learn_column_permuted(oracle, n: int) -> ColumnPermutedHalfGraph:
    """Binary-search each column's topmost 1; the last column is deduced.

    Column j of the hidden matrix is 0^(n-X[j]) 1^(X[j]), so its topmost 1
    sits at row n - X[j] + 1 and the bottom row is always 1.  The first
    n - 1 columns cost at most ceil(log2 n) + 1 queries each; the last
    column's weight is the one value of 1..n not yet seen.
    """
    if n == 1:
        return ColumnPermutedHalfGraph((1,))
    weights = []
    for j in range(1, n):
        top = _find_first_one(lambda i: oracle.edge_query(i, j), n)
        weights.append(n - top + 1)
    weights.append(_missing_value(weights, n))
    return ColumnPermutedHalfGraph(tuple(weights))


def sort_threshold_list(oracle, n: int) -> tuple[int, ...]:
    """Identify the hidden list X with threshold queries "is X[j] >= t?".

    The same binary search as :func:`learn_column_permuted`, expressed in
    the threshold language: probing row i of column j becomes the threshold
    query (j, n - i + 1).  Against the same hidden instance the two produce
    equal-length transcripts with pointwise-equal answers.
    """
    if n == 1:
        return (1,)
    weights = []
    for j in range(1, n):
        top = _find_first_one(lambda i: oracle.threshold_query(j, n - i + 1), n)
        weights.append(n - top + 1)
    weights.append(_missing_value(weights, n))
    return tuple(weights)


def _missing_value(weights: list[int], n: int) -> int:
    missing = set(range(1, n + 1)).difference(weights)
    if len(missing) != 1:
        raise InconsistencyError(f"column weights {weights} do not extend to a permutation")
    return missing.pop()


def compare_rows_sampling(oracle, i1: int, i2: int, col_set, rng: Rng,
                          max_draw_factor: int = 64) -> tuple[Ordering, int]:
    """Order two comparable, unequal rows by sampling columns until they differ.

    Each draw picks a uniform column k from col_set and probes both (i1, k)
    and (i2, k) -- two edge queries.  With restricted Hamming distance d the
    expected number of queries is 2 * len(col_set) / d.  Returns the ordering
    and the witnessing column.

    The draw count is capped at max_draw_factor * len(col_set); under a valid
    precondition (d >= 1) the cap fires with probability < 2^-92, so hitting
    it reliably signals equal rows, i.e. a learner bug.
    """
    m = len(col_set)
    edge_query = oracle.edge_query
    next_below = rng.next_below
    for _ in range(max_draw_factor * m):
        k = col_set[next_below(m)]
        a = edge_query(i1, k)
        b = edge_query(i2, k)
        if a != b:
            return (Ordering.LESS if a < b else Ordering.GREATER), k
    raise InconsistencyError(
        f"rows {i1} and {i2} look equal on {m} columns after {max_draw_factor * m} draws"
    )


def sampling_compare(oracle, row: int, pivot: int, cols, rng: Rng) -> tuple[Ordering, int]:
    """Comparison hook backed by :func:`compare_rows_sampling`."""
    return compare_rows_sampling(oracle, row, pivot, cols, rng)


def charged_compare(oracle, row: int, pivot: int, cols, rng: Rng) -> tuple[Ordering, None]:
    """Comparison hook backed by the oracle's charged whole-row compare."""
    return oracle.charged_row_compare(row, pivot, cols), None


def quicksort_rows(oracle, sub: SubProblem, rng: Rng, compare_fn,
                   trace: list | None = None) -> tuple[int, ...]:
    """Sort the live rows ascending by entrywise domination.

    Picks a uniform pivot row, reads the pivot's full restricted row
    (len(cols) edge queries), compares every other live row to the pivot via
    compare_fn, and recurses: rows below the pivot keep the pivot's
    1-columns, rows above keep its 0-columns, which keeps every subproblem
    square up to one extra column.

    compare_fn(oracle, row, pivot, cols, rng) -> (Ordering, witness column or
    None).  When a witness is given it is cross-checked against the pivot's
    known bits; a mismatch means the partition is inconsistent and raises.
    Exactly one comparison is made per (row, pivot) pair, so the number of
    compare_fn calls matches textbook quicksort with the same pivot choices.
    """
    rows, cols = sub.rows, sub.cols
    if not len(rows) <= len(cols) <= len(rows) + 1:
        raise InconsistencyError(f"subproblem shape broken: {len(rows)} rows, {len(cols)} cols")
    if trace is not None:
        trace.append(sub)
    if len(rows) <= 1:
        return rows

    pivot = rows[rng.next_below(len(rows))]
    pivot_bits = {k: oracle.edge_query(pivot, k) for k in cols}
    one_cols = tuple(k for k in cols if pivot_bits[k])
    zero_cols = tuple(k for k in cols if not pivot_bits[k])

    below: list[int] = []
    above: list[int] = []
    for r in rows:
        if r == pivot:
            continue
        ordering, witness = compare_fn(oracle, r, pivot, cols, rng)
        if witness is not None:
            # A LESS witness saw pivot=1 there; a GREATER witness saw pivot=0.
            expected = 1 if ordering is Ordering.LESS else 0
            if pivot_bits[witness] != expected:
                raise InconsistencyError(
                    f"row {r} vs pivot {pivot}: witness column {witness} contradicts the pivot row"
                )
        (below if ordering is Ordering.LESS else above).append(r)

    left = quicksort_rows(oracle, SubProblem(tuple(below), one_cols), rng, compare_fn, trace)
    right = quicksort_rows(oracle, SubProblem(tuple(above), zero_cols), rng, compare_fn, trace)
    return left + (pivot,) + right


def locate_columns(oracle, row_order: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Recover the column values B given the true ascending row order.

    Along the sorted rows every column reads 0...01...1 and flips at
    position B[j], so one binary search per column finds it; the last
    column's value is deduced from the permutation structure.
    """
    if n == 1:
        return (1,)
    vals = []
    for j in range(1, n):
        pos = _find_first_one(lambda p: oracle.edge_query(row_order[p - 1], j), n)
        vals.append(pos)
    vals.append(_missing_value(vals, n))
    return tuple(vals)


def learn_half_graph(oracle, n: int, rng: Rng,
                     cost_model: CostModel = CostModel.SAMPLING) -> HalfGraph:
    """Reconstruct a half graph: quicksort the rows, then place the columns.

    The cost model selects the comparison subroutine: SAMPLING (and UNIT)
    use :func:`compare_rows_sampling`; GROVER uses the oracle's charged
    whole-row compare.  Expected total charge is O(n log^2 n) under SAMPLING
    and O(n log n) under GROVER; the output is exact either way.
    """
    compare_fn = charged_compare if cost_model is CostModel.GROVER else sampling_compare
    full = tuple(range(1, n + 1))
    order = quicksort_rows(oracle, SubProblem(full, full), rng, compare_fn)
    row_vals = [0] * n
    for pos, r in enumerate(order, start=1):
        row_vals[r - 1] = pos
    col_vals = locate_columns(oracle, order, n)
    return HalfGraph(tuple(row_vals), col_vals)
