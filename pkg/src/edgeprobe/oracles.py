"""Query oracles: all access to hidden instances goes through here.

An oracle answers edge, threshold, and comparison queries against a wrapped
instance, appending one record per query to an append-only transcript.
Repeated identical queries are answered consistently and each one is counted;
deduplication, if wanted, is the learner's job.

Record kinds and charging:

* ``EDGE``, ``THRESHOLD``, ``COMPARISON`` -- one matrix-entry probe each,
  charge 1, counted in ``total_queries``.
* ``CHARGED_COMPARE`` -- a whole-row comparison charged
  ceil(sqrt(m / d)) where m is the live column-set size and d the restricted
  Hamming distance between the two rows.  This books the expected cost of a
  search-based comparison subroutine without executing one; it adds to
  ``total_charge`` only.

Oracles are mutable (they own a transcript) and must not be shared between
concurrently running learners; use one oracle per run.
"""

import math
from enum import Enum

import numpy as np

from .instances import (
    ColumnPermutedHalfGraph,
    HalfGraph,
    HiddenInstance,
    Matching,
    _check_index,
)

EDGE = "EDGE"
THRESHOLD = "THRESHOLD"
COMPARISON = "COMPARISON"
CHARGED_COMPARE = "CHARGED_COMPARE"


class CostModel(Enum):
    """Charging rule for oracle interactions.

    UNIT charges 1 per entry probe.  SAMPLING is identical to UNIT (the cost
    of sampling-based comparisons emerges from their repeated probes).
    GROVER additionally books ceil(sqrt(m/d)) per charged row comparison.
    """

    UNIT = "unit"
    SAMPLING = "sampling"
    GROVER = "grover"


class Ordering(Enum):
    """Outcome of a row comparison: LESS means the first row is entrywise <=."""

    LESS = 0
    GREATER = 1


class InconsistencyError(RuntimeError):
    """Oracle answers or learner state violate the promised family structure."""


def ceil_sqrt_ratio(a: int, b: int) -> int:
    """ceil(sqrt(a / b)) for positive integers, in exact integer arithmetic."""
    if a <= 0 or b <= 0:
        raise ValueError("ratio parts must be positive")
    c = math.isqrt((a + b - 1) // b)
    while c * c * b < a:
        c += 1
    return c


class QueryTranscript:
    """Ordered, append-only record of (kind, args, answer, charge)."""

    __slots__ = ("records", "total_queries", "total_charge")

    def __init__(self):
        self.records: list[tuple[str, tuple[int, ...], int, int]] = []
        self.total_queries = 0
        self.total_charge = 0

    def append(self, kind: str, args: tuple[int, ...], answer: int, charge: int) -> None:
        self.records.append((kind, args, answer, charge))
        if kind != CHARGED_COMPARE:
            self.total_queries += 1
        self.total_charge += charge

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def to_lines(self, fmt: str = "csv") -> list[str]:
        """Export as ``kind,args...,answer,charge`` lines (fmt 'csv' or 'text')."""
        if fmt not in ("csv", "text"):
            raise ValueError(f"unknown transcript format: {fmt!r}")
        sep = "," if fmt == "csv" else " "
        lines = []
        if fmt == "csv":
            lines.append("kind,args...,answer,charge")
        for kind, args, answer, charge in self.records:
            lines.append(sep.join([kind, *map(str, args), str(answer), str(charge)]))
        return lines


class QueryOracle:
    """Counting oracle over a concrete hidden instance."""

    def __init__(self, instance: HiddenInstance, cost_model: CostModel = CostModel.UNIT):
        self.instance = instance
        self.n = instance.n
        self.cost_model = cost_model
        self.transcript = QueryTranscript()
        self._entry = instance.entry  # bound once; edge_query is the hot path
        self._colset_bvals: dict[tuple[int, ...], np.ndarray] = {}

    def edge_query(self, i: int, j: int) -> int:
        """Probe cell (i, j); one EDGE record, charge 1."""
        bit = self._entry(i, j)  # entry() validates the index range
        self.transcript.append(EDGE, (i, j), bit, 1)
        return bit

    def threshold_query(self, j: int, t: int) -> int:
        """Answer "is X[j] >= t?" for the hidden weight list of a column-permuted half graph.

        Realized as the single entry probe at the translated cell
        (n - t + 1, j), since X[j] >= n - i + 1 iff cell (i, j) is 1.
        """
        if not isinstance(self.instance, ColumnPermutedHalfGraph):
            raise TypeError("threshold_query requires a column-permuted half graph oracle")
        _check_index(t, self.n, "threshold")
        bit = self._entry(self.n - t + 1, j)
        self.transcript.append(THRESHOLD, (j, t), bit, 1)
        return bit

    def comparison_query(self, i: int, j: int) -> int:
        """Answer "is R[i] >= B[j]?" for a half graph; the single entry probe at (i, j)."""
        if not isinstance(self.instance, HalfGraph):
            raise TypeError("comparison_query requires a half-graph oracle")
        bit = self._entry(i, j)
        self.transcript.append(COMPARISON, (i, j), bit, 1)
        return bit

    def charged_row_compare(self, i1: int, i2: int, col_set) -> Ordering:
        """Compare two half-graph rows restricted to col_set, at search-model cost.

        Requires the rows to differ somewhere on col_set (equal restricted
        rows signal a learner bug and raise).  Returns the true ordering and
        books one CHARGED_COMPARE record of charge ceil(sqrt(m/d)); no EDGE
        records are appended.
        """
        if not isinstance(self.instance, HalfGraph):
            raise TypeError("charged_row_compare requires a half-graph oracle")
        n = self.n
        _check_index(i1, n, "row")
        _check_index(i2, n, "row")
        if i1 == i2:
            raise ValueError("rows must be distinct")
        m = len(col_set)
        if m == 0:
            raise ValueError("column set must be nonempty")
        r = self.instance.row_vals
        v1, v2 = r[i1 - 1], r[i2 - 1]
        lo, hi = (v1, v2) if v1 < v2 else (v2, v1)
        # The same column set is compared against many rows in a row-sorting
        # pass, so its B values are gathered once and reused.
        key = col_set if isinstance(col_set, tuple) else tuple(col_set)
        bvals = self._colset_bvals.get(key)
        if bvals is None:
            b = self.instance.col_vals
            for k in key:
                _check_index(k, n, "column")
            bvals = np.fromiter((b[k - 1] for k in key), dtype=np.int64, count=m)
            self._colset_bvals[key] = bvals
        d = int(np.count_nonzero((bvals > lo) & (bvals <= hi)))
        if d == 0:
            raise InconsistencyError(
                f"rows {i1} and {i2} are equal on the given column set (learner bug)"
            )
        ordering = Ordering.LESS if v1 < v2 else Ordering.GREATER
        self.transcript.append(CHARGED_COMPARE, (i1, i2, m), ordering.value, ceil_sqrt_ratio(m, d))
        return ordering


class ComparisonView:
    """Adapter exposing a half-graph oracle through comparison queries only.

    ``edge_query(i, j)`` on the view issues ``comparison_query(i, j)`` on the
    wrapped oracle -- the two query languages agree cell for cell, so any
    edge-probing learner runs unchanged and its transcript comes out in
    COMPARISON records.
    """

    def __init__(self, oracle: QueryOracle):
        if not isinstance(oracle.instance, HalfGraph):
            raise TypeError("ComparisonView requires a half-graph oracle")
        self.oracle = oracle
        self.n = oracle.n
        self.cost_model = oracle.cost_model
        self.transcript = oracle.transcript

    def edge_query(self, i: int, j: int) -> int:
        return self.oracle.comparison_query(i, j)

    def charged_row_compare(self, i1: int, i2: int, col_set) -> Ordering:
        return self.oracle.charged_row_compare(i1, i2, col_set)


def comparison_view(oracle: QueryOracle) -> ComparisonView:
    return ComparisonView(oracle)


class LazyMatchingAdversary:
    """Adversarial matching oracle that commits to nothing it does not have to.

    Each queried cell is answered 0 whenever some perfect matching in the
    still-allowed cell set avoids it; otherwise the cell is forced and the
    answer is 1.  At every moment at least one perfect matching is consistent
    with all answers given, so any correct learner is driven to its
    worst-case query count.

    Feasibility is decided incrementally: the adversary maintains one
    perfect matching of the allowed cells and repairs it with an
    augmenting-path search only when a query lands on a matching edge.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        self.n = n
        self.cost_model = CostModel.UNIT
        self.transcript = QueryTranscript()
        # 0-indexed internals.
        self.allowed = [[True] * n for _ in range(n)]
        self._answers: dict[tuple[int, int], int] = {}
        self._match_row = list(range(n))  # row r currently matched to column _match_row[r]
        self._match_col = list(range(n))

    def edge_query(self, i: int, j: int) -> int:
        _check_index(i, self.n, "row")
        _check_index(j, self.n, "column")
        key = (i, j)
        bit = self._answers.get(key)
        if bit is None:
            bit = self._decide(i - 1, j - 1)
            self._answers[key] = bit
        self.transcript.append(EDGE, (i, j), bit, 1)
        return bit

    def final_instance(self) -> Matching:
        """One matching consistent with every answer given so far."""
        return Matching(tuple(c + 1 for c in self._match_row))

    # internal

    def _decide(self, r: int, c: int) -> int:
        if not self.allowed[r][c]:
            # Already excluded by forced-cell pruning: 0 is the only consistent answer.
            return 0
        if self._match_row[r] != c:
            self.allowed[r][c] = False
            return 0
        # The query hits the current matching; try to reroute row r without (r, c).
        self.allowed[r][c] = False
        self._match_row[r] = -1
        self._match_col[c] = -1
        if self._augment(r, [False] * self.n):
            return 0
        # No perfect matching avoids (r, c): the cell is forced.
        self.allowed[r][c] = True
        self._match_row[r] = c
        self._match_col[c] = r
        self._prune_forced(r, c)
        return 1

    def _augment(self, r: int, visited: list[bool]) -> bool:
        row = self.allowed[r]
        for c in range(self.n):
            if row[c] and not visited[c]:
                visited[c] = True
                owner = self._match_col[c]
                if owner == -1 or self._augment(owner, visited):
                    self._match_row[r] = c
                    self._match_col[c] = r
                    return True
        return False

    def _prune_forced(self, r: int, c: int) -> None:
        # Every consistent matching uses (r, c); the rest of row r and
        # column c can appear in none, so drop those cells.
        for k in range(self.n):
            if k != c:
                self.allowed[r][k] = False
            if k != r:
                self.allowed[k][c] = False


def lazy_adversary_oracle(n: int) -> LazyMatchingAdversary:
    return LazyMatchingAdversary(n)
