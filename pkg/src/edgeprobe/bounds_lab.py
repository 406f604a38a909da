"""Brute-force verification of lower bounds and certificates.

Everything here enumerates small instances exactly:

* :func:`exact_det_depth` -- the exact worst-case query count of an optimal
  deterministic learner, as the minimax value of the query game over the
  consistent-instance set.
* :func:`info_lower_bound` -- the binary-outcome counting bound
  ceil(log2 |family|).
* :func:`cra_value_matching` -- the classical relational adversary value of
  the column-swap relation on matchings, in exact rational arithmetic.
* :func:`quantum_adversary_params_colperm` -- extremal degrees (m, m', l, l')
  of the adjacent-weight column-swap relation on column-permuted half
  graphs, giving the adversary bound sqrt(m m' / (l l')).
* :func:`zero_certificate` / :func:`one_certificate` / :func:`verify_unique`
  -- fixed-polarity cell sets that pin down the lower-triangular matrix
  within the half-graph family, checked by exhaustive enumeration.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from .instances import FamilyTag

# Enumeration caps: instance counts explode factorially, so the exact
# searches are restricted to sizes where they finish in seconds.
DEPTH_CAPS = {FamilyTag.MATCHING: 5, FamilyTag.COL_PERMUTED: 5, FamilyTag.HALF_GRAPH: 3}
CRA_CAP = 5
ADVERSARY_CAP = 7
CERTIFICATE_CAP = 6


def family_size(family: FamilyTag, n: int) -> int:
    """Number of instances: n! matchings, n! weight lists, (n!)^2 half graphs."""
    import math

    if family is FamilyTag.HALF_GRAPH:
        return math.factorial(n) ** 2
    return math.factorial(n)


def info_lower_bound(family_size: int) -> int:
    """ceil(log2 family_size): no binary-answer strategy can do better."""
    if family_size < 1:
        raise ValueError("family size must be >= 1")
    return (family_size - 1).bit_length()


def _enumerate(family: FamilyTag, n: int):
    """All instances as hashable encodings, plus a cell evaluator."""
    perms = list(permutations(range(1, n + 1)))
    if family is FamilyTag.MATCHING:
        return perms, lambda p, i, j: 1 if p[i - 1] == j else 0
    if family is FamilyTag.COL_PERMUTED:
        return perms, lambda x, i, j: 1 if x[j - 1] >= n - i + 1 else 0
    if family is FamilyTag.HALF_GRAPH:
        pairs = [(r, b) for r in perms for b in perms]
        return pairs, lambda rb, i, j: 1 if rb[0][i - 1] >= rb[1][j - 1] else 0
    raise ValueError(f"unknown family: {family!r}")


def exact_det_depth(family: FamilyTag, n: int, max_n: int | None = None) -> int:
    """Exact minimax depth of the query game: the best worst-case query count.

    Value of a consistent set S: 0 if |S| = 1, else the minimum over useful
    cells of 1 + max over the two answers of the value of the surviving set.
    Memoized on the consistent set; query cells inducing the same split are
    deduplicated, branches are cut against the running best, and the counting
    bound ceil(log2 |S|) stops the search as soon as it is met.  At the root
    the family's relabeling symmetry collapses the first query to a single
    representative cell (one cell for matchings and half graphs, one cell per
    row for column-permuted half graphs, whose columns alone are symmetric).
    """
    cap = max_n if max_n is not None else DEPTH_CAPS[family]
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap} for {family.value}")

    instances, cell_value = _enumerate(family, n)
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    # ones[c] = the instances with a 1 at cell c; splits are set intersections.
    ones = {c: frozenset(idx for idx, x in enumerate(instances) if cell_value(x, *c))
            for c in cells}
    memo: dict[frozenset, int] = {}

    def value(s: frozenset, candidates) -> int:
        if len(s) == 1:
            return 0
        cached = memo.get(s)
        if cached is not None:
            return cached
        floor = (len(s) - 1).bit_length()
        splits = []
        seen = set()
        for c in candidates:
            s1 = s & ones[c]
            if not s1 or len(s1) == len(s):
                continue  # the cell is determined on s; querying it is redundant
            if s1 in seen:
                continue
            seen.add(s1)
            seen.add(s - s1)
            splits.append(s1)
        # Balanced splits first: they reach the counting floor soonest.
        splits.sort(key=lambda s1: abs(2 * len(s1) - len(s)))
        best = len(s)  # n^2 queries always suffice; any split beats this
        for s1 in splits:
            s0 = s - s1
            big, small = (s1, s0) if len(s1) >= len(s0) else (s0, s1)
            v = 1 + value(big, cells)
            if v >= best:
                continue
            v = max(v, 1 + value(small, cells))
            if v < best:
                best = v
                if best == floor:
                    break
        memo[s] = best
        return best

    root = frozenset(range(len(instances)))
    if family is FamilyTag.COL_PERMUTED:
        root_cells = [(i, 1) for i in range(1, n + 1)]
    else:
        root_cells = [(1, 1)]
    return value(root, root_cells)


def cra_value_matching(n: int) -> Fraction:
    """Classical relational adversary value for the column-swap relation.

    Relate two matchings iff one is a single column swap of the other, and
    evaluate min over related pairs and differing cells of
    max(theta(M1, cell), theta(M2, cell)), where theta(M, c) is the ratio of
    M's total relation weight to the weight crossing cell c.  Exact
    enumeration; the result equals C(n, 2).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n} (no related pairs below n=2)")
    if n > CRA_CAP:
        raise ValueError(f"n={n} exceeds the enumeration cap {CRA_CAP}")
    swaps = list(combinations(range(1, n + 1), 2))

    def swap_cols(p: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
        # Swapping matrix columns a and b exchanges the values a and b in the
        # row -> column map.
        return tuple(b if v == a else a if v == b else v for v in p)

    def theta(p: tuple[int, ...], cell: tuple[int, int]) -> Fraction:
        i, j = cell
        total = 0
        crossing = 0
        for a, b in swaps:
            q = swap_cols(p, a, b)
            total += 1
            if (p[i - 1] == j) != (q[i - 1] == j):
                crossing += 1
        return Fraction(total, crossing)

    best: Fraction | None = None
    for p in permutations(range(1, n + 1)):
        for a, b in swaps:
            q = swap_cols(p, a, b)
            i1, i2 = p.index(a) + 1, p.index(b) + 1
            for i in (i1, i2):
                for j in (a, b):
                    if (p[i - 1] == j) == (q[i - 1] == j):
                        continue
                    v = max(theta(p, (i, j)), theta(q, (i, j)))
                    if best is None or v < best:
                        best = v
    assert best is not None
    return best


def quantum_adversary_params_colperm(n: int) -> tuple[int, int, int, int]:
    """Extremal degrees of the adjacent-weight column-swap relation on weight lists.

    Two lists are related iff one arises from the other by exchanging the
    columns of Hamming weight j and j + 1 for some j.  Returns
    (m, m', l, l'): the minimum relation degree on each side and the maximum
    number of related partners differing at any single fixed cell.  The
    adversary bound is sqrt(m m' / (l l')); enumeration yields
    (n-1, n-1, 1, 1).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > ADVERSARY_CAP:
        raise ValueError(f"n={n} exceeds the enumeration cap {ADVERSARY_CAP}")

    def entry(x: tuple[int, ...], i: int, j: int) -> int:
        return 1 if x[j - 1] >= n - i + 1 else 0

    def partners(x: tuple[int, ...]):
        pos = {v: idx for idx, v in enumerate(x)}
        out = []
        for w in range(1, n):
            a, b = pos[w], pos[w + 1]
            y = list(x)
            y[a], y[b] = y[b], y[a]
            out.append(tuple(y))
        return out

    min_degree = None
    max_cell = 0
    for x in permutations(range(1, n + 1)):
        related = partners(x)
        degree = len(set(related))
        if min_degree is None or degree < min_degree:
            min_degree = degree
        per_cell: dict[tuple[int, int], int] = {}
        for y in related:
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if entry(x, i, j) != entry(y, i, j):
                        key = (i, j)
                        per_cell[key] = per_cell.get(key, 0) + 1
        if per_cell:
            max_cell = max(max_cell, max(per_cell.values()))
    # The relation is symmetric, so both sides share the same extremes.
    return (min_degree, min_degree, max_cell, max_cell)


@dataclass(frozen=True)
class Certificate:
    """A set of fixed-polarity cells of the lower-triangular matrix L_n."""

    n: int
    cells: frozenset[tuple[int, int]]
    polarity: int

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)


def zero_certificate(n: int) -> Certificate:
    """The 0-cells on the first two superdiagonals: {(i, j) : j in {i+1, i+2}}.

    Size 2n - 3; consistency with these 2n - 3 zeros pins L_n uniquely within
    the half-graph family, so a deterministic learner's all-0 query path can
    be as short as O(n).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    cells = {(i, j) for i in range(1, n + 1) for j in (i + 1, i + 2) if j <= n}
    return Certificate(n, frozenset(cells), 0)


def one_certificate(n: int) -> Certificate:
    """A 1-polarity analogue: the diagonal and first subdiagonal cells.

    {(i, j) : i in {j, j+1}}, size 2n - 1.  Column by column from the right,
    the two forced 1s per column rule it out as the lightest remaining
    column, which forces the weight order and hence L_n.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    cells = {(i, j) for j in range(1, n + 1) for i in (j, j + 1) if i <= n}
    return Certificate(n, frozenset(cells), 1)


def count_consistent(cert: Certificate) -> int:
    """How many half graphs carry the certificate's polarity on all its cells."""
    n = cert.n
    if n > CERTIFICATE_CAP:
        raise ValueError(f"n={n} exceeds the enumeration cap {CERTIFICATE_CAP}")
    perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int16)
    ok = np.ones((len(perms), len(perms)), dtype=bool)
    want = bool(cert.polarity)
    for i, j in cert.cells:
        # entry (i, j) of the (R, B) half graph is [R[i] >= B[j]]
        cell = perms[:, i - 1][:, None] >= perms[None, :, j - 1]
        ok &= cell == want
    return int(ok.sum())


def verify_unique(cert: Certificate, n: int) -> bool:
    """True iff exactly one half graph is consistent with the certificate."""
    if n != cert.n:
        raise ValueError(f"certificate is for n={cert.n}, not n={n}")
    return count_consistent(cert) == 1
