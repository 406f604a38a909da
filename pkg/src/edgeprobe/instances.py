"""Hidden instances: matchings, column-permuted half graphs, and half graphs.

Every instance represents an n x n 0/1 matrix in permutation form (O(n)
memory).  Rows and columns are 1-indexed with row 1 at the top.  The three
families are:

* ``Matching`` -- permutation matrices: entry (i, j) = 1 iff perm[i] = j.
* ``ColumnPermutedHalfGraph`` -- column j reads 0^(n-X[j]) 1^(X[j]) top to
  bottom, where X is a permutation of 1..n giving column Hamming weights;
  equivalently entry (i, j) = 1 iff X[j] >= n - i + 1.  The weight list X is
  also the hidden list of the threshold-sorting view.
* ``HalfGraph`` -- entry (i, j) = 1 iff R[i] >= B[j] for two hidden
  permutations R (row values) and B (column values); the same data is the
  two-list instance of interleaved bipartite sorting (nuts and bolts).

Instances are immutable and safe to share across concurrent readers.
"""

from dataclasses import dataclass
from enum import Enum

from .rng import Rng, mix64


class FamilyTag(Enum):
    MATCHING = "matching"
    COL_PERMUTED = "col_permuted"
    HALF_GRAPH = "half_graph"


# Stable per-family codes folded into gen_instance seeds.
_FAMILY_CODE = {
    FamilyTag.MATCHING: 1,
    FamilyTag.COL_PERMUTED: 2,
    FamilyTag.HALF_GRAPH: 3,
}


def _check_permutation(seq: tuple[int, ...], what: str) -> None:
    n = len(seq)
    if n < 1:
        raise ValueError(f"{what} must have length >= 1")
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError(f"{what} is not a permutation of 1..{n}: {seq!r}")


def _check_index(i: int, n: int, what: str) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"{what} out of range: {i} not in 1..{n}")


@dataclass(frozen=True)
class Matching:
    """Perfect matching on [n] x [n]; perm[i] is the right neighbor of i."""

    perm: tuple[int, ...]

    def __post_init__(self):
        _check_permutation(self.perm, "perm")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def family(self) -> FamilyTag:
        return FamilyTag.MATCHING

    def entry(self, i: int, j: int) -> int:
        n = len(self.perm)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"cell ({i}, {j}) out of range for n={n}")
        return 1 if self.perm[i - 1] == j else 0


@dataclass(frozen=True)
class ColumnPermutedHalfGraph:
    """Column permutation of the lower-triangular matrix L_n.

    ``col_weights[j]`` is the Hamming weight of column j, so the columns'
    weights form a permutation of 1..n and each column is monotone 0...01...1
    top to bottom.
    """

    col_weights: tuple[int, ...]

    def __post_init__(self):
        _check_permutation(self.col_weights, "col_weights")

    @property
    def n(self) -> int:
        return len(self.col_weights)

    @property
    def family(self) -> FamilyTag:
        return FamilyTag.COL_PERMUTED

    def entry(self, i: int, j: int) -> int:
        n = len(self.col_weights)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"cell ({i}, {j}) out of range for n={n}")
        return 1 if self.col_weights[j - 1] >= n - i + 1 else 0


@dataclass(frozen=True)
class HalfGraph:
    """Row and column permutation of L_n, stored as value lists (R, B).

    Cell (i, j) is 1 iff ``row_vals[i] >= col_vals[j]``.  Row i of the matrix
    has Hamming weight row_vals[i]; column j has weight n - col_vals[j] + 1.
    """

    row_vals: tuple[int, ...]
    col_vals: tuple[int, ...]

    def __post_init__(self):
        _check_permutation(self.row_vals, "row_vals")
        _check_permutation(self.col_vals, "col_vals")
        if len(self.row_vals) != len(self.col_vals):
            raise ValueError("row_vals and col_vals must have equal length")

    @property
    def n(self) -> int:
        return len(self.row_vals)

    @property
    def family(self) -> FamilyTag:
        return FamilyTag.HALF_GRAPH

    def entry(self, i: int, j: int) -> int:
        n = len(self.row_vals)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"cell ({i}, {j}) out of range for n={n}")
        return 1 if self.row_vals[i - 1] >= self.col_vals[j - 1] else 0


HiddenInstance = Matching | ColumnPermutedHalfGraph | HalfGraph


def gen_instance(family: FamilyTag, n: int, seed: int) -> HiddenInstance:
    """Draw a uniformly random member of a family, reproducibly.

    The same (family, n, seed) triple always yields the same instance; the
    stream seed is mix64(family_code, n, seed).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = Rng(mix64(_FAMILY_CODE[family], n, seed))
    if family is FamilyTag.MATCHING:
        return Matching(rng.permutation(n))
    if family is FamilyTag.COL_PERMUTED:
        return ColumnPermutedHalfGraph(rng.permutation(n))
    if family is FamilyTag.HALF_GRAPH:
        return HalfGraph(rng.permutation(n), rng.permutation(n))
    raise ValueError(f"unknown family: {family!r}")


def threshold_list_view(inst: ColumnPermutedHalfGraph) -> tuple[int, ...]:
    """The hidden list X of the threshold-sorting view: X[j] = weight of column j."""
    return inst.col_weights


def matrix_from_threshold_list(x) -> ColumnPermutedHalfGraph:
    """Inverse of :func:`threshold_list_view`; rejects non-permutations."""
    return ColumnPermutedHalfGraph(tuple(x))


def bipartite_view(inst: HalfGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two hidden lists (R, B) of the bipartite-sorting view."""
    return inst.row_vals, inst.col_vals


def half_graph_from_lists(r, b) -> HalfGraph:
    """Inverse of :func:`bipartite_view`; rejects non-permutations."""
    return HalfGraph(tuple(r), tuple(b))


def interleaved_lists(inst: HalfGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Perfectly interleaved integer lists (R', B') with R'[i] = 2 R[i], B'[j] = 2 B[j] - 1.

    Sorting R' and B' together alternates between the lists, and
    R'[i] > B'[j] iff R[i] >= B[j], i.e. iff cell (i, j) is 1.
    """
    r, b = bipartite_view(inst)
    return tuple(2 * v for v in r), tuple(2 * v - 1 for v in b)


def dense(inst: HiddenInstance) -> list[list[int]]:
    """Materialize the full 0/1 matrix.  Only for small n (tests, verifiers)."""
    n = inst.n
    return [[inst.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def to_line(inst: HiddenInstance) -> str:
    """Serialize as ``family n perm...`` (one or two permutations, 1-indexed)."""
    if isinstance(inst, Matching):
        vals = inst.perm
    elif isinstance(inst, ColumnPermutedHalfGraph):
        vals = inst.col_weights
    else:
        vals = inst.row_vals + inst.col_vals
    return " ".join([inst.family.value, str(inst.n), *map(str, vals)])


def parse_line(line: str) -> HiddenInstance:
    """Parse the :func:`to_line` format; rejects malformed input."""
    parts = line.split()
    if len(parts) < 3:
        raise ValueError(f"malformed instance line: {line!r}")
    try:
        family = FamilyTag(parts[0])
    except ValueError:
        raise ValueError(f"unknown family token: {parts[0]!r}") from None
    n = int(parts[1])
    vals = [int(p) for p in parts[2:]]
    expect = 2 * n if family is FamilyTag.HALF_GRAPH else n
    if n < 1 or len(vals) != expect:
        raise ValueError(f"expected {expect} values for {family.value} n={n}, got {len(vals)}")
    if family is FamilyTag.MATCHING:
        return Matching(tuple(vals))
    if family is FamilyTag.COL_PERMUTED:
        return ColumnPermutedHalfGraph(tuple(vals))
    return HalfGraph(tuple(vals[:n]), tuple(vals[n:]))
