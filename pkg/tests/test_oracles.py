"""Oracles: counting, translations, charged compares, lazy adversary."""

from itertools import permutations

import pytest

from edgeprobe.instances import (
    ColumnPermutedHalfGraph,
    FamilyTag,
    HalfGraph,
    Matching,
    gen_instance,
)
from edgeprobe.learners import learn_matching_greedy
from edgeprobe.oracles import (
    CHARGED_COMPARE,
    COMPARISON,
    EDGE,
    THRESHOLD,
    CostModel,
    InconsistencyError,
    LazyMatchingAdversary,
    Ordering,
    QueryOracle,
    ceil_sqrt_ratio,
    comparison_view,
)
from edgeprobe.rng import Rng


def identity_half_graph(n):
    ident = tuple(range(1, n + 1))
    return HalfGraph(ident, ident)


def test_edge_query_counts_every_probe():
    o = QueryOracle(Matching((1, 2)))
    assert o.edge_query(1, 1) == 1
    assert o.transcript.total_queries == 1
    assert o.edge_query(1, 1) == 1
    assert o.transcript.total_queries == 2  # no oracle-side caching
    assert o.transcript.total_charge == 2


def test_edge_query_col_permuted():
    o = QueryOracle(ColumnPermutedHalfGraph((2, 1)))
    assert o.edge_query(1, 2) == 0  # column 2 is 0,1 top to bottom
    with pytest.raises(ValueError):
        o.edge_query(0, 1)
    with pytest.raises(ValueError):
        o.edge_query(1, 3)


def test_threshold_query_examples():
    o = QueryOracle(ColumnPermutedHalfGraph((2, 1)))
    assert o.threshold_query(1, 2) == 1  # X[1]=2 >= 2
    assert o.threshold_query(2, 2) == 0  # X[2]=1 < 2
    assert o.transcript.total_queries == 2
    kinds = [rec[0] for rec in o.transcript]
    assert kinds == [THRESHOLD, THRESHOLD]


def test_threshold_query_matches_predicate_exhaustively():
    for n in range(1, 7):
        for x in permutations(range(1, n + 1)):
            o = QueryOracle(ColumnPermutedHalfGraph(x))
            count = 0
            for j in range(1, n + 1):
                for t in range(1, n + 1):
                    count += 1
                    assert o.threshold_query(j, t) == (1 if x[j - 1] >= t else 0)
                    assert o.transcript.total_queries == count


def test_threshold_query_rejects_wrong_family_and_range():
    o = QueryOracle(Matching((1, 2)))
    with pytest.raises(TypeError):
        o.threshold_query(1, 1)
    o2 = QueryOracle(ColumnPermutedHalfGraph((1, 2)))
    with pytest.raises(ValueError):
        o2.threshold_query(1, 3)


def test_comparison_query_examples():
    n = 5
    o = QueryOracle(identity_half_graph(n))
    for i in range(1, n + 1):
        assert o.comparison_query(i, i) == 1  # R[i] >= B[i] at equality
    o2 = QueryOracle(HalfGraph((2, 1), (1, 2)))
    assert o2.comparison_query(2, 2) == 0  # R[2]=1 < B[2]=2
    with pytest.raises(TypeError):
        QueryOracle(Matching((1,))).comparison_query(1, 1)


def test_comparison_equals_edge_on_same_instance():
    h = gen_instance(FamilyTag.HALF_GRAPH, 6, 11)
    a, b = QueryOracle(h), QueryOracle(h)
    for i in range(1, 7):
        for j in range(1, 7):
            assert a.comparison_query(i, j) == b.edge_query(i, j)


def test_ceil_sqrt_ratio():
    assert ceil_sqrt_ratio(1, 1) == 1
    assert ceil_sqrt_ratio(2, 1) == 2
    assert ceil_sqrt_ratio(4, 1) == 2
    assert ceil_sqrt_ratio(5, 1) == 3
    assert ceil_sqrt_ratio(8, 7) == 2
    assert ceil_sqrt_ratio(100, 100) == 1
    with pytest.raises(ValueError):
        ceil_sqrt_ratio(0, 1)


def test_charged_compare_extreme_rows():
    # Rows n and 1 of the lower-triangular matrix: d = n - 1, charge 2 for n >= 2.
    for n in (2, 5, 9):
        o = QueryOracle(identity_half_graph(n), CostModel.GROVER)
        cols = tuple(range(1, n + 1))
        assert o.charged_row_compare(n, 1, cols) is Ordering.GREATER
        kind, args, answer, charge = o.transcript.records[-1]
        assert kind == CHARGED_COMPARE
        assert charge == ceil_sqrt_ratio(n, n - 1) == 2
        assert o.transcript.total_queries == 0  # no EDGE records


def test_charged_compare_adjacent_rows():
    for n in (2, 4, 10):
        o = QueryOracle(identity_half_graph(n))
        cols = tuple(range(1, n + 1))
        assert o.charged_row_compare(1, 2, cols) is Ordering.LESS
        assert o.transcript.records[-1][3] == ceil_sqrt_ratio(n, 1)


def test_charged_compare_single_column():
    o = QueryOracle(identity_half_graph(4))
    o.charged_row_compare(1, 4, (2,))
    assert o.transcript.records[-1][3] == 1


def test_charged_compare_truthful_and_bounded():
    # Ordering always agrees with exhaustively reading both rows; charge <= m.
    for seed in range(10):
        h = gen_instance(FamilyTag.HALF_GRAPH, 8, seed)
        o = QueryOracle(h)
        rng = Rng(seed)
        for _ in range(20):
            i1 = 1 + rng.next_below(8)
            i2 = 1 + rng.next_below(8)
            if i1 == i2:
                continue
            cols = tuple(k for k in range(1, 9) if rng.next_below(2))
            if not cols:
                continue
            r1 = [h.entry(i1, k) for k in cols]
            r2 = [h.entry(i2, k) for k in cols]
            if r1 == r2:
                with pytest.raises(InconsistencyError):
                    o.charged_row_compare(i1, i2, cols)
                continue
            got = o.charged_row_compare(i1, i2, cols)
            want = Ordering.LESS if all(a <= b for a, b in zip(r1, r2)) else Ordering.GREATER
            assert got is want
            assert 1 <= o.transcript.records[-1][3] <= len(cols)


def test_charged_compare_rejects_bad_args():
    o = QueryOracle(identity_half_graph(3))
    with pytest.raises(ValueError):
        o.charged_row_compare(1, 1, (1, 2))
    with pytest.raises(ValueError):
        o.charged_row_compare(1, 2, ())
    with pytest.raises(TypeError):
        QueryOracle(Matching((1,))).charged_row_compare(1, 1, (1,))


def test_transcript_conservation_and_export():
    h = gen_instance(FamilyTag.HALF_GRAPH, 5, 2)
    o = QueryOracle(h)
    o.edge_query(1, 1)
    o.comparison_query(2, 3)
    o.charged_row_compare(1, 5, (1, 2, 3))
    probes = sum(1 for rec in o.transcript if rec[0] in (EDGE, THRESHOLD, COMPARISON))
    assert o.transcript.total_queries == probes == 2
    assert o.transcript.total_charge >= o.transcript.total_queries
    lines = o.transcript.to_lines("csv")
    assert lines[0] == "kind,args...,answer,charge"
    assert lines[1].startswith("EDGE,1,1,")
    text = o.transcript.to_lines("text")
    assert text[0].startswith("EDGE 1 1 ")
    with pytest.raises(ValueError):
        o.transcript.to_lines("xml")


def test_comparison_view_translates_edge_queries():
    h = gen_instance(FamilyTag.HALF_GRAPH, 6, 9)
    o = QueryOracle(h)
    view = comparison_view(o)
    assert view.edge_query(3, 4) == h.entry(3, 4)
    assert o.transcript.records[0][0] == COMPARISON
    with pytest.raises(TypeError):
        comparison_view(QueryOracle(Matching((1, 2))))


# lazy adversary


def consistent_matchings(n, transcript):
    """All matchings agreeing with every answered cell (test-side brute force)."""
    answered = {}
    for kind, (i, j), bit, _ in transcript:
        assert kind == EDGE
        assert answered.get((i, j), bit) == bit, "adversary contradicted itself"
        answered[(i, j)] = bit
    out = []
    for p in permutations(range(1, n + 1)):
        if all((1 if p[i - 1] == j else 0) == bit for (i, j), bit in answered.items()):
            out.append(p)
    return out


def test_adversary_n2_walkthrough():
    adv = LazyMatchingAdversary(2)
    assert adv.edge_query(1, 1) == 0  # either matching could still be hidden
    # now the anti-diagonal matching is forced
    assert adv.edge_query(1, 2) == 1
    assert adv.edge_query(2, 1) == 1
    assert adv.final_instance() == Matching((2, 1))


def test_adversary_forces_greedy_to_worst_case():
    for n in range(2, 13):
        adv = LazyMatchingAdversary(n)
        learn_matching_greedy(adv, n)
        assert adv.transcript.total_queries == n * (n - 1) // 2


def test_adversary_final_instance_consistent():
    rng = Rng(77)
    for n in (3, 5, 8):
        adv = LazyMatchingAdversary(n)
        for _ in range(2 * n * n):
            adv.edge_query(1 + rng.next_below(n), 1 + rng.next_below(n))
        final = adv.final_instance()
        for kind, (i, j), bit, _ in adv.transcript:
            assert final.entry(i, j) == bit


def test_adversary_soundness_small_n():
    # After every answer some matching stays consistent, and every answered 1
    # is present in all consistent matchings (the cell really was forced).
    rng = Rng(5)
    for n in (2, 3, 4, 5):
        for _ in range(4):
            adv = LazyMatchingAdversary(n)
            for _ in range(n * n):
                i, j = 1 + rng.next_below(n), 1 + rng.next_below(n)
                bit = adv.edge_query(i, j)
                remaining = consistent_matchings(n, adv.transcript)
                assert remaining, "no consistent matching left"
                if bit == 1:
                    assert all(p[i - 1] == j for p in remaining)


def test_adversary_repeated_queries_consistent():
    adv = LazyMatchingAdversary(3)
    first = [adv.edge_query(1, 1), adv.edge_query(2, 2)]
    again = [adv.edge_query(1, 1), adv.edge_query(2, 2)]
    assert first == again
    assert adv.transcript.total_queries == 4
