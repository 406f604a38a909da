"""edgeprobe: a query-complexity lab for hidden matchings and half graphs.

Learn a hidden bipartite adjacency matrix from one of three families --
matchings, column-permuted half graphs, half graphs -- through counting
oracles, measure the query cost of the reconstruction algorithms, and verify
the matching small-n lower bounds by brute force.
"""

from .bounds_lab import (
    Certificate,
    cra_value_matching,
    exact_det_depth,
    family_size,
    info_lower_bound,
    one_certificate,
    quantum_adversary_params_colperm,
    verify_unique,
    zero_certificate,
)
from .harness import (
    ExperimentConfig,
    ExperimentRecord,
    FitResult,
    fit_growth,
    fit_points,
    read_csv,
    run_experiment,
    write_csv,
)
from .instances import (
    ColumnPermutedHalfGraph,
    FamilyTag,
    HalfGraph,
    HiddenInstance,
    Matching,
    bipartite_view,
    dense,
    gen_instance,
    half_graph_from_lists,
    interleaved_lists,
    matrix_from_threshold_list,
    parse_line,
    threshold_list_view,
    to_line,
)
from .learners import (
    SubProblem,
    compare_rows_sampling,
    learn_column_permuted,
    learn_half_graph,
    learn_matching_full,
    learn_matching_greedy,
    locate_columns,
    quicksort_rows,
    sort_threshold_list,
)
from .oracles import (
    CostModel,
    InconsistencyError,
    LazyMatchingAdversary,
    Ordering,
    QueryOracle,
    QueryTranscript,
    comparison_view,
    lazy_adversary_oracle,
)
from .rng import Rng, mix64

__version__ = "0.1.0"
