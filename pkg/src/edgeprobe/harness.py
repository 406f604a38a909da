"""Experiment driver: seeded sweeps over (family, n, trial), CSV records, fits.

A sweep derives one seed per (n, trial) cell from the base seed with
:func:`edgeprobe.rng.mix64`, generates the instance, runs the learner against
a fresh counting oracle, and verifies the output against the hidden instance.
Identical configs therefore produce identical records; the CSV writer emits
byte-identical files for identical configs (wall-clock times are recorded in
memory but written as 0 unless explicitly requested, to keep the files
deterministic).

Trials are independent -- each owns its oracle and Rng stream -- so they could
run concurrently; records are sorted by (n, trial) before writing either way.
"""

import csv
import io
import math
import time
from dataclasses import dataclass

import numpy as np

from .instances import FamilyTag, gen_instance
from .learners import (
    learn_column_permuted,
    learn_half_graph,
    learn_matching_full,
    learn_matching_greedy,
)
from .oracles import CostModel, LazyMatchingAdversary, QueryOracle
from .rng import Rng, mix64

SCHEMA_VERSION = 1
CSV_HEADER = ("schema_version,family,learner,cost_model,n,trial,seed,"
              "total_queries,total_charge,wall_micros,correct")

# Salts for deriving the per-trial instance and learner seed streams.
_INSTANCE_SALT = 1
_LEARNER_SALT = 2


@dataclass(frozen=True)
class ExperimentConfig:
    family: FamilyTag
    learner: str
    cost_model: CostModel
    sizes: tuple[int, ...]
    trials: int
    base_seed: int

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.sizes or list(self.sizes) != sorted(set(self.sizes)):
            raise ValueError("sizes must be nonempty and strictly increasing")
        if any(n < 1 for n in self.sizes):
            raise ValueError("sizes must be positive")
        family = LEARNERS.get(self.learner)
        if family is None:
            raise ValueError(f"unknown learner: {self.learner!r} (known: {sorted(LEARNERS)})")
        if family is not self.family:
            raise ValueError(f"learner {self.learner!r} runs on {family.value}, "
                             f"not {self.family.value}")


@dataclass(frozen=True)
class ExperimentRecord:
    family: FamilyTag
    learner: str
    cost_model: CostModel
    n: int
    trial: int
    seed: int
    total_queries: int
    total_charge: int
    wall_micros: int
    correct: int


# learner name -> family it reconstructs
LEARNERS = {
    "greedy": FamilyTag.MATCHING,
    "greedy_adversary": FamilyTag.MATCHING,
    "full": FamilyTag.MATCHING,
    "binary_search": FamilyTag.COL_PERMUTED,
    "quicksort": FamilyTag.HALF_GRAPH,
}


def run_trial(cfg: ExperimentConfig, n: int, trial: int) -> ExperimentRecord:
    """One (n, trial) cell: generate, learn, verify, record."""
    seed = mix64(cfg.base_seed, n, trial, _INSTANCE_SALT)
    rng = Rng(mix64(cfg.base_seed, n, trial, _LEARNER_SALT))
    start = time.perf_counter()
    if cfg.learner == "greedy_adversary":
        oracle = LazyMatchingAdversary(n)
        out = learn_matching_greedy(oracle, n)
        correct = out == oracle.final_instance()
    else:
        inst = gen_instance(cfg.family, n, seed)
        oracle = QueryOracle(inst, cfg.cost_model)
        if cfg.learner == "greedy":
            out = learn_matching_greedy(oracle, n)
        elif cfg.learner == "full":
            out = learn_matching_full(oracle, n)
        elif cfg.learner == "binary_search":
            out = learn_column_permuted(oracle, n)
        else:
            out = learn_half_graph(oracle, n, rng, cfg.cost_model)
        correct = out == inst
    wall = int((time.perf_counter() - start) * 1e6)
    t = oracle.transcript
    return ExperimentRecord(cfg.family, cfg.learner, cfg.cost_model, n, trial, seed,
                            t.total_queries, t.total_charge, wall, int(correct))


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRecord]:
    records = [run_trial(cfg, n, trial)
               for n in cfg.sizes
               for trial in range(1, cfg.trials + 1)]
    records.sort(key=lambda r: (r.n, r.trial))
    return records


def records_to_csv(records, include_wall: bool = False) -> str:
    """Render records in the versioned CSV schema.

    wall_micros is written as 0 by default so that identical configs yield
    byte-identical files; pass include_wall=True for human-facing timings.
    """
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in records:
        wall = r.wall_micros if include_wall else 0
        buf.write(f"{SCHEMA_VERSION},{r.family.value},{r.learner},{r.cost_model.value},"
                  f"{r.n},{r.trial},{r.seed},{r.total_queries},{r.total_charge},"
                  f"{wall},{r.correct}\n")
    return buf.getvalue()


def write_csv(records, path, include_wall: bool = False) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(records_to_csv(records, include_wall))


def read_csv(path) -> list[ExperimentRecord]:
    """Parse a sweep CSV, rejecting schema mismatches."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_HEADER.split(","):
            raise ValueError(f"unexpected CSV header: {header}")
        records = []
        for row in reader:
            if len(row) != 11:
                raise ValueError(f"malformed CSV row: {row}")
            if int(row[0]) != SCHEMA_VERSION:
                raise ValueError(f"unsupported schema version: {row[0]}")
            records.append(ExperimentRecord(
                FamilyTag(row[1]), row[2], CostModel(row[3]), int(row[4]), int(row[5]),
                int(row[6]), int(row[7]), int(row[8]), int(row[9]), int(row[10])))
    return records


@dataclass(frozen=True)
class FitResult:
    model: str       # POLY | NLOGN | NLOG2N
    constant: float  # mean of cost / shape(n)
    slope: float     # log-log least-squares slope
    residual: float  # L2 norm of the log-space residuals


_SHAPES = {
    "POLY": lambda n: n * n,
    "NLOGN": lambda n: n * math.log(n),
    "NLOG2N": lambda n: n * math.log(n) ** 2,
}


def fit_points(points, model: str) -> FitResult:
    """Fit (n, cost) pairs: log-log slope plus the model's normalized constant.

    points: iterable of (n, cost) with cost > 0; needs at least 3 distinct n.
    """
    if model not in _SHAPES:
        raise ValueError(f"unknown model {model!r} (known: {sorted(_SHAPES)})")
    pts = sorted((int(n), float(c)) for n, c in points)
    ns = [n for n, _ in pts]
    if len(set(ns)) < 3:
        raise ValueError("need at least 3 distinct n values to fit")
    log_n = np.log([n for n, _ in pts])
    log_c = np.log([c for _, c in pts])
    coeffs, res, *_ = np.polyfit(log_n, log_c, 1, full=True)
    slope = float(coeffs[0])
    residual = float(np.sqrt(res[0])) if len(res) else 0.0
    shape = _SHAPES[model]
    constant = float(np.mean([c / shape(n) for n, c in pts]))
    return FitResult(model, constant, slope, residual)


def fit_growth(records, model: str, value: str = "total_queries") -> FitResult:
    """Aggregate records to mean cost per n, then fit (see :func:`fit_points`)."""
    if value not in ("total_queries", "total_charge"):
        raise ValueError(f"value must be total_queries or total_charge, got {value!r}")
    by_n: dict[int, list[int]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(getattr(r, value))
    points = [(n, sum(v) / len(v)) for n, v in sorted(by_n.items())]
    return fit_points(points, model)


def mean_cost_by_n(records, value: str = "total_queries") -> dict[int, float]:
    by_n: dict[int, list[int]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(getattr(r, value))
    return {n: sum(v) / len(v) for n, v in sorted(by_n.items())}
