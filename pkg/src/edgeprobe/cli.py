"""Command-line interface.

Subcommands:

* ``gen``     -- emit an instance fixture line for (family, n, seed).
* ``learn``   -- one learner run (generated instance, fixture file, or the
                 lazy adversary); prints a transcript summary, optionally
                 dumps the transcript.
* ``sweep``   -- run an experiment grid and write the versioned CSV.
* ``fit``     -- fit a growth model to a sweep CSV; prints JSON.
* ``bounds``  -- brute-force verification table of the small-n lower bounds.
* ``certify`` -- print the zero-certificate pattern and its uniqueness check.
"""

import argparse
import json
import sys

from . import bounds_lab
from .harness import (
    ExperimentConfig,
    LEARNERS,
    fit_growth,
    read_csv,
    run_experiment,
    write_csv,
)
from .instances import FamilyTag, gen_instance, parse_line, to_line
from .learners import (
    learn_column_permuted,
    learn_half_graph,
    learn_matching_full,
    learn_matching_greedy,
)
from .oracles import CostModel, LazyMatchingAdversary, QueryOracle
from .rng import Rng, mix64

_FAMILIES = {f.value: f for f in FamilyTag}
_COST_MODELS = {c.value: c for c in CostModel}


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sizes list: {text!r}") from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=sorted(_FAMILIES), help="instance family")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--cost-model", choices=sorted(_COST_MODELS), default="unit")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edgeprobe",
                                 description="hidden matching / half graph query lab")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit an instance fixture")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write the fixture here instead of stdout")

    p = sub.add_parser("learn", help="run one learner and summarize the transcript")
    _add_common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--learner", choices=sorted(LEARNERS), required=True)
    p.add_argument("--in", dest="input", help="instance fixture file (replaces --family/--n/--seed)")
    p.add_argument("--transcript", help="dump the full transcript to this file")
    p.add_argument("--transcript-format", choices=["csv", "text"], default="csv")

    p = sub.add_parser("sweep", help="run an experiment grid, write CSV")
    _add_common(p)
    p.add_argument("--learner", choices=sorted(LEARNERS))
    p.add_argument("--sizes", type=_parse_sizes)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--wall", action="store_true", help="write measured wall times "
                   "(off by default: CSV stays byte-deterministic)")
    p.add_argument("--config", help="flat key=value file supplying defaults for "
                   "family/learner/cost_model/sizes/trials/seed")

    p = sub.add_parser("fit", help="fit a growth model to a sweep CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--model", choices=["poly", "nlogn", "nlog2n"], required=True)
    p.add_argument("--value", choices=["total_queries", "total_charge"],
                   default="total_queries")
    p.add_argument("--out", help="write the JSON here instead of stdout")

    p = sub.add_parser("bounds", help="small-n lower-bound verification table")
    p.add_argument("--max-n", type=int, default=4)

    p = sub.add_parser("certify", help="zero-certificate pattern + uniqueness check")
    p.add_argument("--n", type=int, required=True)

    return ap


def _cmd_gen(args) -> int:
    if not args.family:
        print("gen requires --family", file=sys.stderr)
        return 2
    inst = gen_instance(_FAMILIES[args.family], args.n, args.seed)
    line = to_line(inst)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(line + "\n")
    else:
        print(line)
    return 0


def _cmd_learn(args) -> int:
    cost_model = _COST_MODELS[args.cost_model]
    if args.learner == "greedy_adversary":
        if args.n is None:
            print("learn --learner greedy_adversary requires --n", file=sys.stderr)
            return 2
        oracle = LazyMatchingAdversary(args.n)
        out = learn_matching_greedy(oracle, args.n)
        correct = out == oracle.final_instance()
        inst_desc = f"lazy adversary n={args.n}"
    else:
        if args.input:
            with open(args.input) as fh:
                inst = parse_line(fh.read().strip())
        else:
            if not args.family or args.n is None:
                print("learn requires --in or both --family and --n", file=sys.stderr)
                return 2
            inst = gen_instance(_FAMILIES[args.family], args.n, args.seed)
        expected = LEARNERS[args.learner]
        if inst.family is not expected:
            print(f"learner {args.learner} runs on {expected.value}, "
                  f"got a {inst.family.value} instance", file=sys.stderr)
            return 2
        oracle = QueryOracle(inst, cost_model)
        if args.learner == "greedy":
            out = learn_matching_greedy(oracle, inst.n)
        elif args.learner == "full":
            out = learn_matching_full(oracle, inst.n)
        elif args.learner == "binary_search":
            out = learn_column_permuted(oracle, inst.n)
        else:
            rng = Rng(mix64(args.seed, inst.n, 0, 2))
            out = learn_half_graph(oracle, inst.n, rng, cost_model)
        correct = out == inst
        inst_desc = to_line(inst)
    t = oracle.transcript
    print(f"instance:      {inst_desc}")
    print(f"learned:       {to_line(out)}")
    print(f"correct:       {int(correct)}")
    print(f"total_queries: {t.total_queries}")
    print(f"total_charge:  {t.total_charge}")
    if args.transcript:
        with open(args.transcript, "w") as fh:
            fh.write("\n".join(t.to_lines(args.transcript_format)) + "\n")
        print(f"transcript:    {args.transcript} ({len(t)} records)")
    return 0 if correct else 1


def _read_config_file(path) -> dict[str, str]:
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line (want key=value): {raw!r}")
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    return out


def _cmd_sweep(args) -> int:
    family, learner, cost_model = args.family, args.learner, args.cost_model
    sizes, trials, seed = args.sizes, args.trials, args.seed
    if args.config:
        cfg_file = _read_config_file(args.config)
        family = family or cfg_file.get("family")
        learner = learner or cfg_file.get("learner")
        if "cost_model" in cfg_file and args.cost_model == "unit":
            cost_model = cfg_file["cost_model"]
        if sizes is None and "sizes" in cfg_file:
            sizes = _parse_sizes(cfg_file["sizes"])
        if "trials" in cfg_file and args.trials == 1:
            trials = int(cfg_file["trials"])
        if "seed" in cfg_file and args.seed == 0:
            seed = int(cfg_file["seed"])
    if not family or not learner or sizes is None:
        print("sweep requires --family, --learner and --sizes (or a --config file)",
              file=sys.stderr)
        return 2
    cfg = ExperimentConfig(_FAMILIES[family], learner, _COST_MODELS[cost_model],
                           tuple(sizes), trials, seed)
    records = run_experiment(cfg)
    write_csv(records, args.out, include_wall=args.wall)
    bad = sum(1 for r in records if not r.correct)
    print(f"wrote {len(records)} records to {args.out}" + (f" ({bad} INCORRECT)" if bad else ""))
    return 1 if bad else 0


def _cmd_fit(args) -> int:
    records = read_csv(args.input)
    fit = fit_growth(records, args.model.upper(), args.value)
    payload = json.dumps({"model": fit.model, "constant": fit.constant,
                          "slope": fit.slope, "residual": fit.residual})
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0


def _table(rows) -> str:
    widths = [max(len(str(r[c])) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(str(v).ljust(w) for v, w in zip(r, widths)) for r in rows)


def _cmd_bounds(args) -> int:
    rows = [("quantity", "n", "computed", "predicted", "match")]
    ok = True

    def add(quantity, n, computed, predicted):
        nonlocal ok
        match = computed == predicted
        ok = ok and match
        rows.append((quantity, n, computed, predicted, "yes" if match else "NO"))

    for n in range(2, min(args.max_n, bounds_lab.DEPTH_CAPS[FamilyTag.MATCHING]) + 1):
        add("det_depth(matching)", n, bounds_lab.exact_det_depth(FamilyTag.MATCHING, n),
            n * (n - 1) // 2)
    for n in range(2, min(args.max_n, 4) + 1):
        depth = bounds_lab.exact_det_depth(FamilyTag.COL_PERMUTED, n)
        counting = bounds_lab.info_lower_bound(bounds_lab.family_size(FamilyTag.COL_PERMUTED, n))
        match = depth >= counting
        ok = ok and match
        rows.append(("det_depth(col_permuted) >= counting", n, f"{depth} >= {counting}",
                     "depth >= counting", "yes" if match else "NO"))
    for n in range(2, min(args.max_n, bounds_lab.CRA_CAP) + 1):
        add("cra(matching)", n, bounds_lab.cra_value_matching(n), n * (n - 1) // 2)
    for n in range(2, min(args.max_n, bounds_lab.ADVERSARY_CAP) + 1):
        add("adversary_params(col_permuted)", n,
            bounds_lab.quantum_adversary_params_colperm(n), (n - 1, n - 1, 1, 1))
    print(_table(rows))
    print("all match" if ok else "MISMATCH FOUND")
    return 0 if ok else 1


def _cmd_certify(args) -> int:
    n = args.n
    cert = bounds_lab.zero_certificate(n)
    cells = cert.sorted_cells()
    print(f"zero-certificate for n={n}: {len(cells)} cells (2n-3 = {2 * n - 3})")
    grid = [["." for _ in range(n)] for _ in range(n)]
    for i, j in cells:
        grid[i - 1][j - 1] = "0"
    for row in grid:
        print(" ".join(row))
    unique = bounds_lab.verify_unique(cert, n)
    print(f"UNIQUE={'true' if unique else 'false'}")
    return 0 if unique else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "learn": _cmd_learn,
        "sweep": _cmd_sweep,
        "fit": _cmd_fit,
        "bounds": _cmd_bounds,
        "certify": _cmd_certify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
