"""Command-line interface.

Seven subcommands tie the library into reproducible file-based runs:

* ``generate``  -- grow a network, write node/edge/trace files;
* ``fit``       -- grid-MLE one model against a network (+ optional trace);
* ``select``    -- fit several models, rank them, write comparisons;
* ``rank``      -- visibility curve with gini / ME summary;
* ``sample``    -- sampling-bias benchmark table;
* ``spread``    -- one contagion run: series plus equality summary;
* ``sweep``     -- parameter-grid ensemble runs, tidy long-format output.

Every subcommand accepts ``--config FILE`` with ``key=value`` lines
mirroring its flags (flags given on the command line win) and writes the
fully resolved configuration next to its outputs, so a run can be
reproduced from the config copy alone.  Exit status: 0 on success, 1 on
usage/config/input-format errors, 2 on runtime failures (directed-model
saturation, filesystem errors).

Numeric sweep flags accept ``start:stop:step`` ranges, endpoints inclusive
within 1e-12; ``--seeds`` additionally accepts a comma list.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .generate import (
    ALL_MODELS,
    DIRECTED_MODELS,
    GenParams,
    SaturationError,
    UNDIRECTED_MODELS,
    generate,
)
from .graph import MixingMatrix
from .inference import (
    fit_model,
    homophily_estimate,
    select_model,
    trace_from_graph,
)
from .netio import (
    NetworkFormatError,
    format_value,
    read_config,
    read_network,
    read_trace,
    write_config,
    write_network,
    write_trace,
)
from .ranking import rank_report, visibility
from .rng import make_rng
from .sampling import STRATEGIES, benchmark
from .spreading import SEED_CONDITIONS, cascade, equality_report, seeding, threshold_cascade

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the documented contract
    # reserves 2 for runtime failures, so route usage problems to 1 instead.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _write_table(path: Path, header: str, rows: list[list]) -> None:
    lines = [header]
    for row in rows:
        lines.append(",".join("" if cell is None else format_value(cell) for cell in row))
    path.write_text("\n".join(lines) + "\n", newline="\n")


def _parse_scalar(raw: str, kind: str):
    try:
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        if kind == "flag":
            if raw not in ("true", "false"):
                raise ValueError
            return raw == "true"
    except ValueError:
        raise _UsageError(f"cannot parse {raw!r} as {kind}") from None
    return raw


def _parse_range(raw: str, kind: str) -> list:
    """Parse ``start:stop:step`` (inclusive) or a comma list or a scalar."""
    if ":" in raw:
        parts = raw.split(":")
        if len(parts) != 3:
            raise _UsageError(f"range must be start:stop:step, got {raw!r}")
        start, stop, step = (float(_parse_scalar(p, "float")) for p in parts)
        if step <= 0:
            raise _UsageError(f"range step must be positive, got {raw!r}")
        values = []
        i = 0
        while True:
            v = round(start + i * step, 12)
            if v > stop + 1e-12:
                break
            values.append(v)
            i += 1
        if not values:
            raise _UsageError(f"range {raw!r} is empty")
    elif "," in raw:
        values = [float(_parse_scalar(p, "float")) for p in raw.split(",")]
    else:
        values = [float(_parse_scalar(raw, "float"))]
    if kind == "int":
        out = []
        for v in values:
            if v != int(v):
                raise _UsageError(f"expected integer values, got {v} in {raw!r}")
            out.append(int(v))
        return out
    return values


# Flag registry per subcommand: name -> (type, default).  The same names are
# the legal config-file keys; resolution order is flag > config > default.
_SPECS: dict[str, dict[str, tuple[str, object]]] = {
    "generate": {
        "model": ("str", None), "n": ("int", None), "m": ("int", None),
        "fm": ("float", None), "h": ("float", None),
        "h00": ("float", None), "h01": ("float", None),
        "h10": ("float", None), "h11": ("float", None),
        "ptc": ("float", None), "d": ("float", None),
        "gamma_a": ("float", None), "seed": ("int", 0),
        "out": ("str", "."), "prefix": ("str", "run"),
    },
    "fit": {
        "network": ("str", None), "directed": ("flag", False),
        "trace": ("str", None), "model": ("str", None),
        "seed": ("int", 0), "out": ("str", "."), "prefix": ("str", "run"),
    },
    "select": {
        "network": ("str", None), "directed": ("flag", False),
        "trace": ("str", None), "models": ("str", None),
        "criterion": ("str", "bic"), "seed": ("int", 0),
        "out": ("str", "."), "prefix": ("str", "run"),
    },
    "rank": {
        "network": ("str", None), "directed": ("flag", False),
        "metric": ("str", "degree"), "out": ("str", "."), "prefix": ("str", "run"),
    },
    "sample": {
        "network": ("str", None), "directed": ("flag", False),
        "strategies": ("str", ",".join(STRATEGIES)), "budgets": ("str", None),
        "reps": ("int", 10), "seed": ("int", 0),
        "out": ("str", "."), "prefix": ("str", "run"),
    },
    "spread": {
        "network": ("str", None), "directed": ("flag", False),
        "mode": ("str", "ic"), "p_in": ("float", None), "p_out": ("float", None),
        "theta": ("float", None), "seed_condition": ("str", "uniform"),
        "seed_count": ("int", 1), "max_steps": ("int", None),
        "seed": ("int", 0), "out": ("str", "."), "prefix": ("str", "run"),
    },
    "sweep": {
        "model": ("str", None), "n": ("sweep-int", None), "m": ("sweep-int", None),
        "fm": ("sweep-float", None), "h": ("sweep-float", None),
        "ptc": ("sweep-float", None), "d": ("sweep-float", None),
        "gamma_a": ("sweep-float", None), "seeds": ("sweep-int", [0]),
        "workers": ("int", 1), "out": ("str", "."), "prefix": ("str", "run"),
    },
}

_HELP = {
    "model": "model name: " + ", ".join(ALL_MODELS),
    "n": "number of nodes",
    "m": "edges per arriving node (undirected models)",
    "fm": "minority fraction in [0, 0.5]",
    "h": "symmetric homophily: H = [[h, 1-h], [1-h, h]]",
    "ptc": "triadic closure probability (patch)",
    "d": "directed edge density target",
    "gamma_a": "activity power-law exponent (directed models, default 2.5)",
    "seed": "rng seed",
    "seeds": "seed list or start:stop:step range (sweep)",
    "out": "output directory",
    "prefix": "output file prefix",
    "network": "path prefix of <prefix>_nodes.csv / <prefix>_edges.csv",
    "directed": "read the network as directed",
    "trace": "growth trace file; omitted => node-order assumption applies",
    "models": "comma-separated candidate models",
    "criterion": "ranking criterion: bic or aic",
    "metric": "ranking metric: degree, indegree, or pagerank",
    "strategies": "comma-separated sampling strategies",
    "budgets": "comma-separated node budgets",
    "reps": "repetitions per benchmark cell",
    "mode": "contagion mode: ic or threshold",
    "p_in": "within-class transmission probability (ic)",
    "p_out": "across-class transmission probability (ic)",
    "theta": "activation threshold in (0, 1] (threshold mode)",
    "seed_condition": "seeding condition: " + ", ".join(SEED_CONDITIONS),
    "seed_count": "number of cascade seed nodes",
    "max_steps": "step cap (default 10*n)",
    "workers": "parallel workers for sweep cells",
    "h00": "mixing matrix entry H[0][0] (overrides --h together with h01/h10/h11)",
    "h01": "mixing matrix entry H[0][1]",
    "h10": "mixing matrix entry H[1][0]",
    "h11": "mixing matrix entry H[1][1]",
}


def build_parser() -> _Parser:
    parser = _Parser(prog="graphmix", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command, spec in _SPECS.items():
        p = sub.add_parser(command)
        p.add_argument("--config", help="key=value config file; flags override it")
        for name, (kind, _default) in spec.items():
            flag = "--" + name.replace("_", "-")
            if kind == "flag":
                p.add_argument(flag, action="store_const", const="true", help=_HELP.get(name))
            else:
                p.add_argument(flag, type=str, help=_HELP.get(name))
    return parser


def _resolve(args, command: str) -> dict:
    """Merge flags over config-file values over defaults; parse by type."""
    spec = _SPECS[command]
    file_values: dict[str, str] = {}
    if args.config:
        file_values = read_config(args.config, allowed_keys=set(spec))
    resolved: dict = {}
    for name, (kind, default) in spec.items():
        raw = getattr(args, name)
        if raw is None:
            raw = file_values.get(name)
        if raw is None:
            resolved[name] = default
        elif kind.startswith("sweep-"):
            resolved[name] = _parse_range(raw, kind.removeprefix("sweep-"))
        else:
            resolved[name] = _parse_scalar(raw, kind)
    return resolved


def _config_record(command: str, cfg: dict) -> dict:
    record = {"command": command}
    for k, v in cfg.items():
        if isinstance(v, list):
            record[k] = ",".join(format_value(x) for x in v)
        else:
            record[k] = v
    return record


def _out_prefix(cfg) -> Path:
    out = Path(cfg["out"])
    out.mkdir(parents=True, exist_ok=True)
    return out / cfg["prefix"]


def _require(cfg, *names):
    for name in names:
        if cfg[name] is None:
            raise _UsageError(f"missing required option --{name.replace('_', '-')}")


def _mixing_from_cfg(cfg) -> MixingMatrix | None:
    cells = [cfg.get(k) for k in ("h00", "h01", "h10", "h11")]
    have_cells = [c is not None for c in cells]
    if any(have_cells):
        if not all(have_cells):
            raise _UsageError("give all four of --h00 --h01 --h10 --h11 or none")
        if cfg.get("h") is not None:
            raise _UsageError("--h conflicts with explicit --h00..--h11 entries")
        return MixingMatrix(np.array(cells, dtype=np.float64).reshape(2, 2))
    if cfg.get("h") is not None:
        return MixingMatrix.symmetric(cfg["h"])
    return None


def _load_network(cfg):
    _require(cfg, "network")
    return read_network(cfg["network"], directed=bool(cfg["directed"]))


def _load_trace(cfg, g):
    if cfg["trace"] is not None:
        return read_trace(cfg["trace"], g)
    return trace_from_graph(g, seed=cfg["seed"])


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_generate(args) -> int:
    cfg = _resolve(args, "generate")
    _require(cfg, "model", "n")
    params = GenParams(
        model=cfg["model"], n=cfg["n"], seed=cfg["seed"], m=cfg["m"],
        f_m=cfg["fm"], H=_mixing_from_cfg(cfg), p_tc=cfg["ptc"],
        d=cfg["d"], gamma_a=cfg["gamma_a"],
    )
    params.validate()
    g, trace = generate(params)
    prefix = _out_prefix(cfg)
    write_network(g, prefix)
    write_trace(trace, prefix.parent / (prefix.name + "_trace.csv"))
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("generate", cfg))
    return 0


_SELECTION_HEADER = "model,h_hat,ptc_hat,logL,k,n_events,AIC,BIC,order_assumed"


def _selection_rows(fits) -> list[list]:
    return [
        [f.model, f.h_hat, f.p_tc_hat, f.log_lik, f.k, f.n_events, f.aic, f.bic, f.order_assumed]
        for f in fits
    ]


def _cmd_fit(args) -> int:
    cfg = _resolve(args, "fit")
    _require(cfg, "model")
    g = _load_network(cfg)
    trace = _load_trace(cfg, g)
    fit = fit_model(trace, cfg["model"])
    prefix = _out_prefix(cfg)
    _write_table(prefix.parent / (prefix.name + "_selection.csv"), _SELECTION_HEADER, _selection_rows([fit]))
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("fit", cfg))
    return 0


def _cmd_select(args) -> int:
    cfg = _resolve(args, "select")
    _require(cfg, "models")
    g = _load_network(cfg)
    trace = _load_trace(cfg, g)
    table = select_model(trace, cfg["models"].split(","), criterion=cfg["criterion"])
    prefix = _out_prefix(cfg)
    _write_table(
        prefix.parent / (prefix.name + "_selection.csv"),
        _SELECTION_HEADER,
        _selection_rows(table.fits),
    )
    _write_table(
        prefix.parent / (prefix.name + "_comparisons.csv"),
        "model_a,model_b,log10_bf,lrt_stat,lrt_df,lrt_p",
        [[c.model_a, c.model_b, c.log10_bf, c.lrt_stat, c.lrt_df, c.lrt_p] for c in table.comparisons],
    )
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("select", cfg))
    return 0


def _cmd_rank(args) -> int:
    cfg = _resolve(args, "rank")
    g = _load_network(cfg)
    report = rank_report(g, cfg["metric"])
    prefix = _out_prefix(cfg)
    rows: list[list] = [
        [int(k), float(frac)] for k, frac in zip(report.curve.ks, report.curve.fractions)
    ]
    rows.append(["gini", report.gini])
    rows.append(["me", report.me])
    _write_table(prefix.parent / (prefix.name + "_visibility.csv"), "k_percent,minority_fraction", rows)
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("rank", cfg))
    return 0


def _cmd_sample(args) -> int:
    cfg = _resolve(args, "sample")
    _require(cfg, "budgets")
    g = _load_network(cfg)
    strategies = cfg["strategies"].split(",")
    budgets = [int(_parse_scalar(b, "int")) for b in cfg["budgets"].split(",")]
    report = benchmark(g, strategies, budgets, reps=cfg["reps"], seed=cfg["seed"])
    prefix = _out_prefix(cfg)
    _write_table(
        prefix.parent / (prefix.name + "_bias.csv"),
        "strategy,budget,reps,minority_bias,minority_bias_std,degree_bias,degree_bias_std,"
        "population_fm,population_mean_degree",
        [
            [c.strategy, c.budget, c.reps, c.minority_bias, c.minority_bias_std,
             c.degree_bias, c.degree_bias_std, report.f_m, report.mean_degree]
            for c in report.cells
        ],
    )
    _write_table(
        prefix.parent / (prefix.name + "_bias_reps.csv"),
        "strategy,budget,rep,minority_fraction,mean_degree",
        [[r.strategy, r.budget, r.rep, r.minority_fraction, r.mean_degree] for r in report.records],
    )
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("sample", cfg))
    return 0


def _cmd_spread(args) -> int:
    cfg = _resolve(args, "spread")
    g = _load_network(cfg)
    rng = make_rng(cfg["seed"])
    seeds = seeding(g, cfg["seed_condition"], cfg["seed_count"], rng)
    if cfg["mode"] == "ic":
        _require(cfg, "p_in", "p_out")
        trace = cascade(g, seeds, cfg["p_in"], cfg["p_out"], rng, max_steps=cfg["max_steps"])
    elif cfg["mode"] == "threshold":
        _require(cfg, "theta")
        trace = threshold_cascade(g, seeds, cfg["theta"], max_steps=cfg["max_steps"])
    else:
        raise _UsageError(f"mode must be 'ic' or 'threshold', got {cfg['mode']!r}")
    report = equality_report(trace, g.labels)
    prefix = _out_prefix(cfg)
    overall = trace.overall_fractions()
    _write_table(
        prefix.parent / (prefix.name + "_series.csv"),
        "t,frac_class0,frac_class1,frac_all",
        [
            [t, trace.class_fractions[t, 0], trace.class_fractions[t, 1], overall[t]]
            for t in range(trace.n_steps + 1)
        ],
    )
    _write_table(
        prefix.parent / (prefix.name + "_equality.csv"),
        "t,equality",
        [[t, report.equality[t]] for t in range(report.equality.size)],
    )
    _write_table(
        prefix.parent / (prefix.name + "_summary.csv"),
        "key,value",
        [
            ["efficiency", "never" if report.efficiency is None else report.efficiency],
            ["terminal_frac_class0", report.terminal_fractions[0]],
            ["terminal_frac_class1", report.terminal_fractions[1]],
            ["seeds", ";".join(str(s) for s in trace.seeds)],
        ],
    )
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("spread", cfg))
    return 0


# sweep ---------------------------------------------------------------------

_SWEEP_PARAM_ORDER = ("n", "m", "fm", "h", "ptc", "d", "gamma_a")


def _sweep_cell_metrics(params: GenParams) -> list[tuple[str, float | None]]:
    g, _ = generate(params)
    metrics: list[tuple[str, float | None]] = [("edges", float(g.num_edges))]
    metrics.append(("homophily", homophily_estimate(g)))
    report = None
    counts = g.class_counts()
    if counts[0] and counts[1]:
        report = rank_report(g, "degree")
        vis10 = float(report.curve.fractions[report.curve.ks.tolist().index(10)])
        metrics += [
            ("gini_degree", report.gini),
            ("me_degree", report.me),
            ("vis10_degree", vis10),
        ]
        if g.directed:
            rep_in = rank_report(g, "indegree")
            vis10_in = float(rep_in.curve.fractions[rep_in.curve.ks.tolist().index(10)])
            metrics += [
                ("gini_indegree", rep_in.gini),
                ("me_indegree", rep_in.me),
                ("vis10_indegree", vis10_in),
            ]
    return metrics


def _sweep_job(job):
    cell, params = job
    return cell, params.seed, _sweep_cell_metrics(params)


def _cmd_sweep(args) -> int:
    cfg = _resolve(args, "sweep")
    _require(cfg, "model", "n")
    model = cfg["model"]
    varied = [p for p in _SWEEP_PARAM_ORDER if isinstance(cfg[p], list) and len(cfg[p]) > 1]
    axes = {p: cfg[p] if isinstance(cfg[p], list) else [cfg[p]] for p in _SWEEP_PARAM_ORDER}

    cells: list[dict] = [{}]
    for p in _SWEEP_PARAM_ORDER:
        cells = [dict(c, **{p: v}) for c in cells for v in axes[p]]

    jobs = []
    for cell in cells:
        for seed in cfg["seeds"]:
            params = GenParams(
                model=model,
                n=int(cell["n"]) if cell["n"] is not None else None,
                seed=int(seed),
                m=int(cell["m"]) if cell["m"] is not None else None,
                f_m=cell["fm"],
                H=None if cell["h"] is None else MixingMatrix.symmetric(cell["h"]),
                p_tc=cell["ptc"],
                d=cell["d"],
                gamma_a=cell["gamma_a"],
            )
            params.validate()
            jobs.append((cell, params))

    workers = cfg["workers"]
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_sweep_job, jobs)
    else:
        results = [_sweep_job(job) for job in jobs]

    header = ",".join(list(varied) + ["seed", "metric", "value"])
    rows: list[list] = []
    for cell, seed, metrics in results:
        lead = [cell[p] for p in varied]
        for name, value in metrics:
            rows.append(lead + [seed, name, value])
    prefix = _out_prefix(cfg)
    _write_table(prefix.parent / (prefix.name + "_sweep.csv"), header, rows)
    write_config(prefix.parent / (prefix.name + "_config.txt"), _config_record("sweep", cfg))
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "fit": _cmd_fit,
    "select": _cmd_select,
    "rank": _cmd_rank,
    "sample": _cmd_sample,
    "spread": _cmd_spread,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NetworkFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SaturationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
