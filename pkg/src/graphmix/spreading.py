"""Contagion simulation with group-dependent transmission.

``cascade`` is a discrete-time independent cascade: a node activated at
step t gets exactly one chance, at step t+1, to activate each neighbor
that was inactive when the step began, succeeding with probability p_in
for a same-class neighbor and p_out otherwise.  ``threshold_cascade`` is
the deterministic complex-contagion counterpart: an inactive node turns
active once the active fraction of its (in-)neighborhood reaches theta.

Attempts inside a step run in ascending node id (frontier order, then
neighbor order) and every attempt consumes one rng draw whether or not
the target was already activated earlier in the same step, so draw
sequences do not depend on within-step race outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import AttributedGraph
from .ranking import rank_nodes
from .rng import rand_below, sample_without_replacement

__all__ = [
    "CascadeTrace",
    "EqualityReport",
    "cascade",
    "threshold_cascade",
    "equality_report",
    "seeding",
    "crossing_time",
    "SEED_CONDITIONS",
]

SEED_CONDITIONS = ("uniform", "majority-only", "minority-only", "top-degree")


@dataclass(frozen=True)
class CascadeTrace:
    """Outcome of one contagion run.

    ``activation_time[v]`` is the step at which v turned active, -1 for
    never.  ``class_fractions[t, c]`` is the informed fraction of class c
    at step t (rows 0..T with T the last step that activated anyone); an
    empty class reports 0.0 throughout.
    """

    activation_time: np.ndarray
    seeds: np.ndarray
    params: dict[str, float]
    class_fractions: np.ndarray
    class_counts: tuple[int, int]

    @property
    def n_steps(self) -> int:
        return self.class_fractions.shape[0] - 1

    def overall_fractions(self) -> np.ndarray:
        n0, n1 = self.class_counts
        n = n0 + n1
        return (self.class_fractions[:, 0] * n0 + self.class_fractions[:, 1] * n1) / n


@dataclass(frozen=True)
class EqualityReport:
    """Equality/efficiency summary of a cascade.

    ``equality[t]`` is the smaller class informed fraction over the larger
    (1.0 when both are zero); ``efficiency`` is the first step at which the
    overall informed fraction reaches one half, or None if it never does.
    """

    equality: np.ndarray
    efficiency: int | None
    terminal_fractions: tuple[float, float]
    overall: np.ndarray


def _check_seeds(g: AttributedGraph, seeds) -> np.ndarray:
    arr = np.asarray(seeds, dtype=np.int64)
    if arr.size == 0:
        raise ValueError("seed set must be non-empty")
    if arr.min() < 0 or arr.max() >= g.n:
        raise ValueError("seed ids out of range")
    arr = np.unique(arr)
    return arr


def _fractions_from_times(times: np.ndarray, labels: np.ndarray) -> tuple[np.ndarray, tuple[int, int]]:
    n0 = int((labels == 0).sum())
    n1 = int((labels == 1).sum())
    horizon = int(times.max()) if times.size else 0
    horizon = max(horizon, 0)
    rows = np.zeros((horizon + 1, 2))
    for t in range(horizon + 1):
        informed = (times >= 0) & (times <= t)
        if n0:
            rows[t, 0] = float((informed & (labels == 0)).sum()) / n0
        if n1:
            rows[t, 1] = float((informed & (labels == 1)).sum()) / n1
    return rows, (n0, n1)


def cascade(
    g: AttributedGraph,
    seeds,
    p_in: float,
    p_out: float,
    rng: np.random.Generator,
    max_steps: int | None = None,
) -> CascadeTrace:
    """Independent cascade with within/across-class transmission rates."""
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {p}")
    seeds = _check_seeds(g, seeds)
    if max_steps is None:
        max_steps = 10 * g.n
    labels = g.labels
    times = np.full(g.n, -1, dtype=np.int64)
    times[seeds] = 0
    frontier = list(seeds)

    t = 0
    while frontier and t < max_steps:
        t += 1
        inactive_at_start = times < 0
        newly: list[int] = []
        for u in frontier:
            lu = labels[u]
            for v in sorted(g.neighbors(u)):
                if not inactive_at_start[v]:
                    continue
                roll = rng.random()
                p = p_in if labels[v] == lu else p_out
                if roll < p and times[v] < 0:
                    times[v] = t
                    newly.append(v)
        frontier = sorted(newly)

    rows, counts = _fractions_from_times(times, labels)
    return CascadeTrace(
        activation_time=times,
        seeds=seeds,
        params={"p_in": float(p_in), "p_out": float(p_out)},
        class_fractions=rows,
        class_counts=counts,
    )


def threshold_cascade(
    g: AttributedGraph,
    seeds,
    theta: float,
    max_steps: int | None = None,
) -> CascadeTrace:
    """Deterministic synchronous threshold contagion.

    An inactive node activates when the active fraction of its neighborhood
    (in-neighborhood when directed) reaches ``theta``; nodes with no
    relevant neighbors never activate.  Stops at the fixed point.
    """
    if not 0.0 < theta <= 1.0:
        raise ValueError(f"theta must lie in (0, 1], got {theta}")
    seeds = _check_seeds(g, seeds)
    if max_steps is None:
        max_steps = 10 * g.n

    n = g.n
    src_l: list[int] = []
    dst_l: list[int] = []
    for u, v in g.edges():
        src_l.append(u)
        dst_l.append(v)
        if not g.directed:
            src_l.append(v)
            dst_l.append(u)
    src = np.asarray(src_l, dtype=np.int64)
    dst = np.asarray(dst_l, dtype=np.int64)
    relevant_deg = np.bincount(dst, minlength=n).astype(np.float64)
    has_nbrs = relevant_deg > 0

    times = np.full(n, -1, dtype=np.int64)
    times[seeds] = 0
    active = times == 0
    for t in range(1, max_steps + 1):
        if src.size:
            active_in = np.bincount(dst, weights=active[src].astype(np.float64), minlength=n)
        else:
            active_in = np.zeros(n)
        ready = (
            ~active
            & has_nbrs
            & (active_in >= theta * relevant_deg - 1e-12)
        )
        if not ready.any():
            break
        times[ready] = t
        active |= ready

    rows, counts = _fractions_from_times(times, g.labels)
    return CascadeTrace(
        activation_time=times,
        seeds=seeds,
        params={"theta": float(theta)},
        class_fractions=rows,
        class_counts=counts,
    )


def equality_report(trace: CascadeTrace, labels: np.ndarray) -> EqualityReport:
    """Equality index series, time-to-half coverage, terminal fractions."""
    labels = np.asarray(labels)
    if labels.size != trace.activation_time.size:
        raise ValueError("labels length does not match the cascade")
    rows, counts = _fractions_from_times(trace.activation_time, labels)
    lo = rows.min(axis=1)
    hi = rows.max(axis=1)
    equality = np.where(hi > 0.0, np.divide(lo, np.where(hi > 0.0, hi, 1.0)), 1.0)
    n0, n1 = counts
    overall = (rows[:, 0] * n0 + rows[:, 1] * n1) / (n0 + n1)
    reached = np.nonzero(overall >= 0.5)[0]
    efficiency = int(reached[0]) if reached.size else None
    return EqualityReport(
        equality=equality,
        efficiency=efficiency,
        terminal_fractions=(float(rows[-1, 0]), float(rows[-1, 1])),
        overall=overall,
    )


def crossing_time(series: np.ndarray, level: float) -> float | None:
    """First (fractionally interpolated) time a non-decreasing series hits level.

    Returns 0.0 when the series starts at or above the level, None when it
    never reaches it; otherwise interpolates linearly between the last step
    below and the first step at-or-above, giving sub-step resolution for
    group comparisons of informed-fraction curves.
    """
    series = np.asarray(series, dtype=np.float64)
    idx = np.nonzero(series >= level)[0]
    if idx.size == 0:
        return None
    t = int(idx[0])
    if t == 0:
        return 0.0
    before, after = series[t - 1], series[t]
    return t - 1 + (level - before) / (after - before)


def seeding(
    g: AttributedGraph,
    condition: str,
    count: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Pick a seed set under a named condition; returns sorted node ids.

    uniform draws from all nodes, majority-only / minority-only from one
    class, all uniformly without replacement; top-degree takes the highest
    total-degree nodes deterministically (rng unused).
    """
    if condition not in SEED_CONDITIONS:
        raise ValueError(
            f"unknown seeding condition {condition!r}; expected one of {SEED_CONDITIONS}"
        )
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if condition == "top-degree":
        if count > g.n:
            raise ValueError(f"count {count} exceeds n={g.n}")
        return np.sort(rank_nodes(g, "degree")[:count])
    if condition == "uniform":
        pool = np.arange(g.n, dtype=np.int64)
    elif condition == "majority-only":
        pool = np.nonzero(g.labels == 0)[0]
    else:
        pool = np.nonzero(g.labels == 1)[0]
    if count > pool.size:
        raise ValueError(
            f"count {count} infeasible for condition {condition!r} (pool size {pool.size})"
        )
    idx = sample_without_replacement(rng, pool.size, count)
    return np.sort(pool[idx])
