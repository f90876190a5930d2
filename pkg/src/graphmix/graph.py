"""Attributed graph data model and class-label assignment.

Graphs are simple (no self-loops, no duplicate edges), directed or
undirected, with a binary class label per node: 0 is the majority class,
1 the minority.  Node ids are dense integers ``0..n-1``.  A graph is
mutable while it is being built and treated as an immutable value
afterwards, so it can be shared freely across ensemble workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .rng import sample_without_replacement

__all__ = ["AttributedGraph", "MixingMatrix", "assign_classes"]


class AttributedGraph:
    """Simple graph with per-node binary class labels.

    Maintains adjacency sets for O(1) edge tests and O(deg) neighbor
    iteration, plus incrementally updated degree counters.
    """

    __slots__ = ("directed", "_labels", "_adj", "_in_adj", "_deg", "_indeg", "_outdeg", "_n_edges")

    def __init__(self, directed: bool, labels: Sequence[int]):
        labels = np.asarray(labels, dtype=np.int8)
        if labels.size == 0:
            raise ValueError("label list must be non-empty")
        if not np.isin(labels, (0, 1)).all():
            raise ValueError("labels must be 0 (majority) or 1 (minority)")
        self.directed = bool(directed)
        self._labels = labels
        n = labels.size
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._in_adj: list[set[int]] | None = [set() for _ in range(n)] if directed else None
        if directed:
            self._indeg = np.zeros(n, dtype=np.int64)
            self._outdeg = np.zeros(n, dtype=np.int64)
            self._deg = None
        else:
            self._deg = np.zeros(n, dtype=np.int64)
            self._indeg = None
            self._outdeg = None
        self._n_edges = 0

    # -- basic accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return self._labels.size

    @property
    def num_edges(self) -> int:
        return self._n_edges

    @property
    def labels(self) -> np.ndarray:
        """Per-node class labels (treat as read-only)."""
        return self._labels

    def class_counts(self) -> tuple[int, int]:
        n1 = int(self._labels.sum())
        return self._labels.size - n1, n1

    @property
    def minority_fraction(self) -> float:
        return float(self._labels.mean())

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"node id {u} out of range [0, {self.n})")

    # -- edges ---------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge u-v (u->v when directed); False if rejected.

        Self-loops and existing edges are rejected without modifying the
        graph; undirected insertion is order-insensitive.
        """
        self._check_node(u)
        self._check_node(v)
        if u == v:
            return False
        if self.directed:
            if v in self._adj[u]:
                return False
            self._adj[u].add(v)
            self._in_adj[v].add(u)
            self._outdeg[u] += 1
            self._indeg[v] += 1
        else:
            if v in self._adj[u]:
                return False
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._deg[u] += 1
            self._deg[v] += 1
        self._n_edges += 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    def neighbors(self, u: int) -> set[int]:
        """Neighbor set (out-neighbors when directed); do not mutate."""
        return self._adj[u]

    def out_neighbors(self, u: int) -> set[int]:
        if not self.directed:
            raise ValueError("out_neighbors requires a directed graph")
        return self._adj[u]

    def in_neighbors(self, u: int) -> set[int]:
        if not self.directed:
            raise ValueError("in_neighbors requires a directed graph")
        return self._in_adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges in canonical form: (u, v) with u < v when undirected."""
        if self.directed:
            for u, nbrs in enumerate(self._adj):
                for v in nbrs:
                    yield (u, v)
        else:
            for u, nbrs in enumerate(self._adj):
                for v in nbrs:
                    if u < v:
                        yield (u, v)

    # -- degrees --------------------------------------------------------------

    def degree_vector(self) -> np.ndarray | tuple[np.ndarray, np.ndarray]:
        """Degrees per node; (indeg, outdeg) pair when directed."""
        if self.directed:
            return self._indeg.copy(), self._outdeg.copy()
        return self._deg.copy()

    def total_degree_vector(self) -> np.ndarray:
        """deg for undirected graphs, indeg+outdeg for directed ones."""
        if self.directed:
            return self._indeg + self._outdeg
        return self._deg.copy()

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AttributedGraph):
            return NotImplemented
        return (
            self.directed == other.directed
            and np.array_equal(self._labels, other._labels)
            and self._adj == other._adj
        )

    __hash__ = None

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"AttributedGraph({kind}, n={self.n}, edges={self.num_edges})"


@dataclass(frozen=True)
class MixingMatrix:
    """2x2 class-affinity matrix: entry [a, b] is the affinity of a source
    of class a for a target of class b, each in [0, 1]."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.float64)
        if m.shape != (2, 2):
            raise ValueError(f"mixing matrix must be 2x2, got shape {m.shape}")
        if (m < 0.0).any() or (m > 1.0).any():
            raise ValueError("mixing matrix entries must lie in [0, 1]")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def symmetric(cls, h: float) -> "MixingMatrix":
        """Same-class affinity h on the diagonal, 1-h off the diagonal."""
        if not 0.0 <= h <= 1.0:
            raise ValueError(f"h must lie in [0, 1], got {h}")
        return cls(np.array([[h, 1.0 - h], [1.0 - h, h]]))

    def __getitem__(self, key: tuple[int, int]) -> float:
        return float(self.matrix[key])

    def row(self, source_class: int) -> np.ndarray:
        """Affinity of a source of the given class toward classes (0, 1)."""
        return self.matrix[source_class]


def assign_classes(n: int, f_m: float, rng: np.random.Generator) -> np.ndarray:
    """Exact-count class labels: round(n * f_m) nodes get class 1.

    Rounding is round-half-to-even.  Minority positions are a uniform
    without-replacement draw, so label placement is deterministic per seed
    and the realized minority fraction is exact for every realization.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= f_m <= 0.5:
        raise ValueError(f"minority fraction must lie in [0, 0.5], got {f_m}")
    n_minority = round(n * f_m)
    labels = np.zeros(n, dtype=np.int8)
    if n_minority:
        labels[sample_without_replacement(rng, n, n_minority)] = 1
    return labels
