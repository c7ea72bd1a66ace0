"""Pluggable f-vertex-failure (st) connectivity oracle.

The interface mirrors the update/query split of near-optimal failure
connectivity oracles, so a future fast implementation can drop in without
touching the detectors. The baseline here simply rebuilds a disjoint-set
component labeling of G - F on every update.
"""

from __future__ import annotations

from typing import Iterable

from .errors import QueriedFailedVertex, TooManyFailures
from .graph import DisjointSet, Graph


class FailureConnectivityOracle:
    """Answers s-t connectivity in G - F after update(F), for |F| <= f."""

    __slots__ = ("graph", "f", "failed", "_labels")

    def __init__(self, graph: Graph, f: int):
        self.graph = graph
        self.f = f
        self.failed: frozenset[int] = frozenset()
        self._labels: list[int] = []
        self._rebuild()

    def _rebuild(self) -> None:
        g = self.graph
        dead = self.failed
        dsu = DisjointSet(g.n)
        for u, v in g.edges:
            if u not in dead and v not in dead:
                dsu.union(u, v)
        self._labels = [-1 if v in dead else dsu.find(v) for v in range(g.n)]

    def update(self, f_set: Iterable[int]) -> None:
        """Replace the failure set; queries then refer to G - f_set."""
        fs = frozenset(f_set)
        if len(fs) > self.f:
            raise TooManyFailures(f"|F|={len(fs)} exceeds f={self.f}")
        self.graph.check_vertices(fs)
        if fs == self.failed:
            return  # same failure set: labeling already current
        self.failed = fs
        self._rebuild()

    def connected(self, s: int, t: int) -> bool:
        self.graph.check_vertices((s, t))
        if s in self.failed or t in self.failed:
            raise QueriedFailedVertex(f"query ({s},{t}) touches the failure set")
        return self._labels[s] == self._labels[t]

    @property
    def labels(self) -> list[int]:
        """Component labels of G - F (-1 on failed vertices). For batch scans."""
        return self._labels

    def clone(self) -> "FailureConnectivityOracle":
        other = object.__new__(FailureConnectivityOracle)
        other.graph = self.graph
        other.f = self.f
        other.failed = self.failed
        other._labels = list(self._labels)
        return other


def build_conn_oracle(g: Graph, f: int) -> FailureConnectivityOracle:
    """Oracle in the "no failures" state. f >= 0; f = 0 only answers static
    connectivity."""
    if f < 0:
        raise TooManyFailures(f"f must be nonnegative, got {f}")
    return FailureConnectivityOracle(g, f)
