"""Undirected simple graphs with stable integer vertex labels.

Graphs are immutable once built: every "mutating" operation returns a
new graph, so values can be shared freely between threads.  Labels
survive induced-subgraph operations, which lets deeply nested search
procedures report results in the original graph's vocabulary.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class UnknownVertexError(ValueError):
    """A vertex label that is not present in the graph."""

    def __init__(self, label):
        super().__init__(f"unknown vertex label: {label}")
        self.label = label


class GraphFormatError(ValueError):
    """Malformed graph file; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph:
    """Dense symmetric boolean adjacency matrix plus vertex labels."""

    __slots__ = ("adjacency", "labels")

    def __init__(self, adjacency, labels: Sequence[int] | None = None):
        a = np.array(adjacency, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if a.shape[0] > 0:
            if a.diagonal().any():
                raise ValueError("self-loops are not allowed")
            if not np.array_equal(a, a.T):
                raise ValueError("adjacency must be symmetric")
        n = a.shape[0]
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(int(x) for x in labels)
        if len(labels) != n:
            raise ValueError("label count does not match vertex count")
        if len(set(labels)) != n:
            raise ValueError("labels must be pairwise distinct")
        a.setflags(write=False)
        self.adjacency = a
        self.labels = labels

    @classmethod
    def _trusted(cls, adjacency: np.ndarray, labels: tuple) -> "Graph":
        # internal fast path: caller guarantees the invariants
        g = object.__new__(cls)
        adjacency.setflags(write=False)
        g.adjacency = adjacency
        g.labels = labels
        return g

    @classmethod
    def from_edges(cls, labels: Iterable[int], edges: Iterable[tuple]) -> "Graph":
        labels = tuple(int(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u not in index:
                raise UnknownVertexError(u)
            if v not in index:
                raise UnknownVertexError(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a[index[u], index[v]] = True
            a[index[v], index[u]] = True
        return cls(a, labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownVertexError(label) from None

    def has_vertex(self, label) -> bool:
        return label in self.labels

    def has_edge(self, u, v) -> bool:
        return bool(self.adjacency[self.index(u), self.index(v)])

    def degree(self, label) -> int:
        return int(self.adjacency[self.index(label)].sum())

    def neighbors(self, label) -> tuple:
        row = self.adjacency[self.index(label)]
        return tuple(self.labels[i] for i in np.flatnonzero(row))

    def edges(self):
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        for i, j in zip(iu, ju):
            yield self.labels[i], self.labels[j]

    def induced(self, labels: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex order follows this graph, not the argument."""
        wanted = set(labels)
        for lab in wanted:
            if lab not in self.labels:
                raise UnknownVertexError(lab)
        idx = np.array([i for i, lab in enumerate(self.labels) if lab in wanted],
                       dtype=np.intp)
        sub = np.ascontiguousarray(self.adjacency[np.ix_(idx, idx)])
        return Graph._trusted(sub, tuple(self.labels[i] for i in idx))

    def is_complete(self) -> bool:
        n = self.n
        return int(self.adjacency.sum()) == n * (n - 1)

    def is_center(self, label) -> bool:
        """True if ``label`` is adjacent to every other vertex."""
        i = self.index(label)
        return int(self.adjacency[i].sum()) == self.n - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(
            self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.labels, self.adjacency.tobytes()))

    def same_structure(self, other: "Graph") -> bool:
        """Positional (label-blind) equality of the adjacency structure."""
        return self.n == other.n and np.array_equal(self.adjacency,
                                                    other.adjacency)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class Clique:
    """A vertex set certified pairwise-adjacent at construction time."""

    members: frozenset
    size: int
    source: str

    @classmethod
    def certify(cls, g: Graph, members: Iterable[int], source: str) -> "Clique":
        members = frozenset(int(m) for m in members)
        pair = first_non_adjacent_pair(g, members)
        if pair is not None:
            raise ValueError(
                f"not a clique: vertices {pair[0]} and {pair[1]} are not adjacent")
        return cls(members=members, size=len(members), source=source)

    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))


def center_subgraph(g: Graph, v) -> Graph:
    """Induced subgraph on ``v`` and its neighbours; ``v`` is its center."""
    i = g.index(v)
    mask = g.adjacency[i].copy()
    mask[i] = True
    idx = np.flatnonzero(mask)
    sub = np.ascontiguousarray(g.adjacency[np.ix_(idx, idx)])
    return Graph._trusted(sub, tuple(g.labels[k] for k in idx))


def delete_vertex(g: Graph, v) -> Graph:
    """Induced subgraph on all vertices except ``v``."""
    i = g.index(v)
    mask = np.ones(g.n, dtype=bool)
    mask[i] = False
    idx = np.flatnonzero(mask)
    sub = np.ascontiguousarray(g.adjacency[np.ix_(idx, idx)])
    return Graph._trusted(sub, tuple(g.labels[k] for k in idx))


def first_non_adjacent_pair(g: Graph, s: Iterable[int]):
    """First pair (in sorted label order) of ``s`` that is not an edge."""
    labels = sorted(set(s))
    idx = [g.index(lab) for lab in labels]
    for (la, ia), (lb, ib) in combinations(zip(labels, idx), 2):
        if not g.adjacency[ia, ib]:
            return la, lb
    return None


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff every pair in ``s`` is adjacent; empty and singleton sets pass."""
    return first_non_adjacent_pair(g, s) is None


def gnp_random(n: int, p: float, rng, labels_start: int = 1) -> Graph:
    """Erdős–Rényi G(n, p): each edge present independently with probability p.

    ``rng`` is a ``numpy.random.Generator`` or a seed accepted by
    ``numpy.random.default_rng``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    a = np.zeros((n, n), dtype=bool)
    draws = rng.random((n, n))
    upper = np.triu(draws < p, 1)
    a = upper | upper.T
    return Graph(a, labels=range(labels_start, labels_start + n))


# ---------------------------------------------------------------------------
# file formats
#
# DIMACS ascii: comment lines "c ...", one header "p edge <n> <m>", edge
# lines "e <u> <v>" with 1-based vertex ids.
# Edge list: first line "<n>", then one "u v" pair per line, 0-based ids.
# ---------------------------------------------------------------------------

FORMATS = ("dimacs", "edgelist")


def read_graph(path, format: str = "dimacs") -> Graph:
    if format not in FORMATS:
        raise ValueError(f"unknown graph format: {format}")
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.readlines()
    if format == "dimacs":
        return _parse_dimacs(lines)
    return _parse_edgelist(lines)


def write_graph(g: Graph, path, format: str = "dimacs",
                comments: Sequence[str] = ()) -> None:
    if format not in FORMATS:
        raise ValueError(f"unknown graph format: {format}")
    pos = {lab: i for i, lab in enumerate(g.labels)}
    with open(path, "w", encoding="ascii") as fh:
        if format == "dimacs":
            for c in comments:
                fh.write(f"c {c}\n")
            fh.write(f"p edge {g.n} {g.edge_count}\n")
            for u, v in g.edges():
                fh.write(f"e {pos[u] + 1} {pos[v] + 1}\n")
        else:
            fh.write(f"{g.n}\n")
            for u, v in g.edges():
                fh.write(f"{pos[u]} {pos[v]}\n")


def read_planted_clique(path) -> tuple | None:
    """Labels recorded in a ``c planted_mc`` DIMACS comment, if present."""
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            parts = raw.split()
            if len(parts) >= 2 and parts[0] == "c" and parts[1] == "planted_mc":
                return tuple(int(x) for x in parts[2:])
    return None


def _parse_dimacs(lines) -> Graph:
    n = None
    a = None
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("expected 'p edge <n> <m>'", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer problem line", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            a = np.zeros((n, n), dtype=bool)
        elif tag == "e":
            if a is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                u = int(parts[1])
                v = int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer edge endpoints", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range: {u} {v}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            a[u - 1, v - 1] = True
            a[v - 1, u - 1] = True
        else:
            raise GraphFormatError(f"unrecognized line type {tag!r}", lineno)
    if a is None:
        raise GraphFormatError("missing 'p edge' problem line")
    return Graph(a, labels=range(1, n + 1))


def _parse_edgelist(lines) -> Graph:
    n = None
    a = None
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts:
            continue
        if n is None:
            if len(parts) != 1:
                raise GraphFormatError("expected vertex count on first line", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphFormatError("non-integer vertex count", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            a = np.zeros((n, n), dtype=bool)
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected 'u v' edge line", lineno)
        try:
            u = int(parts[0])
            v = int(parts[1])
        except ValueError:
            raise GraphFormatError("non-integer edge endpoints", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range: {u} {v}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        a[u, v] = True
        a[v, u] = True
    if a is None:
        raise GraphFormatError("empty edge-list file")
    return Graph(a, labels=range(n))
