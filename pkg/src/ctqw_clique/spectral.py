"""Adjacency-matrix eigensystems and the walk quantities derived from them.

The quantum-walk amplitude from vertex j to vertex l is
``sum_n exp(i*lam_n*t) * x_n(l) * x_n(j)`` over the adjacency eigenpairs
``(lam_n, x_n)``.  Per-frequency coefficients ``p[l][n] = x_n(l)*x_n(j)``
("intensities") are the feature all clique heuristics in this package
compare.  The coupling constant of the evolution operator is fixed at 1
and the exponent sign at +i; neither choice affects probabilities or
intensity comparisons.

All outputs are immutable; decomposing distinct graphs from concurrent
threads is safe.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph

#: relative tolerance under which adjacent eigenvalues count as degenerate
DEGENERACY_TOL = 1e-8

# int64 matrix powers escalate to Python integers beyond this bound
_INT64_SAFE_MAX = (2 ** 62)


@dataclass(frozen=True)
class EigenSystem:
    """Descending eigenvalues and orthonormal eigenvectors of an adjacency matrix.

    ``eigenvectors[:, k]`` belongs to ``eigenvalues[k]``.  Sign convention:
    the principal vector has a positive entry sum (Perron convention, so
    its entries are nonnegative on a connected graph); every other vector
    has its first nonzero entry positive.  ``principal_sign`` records the
    flip applied to the principal column (+1 or -1).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    labels: tuple
    principal_sign: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            from .graph import UnknownVertexError

            raise UnknownVertexError(label) from None

    def groups(self, tol: float = DEGENERACY_TOL) -> tuple:
        return group_frequencies(self.eigenvalues, tol)


def group_frequencies(eigenvalues: np.ndarray, tol: float = DEGENERACY_TOL) -> tuple:
    """Partition descending eigenvalues into near-degenerate runs.

    Returns ``((start, stop), ...)`` half-open index ranges.  Consecutive
    eigenvalues stay in one group while their gap is at most
    ``tol * max(1, |lambda_1|)``.
    """
    n = len(eigenvalues)
    if n == 0:
        return ()
    scale = max(1.0, abs(float(eigenvalues[0])))
    bound = tol * scale
    groups = []
    start = 0
    for i in range(1, n):
        if eigenvalues[i - 1] - eigenvalues[i] > bound:
            groups.append((start, i))
            start = i
    groups.append((start, n))
    return tuple(groups)


def eigendecompose(g: Graph) -> EigenSystem:
    """Full eigensystem of ``g``'s adjacency matrix, deterministically signed."""
    if g.n < 1:
        raise ValueError("eigendecompose requires at least one vertex")
    a = g.adjacency.astype(np.float64)
    w, v = kernels.symmetric_eigh(a)
    order = np.argsort(-w, kind="stable")
    w = np.ascontiguousarray(w[order])
    v = np.ascontiguousarray(v[:, order])
    principal_sign = 1
    for k in range(v.shape[1]):
        col = v[:, k]
        if k == 0:
            s = float(col.sum())
            if abs(s) > 1e-12:
                if s < 0.0:
                    np.negative(col, out=col)
                    principal_sign = -1
                continue
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size and col[nz[0]] < 0.0:
            np.negative(col, out=col)
            if k == 0:
                principal_sign = -1
    w.setflags(write=False)
    v.setflags(write=False)
    return EigenSystem(eigenvalues=w, eigenvectors=v, labels=g.labels,
                       principal_sign=principal_sign)


def amplitude(es: EigenSystem, j, l, t: float) -> complex:
    """Transition amplitude from vertex ``j`` to ``l`` after time ``t``."""
    ji = es.index(j)
    li = es.index(l)
    phases = np.exp(1j * es.eigenvalues * t)
    return complex(np.sum(phases * es.eigenvectors[li] * es.eigenvectors[ji]))


def probability(es: EigenSystem, j, l, t: float) -> float:
    return abs(amplitude(es, j, l, t)) ** 2


def probabilities(es: EigenSystem, j, t: float) -> np.ndarray:
    """Transition probabilities from ``j`` to every vertex; sums to 1."""
    ji = es.index(j)
    phases = np.exp(1j * es.eigenvalues * t)
    amps = es.eigenvectors @ (phases * es.eigenvectors[ji])
    return np.abs(amps) ** 2


@dataclass(frozen=True)
class IntensityVector:
    """Per-vertex, per-frequency amplitude coefficients from one source vertex.

    ``matrix[l, n] = x_n(l) * x_n(source)`` with rows in label order and
    columns in descending-eigenvalue order.  ``grouped[:, k]`` sums the
    columns of the k-th near-degenerate frequency group, which makes the
    values basis-independent under degeneracy; ``group_eigenvalues[k]`` is
    the group's leading eigenvalue.
    """

    source: int
    matrix: np.ndarray
    frequency_groups: tuple
    grouped: np.ndarray
    group_eigenvalues: np.ndarray
    labels: tuple

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            from .graph import UnknownVertexError

            raise UnknownVertexError(label) from None

    @property
    def principal(self) -> np.ndarray:
        """Grouped intensity at the principal frequency, per vertex."""
        return self.grouped[:, 0]


def intensities(es: EigenSystem, j, tol: float = DEGENERACY_TOL) -> IntensityVector:
    ji = es.index(j)
    p = es.eigenvectors * es.eigenvectors[ji][np.newaxis, :]
    groups = group_frequencies(es.eigenvalues, tol)
    starts = [g[0] for g in groups]
    grouped = np.add.reduceat(p, starts, axis=1) if groups else p[:, :0]
    reps = es.eigenvalues[starts] if groups else np.empty(0)
    p.setflags(write=False)
    grouped = np.ascontiguousarray(grouped)
    grouped.setflags(write=False)
    return IntensityVector(source=j, matrix=p, frequency_groups=groups,
                           grouped=grouped, group_eigenvalues=reps,
                           labels=es.labels)


class WalkTable:
    """Exact integer walk counts ``(A^s)[l, j]`` for s = 0..s_max.

    Powers are held as int64 arrays while every entry is provably safe
    from overflow, then as Python-integer (object) arrays beyond that.
    """

    def __init__(self, labels: tuple, powers: list):
        self.labels = labels
        self.powers = powers

    @property
    def s_max(self) -> int:
        return len(self.powers) - 1

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            from .graph import UnknownVertexError

            raise UnknownVertexError(label) from None

    def count(self, l, j, s: int) -> int:
        """Number of walks of length ``s`` between vertices ``l`` and ``j``."""
        return int(self.powers[s][self.index(l), self.index(j)])

    def matrix(self, s: int) -> np.ndarray:
        return self.powers[s]


def walk_counts(g: Graph, s_max: int) -> WalkTable:
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    n = g.n
    a64 = g.adjacency.astype(np.int64)
    powers = [np.eye(n, dtype=np.int64)]
    cur = powers[0]
    exact = False  # whether cur has been escalated to Python ints
    a_obj = None
    for _ in range(s_max):
        if not exact:
            peak = int(cur.max(initial=0))
            if peak * max(n, 1) >= _INT64_SAFE_MAX:
                cur = cur.astype(object)
                a_obj = a64.astype(object)
                exact = True
        if exact:
            cur = cur.dot(a_obj)
        else:
            cur = cur @ a64
        powers.append(cur)
    return WalkTable(labels=g.labels, powers=powers)


def write_intensity_csv(es: EigenSystem, j, path) -> None:
    """Dump (vertex, lambda, p) rows for the source vertex ``j``.

    One row per (vertex, frequency) pair, columns ``vertex,lambda,p``,
    intended for offline plotting.
    """
    iv = intensities(es, j)
    with open(path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["vertex", "lambda", "p"])
        for li, lab in enumerate(es.labels):
            for k in range(es.n):
                writer.writerow([lab, repr(float(es.eigenvalues[k])),
                                 repr(float(iv.matrix[li, k]))])
