"""Generators and validators for the special center-graph families.

Three families are built here, all sharing one center vertex that is
adjacent to everything:

* first kind: two cliques of sizes m1 > m2 glued at the center, no other
  cross edges;
* second kind: the smaller clique replaced by a complete multipartite
  block of (m2 - 1) parts with z vertices each, still attached only to
  the center;
* base graph: a planted clique of size omega whose non-center members
  are all wired to a shared complete multipartite block of q parts of z
  vertices, under the constraints q*z > omega - 3 and q + 4 < omega.

The walk-count recursions of the first two families and their spectral
closed forms are implemented alongside as validators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import Graph
from .spectral import eigendecompose, intensities


class ResonantParameterError(ValueError):
    """The closed-form shift coincides with an adjacency eigenvalue."""

    def __init__(self, shift):
        super().__init__(
            f"resonant parameter: shift {shift} lies within tolerance of an "
            "eigenvalue, the closed form is undefined there")
        self.shift = shift


@dataclass(frozen=True)
class FirstKindSpec:
    """Two cliques sharing exactly the center vertex: |MC| = m1, other = m2."""

    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 < 3:
            raise ValueError("m1 must be at least 3")
        if self.m2 < 2:
            raise ValueError("m2 must be at least 2")
        if self.m2 >= self.m1:
            raise ValueError(
                "m2 must be smaller than m1, otherwise the planted clique "
                "is not the unique maximum")

    @property
    def n(self) -> int:
        return self.m1 + self.m2 - 1


@dataclass(frozen=True)
class SecondKindSpec:
    """Center + (m1-1)-clique + complete multipartite block of (m2-1) parts x z."""

    m1: int
    m2: int
    z: int

    def __post_init__(self):
        if self.m1 < 3:
            raise ValueError("m1 must be at least 3")
        if self.m2 < 3:
            raise ValueError("m2 must be at least 3")
        if self.z < 1:
            raise ValueError("z must be at least 1")

    @property
    def n(self) -> int:
        return self.m1 + self.z * (self.m2 - 1)


@dataclass(frozen=True)
class BaseGraphSpec:
    """Planted omega-clique wired to a shared q-part multipartite block."""

    omega: int
    q: int
    z: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2 (common neighbours must "
                             "span at least two parts)")
        if self.z < 1:
            raise ValueError("z must be at least 1")
        if self.q * self.z <= self.omega - 3:
            raise ValueError(
                f"constraint violated: qz > omega-3 "
                f"(q*z = {self.q * self.z}, omega-3 = {self.omega - 3})")
        if self.q + 4 >= self.omega:
            raise ValueError(
                f"constraint violated: q + 4 < omega "
                f"(q+4 = {self.q + 4}, omega = {self.omega})")

    @property
    def n(self) -> int:
        return self.omega + self.q * self.z


@dataclass(frozen=True)
class WalkCounts:
    """Walk numbers from the center: W closed, F to planted-clique, H to rest."""

    W: tuple
    F: tuple
    H: tuple

    @property
    def s_max(self) -> int:
        return len(self.W) - 1


def gen_first_kind(spec: FirstKindSpec, labels: Sequence[int] | None = None):
    """Build the two-clique center graph; returns (graph, center, mc_labels).

    Default labels are 1..n with the maximum clique on 1..m1, the center
    at m1 and the second clique on m1..n.
    """
    n = spec.n
    if labels is None:
        labels = tuple(range(1, n + 1))
    else:
        labels = tuple(int(x) for x in labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
    a = np.zeros((n, n), dtype=bool)
    _complete(a, range(spec.m1))
    _complete(a, range(spec.m1 - 1, n))
    g = Graph(a, labels)
    center = labels[spec.m1 - 1]
    mc = tuple(labels[:spec.m1])
    return g, center, mc


def gen_second_kind(spec: SecondKindSpec):
    """Build the clique-plus-multipartite center graph.

    Labels are 1..n: the planted clique on 1..m1 with the center at m1,
    then (m2 - 1) consecutive parts of z vertices each.  With z = 1 the
    output coincides with ``gen_first_kind(m1, m2)``.
    """
    n = spec.n
    labels = tuple(range(1, n + 1))
    a = np.zeros((n, n), dtype=bool)
    _complete(a, range(spec.m1))
    center = spec.m1 - 1
    parts = [range(spec.m1 + p * spec.z, spec.m1 + (p + 1) * spec.z)
             for p in range(spec.m2 - 1)]
    for pa, pb in combinations(parts, 2):
        for i in pa:
            for j in pb:
                a[i, j] = a[j, i] = True
    for part in parts:
        for i in part:
            a[center, i] = a[i, center] = True
    g = Graph(a, labels)
    return g, labels[center], tuple(labels[:spec.m1])


def gen_base_graph(spec: BaseGraphSpec):
    """Build the planted-clique-plus-block graph; returns (graph, center, mc).

    Labels 1..n: the planted clique on 1..omega with the center at omega,
    then q parts of z block vertices.  All clique vertices are adjacent
    to the whole block, so every 3-subset of non-center clique vertices
    has exactly q*z common block neighbours spanning all q parts.
    """
    n = spec.n
    labels = tuple(range(1, n + 1))
    a = np.zeros((n, n), dtype=bool)
    _complete(a, range(spec.omega))
    parts = [range(spec.omega + p * spec.z, spec.omega + (p + 1) * spec.z)
             for p in range(spec.q)]
    for pa, pb in combinations(parts, 2):
        for i in pa:
            for j in pb:
                a[i, j] = a[j, i] = True
    for i in range(spec.omega):
        for j in range(spec.omega, n):
            a[i, j] = a[j, i] = True
    g = Graph(a, labels)
    return g, labels[spec.omega - 1], tuple(labels[:spec.omega])


def linked_cliques_example() -> Graph:
    """Two cliques sharing vertex 5, plus cross edges and two pendants.

    A 5-clique {1..5} and a 4-clique {5,6,7,8} joined at 5, with extra
    edges (1,10), (2,8), (3,21).  Deleting 5 and taking the center
    subgraph of 3 leaves the two-clique graph on {1,2,3,4,21}.
    """
    labels = (1, 2, 3, 4, 5, 6, 7, 8, 10, 21)
    edges = list(combinations((1, 2, 3, 4, 5), 2))
    edges += list(combinations((5, 6, 7, 8), 2))
    edges += [(1, 10), (2, 8), (3, 21)]
    return Graph.from_edges(labels, edges)


def _complete(a: np.ndarray, idx) -> None:
    idx = list(idx)
    for i, j in combinations(idx, 2):
        a[i, j] = a[j, i] = True


def recursion_first(spec: FirstKindSpec, s_max: int) -> WalkCounts:
    """Walk-count recursion of the first kind, seeded W0=1, F0=H0=0.

    W_{s+1} = (m1-1) F_s + (m2-1) H_s
    F_{s+1} = W_s + (m1-2) F_s
    H_{s+1} = W_s + (m2-2) H_s
    """
    return _run_recursion(spec.m1, spec.m2, 1, s_max)


def recursion_second(spec: SecondKindSpec, s_max: int) -> WalkCounts:
    """Second-kind recursion: the H branch scales with the part size z.

    W_{s+1} = (m1-1) F_s + z (m2-1) H_s
    F_{s+1} = W_s + (m1-2) F_s
    H_{s+1} = W_s + z (m2-2) H_s
    """
    return _run_recursion(spec.m1, spec.m2, spec.z, s_max)


def _run_recursion(m1: int, m2: int, z: int, s_max: int) -> WalkCounts:
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    W = [1]
    F = [0]
    H = [0]
    for s in range(s_max):
        W.append((m1 - 1) * F[s] + z * (m2 - 1) * H[s])
        F.append(W[s] + (m1 - 2) * F[s])
        H.append(W[s] + z * (m2 - 2) * H[s])
    return WalkCounts(W=tuple(W), F=tuple(F), H=tuple(H))


def _center_weights(g: Graph, center):
    es = eigendecompose(g)
    iv = intensities(es, center)
    ci = es.index(center)
    return np.asarray(es.eigenvalues, dtype=float), iv.matrix[ci]


def _check_resonance(eigenvalues, shift, tol=1e-8):
    gap = np.min(np.abs(eigenvalues - shift))
    if gap <= tol:
        raise ResonantParameterError(shift)


def closed_form_walks(g: Graph, center, shift: float, s: int) -> float:
    """Spectral closed form sum_n a_n (shift^s - lam_n^s) / (shift - lam_n).

    ``a_n`` are the center's closed-walk weights.  With shift = m1-2 the
    value equals F_s on a first-kind graph; with shift = m2-2 (or
    z*(m2-2) on the second kind) it equals H_s.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    lam, a_n = _center_weights(g, center)
    _check_resonance(lam, shift)
    return float(np.sum(a_n * (shift ** s - lam ** s) / (shift - lam)))


def closed_form_check(g: Graph, center, shift: float, s: int,
                      expected: int) -> float:
    """Absolute residual between the closed form and an exact walk count."""
    return abs(closed_form_walks(g, center, shift, s) - expected)


def resolvent_identity_check(g: Graph, center, shift: float) -> float:
    """|sum_n a_n / (shift - lam_n)|; structurally zero on ideal graphs.

    The time-independent coefficient of the non-clique amplitude branch
    must vanish when the shift equals the effective off-clique degree;
    generic graphs leave a visibly nonzero residual.
    """
    lam, a_n = _center_weights(g, center)
    _check_resonance(lam, shift)
    return float(abs(np.sum(a_n / (shift - lam))))


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of the principal-intensity separation check."""

    kind: str
    precondition_met: bool
    holds: bool | None
    margin: float | None
    detail: str

    def __bool__(self):
        return bool(self.holds)


def intensity_separation(g: Graph, center, mc_labels, kind: str) -> SeparationReport:
    """Check the planted clique's separation at the principal frequency.

    kind="first": every planted-clique member (center excluded) must have
    strictly larger grouped principal intensity than every outsider.
    kind="second": the inequality is reversed, provided the effective
    block degree exceeds m1 - 2; otherwise the report flags the
    precondition as unmet instead of claiming a violation.
    """
    if kind not in ("first", "second"):
        raise ValueError("kind must be 'first' or 'second'")
    es = eigendecompose(g)
    iv = intensities(es, center)
    principal = iv.principal
    mc = set(mc_labels)
    mc_idx = [i for i, lab in enumerate(g.labels) if lab in mc and lab != center]
    out_idx = [i for i, lab in enumerate(g.labels) if lab not in mc]
    if not mc_idx or not out_idx:
        raise ValueError("need at least one non-center clique member and one outsider")
    mc_vals = principal[mc_idx]
    out_vals = principal[out_idx]
    if kind == "first":
        margin = float(mc_vals.min() - out_vals.max())
        return SeparationReport(kind=kind, precondition_met=True,
                                holds=margin > 0.0, margin=margin,
                                detail=f"min clique-side {mc_vals.min():.6g} vs "
                                       f"max outside {out_vals.max():.6g}")
    m1 = len(mc)
    # effective off-clique degree: block-internal degree of an outsider
    first_out = out_idx[0]
    block_deg = int(sum(1 for j in out_idx if g.adjacency[first_out, j]))
    if m1 - 2 >= block_deg:
        return SeparationReport(
            kind=kind, precondition_met=False, holds=None, margin=None,
            detail=f"precondition unmet: m1-2 = {m1 - 2} is not smaller than "
                   f"the block degree {block_deg}")
    margin = float(out_vals.min() - mc_vals.max())
    return SeparationReport(kind=kind, precondition_met=True,
                            holds=margin > 0.0, margin=margin,
                            detail=f"min outside {out_vals.min():.6g} vs "
                                   f"max clique-side {mc_vals.max():.6g}")
