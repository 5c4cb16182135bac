"""Clique heuristics driven by walk intensities at adjacency frequencies.

All procedures operate on center graphs (one vertex adjacent to every
other) and compare per-vertex amplitude coefficients:

* ``pick_max`` grows a candidate clique by repeatedly appending the
  vertex with the largest grouped principal intensity;
* ``delete_min`` shrinks the graph by deleting the weakest vertex until
  what remains is complete;
* ``vfsa`` walks a chain of reference vertices, re-centering at the
  frequency where the previous reference is strongest;
* ``algorithm_a`` / ``algorithm_b`` wrap these in a recursion that
  peels off the weakest vertex per level; ``algorithm_c`` is the
  recursion-free variant that can report several maximum cliques.

Principal-frequency comparisons use signed values (nonnegative under the
Perron sign convention inside the center's component); reference
selections at arbitrary frequencies compare magnitudes, since interior
eigenvector signs are conventions.  Ties always resolve to the lowest
original vertex label, so a fixed graph and configuration yield an
identical trace every run.  Solver calls are internally sequential but
independent calls are safe to run in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .graph import Clique, Graph, center_subgraph, delete_vertex
from .spectral import DEGENERACY_TOL, eigendecompose, intensities


class NotCenterGraphError(ValueError):
    def __init__(self, label):
        super().__init__(f"not a center graph: vertex {label} is not adjacent "
                         "to every other vertex")


MAGNITUDE_MODES = ("mixed", "absolute")


@dataclass(frozen=True)
class SolverConfig:
    """Shared knobs: degeneracy grouping tolerance and comparison mode.

    ``magnitude_mode="mixed"`` compares signed intensities at the
    principal frequency and magnitudes elsewhere; ``"absolute"`` uses
    magnitudes everywhere.  Tie-breaking is always lowest-original-label.
    """

    degeneracy_tol: float = DEGENERACY_TOL
    tie_break: str = "lowest-label"
    magnitude_mode: str = "mixed"

    def __post_init__(self):
        if self.degeneracy_tol <= 0:
            raise ValueError("degeneracy_tol must be positive")
        if self.tie_break != "lowest-label":
            raise ValueError("only lowest-label tie-breaking is implemented")
        if self.magnitude_mode not in MAGNITUDE_MODES:
            raise ValueError(f"magnitude_mode must be one of {MAGNITUDE_MODES}")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class TraceStep:
    op: str
    vertex: int
    frequency: float
    intensity: float


@dataclass
class SolveTrace:
    """Ordered record of every vertex choice a solver run makes."""

    steps: list = field(default_factory=list)
    recursion_depth: int = 0
    notes: list = field(default_factory=list)

    def add(self, op, vertex, frequency, intensity):
        self.steps.append(TraceStep(op=op, vertex=int(vertex),
                                    frequency=float(frequency),
                                    intensity=float(intensity)))

    def note(self, text):
        self.notes.append(text)

    def observe_depth(self, depth):
        if depth > self.recursion_depth:
            self.recursion_depth = depth


def _require_center(gs: Graph, s) -> None:
    if gs.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not gs.is_center(s):
        raise NotCenterGraphError(s)


def _pick_by(values: np.ndarray, labels, exclude_idx=None, largest=True):
    """Index of the extreme value; exact ties resolve to the lowest label."""
    vals = values
    if exclude_idx is not None:
        vals = values.copy()
        vals[exclude_idx] = -np.inf if largest else np.inf
    target = vals.max() if largest else vals.min()
    ties = np.flatnonzero(vals == target)
    if len(ties) == 1:
        return int(ties[0])
    return int(min(ties, key=lambda i: labels[i]))


def _principal_values(iv, cfg: SolverConfig) -> np.ndarray:
    if cfg.magnitude_mode == "absolute":
        return np.abs(iv.principal)
    return iv.principal


def pick_max(gs: Graph, s, cfg: SolverConfig = None, trace: SolveTrace = None) -> Clique:
    """Greedy growth by largest grouped principal intensity.

    Seeds a candidate {s, v} for every other vertex v and grows it by
    appending the strongest vertex of the current head's center graph,
    re-centering on the appended vertex each step; a complete center
    graph is absorbed whole.  Returns the largest candidate found.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_center(gs, s)
    if gs.n == 1:
        return Clique.certify(gs, [s], "pick_max")
    base = delete_vertex(gs, s)
    best = None
    for seed in base.labels:
        members = {s, seed}
        cur = center_subgraph(base, seed)
        head = seed
        while True:
            if cur.is_complete():
                members.update(cur.labels)
                break
            es = eigendecompose(cur)
            iv = intensities(es, head, cfg.degeneracy_tol)
            vals = _principal_values(iv, cfg)
            head_idx = cur.index(head)
            pick = _pick_by(vals, cur.labels, exclude_idx=head_idx, largest=True)
            chosen = cur.labels[pick]
            members.add(chosen)
            if trace is not None:
                trace.add("pick_max", chosen, es.eigenvalues[0], vals[pick])
            cur = center_subgraph(delete_vertex(cur, head), chosen)
            head = chosen
        if best is None or len(members) > len(best):
            best = members
    return Clique.certify(gs, best, "pick_max")


def delete_min(gs: Graph, s, cfg: SolverConfig = None, trace: SolveTrace = None) -> Clique:
    """Shrink to a clique by deleting the weakest vertex at the principal frequency.

    The center vertex is exempt from deletion; once the remaining graph
    is complete, all its vertices are returned.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_center(gs, s)
    cur = gs
    while not cur.is_complete():
        es = eigendecompose(cur)
        iv = intensities(es, s, cfg.degeneracy_tol)
        vals = _principal_values(iv, cfg)
        s_idx = cur.index(s)
        pick = _pick_by(vals, cur.labels, exclude_idx=s_idx, largest=False)
        victim = cur.labels[pick]
        if trace is not None:
            trace.add("delete_min", victim, es.eigenvalues[0], vals[pick])
        cur = delete_vertex(cur, victim)
    return Clique.certify(gs, cur.labels, "delete_min")


def vfsa(gs: Graph, s, v_ref, cfg: SolverConfig = None,
         trace: SolveTrace = None) -> Clique:
    """Variational frequency selection: walk the chain of reference vertices.

    At each step the current reference picks the frequency group where
    its magnitude is largest; its strongest neighbour at that frequency
    becomes the next reference, the old center is dropped and the graph
    re-centers on the reference.  Accumulated centers plus the final
    complete graph form the clique.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_center(gs, s)
    if v_ref == s:
        raise ValueError("reference vertex must differ from the center")
    gs.index(v_ref)  # raises UnknownVertexError when absent
    if trace is not None:
        trace.note(f"vfsa reference selection compares |p| ({cfg.magnitude_mode} mode)")
    members = set()
    cur = gs
    cen = s
    ref = v_ref
    while True:
        if cur.is_complete():
            members.update(cur.labels)
            break
        members.add(cen)
        if ref is None:
            # no reference left to steer by; keep the accumulated clique
            members.add(cen)
            break
        es = eigendecompose(cur)
        iv = intensities(es, cen, cfg.degeneracy_tol)
        ref_idx = cur.index(ref)
        gidx = int(np.argmax(np.abs(iv.grouped[ref_idx])))
        freq = float(iv.group_eigenvalues[gidx])
        cen_idx = cur.index(cen)
        cand_idx = [i for i in np.flatnonzero(cur.adjacency[ref_idx])
                    if i != cen_idx]
        nxt = None
        if cand_idx:
            col = np.abs(iv.grouped[:, gidx])
            sub = np.asarray(cand_idx)
            best_local = _pick_by(col[sub], [cur.labels[i] for i in sub],
                                  largest=True)
            nxt = cur.labels[sub[best_local]]
            if trace is not None:
                trace.add("vfsa", nxt, freq, col[sub[best_local]])
        cur = center_subgraph(delete_vertex(cur, cen), ref)
        cen = ref
        ref = nxt
    return Clique.certify(gs, members, "vfsa")


def _weakest_vertex(gs: Graph, s, cfg: SolverConfig):
    """Non-center vertex of smallest grouped principal intensity, plus context."""
    es = eigendecompose(gs)
    iv = intensities(es, s, cfg.degeneracy_tol)
    vals = _principal_values(iv, cfg)
    s_idx = gs.index(s)
    pick = _pick_by(vals, gs.labels, exclude_idx=s_idx, largest=False)
    return gs.labels[pick], es, iv


def _reference_for(gs: Graph, v, iv, cfg: SolverConfig):
    """Strongest neighbour of ``v`` at ``v``'s own dominant frequency group."""
    v_idx = gs.index(v)
    gidx = int(np.argmax(np.abs(iv.grouped[v_idx])))
    cand_idx = list(np.flatnonzero(gs.adjacency[v_idx]))
    col = np.abs(iv.grouped[:, gidx])
    sub = np.asarray(cand_idx)
    best_local = _pick_by(col[sub], [gs.labels[i] for i in sub], largest=True)
    return gs.labels[sub[best_local]]


def _solve_center(gs: Graph, s, variant: str, cfg: SolverConfig,
                  trace: SolveTrace, depth: int) -> Clique:
    """Best of the four sub-modules on one center graph, recursing on D(v_min)."""
    if trace is not None:
        trace.observe_depth(depth)
    if gs.is_complete():
        return Clique.certify(gs, gs.labels, "complete")
    candidates = [pick_max(gs, s, cfg, trace), delete_min(gs, s, cfg, trace)]
    v_min, _, iv = _weakest_vertex(gs, s, cfg)
    c_min = center_subgraph(gs, v_min)
    if variant == "a":
        candidates.append(pick_max(c_min, v_min, cfg, trace))
    else:
        v_ref = _reference_for(gs, v_min, iv, cfg)
        candidates.append(vfsa(c_min, v_min, v_ref, cfg, trace))
    candidates.append(_solve_center(delete_vertex(gs, v_min), s, variant,
                                    cfg, trace, depth + 1))
    best = candidates[0]
    for c in candidates[1:]:
        if c.size > best.size:
            best = c
    return best


def _solve_all_centers(g: Graph, variant: str, cfg: SolverConfig,
                       trace: SolveTrace) -> Clique:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    cfg = cfg or DEFAULT_CONFIG
    best = None
    for v_s in g.labels:
        gs = center_subgraph(g, v_s)
        found = _solve_center(gs, v_s, variant, cfg, trace, depth=0)
        if best is None or found.size > best.size:
            best = found
    return best


def algorithm_a(g: Graph, cfg: SolverConfig = None,
                trace: SolveTrace = None) -> Clique:
    """Recursive search over every center subgraph, sub-module 3 = pick_max."""
    best = _solve_all_centers(g, "a", cfg or DEFAULT_CONFIG, trace)
    return replace(best, source="algorithm_a")


def algorithm_b(g: Graph, cfg: SolverConfig = None,
                trace: SolveTrace = None) -> Clique:
    """Same recursion as algorithm A with VFSA as the third sub-module."""
    best = _solve_all_centers(g, "b", cfg or DEFAULT_CONFIG, trace)
    return replace(best, source="algorithm_b")


def algorithm_c(g: Graph, cfg: SolverConfig = None,
                trace: SolveTrace = None) -> list:
    """Recursion-free variant: one VFSA walk per vertex.

    Every vertex seeds its own center graph and reference choice, so
    distinct maximum cliques sharing vertices can all surface; returns
    every distinct maximum-size clique found, sorted by members.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    cfg = cfg or DEFAULT_CONFIG
    found = []
    for v_s in g.labels:
        gs = center_subgraph(g, v_s)
        if gs.is_complete():
            found.append(Clique.certify(gs, gs.labels, "vfsa"))
            continue
        es = eigendecompose(gs)
        iv = intensities(es, v_s, cfg.degeneracy_tol)
        v_ref = _reference_for(gs, v_s, iv, cfg)
        found.append(vfsa(gs, v_s, v_ref, cfg, trace))
    best_size = max(c.size for c in found)
    unique = {}
    for c in found:
        if c.size == best_size:
            unique.setdefault(c.members, c)
    cliques = [Clique(members=m, size=len(m), source="algorithm_c")
               for m in unique]
    cliques.sort(key=lambda c: c.sorted_members())
    return cliques
