"""Exact maximum-clique ground truth for desk-scale graphs.

Branch and bound over adjacency bitsets with a greedy-colouring upper
bound; optionally enumerates every maximum clique.  Correct for any
graph it accepts; the size cap only guards against accidentally feeding
it instances that would take forever.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import Clique, Graph

DEFAULT_CAP = 64


class CliqueSearchCapError(ValueError):
    """Graph is larger than the configured exact-search cap."""

    def __init__(self, n, cap):
        super().__init__(
            f"graph has {n} vertices, above the exact-search cap of {cap}; "
            "use one of the heuristic solvers instead")


@dataclass(frozen=True)
class OracleResult:
    omega: int
    witnesses: tuple
    nodes_explored: int


def _adjacency_masks(g: Graph) -> list:
    masks = []
    for i in range(g.n):
        row = 0
        for j in g.adjacency[i].nonzero()[0]:
            row |= 1 << int(j)
        masks.append(row)
    return masks


def _enumerate_maximum(masks, n, omega, cap):
    """All cliques of size ``omega`` as member masks, in sorted vertex order."""
    found = []

    def expand(r_mask, r_size, p_mask):
        if r_size == omega:
            found.append(r_mask)
            return len(found) < cap
        if r_size + p_mask.bit_count() < omega:
            return True
        x = p_mask
        while x:
            b = x & -x
            v = b.bit_length() - 1
            x ^= b
            higher = ~((b << 1) - 1)
            if not expand(r_mask | b, r_size + 1, p_mask & masks[v] & higher):
                return False
            p_mask ^= b
        return True

    expand(0, 0, (1 << n) - 1 if n else 0)
    return found


def max_clique_exact(g: Graph, enumerate_all: bool = False,
                     cap: int = DEFAULT_CAP,
                     max_witnesses: int = 10_000) -> OracleResult:
    """Exact clique number of ``g`` with one or all maximum cliques as witnesses."""
    if g.n > cap:
        raise CliqueSearchCapError(g.n, cap)
    if g.n == 0:
        empty = Clique(members=frozenset(), size=0, source="oracle")
        return OracleResult(omega=0, witnesses=(empty,), nodes_explored=0)
    masks = _adjacency_masks(g)
    seed_size, seed_mask = kernels.greedy_clique_bits(masks, g.n)
    omega, best_mask, nodes = kernels.max_clique_bits(masks, g.n, seed_size,
                                                      seed_mask)
    if enumerate_all:
        member_masks = _enumerate_maximum(masks, g.n, omega, max_witnesses)
    else:
        member_masks = [best_mask]
    witnesses = []
    for mask in member_masks:
        members = [g.labels[i] for i in range(g.n) if (mask >> i) & 1]
        witnesses.append(Clique.certify(g, members, "oracle"))
    witnesses.sort(key=lambda c: c.sorted_members())
    return OracleResult(omega=omega, witnesses=tuple(witnesses),
                        nodes_explored=nodes)
