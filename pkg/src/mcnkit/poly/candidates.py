"""Candidate vertices for directed protection and the arborescence greedy."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..graph import Graph, Instance, is_acyclic, reachable_set


@dataclass(frozen=True)
class CandidateSet:
    members: frozenset[int]
    values: dict[int, int] = field(default_factory=dict)
    saves: dict[int, frozenset[int]] = field(default_factory=dict)


def _newly_saved(g: Graph, attacked: set[int], threatened: frozenset[int], v: int) -> frozenset[int]:
    still = reachable_set(g, attacked, blocked=[v])
    return threatened - still


def compute_candidates(g: Graph, attacked: Iterable[int]) -> CandidateSet:
    """Vertices whose protection alone saves an inclusion-maximal set.

    Only vertices the infection can reach are considered.  ``values[v]`` is
    the number of vertices that protecting ``v`` alone saves on top of the
    ones that are safe anyway.
    """
    attacked = set(attacked)
    threatened = reachable_set(g, attacked) - attacked
    saves = {v: _newly_saved(g, attacked, threatened, v) for v in sorted(threatened)}
    members = set()
    for v, sv in saves.items():
        # v is dominated when some other single protection saves strictly more
        # including everything v saves; for reachable vertices two different
        # protections never save the same set.
        if not any(u != v and sv < su for u, su in saves.items()):
            members.add(v)
    return CandidateSet(frozenset(members),
                        {v: len(saves[v]) for v in sorted(members)},
                        {v: saves[v] for v in sorted(members)})


def check_arborescence_forest(g: Graph, attacked: set[int]) -> None:
    """Raise unless the graph left after deleting ``attacked`` is a forest of arborescences."""
    if not g.directed:
        raise ValueError("arborescence greedy needs a directed graph")
    for v in range(g.n):
        if v in attacked:
            continue
        parents = [u for u in g.in_neighbors[v] if u not in attacked]
        if len(parents) > 1:
            raise ValueError(f"graph without the attacked vertices is not an arborescence forest: "
                             f"vertex {v} has in-degree {len(parents)}")
    keep = [v for v in range(g.n) if v not in attacked]
    index = {v: i for i, v in enumerate(keep)}
    sub = Graph(len(keep), True, tuple((index[u], index[v]) for u, v in g.arcs
                                       if u in index and v in index))
    if not is_acyclic(sub):
        raise ValueError("graph without the attacked vertices contains a directed cycle")


def protect_arborescence_greedy(inst: Instance, attacked: Iterable[int], lam: int | None = None
                                ) -> tuple[tuple[int, ...], int]:
    """Optimal protection when the non-attacked part is a forest of arborescences.

    The candidates are the direct successors of attacked vertices.  Their
    saved sets are disjoint, so the best protection takes the ``lam``
    candidates of largest saved benefit (ties by smallest id).  Protection
    costs must all be one.  Returns (P, total saved benefit).
    """
    g = inst.graph
    attacked = set(attacked)
    lam = inst.lam if lam is None else lam
    check_arborescence_forest(g, attacked)
    if any(c != 1 for c in inst.c_prot):
        raise ValueError("arborescence greedy needs unit protection costs")
    cands = sorted({w for u in attacked for w in g.out_neighbors[u] if w not in attacked})
    hit = set(cands)
    gain = {}
    for v in cands:
        # v's subtree, stopping at vertices the attack reaches directly
        total, stack = 0, [v]
        while stack:
            u = stack.pop()
            total += inst.b[u]
            stack.extend(w for w in g.out_neighbors[u] if w not in hit and w not in attacked)
        gain[v] = total
    chosen = sorted(cands, key=lambda v: (-gain[v], v))[:lam]
    infected = reachable_set(g, attacked, blocked=chosen)
    value = sum(inst.b[v] for v in range(inst.n) if v not in infected)
    return tuple(sorted(chosen)), value
