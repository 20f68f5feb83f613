"""Attacks on undirected graphs through their connected components."""
from __future__ import annotations

from math import comb
from typing import Iterable

from ..graph import Graph, Instance, connected_components, induced_subgraph
from .knapsack import DEFAULT_TABLE_BOUND, knapsack_dp


def attack_components_unitary(g: Graph, phi: int) -> tuple[tuple[int, ...], int]:
    """Hit the ``phi`` largest components, one vertex (the smallest id) each.

    Returns the attacked vertices and the number of infected vertices.
    """
    if g.directed:
        raise ValueError("component attack needs an undirected graph")
    if phi < 0:
        raise ValueError("attack budget must be non-negative")
    chosen = connected_components(g)[:phi]
    return tuple(sorted(min(c) for c in chosen)), sum(len(c) for c in chosen)


def attack_components_weighted(inst: Instance, phi: int | None = None, vaccinated: Iterable[int] = (),
                               table_bound: int = DEFAULT_TABLE_BOUND) -> tuple[tuple[int, ...], int]:
    """Optimal weighted attack on an undirected instance.

    A component is infected in full by attacking its cheapest vertex, so the
    attack is a knapsack over components (cost = min attack cost, profit =
    total benefit).  Vaccinated vertices, if given, are deleted first.
    Returns the attacked vertices and the infected benefit.
    """
    if inst.graph.directed:
        raise ValueError("component attack needs an undirected graph")
    phi = inst.phi if phi is None else phi
    g, mapping = induced_subgraph(inst.graph, vaccinated)
    back = sorted(mapping, key=mapping.get)
    comps = connected_components(g)
    costs, profits, picks = [], [], []
    for comp in comps:
        members = [back[v] for v in comp]
        cheapest = min(members, key=lambda v: (inst.c_att[v], v))
        picks.append(cheapest)
        costs.append(inst.c_att[cheapest])
        profits.append(sum(inst.b[v] for v in members))
    value, chosen = knapsack_dp(costs, profits, phi, table_bound)
    return tuple(sorted(picks[i] for i in chosen)), value


def pairwise_connectivity(g: Graph, removed: Iterable[int] = ()) -> int:
    """Number of vertex pairs still connected after deleting ``removed``."""
    sub, _ = induced_subgraph(g, removed)
    return sum(comb(len(c), 2) for c in connected_components(sub))
