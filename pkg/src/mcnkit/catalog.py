"""Small hand-made instances used by the tests, the benchmarks and the CLI.

Vertices carry their display labels in ``names``; ``ids`` translates labels
to vertex ids.
"""
from __future__ import annotations

from .graph import Graph, Instance


def _labelled(labels, arcs, directed=True, **budgets) -> Instance:
    index = {lab: i for i, lab in enumerate(labels)}
    g = Graph.from_edges(len(labels), [(index[u], index[v]) for u, v in arcs], directed=directed)
    return Instance.build(g, names=[str(x) for x in labels], **budgets)


def ids(inst: Instance, labels) -> set[int]:
    return {inst.names.index(str(x)) for x in labels}


def labels(inst: Instance, vertices) -> set[int]:
    return {int(inst.names[v]) for v in vertices}


def six_vertex_game() -> Instance:
    """Directed unitary game on labels 1..6 with all budgets 1.

    Vaccinating 3, attacking 2 and protecting 1 leaves 2 and 6 infected.
    """
    arcs = [(1, 4), (2, 1), (2, 6), (3, 1), (3, 2), (3, 5), (4, 3), (5, 3)]
    return _labelled(range(1, 7), arcs, omega=1, phi=1, lam=1)


def polytree_example() -> Instance:
    """Polytree on labels 1..12 where greedy-by-value protection is not optimal."""
    arcs = [(12, 1), (10, 3), (1, 2), (3, 2), (2, 4), (4, 5), (5, 6), (6, 7), (6, 8),
            (8, 9), (11, 9)]
    return _labelled(range(1, 13), arcs, phi=3, lam=2)


def diamond_dag_example() -> Instance:
    """DAG where vertex 3 has two parents yet protecting 1 saves everything."""
    arcs = [(0, 1), (1, 2), (1, 4), (2, 3), (4, 3), (3, 5)]
    return _labelled(range(6), arcs, phi=1, lam=1)


def arborescence_example() -> Instance:
    """Arborescence rooted at 0 plus an extra attacked source 9 pointing at 4."""
    arcs = [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (9, 4), (1, 6), (1, 7), (7, 8)]
    return _labelled(range(10), arcs, phi=2, lam=1)


def split_graph_example(with_isolated: bool = True) -> dict:
    """Split graph with clique {1,2,3,4} and independent vertices 5, 7 (and 6).

    Returned in the split-graph source format with labels shifted to 0-based
    ids (label k is id k-1).
    """
    clique = [0, 1, 2, 3]
    independent = [4, 5, 6] if with_isolated else [4, 5]
    edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3], [4, 0], [4, 2]]
    edges.append([6, 3] if with_isolated else [5, 3])
    return {"clique": clique, "independent": independent, "edges": edges, "B": 1, "Kbar": 3}


TIK_EXAMPLE_DIMACS = """c names a b c d
c blocks X: 1 2 / Y: 3 / Z: 4
p cnf 4 3
1 2 -3 0
-1 -2 4 0
1 3 2 0
"""

# (a or b or not c) and (not a or b or c) and (a or not b or c)
SAT_EXAMPLE_DIMACS = """c names a b c
p cnf 3 3
1 2 -3 0
-1 2 3 0
1 -2 3 0
"""

# same clauses as the TIK example, with X = {a, b} and Y = {c, d}
B2_EXAMPLE_DIMACS = """c names a b c d
c blocks X: 1 2 / Y: 3 4
p cnf 4 3
1 2 -3 0
-1 -2 4 0
1 3 2 0
"""
