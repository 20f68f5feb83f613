"""Optimal protection on unitary trees and forests by dynamic programming.

For a vertex ``a`` with children ``a_1..a_s`` (increasing id) the table
``F_a(c, m, sigma)`` is the largest number of vertices of the subtree
``T_a`` that are already known to be saved, where

* ``c`` is the number of protected vertices in ``T_a``;
* ``m`` is the number of vertices in the open part around ``a``: the
  unprotected vertices joined to ``a`` by unprotected paths inside ``T_a``
  (zero when ``a`` is protected);
* ``sigma`` is 1 when that open part holds an attacked vertex.

Vertices of the open part are not counted yet: whether they survive depends
on the rest of the tree.  They are credited when an ancestor is protected
(their part is closed off clean) or at the root.  When ``sigma`` is 1 the
open part is lost anyway and ``m`` is kept at 0.

``G_{a_i}`` is the same table for ``a`` together with the subtrees of
``a_i..a_s``; it is built right to left from ``a`` alone and
``F_a = G_{a_1}``.  Missing entries stand for minus infinity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..graph import Instance, connected_components, is_forest

NEG_INF = float("-inf")

State = tuple  # (c, m, sigma)


@dataclass
class DpState:
    """Tables of one rooted tree."""

    root: int
    budget: int
    children: dict[int, tuple[int, ...]]
    size: dict[int, int]
    F: dict[int, dict[State, int]]
    # G[a][i] for i = 0..s; G[a][s] is the table of ``a`` alone and
    # G[a][0] == F[a].  back[a][i] maps a state of G[a][i] to the pair
    # (state of F[a_i], state of G[a][i+1]) it came from.
    G: dict[int, list[dict[State, int]]] = field(default_factory=dict)
    back: dict[int, list[dict[State, tuple[State, State]]]] = field(default_factory=dict)

    def value(self, a: int, c: int, m: int, sigma: int):
        return self.F[a].get((c, m, sigma), NEG_INF)

    def table(self, a: int) -> list[list[list]]:
        """Dense ``F_a[c][m][sigma]`` with ``NEG_INF`` for infeasible entries."""
        return [[[self.value(a, c, m, s) for s in (0, 1)]
                 for m in range(self.size[a] + 1)]
                for c in range(self.budget + 1)]


@dataclass
class TreeDpResult:
    protected: tuple[int, ...]
    saved: int
    states: list[DpState]

    def __iter__(self) -> Iterator:
        return iter((self.protected, self.saved))


def _base(a: int, attacked: set[int], budget: int) -> dict[State, int]:
    if a in attacked:
        return {(0, 0, 1): 0}
    table = {(0, 1, 0): 0}
    if budget >= 1:
        table[(1, 0, 0)] = 1
    return table


def _merge(child: dict[State, int], rest: dict[State, int], budget: int):
    """Attach one child table to the table of ``a`` plus its later children."""
    out: dict[State, int] = {}
    back: dict[State, tuple[State, State]] = {}
    for rs in sorted(rest):
        cr, mr, sr = rs
        vr = rest[rs]
        for cs in sorted(child):
            cc, mc, sc = cs
            c = cr + cc
            if c > budget:
                continue
            val = vr + child[cs]
            if sr == 1:
                # a is infected: the child's open part joins the infection
                ns = (c, 0, 1)
            elif mr == 0:
                # a is protected: the child's open part is cut off here
                ns = (c, 0, 0)
                if sc == 0:
                    val += mc
            elif sc == 1:
                ns = (c, 0, 1)
            else:
                ns = (c, mr + mc, 0)
            if val > out.get(ns, NEG_INF):
                out[ns] = val
                back[ns] = (cs, rs)
    return out, back


def _tree_tables(adj, nodes: list[int], root: int, attacked: set[int], budget: int) -> DpState:
    parent = {root: None}
    order = [root]
    for u in order:
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    children = {a: tuple(sorted(w for w in adj[a] if parent.get(w) == a and w != parent[a]))
                for a in order}
    st = DpState(root, budget, children, {}, {})
    for a in reversed(order):
        kids = children[a]
        s = len(kids)
        tables: list = [None] * (s + 1)
        backs: list = [None] * (s + 1)
        tables[s] = _base(a, attacked, budget)
        backs[s] = {}
        for i in range(s - 1, -1, -1):
            tables[i], backs[i] = _merge(st.F[kids[i]], tables[i + 1], budget)
        st.F[a] = tables[0]
        st.G[a] = tables
        st.back[a] = backs
        st.size[a] = 1 + sum(st.size[k] for k in kids)
    return st


def _root_curve(st: DpState):
    """Best final value for each budget 0..budget, with the root state used."""
    best_at = {}
    for (c, m, sigma), v in st.F[st.root].items():
        score = v + (m if sigma == 0 else 0)
        if score > best_at.get(c, (NEG_INF,))[0]:
            best_at[c] = (score, (c, m, sigma))
    curve = []
    run = (NEG_INF, None)
    for c in range(st.budget + 1):
        if c in best_at and best_at[c][0] > run[0]:
            run = best_at[c]
        curve.append(run)
    return curve


def _recover(st: DpState, state: State) -> list[int]:
    protected = []
    stack = [(st.root, state)]
    while stack:
        a, s = stack.pop()
        kids = st.children[a]
        for i, kid in enumerate(kids):
            cs, s = st.back[a][i][s]
            stack.append((kid, cs))
        if s == (1, 0, 0):
            protected.append(a)
    return sorted(protected)


def protect_tree_dp(inst: Instance, attacked: Iterable[int], lam: int | None = None,
                    root: int | None = None) -> TreeDpResult:
    """Optimal protection for a unitary undirected forest.

    Each tree holding an attacked vertex gets its own tables (rooted at its
    smallest vertex, or at ``root`` for the tree containing it); trees are
    then combined by splitting the budget.  Returns the protected set and
    the number of saved vertices.
    """
    g = inst.graph
    if g.directed or not is_forest(g):
        raise ValueError("tree DP needs an undirected tree or forest")
    if any(w != 1 for w in inst.b) or any(w != 1 for w in inst.c_prot):
        raise ValueError("tree DP needs unit benefits and unit protection costs")
    attacked = set(attacked)
    for v in attacked:
        if not 0 <= v < g.n:
            raise ValueError(f"attacked vertex {v} out of range")
    budget = inst.lam if lam is None else lam
    if budget < 0:
        raise ValueError("protection budget must be non-negative")

    safe = 0
    pieces = []  # (curve, state)
    for comp in sorted(connected_components(g), key=min):
        if not comp & attacked:
            safe += len(comp)
            continue
        r = root if root is not None and root in comp else min(comp)
        st = _tree_tables(g.neighbors, sorted(comp), r, attacked, budget)
        pieces.append((_root_curve(st), st))

    # split the budget across trees
    total = [0] * (budget + 1)
    choice = []
    for curve, _ in pieces:
        new = [NEG_INF] * (budget + 1)
        pick = [0] * (budget + 1)
        for c in range(budget + 1):
            for k in range(c + 1):
                val = total[c - k] + curve[k][0]
                if val > new[c]:
                    new[c], pick[c] = val, k
        total = new
        choice.append(pick)
    protected = []
    c = budget
    for (curve, st), pick in reversed(list(zip(pieces, choice))):
        k = pick[c]
        protected.extend(_recover(st, curve[k][1]))
        c -= k
    return TreeDpResult(tuple(sorted(protected)), safe + int(total[budget]),
                        [st for _, st in pieces])
