"""Pick an algorithm for a (sub)game and run it.

``brute`` always uses the exhaustive solvers.  ``poly`` uses a special-case
algorithm and fails when the instance does not meet its preconditions;
``auto`` tries ``poly`` and falls back to ``brute``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact import (DEFAULT_MAX_PLAYS, GameValue, best_attack, best_attack_protect, best_protect,
                    best_vaccination_attack, solve_mcn)
from .graph import Instance, induced_subgraph, is_forest
from .poly.attack import attack_components_unitary, attack_components_weighted
from .poly.candidates import check_arborescence_forest, protect_arborescence_greedy
from .poly.tree_dp import protect_tree_dp

PROBLEMS = ("protect", "attack", "attack-protect", "vaccination-attack", "mcn")
ALGOS = ("brute", "poly", "auto")


class NoPolyAlgorithm(ValueError):
    """The instance does not satisfy the preconditions of any special-case algorithm."""


@dataclass(frozen=True)
class Solution:
    result: GameValue
    algorithm: str


def _without(inst: Instance, removed):
    """Instance on G - removed with the same weights, plus id maps both ways."""
    sub, mapping = induced_subgraph(inst.graph, removed)
    keep = sorted(mapping, key=mapping.get)
    pick = lambda vec: [vec[v] for v in keep]
    reduced = Instance.build(sub, b=pick(inst.b), c_vacc=pick(inst.c_vacc), c_att=pick(inst.c_att),
                             c_prot=pick(inst.c_prot), omega=inst.omega, phi=inst.phi, lam=inst.lam)
    return reduced, mapping, keep


def _poly_protect(inst: Instance, D, I) -> Solution:
    # vaccinated vertices act as deleted ones that keep their benefit
    sub, mapping, keep = _without(inst, D)
    I_sub = [mapping[v] for v in I]
    kept_benefit = sum(inst.b[v] for v in D)
    g = sub.graph
    if not g.directed:
        if not is_forest(g):
            raise NoPolyAlgorithm("protect: undirected instance is not a forest once D is removed")
        if any(w != 1 for w in sub.b) or any(w != 1 for w in sub.c_prot):
            raise NoPolyAlgorithm("protect: tree DP needs unit benefits and protection costs")
        P, saved = protect_tree_dp(sub, I_sub)
        algo = "tree-dp"
    else:
        try:
            check_arborescence_forest(g, set(I_sub))
        except ValueError as exc:
            raise NoPolyAlgorithm(f"protect: {exc}") from None
        if any(w != 1 for w in sub.c_prot):
            raise NoPolyAlgorithm("protect: arborescence greedy needs unit protection costs")
        P, saved = protect_arborescence_greedy(sub, I_sub)
        algo = "arborescence-greedy"
    gv = GameValue(saved + kept_benefit, tuple(D), tuple(I), tuple(sorted(keep[v] for v in P)))
    return Solution(gv, algo)


def _poly_attack(inst: Instance, D) -> Solution:
    if inst.graph.directed:
        raise NoPolyAlgorithm("attack: component attack needs an undirected graph")
    if inst.unitary:
        sub, mapping, keep = _without(inst, D)
        I, infected = attack_components_unitary(sub.graph, inst.phi)
        gv = GameValue(inst.total_benefit - infected, tuple(D), tuple(sorted(keep[v] for v in I)))
        return Solution(gv, "components-unitary")
    I, infected = attack_components_weighted(inst, vaccinated=D)
    return Solution(GameValue(inst.total_benefit - infected, tuple(D), I), "components-knapsack")


def solve_problem(inst: Instance, problem: str, algo: str = "auto", D=(), I=(), *,
                  max_plays: int = DEFAULT_MAX_PLAYS, tie_break: str = "first") -> Solution:
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    if algo not in ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}")
    D, I = tuple(sorted(set(D))), tuple(sorted(set(I)))
    if problem in ("vaccination-attack", "mcn") and (D or I):
        raise ValueError(f"{problem} chooses D and I itself; do not pass them")
    if problem in ("attack", "attack-protect") and I:
        raise ValueError(f"{problem} chooses I itself; do not pass it")
    if algo != "brute":
        try:
            if problem == "protect":
                return _poly_protect(inst, D, I)
            if problem == "attack":
                return _poly_attack(inst, D)
            raise NoPolyAlgorithm(f"no polynomial algorithm for {problem}")
        except NoPolyAlgorithm:
            if algo == "poly":
                raise
    if problem == "protect":
        return Solution(best_protect(inst, D, I, max_plays=max_plays, tie_break=tie_break), "brute")
    if problem == "attack":
        return Solution(best_attack(inst, D, max_plays=max_plays, tie_break=tie_break), "brute")
    if problem == "attack-protect":
        return Solution(best_attack_protect(inst, D, max_plays=max_plays, tie_break=tie_break), "brute")
    if problem == "vaccination-attack":
        return Solution(best_vaccination_attack(inst, max_plays=max_plays, tie_break=tie_break), "brute")
    return Solution(solve_mcn(inst, max_plays=max_plays, tie_break=tie_break), "brute")
