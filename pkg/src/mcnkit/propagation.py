"""Game semantics: who gets infected once D, I and P are fixed."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Instance, induced_subgraph, reachable_set


class StrategyError(ValueError):
    """A strategy triple breaks a budget or a disjointness rule."""


class PropertyViolation(AssertionError):
    """An invariant that must hold for every play failed."""


@dataclass(frozen=True, init=False)
class StrategyTriple:
    D: frozenset[int] = frozenset()
    I: frozenset[int] = frozenset()
    P: frozenset[int] = frozenset()

    def __init__(self, D: Iterable[int] = (), I: Iterable[int] = (), P: Iterable[int] = ()):
        object.__setattr__(self, "D", frozenset(D))
        object.__setattr__(self, "I", frozenset(I))
        object.__setattr__(self, "P", frozenset(P))

    def validate(self, inst: Instance, budgets: bool = True) -> None:
        for name in ("D", "I", "P"):
            for v in getattr(self, name):
                if not isinstance(v, int) or not 0 <= v < inst.n:
                    raise StrategyError(f"{name} contains vertex {v!r} outside 0..{inst.n - 1}")
        for a, b in (("I", "D"), ("P", "I"), ("P", "D")):
            common = getattr(self, a) & getattr(self, b)
            if common:
                raise StrategyError(f"vertex {min(common)} is in both {a} and {b}")
        if not budgets:
            return
        for name, costs, budget in (("D", inst.c_vacc, inst.omega),
                                    ("I", inst.c_att, inst.phi),
                                    ("P", inst.c_prot, inst.lam)):
            spent = sum(costs[v] for v in getattr(self, name))
            if spent > budget:
                raise StrategyError(f"{name} costs {spent}, over its budget {budget}")


@dataclass(frozen=True)
class PlayOutcome:
    infected: frozenset[int]
    saved: frozenset[int]
    alpha: tuple[int, ...]
    value: int


def play(inst: Instance, strat: StrategyTriple, *, budgets: bool = True) -> PlayOutcome:
    """Spread the infection from I avoiding D and P; value is the saved benefit.

    ``budgets=False`` skips the budget check (moves fixed by a caller).
    """
    strat.validate(inst, budgets=budgets)
    infected = reachable_set(inst.graph, strat.I, blocked=strat.D | strat.P)
    saved = frozenset(v for v in range(inst.n) if v not in infected)
    alpha = tuple(0 if v in infected else 1 for v in range(inst.n))
    value = sum(inst.b[v] for v in saved)
    return PlayOutcome(infected, saved, alpha, value)


@dataclass
class Verdict:
    consistent: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.consistent


def maximal_alpha(inst: Instance, strat: StrategyTriple) -> tuple[int, ...]:
    """Largest 0/1 vector satisfying both constraint families, by fixpoint.

    Start from all ones and lower any entry whose constraint is violated
    until nothing changes.  The feasible set is closed under componentwise
    max, so the fixpoint is the unique maximal solution.
    """
    z = [1 if v in strat.D else 0 for v in range(inst.n)]
    y = [1 if v in strat.I else 0 for v in range(inst.n)]
    x = [1 if v in strat.P else 0 for v in range(inst.n)]
    alpha = [min(1, 1 + z[v] - y[v]) for v in range(inst.n)]
    changed = True
    while changed:
        changed = False
        for u, v in inst.graph.arcs:
            if alpha[v] > alpha[u] + x[v] + z[v]:
                alpha[v] = 0
                changed = True
    return tuple(alpha)


def check_trilevel_consistency(inst: Instance, strat: StrategyTriple, outcome: PlayOutcome) -> Verdict:
    """Check an outcome against the linear constraints of the trilevel model.

    Reports violated constraints, a non-maximal alpha, and any disagreement
    between alpha, the saved/infected sets and the value.
    """
    problems = []
    n = inst.n
    if len(outcome.alpha) != n:
        return Verdict(False, [f"alpha has length {len(outcome.alpha)}, expected {n}"])
    z = [1 if v in strat.D else 0 for v in range(n)]
    y = [1 if v in strat.I else 0 for v in range(n)]
    x = [1 if v in strat.P else 0 for v in range(n)]
    a = outcome.alpha
    for v in range(n):
        if a[v] not in (0, 1):
            problems.append(f"alpha[{v}]={a[v]} is not binary")
        elif a[v] > 1 + z[v] - y[v]:
            problems.append(f"attack constraint violated at vertex {v}: attacked, not vaccinated, but alpha=1")
    for u, v in inst.graph.arcs:
        if a[v] > a[u] + x[v] + z[v]:
            problems.append(f"spread constraint violated on arc ({u},{v}): alpha[{v}]=1 while alpha[{u}]=0")
    best = maximal_alpha(inst, strat)
    for v in range(n):
        if a[v] < best[v]:
            problems.append(f"not maximal: vertex {v} could be saved")
    if outcome.saved | outcome.infected != frozenset(range(n)) or outcome.saved & outcome.infected:
        problems.append("saved and infected do not partition the vertices")
    for v in range(n):
        if (a[v] == 1) != (v in outcome.saved):
            problems.append(f"alpha[{v}] disagrees with the saved set")
    if outcome.value != sum(inst.b[v] * a[v] for v in range(n)):
        problems.append(f"value {outcome.value} differs from the alpha-weighted benefit")
    if not (strat.D | strat.P) <= outcome.saved:
        problems.append("a vaccinated or protected vertex is not saved")
    if not strat.I <= outcome.infected:
        problems.append("an attacked vertex is not infected")
    return Verdict(not problems, problems)


@dataclass(frozen=True)
class Decomposition:
    reduced_value: int
    removed_benefit: int
    total: int
    mapping: dict


def property1_decompose(inst: Instance, strat: StrategyTriple) -> Decomposition:
    """Play on the graph with D and P deleted, then add their benefit back.

    The sum must equal the value of the full play; a mismatch raises
    :class:`PropertyViolation`.
    """
    strat.validate(inst)
    removed = strat.D | strat.P
    sub, mapping = induced_subgraph(inst.graph, removed)
    keep = sorted(mapping, key=mapping.get)
    reduced = Instance(sub,
                       tuple(inst.b[v] for v in keep),
                       tuple(inst.c_vacc[v] for v in keep),
                       tuple(inst.c_att[v] for v in keep),
                       tuple(inst.c_prot[v] for v in keep),
                       0, inst.phi, 0)
    reduced_value = play(reduced, StrategyTriple(I=[mapping[v] for v in strat.I])).value
    removed_benefit = sum(inst.b[v] for v in removed)
    total = reduced_value + removed_benefit
    direct = play(inst, strat).value
    if total != direct:
        raise PropertyViolation(f"decomposition gives {total}, direct play gives {direct}")
    return Decomposition(reduced_value, removed_benefit, total, mapping)
