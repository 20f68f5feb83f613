"""Exhaustive deciders for the source problems, used as ground truth."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from ..graph import connected_components, induced_subgraph
from .sources import (BikInstance, CnfFormula, DominatingSetInstance, KnapsackInstance,
                      SplitGraphInstance, TikInstance)


class OracleCapExceeded(ValueError):
    """Source instance is larger than the brute-force oracle accepts."""


@dataclass(frozen=True)
class SourceAnswer:
    yes: bool
    witness: object = None


def _subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from combinations(items, k)


# ---------------------------------------------------------------- formulas

def _assignments(variables):
    variables = list(variables)
    for bits in product((False, True), repeat=len(variables)):
        yield dict(zip(variables, bits))


def _exists_z(f: CnfFormula, fixed: dict, z) -> bool:
    return any(f.satisfied_by({**fixed, **za}) for za in _assignments(z))


def b2_x_wins(f: CnfFormula, xa: dict) -> bool:
    """True when no assignment of Y satisfies the formula under ``xa``."""
    return not any(f.satisfied_by({**xa, **ya}) for ya in _assignments(f.blocks[1]))


def b3_x_wins(f: CnfFormula, xa: dict) -> bool:
    """True when every Y assignment extends to a satisfying Z under ``xa``."""
    return all(_exists_z(f, {**xa, **ya}, f.blocks[2]) for ya in _assignments(f.blocks[1]))


def _solve_formula(f: CnfFormula) -> SourceAnswer:
    if f.kind == "sat":
        for a in _assignments(range(1, f.num_vars + 1)):
            if f.satisfied_by(a):
                return SourceAnswer(True, a)
        return SourceAnswer(False)
    wins = b2_x_wins if f.kind == "b2cnf" else b3_x_wins
    for xa in _assignments(f.blocks[0]):
        if wins(f, xa):
            return SourceAnswer(True, xa)
    return SourceAnswer(False)


# ---------------------------------------------------------------- knapsacks

def _follower_best(p, pool, cap):
    """Largest total profit not above ``cap`` using items of ``pool``."""
    sums = {0}
    for i in pool:
        sums |= {s + p[i] for s in sums if s + p[i] <= cap}
    return max(sums)


def bik_leader_wins(bik: BikInstance, removed) -> bool:
    removed = set(removed)
    if sum(bik.a[i] for i in removed) > bik.A:
        return False
    pool = [i for i in range(len(bik.p)) if i not in removed]
    return _follower_best(bik.p, pool, bik.B) < bik.Kbar


def tik_packing_reaches(tik: TikInstance, removed) -> bool:
    """Whether some packing avoiding ``removed`` has profit in [Kbar, B]."""
    pool = [i for i in range(len(tik.p)) if i not in set(removed)]
    return _follower_best(tik.p, pool, tik.B) >= tik.Kbar


def tik_first_move_wins(tik: TikInstance, first, memo=None) -> bool:
    first = set(first)
    if sum(tik.a2[i] for i in first) > tik.A2:
        return False
    memo = {} if memo is None else memo
    rest = [i for i in range(len(tik.p)) if i not in first and tik.a[i] <= tik.A]
    for second in _subsets(rest):
        if sum(tik.a[i] for i in second) > tik.A:
            continue
        if second not in memo:
            memo[second] = tik_packing_reaches(tik, second)
        if not memo[second]:
            return False
    return True


def _solve_tik(tik: TikInstance) -> SourceAnswer:
    memo = {}
    cands = [i for i in range(len(tik.p)) if tik.a2[i] <= tik.A2]
    for first in _subsets(cands):
        if sum(tik.a2[i] for i in first) <= tik.A2 and tik_first_move_wins(tik, first, memo):
            return SourceAnswer(True, tuple(first))
    return SourceAnswer(False)


def _solve_bik(bik: BikInstance) -> SourceAnswer:
    for removed in _subsets(range(len(bik.p))):
        if bik_leader_wins(bik, removed):
            return SourceAnswer(True, tuple(removed))
    return SourceAnswer(False)


def _solve_knapsack(kp: KnapsackInstance) -> SourceAnswer:
    for chosen in _subsets(range(len(kp.p))):
        if sum(kp.a[i] for i in chosen) <= kp.B and sum(kp.p[i] for i in chosen) >= kp.Kbar:
            return SourceAnswer(True, tuple(chosen))
    return SourceAnswer(False)


# ---------------------------------------------------------------- graphs

def dominates(ds: DominatingSetInstance, chosen) -> bool:
    chosen = set(chosen)
    g = ds.graph()
    return len(chosen) <= ds.B and all(v in chosen or chosen & set(g.neighbors[v]) for v in range(ds.n))


def split_residual_connectivity(src: SplitGraphInstance, removed) -> int:
    sub, _ = induced_subgraph(src.graph(), removed)
    return sum(comb(len(c), 2) for c in connected_components(sub))


def cnp_deletion_works(src: SplitGraphInstance, removed) -> bool:
    return len(set(removed)) <= src.B and split_residual_connectivity(src, removed) <= src.Kbar


def _solve_ds(ds: DominatingSetInstance) -> SourceAnswer:
    for k in range(min(ds.B, ds.n) + 1):
        for chosen in combinations(range(ds.n), k):
            if dominates(ds, chosen):
                return SourceAnswer(True, chosen)
    return SourceAnswer(False)


def _solve_cnp(src: SplitGraphInstance) -> SourceAnswer:
    for k in range(min(src.B, src.n) + 1):
        for removed in combinations(range(src.n), k):
            if cnp_deletion_works(src, removed):
                return SourceAnswer(True, removed)
    return SourceAnswer(False)


def solve_source_bruteforce(src, *, max_vars: int = 12, max_items: int = 6,
                            max_vertices: int = 10) -> SourceAnswer:
    """Decide a source instance by exhaustive search of its quantifier structure."""
    if isinstance(src, CnfFormula):
        if src.num_vars > max_vars:
            raise OracleCapExceeded(f"{src.num_vars} variables, oracle cap is {max_vars}")
        return _solve_formula(src)
    if isinstance(src, (KnapsackInstance, BikInstance, TikInstance)):
        if len(src.p) > max_items:
            raise OracleCapExceeded(f"{len(src.p)} items, oracle cap is {max_items}")
        if isinstance(src, TikInstance):
            return _solve_tik(src)
        if isinstance(src, BikInstance):
            return _solve_bik(src)
        return _solve_knapsack(src)
    if isinstance(src, (DominatingSetInstance, SplitGraphInstance)):
        if src.n > max_vertices:
            raise OracleCapExceeded(f"{src.n} vertices, oracle cap is {max_vertices}")
        if isinstance(src, DominatingSetInstance):
            return _solve_ds(src)
        return _solve_cnp(src)
    raise TypeError(f"unsupported source problem {type(src).__name__}")


def source_witness_valid(src, witness) -> bool:
    """Check a claimed Yes-witness directly against the source problem."""
    if isinstance(src, CnfFormula):
        if src.kind == "sat":
            return src.satisfied_by(witness)
        xa = {v: witness[v] for v in src.blocks[0]}
        return b2_x_wins(src, xa) if src.kind == "b2cnf" else b3_x_wins(src, xa)
    if isinstance(src, KnapsackInstance):
        return (sum(src.a[i] for i in witness) <= src.B
                and sum(src.p[i] for i in witness) >= src.Kbar)
    if isinstance(src, BikInstance):
        return bik_leader_wins(src, witness)
    if isinstance(src, TikInstance):
        return tik_first_move_wins(src, witness)
    if isinstance(src, DominatingSetInstance):
        return dominates(src, witness)
    if isinstance(src, SplitGraphInstance):
        return cnp_deletion_works(src, witness)
    raise TypeError(f"unsupported source problem {type(src).__name__}")
