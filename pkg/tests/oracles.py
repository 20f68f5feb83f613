"""Deliberately naive reference implementations used as test oracles.

Nothing here shares code with the library beyond the Instance container.
"""
from itertools import combinations


def spread(inst, D=(), I=(), P=()):
    blocked = set(D) | set(P)
    infected = {v for v in I if v not in blocked}
    changed = True
    while changed:
        changed = False
        for u, v in inst.graph.arcs:
            if u in infected and v not in infected and v not in blocked:
                infected.add(v)
                changed = True
    return infected


def value(inst, D=(), I=(), P=()):
    infected = spread(inst, D, I, P)
    return sum(inst.b[v] for v in range(inst.n) if v not in infected)


def subsets(costs, pool, budget):
    pool = list(pool)
    for k in range(len(pool) + 1):
        for s in combinations(pool, k):
            if sum(costs[v] for v in s) <= budget:
                yield s


def protect(inst, D, I, lam=None):
    lam = inst.lam if lam is None else lam
    pool = [v for v in range(inst.n) if v not in D and v not in I]
    return max(value(inst, D, I, P) for P in subsets(inst.c_prot, pool, lam))


def attack(inst, D, phi=None):
    phi = inst.phi if phi is None else phi
    pool = [v for v in range(inst.n) if v not in D]
    return min(value(inst, D, I) for I in subsets(inst.c_att, pool, phi))


def attack_protect(inst, D):
    pool = [v for v in range(inst.n) if v not in D]
    return min(protect(inst, D, I) for I in subsets(inst.c_att, pool, inst.phi))


def vaccination_attack(inst):
    return max(attack(inst, D) for D in subsets(inst.c_vacc, range(inst.n), inst.omega))


def mcn(inst):
    return max(attack_protect(inst, D) for D in subsets(inst.c_vacc, range(inst.n), inst.omega))


def components(n, edges, removed=()):
    removed = set(removed)
    adj = {v: set() for v in range(n) if v not in removed}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].add(v)
            adj[v].add(u)
    seen, out = set(), []
    for s in adj:
        if s in seen:
            continue
        comp, stack = set(), [s]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        out.append(comp)
    return out


def min_max_phi_components(n, edges, omega, phi):
    """Delete at most omega vertices to minimise the size of the phi largest components."""
    best = None
    for k in range(omega + 1):
        for removed in combinations(range(n), k):
            sizes = sorted((len(c) for c in components(n, edges, removed)), reverse=True)
            total = sum(sizes[:phi])
            best = total if best is None else min(best, total)
    return best
