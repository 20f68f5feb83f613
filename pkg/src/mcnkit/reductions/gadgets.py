"""Compilers from source problems to game instances.

Each ``reduce_*`` function returns a :class:`ReductionCertificate` holding
the target instance, which subgame to solve on it, the threshold ``K`` and
how the optimal value compares to it.  :func:`decide_target` runs the
matching exact solver and :func:`back_map` turns its witness into a
candidate solution of the source.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from ..exact import (DEFAULT_MAX_PLAYS, GameValue, best_attack, best_attack_protect, best_protect,
                     best_vaccination_attack, solve_mcn)
from ..graph import Graph, Instance
from .sources import (BikInstance, CnfFormula, DominatingSetInstance, KnapsackInstance,
                      SourceError, SplitGraphInstance, TikInstance)

_RELATIONS = {
    "<=": lambda x, k: x <= k,
    ">=": lambda x, k: x >= k,
    "<": lambda x, k: x < k,
}


@dataclass(frozen=True)
class ReductionCertificate:
    """Target instance plus everything needed to read its answer back.

    The target answers Yes when ``measure`` (the saved benefit, or the
    infected benefit = total - saved) under optimal play stands in
    ``relation`` to ``K``.
    """

    reduction: str
    source: object
    target: Instance
    problem: str
    K: int
    measure: str
    relation: str
    fixed_D: tuple[int, ...] = ()
    fixed_I: tuple[int, ...] = ()
    extra: dict = field(default_factory=dict)

    @property
    def params(self) -> dict:
        return {"omega": self.target.omega, "phi": self.target.phi, "lambda": self.target.lam,
                "K": self.K, "problem": self.problem, "measure": self.measure,
                "relation": self.relation, "fixed_D": list(self.fixed_D),
                "fixed_I": list(self.fixed_I)}

    def answer(self, value: int) -> bool:
        x = value if self.measure == "saved" else self.target.total_benefit - value
        return _RELATIONS[self.relation](x, self.K)


def decide_target(cert: ReductionCertificate, max_plays: int = DEFAULT_MAX_PLAYS) -> tuple[bool, GameValue]:
    """Solve the target subgame exactly and compare with ``K``."""
    t = cert.target
    if cert.problem == "protect":
        gv = best_protect(t, cert.fixed_D, cert.fixed_I, max_plays=max_plays)
    elif cert.problem == "attack":
        gv = best_attack(t, cert.fixed_D, max_plays=max_plays)
    elif cert.problem == "attack-protect":
        gv = best_attack_protect(t, cert.fixed_D, max_plays=max_plays)
    elif cert.problem == "vaccination-attack":
        gv = best_vaccination_attack(t, max_plays=max_plays)
    elif cert.problem == "mcn":
        gv = solve_mcn(t, max_plays=max_plays)
    else:
        raise ValueError(f"unknown subgame {cert.problem!r}")
    return cert.answer(gv.value), gv


def _instance(n, arcs, directed, names, **kw) -> Instance:
    return Instance.build(Graph(n, directed, tuple(arcs)), names=names, **kw)


def _undirected(pairs):
    arcs = []
    for u, v in pairs:
        arcs += [(u, v), (v, u)]
    return arcs


# ---------------------------------------------------------------- CNP on split graphs

def cnp_protect_threshold(kbar: int) -> int:
    """Largest K with binom(K-1, 2) <= kbar."""
    return (3 + isqrt(8 * kbar + 1)) // 2


def reduce_cnp_split_to_protect(src: SplitGraphInstance) -> ReductionCertificate:
    """Add an attacked vertex u adjacent to the whole clique.

    The infected set is u plus the residual component holding the clique,
    so a deletion leaves pairwise connectivity <= Kbar exactly when the
    matching protection infects at most K vertices.
    """
    n = src.n
    if src.B > n:
        raise SourceError("deletion budget exceeds the number of vertices")
    u = n
    pairs = list(src.edges) + [(u, v) for v in src.clique]
    clique = set(src.clique)
    names = [f"clique:{v}" if v in clique else f"indep:{v}" for v in range(n)] + ["u"]
    target = _instance(n + 1, _undirected(pairs), False, names, omega=0, phi=1, lam=src.B)
    return ReductionCertificate("cnp-split", src, target, "protect", cnp_protect_threshold(src.Kbar),
                                "infected", "<=", fixed_I=(u,))


def cnp_protect_dir_threshold(kbar: int) -> int:
    return 2 + isqrt(8 * kbar + 1)


def reduce_cnp_split_to_protect_dir(src: SplitGraphInstance,
                                    split_independent: bool = False) -> ReductionCertificate:
    """Directed gadget: each clique vertex v becomes t1_v -> t2_v, fed by u.

    Ids: t1_v keeps the id of v, independent vertices keep theirs, then the
    t2 copies follow and u comes last.  Clique edges are dropped; an edge
    between clique vertex r and independent w becomes the arc t1_r -> w.

    With the default layout an independent vertex weighs 1 in the infected
    count while a clique vertex weighs 2, so the threshold
    ``2 + isqrt(8*Kbar + 1)`` does not track the pairwise connectivity of
    mixed components.  ``split_independent=True`` doubles every vertex
    (w -> t2_w as well) so a residual component of k vertices always costs
    1 + 2k, and uses the matching threshold ``1 + 2*kmax`` with kmax the
    largest k such that binom(k, 2) <= Kbar.
    """
    n = src.n
    if src.B >= len(src.clique):
        raise SourceError("needs B < clique size (larger budgets make the instance trivial)")
    clique = set(src.clique)
    doubled = list(range(n)) if split_independent else list(src.clique)
    t2 = {v: n + i for i, v in enumerate(doubled)}
    u = n + len(doubled)
    arcs = [(v, t2[v]) for v in doubled] + [(u, v) for v in src.clique]
    for a, b in src.edges:
        if a in clique and b not in clique:
            arcs.append((a, b))
        elif b in clique and a not in clique:
            arcs.append((b, a))
    names = [f"t1:{v}" if v in clique else f"indep:{v}" for v in range(n)]
    names += [f"t2:{v}" for v in doubled] + ["u"]
    target = _instance(u + 1, arcs, True, names, omega=0, phi=1, lam=src.B)
    if split_independent:
        K = 1 + 2 * ((1 + isqrt(8 * src.Kbar + 1)) // 2)
    else:
        K = cnp_protect_dir_threshold(src.Kbar)
    return ReductionCertificate("cnp-split-dir", src, target, "protect", K, "infected", "<=",
                                fixed_I=(u,), extra={"t2": t2})


# ---------------------------------------------------------------- dominating set

def reduce_dominating_set_to_attack_protect(src: DominatingSetInstance) -> ReductionCertificate:
    """Same graph; attack budget B, protection budget n - B - 1, goal B + 1 infected.

    At B = n the protection budget would be negative; it is clamped to 0 and
    the goal to n (attacking everything is a dominating set).
    """
    n = src.n
    if src.B > n:
        raise SourceError("B exceeds the number of vertices")
    lam = max(n - src.B - 1, 0)
    K = min(src.B + 1, n)
    names = [f"v:{v}" for v in range(n)]
    target = _instance(n, _undirected(src.edges), False, names, omega=0, phi=src.B, lam=lam)
    return ReductionCertificate("dominating-set", src, target, "attack-protect", K, "infected", ">=")


# ---------------------------------------------------------------- knapsack family

def reduce_knapsack_to_attack_w(src: KnapsackInstance) -> ReductionCertificate:
    """Edgeless graph, one vertex per item: attack cost = weight, benefit = profit."""
    n = len(src.p)
    target = Instance.build(Graph(n, False, ()), b=src.p, c_att=src.a,
                            omega=0, phi=src.B, lam=0, names=[f"item:{i}" for i in range(n)])
    return ReductionCertificate("knapsack", src, target, "attack", src.Kbar, "infected", ">=")


def _check_bik(src: BikInstance):
    if not src.nontrivial:
        raise SourceError("BIK gadgets need Kbar < sum(p) and B < sum(p); "
                          "other instances are trivial and excluded")


def reduce_bik_to_attack_protect_w(src: BikInstance) -> ReductionCertificate:
    """Star: centre r (benefit sum(p)+1, attack and protection cost 1); leaf per item.

    Leaves have benefit = protection cost = profit and attack cost = weight.
    Budgets: attack A+1, protection B; Yes when the saved benefit stays < Kbar.
    """
    _check_bik(src)
    m = len(src.p)
    b = [sum(src.p) + 1] + list(src.p)
    c_att = [1] + list(src.a)
    c_prot = [1] + list(src.p)
    target = Instance.build(Graph.from_edges(m + 1, [(0, i + 1) for i in range(m)]),
                            b=b, c_att=c_att, c_prot=c_prot, omega=0, phi=src.A + 1, lam=src.B,
                            names=["root"] + [f"item:{i}" for i in range(m)])
    return ReductionCertificate("bik-ap", src, target, "attack-protect", src.Kbar, "saved", "<")


def reduce_bik_to_vaccination_attack_w(src: BikInstance) -> ReductionCertificate:
    """Star: centre r (benefit Kbar, vaccination and attack cost 1); leaf per item.

    Leaves have benefit = attack cost = profit and vaccination cost = weight.
    Budgets: vaccination A+1, attack B; Yes when the infected benefit stays < Kbar.
    """
    _check_bik(src)
    m = len(src.p)
    b = [src.Kbar] + list(src.p)
    c_vacc = [1] + list(src.a)
    c_att = [1] + list(src.p)
    target = Instance.build(Graph.from_edges(m + 1, [(0, i + 1) for i in range(m)]),
                            b=b, c_vacc=c_vacc, c_att=c_att, omega=src.A + 1, phi=src.B, lam=0,
                            names=["root"] + [f"item:{i}" for i in range(m)])
    return ReductionCertificate("bik-va", src, target, "vaccination-attack", src.Kbar,
                                "infected", "<")


@dataclass(frozen=True)
class DigitLayout:
    """Where each variable and clause sits in the base-10 encoding."""

    width: int
    position: dict  # label -> power of ten


def tik_layout(f: CnfFormula) -> DigitLayout:
    X, Y, Z = f.blocks
    nc = len(f.clauses)
    pos = {}
    for j in range(nc):
        # the first clause gets the most significant clause digit
        pos[("clause", j)] = nc - 1 - j
    offset = nc
    for block in (X, Y, Z):
        for k, v in enumerate(block):
            pos[("var", v)] = offset + k
        offset += len(block)
    pos["forbidden"] = offset
    return DigitLayout(offset + 1, pos)


def reduce_b3cnf_to_tik(f: CnfFormula) -> TikInstance:
    """Digit encoding of an (exists X, forall Y, exists Z) CNF as a TIK instance.

    Two items per variable (true / false literal) weighing one unit in the
    variable's digit; their profit also has a 1 in each clause digit the
    literal appears in.  A clause of width w adds w slack items with profit
    3, 2, 1 in its digit and weight in the forbidden digit.
    """
    if f.kind != "b3cnf":
        raise SourceError("needs a formula with X, Y and Z blocks")
    f.require_width(1, 3)
    X, Y, Z = f.blocks
    lay = tik_layout(f)
    P = lay.position
    a2, a, p, labels = [], [], [], []
    for v in X + Y + Z:
        for sign in (1, -1):
            lit = sign * v
            w = 10 ** P[("var", v)]
            profit = w + sum(10 ** P[("clause", j)] for j, c in enumerate(f.clauses) if lit in c)
            a2.append(w)
            a.append(w)
            p.append(profit)
            labels.append("o_" + f.lit_name(lit))
    forbidden = 10 ** P["forbidden"]
    for j, c in enumerate(f.clauses):
        for k in range(len(c)):
            a2.append(forbidden)
            a.append(forbidden)
            p.append((3 - k) * 10 ** P[("clause", j)])
            labels.append(f"o^{k + 1}_c{j + 1}")

    def number(digits):
        return sum(d * 10 ** pos for pos, d in digits)

    A2 = number((P[("var", v)], 1) for v in X)
    A = number([(P[("var", v)], 2) for v in X] + [(P[("var", v)], 1) for v in Y])
    clause_digits = [(P[("clause", j)], 4) for j in range(len(f.clauses))]
    B = number([(P[("var", v)], 1) for v in X + Z] + [(P[("var", v)], 2) for v in Y] + clause_digits)
    Kbar = number([(P[("var", v)], 1) for v in X + Y + Z] + clause_digits)
    return TikInstance(tuple(a2), tuple(a), tuple(p), A2, A, B, Kbar, tuple(labels))


def tik_digit_rows(tik: TikInstance, width: int) -> list[tuple[str, str, str]]:
    """(item, field, digits) rows, most significant digit first.

    Items whose two weights agree get a single ``a'=a`` row.
    """
    def digits(x):
        s = str(x).rjust(width, "0")
        if len(s) != width:
            raise ValueError(f"{x} does not fit in {width} digits")
        return " ".join(s)

    rows = []
    for i in range(len(tik.p)):
        name = tik.labels[i] if tik.labels is not None else f"o{i}"
        if tik.labels is not None and name.startswith("o^"):
            rows.append((name, "a'", digits(tik.a2[i])))
            rows.append((name, "a", digits(tik.a[i])))
        elif tik.a2[i] == tik.a[i]:
            rows.append((name, "a'=a", digits(tik.a[i])))
        else:
            rows.append((name, "a'", digits(tik.a2[i])))
            rows.append((name, "a", digits(tik.a[i])))
        rows.append((name, "p", digits(tik.p[i])))
    for label, x in (("A'", tik.A2), ("A", tik.A), ("B", tik.B), ("Kbar", tik.Kbar)):
        rows.append(("", label, digits(x)))
    return rows


def format_digit_table(rows) -> str:
    return "\n".join(f"{item:<10} {fld:<5} {ds}".rstrip() for item, fld, ds in rows) + "\n"


def reduce_tik_to_mcn_w(src: TikInstance) -> ReductionCertificate:
    """Root r plus a chain r - v1 - v2 - v3 per item.

    v1 is protectable at cost p, v2 carries benefit p, v3 is vaccinable at
    cost a' and attackable at cost a; every other move is priced one above
    its budget.  r carries benefit K and costs 1 to attack or protect.
    """
    omega, phi, lam, K = src.A2, src.A + 1, src.B, src.Kbar
    m = len(src.p)
    n = 1 + 3 * m
    b = [K] + [0] * (3 * m)
    c_vacc = [max(omega, phi) + 1] + [0] * (3 * m)
    c_att = [1] + [0] * (3 * m)
    c_prot = [1] + [0] * (3 * m)
    names = ["root"]
    pairs = []
    for o in range(m):
        v1, v2, v3 = 1 + 3 * o, 2 + 3 * o, 3 + 3 * o
        names += [f"v1:{o}", f"v2:{o}", f"v3:{o}"]
        pairs += [(0, v1), (v1, v2), (v2, v3)]
        c_vacc[v1], c_att[v1], c_prot[v1], b[v1] = omega + 1, phi + 1, src.p[o], 0
        c_vacc[v2], c_att[v2], c_prot[v2], b[v2] = omega + 1, phi + 1, lam + 1, src.p[o]
        c_vacc[v3], c_att[v3], c_prot[v3], b[v3] = src.a2[o], src.a[o], lam + 1, 0
    target = Instance.build(Graph.from_edges(n, pairs), b=b, c_vacc=c_vacc, c_att=c_att,
                            c_prot=c_prot, omega=omega, phi=phi, lam=lam, names=names)
    return ReductionCertificate("tik", src, target, "mcn", K, "saved", ">=")


# ---------------------------------------------------------------- directed formulas

def reduce_3sat_to_attack_dir(f: CnfFormula) -> ReductionCertificate:
    """Per variable: literal vertices v_u, v_~u both feeding a directed path of
    |C|+|U|-1 vertices; per clause: a vertex fed by its literals.

    Attack budget |U|; Yes when at least |U|(|U|+|C|)+|C| vertices get infected.
    """
    if f.kind != "sat":
        raise SourceError("expects a plain CNF formula without quantifier blocks")
    f.require_width(3, 3)
    nu, nc = f.num_vars, len(f.clauses)
    L = nc + nu - 1
    lit_vertex, names, arcs = {}, [], []
    for v in range(1, nu + 1):
        pos, neg = len(names), len(names) + 1
        lit_vertex[v], lit_vertex[-v] = pos, neg
        names += [f"literal:{f.lit_name(v)}", f"literal:{f.lit_name(-v)}"]
        start = len(names)
        names += [f"path:{f.var_name(v)}:{k}" for k in range(L)]
        if L:
            arcs += [(pos, start), (neg, start)]
            arcs += [(start + k, start + k + 1) for k in range(L - 1)]
    for j, c in enumerate(f.clauses):
        cv = len(names)
        names.append(f"clause:{j + 1}")
        arcs += sorted({(lit_vertex[l], cv) for l in c})
    target = _instance(len(names), arcs, True, names, omega=0, phi=nu, lam=0)
    K = nu * (nu + nc) + nc
    return ReductionCertificate("3sat", f, target, "attack", K, "infected", ">=",
                                extra={"literal_vertex": lit_vertex})


def reduce_b2cnf_to_vaccination_attack_dir(f: CnfFormula) -> ReductionCertificate:
    """Like the 3-SAT gadget with cliques of |C|+|Y|-1 vertices instead of paths.

    Each X literal gets its own clique and the pair v_x, v_~x is joined by
    an edge (two opposite arcs); both Y literals feed one shared clique.
    Budgets: vaccination |X|, attack |X|+|Y|; Yes when at most
    (|X|+|Y|)(|Y|+|C|)+|C|-1 vertices get infected.
    """
    if f.kind != "b2cnf":
        raise SourceError("needs a formula with X and Y blocks")
    f.require_width(3, 3)
    X, Y = f.blocks
    nc = len(f.clauses)
    L = nc + len(Y) - 1
    lit_vertex, names, arcs = {}, [], []

    def clique(tag):
        start = len(names)
        names.extend(f"clique:{tag}:{k}" for k in range(L))
        for i in range(start, start + L):
            for j in range(start, start + L):
                if i != j:
                    arcs.append((i, j))
        return start

    for v in X:
        pos, neg = len(names), len(names) + 1
        lit_vertex[v], lit_vertex[-v] = pos, neg
        names += [f"literal:{f.lit_name(v)}", f"literal:{f.lit_name(-v)}"]
        arcs += [(pos, neg), (neg, pos)]
        if L:
            arcs.append((pos, clique(f.lit_name(v))))
            arcs.append((neg, clique(f.lit_name(-v))))
    for v in Y:
        pos, neg = len(names), len(names) + 1
        lit_vertex[v], lit_vertex[-v] = pos, neg
        names += [f"literal:{f.lit_name(v)}", f"literal:{f.lit_name(-v)}"]
        if L:
            k = clique(f.var_name(v))
            arcs += [(pos, k), (neg, k)]
    for j, c in enumerate(f.clauses):
        cv = len(names)
        names.append(f"clause:{j + 1}")
        arcs += sorted({(lit_vertex[l], cv) for l in c})
    target = _instance(len(names), arcs, True, names, omega=len(X), phi=len(X) + len(Y), lam=0)
    K = (len(X) + len(Y)) * (len(Y) + nc) + nc - 1
    return ReductionCertificate("b2cnf", f, target, "vaccination-attack", K, "infected", "<=",
                                extra={"literal_vertex": lit_vertex})


# ---------------------------------------------------------------- back-mapping

REDUCERS = {
    "cnp-split": reduce_cnp_split_to_protect,
    "dominating-set": reduce_dominating_set_to_attack_protect,
    "knapsack": reduce_knapsack_to_attack_w,
    "bik": reduce_bik_to_attack_protect_w,
    "bik-va": reduce_bik_to_vaccination_attack_w,
    "tik": reduce_tik_to_mcn_w,
    "3sat": reduce_3sat_to_attack_dir,
    "b2cnf": reduce_b2cnf_to_vaccination_attack_dir,
    "cnp-split-dir": reduce_cnp_split_to_protect_dir,
    "cnp-split-dir-fixed": lambda src: reduce_cnp_split_to_protect_dir(src, split_independent=True),
}


def back_map(cert: ReductionCertificate, gv: GameValue):
    """Translate the target's optimal moves into a source solution candidate."""
    name = cert.reduction
    if name == "cnp-split":
        return tuple(sorted(gv.P))
    if name == "cnp-split-dir":
        n = cert.source.n
        inverse = {t: v for v, t in cert.extra["t2"].items()}
        return tuple(sorted({v if v < n else inverse[v] for v in gv.P}))
    if name == "dominating-set":
        # The attacker may stop below its budget.  Adding attacked vertices
        # never lowers the infection in a unitary game, so pad I up to B
        # vertices: an attack of exactly B vertices that still infects B+1
        # against every protection must dominate the graph.
        chosen = set(gv.I)
        for v in range(cert.source.n):
            if len(chosen) >= cert.source.B:
                break
            chosen.add(v)
        return tuple(sorted(chosen))
    if name == "knapsack":
        return tuple(sorted(gv.I))
    if name == "bik-ap":
        return tuple(sorted(v - 1 for v in gv.I if v != 0))
    if name == "bik-va":
        return tuple(sorted(v - 1 for v in gv.D if v != 0))
    if name == "tik":
        return tuple(sorted((v - 3) // 3 for v in gv.D if v != 0 and v % 3 == 0))
    if name == "3sat":
        lv = cert.extra["literal_vertex"]
        return {v: lv[v] in gv.I for v in range(1, cert.source.num_vars + 1)}
    if name == "b2cnf":
        lv = cert.extra["literal_vertex"]
        return {v: lv[-v] in gv.D for v in cert.source.blocks[0]}
    raise ValueError(f"unknown reduction {name!r}")
