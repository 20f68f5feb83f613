import json

import pytest

from mcnkit.catalog import (B2_EXAMPLE_DIMACS, SAT_EXAMPLE_DIMACS, TIK_EXAMPLE_DIMACS,
                            split_graph_example)
from mcnkit.exact import best_attack, best_attack_protect, best_vaccination_attack, solve_mcn
from mcnkit.graph import parse_instance, serialize_instance
from mcnkit.propagation import StrategyTriple, play
from mcnkit.reductions import (BikInstance, CnfFormula, DominatingSetInstance, KnapsackInstance,
                               SourceError, SplitGraphInstance, TikInstance, back_map,
                               decide_target, parse_dimacs, reduce_3sat_to_attack_dir,
                               reduce_b2cnf_to_vaccination_attack_dir, reduce_b3cnf_to_tik,
                               reduce_bik_to_attack_protect_w, reduce_bik_to_vaccination_attack_w,
                               reduce_cnp_split_to_protect, reduce_cnp_split_to_protect_dir,
                               reduce_dominating_set_to_attack_protect, reduce_knapsack_to_attack_w,
                               reduce_tik_to_mcn_w, run_round_trips, solve_source_bruteforce)
from mcnkit.reductions.gadgets import REDUCERS, cnp_protect_dir_threshold, cnp_protect_threshold
from mcnkit.reductions.sources import to_dimacs
from mcnkit.reductions.verify import check_b3cnf_tik


def split(with_isolated=True):
    doc = split_graph_example(with_isolated)
    return SplitGraphInstance(doc["clique"], doc["independent"],
                              tuple(map(tuple, doc["edges"])), doc["B"], doc["Kbar"])


# ---------------------------------------------------------------- CNP on split graphs

@pytest.mark.parametrize("kbar, K", [(0, 2), (1, 3), (3, 4), (6, 5), (5, 4)])
def test_undirected_threshold(kbar, K):
    assert cnp_protect_threshold(kbar) == K
    assert (K - 1) * (K - 2) // 2 <= kbar < K * (K - 1) // 2


def test_directed_threshold():
    assert cnp_protect_dir_threshold(3) == 7
    assert cnp_protect_dir_threshold(0) == 3


@pytest.mark.parametrize("with_isolated, n", [(True, 8), (False, 7)])
def test_split_gadget_shape(with_isolated, n):
    cert = reduce_cnp_split_to_protect(split(with_isolated))
    t = cert.target
    assert t.n == n and not t.graph.directed
    assert cert.fixed_I == (n - 1,) and t.lam == 1 and cert.K == 4
    # u touches exactly the clique
    assert set(t.graph.neighbors[n - 1]) == {0, 1, 2, 3}
    yes, gv = decide_target(cert)
    assert yes == solve_source_bruteforce(cert.source).yes


@pytest.mark.parametrize("with_isolated, n", [(True, 12), (False, 11)])
def test_directed_split_gadget_shape(with_isolated, n):
    cert = reduce_cnp_split_to_protect_dir(split(with_isolated))
    t = cert.target
    assert t.n == n and t.graph.directed
    assert t.names[-1] == "u" and cert.fixed_I == (n - 1,)
    assert cert.K == 7
    src_n = cert.source.n
    for v in (0, 1, 2, 3):
        assert (v, cert.extra["t2"][v]) in t.graph.arcs
        assert t.names[cert.extra["t2"][v]] == f"t2:{v}"


def test_directed_split_needs_small_budget():
    src = SplitGraphInstance((0, 1), (2,), ((0, 1), (1, 2)), 2, 0)
    with pytest.raises(SourceError):
        reduce_cnp_split_to_protect_dir(src)


def test_directed_split_counterexample_with_default_layout():
    # clique 0..3, independent 4..6: no deletion of zero vertices gets the
    # connectivity under 14, yet the target protects nothing and infects 12 <= K
    edges = [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (1, 6), (2, 3), (3, 4), (3, 6)]
    src = SplitGraphInstance((0, 1, 2, 3), (4, 5, 6), tuple(edges), 0, 14)
    assert not solve_source_bruteforce(src).yes
    cert = reduce_cnp_split_to_protect_dir(src)
    yes, gv = decide_target(cert)
    assert cert.K == 12 and yes
    assert cert.target.total_benefit - gv.value == 12
    fixed = reduce_cnp_split_to_protect_dir(src, split_independent=True)
    assert not decide_target(fixed)[0]


@pytest.mark.parametrize("name", ["cnp-split", "cnp-split-dir-fixed", "dominating-set", "knapsack",
                                  "bik", "bik-va", "tik", "3sat", "b2cnf"])
def test_round_trips_agree(name):
    rep = run_round_trips(name, 25, seed=11)
    assert rep.ok, rep.summary()
    assert 0 < rep.summary()["yes"] < 25 or name in ("knapsack",)


def test_round_trips_are_deterministic():
    a = run_round_trips("dominating-set", 10, seed=3)
    b = run_round_trips("dominating-set", 10, seed=3)
    assert [s.source for s in a.samples] == [s.source for s in b.samples]
    assert [s.target_value for s in a.samples] == [s.target_value for s in b.samples]


def test_unknown_reduction():
    with pytest.raises(ValueError):
        run_round_trips("vertex-cover", 1, 0)


# ---------------------------------------------------------------- dominating set

def test_dominating_set_triangle():
    src = DominatingSetInstance(3, ((0, 1), (1, 2), (0, 2)), 1)
    cert = reduce_dominating_set_to_attack_protect(src)
    assert (cert.target.phi, cert.target.lam, cert.K) == (1, 1, 2)
    yes, gv = decide_target(cert)
    assert yes and solve_source_bruteforce(src).yes


def test_dominating_set_edgeless():
    src = DominatingSetInstance(3, (), 2)
    cert = reduce_dominating_set_to_attack_protect(src)
    yes, _ = decide_target(cert)
    assert not yes and not solve_source_bruteforce(src).yes


def test_dominating_set_budget_clamps():
    src = DominatingSetInstance(3, ((0, 1),), 3)
    cert = reduce_dominating_set_to_attack_protect(src)
    assert cert.target.lam == 0 and cert.K == 3
    assert decide_target(cert)[0]


def test_dominating_set_back_map_pads_small_attacks():
    # a star: one attacked centre already infects everything
    src = DominatingSetInstance(4, ((0, 1), (0, 2), (0, 3)), 2)
    cert = reduce_dominating_set_to_attack_protect(src)
    yes, gv = decide_target(cert)
    assert yes
    chosen = back_map(cert, gv)
    assert len(chosen) == 2 and 0 in chosen


# ---------------------------------------------------------------- knapsack family

def test_knapsack_gadget():
    src = KnapsackInstance((2, 2, 2), (5, 4, 3), 4, 9)
    cert = reduce_knapsack_to_attack_w(src)
    assert cert.target.graph.arcs == ()
    yes, gv = decide_target(cert)
    assert yes and back_map(cert, gv) == (0, 1)
    assert not decide_target(reduce_knapsack_to_attack_w(KnapsackInstance((2, 2, 2), (5, 4, 3), 4, 10)))[0]


BIK = BikInstance((2, 1), (3, 4), 2, 4, 4)


def test_bik_attack_protect_star():
    cert = reduce_bik_to_attack_protect_w(BIK)
    t = cert.target
    assert (t.b, t.c_att, t.c_prot, t.phi, t.lam) == ((8, 3, 4), (1, 2, 1), (1, 3, 4), 3, 4)
    assert best_attack_protect(t).value == 3
    yes, gv = decide_target(cert)
    src = solve_source_bruteforce(BIK)
    assert yes and src.yes and tuple(src.witness) == (1,)
    assert back_map(cert, gv) == (1,)


def test_bik_vaccination_attack_star():
    cert = reduce_bik_to_vaccination_attack_w(BIK)
    t = cert.target
    assert (t.b, t.c_vacc, t.c_att, t.omega, t.phi) == ((4, 3, 4), (1, 2, 1), (1, 3, 4), 3, 4)
    assert best_vaccination_attack(t).value == 8
    assert decide_target(cert)[0]


def test_bik_trivial_instances_rejected():
    with pytest.raises(SourceError):
        reduce_bik_to_attack_protect_w(BikInstance((1,), (3,), 1, 3, 3))


def test_tik_gadget_prices_out_other_moves():
    tik = TikInstance((1, 2), (2, 1), (3, 4), 2, 2, 4, 4)
    cert = reduce_tik_to_mcn_w(tik)
    t = cert.target
    assert t.n == 7 and t.names[:4] == ("root", "v1:0", "v2:0", "v3:0")
    affordable = lambda costs, budget: {v for v in range(t.n) if costs[v] <= budget}
    assert affordable(t.c_vacc, t.omega) <= {3, 6}
    assert affordable(t.c_att, t.phi) <= {0, 3, 6}
    assert affordable(t.c_prot, t.lam) <= {0, 1, 4}
    yes, gv = decide_target(cert)
    assert yes == solve_source_bruteforce(tik).yes


# ---------------------------------------------------------------- formulas

def test_3sat_example():
    f = parse_dimacs(SAT_EXAMPLE_DIMACS)
    cert = reduce_3sat_to_attack_dir(f)
    t = cert.target
    assert t.phi == 3 and cert.K == 21
    lit = cert.extra["literal_vertex"]
    I = [lit[1], lit[2], lit[3]]
    assert t.total_benefit - play(t, StrategyTriple(I=I)).value == 21
    yes, gv = decide_target(cert)
    assert yes and f.satisfied_by(back_map(cert, gv))


def test_3sat_unsatisfiable():
    clauses = tuple((a, b, c) for a in (1, -1) for b in (2, -2) for c in (3, -3))
    cert = reduce_3sat_to_attack_dir(CnfFormula(3, clauses))
    assert not decide_target(cert)[0]


def test_b2cnf_example():
    f = parse_dimacs(B2_EXAMPLE_DIMACS)
    cert = reduce_b2cnf_to_vaccination_attack_dir(f)
    t = cert.target
    assert (t.omega, t.phi, cert.K) == (2, 4, 22)
    lit = cert.extra["literal_vertex"]
    gv = best_attack(t, (lit[1], lit[2]))
    assert t.total_benefit - gv.value <= 22
    yes, _ = decide_target(cert)
    assert yes == solve_source_bruteforce(f).yes


def test_formula_kind_checks():
    with pytest.raises(SourceError):
        reduce_3sat_to_attack_dir(parse_dimacs(B2_EXAMPLE_DIMACS))
    with pytest.raises(SourceError):
        reduce_b2cnf_to_vaccination_attack_dir(parse_dimacs(SAT_EXAMPLE_DIMACS))
    with pytest.raises(SourceError):
        reduce_b3cnf_to_tik(parse_dimacs(SAT_EXAMPLE_DIMACS))
    with pytest.raises(SourceError):
        reduce_3sat_to_attack_dir(CnfFormula(2, ((1, 2),)))


def test_tik_digit_encoding():
    f = parse_dimacs(TIK_EXAMPLE_DIMACS)
    tik = reduce_b3cnf_to_tik(f)
    assert len(tik.p) == 8 + 9
    assert tik.labels[:4] == ("o_a", "o_~a", "o_b", "o_~b")
    # clause digits sit below the variable digits; the first clause is the most significant
    assert tik.p[0] == 10 ** 3 + 10 ** 2 + 10 ** 0
    assert tik.Kbar == 1111444 and tik.B == 1211444


def test_b3cnf_digit_counterexample():
    # exists x1, forall x2, exists x3 with clauses (~x2 | ~x3 | x1), (x2), (x3):
    # false for every x1 since x2 may be false, but the item encoding admits a profit in range
    f = CnfFormula(3, ((-2, -3, 1), (2,), (3,)), blocks=((1,), (2,), (3,)))
    res = check_b3cnf_tik(f)
    assert not res.source_yes and res.target_yes


def test_dimacs_round_trip():
    for text in (SAT_EXAMPLE_DIMACS, B2_EXAMPLE_DIMACS, TIK_EXAMPLE_DIMACS):
        f = parse_dimacs(text)
        assert parse_dimacs(to_dimacs(f)) == f


@pytest.mark.parametrize("text", ["p cnf 2 1\n1 3 0\n", "1 2 0\n", "p cnf x y\n",
                                  "c blocks X: 1 / Y: 1\np cnf 2 1\n1 2 0\n"])
def test_dimacs_errors(text):
    with pytest.raises(SourceError):
        parse_dimacs(text)


def test_targets_serialize():
    for name, reducer in REDUCERS.items():
        if name.startswith("cnp"):
            src = split()
        elif name == "dominating-set":
            src = DominatingSetInstance(3, ((0, 1),), 1)
        elif name == "knapsack":
            src = KnapsackInstance((1, 2), (3, 4), 2, 3)
        elif name.startswith("bik"):
            src = BIK
        elif name == "tik":
            src = TikInstance((1,), (1,), (2,), 1, 1, 2, 1)
        elif name == "3sat":
            src = parse_dimacs(SAT_EXAMPLE_DIMACS)
        else:
            src = parse_dimacs(B2_EXAMPLE_DIMACS)
        t = reducer(src).target
        assert parse_instance(serialize_instance(t)) == t
