import pytest
from hypothesis import given, settings, strategies as st

from mcnkit.catalog import ids, labels, six_vertex_game
from mcnkit.graph import Graph, Instance
from mcnkit.propagation import (PlayOutcome, StrategyError, StrategyTriple, check_trilevel_consistency,
                                maximal_alpha, play, property1_decompose)

import oracles
from strategies import instances


def test_six_vertex_play():
    inst = six_vertex_game()
    strat = StrategyTriple(ids(inst, [3]), ids(inst, [2]), ids(inst, [1]))
    out = play(inst, strat)
    assert labels(inst, out.infected) == {2, 6}
    assert labels(inst, out.saved) == {1, 3, 4, 5}
    assert out.value == 4
    assert check_trilevel_consistency(inst, strat, out)


def test_unblocked_attack_spreads_everywhere_reachable():
    inst = six_vertex_game()
    out = play(inst, StrategyTriple(I=ids(inst, [3])))
    # 3 reaches 1, 2, 5, then 4 and 6
    assert out.value == 0


@pytest.mark.parametrize("strat", [
    StrategyTriple(D=[0], I=[0]),
    StrategyTriple(I=[1], P=[1]),
    StrategyTriple(D=[2], P=[2]),
    StrategyTriple(I=[9]),
    StrategyTriple(D=[0, 1]),
])
def test_invalid_strategies(strat):
    with pytest.raises(StrategyError):
        play(six_vertex_game(), strat)


def test_budget_check_can_be_skipped():
    inst = six_vertex_game()
    strat = StrategyTriple(I=[0, 1])
    with pytest.raises(StrategyError):
        play(inst, strat)
    assert play(inst, strat, budgets=False).value == 0


def test_consistency_check_catches_bad_alpha():
    inst = six_vertex_game()
    strat = StrategyTriple(D=ids(inst, [3]), I=ids(inst, [2]))
    good = play(inst, strat)
    assert labels(inst, good.saved) == {3, 5}
    # claim everything infected: feasible but not maximal, and value disagrees
    bad = PlayOutcome(frozenset(range(6)), frozenset(), (0,) * 6, good.value)
    verdict = check_trilevel_consistency(inst, strat, bad)
    assert not verdict
    assert any("not maximal" in msg for msg in verdict.violations)
    # claim an attacked vertex is saved
    bad = PlayOutcome(frozenset(), frozenset(range(6)), (1,) * 6, 6)
    assert not check_trilevel_consistency(inst, strat, bad)


def test_zero_benefit_vertices():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], directed=True)
    inst = Instance.build(g, b=[0, 5, 2], phi=1, lam=1)
    assert play(inst, StrategyTriple(I=[0], P=[1])).value == 7
    assert play(inst, StrategyTriple(I=[0], P=[2])).value == 2


@st.composite
def played(draw):
    inst = draw(instances(max_n=8, max_budget=30))
    verts = list(range(inst.n))
    D = draw(st.sets(st.sampled_from(verts))) if verts else set()
    rest = [v for v in verts if v not in D]
    I = draw(st.sets(st.sampled_from(rest))) if rest else set()
    rest = [v for v in rest if v not in I]
    P = draw(st.sets(st.sampled_from(rest))) if rest else set()
    return inst, StrategyTriple(D, I, P)


@settings(max_examples=300, deadline=None)
@given(played())
def test_play_matches_naive_spread(case):
    inst, strat = case
    out = play(inst, strat, budgets=False)
    assert out.infected == oracles.spread(inst, strat.D, strat.I, strat.P)
    assert out.value == oracles.value(inst, strat.D, strat.I, strat.P)
    assert out.alpha == maximal_alpha(inst, strat)
    assert check_trilevel_consistency(inst, strat, out)


@settings(max_examples=300, deadline=None)
@given(played())
def test_deleting_blocked_vertices_keeps_value(case):
    inst, strat = case
    inst = inst.with_budgets(omega=10 ** 6, phi=10 ** 6, lam=10 ** 6)
    dec = property1_decompose(inst, strat)
    assert dec.total == play(inst, strat).value
    assert dec.removed_benefit == sum(inst.b[v] for v in strat.D | strat.P)


@settings(max_examples=200, deadline=None)
@given(played(), st.data())
def test_more_protection_never_hurts(case, data):
    inst, strat = case
    free = [v for v in range(inst.n) if v not in strat.D | strat.I | strat.P]
    if not free:
        return
    extra = data.draw(st.sampled_from(free))
    more = StrategyTriple(strat.D, strat.I, strat.P | {extra})
    assert play(inst, more, budgets=False).value >= play(inst, strat, budgets=False).value
