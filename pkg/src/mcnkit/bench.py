"""Named timing suites for ``mcnkit bench``."""
from __future__ import annotations

import time

from . import catalog
from .exact import best_protect, solve_mcn
from .generate import SplitMix64, random_tree_edges
from .graph import Graph, Instance
from .poly.tree_dp import protect_tree_dp
from .reductions.verify import REDUCTIONS, run_round_trips

SUITES = ("exact", "tree-dp", "reductions")


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, round(time.perf_counter() - t0, 4)


def random_unitary_tree(n: int, rng: SplitMix64, attacked: int, lam: int):
    g = Graph.from_edges(n, random_tree_edges(n, rng))
    inst = Instance.build(g, phi=attacked, lam=lam)
    return inst, sorted(rng.sample(range(n), attacked))


def suite_exact():
    rows = []
    for name, inst in (("six-vertex", catalog.six_vertex_game()),
                       ("polytree", catalog.polytree_example()),
                       ("arborescence", catalog.arborescence_example())):
        gv, wall = _timed(lambda: solve_mcn(inst))
        rows.append({"case": f"mcn/{name}", "value": gv.value, "plays": gv.plays, "seconds": wall})
    return rows


def suite_tree_dp(n: int = 60, lam: int = 10, attacked: int = 5, seed: int = 0):
    inst, I = random_unitary_tree(n, SplitMix64(seed), attacked, lam)
    (P, saved), wall = _timed(lambda: protect_tree_dp(inst, I))
    rows = [{"case": f"tree-dp/n={n}", "saved": saved, "P": list(P), "seconds": wall}]
    small, I2 = random_unitary_tree(14, SplitMix64(seed), 3, 3)
    dp, t_dp = _timed(lambda: protect_tree_dp(small, I2))
    bf, t_bf = _timed(lambda: best_protect(small, (), I2))
    rows.append({"case": "tree-dp-vs-brute/n=14", "dp_seconds": t_dp, "brute_seconds": t_bf,
                 "ok": dp.saved == bf.value})
    return rows


def suite_reductions(samples: int = 10, seed: int = 0):
    rows = []
    for red in REDUCTIONS:
        rep, wall = _timed(lambda: run_round_trips(red, samples, seed))
        rows.append({"case": red, **rep.summary(), "seconds": wall})
    return rows


def run_suite(name: str):
    if name == "exact":
        return suite_exact()
    if name == "tree-dp":
        return suite_tree_dp()
    if name == "reductions":
        return suite_reductions()
    raise ValueError(f"unknown suite {name!r}")
