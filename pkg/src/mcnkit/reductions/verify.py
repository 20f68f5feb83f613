"""Round-trip checks: random source instance -> gadget -> exact solve -> compare.

For every sample the source is decided by exhaustive search and the target
by the matching exact solver; the two answers must agree.  When both say
Yes, the target's optimal moves are mapped back and checked directly
against the source problem.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..generate import SplitMix64, random_split
from .gadgets import REDUCERS, back_map, decide_target, reduce_b3cnf_to_tik
from .oracle import b3_x_wins, solve_source_bruteforce, source_witness_valid
from .sources import (BikInstance, CnfFormula, DominatingSetInstance, KnapsackInstance,
                      SplitGraphInstance, TikInstance)

# item cap for deciding the TIK built from a formula; the digit gadget has
# 2|U| variable items plus up to three slack items per clause
TIK_TARGET_ITEMS = 24


# ---------------------------------------------------------------- random sources

def _clause(rng, variables, width, distinct=True):
    if distinct:
        vs = rng.sample(variables, width)
    else:
        vs = [rng.choice(variables) for _ in range(width)]
    return tuple(v if rng.chance(0.5) else -v for v in vs)


def random_3sat(rng: SplitMix64) -> CnfFormula:
    nu = rng.randint(2, 3)
    variables = list(range(1, nu + 1))
    if rng.chance(0.15):
        # every sign pattern on three variables: unsatisfiable
        clauses = [tuple(s * v for s, v in zip(signs, (1, 2, 3)[:3]))
                   for signs in [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]]
        nu = 3
    else:
        clauses = [_clause(rng, variables, 3, distinct=False) for _ in range(rng.randint(1, 8))]
    return CnfFormula(nu, tuple(clauses))


def random_b2cnf(rng: SplitMix64) -> CnfFormula:
    clauses = [_clause(rng, [1, 2], 3, distinct=False) for _ in range(rng.randint(1, 3))]
    return CnfFormula(2, tuple(clauses), blocks=((1,), (2,)))


def random_b3cnf(rng: SplitMix64) -> CnfFormula:
    clauses = [_clause(rng, [1, 2, 3], rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    return CnfFormula(3, tuple(clauses), blocks=((1,), (2,), (3,)))


def random_knapsack(rng: SplitMix64) -> KnapsackInstance:
    m = rng.randint(1, 6)
    a = [rng.randint(1, 6) for _ in range(m)]
    p = [rng.randint(1, 9) for _ in range(m)]
    return KnapsackInstance(tuple(a), tuple(p), rng.randint(1, sum(a)), rng.randint(1, sum(p) + 1))


def random_bik(rng: SplitMix64) -> BikInstance:
    while True:
        m = rng.randint(1, 4)
        a = [rng.randint(1, 4) for _ in range(m)]
        p = [rng.randint(1, 6) for _ in range(m)]
        if sum(p) < 2:
            continue
        B = rng.randint(1, sum(p) - 1)
        bik = BikInstance(tuple(a), tuple(p), rng.randint(1, sum(a)), B, rng.randint(1, B))
        if bik.nontrivial:
            return bik


def random_tik(rng: SplitMix64) -> TikInstance:
    m = rng.randint(1, 3)
    a2 = [rng.randint(1, 3) for _ in range(m)]
    a = [rng.randint(1, 3) for _ in range(m)]
    p = [rng.randint(1, 5) for _ in range(m)]
    B = rng.randint(1, sum(p))
    return TikInstance(tuple(a2), tuple(a), tuple(p), rng.randint(1, sum(a2)), rng.randint(1, sum(a)),
                       B, rng.randint(1, B))


def random_dominating_set(rng: SplitMix64) -> DominatingSetInstance:
    n = rng.randint(2, 6)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.chance(0.35)]
    return DominatingSetInstance(n, tuple(edges), rng.randint(1, n))


def random_split_source(rng: SplitMix64, max_n: int = 7, strict_budget: bool = False) -> SplitGraphInstance:
    while True:
        n = rng.randint(2, max_n)
        clique, independent, edges = random_split(n, rng)
        if strict_budget and len(clique) < 2:
            continue
        top = len(clique) - 1 if strict_budget else n
        B = rng.randint(0, top)
        return SplitGraphInstance(tuple(clique), tuple(independent), tuple(edges), B,
                                  rng.randint(0, n * (n - 1) // 2))


SOURCE_GENERATORS = {
    "cnp-split": random_split_source,
    "dominating-set": random_dominating_set,
    "knapsack": random_knapsack,
    "bik": random_bik,
    "bik-va": random_bik,
    "b3cnf-tik": random_b3cnf,
    "tik": random_tik,
    "3sat": random_3sat,
    "b2cnf": random_b2cnf,
    "cnp-split-dir": lambda rng: random_split_source(rng, strict_budget=True),
    "cnp-split-dir-fixed": lambda rng: random_split_source(rng, strict_budget=True),
}

REDUCTIONS = tuple(SOURCE_GENERATORS)


# ---------------------------------------------------------------- harness

@dataclass
class SampleResult:
    index: int
    source: object
    source_yes: bool
    target_yes: bool
    witness_ok: bool | None = None
    target_value: int | None = None
    # game instance and optimal moves found on it (None for the TIK target)
    target: object = None
    strategy: object = None

    @property
    def agree(self) -> bool:
        return self.source_yes == self.target_yes


@dataclass
class VerifyReport:
    reduction: str
    seed: int
    samples: list[SampleResult] = field(default_factory=list)

    @property
    def mismatches(self) -> list[SampleResult]:
        return [s for s in self.samples if not s.agree]

    @property
    def witness_failures(self) -> list[SampleResult]:
        return [s for s in self.samples if s.witness_ok is False]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.witness_failures

    def summary(self) -> dict:
        return {"reduction": self.reduction, "seed": self.seed, "samples": len(self.samples),
                "yes": sum(s.source_yes for s in self.samples),
                "mismatches": len(self.mismatches),
                "witness_failures": len(self.witness_failures), "ok": self.ok}


def tik_back_map(f: CnfFormula, first) -> dict:
    """x is true when the item of its true literal was removed first."""
    return {v: 2 * k in set(first) for k, v in enumerate(f.blocks[0])}


def check_b3cnf_tik(f: CnfFormula, index: int = 0) -> SampleResult:
    tik = reduce_b3cnf_to_tik(f)
    src = solve_source_bruteforce(f)
    tgt = solve_source_bruteforce(tik, max_items=TIK_TARGET_ITEMS)
    res = SampleResult(index, f, src.yes, tgt.yes)
    if src.yes and tgt.yes:
        res.witness_ok = b3_x_wins(f, tik_back_map(f, tgt.witness))
    return res


def check_sample(reduction: str, src, index: int = 0) -> SampleResult:
    if reduction == "b3cnf-tik":
        return check_b3cnf_tik(src, index)
    cert = REDUCERS[reduction](src)
    src_ans = solve_source_bruteforce(src)
    tgt_yes, gv = decide_target(cert)
    res = SampleResult(index, src, src_ans.yes, tgt_yes, target_value=gv.value,
                       target=cert.target, strategy=gv.witness)
    if src_ans.yes and tgt_yes:
        res.witness_ok = source_witness_valid(src, back_map(cert, gv))
    return res


def run_round_trips(reduction: str, samples: int, seed: int) -> VerifyReport:
    if reduction not in SOURCE_GENERATORS:
        raise ValueError(f"unknown reduction {reduction!r}; choose from {', '.join(REDUCTIONS)}")
    rng = SplitMix64(seed)
    report = VerifyReport(reduction, seed)
    for i in range(samples):
        src = SOURCE_GENERATORS[reduction](rng)
        report.samples.append(check_sample(reduction, src, i))
    return report
