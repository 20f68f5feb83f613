"""Seeded random instances.

All randomness comes from :class:`SplitMix64`, a 64-bit generator with a
published reference algorithm, so a (shape, n, seed) triple gives the same
instance in any implementation that follows the same recipe.
"""
from __future__ import annotations

from .graph import Graph, Instance

MASK64 = (1 << 64) - 1
SHAPES = ("tree", "arborescence", "split", "dag", "star", "random")


class SplitMix64:
    """SplitMix64 (Steele, Lea and Flood) with a few sampling helpers."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def chance(self, p: float) -> bool:
        return self.random() < p

    def shuffle(self, xs: list) -> list:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
        return xs

    def sample(self, xs, k: int) -> list:
        return self.shuffle(list(xs))[:k]

    def choice(self, xs):
        xs = list(xs)
        return xs[self.below(len(xs))]


def _as_rng(seed_or_rng) -> SplitMix64:
    return seed_or_rng if isinstance(seed_or_rng, SplitMix64) else SplitMix64(seed_or_rng)


def random_tree_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Random recursive tree under a random relabelling, as (parent, child) pairs."""
    perm = rng.shuffle(list(range(n)))
    return [(perm[rng.below(i)], perm[i]) for i in range(1, n)]


def random_dag_arcs(n: int, rng: SplitMix64, p: float = 0.3) -> list[tuple[int, int]]:
    perm = rng.shuffle(list(range(n)))
    return [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.chance(p)]


def random_split(n: int, rng: SplitMix64, p: float = 0.5):
    """Clique on 0..k-1 and independent vertices k..n-1 with random edges to the clique."""
    k = rng.randint(1, n) if n else 0
    clique = list(range(k))
    independent = list(range(k, n))
    edges = [(u, v) for u in clique for v in clique if u < v]
    edges += [(u, w) for w in independent for u in clique if rng.chance(p)]
    return clique, independent, edges


def _structure(shape: str, n: int, rng: SplitMix64):
    """(directed, arcs or edges, names)."""
    if shape == "tree":
        return False, random_tree_edges(n, rng), None
    if shape == "arborescence":
        return True, random_tree_edges(n, rng), None
    if shape == "split":
        clique, independent, edges = random_split(n, rng)
        names = [f"clique:{v}" for v in clique] + [f"indep:{v}" for v in independent]
        return False, edges, names
    if shape == "dag":
        return True, random_dag_arcs(n, rng), None
    if shape == "star":
        return False, [(0, v) for v in range(1, n)], None
    if shape == "random":
        return False, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.chance(0.3)], None
    raise ValueError(f"unsupported shape {shape!r}; choose from {', '.join(SHAPES)}")


def gen_random_instance(shape: str, n: int, seed, weights: str = "unit") -> Instance:
    """Random instance of the given shape with small random budgets.

    ``weights`` is ``"unit"`` (all ones) or ``"random"`` (benefits 1..5,
    costs 1..3).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if weights not in ("unit", "random"):
        raise ValueError(f"unknown weight mode {weights!r}")
    rng = _as_rng(seed)
    directed, pairs, names = _structure(shape, n, rng)
    g = Graph.from_edges(n, pairs, directed=directed)
    if weights == "unit":
        b = c_vacc = c_att = c_prot = [1] * n
        top = 2
    else:
        b = [rng.randint(1, 5) for _ in range(n)]
        c_vacc = [rng.randint(1, 3) for _ in range(n)]
        c_att = [rng.randint(1, 3) for _ in range(n)]
        c_prot = [rng.randint(1, 3) for _ in range(n)]
        top = 4
    omega, lam = rng.randint(0, top), rng.randint(0, top)
    phi = rng.randint(1, top) if n else 0
    return Instance.build(g, b=b, c_vacc=c_vacc, c_att=c_att, c_prot=c_prot,
                          omega=omega, phi=phi, lam=lam, names=names)
