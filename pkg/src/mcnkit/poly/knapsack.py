"""0/1 knapsack by dynamic programming over capacity."""
from __future__ import annotations

from typing import Sequence

DEFAULT_TABLE_BOUND = 10**6


class TableTooLarge(ValueError):
    """Capacity is beyond the configured table size."""


def knapsack_dp(weights: Sequence[int], profits: Sequence[int], capacity: int,
                table_bound: int = DEFAULT_TABLE_BOUND) -> tuple[int, tuple[int, ...]]:
    """Maximum profit within ``capacity`` and the chosen item indices.

    Items are considered in order and an item only replaces the current
    best when it strictly improves it, so among equal optima the one using
    earlier items wins.
    """
    if len(weights) != len(profits):
        raise ValueError("weights and profits differ in length")
    if capacity < 0:
        raise ValueError("capacity must be non-negative")
    if any(w < 0 for w in weights) or any(p < 0 for p in profits):
        raise ValueError("weights and profits must be non-negative")
    # Capacity beyond the total weight never helps.
    cap = min(capacity, sum(weights))
    if cap > table_bound:
        raise TableTooLarge(
            f"capacity {cap} exceeds the table bound {table_bound}; use an exact solver on a smaller capacity")
    best = [0] * (cap + 1)
    take = []
    for w, p in zip(weights, profits):
        row = bytearray(cap + 1)
        for c in range(cap, w - 1, -1):
            cand = best[c - w] + p
            if cand > best[c]:
                best[c] = cand
                row[c] = 1
        take.append(row)
    chosen = []
    c = cap
    for i in range(len(weights) - 1, -1, -1):
        if take[i][c]:
            chosen.append(i)
            c -= weights[i]
    return best[cap], tuple(sorted(chosen))
