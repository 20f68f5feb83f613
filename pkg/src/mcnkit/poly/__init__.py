"""Polynomial and pseudo-polynomial algorithms for special cases."""
from .attack import attack_components_unitary, attack_components_weighted, pairwise_connectivity
from .candidates import CandidateSet, compute_candidates, protect_arborescence_greedy
from .knapsack import TableTooLarge, knapsack_dp
from .tree_dp import NEG_INF, DpState, TreeDpResult, protect_tree_dp

__all__ = [
    "attack_components_unitary", "attack_components_weighted", "pairwise_connectivity",
    "CandidateSet", "compute_candidates", "protect_arborescence_greedy",
    "TableTooLarge", "knapsack_dp",
    "NEG_INF", "DpState", "TreeDpResult", "protect_tree_dp",
]
