"""Solvers, special-case algorithms and reduction gadgets for the multilevel
critical node game (vaccinate, attack, protect)."""
from .graph import (Graph, Instance, InstanceError, connected_components, induced_subgraph,
                    instance_digest, parse_instance, reachable_set, serialize_instance)
from .propagation import (PlayOutcome, PropertyViolation, StrategyError, StrategyTriple, Verdict,
                          check_trilevel_consistency, play, property1_decompose)
from .exact import (GameValue, SearchTooLarge, best_attack, best_attack_protect, best_protect,
                    best_vaccination_attack, enumerate_budget_subsets, solve_mcn)

__version__ = "0.1.0"
