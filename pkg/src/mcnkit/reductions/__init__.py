"""Gadget compilers from classic hard problems to game instances, with oracles."""
from .gadgets import (REDUCERS, ReductionCertificate, back_map, decide_target, format_digit_table,
                      reduce_3sat_to_attack_dir, reduce_b2cnf_to_vaccination_attack_dir,
                      reduce_b3cnf_to_tik, reduce_bik_to_attack_protect_w,
                      reduce_bik_to_vaccination_attack_w, reduce_cnp_split_to_protect,
                      reduce_cnp_split_to_protect_dir, reduce_dominating_set_to_attack_protect,
                      reduce_knapsack_to_attack_w, reduce_tik_to_mcn_w, tik_digit_rows, tik_layout)
from .oracle import OracleCapExceeded, SourceAnswer, solve_source_bruteforce, source_witness_valid
from .sources import (BikInstance, CnfFormula, DominatingSetInstance, KnapsackInstance,
                      SourceError, SplitGraphInstance, TikInstance, parse_dimacs)
from .verify import REDUCTIONS, VerifyReport, run_round_trips
