"""Copeland^alpha elections: exact scoring, bribery, control, and reductions."""

from .election import (ALPHA_HALF, ALPHA_ONE, ALPHA_ZERO, INADMISSIBLE,
                       INFINITY, Alpha, COT, Candidate, Election, Outcome,
                       PartitionKind, Preference, ScaledScore, TieRule,
                       UnsupportedCase, VoterBlock, WinnerModel,
                       condorcet_pv_eval, condorcet_winner, copeland_score,
                       election_from_orders, expand_units, is_winner,
                       make_candidates, outcome_table, relative_vote_score,
                       scaled_scores, scaled_scores_from_vs, two_stage_eval,
                       vs_matrix, vs_matrix_of_units, winners,
                       winners_from_vs)
from .formats import format_cot, format_election, parse_cot, parse_election
from .microbribery import (BigB, Microbribe, apply_microbribes, build_IT,
                           build_JT, build_LT, constructive_microbribery,
                           constructive_min_cost, demote_cost,
                           destructive_microbribery, destructive_min_cost,
                           promote_cost, target_flow, tiecost, wincost)
from .control import (ActionKind, ControlAction, ccacu_greedy, dc_partition,
                      dcac_greedy, dcdc_greedy)
from .tournament import (Cross, CrossEdgeSpec, combine, mcgarvey,
                         pad_election, targeted_cot, targeted_election)
from .fpt import (CotGoal, IntFeasibilityProblem, LinearConstraint,
                  cowinner_count_goal, distinct_scores_goal, enumerate_cots,
                  extended_control, final_scores, fpt_av_dv,
                  fpt_candidate_control, fpt_pv, fpt_voter_control_bv,
                  ilp_feasible, lexicographic_order_goal,
                  order_with_ties_goal, two_voter_realization, winner_goal)

__all__ = [
    "ALPHA_HALF", "ALPHA_ONE", "ALPHA_ZERO", "ActionKind", "Alpha", "BigB",
    "COT", "Candidate", "ControlAction", "Election", "INADMISSIBLE",
    "INFINITY", "Microbribe", "Outcome", "PartitionKind", "Preference",
    "ScaledScore", "TieRule", "UnsupportedCase", "VoterBlock", "WinnerModel",
    "Cross", "CrossEdgeSpec", "CotGoal", "IntFeasibilityProblem",
    "LinearConstraint",
    "apply_microbribes", "build_IT", "build_JT", "build_LT", "ccacu_greedy",
    "combine", "condorcet_pv_eval", "condorcet_winner", "constructive_microbribery",
    "constructive_min_cost", "copeland_score", "cowinner_count_goal",
    "dc_partition", "dcac_greedy",
    "dcdc_greedy", "demote_cost", "destructive_microbribery",
    "destructive_min_cost", "distinct_scores_goal", "election_from_orders",
    "enumerate_cots", "expand_units", "extended_control", "final_scores",
    "format_cot", "format_election", "fpt_av_dv", "fpt_candidate_control",
    "fpt_pv", "fpt_voter_control_bv", "ilp_feasible", "is_winner",
    "lexicographic_order_goal", "make_candidates", "mcgarvey",
    "order_with_ties_goal",
    "outcome_table", "pad_election", "parse_cot", "parse_election", "promote_cost",
    "relative_vote_score", "scaled_scores", "scaled_scores_from_vs",
    "target_flow", "targeted_cot", "targeted_election", "tiecost",
    "two_stage_eval",
    "two_voter_realization", "vs_matrix",
    "vs_matrix_of_units", "winner_goal", "winners", "winners_from_vs",
]
