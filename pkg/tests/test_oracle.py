"""Ground-truth oracle behavior: frozen verdicts, caps, and replay checks.

The six-candidate election built in thm_election() is the reduced form of
the one-set cover instance (B = {b1,b2,b3}, S = {B}, k = 1); its pairwise
structure is asserted before the bribery checks use it.
"""

import random

import pytest

from copeland import (ALPHA_HALF, ALPHA_ONE, ALPHA_ZERO, Alpha,
                      PartitionKind, Preference, TieRule, WinnerModel,
                      election_from_orders, expand_units, scaled_scores,
                      two_stage_eval, vs_matrix, winners, winners_from_vs)
from copeland.oracle import (ControlInstance, Decision, ProblemTag, Verdict,
                             apply_flips, bribery_oracle, control_oracle,
                             microbribery_min_cost, microbribery_oracle,
                             vertex_cover_oracle, x3c_oracle)

NAMES4 = ["c0", "c1", "c2", "c3"]
ODD = [[0, 1, 2, 3], [3, 2, 1, 0], [2, 0, 3, 1]]
EVEN = ODD + [[2, 3, 0, 1]]


def odd_election():
    return election_from_orders(NAMES4, ODD)


def even_election():
    return election_from_orders(NAMES4, EVEN)


def random_election(rng, m, n):
    orders = [rng.sample(range(m), m) for _ in range(n)]
    return election_from_orders([f"c{i}" for i in range(m)], orders)


# ------------------------------------------------------------ bribery


def thm_election():
    # candidates p, u, v, b1, b2, b3 = ids 0..5
    p, u, v, b1, b2, b3 = range(6)
    orders = [
        [u, v, b1, b2, b3, p],    # set voter for S_1 = {b1,b2,b3}
        [p, u, v, b3, b2, b1],    # its mirror
        [u, v, p, b1, b2, b3],
        [v, u, p, b1, b2, b3],
        [u, b3, b2, b1, p, v],
        [v, b3, b2, b1, p, u],
        [b1, b2, b3, p, u, v],
    ]
    return election_from_orders(["p", "u", "v", "b1", "b2", "b3"], orders)


def test_thm_election_structure():
    E = thm_election()
    vs = vs_matrix(E)
    assert vs[1][2] == 3            # u over v by 2n+1
    assert vs[1][0] == 1 and vs[2][0] == 1
    assert vs[3][0] == vs[4][0] == vs[5][0] == 1
    assert scaled_scores(E, ALPHA_HALF) == [0, 10, 8, 6, 4, 2]
    assert winners(E, ALPHA_HALF, WinnerModel.UNIQUE) == {1}


def test_bribery_one_voter_crowns_p():
    E = thm_election()
    for alpha in (ALPHA_ZERO, ALPHA_HALF, ALPHA_ONE):
        v = bribery_oracle(E, alpha, 0, 1, "con", WinnerModel.UNIQUE)
        assert v.decision is Decision.YES
        # same action dethrones u
        d = bribery_oracle(E, alpha, 1, 1, "des", WinnerModel.NONUNIQUE)
        assert d.decision is Decision.YES
    assert bribery_oracle(E, ALPHA_HALF, 0, 0, "con").decision is Decision.NO


def test_bribery_k0_is_winner_test():
    E = odd_election()
    assert bribery_oracle(E, ALPHA_HALF, 2, 0, "con").yes
    assert not bribery_oracle(E, ALPHA_HALF, 0, 0, "con").yes
    assert bribery_oracle(E, ALPHA_HALF, 0, 0, "des").yes
    assert not bribery_oracle(E, ALPHA_HALF, 2, 0, "des").yes


def test_bribery_total_control_with_two_candidates():
    E = election_from_orders(["a", "b"], [[1, 0], [1, 0], [1, 0]])
    v = bribery_oracle(E, ALPHA_HALF, 0, 3, "con", WinnerModel.UNIQUE)
    assert v.yes


def test_bribery_pruned_matches_unpruned():
    rng = random.Random(11)
    for _ in range(12):
        E = random_election(rng, 3, rng.randint(1, 4))
        p = rng.randrange(3)
        k = rng.randint(0, 2)
        full = bribery_oracle(E, ALPHA_HALF, p, k, "con")
        fast = bribery_oracle(E, ALPHA_HALF, p, k, "con", prune=True)
        assert full.decision == fast.decision


def test_bribery_rejects_bad_mode():
    with pytest.raises(ValueError):
        bribery_oracle(odd_election(), ALPHA_HALF, 0, 1, "sideways")


# ------------------------------------------------------- microbribery


def test_microbribery_k0_is_winner_test():
    E = odd_election()
    assert microbribery_oracle(E, ALPHA_HALF, 2, 0, "con").yes
    assert not microbribery_oracle(E, ALPHA_HALF, 1, 0, "con").yes


def test_microbribery_min_costs_match_worked_examples():
    odd = odd_election()
    even = even_election()
    assert microbribery_min_cost(odd, ALPHA_HALF, 0, "con") == 1
    assert microbribery_min_cost(even, ALPHA_ZERO, 0, "con") == 2
    assert microbribery_min_cost(even, ALPHA_ONE, 0, "con") == 1


def test_microbribery_witness_replays():
    E = even_election()
    v = microbribery_oracle(E, ALPHA_ONE, 0, 1, "con")
    assert v.yes and len(v.witness) == 1
    bribed = apply_flips(E, v.witness)
    assert 0 in winners(bribed, ALPHA_ONE)


def test_microbribery_destructive_on_odd_example():
    E = odd_election()
    v = microbribery_oracle(E, ALPHA_HALF, 2, 1, "des")
    assert v.yes
    bribed = apply_flips(E, v.witness)
    assert 2 not in winners(bribed, ALPHA_HALF)


def test_microbribery_cap_exceeded():
    v = microbribery_oracle(even_election(), ALPHA_ZERO, 0, 3, "con",
                            node_cap=10)
    assert v.decision is Decision.CAP_EXCEEDED


def test_microbribery_monotone_in_k():
    rng = random.Random(5)
    for _ in range(10):
        E = random_election(rng, 3, 3)
        p = rng.randrange(3)
        seen_yes = False
        for k in range(4):
            got = microbribery_oracle(E, ALPHA_HALF, p, k, "con").yes
            assert got or not seen_yes
            seen_yes = seen_yes or got
        assert seen_yes  # enough flips always crown p


# ------------------------------------------------------------ control


def ci(E, p, model=WinnerModel.NONUNIQUE, alpha=ALPHA_HALF, **kw):
    return ControlInstance(election=E, alpha=alpha, p=p, model=model, **kw)


def test_ccdv_k0_is_winner_test():
    E = odd_election()
    assert control_oracle(ProblemTag.CC_DV, ci(E, 2, k=0)).yes
    assert not control_oracle(ProblemTag.CC_DV, ci(E, 0, k=0)).yes


def test_dcac_spoiler_dethrones_p():
    E = election_from_orders(
        ["p", "a", "d"],
        [[2, 0, 1], [0, 1, 2], [2, 0, 1]],
    )
    inst = ci(E, 0, spoilers=frozenset({2}), k=1)
    v = control_oracle(ProblemTag.DC_AC, inst)
    assert v.yes and v.witness == (2,)
    assert control_oracle(ProblemTag.DC_ACU, ci(E, 0, spoilers=frozenset({2}))).yes
    # without the spoiler p is the unique winner
    vs = vs_matrix(E)
    assert winners_from_vs(vs, ALPHA_HALF, [0, 1]) == {0}


def test_ccav_unique_needs_two_extra_voters():
    E = election_from_orders(["a", "b"], [[1, 0]])
    pool = (Preference.from_order([0, 1]), Preference.from_order([0, 1]))
    yes1 = control_oracle(ProblemTag.CC_AV, ci(E, 0, k=1, pool=pool))
    assert yes1.yes  # a tie makes both of them winners
    uniq1 = control_oracle(ProblemTag.CC_AV,
                           ci(E, 0, WinnerModel.UNIQUE, k=1, pool=pool))
    assert not uniq1.yes
    uniq2 = control_oracle(ProblemTag.CC_AV,
                           ci(E, 0, WinnerModel.UNIQUE, k=2, pool=pool))
    assert uniq2.yes


def test_ccpv_tp_cycle_hand_enumeration():
    # cycle a>b, b>c, c>a; V1 = {voter 1} promotes b, V2 = {0, 2} promotes a,
    # final a beats b: the only partition shape making a the unique winner.
    E = election_from_orders(["a", "b", "c"],
                             [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    v = control_oracle(ProblemTag.CC_PV_TP, ci(E, 0, WinnerModel.UNIQUE))
    assert v.yes
    v1, v2 = v.witness
    assert sorted(v1 + v2) == [0, 1, 2]
    replay = two_stage_eval(E, ALPHA_HALF, TieRule.TP, PartitionKind.PV,
                            (v1, v2))
    assert replay == {0}
    assert set(v1) == {1} or set(v2) == {1}
    # nonunique is trivially YES: every cycle member is already a winner
    assert control_oracle(ProblemTag.CC_PV_TP, ci(E, 0)).yes


def test_partition_witness_replays():
    rng = random.Random(23)
    for tag, kind, rule in [
        (ProblemTag.CC_PC_TE, PartitionKind.PC, TieRule.TE),
        (ProblemTag.CC_RPC_TP, PartitionKind.RPC, TieRule.TP),
        (ProblemTag.DC_PC_TP, PartitionKind.PC, TieRule.TP),
    ]:
        hits = 0
        for _ in range(20):
            E = random_election(rng, rng.randint(2, 4), rng.randint(1, 4))
            p = rng.randrange(E.m)
            v = control_oracle(tag, ci(E, p))
            if not v.yes:
                continue
            hits += 1
            got = two_stage_eval(E, ALPHA_HALF, rule, kind, v.witness)
            if tag.value.startswith("CC"):
                assert p in got
            else:
                assert p not in got
        assert hits > 0


def test_control_cap_exceeded():
    E = odd_election()
    v = control_oracle(ProblemTag.CC_PV_TP, ci(E, 0), node_cap=3)
    assert v.decision is Decision.CAP_EXCEEDED


def test_dc_voter_control_monotone():
    rng = random.Random(31)
    for _ in range(8):
        E = random_election(rng, 3, 4)
        p = rng.randrange(3)
        seen = False
        for k in range(5):
            got = control_oracle(ProblemTag.DC_DV, ci(E, p, k=k)).yes
            assert got or not seen
            seen = seen or got


def test_condorcet_ccdv():
    # deleting the lone dissenter makes a the Condorcet winner
    E = election_from_orders(["a", "b"], [[0, 1], [0, 1], [1, 0], [1, 0]])
    assert not control_oracle(ProblemTag.CONDORCET_CCDV, ci(E, 0, k=0)).yes
    v = control_oracle(ProblemTag.CONDORCET_CCDV, ci(E, 0, k=1))
    assert v.yes and len(v.witness) == 1


def test_condorcet_ccpv():
    E = election_from_orders(["a", "b"], [[0, 1], [0, 1], [1, 0]])
    v = control_oracle(ProblemTag.CONDORCET_CCPV, ci(E, 0))
    assert v.yes


# ---------------------------------------------------------- x3c / vc


def test_x3c_trivial_yes():
    v = x3c_oracle(["b1", "b2", "b3"], [["b1", "b2", "b3"]], 1)
    assert v.yes and v.witness == (0,)


def test_x3c_overlapping_family_no():
    B = [f"b{i}" for i in range(1, 7)]
    S = [["b1", "b2", "b3"], ["b1", "b4", "b5"], ["b1", "b2", "b6"]]
    assert not x3c_oracle(B, S, 2).yes
    # adding a disjoint completion flips it
    S2 = S + [["b4", "b5", "b6"]]
    v = x3c_oracle(B, S2, 2)
    assert v.yes and set(v.witness) == {0, 3}


def test_x3c_malformed_rejected():
    with pytest.raises(ValueError):
        x3c_oracle(["b1", "b2", "b3"], [["b1", "b2"]], 1)
    with pytest.raises(ValueError):
        x3c_oracle(["b1", "b2", "b3", "b4"], [["b1", "b2", "b3"]], 1)
    with pytest.raises(ValueError):
        x3c_oracle(["b1", "b2", "b3"], [["b1", "b2", "zz"]], 1)
    with pytest.raises(ValueError):
        x3c_oracle(["b1", "b1", "b2"], [["b1", "b2", "b1"]], 1)


def test_vertex_cover_triangle():
    tri = [(0, 1), (1, 2), (0, 2)]
    assert not vertex_cover_oracle(3, tri, 1).yes
    v = vertex_cover_oracle(3, tri, 2)
    assert v.yes and len(v.witness) == 2


def test_vertex_cover_rejects_bad_edges():
    with pytest.raises(ValueError):
        vertex_cover_oracle(3, [(0, 3)], 1)
    with pytest.raises(ValueError):
        vertex_cover_oracle(3, [(1, 1)], 1)
