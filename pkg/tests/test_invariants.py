"""Property tests for the scoring layer."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from copeland import (Alpha, Election, Preference, VoterBlock, WinnerModel,
                      condorcet_winner, expand_units, make_candidates,
                      scaled_scores, vs_matrix, winners)

ALPHAS = [Alpha.of(0, 1), Alpha.of(1, 3), Alpha.of(1, 2), Alpha.of(2, 3),
          Alpha.of(1, 1)]


@st.composite
def preferences(draw, m):
    if draw(st.booleans()):
        order = draw(st.permutations(range(m)))
        return Preference.from_order(order)
    table = {}
    for i in range(m):
        for j in range(i + 1, m):
            table[(i, j)] = draw(st.sampled_from([i, j]))
    return Preference.from_table(m, table)


@st.composite
def elections(draw, max_m=6, max_blocks=7, max_mult=3):
    m = draw(st.integers(1, max_m))
    nblocks = draw(st.integers(0, max_blocks))
    blocks = tuple(
        VoterBlock(draw(preferences(m)), draw(st.integers(1, max_mult)))
        for _ in range(nblocks)
    )
    names = [f"c{i}" for i in range(m)]
    return Election(make_candidates(names), blocks)


@settings(max_examples=120, deadline=None)
@given(elections())
def test_vs_antisymmetry(E):
    vs = vs_matrix(E)
    for i in range(E.m):
        for j in range(E.m):
            assert vs[i][j] == -vs[j][i]


@settings(max_examples=120, deadline=None)
@given(elections(max_mult=3))
def test_odd_profiles_are_alpha_independent(E):
    if E.total_voters % 2 == 0:
        pad = Preference.from_order(tuple(range(E.m)))
        E = Election(E.candidates, E.voters + (VoterBlock(pad, 1),))
    base = None
    for alpha in ALPHAS:
        pts = [s // alpha.den for s in scaled_scores(E, alpha)]
        w = winners(E, alpha)
        if base is None:
            base = (pts, w)
        else:
            assert (pts, w) == base


@settings(max_examples=120, deadline=None)
@given(elections(), st.sampled_from(ALPHAS))
def test_score_sum_identity(E, alpha):
    vs = vs_matrix(E)
    decisive = sum(1 for i in range(E.m) for j in range(i + 1, E.m)
                   if vs[i][j] != 0)
    tied = sum(1 for i in range(E.m) for j in range(i + 1, E.m)
               if vs[i][j] == 0)
    assert sum(scaled_scores(E, alpha)) == alpha.den * decisive + 2 * alpha.num * tied


@settings(max_examples=120, deadline=None)
@given(elections())
def test_condorcet_winner_is_unique_winner_for_every_alpha(E):
    c = condorcet_winner(E)
    if c is None:
        return
    for alpha in ALPHAS:
        assert winners(E, alpha, WinnerModel.UNIQUE) == {c}


@settings(max_examples=100, deadline=None)
@given(elections(), st.sampled_from(ALPHAS))
def test_succinct_profile_matches_expanded(E, alpha):
    units = expand_units(E)
    expanded = Election(E.candidates,
                        tuple(VoterBlock(p, 1) for p in units))
    assert vs_matrix(E) == vs_matrix(expanded)
    assert scaled_scores(E, alpha) == scaled_scores(expanded, alpha)
    assert winners(E, alpha) == winners(expanded, alpha)


def test_random_unit_blocks_shuffle_invariance():
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randint(2, 5)
        orders = [rng.sample(range(m), m) for _ in range(rng.randint(1, 6))]
        E1 = Election(make_candidates([f"c{i}" for i in range(m)]),
                      tuple(VoterBlock(Preference.from_order(o)) for o in orders))
        rng.shuffle(orders)
        E2 = Election(E1.candidates,
                      tuple(VoterBlock(Preference.from_order(o)) for o in orders))
        for alpha in ALPHAS:
            assert scaled_scores(E1, alpha) == scaled_scores(E2, alpha)
