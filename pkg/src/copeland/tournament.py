"""Elections realizing prescribed pairwise outcomes and scores.

McGarvey's two-voters-per-edge trick turns any outcome table into an
election, and everything else here rides on it: circulant regular
tournaments, score-targeted padding, and disjoint combination of two
elections with chosen cross results.
"""

from __future__ import annotations

from enum import Enum
from typing import Mapping, Sequence

from .election import (COT, Alpha, Election, Outcome, election_from_orders,
                       outcome_table, vs_matrix)


class Cross(Enum):
    """Outcome of a cross pair when two elections are combined."""

    FIRST_WINS = "first"
    SECOND_WINS = "second"
    TIE = "tie"


# (name in the first election, name in the second) -> outcome
CrossEdgeSpec = Mapping[tuple[str, str], Cross]


def mcgarvey(T: COT) -> Election:
    """Build an election of rational voters whose outcome table is T.

    Each decisive pair a-beats-b contributes exactly two voters, one
    voting ``a > b > rest`` and one voting ``reverse(rest) > a > b``.
    Together they push vs(a, b) up by 2 and cancel on every other
    pair, so tied pairs need no voters at all; an all-ties table
    yields an election with no voters.
    """
    m = T.m
    orders = []
    for w, l in T.decisive_pairs():
        rest = [c for c in range(m) if c != w and c != l]
        orders.append([w, l] + rest)
        orders.append(rest[::-1] + [w, l])
    return election_from_orders(T.names, orders)


def pad_election(n: int) -> Election:
    """Regular tournament on 2n+1 candidates where every score is n.

    Candidate i defeats candidate j exactly when (j - i) mod (2n+1)
    lies in 1..n, so everyone beats the n candidates that follow it
    around the circle and loses to the n that precede it.  No pair
    ties, hence the score is n whole points at every alpha.
    """
    if n < 1:
        raise ValueError("pad_election needs n >= 1")
    m = 2 * n + 1
    names = tuple(f"x{i}" for i in range(m))
    outcome = {}
    for i in range(m):
        for j in range(i + 1, m):
            outcome[(i, j)] = (Outcome.I_WINS if (j - i) % m <= n
                               else Outcome.L_WINS)
    return mcgarvey(COT(names, outcome))


def _wins_ties(vs: Sequence[Sequence[int]], i: int) -> tuple[int, int]:
    row = vs[i]
    wins = sum(1 for j, v in enumerate(row) if j != i and v > 0)
    ties = sum(1 for j, v in enumerate(row) if j != i and v == 0)
    return wins, ties


def targeted_cot(E: Election, alpha: Alpha, n: int,
                 k: Sequence[int]) -> COT:
    """Outcome table padding E so c_i scores 2n^2 - k_i + t_i*alpha.

    Adds 2n^2 padding candidates: the circulant tournament on 2n^2 + 1
    vertices with the last vertex dropped, split in order into n groups
    of 2n.  Original candidate c_i defeats every padding candidate
    outside group i and the first 2n - k_i - w_i members of group i
    (w_i its win count within E), which lands its whole-point total on
    2n^2 - k_i; head-to-head outcomes inside E are untouched, so its
    tie count t_i survives and contributes t_i * alpha.  Padding never
    ties anyone and scores at most n^2 + 1.
    """
    orig = E.m
    if orig < 1:
        raise ValueError("need at least one original candidate")
    if n < orig:
        raise ValueError(f"n must be at least the candidate count {orig}")
    if len(k) != orig:
        raise ValueError(f"expected {orig} score offsets, got {len(k)}")
    for i, ki in enumerate(k):
        if not 0 <= ki <= n:
            raise ValueError(f"k[{i}] = {ki} outside 0..{n}")

    pads = 2 * n * n
    pad_names = tuple(f"d{a + 1}" for a in range(pads))
    clash = set(E.names) & set(pad_names)
    if clash:
        raise ValueError(f"names collide with padding: {sorted(clash)}")
    names = E.names + pad_names

    vs = vs_matrix(E)
    outcome = dict(outcome_table(E).outcome)
    group = 2 * n  # group g covers padding indices [g*2n, (g+1)*2n)
    for i in range(orig):
        wins, _ = _wins_ties(vs, i)
        need = 2 * n - k[i] - wins
        assert 0 <= need <= group, "score offset arithmetic broke"
        lo = i * group
        for a in range(pads):
            beats_pad = not (lo <= a < lo + group) or a - lo < need
            outcome[(i, orig + a)] = (Outcome.I_WINS if beats_pad
                                      else Outcome.L_WINS)
    modulus = pads + 1
    for a in range(pads):
        for b in range(a + 1, pads):
            outcome[(orig + a, orig + b)] = (
                Outcome.I_WINS if (b - a) % modulus <= n * n
                else Outcome.L_WINS)

    cot = COT(names, outcome)
    for i in range(orig):
        _, ties = _wins_ties(vs, i)
        whole = sum(1 for j in range(len(names)) if cot.sign(i, j) > 0)
        want = alpha.den * (2 * n * n - k[i]) + alpha.num * ties
        assert alpha.den * whole + alpha.num * ties == want, \
            "targeted score missed"
    return cot


def targeted_election(E: Election, alpha: Alpha, n: int,
                      k: Sequence[int]) -> Election:
    """Election realizing targeted_cot(E, alpha, n, k) via mcgarvey."""
    return mcgarvey(targeted_cot(E, alpha, n, k))


def combine(E1: Election, E2: Election, cross: CrossEdgeSpec) -> Election:
    """Disjoint union of two elections with prescribed cross outcomes.

    The result is resynthesized from the merged outcome table, so each
    side keeps its head-to-head results while the voter list is
    renormalized to the two-voters-per-edge form.  The cross map must
    name each (E1 candidate, E2 candidate) pair exactly once.
    """
    clash = set(E1.names) & set(E2.names)
    if clash:
        raise ValueError(f"candidate names on both sides: {sorted(clash)}")
    wanted = {(a, b) for a in E1.names for b in E2.names}
    if set(cross) != wanted:
        missing = wanted - set(cross)
        extra = set(cross) - wanted
        raise ValueError("cross spec must cover exactly the cross pairs"
                         f" (missing {sorted(missing)}, extra {sorted(extra)})")

    m1 = E1.m
    names = E1.names + E2.names
    outcome = dict(outcome_table(E1).outcome)
    for (i, j), o in outcome_table(E2).outcome.items():
        outcome[(i + m1, j + m1)] = o
    idx1 = {name: i for i, name in enumerate(E1.names)}
    idx2 = {name: i for i, name in enumerate(E2.names)}
    to_outcome = {Cross.FIRST_WINS: Outcome.I_WINS,
                  Cross.SECOND_WINS: Outcome.L_WINS,
                  Cross.TIE: Outcome.TIE}
    for (a, b), o in cross.items():
        outcome[(idx1[a], m1 + idx2[b])] = to_outcome[o]
    return mcgarvey(COT(names, outcome))
