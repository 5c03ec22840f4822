"""Polynomial control algorithms: greedy destructive candidate control,
the destructive candidate-partition case analysis, and unlimited
candidate addition for the two boundary alpha values.

Everything here rests on one decomposition: a candidate's score is the
sum of its two-candidate scores against every other participant, so the
effect of adding or removing a candidate d on the gap between a rival c
and the favorite p is a number that depends on d alone.  Spoilers are
modelled by building the election over the combined candidate set and
naming which ids are unregistered; this matches the exhaustive searcher,
so witnesses from both sides replay through the same evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .election import (Alpha, Election, PartitionKind, TieRule,
                       UnsupportedCase, WinnerModel, scaled_scores_from_vs,
                       two_stage_eval, vs_matrix, winners_from_vs)


class ActionKind(Enum):
    ADD = "add"
    DELETE = "delete"
    PARTITION = "partition"


@dataclass(frozen=True)
class ControlAction:
    """A successful control move.

    members holds the added ids, the deleted ids, or (for PARTITION) the
    first-stage candidate group, which always contains the candidate the
    action is about.
    """

    kind: ActionKind
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and free of repeats")


def _pair_points(vs, alpha: Alpha, a: int, b: int) -> int:
    """Scaled score of a in the two-candidate election {a, b}."""
    v = vs[a][b]
    if v > 0:
        return alpha.den
    if v == 0:
        return alpha.num
    return 0


def _dethroned(vs, alpha, ids, p, model) -> bool:
    w = winners_from_vs(vs, alpha, ids)
    if model is WinnerModel.UNIQUE:
        return w != frozenset({p})
    return p not in w


def _check_spoilers(E: Election, spoilers: frozenset[int], p: int) -> None:
    if not 0 <= p < E.m:
        raise ValueError("no such candidate: %r" % (p,))
    for d in spoilers:
        if not 0 <= d < E.m:
            raise ValueError("spoiler id %r outside the election" % (d,))
    if p in spoilers:
        raise ValueError("the distinguished candidate cannot be a spoiler")


def dcac_greedy(E: Election, spoilers: Iterable[int], alpha: Alpha, k: int,
                p: int, model: WinnerModel = WinnerModel.NONUNIQUE,
                ) -> Optional[ControlAction]:
    """Prevent p from winning by registering at most k spoilers.

    E ranges over registered and unregistered candidates alike; `spoilers`
    names the unregistered ids.  The unlimited variant is k = len(spoilers).
    For every potential rival c the best achievable score gap is the gap in
    C + {c} plus the sum of the k largest positive per-spoiler gains, so a
    greedy selection per rival is exact.
    """
    spoilers = frozenset(spoilers)
    _check_spoilers(E, spoilers, p)
    if not 0 <= k <= len(spoilers):
        raise ValueError("budget must be between 0 and the spoiler count")
    vs = vs_matrix(E)
    base = [c for c in range(E.m) if c not in spoilers]
    if k == 0:
        if _dethroned(vs, alpha, base, p, model):
            return ControlAction(ActionKind.ADD, ())
        return None
    for c in range(E.m):
        if c == p:
            continue
        group = base if c in base else base + [c]
        scores = scaled_scores_from_vs(vs, alpha, group)
        gap = scores[c] - scores[p]
        budget = k - (0 if c in base else 1)
        gains = sorted(
            ((_pair_points(vs, alpha, c, d) - _pair_points(vs, alpha, p, d), d)
             for d in spoilers - {c}),
            key=lambda t: (-t[0], t[1]))
        chosen = [d for g, d in gains[:budget] if g > 0]
        gap += sum(g for g, _ in gains[:budget] if g > 0)
        if gap > 0 or (model is WinnerModel.UNIQUE and gap == 0):
            added = sorted(chosen + ([c] if c in spoilers else []))
            assert _dethroned(vs, alpha, base + added, p, model)
            return ControlAction(ActionKind.ADD, tuple(added))
    return None


def dcdc_greedy(E: Election, alpha: Alpha, k: int, p: int,
                model: WinnerModel = WinnerModel.NONUNIQUE,
                ) -> Optional[ControlAction]:
    """Prevent p from winning by deleting at most k other candidates.

    Removing d takes score({p,d})(p) from p and score({c,d})(c) from the
    rival c, so per rival the k best positive differences are deleted."""
    if not 0 <= p < E.m:
        raise ValueError("no such candidate: %r" % (p,))
    if k < 0:
        raise ValueError("budget must be nonnegative")
    vs = vs_matrix(E)
    everyone = list(range(E.m))
    scores = scaled_scores_from_vs(vs, alpha, everyone)
    if k == 0:
        if _dethroned(vs, alpha, everyone, p, model):
            return ControlAction(ActionKind.DELETE, ())
        return None
    for c in range(E.m):
        if c == p:
            continue
        gains = sorted(
            ((_pair_points(vs, alpha, p, d) - _pair_points(vs, alpha, c, d), d)
             for d in range(E.m) if d not in (p, c)),
            key=lambda t: (-t[0], t[1]))
        chosen = [d for g, d in gains[:k] if g > 0]
        gap = scores[c] - scores[p] + sum(g for g, d in gains[:k] if g > 0)
        if gap > 0 or (model is WinnerModel.UNIQUE and gap == 0):
            remaining = [d for d in everyone if d not in chosen]
            assert _dethroned(vs, alpha, remaining, p, model)
            return ControlAction(ActionKind.DELETE, tuple(sorted(chosen)))
    return None


def dc_partition(E: Election, alpha: Alpha, p: int, kind: PartitionKind,
                 rule: TieRule, model: WinnerModel = WinnerModel.NONUNIQUE,
                 ) -> Optional[ControlAction]:
    """Prevent p from winning a two-stage candidate contest.

    Under TE any outcome hinges on whether some group containing p denies
    p a unique first-stage win, and under TP on whether it denies p a win,
    both of which reduce to candidate deletion.  The leftover case (TP with
    a unique-winner goal when p wins every subelection) is settled by a
    direct case analysis on the set of candidates tied with p.
    """
    if kind not in (PartitionKind.PC, PartitionKind.RPC):
        raise ValueError("kind must be a candidate partition")
    if not 0 <= p < E.m:
        raise ValueError("no such candidate: %r" % (p,))
    m = E.m
    everyone = set(range(m))

    def emit(first_group):
        first = tuple(sorted(first_group))
        rest = everyone - set(first)
        final = two_stage_eval(E, alpha, rule, kind, (first, rest))
        if model is WinnerModel.UNIQUE:
            assert final != frozenset({p}), "partition failed replay"
        else:
            assert p not in final, "partition failed replay"
        return ControlAction(ActionKind.PARTITION, first)

    if rule is TieRule.TE:
        # a group promotes only its unique winner, so both goals come down
        # to denying p a unique win in some group containing p
        act = dcdc_greedy(E, alpha, m - 1, p, WinnerModel.UNIQUE)
        return emit(everyone - set(act.members)) if act else None

    act = dcdc_greedy(E, alpha, m - 1, p, WinnerModel.NONUNIQUE)
    if act is not None:
        # p already fails outright inside the surviving group
        return emit(everyone - set(act.members))
    if model is WinnerModel.NONUNIQUE:
        return None

    # TP with the unique-winner goal, and p wins every subelection with p.
    vs = vs_matrix(E)
    ties = [c for c in range(m) if c != p and vs[p][c] == 0]
    if not ties:
        return None                    # p beats everyone head-to-head
    if alpha.num < alpha.den:
        # isolate p with the candidates it defeats; the final is all ties
        return emit(everyone - set(ties))
    scores = scaled_scores_from_vs(vs, alpha, range(m))
    top = alpha.den * (m - 1)
    if any(scores[c] == top for c in range(m) if c != p):
        return emit(everyone)          # that candidate wins any final
    return emit(everyone - {min(ties)})


def ccacu_greedy(E: Election, spoilers: Iterable[int], alpha: Alpha, p: int,
                 model: WinnerModel = WinnerModel.NONUNIQUE,
                 ) -> Optional[ControlAction]:
    """Make p win by registering any number of spoilers; alpha 0 or 1 only.

    Start from the spoilers p scores a full point against head-to-head and
    discard any that outscore p in the combined election until none does;
    adding anything else never helps, and the surviving set is as good as
    any other choice.  The fixed point is order-independent: removing one
    offender never lowers another's advantage over p.
    """
    if 0 < alpha.num < alpha.den:
        raise UnsupportedCase(
            "unlimited candidate addition is only tractable at the"
            " boundary alpha values")
    spoilers = frozenset(spoilers)
    _check_spoilers(E, spoilers, p)
    vs = vs_matrix(E)
    base = [c for c in range(E.m) if c not in spoilers]
    chosen = {d for d in spoilers
              if _pair_points(vs, alpha, p, d) == alpha.den}
    while True:
        group = sorted(base + list(chosen))
        scores = scaled_scores_from_vs(vs, alpha, group)
        if model is WinnerModel.UNIQUE:
            offenders = [d for d in chosen if scores[d] >= scores[p]]
        else:
            offenders = [d for d in chosen if scores[d] > scores[p]]
        if not offenders:
            break
        chosen.remove(min(offenders))
    group = sorted(base + list(chosen))
    w = winners_from_vs(vs, alpha, group)
    won = (w == frozenset({p})) if model is WinnerModel.UNIQUE else (p in w)
    if won:
        return ControlAction(ActionKind.ADD, tuple(sorted(chosen)))
    return None
