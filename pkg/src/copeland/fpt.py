"""Control algorithms tractable for a bounded number of candidates or voters.

Three layers.  Plain brute force handles candidate control with few
candidates and voter control with few voters.  For voter control with
few candidates, the profile is compressed into vote types (counts per
distinct pairwise table) and each hypothesized outcome table is turned
into an integer feasibility problem, so verdicts never depend on how
large the multiplicities are.  The same machinery accepts arbitrary
goal predicates over outcome tables, not just "p wins" and "p loses".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .election import (COT, Alpha, Election, Outcome, PartitionKind,
                       Preference, TieRule, VoterBlock, WinnerModel,
                       expand_units, make_candidates, scaled_scores_from_vs,
                       two_stage_eval, vs_matrix, vs_matrix_of_units,
                       winners_from_vs)
from .oracle import ControlInstance, Decision, ProblemTag, Verdict

COT_CAP = 5  # 3^C(5,2) = 59049 tables; growth past this is hopeless

CANDIDATE_BOUND = 8
VOTER_BOUND = 20
PV_BOUND = 4
AV_DV_BOUND = 5
VARIABLE_CAP = 64


# ---------------------------------------------------------------------------
# integer feasibility


@dataclass(frozen=True)
class LinearConstraint:
    """sum(coeffs[i] * m_i)  relation  bound, all integers."""

    coeffs: tuple[int, ...]
    relation: str  # ">=" or "<="
    bound: int

    def __post_init__(self) -> None:
        if self.relation not in (">=", "<="):
            raise ValueError(f"relation must be '>=' or '<=': {self.relation!r}")


@dataclass(frozen=True)
class IntFeasibilityProblem:
    """Integer variables m_i with 0 <= m_i <= bounds[i], linear constraints."""

    bounds: tuple[int, ...]
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self) -> None:
        if any(b < 0 for b in self.bounds):
            raise ValueError("variable bounds must be nonnegative")
        for c in self.constraints:
            if len(c.coeffs) != len(self.bounds):
                raise ValueError("constraint arity differs from variable count")


def ilp_feasible(P: IntFeasibilityProblem) -> Optional[tuple[int, ...]]:
    """First feasible point in lexicographic order, or None.

    Depth-first search assigning variables left to right, pruning a
    branch as soon as some constraint cannot be met even by the most
    favorable completion of the unassigned suffix.
    """
    r = len(P.bounds)
    if r > VARIABLE_CAP:
        raise ValueError(f"too many variables ({r} > {VARIABLE_CAP})")

    # normalize everything to sum >= bound
    norm = []
    for c in P.constraints:
        if c.relation == ">=":
            norm.append((c.coeffs, c.bound))
        else:
            norm.append((tuple(-x for x in c.coeffs), -c.bound))

    # best[t][idx]: largest value vars idx.. can add to constraint t
    best = []
    for coeffs, _ in norm:
        suffix = [0] * (r + 1)
        for i in range(r - 1, -1, -1):
            gain = coeffs[i] * P.bounds[i] if coeffs[i] > 0 else 0
            suffix[i] = suffix[i + 1] + gain
        best.append(suffix)

    assign = [0] * r

    def search(idx: int, partial: list[int]) -> bool:
        for t, (_, bound) in enumerate(norm):
            if partial[t] + best[t][idx] < bound:
                return False
        if idx == r:
            return True
        coeffs = [norm[t][0][idx] for t in range(len(norm))]
        for v in range(P.bounds[idx] + 1):
            assign[idx] = v
            nxt = [partial[t] + coeffs[t] * v for t in range(len(norm))]
            if search(idx + 1, nxt):
                return True
        return False

    if search(0, [0] * len(norm)):
        return tuple(assign)
    return None


# ---------------------------------------------------------------------------
# outcome-table enumeration and evaluation

_OUTCOME_ORDER = (Outcome.I_WINS, Outcome.L_WINS, Outcome.TIE)


def enumerate_cots(j: int, names: Optional[Sequence[str]] = None,
                   ) -> Iterator[COT]:
    """All 3^C(j,2) outcome tables over j candidates, lexicographically.

    Pairs run in sorted order and each pair cycles through lower-id
    wins, higher-id wins, tie; the first table is all lower-id wins
    and the last is all ties.  Default names are "1".."j".
    """
    if j < 0:
        raise ValueError("candidate count cannot be negative")
    if j > COT_CAP:
        raise ValueError(f"too many candidates ({j} > {COT_CAP})")
    if names is None:
        names = tuple(str(i + 1) for i in range(j))
    else:
        names = tuple(names)
        if len(names) != j:
            raise ValueError("name count differs from candidate count")
    pairs = [(i, l) for i in range(j) for l in range(i + 1, j)]
    for combo in itertools.product(_OUTCOME_ORDER, repeat=len(pairs)):
        yield COT(names, dict(zip(pairs, combo)))


def _cot_scaled(T: COT, alpha: Alpha) -> list[int]:
    scores = [0] * T.m
    for (i, l), o in T.outcome.items():
        if o is Outcome.TIE:
            scores[i] += alpha.num
            scores[l] += alpha.num
        elif o is Outcome.I_WINS:
            scores[i] += alpha.den
        else:
            scores[l] += alpha.den
    return scores


def _cot_winners(T: COT, alpha: Alpha) -> frozenset[int]:
    scores = _cot_scaled(T, alpha)
    top = max(scores)
    return frozenset(i for i, s in enumerate(scores) if s == top)


def _cot_survivors(T: COT, alpha: Alpha, rule: TieRule) -> frozenset[int]:
    win = _cot_winners(T, alpha)
    if rule is TieRule.TE and len(win) != 1:
        return frozenset()
    return win


def _won(model: WinnerModel, p: int, winner_set: frozenset[int]) -> bool:
    if model is WinnerModel.UNIQUE:
        return winner_set == {p}
    return p in winner_set


# ---------------------------------------------------------------------------
# vote types


def _type_key(pref: Preference) -> tuple[int, ...]:
    t = pref.table()
    return tuple(t[k] for k in sorted(t))


def _group_types(prefs_with_mult) -> tuple[list[Preference], list[int]]:
    """Collapse (preference, multiplicity) pairs into distinct vote types.

    Returns one representative per distinct pairwise table plus its
    total count, ordered by table key, so differently split profiles
    of the same electorate produce identical groupings.
    """
    seen: dict[tuple, list] = {}
    for pref, mult in prefs_with_mult:
        key = _type_key(pref)
        if key in seen:
            seen[key][1] += mult
        else:
            seen[key] = [pref, mult]
    types, counts = [], []
    for key in sorted(seen):
        pref, count = seen[key]
        types.append(pref)
        counts.append(count)
    return types, counts


def _profile_types(E: Election) -> tuple[list[Preference], list[int]]:
    return _group_types((b.pref, b.multiplicity) for b in E.voters)


# ---------------------------------------------------------------------------
# goals


@dataclass(frozen=True)
class CotGoal:
    """A control goal phrased over hypothesized outcome tables.

    ``test`` is called as test(inst, T) under adding/deleting voters
    and as test(inst, T1, T2) under voter partition, where the tables
    carry the election's candidate names.  It must be pure and
    deterministic; anything slower than polynomial in the instance
    breaks the cheap-iteration premise of the searches using it.
    """

    name: str
    test: Callable[..., bool]
    cost_note: str = "polynomial for any fixed candidate count"


def winner_goal(p: int, constructive: bool, model: WinnerModel,
                rule: TieRule = TieRule.TP) -> CotGoal:
    """The standard goal: p ends up a winner (or a non-winner).

    Under partition, survivors of each side are read off the claimed
    tables and the final round is scored with the full input profile.
    """

    def test(inst: ControlInstance, *tables: COT) -> bool:
        if len(tables) == 1:
            got = _cot_winners(tables[0], inst.alpha)
        else:
            t1, t2 = tables
            finalists = (_cot_survivors(t1, inst.alpha, rule)
                         | _cot_survivors(t2, inst.alpha, rule))
            if finalists:
                vs = vs_matrix(inst.election)
                got = winners_from_vs(vs, inst.alpha, finalists)
            else:
                got = frozenset()
        won = _won(model, p, got)
        return won if constructive else not won

    side = "make" if constructive else "unmake"
    return CotGoal(f"{side}-winner-{p}", test)


def final_scores(inst: ControlInstance, tables: Sequence[COT],
                 rule: TieRule = TieRule.TP) -> dict[str, int]:
    """Scaled score by candidate name in the final election the tables imply.

    One table: every candidate, scored straight off the table.  Two
    tables (partition): survivors of both sides per the tie rule,
    scored over the full input profile; non-survivors are absent.
    """
    alpha = inst.alpha
    if len(tables) == 1:
        T = tables[0]
        scores = _cot_scaled(T, alpha)
        return {T.names[i]: scores[i] for i in range(T.m)}
    t1, t2 = tables
    finalists = (_cot_survivors(t1, alpha, rule)
                 | _cot_survivors(t2, alpha, rule))
    if not finalists:
        return {}
    vs = vs_matrix(inst.election)
    scores = scaled_scores_from_vs(vs, alpha, finalists)
    return {inst.election.names[c]: s for c, s in scores.items()}


def lexicographic_order_goal(rule: TieRule = TieRule.TP) -> CotGoal:
    """Scores strictly decrease in candidate-name order."""

    def test(inst, *tables):
        scores = final_scores(inst, tables, rule)
        ordered = [scores[n] for n in sorted(scores)]
        return all(a > b for a, b in zip(ordered, ordered[1:]))

    return CotGoal("lexicographic-score-order", test)


def order_with_ties_goal(groups: Sequence[Sequence[str]],
                         rule: TieRule = TieRule.TP) -> CotGoal:
    """Scores follow the given descending groups, equal within a group."""

    fixed = tuple(tuple(g) for g in groups)

    def test(inst, *tables):
        scores = final_scores(inst, tables, rule)
        levels = []
        for g in fixed:
            if any(n not in scores for n in g):
                return False
            vals = {scores[n] for n in g}
            if len(vals) != 1:
                return False
            levels.append(vals.pop())
        return all(a > b for a, b in zip(levels, levels[1:]))

    return CotGoal("score-order-with-ties", test)


def cowinner_count_goal(q: int, rule: TieRule = TieRule.TP) -> CotGoal:
    """Exactly q candidates share the top score."""

    def test(inst, *tables):
        scores = final_scores(inst, tables, rule)
        if not scores:
            return q == 0
        top = max(scores.values())
        return sum(1 for s in scores.values() if s == top) == q

    return CotGoal(f"exactly-{q}-cowinners", test)


def distinct_scores_goal(rule: TieRule = TieRule.TP) -> CotGoal:
    """No two candidates end with the same score."""

    def test(inst, *tables):
        scores = final_scores(inst, tables, rule)
        return len(set(scores.values())) == len(scores)

    return CotGoal("all-scores-distinct", test)


# ---------------------------------------------------------------------------
# feasibility builders (voter control, bounded candidates)


def _prefer_lists(types: Sequence[Preference], i: int, l: int,
                  ) -> tuple[list[int], list[int]]:
    fore = [a for a, t in enumerate(types) if t.prefers(i, l)]
    against = [a for a, t in enumerate(types) if not t.prefers(i, l)]
    return fore, against


def _pv_problem(m: int, types: Sequence[Preference], counts: Sequence[int],
                T1: COT, T2: COT) -> IntFeasibilityProblem:
    """Variables: how many voters of each type go into the first half.

    Each half's pairwise margins must match its claimed table's signs
    exactly.  Demanding only "ties or beats" would admit splits whose
    claimed wins realize as ties, and the goal was judged on the
    claims, so such slack produces wrong accepts.
    """
    r = len(types)
    cons: list[LinearConstraint] = []
    for i in range(m):
        for l in range(i + 1, m):
            fore, against = _prefer_lists(types, i, l)
            coeffs = [0] * r
            for a in fore:
                coeffs[a] = 1
            for a in against:
                coeffs[a] = -1
            cons.extend(_sign_constraints(0, coeffs, T1.sign(i, l)))
            # the second half holds the complements n_a - m_a, whose
            # margin is the whole profile's minus the first half's
            whole = (sum(counts[a] for a in fore)
                     - sum(counts[a] for a in against))
            flipped = [-c for c in coeffs]
            cons.extend(_sign_constraints(whole, flipped, T2.sign(i, l)))
    return IntFeasibilityProblem(tuple(counts), tuple(cons))


def _sign_constraints(base: int, coeffs: Sequence[int],
                      want: int) -> list[LinearConstraint]:
    """Constrain base + sum(coeffs*m) to match the sign `want` exactly."""
    coeffs = tuple(coeffs)
    if want > 0:
        return [LinearConstraint(coeffs, ">=", 1 - base)]
    if want < 0:
        return [LinearConstraint(coeffs, "<=", -1 - base)]
    return [LinearConstraint(coeffs, ">=", -base),
            LinearConstraint(coeffs, "<=", -base)]


def _av_dv_problem(inst: ControlInstance, T: COT, adding: bool,
                   ) -> tuple[IntFeasibilityProblem, list[Preference]]:
    """Variables: per-type counts of voters added from the pool (AV)
    or deleted from the registered profile (DV)."""
    E = inst.election
    m = E.m
    reg_types, reg_counts = _profile_types(E)
    if adding:
        types, bounds = _group_types((p, 1) for p in inst.pool)
    else:
        types, bounds = reg_types, reg_counts
    r = len(types)
    cons: list[LinearConstraint] = []
    if inst.k is None:
        raise ValueError("adding/deleting voters needs the budget k")
    cons.append(LinearConstraint((1,) * r, "<=", inst.k))
    for i in range(m):
        for l in range(i + 1, m):
            base = 0
            for a, t in enumerate(reg_types):
                base += reg_counts[a] if t.prefers(i, l) else -reg_counts[a]
            coeffs = [0] * r
            for a, t in enumerate(types):
                delta = 1 if t.prefers(i, l) else -1
                coeffs[a] = delta if adding else -delta
            cons.extend(_sign_constraints(base, coeffs, T.sign(i, l)))
    return IntFeasibilityProblem(tuple(bounds), tuple(cons)), types


# ---------------------------------------------------------------------------
# FPT routines


_PV_TAGS = (ProblemTag.CC_PV_TE, ProblemTag.CC_PV_TP,
            ProblemTag.DC_PV_TE, ProblemTag.DC_PV_TP)
_AV_DV_TAGS = (ProblemTag.CC_AV, ProblemTag.DC_AV,
               ProblemTag.CC_DV, ProblemTag.DC_DV)


def _pv_search(inst: ControlInstance, goal: CotGoal) -> Verdict:
    E = inst.election
    types, counts = _profile_types(E)
    for T1 in enumerate_cots(E.m, E.names):
        for T2 in enumerate_cots(E.m, E.names):
            if not goal.test(inst, T1, T2):
                continue
            point = ilp_feasible(_pv_problem(E.m, types, counts, T1, T2))
            if point is not None:
                witness = (T1, T2, tuple(zip(types, point)))
                return Verdict(Decision.YES, witness)
    return Verdict(Decision.NO)


def _av_dv_search(inst: ControlInstance, goal: CotGoal,
                  adding: bool) -> Verdict:
    E = inst.election
    for T in enumerate_cots(E.m, E.names):
        if not goal.test(inst, T):
            continue
        problem, types = _av_dv_problem(inst, T, adding)
        point = ilp_feasible(problem)
        if point is not None:
            return Verdict(Decision.YES, (T, tuple(zip(types, point))))
    return Verdict(Decision.NO)


def _rule_of(tag: ProblemTag) -> TieRule:
    return TieRule.TE if tag.value.endswith("TE") else TieRule.TP


def fpt_pv(tag: ProblemTag, inst: ControlInstance,
           bound: int = PV_BOUND) -> Verdict:
    """Voter partition with a bounded candidate count, succinct-safe.

    Loops over pairs of claimed outcome tables for the two halves;
    whenever the pair would make the distinguished candidate win
    (constructive) or lose (destructive), asks the feasibility solver
    whether the profile splits to match the claims.  The witness is
    the table pair plus how many voters of each type go first.
    """
    if tag not in _PV_TAGS:
        raise ValueError(f"not a voter-partition problem: {tag.value}")
    E = inst.election
    if E.m > bound:
        raise ValueError(f"too many candidates ({E.m} > {bound})")
    goal = winner_goal(inst.p, tag.value.startswith("CC"), inst.model,
                       _rule_of(tag))
    return _pv_search(inst, goal)


def fpt_av_dv(tag: ProblemTag, inst: ControlInstance,
              bound: int = AV_DV_BOUND) -> Verdict:
    """Adding or deleting up to k voters, bounded candidate count.

    Single loop over claimed post-action outcome tables; each passing
    table becomes a feasibility problem over per-type action counts
    whose constraints pin every pairwise margin's sign to the claim.
    """
    if tag not in _AV_DV_TAGS:
        raise ValueError(f"not an add/delete-voters problem: {tag.value}")
    E = inst.election
    if E.m > bound:
        raise ValueError(f"too many candidates ({E.m} > {bound})")

    p, model = inst.p, inst.model
    constructive = tag.value.startswith("CC")

    def test(inner_inst, T):
        got = _cot_winners(T, inner_inst.alpha)
        won = _won(model, p, got)
        return won if constructive else not won

    goal = CotGoal("winner-by-table", test)
    return _av_dv_search(inst, goal, adding=tag in (ProblemTag.CC_AV,
                                                    ProblemTag.DC_AV))


def extended_control(goal: CotGoal, tag: ProblemTag,
                     inst: ControlInstance,
                     bound: Optional[int] = None) -> Verdict:
    """Voter control toward an arbitrary outcome-table goal.

    Same searches as fpt_pv / fpt_av_dv with the winner test swapped
    for `goal`; the tag picks the action (its CC/DC half is moot since
    the goal decides what counts as success).
    """
    E = inst.election
    if tag in _PV_TAGS:
        cap = PV_BOUND if bound is None else bound
        if E.m > cap:
            raise ValueError(f"too many candidates ({E.m} > {cap})")
        return _pv_search(inst, goal)
    if tag in _AV_DV_TAGS:
        cap = AV_DV_BOUND if bound is None else bound
        if E.m > cap:
            raise ValueError(f"too many candidates ({E.m} > {cap})")
        return _av_dv_search(inst, goal, adding=tag in (ProblemTag.CC_AV,
                                                        ProblemTag.DC_AV))
    raise ValueError(f"extended control covers voter-control tags only, "
                     f"not {tag.value}")


def fpt_candidate_control(tag: ProblemTag, inst: ControlInstance,
                          bound: int = CANDIDATE_BOUND) -> Verdict:
    """Any candidate-control action under a bounded candidate count.

    With at most `bound` candidates every action set is a small power
    set, so this tries them all.  Scoring runs on the aggregated
    pairwise matrix, so block multiplicities never get expanded.
    """
    name = tag.value
    E, alpha, p, model = inst.election, inst.alpha, inst.p, inst.model
    if E.m > bound:
        raise ValueError(f"too many candidates ({E.m} > {bound})")
    constructive = name.startswith("CC")
    vs = vs_matrix(E)

    def decide(ids) -> bool:
        return _won(model, p, winners_from_vs(vs, alpha, ids))

    if name in ("CCAC", "DCAC", "CCACu", "DCACu"):
        spoilers = sorted(inst.spoilers)
        base = [c for c in range(E.m) if c not in inst.spoilers]
        if name.endswith("u"):
            limit = len(spoilers)
        elif inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        else:
            limit = min(inst.k, len(spoilers))
        for size in range(limit + 1):
            for added in itertools.combinations(spoilers, size):
                ok = decide(base + list(added))
                if ok == constructive:
                    return Verdict(Decision.YES, tuple(added))
        return Verdict(Decision.NO)

    if name in ("CCDC", "DCDC"):
        if inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        others = [c for c in range(E.m) if c != p]
        for size in range(min(inst.k, len(others)) + 1):
            for deleted in itertools.combinations(others, size):
                kept = [c for c in range(E.m) if c not in deleted]
                if decide(kept) == constructive:
                    return Verdict(Decision.YES, tuple(deleted))
        return Verdict(Decision.NO)

    if "PC" in name:
        rule = TieRule.TE if name.endswith("TE") else TieRule.TP
        kind = PartitionKind.RPC if "RPC" in name else PartitionKind.PC
        ids = range(E.m)
        for mask in range(1 << E.m):
            c1 = tuple(c for c in ids if mask >> c & 1)
            c2 = tuple(c for c in ids if not mask >> c & 1)
            got = two_stage_eval(E, alpha, rule, kind, (c1, c2))
            if _won(model, p, got) == constructive:
                return Verdict(Decision.YES, (c1, c2))
        return Verdict(Decision.NO)

    raise ValueError(f"not a candidate-control problem: {name}")


def fpt_voter_control_bv(tag: ProblemTag, inst: ControlInstance,
                         bound: int = VOTER_BOUND) -> Verdict:
    """Any voter-control action under a bounded voter count.

    The profile is expanded to unit voters (the bound covers the pool
    too, for adding), then every subset or split of units is tried.
    """
    name = tag.value
    E, alpha, p, model = inst.election, inst.alpha, inst.p, inst.model
    constructive = name.startswith("CC")
    units = expand_units(E)

    def decide(vs) -> bool:
        got = winners_from_vs(vs, alpha, range(E.m))
        return _won(model, p, got) == constructive

    if name in ("CCAV", "DCAV"):
        if inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        pool = list(inst.pool)
        if len(units) + len(pool) > bound:
            raise ValueError(f"too many voters "
                             f"({len(units)} + {len(pool)} > {bound})")
        everyone = units + pool
        base = list(range(len(units)))
        for size in range(min(inst.k, len(pool)) + 1):
            for added in itertools.combinations(range(len(pool)), size):
                chosen = base + [len(units) + i for i in added]
                if decide(vs_matrix_of_units(E.m, everyone, chosen)):
                    return Verdict(Decision.YES, tuple(added))
        return Verdict(Decision.NO)

    if name in ("CCDV", "DCDV"):
        if inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        n = len(units)
        if n > bound:
            raise ValueError(f"too many voters ({n} > {bound})")
        for size in range(min(inst.k, n) + 1):
            for deleted in itertools.combinations(range(n), size):
                kept = [i for i in range(n) if i not in deleted]
                if decide(vs_matrix_of_units(E.m, units, kept)):
                    return Verdict(Decision.YES, tuple(deleted))
        return Verdict(Decision.NO)

    if "PV" in name:
        n = len(units)
        if n > bound:
            raise ValueError(f"too many voters ({n} > {bound})")
        rule = _rule_of(tag)
        for mask in range(1 << n):
            v1 = tuple(i for i in range(n) if mask >> i & 1)
            v2 = tuple(i for i in range(n) if not mask >> i & 1)
            got = two_stage_eval(E, alpha, rule, PartitionKind.PV, (v1, v2))
            if _won(model, p, got) == constructive:
                return Verdict(Decision.YES, (v1, v2))
        return Verdict(Decision.NO)

    raise ValueError(f"not a voter-control problem: {name}")


def two_voter_realization(T: COT) -> Election:
    """Two table voters whose election has outcome table T.

    Both voters prefer the winner of every decisive pair; on tied
    pairs the first voter takes the lower id and the second the
    higher, so an all-ties table yields two exactly opposite voters
    and a tie-free table yields two identical ones.
    """
    first: dict[tuple[int, int], int] = {}
    second: dict[tuple[int, int], int] = {}
    for (i, l), o in T.outcome.items():
        if o is Outcome.I_WINS:
            first[(i, l)] = second[(i, l)] = i
        elif o is Outcome.L_WINS:
            first[(i, l)] = second[(i, l)] = l
        else:
            first[(i, l)] = i
            second[(i, l)] = l
    blocks = (VoterBlock(Preference.from_table(T.m, first)),
              VoterBlock(Preference.from_table(T.m, second)))
    return Election(make_candidates(T.names), blocks)
