"""Exhaustive desk-scale solvers used as ground truth in tests.

Every oracle walks its full action space and evaluates each action through
the scoring layer, so a YES verdict is its own replay.  Searches count
elementary evaluations and stop with CAP_EXCEEDED when the (configurable)
node budget would be blown, so "too big" is never confused with "NO".
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .election import (Alpha, Election, PartitionKind, Preference, TieRule,
                       VoterBlock, WinnerModel, condorcet_pv_eval,
                       expand_units, pair_of, two_stage_eval, vs_matrix,
                       vs_matrix_of_units, winners_from_vs)

DEFAULT_NODE_CAP = 50_000_000


class Decision(Enum):
    YES = "YES"
    NO = "NO"
    CAP_EXCEEDED = "CAP_EXCEEDED"


@dataclass
class Verdict:
    decision: Decision
    witness: Optional[object] = None
    nodes_explored: int = 0

    @property
    def yes(self) -> bool:
        return self.decision is Decision.YES


class ProblemTag(Enum):
    BRIBERY_CON = "BRIBERY-CON"
    BRIBERY_DES = "BRIBERY-DES"
    MICROBRIBERY_CON = "MICROBRIBERY-CON"
    MICROBRIBERY_DES = "MICROBRIBERY-DES"
    CC_AC = "CCAC"
    CC_ACU = "CCACu"
    CC_DC = "CCDC"
    CC_PC_TE = "CCPC-TE"
    CC_PC_TP = "CCPC-TP"
    CC_RPC_TE = "CCRPC-TE"
    CC_RPC_TP = "CCRPC-TP"
    CC_AV = "CCAV"
    CC_DV = "CCDV"
    CC_PV_TE = "CCPV-TE"
    CC_PV_TP = "CCPV-TP"
    DC_AC = "DCAC"
    DC_ACU = "DCACu"
    DC_DC = "DCDC"
    DC_PC_TE = "DCPC-TE"
    DC_PC_TP = "DCPC-TP"
    DC_RPC_TE = "DCRPC-TE"
    DC_RPC_TP = "DCRPC-TP"
    DC_AV = "DCAV"
    DC_DV = "DCDV"
    DC_PV_TE = "DCPV-TE"
    DC_PV_TP = "DCPV-TP"
    CONDORCET_CCDV = "CONDORCET-CCDV"
    CONDORCET_CCPV = "CONDORCET-CCPV"


CONTROL_TAGS = tuple(t for t in ProblemTag
                     if t.value[:2] in ("CC", "DC") and "BRI" not in t.value)


@dataclass(frozen=True)
class ControlInstance:
    """One control question.  Field use depends on the tag:

    spoilers: candidate ids initially unregistered (AC/ACu tags); voters
    rank everyone, registered or not.  pool: addable voters (AV tags).
    k: action budget for AC/DC/AV/DV; ignored by ACu and partition tags.
    """

    election: Election
    alpha: Alpha
    p: int
    model: WinnerModel = WinnerModel.NONUNIQUE
    k: Optional[int] = None
    spoilers: frozenset = frozenset()
    pool: tuple = ()

    def __post_init__(self) -> None:
        if not (0 <= self.p < self.election.m):
            raise ValueError("distinguished candidate not in the election")
        if self.p in self.spoilers:
            raise ValueError("distinguished candidate cannot be a spoiler")


class _Budget:
    """Mutable node counter shared down a search."""

    def __init__(self, cap):
        self.cap = cap
        self.nodes = 0

    def spend(self) -> bool:
        self.nodes += 1
        return self.nodes <= self.cap


def _goal(constructive: bool, model: WinnerModel, p: int,
          winner_set: frozenset) -> bool:
    if model is WinnerModel.UNIQUE:
        won = winner_set == {p}
    else:
        won = p in winner_set
    return won if constructive else not won


def _subsets_upto(items: Sequence, k: int):
    for size in range(min(k, len(items)) + 1):
        yield from itertools.combinations(items, size)


# ---------------------------------------------------------------------------
# bribery and microbribery


def _all_orders(m: int) -> list[Preference]:
    return [Preference.from_order(p) for p in itertools.permutations(range(m))]


def _all_tables(m: int) -> list[Preference]:
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    out = []
    for choice in itertools.product(*[(i, j) for (i, j) in pairs]):
        out.append(Preference.from_table(m, dict(zip(pairs, choice))))
    return out


def _p_top_orders(m: int, p: int) -> list[Preference]:
    rest = [c for c in range(m) if c != p]
    return [Preference.from_order((p,) + perm)
            for perm in itertools.permutations(rest)]


def bribery_oracle(E: Election, alpha: Alpha, p: int, k: int, mode: str,
                   model: WinnerModel = WinnerModel.NONUNIQUE,
                   node_cap: int = DEFAULT_NODE_CAP,
                   prune: bool = False) -> Verdict:
    """Replace the full preferences of at most k voters.

    Rational voters receive replacement orders, irrational voters
    replacement tables.  mode is "con" (make p win) or "des".  The
    optional pruning fixes p on top of every bribed vote; it is sound
    only for constructive nonunique bribery of rational voters and is
    off by default.
    """
    constructive = _check_mode(mode)
    units = expand_units(E)
    m, n = E.m, len(units)
    k = min(k, n)

    use_prune = (prune and constructive and model is WinnerModel.NONUNIQUE
                 and all(u.is_order for u in units))
    orders = _p_top_orders(m, p) if use_prune else _all_orders(m)
    tables = _all_tables(m) if any(not u.is_order for u in units) else []

    def replacements(unit: Preference) -> list[Preference]:
        return orders if unit.is_order else tables

    # upfront size estimate so a hopeless search fails fast
    per = [len(replacements(u)) for u in units]
    estimate = 0
    for subset in _subsets_upto(range(n), k):
        est = 1
        for i in subset:
            est *= per[i]
        estimate += est
        if estimate > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)

    budget = _Budget(node_cap)
    for subset in _subsets_upto(range(n), k):
        for combo in itertools.product(*[replacements(units[i]) for i in subset]):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            new_units = list(units)
            for i, pref in zip(subset, combo):
                new_units[i] = pref
            vs = vs_matrix_of_units(m, new_units, range(n))
            got = winners_from_vs(vs, alpha, range(m))
            if _goal(constructive, model, p, got):
                witness = tuple(zip(subset, combo))
                return Verdict(Decision.YES, witness, budget.nodes)
    return Verdict(Decision.NO, None, budget.nodes)


def apply_flips(E: Election, flips) -> Election:
    """Flip table entries (voter_index, (i, j), preferred) on unit voters."""
    units = [u.table() for u in expand_units(E)]
    seen = set()
    for voter, (a, b), pref in flips:
        key = (voter, pair_of(a, b))
        if key in seen:
            raise ValueError(f"entry {key} flipped twice")
        seen.add(key)
        if pref not in pair_of(a, b):
            raise ValueError("preferred candidate not in the pair")
        units[voter][pair_of(a, b)] = pref
    blocks = tuple(VoterBlock(Preference.from_table(E.m, t), 1) for t in units)
    return Election(E.candidates, blocks)


def microbribery_oracle(E: Election, alpha: Alpha, p: int, k: int, mode: str,
                        model: WinnerModel = WinnerModel.NONUNIQUE,
                        node_cap: int = DEFAULT_NODE_CAP) -> Verdict:
    """Flip at most k single table entries, one voter-pair entry each."""
    constructive = _check_mode(mode)
    units = [u.table() for u in expand_units(E)]
    m, n = E.m, len(units)
    entries = [(v, pq) for v in range(n) for pq in sorted(units[v])]
    k = min(k, len(entries))

    estimate = sum(math.comb(len(entries), j) for j in range(k + 1))
    if estimate > node_cap:
        return Verdict(Decision.CAP_EXCEEDED)

    budget = _Budget(node_cap)
    for flip_set in _subsets_upto(entries, k):
        if not budget.spend():
            return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
        new_units = [dict(t) for t in units]
        witness = []
        for v, (i, j) in flip_set:
            cur = new_units[v][(i, j)]
            new = j if cur == i else i
            new_units[v][(i, j)] = new
            witness.append((v, (i, j), new))
        prefs = [Preference.from_table(m, t) for t in new_units]
        vs = vs_matrix_of_units(m, prefs, range(n))
        got = winners_from_vs(vs, alpha, range(m))
        if _goal(constructive, model, p, got):
            return Verdict(Decision.YES, tuple(witness), budget.nodes)
    return Verdict(Decision.NO, None, budget.nodes)


def microbribery_min_cost(E: Election, alpha: Alpha, p: int, mode: str,
                          model: WinnerModel = WinnerModel.NONUNIQUE,
                          max_k: Optional[int] = None,
                          node_cap: int = DEFAULT_NODE_CAP) -> Optional[int]:
    """Smallest flip budget with a YES verdict, or None up to max_k."""
    units = expand_units(E)
    limit = len(units) * E.m * (E.m - 1) // 2
    if max_k is not None:
        limit = min(limit, max_k)
    for k in range(limit + 1):
        v = microbribery_oracle(E, alpha, p, k, mode, model, node_cap)
        if v.decision is Decision.CAP_EXCEEDED:
            raise RuntimeError("node cap hit while scanning for minimum cost")
        if v.yes:
            return k
    return None


def _check_mode(mode: str) -> bool:
    if mode not in ("con", "des"):
        raise ValueError("mode must be 'con' or 'des'")
    return mode == "con"


# ---------------------------------------------------------------------------
# control


def control_oracle(tag: ProblemTag, inst: ControlInstance,
                   node_cap: int = DEFAULT_NODE_CAP) -> Verdict:
    """Exhaustively answer one control question.

    Witnesses: added/deleted id tuples for AC/ACu/DC/AV/DV, or the
    partition (as a pair of tuples) for PC/RPC/PV tags.  Voter actions
    address expanded unit voters in block order.
    """
    E, alpha, p, model = inst.election, inst.alpha, inst.p, inst.model
    name = tag.value
    constructive = not name.startswith("DC")
    budget = _Budget(node_cap)

    def verdict(found, witness=None):
        d = Decision.YES if found else Decision.NO
        return Verdict(d, witness, budget.nodes)

    if name in ("CCAC", "DCAC", "CCACu", "DCACu"):
        spoilers = sorted(inst.spoilers)
        base = [c for c in range(E.m) if c not in inst.spoilers]
        if name.endswith("u"):
            limit = len(spoilers)
        else:
            if inst.k is None:
                raise ValueError(f"{name} needs the budget k")
            limit = min(inst.k, len(spoilers))
        choices = _subsets_upto(spoilers, limit)
        if sum(math.comb(len(spoilers), j) for j in range(limit + 1)) > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)
        vs = vs_matrix(E)
        for added in choices:
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            ids = base + list(added)
            got = winners_from_vs(vs, alpha, ids)
            if model is WinnerModel.UNIQUE and len(got) != 1:
                got = frozenset()
            if _goal(constructive, model, p, got):
                return verdict(True, tuple(added))
        return verdict(False)

    if name in ("CCDC", "DCDC"):
        if inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        others = [c for c in range(E.m) if c != p]
        if sum(math.comb(len(others), j)
               for j in range(min(inst.k, len(others)) + 1)) > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)
        vs = vs_matrix(E)
        for deleted in _subsets_upto(others, inst.k):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            ids = [c for c in range(E.m) if c not in deleted]
            got = winners_from_vs(vs, alpha, ids)
            if model is WinnerModel.UNIQUE and len(got) != 1:
                got = frozenset()
            if _goal(constructive, model, p, got):
                return verdict(True, tuple(deleted))
        return verdict(False)

    if "PC" in name or "RPC" in name:
        rule = TieRule.TE if name.endswith("TE") else TieRule.TP
        kind = PartitionKind.RPC if "RPC" in name else PartitionKind.PC
        if 2 ** E.m > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)
        ids = list(range(E.m))
        for mask in range(2 ** E.m):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            c1 = tuple(c for c in ids if mask >> c & 1)
            c2 = tuple(c for c in ids if not mask >> c & 1)
            got = two_stage_eval(E, alpha, rule, kind, (c1, c2))
            if model is WinnerModel.UNIQUE and len(got) != 1:
                got = frozenset()
            if _goal(constructive, model, p, got):
                return verdict(True, (c1, c2))
        return verdict(False)

    if name in ("CCAV", "DCAV"):
        if inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        units = expand_units(E)
        pool = list(inst.pool)
        if sum(math.comb(len(pool), j)
               for j in range(min(inst.k, len(pool)) + 1)) > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)
        for added in _subsets_upto(range(len(pool)), inst.k):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            prefs = units + [pool[i] for i in added]
            vs = vs_matrix_of_units(E.m, prefs, range(len(prefs)))
            got = winners_from_vs(vs, alpha, range(E.m))
            if model is WinnerModel.UNIQUE and len(got) != 1:
                got = frozenset()
            if _goal(constructive, model, p, got):
                return verdict(True, tuple(added))
        return verdict(False)

    if name in ("CCDV", "DCDV", "CONDORCET-CCDV"):
        if inst.k is None:
            raise ValueError(f"{name} needs the budget k")
        units = expand_units(E)
        n = len(units)
        if sum(math.comb(n, j)
               for j in range(min(inst.k, n) + 1)) > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)
        for deleted in _subsets_upto(range(n), inst.k):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            kept = [i for i in range(n) if i not in deleted]
            vs = vs_matrix_of_units(E.m, units, kept)
            if name == "CONDORCET-CCDV":
                ok = all(vs[p][d] > 0 for d in range(E.m) if d != p)
            else:
                got = winners_from_vs(vs, alpha, range(E.m))
                if model is WinnerModel.UNIQUE and len(got) != 1:
                    got = frozenset()
                ok = _goal(constructive, model, p, got)
            if ok:
                return verdict(True, tuple(deleted))
        return verdict(False)

    if "PV" in name:
        units = expand_units(E)
        n = len(units)
        if 2 ** n > node_cap:
            return Verdict(Decision.CAP_EXCEEDED)
        rule = TieRule.TE if name.endswith("TE") else TieRule.TP
        for mask in range(2 ** n):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            v1 = tuple(i for i in range(n) if mask >> i & 1)
            v2 = tuple(i for i in range(n) if not mask >> i & 1)
            if name == "CONDORCET-CCPV":
                got = condorcet_pv_eval(E, (v1, v2))
                ok = got == p
            else:
                res = two_stage_eval(E, alpha, rule, PartitionKind.PV, (v1, v2))
                if model is WinnerModel.UNIQUE and len(res) != 1:
                    res = frozenset()
                ok = _goal(constructive, model, p, res)
            if ok:
                return verdict(True, (v1, v2))
        return verdict(False)

    raise ValueError(f"not a control tag: {tag}")


# ---------------------------------------------------------------------------
# classic NP-hard sources


def x3c_oracle(B: Sequence[str], S: Sequence[Sequence[str]], k: int,
               node_cap: int = DEFAULT_NODE_CAP) -> Verdict:
    """Exact cover of B by k pairwise disjoint triples from S."""
    base = set(B)
    if len(base) != len(B):
        raise ValueError("duplicate base element")
    if len(S) > 20:
        raise ValueError("oracle limit: at most 20 sets")
    triples = []
    for s in S:
        t = frozenset(s)
        if len(t) != 3 or not t <= base:
            raise ValueError(f"not a 3-subset of the base: {sorted(s)}")
        triples.append(t)
    if k < 1 or len(base) != 3 * k:
        raise ValueError("well-formed instances need k >= 1 and |B| = 3k")

    budget = _Budget(node_cap)
    if k <= len(triples):
        for choice in itertools.combinations(range(len(triples)), k):
            if not budget.spend():
                return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
            union: set = set()
            for i in choice:
                union |= triples[i]
            if len(union) == len(base):  # k disjoint triples covering all of B
                return Verdict(Decision.YES, tuple(choice), budget.nodes)
    return Verdict(Decision.NO, None, budget.nodes)


def vertex_cover_oracle(n: int, edges: Sequence[tuple[int, int]], k: int,
                        node_cap: int = DEFAULT_NODE_CAP) -> Verdict:
    """Vertex set of size at most k touching every edge."""
    if n > 20:
        raise ValueError("oracle limit: at most 20 vertices")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
    if k < 0:
        raise ValueError("k must be nonnegative")

    budget = _Budget(node_cap)
    for cover in _subsets_upto(range(n), k):
        if not budget.spend():
            return Verdict(Decision.CAP_EXCEEDED, None, budget.nodes)
        cset = set(cover)
        if all(u in cset or v in cset for u, v in edges):
            return Verdict(Decision.YES, tuple(cover), budget.nodes)
    return Verdict(Decision.NO, None, budget.nodes)
