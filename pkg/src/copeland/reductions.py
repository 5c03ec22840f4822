"""Cover-to-control instance generators with self-checked structure.

Bribery and control questions stay hard on quite specific election
families.  This module builds those families from two classic sources,
exact cover by 3-sets and vertex cover, and wraps each output in a
report of the margins and scores the construction relies on.  Every
report is verified against the built election before the instance is
returned, so a generator that drifts from the intended shape fails
loudly instead of handing out a broken election.

witness_from_cover translates a cover of the source into the matching
control action, and replay_witness confirms that the action reaches
its goal, so known-positive sources can be replayed end to end.

Degenerate sources (say a cover budget larger than the vertex count)
make the question trivial.  By default the generators reject them with
ValueError; with paper_convention=True they instead return a tiny
canned instance whose answer equals the trivial answer, mirroring the
usual convention in hardness arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .election import (ALPHA_HALF, ALPHA_ONE, ALPHA_ZERO, Alpha, COT,
                       Election, Outcome, PartitionKind, Preference, TieRule,
                       VoterBlock, WinnerModel, condorcet_pv_eval,
                       election_from_orders, expand_units, make_candidates,
                       scaled_scores_from_vs, two_stage_eval,
                       vs_matrix_of_units, winners_from_vs)
from .oracle import ControlInstance, ProblemTag, x3c_oracle
from .tournament import mcgarvey, targeted_cot


# ---------------------------------------------------------------------------
# source instances and their text form


@dataclass(frozen=True)
class X3CInstance:
    """Exact cover by 3-sets: find k pairwise disjoint triples covering B.

    B is the ground set (3k distinct names) and S the available triples
    in a fixed order, so S[i] can be referred to by index.
    """

    B: tuple[str, ...]
    S: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "B", tuple(self.B))
        object.__setattr__(self, "S", tuple(frozenset(s) for s in self.S))
        if not self.B or len(self.B) % 3:
            raise ValueError("B must hold 3k names for some k >= 1")
        if len(set(self.B)) != len(self.B):
            raise ValueError("duplicate name in B")
        ground = set(self.B)
        for i, s in enumerate(self.S):
            if len(s) != 3 or not s <= ground:
                raise ValueError(f"S[{i}] is not a 3-subset of B")

    @property
    def k(self) -> int:
        return len(self.B) // 3

    @property
    def n(self) -> int:
        return len(self.S)


@dataclass(frozen=True)
class VCInstance:
    """Vertex cover: find at most k vertices touching every edge.

    Vertices are 1..n.  Edges are stored normalized (low endpoint
    first) in the order given, so edge j keeps its identity.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        norm = []
        seen = set()
        for u, v in self.edges:
            if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"bad edge ({u}, {v})")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        if not norm:
            raise ValueError("need at least one edge")
        object.__setattr__(self, "edges", tuple(norm))
        if self.k < 0:
            raise ValueError("cover budget must be nonnegative")

    @property
    def m(self) -> int:
        return len(self.edges)


def parse_x3c(text: str) -> X3CInstance:
    """Read the line format ``X3C k=2`` / ``B a b ...`` / ``S a,b,c``."""
    k: Optional[int] = None
    B: list[str] = []
    S: list[tuple[str, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "X3C":
            if not rest.startswith("k=") or k is not None:
                raise ValueError(f"bad header line: {line!r}")
            k = int(rest[2:])
        elif head == "B":
            B.extend(rest.split())
        elif head == "S":
            S.append(tuple(part.strip() for part in rest.split(",")))
        else:
            raise ValueError(f"unrecognized line: {line!r}")
    if k is None:
        raise ValueError("missing X3C header")
    x = X3CInstance(tuple(B), tuple(frozenset(s) for s in S))
    if x.k != k:
        raise ValueError(f"header says k={k} but |B| = {len(B)}")
    return x


def format_x3c(x: X3CInstance) -> str:
    pos = {name: i for i, name in enumerate(x.B)}
    lines = [f"X3C k={x.k}", "B " + " ".join(x.B)]
    for s in x.S:
        lines.append("S " + ",".join(sorted(s, key=pos.get)))
    return "\n".join(lines) + "\n"


def parse_vc(text: str) -> VCInstance:
    """Read the line format ``VC k=1`` / ``EDGE u v`` (vertices 1..n)."""
    k: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "VC":
            if not rest.startswith("k=") or k is not None:
                raise ValueError(f"bad header line: {line!r}")
            k = int(rest[2:])
        elif head == "EDGE":
            u, v = rest.split()
            edges.append((int(u), int(v)))
        else:
            raise ValueError(f"unrecognized line: {line!r}")
    if k is None:
        raise ValueError("missing VC header")
    if not edges:
        raise ValueError("no edges")
    n = max(max(u, v) for u, v in edges)
    return VCInstance(n, tuple(edges), k)


def format_vc(g: VCInstance) -> str:
    lines = [f"VC k={g.k}"]
    lines.extend(f"EDGE {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fast pairwise tally

def fast_vs_matrix(E: Election) -> list[list[int]]:
    """vs_matrix replacement for elections with many candidates.

    For each candidate a it tallies, per rival, how many voters rank a
    above the rival, packing the per-rival counters into binary digit
    planes of candidate-set bitmasks (a carry-save adder).  A block of
    multiplicity w is folded in once per set bit of w.  The result
    equals vs_matrix exactly; it is just much faster once the
    candidate count is in the hundreds.
    """
    m = E.m
    total = 0
    planes: list[list[int]] = [[] for _ in range(m)]
    for block in E.voters:
        w = block.multiplicity
        total += w
        pref = block.pref
        below = [0] * m
        if pref.is_order:
            acc = 0
            order = pref.order
            for i in range(m - 1, -1, -1):
                below[order[i]] = acc
                acc |= 1 << order[i]
        else:
            for a in range(m):
                x = 0
                for b in range(m):
                    if b != a and pref.prefers(a, b):
                        x |= 1 << b
                below[a] = x
        level = 0
        while w:
            if w & 1:
                for a in range(m):
                    carry = below[a]
                    if not carry:
                        continue
                    pl = planes[a]
                    while len(pl) < level:
                        pl.append(0)
                    d = level
                    while carry:
                        if d == len(pl):
                            pl.append(carry)
                            break
                        nxt = pl[d] & carry
                        pl[d] ^= carry
                        carry = nxt
                        d += 1
            w >>= 1
            level += 1
    vs = [[0] * m for _ in range(m)]
    for a in range(m):
        counts = [0] * m
        for d, plane in enumerate(planes[a]):
            scale = 1 << d
            x = plane
            while x:
                b = (x & -x).bit_length() - 1
                counts[b] += scale
                x &= x - 1
        row = vs[a]
        for b in range(m):
            if b != a:
                row[b] = 2 * counts[b] - total
    return vs


# ---------------------------------------------------------------------------
# structure reports


class ReductionCheckError(Exception):
    """The built election does not match its own structure report."""


@dataclass(frozen=True)
class Report:
    """Margins and scores a construction promises, in checkable form.

    subsets names groups of candidates; score claims cite a group key,
    where "" means the whole candidate set.  Scores are scaled whole
    numbers (den * wins + num * ties), as everywhere else.

    Claim forms:

      ("vs", a, b, v)            vs(a, b) == v
      ("vs_ge", a, b, v)         vs(a, b) >= v
      ("vs_abs", a, b, v)        |vs(a, b)| == v
      ("beats", a, b)            vs(a, b) > 0
      ("ties", a, b)             vs(a, b) == 0
      ("beats_all", ka, kb)      every member of ka beats every member of kb
      ("ties_all", ka, kb)       all cross pairs tie
      ("ties_within", ka)        all pairs inside the group tie
      ("chain", ka)              earlier group members beat later ones
      ("score", key, c, v)       scaled score of c inside subset key == v
      ("score_le", key, c, v)    and <=, < variants
      ("score_lt", key, c, v)
      ("score_le_all", ka, key, v)   bound every member of ka at once
      ("floor", v, exceptions)   |vs| >= v on all pairs not excepted
    """

    alpha: Alpha
    subsets: tuple[tuple[str, tuple[str, ...]], ...]
    claims: tuple[tuple, ...]


def check_report(E: Election, report: Report,
                 vs: Optional[list[list[int]]] = None) -> list[list[int]]:
    """Verify every claim; returns the vs matrix it used.

    Raises ReductionCheckError listing the first failed claims.  The
    caller may pass a precomputed vs matrix to avoid tallying twice.
    """
    if vs is None:
        vs = fast_vs_matrix(E)
    m = E.m
    idx = {name: i for i, name in enumerate(E.names)}
    groups = {key: tuple(idx[nm] for nm in names)
              for key, names in report.subsets}
    groups.setdefault("", tuple(range(m)))
    score_cache: dict[str, dict[int, int]] = {}

    def scores(key: str) -> dict[int, int]:
        if key not in score_cache:
            score_cache[key] = scaled_scores_from_vs(vs, report.alpha,
                                                     groups[key])
        return score_cache[key]

    bad = []
    for claim in report.claims:
        kind = claim[0]
        if kind == "vs":
            ok = vs[idx[claim[1]]][idx[claim[2]]] == claim[3]
        elif kind == "vs_ge":
            ok = vs[idx[claim[1]]][idx[claim[2]]] >= claim[3]
        elif kind == "vs_abs":
            ok = abs(vs[idx[claim[1]]][idx[claim[2]]]) == claim[3]
        elif kind == "beats":
            ok = vs[idx[claim[1]]][idx[claim[2]]] > 0
        elif kind == "ties":
            ok = vs[idx[claim[1]]][idx[claim[2]]] == 0
        elif kind == "beats_all":
            ok = all(vs[a][b] > 0
                     for a in groups[claim[1]] for b in groups[claim[2]])
        elif kind == "ties_all":
            ok = all(vs[a][b] == 0
                     for a in groups[claim[1]] for b in groups[claim[2]])
        elif kind == "ties_within":
            g = groups[claim[1]]
            ok = all(vs[a][b] == 0
                     for i, a in enumerate(g) for b in g[i + 1:])
        elif kind == "chain":
            g = groups[claim[1]]
            ok = all(vs[a][b] > 0
                     for i, a in enumerate(g) for b in g[i + 1:])
        elif kind == "score":
            ok = scores(claim[1])[idx[claim[2]]] == claim[3]
        elif kind == "score_le":
            ok = scores(claim[1])[idx[claim[2]]] <= claim[3]
        elif kind == "score_lt":
            ok = scores(claim[1])[idx[claim[2]]] < claim[3]
        elif kind == "score_le_all":
            sc = scores(claim[2])
            ok = all(sc[c] <= claim[3] for c in groups[claim[1]])
        elif kind == "floor":
            exempt = {frozenset((idx[a], idx[b])) for a, b in claim[2]}
            ok = True
            for a in range(m):
                row = vs[a]
                for b in range(a + 1, m):
                    if abs(row[b]) < claim[1] and frozenset((a, b)) not in exempt:
                        ok = False
                        break
                if not ok:
                    break
        else:
            raise ValueError(f"unknown claim kind {kind!r}")
        if not ok:
            bad.append(claim)
    if bad:
        raise ReductionCheckError(
            f"{len(bad)} structure claims failed; first: {bad[:3]}")
    return vs


# ---------------------------------------------------------------------------
# the generator output


@dataclass(frozen=True)
class ReducedInstance:
    """A control or bribery question produced by a generator.

    p is the distinguished candidate of the primary reading.  dual,
    when present, is a second reading (tag, model, candidate) of the
    same election that the same covers answer.  canned is the fixed
    answer of a convention fallback instance and None for real
    reductions.  source is the instance the election was actually built
    from (some generators normalize first); given is the caller's
    original.  layout carries private bookkeeping for witness replay.
    """

    tag: ProblemTag
    election: Election
    alpha: Alpha
    p: int
    model: WinnerModel
    k: Optional[int] = None
    spoilers: frozenset = frozenset()
    pool: tuple = ()
    report: Optional[Report] = None
    source: object = None
    given: object = None
    dual: Optional[tuple[ProblemTag, WinnerModel, int]] = None
    canned: Optional[bool] = None
    layout: Mapping = field(default_factory=dict, repr=False, compare=False)


def control_instance(R: ReducedInstance, use_dual: bool = False) -> ControlInstance:
    """View a reduced control question as a ControlInstance."""
    tag, model, p = (R.dual if use_dual else (R.tag, R.model, R.p))
    if "BRIBERY" in tag.value:
        raise ValueError("bribery questions have no ControlInstance form")
    return ControlInstance(R.election, R.alpha, p, model,
                           R.k, R.spoilers, R.pool)


def _reading(R: ReducedInstance, use_dual: bool):
    if use_dual:
        if R.dual is None:
            raise ValueError("instance has no dual reading")
        return R.dual
    return R.tag, R.model, R.p


def _is_destructive(tag: ProblemTag) -> bool:
    return tag.value.startswith("DC") or tag.value.endswith("-DES")


def _goal_reached(tag: ProblemTag, model: WinnerModel, p: int,
                  winner_set: frozenset) -> bool:
    won = (winner_set == {p}) if model is WinnerModel.UNIQUE else (p in winner_set)
    return not won if _is_destructive(tag) else won


def _stage_from_vs(vs, alpha: Alpha, rule: TieRule, ids) -> frozenset:
    ids = list(ids)
    if not ids:
        return frozenset()
    top = winners_from_vs(vs, alpha, ids)
    if rule is TieRule.TE and len(top) != 1:
        return frozenset()
    return top


def _two_stage_from_vs(vs, alpha: Alpha, rule: TieRule, kind: PartitionKind,
                       part) -> frozenset:
    """two_stage_eval for PC and RPC, from a precomputed vs matrix.

    Valid because dropping candidates never changes pairwise totals;
    equality with two_stage_eval is pinned down by tests at desk scale.
    """
    c1, c2 = part
    finalists = set(_stage_from_vs(vs, alpha, rule, c1))
    if kind is PartitionKind.PC:
        finalists |= set(c2)
    else:
        finalists |= set(_stage_from_vs(vs, alpha, rule, c2))
    if not finalists:
        return frozenset()
    return winners_from_vs(vs, alpha, sorted(finalists))


_PART_SHAPE = {
    ProblemTag.CC_PC_TE: (PartitionKind.PC, TieRule.TE),
    ProblemTag.CC_PC_TP: (PartitionKind.PC, TieRule.TP),
    ProblemTag.CC_RPC_TE: (PartitionKind.RPC, TieRule.TE),
    ProblemTag.CC_RPC_TP: (PartitionKind.RPC, TieRule.TP),
    ProblemTag.DC_PC_TE: (PartitionKind.PC, TieRule.TE),
    ProblemTag.DC_PC_TP: (PartitionKind.PC, TieRule.TP),
    ProblemTag.DC_RPC_TE: (PartitionKind.RPC, TieRule.TE),
    ProblemTag.DC_RPC_TP: (PartitionKind.RPC, TieRule.TP),
    ProblemTag.CC_PV_TE: (PartitionKind.PV, TieRule.TE),
    ProblemTag.CC_PV_TP: (PartitionKind.PV, TieRule.TP),
    ProblemTag.DC_PV_TE: (PartitionKind.PV, TieRule.TE),
    ProblemTag.DC_PV_TP: (PartitionKind.PV, TieRule.TP),
}

# tags whose action is capped by an explicit budget k
_BUDGETED = {"CCAC", "DCAC", "CCDC", "DCDC", "CCAV", "DCAV", "CCDV", "DCDV",
             "CONDORCET-CCDV", "BRIBERY-CON", "BRIBERY-DES"}


def _canned(tag: ProblemTag, model: WinnerModel, yes: bool, alpha: Alpha,
            source, given, dual=None) -> ReducedInstance:
    """Two-candidate instance with no room to act; the answer is fixed.

    Used when a source instance is degenerate enough that the real
    construction's guarantees do not apply: the answer is still the
    right one, the election just does not encode the source anymore.
    The same election settles every reading because the order winner
    survives any legal action (the budget is zero and candidate
    partitions cannot unseat a candidate who beats the only rival).
    """
    want_win = (not yes) if _is_destructive(tag) else yes
    order = (0, 1) if want_win else (1, 0)
    E = election_from_orders(("p", "q"), [order, order])
    winner, loser = ("p", "q") if want_win else ("q", "p")
    rep = Report(alpha, (), (("vs", winner, loser, 2),))
    check_report(E, rep)
    return ReducedInstance(
        tag=tag, election=E, alpha=alpha, p=0, model=model,
        k=0 if tag.value in _BUDGETED else None,
        report=rep, source=source, given=given, dual=dual, canned=yes,
        layout={"family": "canned"})


def _check_x3c_cover(x: X3CInstance, cover) -> tuple[int, ...]:
    cover = tuple(cover)
    if len(set(cover)) != len(cover):
        raise ValueError("cover lists a set twice")
    seen: set[str] = set()
    for i in cover:
        if not (0 <= i < x.n):
            raise ValueError(f"no set with index {i}")
        if x.S[i] & seen:
            raise ValueError("cover sets overlap")
        seen |= x.S[i]
    if seen != set(x.B):
        raise ValueError("not an exact cover of the ground set")
    return cover


def _check_vc_cover(g: VCInstance, cover) -> tuple[int, ...]:
    cover = tuple(cover)
    if len(set(cover)) != len(cover):
        raise ValueError("cover lists a vertex twice")
    for u in cover:
        if not (1 <= u <= g.n):
            raise ValueError(f"no vertex {u}")
    if len(cover) > g.k:
        raise ValueError("cover exceeds the budget")
    chosen = set(cover)
    for u, v in g.edges:
        if u not in chosen and v not in chosen:
            raise ValueError(f"edge ({u}, {v}) is uncovered")
    return cover


def witness_from_cover(R: ReducedInstance, cover):
    """Translate a cover of R.source into the matching control action.

    Covers of exact-cover sources are given as indices into source.S;
    vertex covers as 1-based vertex numbers.  The cover is validated
    first.  The returned action suits both the primary and the dual
    reading of the instance.  Canned YES instances yield the
    do-nothing action of the right shape (the cover is ignored);
    canned NO instances have no witness, so this raises.
    """
    fam = R.layout["family"]
    if fam == "canned":
        if not R.canned:
            raise ValueError("a NO instance has no witness")
        v = R.tag.value
        if "PC" in v:
            return (tuple(range(R.election.m)), ())
        if "PV" in v:
            return ((0,), (1,))
        return ()
    if fam == "bribery":
        cov = _check_x3c_cover(R.source, cover)
        units = expand_units(R.election)
        out = []
        for i in sorted(cov):
            unit = R.layout["set_unit"][i]
            old = units[unit].order
            new = (R.p,) + tuple(c for c in old if c != R.p)
            out.append((unit, Preference.from_order(new)))
        return tuple(out)
    if fam in ("ac", "acu", "dc"):
        cov = _check_vc_cover(R.source, cover)
        ids = R.layout["vertex_ids"]
        return tuple(sorted(ids[u] for u in cov))
    if fam == "partition":
        cov = _check_vc_cover(R.source, cover)
        ids = R.layout["vertex_ids"]
        chosen = set(cov)
        if R.layout["pad_to_k"]:
            u = 1
            while len(chosen) < R.source.k:
                if u not in chosen:
                    chosen.add(u)
                u += 1
        d_ids = {ids[u] for u in chosen}
        h_ids = set(R.layout["h_ids"])
        f_ids = set(range(R.election.m)) - h_ids
        if "RPC" in R.tag.value:
            c1, c2 = f_ids - d_ids, h_ids | d_ids
        else:
            c1, c2 = h_ids | d_ids, f_ids - d_ids
        return (tuple(sorted(c1)), tuple(sorted(c2)))
    if fam == "av":
        cov = _check_x3c_cover(R.source, cover)
        return tuple(sorted(cov))
    if fam in ("dv", "condorcet-dv"):
        cov = _check_x3c_cover(R.source, cover)
        su = R.layout["set_unit"]
        return tuple(sorted(su[i] for i in cov))
    if fam in ("pv", "condorcet-pv"):
        cov = _check_x3c_cover(R.source, cover)
        su = R.layout["set_unit"]
        v2 = set(R.layout["s_units"]) | {su[i] for i in cov}
        v1 = tuple(i for i in range(R.layout["n_units"]) if i not in v2)
        return (v1, tuple(sorted(v2)))
    raise ValueError(f"unknown instance family {fam!r}")


def _replay_canned(R: ReducedInstance, tag: ProblemTag, model: WinnerModel,
                   p: int, witness) -> bool:
    E = R.election
    if tag in _PART_SHAPE:
        kind, rule = _PART_SHAPE[tag]
        return _goal_reached(tag, model, p,
                             two_stage_eval(E, R.alpha, rule, kind, witness))
    if tag is ProblemTag.CONDORCET_CCPV:
        return condorcet_pv_eval(E, witness) == p
    if tuple(witness):
        raise ValueError("canned instances admit no action")
    vs = fast_vs_matrix(E)
    if tag is ProblemTag.CONDORCET_CCDV:
        return all(vs[p][d] > 0 for d in range(E.m) if d != p)
    return _goal_reached(tag, model, p,
                         winners_from_vs(vs, R.alpha, range(E.m)))


def replay_witness(R: ReducedInstance, witness, use_dual: bool = False) -> bool:
    """Apply a control action and report whether it reaches its goal.

    Actions use the shapes witness_from_cover produces.  A malformed
    action (bad index, blown budget, sloppy partition) raises
    ValueError; the boolean only says whether the distinguished
    candidate of the chosen reading ends up where the question wants
    it.
    """
    tag, model, p = _reading(R, use_dual)
    E = R.election
    fam = R.layout["family"]

    def goal(winner_set: frozenset) -> bool:
        return _goal_reached(tag, model, p, winner_set)

    if fam == "canned":
        return _replay_canned(R, tag, model, p, witness)

    if fam == "bribery":
        pairs = tuple(witness)
        if len(pairs) > R.k:
            raise ValueError("too many bribes")
        units = list(expand_units(E))
        seen: set[int] = set()
        for idx, pref in pairs:
            if not (0 <= idx < len(units)) or idx in seen:
                raise ValueError(f"bad bribe target {idx}")
            if pref.m != E.m:
                raise ValueError("replacement ranges over the wrong slate")
            seen.add(idx)
            units[idx] = pref
        vs = vs_matrix_of_units(E.m, units, range(len(units)))
        return goal(winners_from_vs(vs, R.alpha, range(E.m)))

    if fam in ("ac", "acu"):
        added = tuple(witness)
        if len(set(added)) != len(added):
            raise ValueError("candidate added twice")
        for c in added:
            if c not in R.spoilers:
                raise ValueError(f"candidate {c} is not in the reserve pool")
        if fam == "ac" and len(added) > R.k:
            raise ValueError("too many additions")
        ids = sorted((set(range(E.m)) - R.spoilers) | set(added))
        return goal(winners_from_vs(R.layout["vs"], R.alpha, ids))

    if fam == "dc":
        dropped = tuple(witness)
        if len(set(dropped)) != len(dropped):
            raise ValueError("candidate deleted twice")
        if len(dropped) > R.k:
            raise ValueError("too many deletions")
        if p in dropped:
            raise ValueError("cannot delete the distinguished candidate")
        for c in dropped:
            if not (0 <= c < E.m):
                raise ValueError(f"unknown candidate {c}")
        ids = [c for c in range(E.m) if c not in set(dropped)]
        return goal(winners_from_vs(R.layout["vs"], R.alpha, ids))

    if fam == "partition":
        kind, rule = _PART_SHAPE[tag]
        c1, c2 = set(witness[0]), set(witness[1])
        if (c1 & c2) or (c1 | c2) != set(range(E.m)):
            raise ValueError("not a partition of the candidates")
        return goal(_two_stage_from_vs(R.layout["vs"], R.alpha, rule, kind,
                                       (c1, c2)))

    if fam == "av":
        return goal(_av_winners(R, witness))

    if fam in ("dv", "condorcet-dv"):
        dropped = tuple(witness)
        if len(set(dropped)) != len(dropped):
            raise ValueError("voter deleted twice")
        if len(dropped) > R.k:
            raise ValueError("too many deletions")
        units = expand_units(E)
        for i in dropped:
            if not (0 <= i < len(units)):
                raise ValueError(f"no voter unit {i}")
        kept = [i for i in range(len(units)) if i not in set(dropped)]
        vs = vs_matrix_of_units(E.m, units, kept)
        if tag is ProblemTag.CONDORCET_CCDV:
            return all(vs[p][d] > 0 for d in range(E.m) if d != p)
        return goal(winners_from_vs(vs, R.alpha, range(E.m)))

    if fam in ("pv", "condorcet-pv"):
        part = (tuple(witness[0]), tuple(witness[1]))
        if tag is ProblemTag.CONDORCET_CCPV:
            return condorcet_pv_eval(E, part) == p
        kind, rule = _PART_SHAPE[tag]
        return goal(two_stage_eval(E, R.alpha, rule, kind, part))

    raise ValueError(f"unknown instance family {fam!r}")


def _av_winners(R: ReducedInstance, witness) -> frozenset:
    """Winner set after registering the chosen reserve voters.

    Works from the cached base scores: reserve orders only disturb the
    sign of the deliberately thin pairs (the base report pins every
    other pair at least budget + 1 apart, and each reserve voter moves
    a pair by one), so rescoring those pairs is a full account.
    """
    added = tuple(witness)
    if len(set(added)) != len(added):
        raise ValueError("reserve voter registered twice")
    if len(added) > R.k:
        raise ValueError("too many registrations")
    for j in added:
        if not (0 <= j < len(R.pool)):
            raise ValueError(f"no reserve voter {j}")
    lay = R.layout
    den, num = R.alpha.den, R.alpha.num

    def cat(v: int) -> int:
        return den if v > 0 else (num if v == 0 else 0)

    scores = dict(lay["scores"])
    k = R.source.k
    w = len(added)
    sp = k - 1                       # base vs(s, p)
    scores[lay["s_id"]] += cat(sp - w) - cat(sp)
    scores[lay["p_id"]] += cat(w - sp) - cat(-sp)
    rb = k - 3                       # base vs(r, b) for every b
    for b in lay["b_ids"]:
        d = sum(1 if b in lay["pool_sets"][j] else -1 for j in added)
        scores[lay["r_id"]] += cat(rb + d) - cat(rb)
        scores[b] += cat(-rb - d) - cat(-rb)
    best = max(scores.values())
    return frozenset(c for c, s in scores.items() if s == best)


# ---------------------------------------------------------------------------
# bribery from exact cover


def x3c_to_bribery_uv(x: X3CInstance, variant: str, alpha: Alpha = ALPHA_HALF,
                      paper_convention: bool = False) -> ReducedInstance:
    """Bribery question that is solvable iff x has an exact cover.

    Each set S_i gets a dedicated voter; prepending p to that voter's
    order is worth one budget unit, and only bribing the voters of an
    exact cover lifts p over the field.  variant "unique" asks for p
    as the one winner and carries the dual reading of unseating the
    incumbent u under the nonunique model.  variant "nonunique" asks
    for p to join the winner set, with the dual reading of stripping s
    of its unique victory.  The margins hold at every alpha.

    Every ground element must appear in at least one set; an element
    nobody covers forces the answer NO all by itself and breaks the
    stated margins.  Such instances raise, or with
    paper_convention=True return the canned NO.
    """
    if variant not in ("unique", "nonunique"):
        raise ValueError(f"unknown variant {variant!r}")
    k, n = x.k, x.n
    reserved = (("p", "u", "v") if variant == "unique"
                else ("p", "s", "t", "u", "v"))
    clash = set(reserved) & set(x.B)
    if clash:
        raise ValueError(f"ground names collide with: {sorted(clash)}")
    p_model = WinnerModel.UNIQUE if variant == "unique" else WinnerModel.NONUNIQUE
    d_model = WinnerModel.NONUNIQUE if variant == "unique" else WinnerModel.UNIQUE
    uncovered = [b for b in x.B if not any(b in s for s in x.S)]
    if uncovered:
        if not paper_convention:
            raise ValueError(
                f"element {uncovered[0]!r} appears in no set, which settles "
                f"the answer (NO); pass paper_convention=True for a canned "
                f"instance")
        return _canned(ProblemTag.BRIBERY_CON, p_model, False, alpha, x, x,
                       dual=(ProblemTag.BRIBERY_DES, d_model, 1))

    names = reserved + x.B
    base = len(reserved)
    bid = {b: base + j for j, b in enumerate(x.B)}
    b_asc = list(range(base, base + 3 * k))
    b_desc = b_asc[::-1]
    den = alpha.den
    orders: list = []
    claims: list[tuple] = []

    if variant == "unique":
        P, U, V = 0, 1, 2
        for s in x.S:
            si = sorted(bid[b] for b in s)
            rest = [c for c in b_asc if c not in set(si)]
            orders.append([U, V] + si + [P] + rest)
        for s in x.S:
            si = sorted(bid[b] for b in s)
            rest = [c for c in b_asc if c not in set(si)]
            orders.append(rest[::-1] + [P, U, V] + si[::-1])
        orders += [
            ([U, V, P] + b_asc, k),
            ([V, U, P] + b_asc, k),
            ([U] + b_desc + [P, V], k),
            ([V] + b_desc + [P, U], k),
            b_asc + [P, U, V],
        ]
        claims += [
            ("vs", "u", "v", 2 * n + 1),
            ("vs", "u", "p", 2 * k - 1),
            ("vs", "v", "p", 2 * k - 1),
            ("score", "", "u", den * (3 * k + 2)),
            ("score", "", "v", den * (3 * k + 1)),
            ("score", "", "p", 0),
        ]
        for b in x.B:
            claims += [("vs", b, "p", 1),
                       ("vs_ge", "u", b, 2 * k + 1),
                       ("vs_ge", "v", b, 2 * k + 1),
                       ("score_le", "", b, den * 3 * k)]
        dual_p = U
    else:
        P, S, T, U, V = 0, 1, 2, 3, 4
        for s in x.S:
            si = sorted(bid[b] for b in s)
            rest = [c for c in b_asc if c not in set(si)]
            orders.append([S, T, U, V] + si + [P] + rest)
        for s in x.S:
            si = sorted(bid[b] for b in s)
            rest = [c for c in b_asc if c not in set(si)]
            orders.append(rest[::-1] + [P, V, U, T, S] + si[::-1])
        orders += [
            ([S, T, U, V, P] + b_asc, k),
            ([S, T, V, U, P] + b_asc, k),
            ([U] + b_desc + [P, S, V, T], k),
            ([V] + b_desc + [P, S, U, T], k),
            ([U, V, T, P, S] + b_asc, 2 * k),
            ([U, V, S, T, P] + b_asc, 2 * k),
            ([S, T, U, V, P] + b_asc, 3 * k),
            ([S, V, T, U, P] + b_asc, 3 * k),
            ([T] + b_desc + [P, U, S, V], 3 * k),
            (b_desc + [P, S, U, V, T], k),
            ([S] + b_desc + [P, U, V, T], 3 * k),
            (b_desc + [P, S, V, T, U], 3 * k),
            b_asc + [P, U, V, S, T],
        ]
        for a, b in (("s", "t"), ("s", "u"), ("s", "v"), ("t", "p"),
                     ("t", "u"), ("v", "t"), ("u", "v")):
            claims.append(("vs_ge", a, b, 2 * k + 1))
        claims += [
            ("vs", "s", "p", 2 * k - 1),
            ("vs", "u", "p", 2 * k - 1),
            ("vs", "v", "p", 2 * k - 1),
            ("score", "", "s", den * (3 * k + 4)),
            ("score", "", "t", den * (3 * k + 2)),
            ("score", "", "u", den * (3 * k + 2)),
            ("score", "", "v", den * (3 * k + 2)),
            ("score", "", "p", 0),
        ]
        for b in x.B:
            claims += [("vs", b, "p", 1),
                       ("score_le", "", b, den * 3 * k)]
            for a in ("s", "t", "u", "v"):
                claims.append(("vs_ge", a, b, 2 * k + 1))
        dual_p = S

    for i, b in enumerate(x.B):
        for b2 in x.B[i + 1:]:
            claims.append(("vs_abs", b, b2, 1))

    E = election_from_orders(names, orders)
    report = Report(alpha, (), tuple(claims))
    check_report(E, report)
    return ReducedInstance(
        tag=ProblemTag.BRIBERY_CON, election=E, alpha=alpha, p=P,
        model=p_model, k=k, report=report, source=x, given=x,
        dual=(ProblemTag.BRIBERY_DES, d_model, dual_p),
        layout={"family": "bribery", "set_unit": tuple(range(n))})
