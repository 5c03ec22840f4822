"""Copeland^alpha election model with exact rational tie rewards.

The tie reward alpha = b/d is kept in lowest terms and all scores are
d-scaled integers: a candidate's scaled score is d * (head-to-head wins)
+ b * (head-to-head ties).  Comparing scaled scores is exact, so winner
sets never depend on floating point.

Voters are rational (a linear order) or irrational (a full pairwise
preference table, possibly intransitive).  Every voter block carries a
multiplicity, so large profiles can be written succinctly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence

INFINITY = 10 ** 18  # exceeds every cost or score this library can produce

Pair = tuple[int, int]  # canonical unordered pair: (i, j) with i < j


class UnsupportedCase(Exception):
    """Raised when parameters fall in a range an algorithm does not cover
    (typically an alpha value whose decision problem is intractable)."""


def pair_of(a: int, b: int) -> Pair:
    if a == b:
        raise ValueError("a pair needs two distinct candidates")
    return (a, b) if a < b else (b, a)


class Outcome(Enum):
    """Head-to-head result for a canonical pair (i, j) with i < j."""

    I_WINS = "i"   # the lower-indexed candidate wins
    L_WINS = "l"   # the higher-indexed candidate wins
    TIE = "tie"


class WinnerModel(Enum):
    NONUNIQUE = "nonunique"
    UNIQUE = "unique"


class TieRule(Enum):
    TE = "TE"  # ties eliminate: a group promotes its winner only if unique
    TP = "TP"  # ties promote: every group winner advances


class PartitionKind(Enum):
    PC = "PC"    # partition of candidates, first group faces a runoff
    RPC = "RPC"  # partition of candidates with runoff on both groups
    PV = "PV"    # partition of voters


@dataclass(frozen=True)
class Alpha:
    """Tie reward b/d, reduced, with 0 <= b/d <= 1."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0 or self.num < 0 or self.num > self.den:
            raise ValueError(f"alpha must be in [0, 1]: {self.num}/{self.den}")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"alpha not in lowest terms: {self.num}/{self.den}")
        if self.num == 0 and self.den != 1:
            raise ValueError("alpha = 0 must be written 0/1")

    @classmethod
    def of(cls, num: int, den: int) -> "Alpha":
        if den == 0:
            raise ValueError("alpha denominator is zero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g:
            num, den = num // g, den // g
        return cls(num, den)

    @classmethod
    def parse(cls, text: str) -> "Alpha":
        text = text.strip()
        if "/" in text:
            a, _, b = text.partition("/")
            return cls.of(int(a), int(b))
        return cls.of(int(text), 1)

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


ALPHA_ZERO = Alpha(0, 1)
ALPHA_HALF = Alpha(1, 2)
ALPHA_ONE = Alpha(1, 1)


@dataclass(frozen=True)
class Candidate:
    id: int
    name: str


@dataclass(frozen=True)
class ScaledScore:
    """Copeland^alpha score in units of 1/den: value = den*wins + num*ties."""

    value: int


class Preference:
    """A single voter's preferences: a linear order or a full pair table.

    Rational voters are constructed with :meth:`from_order`; irrational
    voters with :meth:`from_table`.  Either way :meth:`prefers` answers the
    pairwise question and :meth:`table` gives the canonical table form.
    """

    __slots__ = ("m", "order", "_rank", "_table")

    def __init__(self, m: int, order: Optional[tuple[int, ...]],
                 table: Optional[dict[Pair, int]]):
        self.m = m
        self.order = order
        self._rank = None if order is None else {c: r for r, c in enumerate(order)}
        self._table = table

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Preference":
        order = tuple(order)
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"not a permutation of 0..{len(order) - 1}: {order}")
        return cls(len(order), order, None)

    @classmethod
    def from_table(cls, m: int, table: Mapping[Pair, int]) -> "Preference":
        fixed: dict[Pair, int] = {}
        for (a, b), w in table.items():
            key = pair_of(a, b)
            if w not in key:
                raise ValueError(f"preferred candidate {w} not in pair {key}")
            if key in fixed and fixed[key] != w:
                raise ValueError(f"pair {key} given twice with different winners")
            fixed[key] = w
        expected = {(i, j) for i in range(m) for j in range(i + 1, m)}
        if set(fixed) != expected:
            missing = sorted(expected - set(fixed))
            extra = sorted(set(fixed) - expected)
            raise ValueError(f"table must cover all pairs exactly; "
                             f"missing={missing} extra={extra}")
        return cls(m, None, fixed)

    @property
    def is_order(self) -> bool:
        return self.order is not None

    def prefers(self, a: int, b: int) -> bool:
        """True when this voter ranks a above b."""
        if a == b:
            raise ValueError("self-comparison")
        if self._rank is not None:
            return self._rank[a] < self._rank[b]
        return self._table[pair_of(a, b)] == a

    def table(self) -> dict[Pair, int]:
        if self._table is not None:
            return dict(self._table)
        out: dict[Pair, int] = {}
        for i in range(self.m):
            for j in range(i + 1, self.m):
                out[(i, j)] = i if self._rank[i] < self._rank[j] else j
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Preference):
            return NotImplemented
        if self.m != other.m:
            return False
        if self.is_order and other.is_order:
            return self.order == other.order
        return self.table() == other.table()

    def __repr__(self) -> str:
        if self.is_order:
            return f"Preference(order={self.order})"
        return f"Preference(table over {self.m})"


@dataclass(frozen=True)
class VoterBlock:
    pref: Preference
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be at least 1")


@dataclass(frozen=True)
class Election:
    candidates: tuple[Candidate, ...]
    voters: tuple[VoterBlock, ...]

    def __post_init__(self) -> None:
        ids = [c.id for c in self.candidates]
        if ids != list(range(len(ids))):
            raise ValueError("candidate ids must be 0..m-1 in order")
        names = [c.name for c in self.candidates]
        if len(set(names)) != len(names):
            raise ValueError("candidate names must be unique")
        for block in self.voters:
            if block.pref.m != len(ids):
                raise ValueError("voter preference does not range over the "
                                 "candidate set")

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.candidates)

    @property
    def total_voters(self) -> int:
        return sum(b.multiplicity for b in self.voters)

    def id_of(self, name: str) -> int:
        for c in self.candidates:
            if c.name == name:
                return c.id
        raise KeyError(name)


def make_candidates(names: Sequence[str]) -> tuple[Candidate, ...]:
    return tuple(Candidate(i, n) for i, n in enumerate(names))


def election_from_orders(names: Sequence[str],
                         orders: Iterable[Sequence[int] | tuple[Sequence[int], int]],
                         ) -> Election:
    """Build an election from linear orders given as id sequences.

    Each entry is either an order or an (order, multiplicity) pair.
    """
    blocks = []
    for entry in orders:
        if (isinstance(entry, tuple) and len(entry) == 2
                and isinstance(entry[1], int) and not isinstance(entry[0], int)):
            order, mult = entry
        else:
            order, mult = entry, 1
        blocks.append(VoterBlock(Preference.from_order(order), mult))
    return Election(make_candidates(names), tuple(blocks))


def expand_units(E: Election) -> list[Preference]:
    """Unit voters in block order; a block of multiplicity k yields k entries."""
    units: list[Preference] = []
    for block in E.voters:
        units.extend([block.pref] * block.multiplicity)
    return units


# ---------------------------------------------------------------------------
# pairwise evaluation


def vs_matrix(E: Election) -> list[list[int]]:
    """Antisymmetric matrix of relative vote-scores over candidate ids."""
    m = E.m
    vs = [[0] * m for _ in range(m)]
    for block in E.voters:
        w = block.multiplicity
        pref = block.pref
        for i in range(m):
            for j in range(i + 1, m):
                if pref.prefers(i, j):
                    vs[i][j] += w
                    vs[j][i] -= w
                else:
                    vs[i][j] -= w
                    vs[j][i] += w
    return vs


def vs_matrix_of_units(m: int, units: Sequence[Preference],
                       which: Iterable[int]) -> list[list[int]]:
    """vs matrix of the sub-profile holding the given unit-voter indices."""
    vs = [[0] * m for _ in range(m)]
    for idx in which:
        pref = units[idx]
        for i in range(m):
            for j in range(i + 1, m):
                if pref.prefers(i, j):
                    vs[i][j] += 1
                    vs[j][i] -= 1
                else:
                    vs[i][j] -= 1
                    vs[j][i] += 1
    return vs


def relative_vote_score(E: Election, i: int, l: int) -> int:
    """Voters preferring i over l minus voters preferring l over i."""
    m = E.m
    if not (0 <= i < m and 0 <= l < m):
        raise ValueError(f"unknown candidate id in ({i}, {l})")
    if i == l:
        return 0
    total = 0
    for block in E.voters:
        if block.pref.prefers(i, l):
            total += block.multiplicity
        else:
            total -= block.multiplicity
    return total


def scaled_scores_from_vs(vs: Sequence[Sequence[int]], alpha: Alpha,
                          ids: Optional[Iterable[int]] = None) -> dict[int, int]:
    """Scaled Copeland^alpha scores within the candidate subset `ids`."""
    members = list(range(len(vs))) if ids is None else sorted(ids)
    out: dict[int, int] = {}
    for c in members:
        wins = ties = 0
        for d in members:
            if d == c:
                continue
            v = vs[c][d]
            if v > 0:
                wins += 1
            elif v == 0:
                ties += 1
        out[c] = alpha.den * wins + alpha.num * ties
    return out


def copeland_score(E: Election, alpha: Alpha, c: int) -> ScaledScore:
    """Scaled score of candidate c: den*wins + num*ties."""
    if not (0 <= c < E.m):
        raise ValueError(f"unknown candidate id {c}")
    vs = vs_matrix(E)
    return ScaledScore(scaled_scores_from_vs(vs, alpha)[c])


def scaled_scores(E: Election, alpha: Alpha) -> list[int]:
    vs = vs_matrix(E)
    by_id = scaled_scores_from_vs(vs, alpha)
    return [by_id[c] for c in range(E.m)]


def winners_from_vs(vs: Sequence[Sequence[int]], alpha: Alpha,
                    ids: Iterable[int]) -> frozenset[int]:
    """Nonunique winner set within a candidate subset."""
    scores = scaled_scores_from_vs(vs, alpha, ids)
    if not scores:
        return frozenset()
    best = max(scores.values())
    return frozenset(c for c, s in scores.items() if s == best)


def winners(E: Election, alpha: Alpha,
            model: WinnerModel = WinnerModel.NONUNIQUE) -> frozenset[int]:
    """Winner ids.  UNIQUE model: the argmax set if singleton, else empty."""
    if E.m == 0:
        raise ValueError("election has no candidates")
    top = winners_from_vs(vs_matrix(E), alpha, range(E.m))
    if model is WinnerModel.UNIQUE and len(top) != 1:
        return frozenset()
    return top


def is_winner(E: Election, alpha: Alpha, p: int,
              model: WinnerModel = WinnerModel.NONUNIQUE) -> bool:
    return p in winners(E, alpha, model)


def condorcet_winner(E: Election) -> Optional[int]:
    """The candidate defeating every other head-to-head, if one exists."""
    if E.m == 0:
        raise ValueError("election has no candidates")
    vs = vs_matrix(E)
    for c in range(E.m):
        if all(vs[c][d] > 0 for d in range(E.m) if d != c):
            return c
    return None


def outcome_table(E: Election) -> "COT":
    vs = vs_matrix(E)
    out: dict[Pair, Outcome] = {}
    for i in range(E.m):
        for j in range(i + 1, E.m):
            v = vs[i][j]
            out[(i, j)] = (Outcome.I_WINS if v > 0
                           else Outcome.L_WINS if v < 0 else Outcome.TIE)
    return COT(E.names, out)


@dataclass(frozen=True, eq=False)
class COT:
    """Copeland outcome table: win/lose/tie for every unordered pair.

    Keys are canonical pairs (i, j) with i < j; I_WINS means the
    lower-indexed candidate wins.  Doubles as the election graph.
    """

    names: tuple[str, ...]
    outcome: dict[Pair, Outcome]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        m = len(self.names)
        expected = {(i, j) for i in range(m) for j in range(i + 1, m)}
        if set(self.outcome) != expected:
            raise ValueError("outcome table must cover exactly all pairs")

    @property
    def m(self) -> int:
        return len(self.names)

    def sign(self, a: int, b: int) -> int:
        """+1 if a beats b, -1 if b beats a, 0 on a tie."""
        if a == b:
            return 0
        o = self.outcome[pair_of(a, b)]
        if o is Outcome.TIE:
            return 0
        winner_is_lower = o is Outcome.I_WINS
        return (1 if winner_is_lower == (a < b) else -1)

    def beats(self, a: int, b: int) -> bool:
        return self.sign(a, b) > 0

    def decisive_pairs(self) -> list[tuple[int, int]]:
        """Ordered (winner, loser) for every decisive pair."""
        out = []
        for (i, j), o in sorted(self.outcome.items()):
            if o is Outcome.I_WINS:
                out.append((i, j))
            elif o is Outcome.L_WINS:
                out.append((j, i))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, COT):
            return NotImplemented
        return self.names == other.names and self.outcome == other.outcome


# ---------------------------------------------------------------------------
# two-stage (partition) elections


def _stage_survivors(vs: Sequence[Sequence[int]], alpha: Alpha,
                     ids: Iterable[int], rule: TieRule) -> frozenset[int]:
    ids = list(ids)
    if not ids:
        return frozenset()
    top = winners_from_vs(vs, alpha, ids)
    if rule is TieRule.TE and len(top) != 1:
        return frozenset()
    return top


def _check_partition(parts: tuple[Iterable[int], Iterable[int]],
                     universe: set[int], what: str) -> tuple[set[int], set[int]]:
    a, b = set(parts[0]), set(parts[1])
    if a & b or (a | b) != universe:
        raise ValueError(f"not a partition of the {what}")
    return a, b


def two_stage_eval(E: Election, alpha: Alpha, rule: TieRule,
                   kind: PartitionKind,
                   part: tuple[Iterable[int], Iterable[int]]) -> frozenset[int]:
    """Final-round winner ids of a two-stage election.

    PC:  survivors(C1, V) plus all of C2 meet in the final.
    RPC: survivors(C1, V) meet survivors(C2, V).
    PV:  survivors(C, V1) meet survivors(C, V2); the final uses all voters.
    Survivors are the group's winners under TP; under TE a group promotes
    its winner only when it is unique, otherwise nobody.  An empty final
    set yields an empty winner set.

    For PV the partition addresses expanded unit-voter indices (blocks in
    order, units within a block consecutive).
    """
    if kind in (PartitionKind.PC, PartitionKind.RPC):
        c1, c2 = _check_partition(part, set(range(E.m)), "candidate set")
        vs = vs_matrix(E)
        finalists = set(_stage_survivors(vs, alpha, c1, rule))
        if kind is PartitionKind.PC:
            finalists |= c2
        else:
            finalists |= _stage_survivors(vs, alpha, c2, rule)
        if not finalists:
            return frozenset()
        return winners_from_vs(vs, alpha, finalists)

    units = expand_units(E)
    v1, v2 = _check_partition(part, set(range(len(units))), "voter list")
    vs1 = vs_matrix_of_units(E.m, units, sorted(v1))
    vs2 = vs_matrix_of_units(E.m, units, sorted(v2))
    all_ids = range(E.m)
    finalists = set(_stage_survivors(vs1, alpha, all_ids, rule))
    finalists |= _stage_survivors(vs2, alpha, all_ids, rule)
    if not finalists:
        return frozenset()
    vs = vs_matrix(E)
    return winners_from_vs(vs, alpha, finalists)


class _Inadmissible:
    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover
        return "INADMISSIBLE"


INADMISSIBLE = _Inadmissible()


def condorcet_pv_eval(E: Election,
                      part: tuple[Iterable[int], Iterable[int]]):
    """Voter-partition evaluation where each stage must elect a Condorcet winner.

    Returns the final Condorcet winner id, or None when the two stage
    winners tie in the final, or INADMISSIBLE when either subelection
    lacks a Condorcet winner.  The partition addresses expanded unit
    voters, as in two_stage_eval.
    """
    units = expand_units(E)
    v1, v2 = _check_partition(part, set(range(len(units))), "voter list")

    def sub_condorcet(which: set[int]) -> Optional[int]:
        vs = vs_matrix_of_units(E.m, units, sorted(which))
        for c in range(E.m):
            if all(vs[c][d] > 0 for d in range(E.m) if d != c):
                return c
        return None

    w1 = sub_condorcet(v1)
    w2 = sub_condorcet(v2)
    if w1 is None or w2 is None:
        return INADMISSIBLE
    if w1 == w2:
        return w1
    v = relative_vote_score(E, w1, w2)
    if v > 0:
        return w1
    if v < 0:
        return w2
    return None
