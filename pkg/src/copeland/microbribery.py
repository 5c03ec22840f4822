"""Microbribery: flipping single pairwise entries of single voters.

A microbribe flips one (voter, pair) entry at unit cost.  Destructive
microbribery is solved in polynomial time for every alpha by a six-way
enumeration over promotion/demotion budgets.  Constructive microbribery
is solved through min-cost flow: network I(T) covers elections with an
odd number of voters (any alpha), J(T) covers even elections at alpha=0,
and L(T) covers even elections at alpha=1.  The even 0 < alpha < 1 case
is not supported here.

Voter blocks are addressed per unit: a block with multiplicity w
occupies w consecutive unit indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .election import (Alpha, Election, INFINITY, Pair, Preference,
                       UnsupportedCase, VoterBlock, WinnerModel, expand_units,
                       pair_of, vs_matrix, winners)
from .flow import Flow, FlowNetwork, flow_cost, solve_min_cost

BriberyBudget = int  # a count of entry flips


@dataclass(frozen=True)
class Microbribe:
    voter: int           # unit voter index
    pair: Pair           # canonical (i, j), i < j
    preferred: int       # the entry's new value; must be one of the pair

    def __post_init__(self) -> None:
        if self.pair != pair_of(*self.pair):
            raise ValueError("pair must be in canonical order")
        if self.preferred not in self.pair:
            raise ValueError("preferred candidate must belong to the pair")


@dataclass(frozen=True)
class BigB:
    """A price exceeding every possible flip total: ||V|| * ||C||^2 + 1."""

    value: int

    @classmethod
    def for_election(cls, E: Election) -> "BigB":
        return cls(E.total_voters * E.m ** 2 + 1)


def apply_microbribes(E: Election, bribes: Sequence[Microbribe]) -> Election:
    """Expanded election with the given entries flipped."""
    units = [u.table() for u in expand_units(E)]
    seen = set()
    for b in bribes:
        if (b.voter, b.pair) in seen:
            raise ValueError(f"entry {(b.voter, b.pair)} flipped twice")
        seen.add((b.voter, b.pair))
        if units[b.voter][b.pair] == b.preferred:
            raise ValueError(f"microbribe {b} does not change the entry")
        units[b.voter][b.pair] = b.preferred
    blocks = tuple(VoterBlock(Preference.from_table(E.m, t), 1) for t in units)
    return Election(E.candidates, blocks)


# ---------------------------------------------------------------------------
# per-contest prices


def _wincost_vs(v: int) -> int:
    # flips needed so the vs value v becomes positive; each flip adds 2
    return 0 if v > 0 else (1 - v + 1) // 2


def _tiecost_vs(v: int, odd: bool) -> int:
    if odd:
        return INFINITY
    return abs(v) // 2


def wincost(E: Election, i: int, j: int) -> int:
    """Fewest flips making i defeat j."""
    if i == j:
        raise ValueError("a candidate cannot face itself")
    return _wincost_vs(vs_matrix(E)[i][j])


def tiecost(E: Election, i: int, j: int) -> int:
    """Fewest flips tying the (i, j) contest; INFINITY for odd electorates."""
    if i == j:
        raise ValueError("a candidate cannot face itself")
    return _tiecost_vs(vs_matrix(E)[i][j], E.total_voters % 2 == 1)


def _realize_win(units, vs, winner: int, loser: int) -> list[Microbribe]:
    # flip the lowest-indexed units preferring the loser until winner leads
    need = _wincost_vs(vs[winner][loser])
    return _flip_some(units, winner, loser, need)


def _realize_tie(units, vs, a: int, b: int) -> list[Microbribe]:
    v = vs[a][b]
    if v % 2 != 0:
        raise ValueError("odd margins cannot be tied")
    lead, trail = (a, b) if v > 0 else (b, a)
    return _flip_some(units, trail, lead, abs(v) // 2)


def _flip_some(units, gainer: int, loser: int, count: int) -> list[Microbribe]:
    out = []
    for idx, u in enumerate(units):
        if count == 0:
            break
        if u.prefers(loser, gainer):
            out.append(Microbribe(idx, pair_of(gainer, loser), gainer))
            count -= 1
    if count:
        raise AssertionError("not enough voters to flip")
    return out


# ---------------------------------------------------------------------------
# destructive microbribery
#
# To push p below some rival r, first force the (p, r) contest into one of
# its three states (win / loss / tie), then buy r extra points (promote)
# and strip p of points (demote) in contests not involving the other one.
# For each state the exact gain needed is unknown in advance, so all
# (w', w'', t') x (l', l'', t'') budget splits up to m are tried; greedy
# cheapest-first selections inside each pool are optimal because within a
# pool every win costs exactly one flip more than the matching tie.


def _pool_costs(vs, odd, member_ids, against, member_gains=False):
    """Sorted (tie, win) flip prices of each member's contest with `against`.

    Win prices are for `against` coming out ahead; with member_gains they
    are for the member instead (used when demoting `against`)."""
    prices = []
    for c in member_ids:
        v = vs[c][against] if member_gains else vs[against][c]
        prices.append((_tiecost_vs(v, odd), _wincost_vs(v)))
    prices.sort()
    return prices


def _sorted_pool(vs, odd, member_ids, against, member_gains=False):
    # same ordering _pool_costs induces, with ids attached
    def key(c):
        v = vs[c][against] if member_gains else vs[against][c]
        return (_tiecost_vs(v, odd), _wincost_vs(v), c)

    return sorted(member_ids, key=key)


def promote_cost(E: Election, alpha: Alpha, c: int, w1: int, w2: int, t: int,
                 exclude: Optional[int] = None) -> int:
    """Cheapest flip total raising c by w1 wins over current defeaters,
    w2 wins over currently tied rivals, and t new ties with defeaters.
    Contests with `exclude` (and with c itself) are off limits."""
    return _adjust_cost(E, c, w1, w2, t, exclude, promote=True)


def demote_cost(E: Election, alpha: Alpha, c: int, l1: int, l2: int, t: int,
                exclude: Optional[int] = None) -> int:
    """Cheapest flip total lowering c by l1 new losses in contests c now
    wins, l2 losses in tied contests, and t ties in won contests."""
    return _adjust_cost(E, c, l1, l2, t, exclude, promote=False)


def _adjust_cost(E, c, a1, a2, t, exclude, promote):
    if min(a1, a2, t) < 0:
        raise ValueError("budgets must be nonnegative")
    vs = vs_matrix(E)
    odd = E.total_voters % 2 == 1
    others = [d for d in range(E.m) if d != c and d != exclude]
    if promote:
        main = [d for d in others if vs[d][c] > 0]   # current defeaters of c
    else:
        main = [d for d in others if vs[c][d] > 0]   # candidates c defeats
    tied = [d for d in others if vs[c][d] == 0]
    prices = _pool_costs(vs, odd, main, c, member_gains=not promote)
    return _greedy_total(prices, len(tied), a1, a2, t, odd)


def _greedy_total(main_prices, tied_count, a1, a2, t, odd):
    # a1 full flips + t ties inside the main pool, a2 one-flip wins in the
    # tied pool; ties are impossible when the electorate is odd
    if a2 > tied_count:
        return INFINITY
    if a1 + t > len(main_prices):
        return INFINITY
    if odd:
        if t > 0:
            return INFINITY
        wins = sorted(w for _, w in main_prices)
        return sum(wins[:a1]) + a2
    # even: win = tie + 1 on every main-pool contest, so the cheapest
    # a1 + t contests by tie price are optimal regardless of the split
    total = sum(tc for tc, _ in main_prices[:a1 + t])
    return total + a1 + a2


def _force_contest(vs, odd, p, r, state):
    """Flip count putting the (p, r) contest into the wanted state."""
    if state == "p_wins":
        return _wincost_vs(vs[p][r])
    if state == "r_wins":
        return _wincost_vs(vs[r][p])
    return _tiecost_vs(vs[p][r], odd)


def destructive_microbribery(E: Election, alpha: Alpha, p: int, k: int,
                             model: WinnerModel = WinnerModel.NONUNIQUE,
                             ) -> Optional[tuple[Microbribe, ...]]:
    """Flip set of size <= k after which p is not a winner, or None."""
    cost, flips = _destructive_best(E, alpha, p, model)
    if cost <= k:
        return flips
    return None


def destructive_min_cost(E: Election, alpha: Alpha, p: int,
                         model: WinnerModel = WinnerModel.NONUNIQUE,
                         ) -> Optional[int]:
    """Fewest flips dethroning p; None when impossible (single candidate)."""
    cost, _ = _destructive_best(E, alpha, p, model)
    return None if cost >= INFINITY else cost


def _beaten(E, alpha, p, model):
    w = winners(E, alpha)
    if model is WinnerModel.UNIQUE:
        return w != {p}
    return p not in w


def _destructive_best(E, alpha, p, model):
    if _beaten(E, alpha, p, model):
        return 0, ()
    m = E.m
    if m == 1:
        return INFINITY, None
    vs = vs_matrix(E)
    odd = E.total_voters % 2 == 1
    b, d = alpha.num, alpha.den
    units = expand_units(E)

    base = scaled_scores_list(vs, alpha)
    # strict surplus needed in the nonunique model, weak in the unique one
    strict = model is WinnerModel.NONUNIQUE

    best_cost = INFINITY
    best_plan = None
    for r in range(m):
        if r == p:
            continue
        # pools never involve the (p, r) contest, so they are shared by
        # all three branch elections
        r_main = [c for c in range(m) if c not in (p, r) and vs[c][r] > 0]
        r_tied = [c for c in range(m) if c not in (p, r) and vs[r][c] == 0]
        p_main = [c for c in range(m) if c not in (p, r) and vs[p][c] > 0]
        p_tied = [c for c in range(m) if c not in (p, r) and vs[p][c] == 0]
        r_prices = _pool_costs(vs, odd, r_main, r)
        p_prices = _pool_costs(vs, odd, p_main, p, member_gains=True)

        for state, dr, dp in (
            ("r_wins", d, 0),    # r gains the contest point, p holds none
            ("p_wins", 0, d),    # p keeps a win there
            ("tie", b, b),       # both sides hold the tie reward
        ):
            if state == "tie" and odd:
                continue
            k_state = _force_contest(vs, odd, p, r, state)
            if k_state >= INFINITY:
                continue
            # scaled scores of r and p in the branch election, with the
            # (p, r) contest contributing dr / dp respectively
            r_score = base[r] - _contest_part(vs[r][p], b, d) + dr
            p_score = base[p] - _contest_part(vs[p][r], b, d) + dp

            for w1 in range(len(r_main) + 1):
                for t1 in range(0, (0 if odd else len(r_main) - w1) + 1):
                    for w2 in range(len(r_tied) + 1):
                        gain_r = d * w1 + (d - b) * w2 + b * t1
                        pc = _greedy_total(r_prices, len(r_tied),
                                           w1, w2, t1, odd)
                        if pc >= INFINITY:
                            continue
                        for l1 in range(len(p_main) + 1):
                            for t2 in range(0, (0 if odd else
                                                len(p_main) - l1) + 1):
                                for l2 in range(len(p_tied) + 1):
                                    drop_p = d * l1 + b * l2 + (d - b) * t2
                                    dc = _greedy_total(p_prices, len(p_tied),
                                                       l1, l2, t2, odd)
                                    if dc >= INFINITY:
                                        continue
                                    total = k_state + pc + dc
                                    if total >= best_cost:
                                        continue
                                    lhs = (r_score + gain_r) - (p_score - drop_p)
                                    if lhs > 0 or (not strict and lhs == 0):
                                        best_cost = total
                                        best_plan = (r, state, w1, w2, t1,
                                                     l1, l2, t2)
    if best_plan is None:
        return INFINITY, None
    flips = _realize_destructive(E, units, vs, odd, p, best_plan)
    assert len(flips) == best_cost, "flip realization disagrees with pricing"
    bribed = apply_microbribes(E, flips)
    assert _beaten(bribed, alpha, p, model), "destructive plan failed replay"
    return best_cost, tuple(flips)


def _contest_part(v: int, b: int, d: int) -> int:
    # scaled contribution of one contest with relative score v
    if v > 0:
        return d
    if v == 0:
        return b
    return 0


def scaled_scores_list(vs, alpha: Alpha) -> list[int]:
    m = len(vs)
    out = []
    for c in range(m):
        s = 0
        for o in range(m):
            if o != c:
                s += _contest_part(vs[c][o], alpha.num, alpha.den)
        out.append(s)
    return out


def _realize_destructive(E, units, vs, odd, p, plan):
    r, state, w1, w2, t1, l1, l2, t2 = plan
    m = E.m
    flips: list[Microbribe] = []
    if state == "r_wins":
        flips += _realize_win(units, vs, r, p)
    elif state == "p_wins":
        flips += _realize_win(units, vs, p, r)
    else:
        flips += _realize_tie(units, vs, p, r)

    others = [c for c in range(m) if c not in (p, r)]
    r_main = _sorted_pool(vs, odd, [c for c in others if vs[c][r] > 0], r)
    r_tied = [c for c in others if vs[r][c] == 0]
    # r first beats w1 of its cheapest defeaters, then ties t1 more
    for c in r_main[:w1]:
        flips += _realize_win(units, vs, r, c)
    for c in r_main[w1:w1 + t1]:
        flips += _realize_tie(units, vs, r, c)
    for c in r_tied[:w2]:
        flips += _realize_win(units, vs, r, c)

    p_main = _sorted_pool(vs, odd, [c for c in others if vs[p][c] > 0], p,
                          member_gains=True)
    p_tied = [c for c in others if vs[p][c] == 0]
    for c in p_main[:l1]:
        flips += _realize_win(units, vs, c, p)
    for c in p_main[l1:l1 + t2]:
        flips += _realize_tie(units, vs, p, c)
    for c in p_tied[:l2]:
        flips += _realize_win(units, vs, c, p)
    return flips


# ---------------------------------------------------------------------------
# constructive microbribery via min-cost flow
#
# One unit of flow = one score point.  Points enter from the source
# according to current scores, move between candidates when a contest is
# flipped (paying the flip price), and exit to the sink: free through p's
# exit, at price B through anybody else's.  B exceeds any possible flip
# total, so a min-cost flow first maximizes p's final score and then
# minimizes the flips; with p's exit capped at T and every rival capped
# at T (or T - 1 when a unique win is required), a value-F flow that
# saturates p's exit is exactly a bribery leaving p on top.


def _wins_and_ties(vs):
    # per-candidate (wins, ties) counts straight off the vs matrix
    m = len(vs)
    out = []
    for c in range(m):
        wins = sum(1 for o in range(m) if o != c and vs[c][o] > 0)
        ties = sum(1 for o in range(m) if o != c and vs[c][o] == 0)
        out.append((wins, ties))
    return out


def target_flow(net: FlowNetwork) -> int:
    """Sum of source-edge capacities, the flow value every network needs."""
    return sum(cap for (u, _), cap in net.capacity.items() if u == net.s)


def build_IT(E: Election, alpha: Alpha, T: int, p: int = 0,
             rival_cap: Optional[int] = None) -> FlowNetwork:
    """Network for odd electorates (any alpha): every contest is decisive,
    each point sits with the contest winner and may be sold to the loser."""
    m = E.m
    if E.total_voters % 2 == 0:
        raise ValueError("this network needs an odd number of voters")
    if not 0 <= T <= m - 1:
        raise ValueError("threshold out of range")
    if rival_cap is None:
        rival_cap = T
    vs = vs_matrix(E)
    B = BigB.for_election(E).value
    net = FlowNetwork(s="s", t="t")
    for c in range(m):
        wins = sum(1 for o in range(m) if o != c and vs[c][o] > 0)
        net.add_edge("s", f"c{c}", wins, 0)
    for i in range(m):
        for j in range(m):
            if vs[i][j] > 0:
                # selling the (i, j) point to j costs j's win price
                net.add_edge(f"c{i}", f"c{j}", 1, _wincost_vs(vs[j][i]))
    for c in range(m):
        if c == p:
            net.add_edge(f"c{c}", "t", T, 0)
        elif rival_cap > 0:
            net.add_edge(f"c{c}", "t", rival_cap, B)
    return net


def build_JT(E: Election, T: int, p: int = 0,
             rival_cap: Optional[int] = None) -> FlowNetwork:
    """Network for even electorates at alpha = 0.  Rival points can only be
    destroyed (into ties); p can convert losses and ties into wins."""
    m = E.m
    if E.total_voters % 2 == 1:
        raise ValueError("this network needs an even number of voters")
    if not 0 <= T <= m - 1:
        raise ValueError("threshold out of range")
    if rival_cap is None:
        rival_cap = T
    vs = vs_matrix(E)
    odd = False
    B = BigB.for_election(E).value
    net = FlowNetwork(s="s", t="t")
    for c in range(m):
        wins = sum(1 for o in range(m) if o != c and vs[c][o] > 0)
        net.add_edge("s", f"c{c}", wins, 0)
    for i in range(m):
        if i == p:
            continue
        for j in range(m):
            if j == p or j == i:
                continue
            if vs[i][j] > 0:
                g = f"g{i}_{j}"
                net.add_edge(f"c{i}", g, 1, _tiecost_vs(vs[i][j], odd))
                net.add_edge(g, "t", 1, B)
    for i in range(m):
        if i == p:
            continue
        if vs[i][p] > 0:
            h = f"h{i}"
            tc = _tiecost_vs(vs[i][p], odd)
            net.add_edge(f"c{i}", h, 1, tc)
            net.add_edge(h, f"c{p}", 1, _wincost_vs(vs[p][i]) - tc)
            net.add_edge(h, "t", 1, B)
        elif vs[i][p] == 0:
            h = f"h{i}"
            net.add_edge("s", h, 1, 0)
            net.add_edge(h, f"c{p}", 1, _wincost_vs(vs[p][i]))
            net.add_edge(h, "t", 1, B)
    for c in range(m):
        if c == p:
            net.add_edge(f"c{c}", "t", T, 0)
        elif rival_cap > 0:
            net.add_edge(f"c{c}", "t", rival_cap, B)
    return net


def build_LT(E: Election, T: int, p: int = 0,
             rival_cap: Optional[int] = None) -> FlowNetwork:
    """Network for even electorates at alpha = 1.  Ties are worth a full
    point, so a tie with p serves both scores: the unit first counts for
    the rival, then runs through the gadget to count for p as well."""
    m = E.m
    if E.total_voters % 2 == 1:
        raise ValueError("this network needs an even number of voters")
    if not 0 <= T <= m - 1:
        raise ValueError("threshold out of range")
    if rival_cap is None:
        rival_cap = T
    vs = vs_matrix(E)
    odd = False
    B = BigB.for_election(E).value
    net = FlowNetwork(s="s", t="t")
    counts = _wins_and_ties(vs)
    for c in range(m):
        wins, ties = counts[c]
        net.add_edge("s", f"c{c}", wins + ties, 0)
    for i in range(m):
        for j in range(m):
            if i == p or j == p or i == j:
                continue
            if vs[i][j] > 0:
                net.add_edge(f"c{i}", f"c{j}", 1, _wincost_vs(vs[j][i]))
    for i in range(m):
        for j in range(i + 1, m):
            if vs[i][j] == 0:
                g = f"g{i}_{j}"
                net.add_edge(f"c{i}", g, 1, _wincost_vs(vs[j][i]))
                net.add_edge(f"c{j}", g, 1, _wincost_vs(vs[i][j]))
                net.add_edge(g, "t", 1, B)
    for i in range(m):
        if i != p and vs[i][p] > 0:
            h = f"h{i}"
            net.add_edge(f"c{i}", h, 1, _wincost_vs(vs[p][i]))
            net.add_edge(f"q{i}", h, 1, _tiecost_vs(vs[i][p], odd))
            net.add_edge(h, f"c{p}", 1, 0)
    for c in range(m):
        cap = T if c == p else rival_cap
        if cap > 0:
            net.add_edge(f"c{c}", f"q{c}", cap, 0)
            net.add_edge(f"q{c}", "t", cap, B if c != p else 0)
    return net


def _p_exit(kind: str, p: int) -> tuple[str, str]:
    if kind == "L":
        return (f"c{p}", f"q{p}")
    return (f"c{p}", "t")


def _decode(kind: str, net: FlowNetwork, flow: Flow, p: int, m: int):
    """Flow -> list of contest targets ('win', winner, loser) / ('tie', a, b)."""
    targets = []
    for (u, v), fv in flow.f.items():
        if fv <= 0:
            continue
        if kind == "I":
            if u.startswith("c") and v.startswith("c"):
                i, j = int(u[1:]), int(v[1:])
                targets.append(("win", j, i))
        elif kind == "J":
            if u.startswith("c") and v.startswith("g"):
                i, j = map(int, v[1:].split("_"))
                targets.append(("tie", i, j))
            elif u.startswith("c") and v.startswith("h"):
                i = int(v[1:])
                # upgraded to a p win when the gadget unit reaches p
                if flow.on(v, f"c{p}") > 0:
                    targets.append(("win", p, i))
                else:
                    targets.append(("tie", p, i))
            elif u == "s" and v.startswith("h"):
                i = int(v[1:])
                if flow.on(v, f"c{p}") > 0:
                    targets.append(("win", p, i))
        elif kind == "L":
            if u.startswith("c") and v.startswith("c"):
                i, j = int(u[1:]), int(v[1:])
                targets.append(("win", j, i))
            elif u.startswith("c") and v.startswith("g"):
                i = int(u[1:])
                a, b = map(int, v[1:].split("_"))
                winner = b if i == a else a
                targets.append(("win", winner, i))
            elif u.startswith("c") and v.startswith("h"):
                targets.append(("win", p, int(v[1:])))
            elif u.startswith("q") and v.startswith("h"):
                targets.append(("tie", p, int(v[1:])))
    return targets


def _realize_targets(E: Election, targets) -> list[Microbribe]:
    units = expand_units(E)
    vs = vs_matrix(E)
    flips: list[Microbribe] = []
    seen = set()
    for tgt in targets:
        kind, a, b = tgt
        contest = pair_of(a, b)
        assert contest not in seen, "contest decoded twice"
        seen.add(contest)
        if kind == "win":
            flips += _realize_win(units, vs, a, b)
        else:
            flips += _realize_tie(units, vs, a, b)
    return flips


def _network_for(E, alpha, T, p, rival_cap):
    odd = E.total_voters % 2 == 1
    if odd:
        return "I", build_IT(E, alpha, T, p, rival_cap)
    if alpha.num == 0:
        return "J", build_JT(E, T, p, rival_cap)
    if alpha.num == alpha.den:
        return "L", build_LT(E, T, p, rival_cap)
    raise UnsupportedCase(
        "even electorates with 0 < alpha < 1 are out of scope")


def _wins_now(E, alpha, p, model):
    w = winners(E, alpha)
    if model is WinnerModel.UNIQUE:
        return w == {p}
    return p in w


def _constructive_scan(E, alpha, p, model, stop_at=None):
    """Yield (T, cost, flips) for every admissible threshold."""
    m = E.m
    unique = model is WinnerModel.UNIQUE
    B = BigB.for_election(E).value
    start = 1 if unique and m >= 2 else 0
    for T in range(start, m):
        rival_cap = T - 1 if unique else T
        kind, net = _network_for(E, alpha, T, p, rival_cap)
        F = target_flow(net)
        flow = solve_min_cost(net, F)
        if flow is None:
            continue
        exit_u, exit_v = _p_exit(kind, p)
        if flow.on(exit_u, exit_v) < T:
            continue
        kappa = flow_cost(net, flow) - B * (F - T)
        assert kappa >= 0
        targets = _decode(kind, net, flow, p, m)
        flips = _realize_targets(E, targets)
        # the B part of the cost accounts for every point parked outside
        # p's exit, so what remains must be exactly the flip count
        assert len(flips) == kappa, "flow cost does not decompose"
        bribed = apply_microbribes(E, flips)
        assert _wins_now(bribed, alpha, p, model), "decode failed replay"
        yield T, kappa, tuple(flips)
        if stop_at is not None and kappa <= stop_at:
            return


def constructive_microbribery(E: Election, alpha: Alpha, p: int, k: int,
                              model: WinnerModel = WinnerModel.NONUNIQUE,
                              ) -> Optional[tuple[Microbribe, ...]]:
    """Flip set of size <= k making p a winner, or None.

    Returns the first admissible threshold's bribery (ascending T), so the
    result is within budget but not necessarily the cheapest overall."""
    if _wins_now(E, alpha, p, model):
        return ()
    for _, cost, flips in _constructive_scan(E, alpha, p, model, stop_at=k):
        if cost <= k:
            return flips
    return None


def constructive_min_cost(E: Election, alpha: Alpha, p: int,
                          model: WinnerModel = WinnerModel.NONUNIQUE,
                          ) -> tuple[int, tuple[Microbribe, ...]]:
    """Exact cheapest constructive microbribery (cost, flips)."""
    if _wins_now(E, alpha, p, model):
        return 0, ()
    best = None
    for _, cost, flips in _constructive_scan(E, alpha, p, model):
        if best is None or cost < best[0]:
            best = (cost, flips)
    assert best is not None, "some threshold must admit a flow"
    return best
