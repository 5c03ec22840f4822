"""Flow solver checks, including exhaustive optimality on tiny networks."""

import itertools
import random

import pytest

from copeland.flow import Flow, FlowNetwork, flow_cost, flow_value, solve_min_cost


def build(s, t, edges):
    net = FlowNetwork(s=s, t=t)
    for u, v, cap, cost in edges:
        net.add_edge(u, v, cap, cost)
    return net


def enumerate_min_cost(net, F):
    """Brute force: try every integer assignment on the directed edges."""
    edges = sorted(net.capacity, key=repr)
    caps = [net.capacity[e] for e in edges]
    inner = [u for u in net.nodes if u not in (net.s, net.t)]
    best = None
    for assignment in itertools.product(*[range(c + 1) for c in caps]):
        out_of = {}
        for (u, v), fv in zip(edges, assignment):
            out_of[u] = out_of.get(u, 0) + fv
            out_of[v] = out_of.get(v, 0) - fv
        if out_of.get(net.s, 0) != F:
            continue
        if any(out_of.get(u, 0) != 0 for u in inner):
            continue
        cost = sum(net.cost[e] * fv for e, fv in zip(edges, assignment))
        if best is None or cost < best:
            best = cost
    return best


def assert_flow_axioms(net, flow):
    for (u, v), fv in flow.f.items():
        assert flow.f.get((v, u), 0) == -fv
        if fv > 0:
            assert (u, v) in net.capacity and fv <= net.capacity[(u, v)]
    balance = {}
    for (u, v), fv in flow.f.items():
        if fv > 0:
            balance[u] = balance.get(u, 0) + fv
            balance[v] = balance.get(v, 0) - fv
    for node, b in balance.items():
        if node not in (net.s, net.t):
            assert b == 0, f"conservation broken at {node}"


def test_single_edge():
    net = build("s", "t", [("s", "t", 5, 0)])
    f = solve_min_cost(net, 3)
    assert f is not None
    assert flow_value(f) == 3
    assert flow_cost(net, f) == 0


def test_two_parallel_paths_take_both():
    net = build("s", "t", [("s", "a", 1, 2), ("a", "t", 1, 0),
                           ("s", "b", 1, 7), ("b", "t", 1, 0)])
    f = solve_min_cost(net, 2)
    assert f is not None
    assert flow_cost(net, f) == 9


def test_prefers_cheap_path():
    net = build("s", "t", [("s", "a", 2, 1), ("a", "t", 2, 0),
                           ("s", "b", 2, 5), ("b", "t", 2, 0)])
    f = solve_min_cost(net, 2)
    assert flow_cost(net, f) == 2


def test_infeasible_returns_none():
    net = build("s", "t", [("s", "t", 2, 1)])
    assert solve_min_cost(net, 3) is None


def test_zero_flow():
    net = build("s", "t", [("s", "t", 2, 1)])
    f = solve_min_cost(net, 0)
    assert f is not None
    assert flow_value(f) == 0
    assert flow_cost(net, f) == 0


def test_rerouting_needed():
    # cheap path shares an edge; optimum must push around it
    net = build("s", "t", [("s", "a", 1, 0), ("a", "b", 1, 0), ("b", "t", 1, 0),
                           ("s", "b", 1, 3), ("a", "t", 1, 3)])
    f = solve_min_cost(net, 2)
    assert f is not None
    assert flow_value(f) == 2
    assert flow_cost(net, f) == 6
    assert_flow_axioms(net, f)


def test_rejects_bad_edges():
    net = FlowNetwork(s="s", t="t")
    with pytest.raises(ValueError):
        net.add_edge("a", "a", 1, 0)
    with pytest.raises(ValueError):
        net.add_edge("a", "b", -1, 0)
    with pytest.raises(ValueError):
        net.add_edge("a", "b", 1, -2)
    net.add_edge("a", "b", 1, 0)
    with pytest.raises(ValueError):
        net.add_edge("b", "a", 1, 0)
    with pytest.raises(ValueError):
        net.add_edge("a", "b", 2, 0)
    with pytest.raises(ValueError):
        net.add_edge("x", "y", 0, 4)


def test_matches_exhaustive_on_random_small_networks():
    rng = random.Random(42)
    names = ["s", "a", "b", "c", "d", "t"]
    for trial in range(60):
        size = rng.randint(3, 6)
        nodes = names[:size - 1] + ["t"]
        net = FlowNetwork(s="s", t="t")
        pairs = [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:]]
        rng.shuffle(pairs)
        for u, v in pairs[:rng.randint(2, min(8, len(pairs)))]:
            if rng.random() < 0.5:
                u, v = v, u
            if u == "t" or v == "s":
                u, v = v, u
            try:
                net.add_edge(u, v, rng.randint(1, 3), rng.randint(0, 4))
            except ValueError:
                pass
        for F in range(0, 5):
            want = enumerate_min_cost(net, F)
            got = solve_min_cost(net, F)
            if want is None:
                assert got is None, (trial, F, net.dump())
            else:
                assert got is not None, (trial, F, net.dump())
                assert flow_value(got) == F
                assert flow_cost(net, got) == want, (trial, F, net.dump())
                assert_flow_axioms(net, got)
