"""Integer min-cost flow with a target flow value.

Successive shortest augmenting paths with node potentials.  Costs must be
nonnegative, which every network built in this package satisfies, so the
first potential vector is all zeros and Dijkstra works throughout.

Node labels are arbitrary hashable values (strings in practice).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Hashable, Optional

from .election import INFINITY

Node = Hashable


@dataclass
class FlowNetwork:
    # capacity/cost keyed by (u, v); at most one direction per node pair
    s: Node
    t: Node
    nodes: list[Node] = field(default_factory=list)
    capacity: dict[tuple[Node, Node], int] = field(default_factory=dict)
    cost: dict[tuple[Node, Node], int] = field(default_factory=dict)

    def add_node(self, u: Node) -> Node:
        if u not in self.nodes:
            self.nodes.append(u)
        return u

    def add_edge(self, u: Node, v: Node, cap: int, cost: int) -> None:
        if u == v:
            raise ValueError("self-loops are not allowed")
        if cap < 0 or cost < 0:
            raise ValueError("capacities and costs must be nonnegative")
        if (v, u) in self.capacity:
            raise ValueError(f"both directions requested for {u!r},{v!r}")
        if (u, v) in self.capacity:
            raise ValueError(f"edge {u!r}->{v!r} added twice")
        if cap == 0:
            # c(u,v)=0 forces a(u,v)=0; drop the edge entirely
            if cost != 0:
                raise ValueError("cost on a zero-capacity edge")
            return
        self.add_node(u)
        self.add_node(v)
        self.capacity[(u, v)] = cap
        self.cost[(u, v)] = cost

    def dump(self) -> str:
        # DOT-ish text, handy when eyeballing a construction
        lines = [f"network s={self.s} t={self.t}"]
        for (u, v), cap in sorted(self.capacity.items(), key=repr):
            lines.append(f"  {u} -> {v} [cap={cap} cost={self.cost[(u, v)]}]")
        return "\n".join(lines)


@dataclass
class Flow:
    s: Node
    t: Node
    f: dict[tuple[Node, Node], int]  # antisymmetric: f[(u,v)] == -f[(v,u)]

    def on(self, u: Node, v: Node) -> int:
        return self.f.get((u, v), 0)


def flow_value(flow: Flow) -> int:
    return sum(v for (u, _), v in flow.f.items() if u == flow.s)


def flow_cost(net: FlowNetwork, flow: Flow) -> int:
    total = 0
    for (u, v), a in net.cost.items():
        fv = flow.on(u, v)
        if fv > 0:
            total += a * fv
    return total


def solve_min_cost(net: FlowNetwork, F: int) -> Optional[Flow]:
    """Minimum-cost flow of value exactly F, or None when F is infeasible."""
    if F < 0:
        raise ValueError("target flow value must be nonnegative")
    nodes = list(net.nodes)
    for extra in (net.s, net.t):
        if extra not in nodes:
            nodes.append(extra)

    # adjacency over residual edges
    adj: dict[Node, list[Node]] = {u: [] for u in nodes}
    for (u, v) in net.capacity:
        adj[u].append(v)
        adj[v].append(u)

    f: dict[tuple[Node, Node], int] = {}

    def residual(u: Node, v: Node) -> int:
        if (u, v) in net.capacity:
            return net.capacity[(u, v)] - f.get((u, v), 0)
        if (v, u) in net.capacity:
            return -f.get((u, v), 0)  # f[(u,v)] = -f[(v,u)] <= 0 when used
        return 0

    def edge_cost(u: Node, v: Node) -> int:
        if (u, v) in net.cost:
            return net.cost[(u, v)]
        return -net.cost[(v, u)]

    potential: dict[Node, int] = {u: 0 for u in nodes}
    sent = 0
    while sent < F:
        # Dijkstra over reduced costs
        dist: dict[Node, int] = {u: INFINITY for u in nodes}
        prev: dict[Node, Node] = {}
        dist[net.s] = 0
        heap = [(0, repr(net.s), net.s)]
        seen: set[Node] = set()
        while heap:
            d, _, u = heapq.heappop(heap)
            if u in seen:
                continue
            seen.add(u)
            for v in adj[u]:
                if residual(u, v) <= 0:
                    continue
                nd = d + edge_cost(u, v) + potential[u] - potential[v]
                if nd < dist[v]:
                    dist[v] = nd
                    prev[v] = u
                    heapq.heappush(heap, (nd, repr(v), v))
        if net.t not in seen:
            return None  # no augmenting path left; F is infeasible
        for u in nodes:
            if dist[u] < INFINITY:
                potential[u] += dist[u]
        # bottleneck along the shortest path, clipped to what is still owed
        push = F - sent
        v = net.t
        while v != net.s:
            u = prev[v]
            push = min(push, residual(u, v))
            v = u
        v = net.t
        while v != net.s:
            u = prev[v]
            f[(u, v)] = f.get((u, v), 0) + push
            f[(v, u)] = -f[(u, v)]
            v = u
        sent += push

    return Flow(net.s, net.t, {k: v for k, v in f.items() if v != 0})
