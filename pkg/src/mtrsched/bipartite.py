"""Bipartite topologies and the two-phase schedule.

In a bipartite topology one whole side can transmit while the other
receives, so every link in one direction fits in a single matching.  Two
entries therefore cover everything: all side-A-to-side-B links for as
long as the heaviest such demand, then the reverse direction likewise.
The result is always feasible; it is an upper bound on the optimum, and
tight whenever one edge carries the maximum demand of both directions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import Instance, Network
from .schedule import Schedule, ScheduleEntry

__all__ = ["Bipartition", "NotBipartite", "bipartition", "two_phase_schedule"]


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of the non-isolated nodes; every edge crosses sides."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class NotBipartite:
    """Witness that no two-coloring exists: an odd cycle."""

    odd_cycle: tuple[int, ...]


def bipartition(network: Network) -> Bipartition | NotBipartite:
    """Two-color the topology by breadth-first search, or return an odd
    cycle.  Node 1's component is colored first with node 1 on side A;
    remaining components start from their lowest node, also on side A.
    """
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    non_isolated = [v for v in range(1, network.node_count + 1)
                    if network.neighbors(v)]
    for start in non_isolated:
        if start in color:
            continue
        color[start] = 0
        parent[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in network.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return NotBipartite(_odd_cycle(parent, v, w))
    side_a = frozenset(v for v, c in color.items() if c == 0)
    side_b = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(side_a, side_b)


def _odd_cycle(parent: dict[int, int], v: int, w: int) -> tuple[int, ...]:
    """Close the cycle through the BFS-tree paths of v and w up to their
    lowest common ancestor.  Same-colored endpoints make it odd."""
    ancestors = {}
    u = v
    while u:
        ancestors[u] = len(ancestors)
        u = parent[u]
    u = w
    path_w = []
    while u not in ancestors:
        path_w.append(u)
        u = parent[u]
    lca = u
    path_v = []
    u = v
    while u != lca:
        path_v.append(u)
        u = parent[u]
    return tuple(path_v + [lca] + list(reversed(path_w)))


def two_phase_schedule(instance: Instance, parts: Bipartition) -> Schedule:
    """Schedule a bipartite instance in two entries: every positive-demand
    link from side A, then every positive-demand link from side B, each
    for its direction's maximum demand."""
    net = instance.network
    _check_partition(net, parts)
    a_links = []
    b_links = []
    a_max = 0
    b_max = 0
    for link, d in zip(net.links, instance.demands):
        if d <= 0:
            continue
        if link[0] in parts.side_a:
            a_links.append(link)
            a_max = max(a_max, d)
        else:
            b_links.append(link)
            b_max = max(b_max, d)
    entries = []
    if a_links:
        entries.append(ScheduleEntry(tuple(sorted(a_links)), a_max))
    if b_links:
        entries.append(ScheduleEntry(tuple(sorted(b_links)), b_max))
    return Schedule(tuple(entries))


def _check_partition(network: Network, parts: Bipartition) -> None:
    if parts.side_a & parts.side_b:
        raise ValueError("bipartition sides overlap")
    nodes = parts.side_a | parts.side_b
    for v in nodes:
        if not 1 <= v <= network.node_count:
            raise ValueError(f"node {v} outside network")
    for a, b in network.edges:
        if not ((a in parts.side_a and b in parts.side_b)
                or (a in parts.side_b and b in parts.side_a)):
            raise ValueError(f"edge ({a}, {b}) does not cross the bipartition")
