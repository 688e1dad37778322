"""Schedule quality metrics and validity checking."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import Instance, Link
from .schedule import Schedule

__all__ = ["UndefinedPenaltyError", "cost_penalty", "lower_bounds",
           "Violation", "validate_schedule"]


class UndefinedPenaltyError(ValueError):
    """Penalty against a zero optimum with nonzero total is undefined."""


def cost_penalty(total: int, optimum: int) -> Fraction:
    """Percentage excess airtime of a schedule over the optimum,
    (total - optimum) / optimum * 100, as an exact fraction."""
    if optimum == 0:
        if total == 0:
            return Fraction(0)
        raise UndefinedPenaltyError(
            f"total {total} > 0 against optimum 0 has no defined penalty")
    return Fraction(total - optimum, optimum) * 100


def lower_bounds(instance: Instance) -> tuple[int, int]:
    """Two cheap lower bounds on any feasible frame length.

    Edge bound: both directions of an edge conflict, so an edge needs
    f_ij + f_ji slots.  Node bound: a node cannot transmit and receive in
    the same slot, so it needs its largest incoming plus largest outgoing
    demand.  (The node bound dominates the edge bound; both are reported
    for cross-checking.)
    """
    net = instance.network
    edge_bound = 0
    for a, b in net.edges:
        pair = instance.demand_of((a, b)) + instance.demand_of((b, a))
        edge_bound = max(edge_bound, pair)
    max_in = [0] * (net.node_count + 1)
    max_out = [0] * (net.node_count + 1)
    for (tx, rx), d in zip(net.links, instance.demands):
        max_out[tx] = max(max_out[tx], d)
        max_in[rx] = max(max_in[rx], d)
    node_bound = max((max_in[v] + max_out[v] for v in range(1, net.node_count + 1)),
                     default=0)
    return edge_bound, node_bound


@dataclass(frozen=True)
class Violation:
    """One way a schedule fails its instance."""

    kind: str  # "unknown-link" | "bad-slots" | "conflict" | "under-coverage"
    message: str
    links: tuple[Link, ...] = ()
    node: int | None = None
    rule: str | None = None


def validate_schedule(instance: Instance, schedule: Schedule) -> list[Violation]:
    """Every rule violation and under-covered link; empty list means the
    schedule is valid and covers all demands."""
    net = instance.network
    out: list[Violation] = []
    for e_idx, entry in enumerate(schedule.entries):
        if entry.slots <= 0:
            out.append(Violation(
                "bad-slots",
                f"entry {e_idx} has non-positive slot count {entry.slots}",
                links=entry.links))
        known = []
        for link in entry.links:
            if not net.has_link(link):
                out.append(Violation(
                    "unknown-link",
                    f"entry {e_idx} uses link {link} absent from the network",
                    links=(link,)))
            else:
                known.append(link)
        for x in range(len(known)):
            i, j = known[x]
            for y in range(x + 1, len(known)):
                k, l = known[y]
                if i == l or j == k:
                    node = i if i == l else j
                    out.append(Violation(
                        "conflict",
                        f"entry {e_idx}: links {known[x]} and {known[y]} make "
                        f"node {node} transmit and receive at once (rule R3)",
                        links=(known[x], known[y]), node=node, rule="R3"))
    for link, demand in zip(net.links, instance.demands):
        covered = schedule.coverage(link)
        if covered < demand:
            out.append(Violation(
                "under-coverage",
                f"link {link} gets {covered} of {demand} demanded slots",
                links=(link,)))
    return out
