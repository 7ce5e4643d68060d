"""Slow, obviously-correct reference routines used only by the tests."""

from __future__ import annotations

from itertools import combinations

from matchsat.graph import SimpleGraph


def nu_by_edge_subsets(g: SimpleGraph) -> int:
    """Largest vertex-disjoint subset over every subset of the edge set."""
    edges = g.edges()
    best = 0
    for r in range(len(edges) + 1):
        for subset in combinations(edges, r):
            ends = [v for e in subset for v in e]
            if len(ends) == len(set(ends)):
                best = max(best, r)
                break
    return best


def nu_by_enumeration(g: SimpleGraph) -> int:
    """Largest matching found by trying every matching (fast enough for n <= 8)."""

    def go(free: frozenset[int]) -> int:
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        best = go(rest)
        for u in g.neighbors(v):
            if u in rest:
                best = max(best, 1 + go(rest - {u}))
        return best

    return go(frozenset(range(g.n)))


def compositions(total: int, parts: int):
    """Every ordered tuple of ``parts`` non-negative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def degree_sum_from_parts(n: int, z: int, parts) -> int:
    """Twice the edge count of K_z joined to cliques K_{2p+1}, summed vertex by vertex."""
    return z * (n - 1) + sum(4 * q * q + 2 * q * z + 2 * q + z for q in parts)


def brute_D(n: int, k: int, z: int) -> int:
    return min(degree_sum_from_parts(n, z, c) for c in compositions((n - k) // 2 - z, k + z))


def saturated_by_definition(g: SimpleGraph, p: int) -> bool:
    """Literal definition, every matching number by full enumeration."""
    if nu_by_enumeration(g) > p:
        return False
    return all(nu_by_enumeration(g.add_edge(u, v)) >= p + 1 for u, v in g.non_edges())
