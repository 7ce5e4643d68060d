"""Small undirected simple graphs stored as one adjacency bitmask per vertex.

Also hosts the exact maximum-matching routine used by every saturation
check, plus the plain-text edge-list format::

    n m
    u v
    ...

with ``0 <= u < v < n`` and one edge per line.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class EdgeListError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask. Use the
    constructors (:meth:`from_edges`, :meth:`complete`, ...) rather than
    building rows by hand; ``__post_init__`` rejects loops and asymmetry.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}], got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def m(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            missing = ~self.rows[u] & ((1 << self.n) - 1)
            missing &= ~((1 << (u + 1)) - 1)
            for v in _bits(missing):
                yield u, v

    # -- derived graphs ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> SimpleGraph:
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SimpleGraph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> SimpleGraph:
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.rows[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return SimpleGraph(len(vertices), tuple(rows))

    def remove_vertices(self, removed: Iterable[int]) -> SimpleGraph:
        gone = set(removed)
        return self.induced([v for v in range(self.n) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return SimpleGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def disjoint_union(self, other: SimpleGraph) -> SimpleGraph:
        shift = self.n
        return SimpleGraph.from_edges(
            self.n + other.n,
            self.edges() + [(u + shift, v + shift) for u, v in other.edges()],
        )

    def join(self, other: SimpleGraph) -> SimpleGraph:
        """Disjoint union plus every edge between the two sides."""
        union = self.disjoint_union(other)
        cross = [(u, self.n + v) for u in range(self.n) for v in range(other.n)]
        return SimpleGraph.from_edges(union.n, union.edges() + cross)

    # -- edge-list I/O ----------------------------------------------------

    def to_edge_list(self) -> str:
        edges = self.edges()
        lines = [f"{self.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> SimpleGraph:
        lines = text.splitlines()
        if not lines or not lines[0].strip():
            raise EdgeListError("missing header 'n m'", 1)
        header = lines[0].split()
        if len(header) != 2:
            raise EdgeListError("header must be 'n m'", 1)
        try:
            n, m = int(header[0]), int(header[1])
        except ValueError:
            raise EdgeListError("header values must be integers", 1) from None
        if not 0 <= n <= MAX_VERTICES:
            raise EdgeListError(f"n must be in [0, {MAX_VERTICES}]", 1)
        if m < 0:
            raise EdgeListError("m must be non-negative", 1)
        body = lines[1:]
        if len(body) != m:
            raise EdgeListError(f"expected {m} edge lines, found {len(body)}", len(lines))
        seen: set[tuple[int, int]] = set()
        for offset, line in enumerate(body, start=2):
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListError("edge line must be 'u v'", offset)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError("edge endpoints must be integers", offset) from None
            if u == v:
                raise EdgeListError(f"self-loop at vertex {u}", offset)
            if not (0 <= u < v < n):
                raise EdgeListError(f"edge ({u}, {v}) violates 0 <= u < v < n", offset)
            if (u, v) in seen:
                raise EdgeListError(f"duplicate edge ({u}, {v})", offset)
            seen.add((u, v))
        return cls.from_edges(n, seen)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- matching -----------------------------------------------------------------


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: tuple[tuple[int, int], ...]


def _greedy_mate(g: SimpleGraph) -> list[int]:
    mate = [-1] * g.n
    for u, v in g.edges():
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u
    return mate


def _augmenting_endpoint(adj: list[list[int]], mate: list[int], root: int) -> tuple[int, list[int]]:
    # Edmonds' search from one exposed root; returns (end, parent) with end == -1
    # when the root admits no augmenting path.
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _augment(mate: list[int], parent: list[int], end: int) -> None:
    v = end
    while v != -1:
        pv = parent[v]
        nxt = mate[pv]
        mate[v], mate[pv] = pv, v
        v = nxt


def maximum_mate(g: SimpleGraph, mate: list[int] | None = None) -> list[int]:
    """Mate array of a maximum matching (``-1`` marks exposed vertices).

    ``mate`` may seed the search with any valid matching of ``g``; it is
    copied, not modified.
    """
    adj = [g.neighbors(v) for v in range(g.n)]
    mate = list(mate) if mate is not None else _greedy_mate(g)
    for root in range(g.n):
        if mate[root] != -1:
            continue
        end, parent = _augmenting_endpoint(adj, mate, root)
        if end != -1:
            _augment(mate, parent, end)
    return mate


def has_augmenting_path(g: SimpleGraph, mate: Sequence[int]) -> bool:
    """True iff the matching ``mate`` of ``g`` is not maximum."""
    adj = [g.neighbors(v) for v in range(g.n)]
    work = list(mate)
    return any(
        work[root] == -1 and _augmenting_endpoint(adj, work, root)[0] != -1
        for root in range(g.n)
    )


def matching_number(g: SimpleGraph) -> MatchingResult:
    mate = maximum_mate(g)
    edges = tuple((v, mate[v]) for v in range(g.n) if mate[v] > v)
    return MatchingResult(len(edges), edges)


def deficiency(g: SimpleGraph) -> int:
    return g.n - 2 * matching_number(g).size


def universal_vertices(g: SimpleGraph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.rows[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        out.append(_bits(comp))
    return out


def is_clique(g: SimpleGraph, vertices: Sequence[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all((g.rows[v] | 1 << v) & mask == mask for v in vertices)


def is_odd_clique_union(g: SimpleGraph) -> bool:
    return all(len(c) % 2 == 1 and is_clique(g, c) for c in components(g))
