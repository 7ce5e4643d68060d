"""Build universal-vertex / odd-clique candidates and certify them."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Instance, balanced_partition, z_star_exhaustive
from .graph import SimpleGraph
from .saturation import SaturationVerdict, is_saturated


@dataclass(frozen=True)
class CliqueProfile:
    """``z`` universal vertices joined to cliques of orders ``2 * part + 1``.

    ``parts`` is stored in non-increasing order. Any multiset is accepted as
    long as the vertex and component counts add up; :meth:`balanced` gives
    the optimal one.
    """

    n: int
    k: int
    z: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))
        if self.z < 0 or any(x < 0 for x in self.parts):
            raise ValueError("z and all parts must be non-negative")
        if len(self.parts) != self.k + self.z:
            raise ValueError(f"need k + z = {self.k + self.z} cliques, got {len(self.parts)}")
        if self.z + sum(2 * x + 1 for x in self.parts) != self.n:
            raise ValueError(f"profile covers {self.z + sum(2 * x + 1 for x in self.parts)} vertices, expected n={self.n}")

    @classmethod
    def balanced(cls, inst: Instance, z: int) -> CliqueProfile:
        inst.check_z(z)
        part = balanced_partition(inst.p - z, inst.k + z)
        return cls(inst.n, inst.k, z, part.parts)

    @property
    def p(self) -> int:
        return self.z + sum(self.parts)

    @property
    def edge_count(self) -> int:
        z, n = self.z, self.n
        inner = sum((2 * x + 1) * x for x in self.parts)
        return z * (z - 1) // 2 + z * (n - z) + inner

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "z": self.z, "parts": list(self.parts)}


def build_candidate(profile: CliqueProfile) -> SimpleGraph:
    """Universal vertices get labels ``0..z-1``; cliques follow, largest first."""
    z = profile.z
    edges = [(u, v) for u in range(z) for v in range(u + 1, profile.n)]
    start = z
    for part in profile.parts:
        order = 2 * part + 1
        edges.extend((u, v) for u in range(start, start + order) for v in range(u + 1, start + order))
        start += order
    return SimpleGraph.from_edges(profile.n, edges)


@dataclass(frozen=True)
class Candidate:
    z: int
    profile: CliqueProfile
    graph: SimpleGraph
    verdict: SaturationVerdict

    @property
    def edges(self) -> int:
        return self.graph.m


def extremal_candidates(inst: Instance) -> list[Candidate]:
    """Balanced candidates at every exhaustive minimiser of ``D``.

    Each carries the independent saturation verdict, failures included.
    """
    out = []
    for z in z_star_exhaustive(inst).minimizers:
        profile = CliqueProfile.balanced(inst, z)
        graph = build_candidate(profile)
        out.append(Candidate(z, profile, graph, is_saturated(graph, inst.p)))
    return out
