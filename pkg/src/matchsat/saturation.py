"""Ground-truth saturation predicate and Mader-style structure checks."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    SimpleGraph,
    components,
    has_augmenting_path,
    is_clique,
    matching_number,
    maximum_mate,
    universal_vertices,
)


@dataclass(frozen=True)
class SaturationVerdict:
    is_free: bool
    is_saturated: bool
    matching_number: int
    failing_edge: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "is_free": self.is_free,
            "is_saturated": self.is_saturated,
            "matching_number": self.matching_number,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
        }


def is_saturated(g: SimpleGraph, p: int) -> SaturationVerdict:
    """Is ``g`` free of a (p+1)-matching while every added edge creates one?

    Reports the first non-edge (lexicographic) whose addition leaves the
    matching number at most ``p``. Complete graphs that are free are
    saturated vacuously.
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    mate = maximum_mate(g)
    nu = sum(1 for v in range(g.n) if mate[v] > v)
    if nu > p:
        return SaturationVerdict(False, False, nu)
    for u, v in g.non_edges():
        # ν(G+e) <= ν(G)+1, so only ν(G) = p with an augmenting path through e works.
        if nu < p or not has_augmenting_path(g.add_edge(u, v), mate):
            return SaturationVerdict(True, False, nu, (u, v))
    return SaturationVerdict(True, True, nu)


@dataclass(frozen=True)
class StructureReport:
    universal_count: int
    component_orders: tuple[int, ...]
    matching_numbers: tuple[int, ...]
    lemma21_holds: bool
    lemma22_holds: bool
    is_mader_form: bool

    def to_dict(self) -> dict:
        return {
            "universal_count": self.universal_count,
            "component_orders": list(self.component_orders),
            "matching_numbers": list(self.matching_numbers),
            "lemma21_holds": self.lemma21_holds,
            "lemma22_holds": self.lemma22_holds,
            "is_mader_form": self.is_mader_form,
        }

    @property
    def clean(self) -> bool:
        return self.is_mader_form and self.lemma21_holds and self.lemma22_holds


def structure_report(g: SimpleGraph, p: int) -> StructureReport:
    """Decompose ``g`` around its universal vertices ``Z``.

    Checks that ``g - Z`` is a union of odd cliques and evaluates the two
    identities ``ν(G-Z) = ν(G) - |Z|`` and ``|C(G-Z)| = k + |Z|`` with
    ``k = n - 2ν(G)``. ``p`` must equal ``ν(g)``.
    """
    nu = matching_number(g).size
    if p != nu:
        raise ValueError(f"structure_report needs p = ν(G) = {nu}, got p={p}")
    z_set = universal_vertices(g)
    rest = g.remove_vertices(z_set)
    comps = components(rest)
    orders = sorted((len(c) for c in comps), reverse=True)
    comp_nu = sorted((matching_number(rest.induced(c)).size for c in comps), reverse=True)
    mader = all(len(c) % 2 == 1 and is_clique(rest, c) for c in comps)
    k = g.n - 2 * nu
    z = len(z_set)
    return StructureReport(
        universal_count=z,
        component_orders=tuple(orders),
        matching_numbers=tuple(comp_nu),
        lemma21_holds=matching_number(rest).size == nu - z,
        lemma22_holds=len(comps) == k + z,
        is_mader_form=mader,
    )
