"""Desk-scale ground truth for saturation numbers.

``brute_force_sat`` walks every labelled graph on ``n <= 8`` vertices by
ascending edge count. Graphs are bitmasks over the ``C(n, 2)`` edges of
``K_n`` (lexicographic edge order). The matching number of every mask comes
from a table built by the recurrence

    ν(E + e) = max(ν(E), 1 + ν(E minus edges touching e))

so one level of the search is a handful of vectorised gathers. Witnesses
found that way are re-checked with :func:`matchsat.saturation.is_saturated`.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .construct import CliqueProfile, build_candidate
from .formula import Instance, sat_theorem, z_star_exhaustive
from .graph import SimpleGraph
from .saturation import is_saturated

log = logging.getLogger(__name__)

HARD_MAX_N = 8
DEFAULT_MAX_N = 7
STRUCTURED_MAX_N = 40
_CHUNK = 1 << 22
_PREFIX_BITS = 4


def edge_order(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def mask_to_graph(n: int, mask: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [e for i, e in enumerate(edge_order(n)) if mask >> i & 1])


def graph_to_mask(g: SimpleGraph) -> int:
    return sum(1 << i for i, (u, v) in enumerate(edge_order(g.n)) if g.has_edge(u, v))


@lru_cache(maxsize=2)
def matching_table(n: int) -> np.ndarray:
    """``table[mask]`` = matching number of the graph encoded by ``mask``."""
    if not 0 <= n <= HARD_MAX_N:
        raise ValueError(f"matching table supports n <= {HARD_MAX_N}, got {n}")
    edges = edge_order(n)
    size = 1 << len(edges)
    nu = np.zeros(size, dtype=np.uint8)
    for i, (a, b) in enumerate(edges):
        half = 1 << i
        keep = (half - 1) & ~sum(1 << j for j, e in enumerate(edges[:i]) if a in e or b in e)
        for lo in range(0, half, _CHUNK):
            hi = min(half, lo + _CHUNK)
            idx = np.arange(lo, hi, dtype=np.int64)
            nu[half + lo : half + hi] = np.maximum(nu[lo:hi], nu[idx & keep] + 1)
    nu.flags.writeable = False
    return nu


@lru_cache(maxsize=2)
def _popcounts(n: int) -> np.ndarray:
    size = 1 << math.comb(n, 2)
    out = np.zeros(size, dtype=np.uint8)
    for lo in range(0, size, _CHUNK):
        x = np.arange(lo, min(size, lo + _CHUNK), dtype=np.uint32)
        x = x - ((x >> 1) & 0x55555555)
        x = (x & 0x33333333) + ((x >> 2) & 0x33333333)
        x = (x + (x >> 4)) & 0x0F0F0F0F
        out[lo : lo + len(x)] = (x * 0x01010101) >> 24
    out.flags.writeable = False
    return out


def _saturated_masks(nu: np.ndarray, masks: np.ndarray, p: int, n_edges: int) -> np.ndarray:
    ok = nu[masks] <= p
    for i in range(n_edges):
        bit = np.int64(1 << i)
        missing = (masks & bit) == 0
        ok &= ~missing | (nu[masks | bit] > p)
    return masks[ok]


def _saturated_level(n: int, p: int, level: int, parallel: int) -> np.ndarray:
    nu = matching_table(n)
    n_edges = math.comb(n, 2)
    masks = np.flatnonzero(_popcounts(n) == level).astype(np.int64)
    if parallel <= 1 or len(masks) < 2:
        return _saturated_masks(nu, masks, p, n_edges)
    # Work split by the top bits of the edge mask; chunks rejoin in prefix order.
    shift = max(n_edges - _PREFIX_BITS, 0)
    cuts = np.searchsorted(masks >> shift, np.arange(1, 1 << min(_PREFIX_BITS, n_edges)))
    chunks = np.split(masks, cuts)
    with ThreadPoolExecutor(max_workers=parallel) as pool:
        parts = list(pool.map(lambda c: _saturated_masks(nu, c, p, n_edges), chunks))
    return np.concatenate(parts)


@dataclass(frozen=True)
class BruteForceResult:
    n: int
    p: int
    min_edges: int
    witness_count: int
    witnesses: tuple[SimpleGraph, ...] = field(repr=False)


def brute_force_sat(
    n: int,
    p: int,
    max_n: int = DEFAULT_MAX_N,
    witness_limit: int = 16,
    parallel: int = 1,
) -> BruteForceResult:
    """Smallest edge count of a (p+1)-matching-saturated labelled graph on ``n`` vertices.

    Levels are scanned by ascending edge count and the scan stops at the
    first level holding a saturated graph. ``witness_count`` counts every
    labelled witness at that level; at most ``witness_limit`` are returned.
    """
    Instance(n, p)
    if max_n > HARD_MAX_N:
        raise ValueError(f"max_n is capped at {HARD_MAX_N}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the exhaustive search cap max_n={max_n}")
    for level in range(math.comb(n, 2) + 1):
        found = _saturated_level(n, p, level, parallel)
        if len(found):
            witnesses = tuple(mask_to_graph(n, int(m)) for m in found[:witness_limit])
            for w in witnesses:
                if not is_saturated(w, p).is_saturated:
                    raise AssertionError(f"table search and saturation predicate disagree on {w.edges()}")
            log.debug("n=%d p=%d: %d witnesses at level %d", n, p, len(found), level)
            return BruteForceResult(n, p, level, len(found), witnesses)
    raise AssertionError("K_n is always saturated for n > 2p; search cannot come up empty")


def saturated_graphs(n: int, p: int) -> list[SimpleGraph]:
    """Every labelled (p+1)-matching-saturated graph on ``n`` vertices."""
    if n > DEFAULT_MAX_N:
        raise ValueError(f"full listing is limited to n <= {DEFAULT_MAX_N}")
    nu = matching_table(n)
    masks = np.arange(1 << math.comb(n, 2), dtype=np.int64)
    return [mask_to_graph(n, int(m)) for m in _saturated_masks(nu, masks, p, math.comb(n, 2))]


# -- structure-restricted search ---------------------------------------------------


def _partitions(total: int, slots: int, cap: int | None = None):
    """Non-increasing tuples of length ``slots`` summing to ``total``."""
    if cap is None:
        cap = total
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * slots < total:
            break
        for rest in _partitions(total - first, slots - 1, first):
            yield (first,) + rest


def all_profiles(inst: Instance, z: int | None = None) -> list[CliqueProfile]:
    zs = range(inst.z_max + 1) if z is None else [z]
    return [
        CliqueProfile(inst.n, inst.k, zz, parts)
        for zz in zs
        for parts in _partitions(inst.p - zz, inst.k + zz)
    ]


@dataclass(frozen=True)
class StructuredResult:
    min_edges: int | None
    profiles: tuple[CliqueProfile, ...]
    rejected: tuple[CliqueProfile, ...]


def structured_oracle(inst: Instance, balanced_only: bool = False) -> StructuredResult:
    """Minimum over every odd-clique profile that passes the saturation predicate.

    Profiles are tried in ascending edge count, so the predicate only runs
    until the first saturated level is exhausted. ``rejected`` lists the
    cheaper-or-equal profiles that failed the predicate.
    """
    if inst.n > STRUCTURED_MAX_N:
        raise ValueError(f"structured search is limited to n <= {STRUCTURED_MAX_N}")
    profiles = all_profiles(inst)
    if balanced_only:
        profiles = [pr for pr in profiles if max(pr.parts, default=0) - min(pr.parts, default=0) <= 1]
    profiles.sort(key=lambda pr: (pr.edge_count, pr.z, [-x for x in pr.parts]))
    best = None
    winners, rejected = [], []
    for pr in profiles:
        if best is not None and pr.edge_count > best:
            break
        if is_saturated(build_candidate(pr), inst.p).is_saturated:
            best = pr.edge_count
            winners.append(pr)
        else:
            rejected.append(pr)
    return StructuredResult(best, tuple(winners), tuple(rejected))


# -- comparison ----------------------------------------------------------------------


@dataclass
class ComparisonReport:
    n: int
    p: int
    k: int
    theorem_edges: int
    exhaustive_edges: int
    structured_edges: int | None
    brute_force_edges: int | None
    mismatches: list[tuple[str, str]]
    witnesses: list[SimpleGraph] = field(default_factory=list)
    structured_profiles: list[CliqueProfile] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.mismatches

    def values(self) -> dict[str, int | None]:
        return {
            "theorem": self.theorem_edges,
            "exhaustive": self.exhaustive_edges,
            "structured": self.structured_edges,
            "brute_force": self.brute_force_edges,
        }


def compare(inst: Instance, max_n: int = DEFAULT_MAX_N, parallel: int = 1) -> ComparisonReport:
    """Tabulate the closed form against both oracles and flag every disagreement."""
    structured = structured_oracle(inst) if inst.n <= STRUCTURED_MAX_N else None
    brute = brute_force_sat(inst.n, inst.p, max_n=max_n, parallel=parallel) if inst.n <= max_n else None
    report = ComparisonReport(
        n=inst.n,
        p=inst.p,
        k=inst.k,
        theorem_edges=sat_theorem(inst).E,
        exhaustive_edges=z_star_exhaustive(inst).E_min,
        structured_edges=structured.min_edges if structured else None,
        brute_force_edges=brute.min_edges if brute else None,
        mismatches=[],
        witnesses=list(brute.witnesses) if brute else [],
        structured_profiles=list(structured.profiles) if structured else [],
    )
    present = [(name, v) for name, v in report.values().items() if v is not None]
    for (a, va), (b, vb) in combinations(present, 2):
        if va != vb:
            report.mismatches.append((a, b))
    return report
