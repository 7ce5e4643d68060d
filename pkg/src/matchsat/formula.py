"""Closed-form edge count of the universal-vertex / odd-clique family.

With ``z`` universal vertices and ``k + z`` odd cliques of orders
``2 p_i + 1`` (``sum p_i = p - z``), twice the edge count is

    D(z) = -z^2 + (2n - 3) z + n - k + 4 * min sum p_i^2

and the minimum over the parts is reached by a balanced split. ``D`` splits
into a smooth main term ``g`` and a bounded remainder ``R``:

    D(z) = g(z) - 3n - k + R(z)
    g(z) = -z^2 + (2n + 1) z + (n + k)^2 / (k + z)
    R(z) = 4 (b - b^2 / (k + z))

Everything that decides an optimum is exact (``int`` / ``Fraction``);
floats appear only in ``g``, ``z_dagger`` and ``z0`` for reporting.
"""

from __future__ import annotations

import enum
import math
from decimal import ROUND_HALF_UP, Decimal
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator


@dataclass(frozen=True)
class Instance:
    """Vertex count ``n`` and target matching number ``p`` (``n > 2p``)."""

    n: int
    p: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.n <= 2 * self.p:
            raise ValueError(f"need n > 2p, got n={self.n}, p={self.p}")

    @classmethod
    def from_nk(cls, n: int, k: int) -> Instance:
        if (n - k) % 2:
            raise ValueError(f"n and k must have the same parity, got n={n}, k={k}")
        return cls(n, (n - k) // 2)

    @property
    def k(self) -> int:
        return self.n - 2 * self.p

    @property
    def z_max(self) -> int:
        return self.p

    def check_z(self, z: int) -> None:
        if not 0 <= z <= self.z_max:
            raise ValueError(f"z={z} outside feasible range [0, {self.z_max}] for n={self.n}, p={self.p}")


def iter_instances(n_min: int, n_max: int, k_max: Callable[[int], int] | None = None) -> Iterator[Instance]:
    """Valid instances by ascending ``n`` then ``k``; ``k_max(n)`` caps ``k``."""
    for n in range(n_min, n_max + 1):
        top = n - 2 if k_max is None else min(k_max(n), n - 2)
        for k in range(1, top + 1):
            if (n - k) % 2 == 0:
                yield Instance.from_nk(n, k)


# -- balanced partitions -------------------------------------------------------


@dataclass(frozen=True)
class BalancedPartition:
    total: int
    parts_count: int
    quotient: int
    residue: int

    @property
    def parts(self) -> tuple[int, ...]:
        """Non-increasing: ``residue`` copies of ``quotient + 1`` then the rest."""
        a, b = self.quotient, self.residue
        return (a + 1,) * b + (a,) * (self.parts_count - b)

    @property
    def sum_squares(self) -> int:
        a, b = self.quotient, self.residue
        return b * (a + 1) ** 2 + (self.parts_count - b) * a * a


def balanced_partition(total: int, parts_count: int) -> BalancedPartition:
    if parts_count < 1:
        raise ValueError(f"parts_count must be >= 1, got {parts_count}")
    if total < 0:
        raise ValueError(f"total must be >= 0, got {total}")
    a, b = divmod(total, parts_count)
    return BalancedPartition(total, parts_count, a, b)


def min_sum_squares(total: int, parts_count: int) -> int:
    return balanced_partition(total, parts_count).sum_squares


# -- objective -----------------------------------------------------------------


@dataclass(frozen=True)
class ObjectiveSample:
    z: int
    D: int
    g: float
    R: Fraction
    b: int

    @property
    def E(self) -> int:
        return self.D // 2


def _partition_at(inst: Instance, z: int) -> BalancedPartition:
    inst.check_z(z)
    return balanced_partition(inst.p - z, inst.k + z)


def objective_D(inst: Instance, z: int) -> ObjectiveSample:
    part = _partition_at(inst, z)
    n, k = inst.n, inst.k
    D = -z * z + (2 * n - 3) * z + n - k + 4 * part.sum_squares
    return ObjectiveSample(z=z, D=D, g=main_term_g(inst, z), R=remainder_R(inst, z), b=part.residue)


def main_term_g(inst: Instance, z: float) -> float:
    n, k = inst.n, inst.k
    if z <= -k:
        raise ValueError(f"g is undefined for z <= -k (z={z}, k={k})")
    return -z * z + (2 * n + 1) * z + (n + k) ** 2 / (k + z)


def main_term_g_exact(inst: Instance, z: int | Fraction) -> Fraction:
    n, k = inst.n, inst.k
    if z <= -k:
        raise ValueError(f"g is undefined for z <= -k (z={z}, k={k})")
    z = Fraction(z)
    return -z * z + (2 * n + 1) * z + Fraction((n + k) ** 2) / (k + z)


def remainder_R(inst: Instance, z: int) -> Fraction:
    b = _partition_at(inst, z).residue
    return 4 * (b - Fraction(b * b, inst.k + z))


def z_dagger(inst: Instance) -> float:
    n, k = inst.n, inst.k
    return (math.sqrt(8 * n + 8 * k + 1) - 4 * k + 1) / 4


def z_dagger_floor_ceil(inst: Instance) -> tuple[int, int]:
    """Exact ``(floor, ceil)`` of ``z_dagger`` via integer square roots."""
    n, k = inst.n, inst.k
    disc = 8 * n + 8 * k + 1
    r = math.isqrt(disc)
    lo = (r - 4 * k + 1) // 4
    exact = r * r == disc and (r - 4 * k + 1) % 4 == 0
    return lo, lo if exact else lo + 1


def convexity_threshold_z0(inst: Instance) -> float:
    return (inst.n + inst.k) ** (2 / 3) - inst.k


# -- minimisation ----------------------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveResult:
    minimizers: tuple[int, ...]
    E_min: int
    samples: tuple[ObjectiveSample, ...] = field(repr=False)

    @property
    def z_star(self) -> int:
        return self.minimizers[0]


def z_star_exhaustive(inst: Instance) -> ExhaustiveResult:
    samples = tuple(objective_D(inst, z) for z in range(inst.z_max + 1))
    best = min(s.D for s in samples)
    return ExhaustiveResult(tuple(s.z for s in samples if s.D == best), best // 2, samples)


class Case(enum.Enum):
    I = "CaseI"
    II = "CaseII"
    III = "CaseIII"
    IV = "CaseIV"


@dataclass(frozen=True)
class CaseLabel:
    case: Case
    n_at_least_19: bool
    z_dagger_positive: bool
    k_at_most_sqrt_n: bool

    def to_dict(self) -> dict:
        return {
            "label": self.case.value,
            "n_at_least_19": self.n_at_least_19,
            "z_dagger_positive": self.z_dagger_positive,
            "k_at_most_sqrt_n": self.k_at_most_sqrt_n,
        }


def classify_case(inst: Instance) -> CaseLabel:
    """Proof route for ``inst``; overlapping ranges resolve as I, II, IV, III."""
    n, k = inst.n, inst.k
    big = n >= 19
    positive = n > 2 * k * k - 2 * k
    small_k = k * k <= n
    if big and positive:
        case = Case.I
    elif small_k and not positive:
        case = Case.II
    elif not small_k:
        case = Case.IV
    else:
        case = Case.III
    return CaseLabel(case, big, positive, small_k)


@dataclass(frozen=True)
class TheoremValue:
    E: int
    candidates: tuple[int, ...]


def sat_theorem(inst: Instance) -> TheoremValue:
    """Edge count predicted by the two-branch closed form.

    ``n > 2k^2 - 2k``: best of ``D`` at floor/ceil of ``z_dagger`` (clamped
    into ``[0, p]``); otherwise ``D(0)``.
    """
    n, k = inst.n, inst.k
    if n > 2 * k * k - 2 * k:
        lo, hi = z_dagger_floor_ceil(inst)
        cands = sorted({min(max(z, 0), inst.z_max) for z in (lo, hi)})
    else:
        cands = [0]
    return TheoremValue(min(objective_D(inst, z).D for z in cands) // 2, tuple(cands))


def format_z_dagger(value: float) -> str:
    """Two decimals, halves rounded away from zero, never ``-0.00``."""
    text = str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
    return "0.00" if text == "-0.00" else text
