"""Classical values recovered from the closed form, and the upper-bound chain."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .formula import Instance


def kt_value(inst: Instance) -> int | None:
    """``3p`` when ``n >= 3p`` (the ``pK3 + (n-3p)K1`` regime), else ``None``."""
    return 3 * inst.p if inst.n >= 3 * inst.p else None


@dataclass(frozen=True)
class ZLYValue:
    """``B`` cliques ``K_{2t+1}`` and ``A = k - B`` cliques ``K_{2t-1}``."""

    B: int
    t: int
    A: int
    edges: int

    def to_dict(self) -> dict:
        return {"B": self.B, "t": self.t, "A": self.A, "edges": self.edges}


def zly_value(inst: Instance) -> ZLYValue | None:
    n, k = inst.n, inst.k
    if k * k <= n:
        return None
    s = inst.p
    B = s % k
    t = 1 + s // k
    A = k - B
    return ZLYValue(B, t, A, B * math.comb(2 * t + 1, 2) + A * math.comb(2 * t - 1, 2))


def _check_nk(n: int, k: int) -> None:
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if (n - k) % 2:
        raise ValueError(f"n - k must be even, got n={n}, k={k}")


def eg_upper_bound(n: int, k: int) -> int:
    _check_nk(n, k)
    if n > 5 * k - 6:
        num, den = (n - k) * (n - k + 1), 2
    else:
        num, den = (n - k) * (3 * n + k - 2), 8
    if num % den:
        raise ArithmeticError(f"bound is not integral for n={n}, k={k}")
    return num // den


def degree_sum_bound(n: int, k: int, z: int) -> int:
    """Degree-sum ceiling of the family at ``z`` with all of ``p - z`` in one clique."""
    _check_nk(n, k)
    if not 0 <= z <= (n - k) // 2:
        raise ValueError(f"z={z} outside [0, {(n - k) // 2}]")
    return 3 * z * z + (4 * k - 2 * n - 3) * z + n * n - 2 * k * n + k * k + n - k


def kt_threshold(n: int) -> float:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (1 + math.sqrt(2 * n + 1)) / 2
