"""Partition combinatorics: conjugation, the kappa statistic, cell contents,
strip enumeration and bounded enumeration.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th part (1-based), zero beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def kappa(lam: Partition) -> int:
    """kappa(lam) = sum_i lam_i * (lam_i - 2i + 1); odd under conjugation."""
    return sum(p * (p - 2 * i + 1) for i, p in enumerate(lam, start=1))


def contents(lam: Partition) -> list[int]:
    """Cell contents j - i in row-major order (1-based rows and columns)."""
    return [j - i for i, p in enumerate(lam, start=1) for j in range(1, p + 1)]


def contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment mu subseteq lam."""
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of exact weight n, lexicographically descending."""
    if n == 0:
        return ((),)

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def enumerate_partitions(max_weight: int) -> list[Partition]:
    """Partitions of weight <= max_weight, ordered by weight then lex descending."""
    if max_weight < 0:
        raise ValueError("max_weight must be >= 0")
    out: list[Partition] = []
    for n in range(max_weight + 1):
        out.extend(partitions_of(n))
    return out


def _horizontal_add(mu: Partition, max_size: int) -> list[tuple[Partition, int]]:
    # lam/mu is a horizontal strip iff lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
    rows = len(mu) + 1
    results: list[tuple[Partition, int]] = []

    def rec(i: int, prefix: list[int], used: int):
        if i == rows + 1:
            lam = tuple(p for p in prefix if p > 0)
            results.append((lam, used))
            return
        lo = part(mu, i)
        hi = lo + (max_size - used) if i == 1 else min(part(mu, i - 1), lo + (max_size - used))
        for v in range(lo, hi + 1):
            rec(i + 1, prefix + [v], used + v - lo)

    rec(1, [], 0)
    return results


def _horizontal_remove(mu: Partition, max_size: int) -> list[tuple[Partition, int]]:
    # mu/lam is a horizontal strip iff mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...
    rows = len(mu)
    results: list[tuple[Partition, int]] = []

    def rec(i: int, prefix: list[int], used: int):
        if i == rows + 1:
            lam = tuple(p for p in prefix if p > 0)
            results.append((lam, used))
            return
        hi = part(mu, i)
        lo = max(part(mu, i + 1), hi - (max_size - used))
        for v in range(lo, hi + 1):
            rec(i + 1, prefix + [v], used + hi - v)

    rec(1, [], 0)
    return results


def strips(mu: Partition, direction: str, kind: str, max_size: int) -> list[tuple[Partition, int]]:
    """Partitions differing from mu by a strip of size <= max_size.

    direction 'add' grows the diagram, 'remove' shrinks it; kind selects
    horizontal strips (at most one box per column) or vertical strips (at
    most one box per row).  Size 0 lists mu itself.
    """
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    if direction not in ("add", "remove"):
        raise ValueError("direction must be 'add' or 'remove'")
    if kind not in ("horizontal", "vertical"):
        raise ValueError("kind must be 'horizontal' or 'vertical'")
    if kind == "vertical":
        flipped = strips(conjugate(mu), direction, "horizontal", max_size)
        return sorted((conjugate(lam), s) for lam, s in flipped)
    if direction == "add":
        return sorted(_horizontal_add(mu, max_size))
    return sorted(_horizontal_remove(mu, max_size))


def to_json(lam: Partition) -> list[int]:
    return list(lam)
