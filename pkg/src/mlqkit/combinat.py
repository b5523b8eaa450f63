"""Partitions, weak/strong compositions, dominance order, and enumeration primitives.

Partitions and compositions are plain tuples of ints; validation helpers raise
on malformed input instead of silently coercing.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from .errors import DominanceSizeError, TooFewPositionsError

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(parts) -> bool:
    """True iff parts is a weakly decreasing sequence of positive integers."""
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def check_weak_composition(parts) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"not a weak composition: {parts}")
    return parts


def check_strong_composition(parts) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"not a strong composition: {parts}")
    return parts


def sort_composition(alpha) -> Partition:
    """Weakly decreasing rearrangement of the positive parts of alpha."""
    return tuple(sorted((p for p in alpha if p > 0), reverse=True))


def compress(alpha) -> Composition:
    """alpha with its zero parts deleted, order preserved."""
    return tuple(p for p in alpha if p != 0)


def conjugate(lam: Partition) -> Partition:
    """Conjugate partition: lam'_j = #{i : lam_i >= j}."""
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def size(parts) -> int:
    return sum(parts)


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff lam >= mu in dominance order. Both must have equal size."""
    if sum(lam) != sum(mu):
        raise DominanceSizeError(f"sizes differ: |{lam}| != |{mu}|")
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def partitions_of(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of k with parts bounded by max_part, lexicographically decreasing."""
    if k == 0:
        yield ()
        return
    top = k if max_part is None else min(k, max_part)
    for head in range(top, 0, -1):
        for tail in partitions_of(k - head, head):
            yield (head,) + tail


def _distinct_permutations(pool: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of pool in lexicographic order."""
    pool = sorted(pool)
    n = len(pool)

    def rec(remaining: list[int]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield ()
            return
        seen = set()
        for i, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            for tail in rec(remaining[:i] + remaining[i + 1 :]):
                yield (v,) + tail

    yield from rec(pool)


def rearrangements(lam: Partition, n: int) -> Iterator[Composition]:
    """All length-n weak compositions sorting to lam, lexicographically.

    Raises TooFewPositionsError when n < len(lam).
    """
    lam = tuple(lam)
    if n < len(lam):
        raise TooFewPositionsError(f"need at least {len(lam)} positions, got {n}")
    pool = list(lam) + [0] * (n - len(lam))
    yield from _distinct_permutations(pool)


def strong_compositions_of(k: int) -> Iterator[Composition]:
    """All strong compositions of k (k >= 1), in lexicographic order."""
    if k == 0:
        yield ()
        return
    for head in range(1, k + 1):
        for tail in strong_compositions_of(k - head):
            yield (head,) + tail


def weak_compositions_of(k: int, length: int) -> Iterator[Composition]:
    """All weak compositions of k into exactly `length` parts, lexicographic."""
    if length == 0:
        if k == 0:
            yield ()
        return
    if length == 1:
        yield (k,)
        return
    for head in range(k + 1):
        for tail in weak_compositions_of(k - head, length - 1):
            yield (head,) + tail


def prefix_sums(alpha) -> tuple[int, ...]:
    return tuple(itertools.accumulate(alpha))
