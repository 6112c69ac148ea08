"""Partitions and compositions as plain tuples, plus exhaustive enumeration.

A partition is a nonincreasing tuple of positive ints; the empty tuple is
the unique partition of 0.  Compositions keep their order: strict
compositions have positive parts, Montreal compositions allow interior
zeros but need positive endpoints, circular compositions have a fixed
length and allow zeros anywhere.  All values are immutable and hashable,
so they can be shared freely across threads or processes.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Composition = tuple[int, ...]

# Default ceilings for exhaustive enumeration.  p(80) ~ 1.5e7 is a practical
# desk limit; strict compositions double with every extra card.
PARTITION_ENUM_BOUND = 80
COMPOSITION_ENUM_BOUND = 20


class EnumerationBoundError(RuntimeError):
    """The requested state space exceeds the configured enumeration bound."""


def normalize(raw: Iterable[int]) -> Partition:
    """Sort parts nonincreasing and drop zeros, preserving the total."""
    parts = sorted(raw, reverse=True)
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return tuple(p for p in parts if p > 0)


def is_partition(parts: tuple[int, ...]) -> bool:
    """True if parts is canonical: nonincreasing and strictly positive."""
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram; part i of the result counts parts >= i."""
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def staircase(k: int) -> Partition:
    """The partition (k, k-1, ..., 2, 1) of the k-th triangular number."""
    return tuple(range(k, 0, -1))


def triangular_decompose(n: int) -> tuple[int, int]:
    """Unique (k, r) with n = (k-1)k/2 + r and 0 < r <= k.

    r = k exactly when n is triangular.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    k = (isqrt(8 * n + 1) - 1) // 2  # largest k with k(k+1)/2 <= n
    if k * (k + 1) // 2 == n:
        return k, k
    return k + 1, n - k * (k + 1) // 2


def potential_energy(lam: Partition) -> int:
    """Total box height of the Young diagram, box (i, j) sitting at i + j.

    Pile index i and card index j both start at 1 on the sorted
    representation; the empty partition has energy 0.
    """
    total = 0
    for i, p in enumerate(lam, 1):
        for j in range(1, p + 1):
            total += i + j
    return total


def enumerate_partitions(
    n: int, *, max_part: int | None = None, max_n: int | None = None
) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    max_part restricts all parts to at most that value.  Enumeration is
    refused above the configured bound (default PARTITION_ENUM_BOUND);
    pass max_n explicitly to lift it.
    """
    bound = PARTITION_ENUM_BOUND if max_n is None else max_n
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise EnumerationBoundError(f"n={n} exceeds the enumeration bound {bound}")
    if max_part is not None:
        yield from _bounded_partitions(n, max_part)
        return
    if n == 0:
        yield ()
        return
    parts = [n]
    yield (n,)
    while True:
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        freed = len(parts) - i  # the decremented unit plus all trailing ones
        parts[i] -= 1
        del parts[i + 1 :]
        cap = parts[i]
        while freed > 0:
            chunk = min(cap, freed)
            parts.append(chunk)
            freed -= chunk
        yield tuple(parts)


def _bounded_partitions(n: int, cap: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if cap < 1:
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _bounded_partitions(n - first, first):
            yield (first,) + rest


def enumerate_compositions(n: int, *, max_n: int | None = None) -> Iterator[Composition]:
    """Yield every composition of n into positive parts (2^(n-1) of them)."""
    bound = COMPOSITION_ENUM_BOUND if max_n is None else max_n
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > bound:
        raise EnumerationBoundError(f"n={n} exceeds the enumeration bound {bound}")
    yield from _compositions(n)


def _compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def enumerate_montreal_compositions(
    n: int, *, max_len: int | None = None
) -> Iterator[Composition]:
    """Yield compositions of n with positive endpoints and interior zeros.

    Interior zero runs make this state space infinite, so enumeration is
    cut off at max_len parts (default n).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    limit = n if max_len is None else max_len
    for length in range(1, limit + 1):
        yield from _montreal_fixed_length(n, length)


def _montreal_fixed_length(n: int, length: int) -> Iterator[Composition]:
    if length == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(n - 1, 0, -1):
        for rest in _montreal_tail(n - first, length - 1):
            yield (first,) + rest


def _montreal_tail(n: int, length: int) -> Iterator[Composition]:
    # tail of a Montreal composition: last entry positive, the rest free
    if length == 1:
        if n >= 1:
            yield (n,)
        return
    for v in range(n, -1, -1):
        for rest in _montreal_tail(n - v, length - 1):
            yield (v,) + rest


def format_parts(parts: tuple[int, ...]) -> str:
    """Comma-separated text form; the empty state prints as "0"."""
    if not parts:
        return "0"
    return ",".join(str(p) for p in parts)


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse comma-separated nonnegative integers, e.g. "4,3,3"."""
    pieces = text.strip().split(",")
    if pieces == [""]:
        raise ValueError("empty state text")
    try:
        parts = tuple(int(p) for p in pieces)
    except ValueError:
        raise ValueError(f"malformed state text: {text!r}") from None
    if any(p < 0 for p in parts):
        raise ValueError(f"negative entries in state text: {text!r}")
    return parts


def parts_to_json(parts: tuple[int, ...]) -> dict:
    """Canonical JSON object for a partition or composition."""
    return {"parts": list(parts), "n": sum(parts)}
