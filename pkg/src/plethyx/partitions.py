"""Partitions, skew shapes and strip predicates.

A :class:`Partition` is an immutable tuple of weakly decreasing positive
integers.  The empty partition is the empty tuple and prints as ``[]``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self):
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def transpose(self) -> "Partition":
        return transpose(self)

    def __repr__(self) -> str:
        return format_partition(self, brackets=True)

    __str__ = __repr__


EMPTY = Partition()


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewShape":
        outer, inner = Partition(outer), Partition(inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        return cls(outer, inner)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def boxes(self) -> list[tuple[int, int]]:
        """Box coordinates ``(row, col)``, 0-based, in row-major order."""
        return [
            (i, j)
            for i, row in enumerate(self.outer)
            for j in range(self.inner.part(i), row)
        ]

    def transpose(self) -> "SkewShape":
        return SkewShape(transpose(self.outer), transpose(self.inner))

    def __repr__(self) -> str:
        return f"{self.outer}/{self.inner}"


@lru_cache(maxsize=None)
def _transpose(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def transpose(lam: Sequence[int]) -> Partition:
    """Conjugate partition: the ``i``-th part counts parts ``>= i``."""
    return Partition(_transpose(tuple(lam)))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu`` fits inside ``lam`` (with zero padding)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def is_horizontal_strip(shape: SkewShape) -> bool:
    """No two boxes of ``outer/inner`` share a column."""
    lam, mu = shape
    if not contains(lam, mu):
        return False
    n = len(lam)
    for i in range(n):
        nxt = lam[i + 1] if i + 1 < n else 0
        m = mu[i] if i < len(mu) else 0
        if not (lam[i] >= m >= nxt):
            return False
    return True


def is_vertical_strip(shape: SkewShape) -> bool:
    """No two boxes of ``outer/inner`` share a row."""
    return is_horizontal_strip(shape.transpose())


def enumerate_partitions(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> list[Partition]:
    """All partitions of ``n`` within the bounds, decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(iter_partitions(n, max_part, max_length))


def iter_partitions(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    if max_part is None or max_part > n:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, cap, slots, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            prefix.append(first)
            yield from rec(remaining - first, first, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, max_part, max_length, [])


def partitions_up_to(n: int, max_part: int | None = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from iter_partitions(k, max_part)


def sort_key(lam: Partition) -> tuple:
    """Canonical order: decreasing degree, then decreasing lexicographic."""
    return (-lam.size, tuple(-p for p in lam))


def horizontal_strips(mu: Partition, r: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Partitions ``lam`` with ``lam/mu`` a horizontal strip of ``r`` boxes.

    If ``bound`` is given, only ``lam`` contained in it are produced.
    """
    n = len(mu)
    # row i may grow up to mu[i-1] (row 0 unbounded); one extra new row
    caps = [None] + [mu[i - 1] - mu[i] for i in range(1, n)] + [mu[n - 1] if n else None]
    rows = n + 1
    out = list(mu) + [0]

    def rec(i, left):
        if i == rows:
            if left == 0:
                lam = Partition(out)
                if bound is None or contains(bound, lam):
                    yield lam
            return
        cap = left if caps[i] is None else min(caps[i], left)
        if bound is not None:
            cap = min(cap, (bound[i] if i < len(bound) else 0) - out[i])
        for add in range(cap, -1, -1):
            out[i] += add
            yield from rec(i + 1, left - add)
            out[i] -= add

    if r < 0:
        return
    yield from rec(0, r)


def vertical_strips(mu: Partition, r: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Partitions ``lam`` with ``lam/mu`` a vertical strip of ``r`` boxes."""
    tb = transpose(bound) if bound is not None else None
    for lam_t in horizontal_strips(transpose(mu), r, tb):
        yield transpose(lam_t)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``, ``"[3,2,1]"`` or ``"[]"``."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
    if not s:
        return EMPTY
    try:
        return Partition(int(p) for p in s.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


def format_partition(lam: Sequence[int], brackets: bool = False) -> str:
    if not lam:
        return "[]"
    body = ",".join(str(p) for p in lam)
    return f"[{body}]" if brackets else body
