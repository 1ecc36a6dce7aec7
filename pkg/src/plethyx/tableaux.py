"""Littlewood-Richardson tableaux and coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import Partition, SkewShape, contains


@dataclass(frozen=True)
class LRTableau:
    """A semistandard filling of ``shape`` whose reverse reading word is a lattice word."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]  # entries of the skew part of each row

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        inner = self.shape.inner
        return {
            (i, inner.part(i) + k): v
            for i, row in enumerate(self.rows)
            for k, v in enumerate(row)
        }

    @property
    def content(self) -> Partition:
        counts: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        return Partition(counts.get(k, 0) for k in range(1, len(counts) + 1))

    def __str__(self) -> str:
        inner = self.shape.inner
        rows = []
        for i, row in enumerate(self.rows):
            cells = ["."] * inner.part(i) + [str(v) for v in row]
            rows.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(rows) + "]"


def iter_lr_tableaux(shape: SkewShape, content: Sequence[int]) -> Iterator[LRTableau]:
    """Backtracking over boxes in reading order (rows top to bottom, right to left).

    Filling each row right to left makes the lattice condition a running
    prefix check.
    """
    lam, mu = shape
    nu = Partition(content)
    if not contains(lam, mu) or lam.size != mu.size + nu.size:
        return
    n_rows = len(lam)
    width = [lam[i] - mu.part(i) for i in range(n_rows)]
    grid = [[0] * lam[i] for i in range(n_rows)]
    counts = [0] * (len(nu) + 2)
    cells = [(i, j) for i in range(n_rows) for j in range(lam[i] - 1, mu.part(i) - 1, -1)]
    n_cells = len(cells)
    k = len(nu)

    def rec(idx):
        if idx == n_cells:
            yield LRTableau(
                shape,
                tuple(tuple(grid[i][mu.part(i):]) for i in range(n_rows)),
            )
            return
        i, j = cells[idx]
        # row weakly increasing: entry <= right neighbour (already placed)
        hi = grid[i][j + 1] if j + 1 < lam[i] else k
        # column strict: entry > entry above (above is either inner or placed)
        lo = 1
        if i > 0 and j >= mu.part(i - 1):
            lo = grid[i - 1][j] + 1
        # an entry v in row i needs v <= i + 1 (lattice + column strictness)
        hi = min(hi, i + 1)
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[i][j] = v
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1
        grid[i][j] = 0

    if any(w < 0 for w in width):
        return
    yield from rec(0)


def enumerate_lr_tableaux(shape: SkewShape, content: Sequence[int]) -> list[LRTableau]:
    return list(iter_lr_tableaux(shape, content))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{mu,nu}``: the number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not contains(lam, mu) or lam.size != mu.size + nu.size:
        return 0
    return sum(1 for _ in iter_lr_tableaux(SkewShape(lam, mu), nu))
