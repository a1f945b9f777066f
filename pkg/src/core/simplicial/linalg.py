"""
Linear algebra over F_l for boundary matrices.

Matrices are lists of sparse columns ``{row: coefficient}`` with coefficients in 0..l-1.
The sparse path is the lowest-one column reduction, optionally tracking the column operations
(R = D V) and skipping columns already known to reduce to zero. The dense path is numpy
Gaussian elimination used for ranks of small matrices.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from src.common.arith import inverse_mod
from src.common.guards import ResourceGuard, default_guard
from src.common.metrics import ELIMINATION_SECONDS, ELIMINATIONS

logger = logging.getLogger("bcom")

SparseColumn = dict[int, int]


def axpy(target: SparseColumn, factor: int, source: SparseColumn, ell: int) -> None:
    """target -= factor * source, in place, mod ell."""
    for row, value in source.items():
        updated = (target.get(row, 0) - factor * value) % ell
        if updated:
            target[row] = updated
        else:
            target.pop(row, None)


@dataclass
class Reduction:
    """Result of a lowest-one column reduction."""

    ell: int
    columns: list[SparseColumn]
    pivots: dict[int, int]
    transforms: list[SparseColumn | None] | None = None

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def zero_columns(self) -> list[int]:
        return [j for j, column in enumerate(self.columns) if not column]


def reduce_columns(
    columns: Sequence[SparseColumn],
    ell: int,
    track: bool = False,
    cleared: Iterable[int] = (),
) -> Reduction:
    """
    Lowest-one reduction over F_ell.

    Args:
        columns: Sparse columns
        ell: Prime
        track: Record V with R = D V; V_j has lowest nonzero entry 1 at row j
        cleared: Columns known to reduce to zero (their V is not recorded)

    Returns:
        Reduction: Reduced columns, pivot map low -> column, and V if tracked
    """
    cleared = set(cleared)
    reduced: list[SparseColumn] = []
    pivots: dict[int, int] = {}
    transforms: list[SparseColumn | None] | None = [] if track else None
    with ELIMINATION_SECONDS.time():
        for j, original in enumerate(columns):
            if j in cleared:
                reduced.append({})
                if transforms is not None:
                    transforms.append(None)
                continue
            column = {r: v % ell for r, v in original.items() if v % ell}
            v_column: SparseColumn = {j: 1}
            while column:
                low = max(column)
                k = pivots.get(low)
                if k is None:
                    pivots[low] = j
                    break
                pivot_column = reduced[k]
                factor = column[low] * inverse_mod(pivot_column[low], ell) % ell
                axpy(column, factor, pivot_column, ell)
                if transforms is not None:
                    other = transforms[k]
                    assert other is not None
                    axpy(v_column, factor, other, ell)
            reduced.append(column)
            if transforms is not None:
                transforms.append(v_column)
    ELIMINATIONS.labels(path="sparse").inc()
    return Reduction(ell=ell, columns=reduced, pivots=pivots, transforms=transforms)


def dense_rank(matrix: np.ndarray, ell: int) -> int:
    """Rank over F_ell by Gaussian elimination."""
    a = np.array(matrix, dtype=np.int64) % ell
    rows, cols = a.shape
    rank = 0
    with ELIMINATION_SECONDS.time():
        for c in range(cols):
            if rank == rows:
                break
            nonzero = np.flatnonzero(a[rank:, c])
            if nonzero.size == 0:
                continue
            p = rank + int(nonzero[0])
            if p != rank:
                a[[rank, p]] = a[[p, rank]]
            a[rank] = a[rank] * inverse_mod(int(a[rank, c]), ell) % ell
            below = rank + 1 + np.flatnonzero(a[rank + 1 :, c])
            if below.size:
                a[below] = (a[below] - np.outer(a[below, c], a[rank])) % ell
            rank += 1
    ELIMINATIONS.labels(path="dense").inc()
    return rank


def to_dense(columns: Sequence[SparseColumn], rows: int) -> np.ndarray:
    matrix = np.zeros((rows, len(columns)), dtype=np.int64)
    for j, column in enumerate(columns):
        for r, value in column.items():
            matrix[r, j] = value
    return matrix


def rank_mod(
    columns: Sequence[SparseColumn], rows: int, ell: int, guard: ResourceGuard | None = None
) -> int:
    """Rank of a sparse matrix over F_ell, dense when small enough, sparse otherwise."""
    if not columns or rows == 0:
        return 0
    guard = guard or default_guard()
    if guard.use_dense(rows, len(columns)):
        return dense_rank(to_dense(columns, rows), ell)
    logger.info(f"Sparse elimination of a {rows}x{len(columns)} boundary matrix")
    return reduce_columns(columns, ell).rank


def multiply(
    left: Sequence[SparseColumn], right: Sequence[SparseColumn], ell: int
) -> list[SparseColumn]:
    """Sparse product left @ right, with columns of ``right`` indexing columns of ``left``."""
    product = []
    for column in right:
        result: SparseColumn = {}
        for k, value in column.items():
            axpy(result, -value % ell, left[k], ell)
        product.append(result)
    return product
