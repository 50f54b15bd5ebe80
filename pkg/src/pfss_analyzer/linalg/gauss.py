#!/usr/bin/env python3
"""
Gaussian Elimination
Row reduction, rank, null spaces, inverses and products over finite fields.
"""

from typing import List, Optional, Sequence, Tuple

from ..algebra.field import FieldCtx
from ..core.exceptions import DimensionMismatch, SingularMatrix
from .matrix import FFMatrix, Vector


def _rref_rows(ctx: FieldCtx, rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form of a list of code rows (modified in place)."""
    pivots = []
    if not rows:
        return rows, pivots
    n_rows, n_cols = len(rows), len(rows[0])
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if rows[i_row][piv_c] != 0:
                break
        else:
            continue
        rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
        inv = ctx.inv(rows[piv_r][piv_c])
        rows[piv_r] = [ctx.mul(inv, x) for x in rows[piv_r]]
        pivot_row = rows[piv_r]
        for r in range(n_rows):
            fr = rows[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            rows[r] = [ctx.sub(x, ctx.mul(fr, y)) if y else x
                       for x, y in zip(rows[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return rows, pivots


def rref(M: FFMatrix) -> Tuple[FFMatrix, List[int]]:
    """
    Reduced row echelon form.

    Returns:
        (R, pivot columns)
    """
    rows, pivots = _rref_rows(M.ctx, M.to_lists())
    return FFMatrix(M.ctx, rows), pivots


def rank(M: FFMatrix) -> int:
    return len(_rref_rows(M.ctx, M.to_lists())[1])


def vectors_rank(ctx: FieldCtx, vectors: Sequence[Sequence[int]]) -> int:
    """Dimension of the span of code vectors."""
    if not vectors:
        return 0
    return len(_rref_rows(ctx, [list(v) for v in vectors])[1])


def kernel(M: FFMatrix) -> List[Vector]:
    """
    Null space basis.

    One vector per free column, with a 1 in that column and zeros in the
    other free columns, ordered by free column index.

    Returns:
        Basis vectors v with M·v = 0 (empty when M has full column rank)
    """
    ctx = M.ctx
    rows, pivots = _rref_rows(ctx, M.to_lists())
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = [0] * M.ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = ctx.neg(rows[r][free])
        basis.append(tuple(v))
    return basis


def intersect_kernels(matrices: Sequence[FFMatrix]) -> List[Vector]:
    """Basis of the common null space of several matrices with equal column count."""
    if not matrices:
        raise DimensionMismatch("No matrices to intersect")
    ctx = matrices[0].ctx
    stacked = []
    for m in matrices:
        stacked.extend(m.embed(ctx).to_lists())
    return kernel(FFMatrix(ctx, stacked))


def invert(M: FFMatrix) -> FFMatrix:
    """
    Exact inverse.

    Raises:
        DimensionMismatch: If M is not square
        SingularMatrix: If M is not invertible
    """
    if not M.is_square:
        raise DimensionMismatch(f"Cannot invert a {M.shape} matrix")
    n = M.nrows
    augmented = [list(row) + [1 if i == j else 0 for j in range(n)]
                 for i, row in enumerate(M.rows)]
    rows, pivots = _rref_rows(M.ctx, augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(f"Matrix of rank {sum(1 for c in pivots if c < n)} < {n} is singular")
    return FFMatrix(M.ctx, [row[n:] for row in rows])


def is_invertible(M: FFMatrix) -> bool:
    return M.is_square and rank(M) == M.nrows


def solve(M: FFMatrix, b: Sequence[int]) -> Optional[Vector]:
    """One solution of M·x = b, or None when inconsistent."""
    if len(b) != M.nrows:
        raise DimensionMismatch(f"Right-hand side of length {len(b)} for {M.shape}")
    ctx = M.ctx
    augmented = [list(row) + [bi] for row, bi in zip(M.rows, b)]
    rows, pivots = _rref_rows(ctx, augmented)
    if M.ncols in pivots:
        return None
    x = [0] * M.ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][-1]
    return tuple(x)


def in_span(ctx: FieldCtx, basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    return vectors_rank(ctx, list(basis) + [v]) == vectors_rank(ctx, basis)


def matmul_chain(matrices: Sequence[FFMatrix]) -> FFMatrix:
    """
    Product of matrices in the given order (first factor leftmost).

    Raises:
        DimensionMismatch: On an empty list or incompatible shapes
    """
    if not matrices:
        raise DimensionMismatch("Empty matrix chain")
    result = matrices[0]
    for m in matrices[1:]:
        result = result @ m
    return result
