#!/usr/bin/env python3
"""
Canonical Forms
Characteristic and minimal polynomials, invariant factors and Jordan form.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..algebra.field import FieldCtx, FieldElement
from ..algebra.numbertheory import lcm_all
from ..algebra.poly import Poly, poly_factor, poly_roots
from ..algebra.tower import extend_field, find_irreducible
from ..core.constants import DEFAULT_SEED
from ..core.exceptions import DimensionMismatch, LinalgError
from ..core.logging_config import get_logger
from .gauss import invert, kernel, vectors_rank
from .matrix import FFMatrix, Vector

logger = get_logger(__name__)


def _require_square(M: FFMatrix):
    if not M.is_square:
        raise DimensionMismatch(f"Expected a square matrix, got {M.shape}")


def hessenberg(M: FFMatrix) -> FFMatrix:
    """Upper Hessenberg matrix similar to M."""
    _require_square(M)
    ctx = M.ctx
    n = M.nrows
    H = M.to_lists()
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if H[i][j]), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            H[pivot], H[j + 1] = H[j + 1], H[pivot]
            for row in H:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = ctx.inv(H[j + 1][j])
        for i in range(j + 2, n):
            if H[i][j] == 0:
                continue
            u = ctx.mul(H[i][j], inv)
            H[i] = [ctx.sub(a, ctx.mul(u, b)) for a, b in zip(H[i], H[j + 1])]
            for row in H:
                row[j + 1] = ctx.add(row[j + 1], ctx.mul(u, row[i]))
    return FFMatrix(ctx, H)


def charpoly(M: FFMatrix) -> Poly:
    """
    Characteristic polynomial det(xI - M) via Hessenberg reduction.

    Returns:
        Monic Poly of degree n
    """
    H = hessenberg(M).rows
    ctx = M.ctx
    n = M.nrows
    x = Poly.x(ctx)
    p = [Poly.one(ctx)]
    for m in range(1, n + 1):
        pm = (x - Poly(ctx, (H[m - 1][m - 1],))) * p[m - 1]
        t = 1
        for i in range(1, m):
            t = ctx.mul(t, H[m - i][m - i - 1])
            if t == 0:
                break
            c = ctx.mul(t, H[m - i - 1][m - 1])
            if c:
                pm = pm - p[m - i - 1].scale(c)
        p.append(pm)
    return p[n]


def matrix_poly_eval(f: Poly, M: FFMatrix) -> FFMatrix:
    """f(M) by Horner's rule."""
    _require_square(M)
    ctx = M.ctx if f.ctx.is_subfield_of(M.ctx) else f.ctx
    M = M.embed(ctx)
    n = M.nrows
    result = FFMatrix.zeros(ctx, n, n)
    for c in reversed(f.embed(ctx).coeffs):
        result = result @ M + FFMatrix.scalar(ctx, n, c)
    return result


def minpoly(M: FFMatrix) -> Poly:
    """Minimal polynomial: first linear dependency among I, M, M^2, ..."""
    _require_square(M)
    ctx = M.ctx
    n = M.nrows
    powers = [FFMatrix.identity(ctx, n)]
    flat = [sum(powers[0].rows, ())]
    for k in range(1, n + 1):
        powers.append(powers[-1] @ M)
        flat.append(sum(powers[-1].rows, ()))
        if vectors_rank(ctx, flat) <= k:
            # columns of this matrix are vec(M^0..M^k); its kernel is 1-dimensional
            relation = kernel(FFMatrix.from_columns(ctx, flat))[0]
            return Poly(ctx, relation).monic()
    raise LinalgError("Minimal polynomial search exceeded the dimension")


def char_min_poly(M: FFMatrix) -> Tuple[Poly, Poly]:
    """(characteristic polynomial, minimal polynomial)."""
    return charpoly(M), minpoly(M)


def is_nonderogatory(M: FFMatrix) -> bool:
    """True when the minimal polynomial equals the characteristic polynomial."""
    return minpoly(M).degree == M.nrows


def smith_diagonal(M: FFMatrix) -> List[Poly]:
    """
    Diagonal of the Smith normal form of xI - M over the polynomial ring.

    Pivots are chosen by least degree and normalized monic.
    """
    _require_square(M)
    ctx = M.ctx
    n = M.nrows
    A = [[Poly(ctx, (ctx.neg(M.rows[i][j]), 1 if i == j else 0)) for j in range(n)]
         for i in range(n)]

    diagonal = []
    for t in range(n):
        while True:
            candidates = [(A[i][j].degree, i, j) for i in range(t, n) for j in range(t, n)
                          if not A[i][j].is_zero]
            if not candidates:
                diagonal.extend(Poly.zero(ctx) for _ in range(t, n))
                return diagonal
            _, pi, pj = min(candidates)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]

            pivot = A[t][t]
            clean = True
            for i in range(t + 1, n):
                if A[i][t].is_zero:
                    continue
                q, r = divmod(A[i][t], pivot)
                A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                clean = clean and r.is_zero
            for j in range(t + 1, n):
                if A[t][j].is_zero:
                    continue
                q, r = divmod(A[t][j], pivot)
                for row in A:
                    row[j] = row[j] - q * row[t]
                clean = clean and r.is_zero
            if not clean:
                continue

            offender = next((i for i in range(t + 1, n) for j in range(t + 1, n)
                             if not (A[i][j] % pivot).is_zero), None)
            if offender is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[offender])]
        diagonal.append(A[t][t].monic())
    return diagonal


def invariant_factors(M: FFMatrix) -> List[Poly]:
    """
    Invariant factors of M (nonconstant Smith diagonal entries of xI - M).

    Returns:
        Monic polynomials, each dividing the next, with product charpoly(M)
    """
    return [d for d in smith_diagonal(M) if d.degree > 0]


def elementary_divisors(M: FFMatrix, seed: int = DEFAULT_SEED) -> List[Tuple[Poly, int]]:
    """
    Elementary divisors as (irreducible f, exponent c) pairs, one per f^c.

    Sorted by f (degree, coefficients) and then by exponent.
    """
    divisors = []
    for factor in invariant_factors(M):
        divisors.extend(poly_factor(factor, seed))
    return sorted(divisors, key=lambda item: (item[0].sort_key(), item[1]))


@dataclass(frozen=True)
class JordanDecomposition:
    """
    Jordan form over a splitting field.

    Attributes:
        ctx: Splitting field
        blocks: (eigenvalue, size) in canonical order
        S: Similarity with S·M·S⁻¹ = J
        S_inv: Inverse of S; its columns are the Jordan chains
    """
    ctx: FieldCtx
    blocks: Tuple[Tuple[FieldElement, int], ...]
    S: FFMatrix
    S_inv: FFMatrix

    @property
    def size(self) -> int:
        return sum(size for _, size in self.blocks)

    @property
    def is_diagonalizable(self) -> bool:
        return all(size == 1 for _, size in self.blocks)

    @property
    def max_block_size(self) -> int:
        return max(size for _, size in self.blocks)

    def jordan_matrix(self) -> FFMatrix:
        n = self.size
        J = [[0] * n for _ in range(n)]
        offset = 0
        for eigenvalue, size in self.blocks:
            for k in range(size):
                J[offset + k][offset + k] = eigenvalue.code
                if k + 1 < size:
                    J[offset + k][offset + k + 1] = 1
            offset += size
        return FFMatrix(self.ctx, J)

    def reassemble(self) -> FFMatrix:
        """S⁻¹·J·S."""
        return self.S_inv @ self.jordan_matrix() @ self.S


def splitting_context(M: FFMatrix, seed: int = DEFAULT_SEED) -> Tuple[FieldCtx, List[Tuple[Poly, int]]]:
    """Field containing every eigenvalue of M, plus the factored charpoly."""
    factors = poly_factor(charpoly(M), seed)
    degree = lcm_all(f.degree for f, _ in factors)
    ctx = M.ctx
    if degree > 1:
        ctx, _ = extend_field(ctx, find_irreducible(ctx, degree, seed))
        logger.info(f"Splitting field for eigenvalues: degree {degree} over GF({M.ctx.size})")
    return ctx, factors


def _spectrum(M: FFMatrix, seed: int) -> Tuple[FieldCtx, List[Tuple[FieldElement, int]]]:
    ctx, factors = splitting_context(M, seed)
    found = []
    for f, mult in factors:
        for root in poly_roots(f.embed(ctx), seed):
            found.append((root, mult))
    return ctx, sorted(found, key=lambda item: item[0].code)


def eigenvalues(M: FFMatrix, seed: int = DEFAULT_SEED) -> List[Tuple[FieldElement, int]]:
    """(eigenvalue, algebraic multiplicity) in the splitting field, ascending by code."""
    return _spectrum(M, seed)[1]


def _jordan_chains(N: FFMatrix, multiplicity: int) -> List[Tuple[Vector, int]]:
    """Chain tops (v, length) for the nilpotent action of N on a generalized eigenspace."""
    ctx = N.ctx
    kernels = [[]]
    power = N
    while len(kernels[-1]) < multiplicity:
        kernels.append(kernel(power))
        power = power @ N
    height = len(kernels) - 1

    chains: List[Tuple[Vector, int]] = []
    for level in range(height, 0, -1):
        span = list(kernels[level - 1])
        for top, length in chains:
            v = top
            for _ in range(length - level):
                v = N.apply(v)
            span.append(v)
        current = vectors_rank(ctx, span)
        for candidate in kernels[level]:
            if vectors_rank(ctx, span + [candidate]) > current:
                span.append(candidate)
                current += 1
                chains.append((candidate, level))
    return chains


def jordan_form(M: FFMatrix, seed: int = DEFAULT_SEED) -> JordanDecomposition:
    """
    Jordan decomposition over the splitting field of the characteristic polynomial.

    Args:
        M: Square matrix
        seed: Seed for factorization and the splitting-field modulus

    Returns:
        JordanDecomposition with blocks sorted by (eigenvalue code, descending size)
    """
    _require_square(M)
    n = M.nrows
    ctx, spectrum = _spectrum(M, seed)
    Me = M.embed(ctx)

    columns: List[Vector] = []
    blocks = []
    for eigenvalue, mult in spectrum:
        N = Me - FFMatrix.scalar(ctx, n, eigenvalue)
        chains = _jordan_chains(N, mult)
        chains.sort(key=lambda chain: -chain[1])
        for top, length in chains:
            chain = [top]
            for _ in range(length - 1):
                chain.append(N.apply(chain[-1]))
            columns.extend(reversed(chain))
            blocks.append((eigenvalue.embed(ctx), length))

    S_inv = FFMatrix.from_columns(ctx, columns)
    S = invert(S_inv)
    logger.debug(f"Jordan blocks: {[(str(ev), size) for ev, size in blocks]}")
    return JordanDecomposition(ctx=ctx, blocks=tuple(blocks), S=S, S_inv=S_inv)
