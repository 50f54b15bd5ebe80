#!/usr/bin/env python3
"""
Tower Flattening
Single-step field isomorphic to a tower, with the isomorphism in both directions.
"""

from dataclasses import dataclass
from typing import List

from ..core.exceptions import FieldError
from ..core.logging_config import get_logger
from .field import FieldCtx, FieldElement, prime_field
from .poly import Poly

logger = get_logger(__name__)


def _base_digits(code: int, p: int, m: int) -> List[int]:
    """Base-p digits of a code; these are F_p-linear coordinates on every tower."""
    out = []
    for _ in range(m):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _from_digits(digits: List[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _apply(matrix: List[List[int]], v: List[int], p: int) -> List[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in matrix]


def _invert_mod_p(matrix: List[List[int]], p: int) -> List[List[int]]:
    m = len(matrix)
    rows = [list(row) + [1 if i == j else 0 for j in range(m)] for i, row in enumerate(matrix)]
    for c in range(m):
        pivot = next((r for r in range(c, m) if rows[r][c] % p), None)
        if pivot is None:
            raise FieldError("Generator powers are not a basis")
        rows[c], rows[pivot] = rows[pivot], rows[c]
        inv = pow(rows[c][c], -1, p)
        rows[c] = [x * inv % p for x in rows[c]]
        for r in range(m):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[c])]
    return [row[m:] for row in rows]


@dataclass(frozen=True)
class FieldIsomorphism:
    """
    Isomorphism between a tower and a single-step field.

    Attributes:
        source: The tower
        target: The single-step field
        to_source: Columns are the tower codes' digits of g^0..g^(m-1)
        to_target: Inverse of to_source
    """
    source: FieldCtx
    target: FieldCtx
    to_source: List[List[int]]
    to_target: List[List[int]]

    def forward(self, a: FieldElement) -> FieldElement:
        """Tower element to the single-step field."""
        p, m = self.source.p, self.source.degree
        digits = _apply(self.to_target, _base_digits(a.embed(self.source).code, p, m), p)
        return FieldElement(self.target, _from_digits(digits, p))

    def backward(self, a: FieldElement) -> FieldElement:
        """Single-step element back to the tower."""
        p, m = self.source.p, self.source.degree
        digits = _apply(self.to_source, _base_digits(a.code, p, m), p)
        return FieldElement(self.source, _from_digits(digits, p))


def flatten_field(ctx: FieldCtx) -> FieldIsomorphism:
    """
    Single-step context isomorphic to ctx.

    The new modulus is the minimal polynomial over F_p of the primitive
    element, the product of its m Frobenius conjugates.

    Returns:
        FieldIsomorphism from ctx to the flat field
    """
    p, m = ctx.p, ctx.degree
    if m == 1:
        identity = [[1]]
        return FieldIsomorphism(ctx, prime_field(p), identity, identity)

    g = ctx.generator()
    conjugates = [ctx.frobenius(g, i) for i in range(m)]
    minimal = Poly.from_roots(ctx, conjugates)
    if any(c >= p for c in minimal.coeffs):
        raise FieldError("Minimal polynomial of the generator is not over the prime field")
    flat = FieldCtx(p, (minimal.coeffs,))

    columns = []
    power = 1
    for _ in range(m):
        columns.append(_base_digits(power, p, m))
        power = ctx.mul(power, g)
    to_source = [list(row) for row in zip(*columns)]
    logger.debug(f"Flattened GF({ctx.size}) with modulus {minimal}")
    return FieldIsomorphism(ctx, flat, to_source, _invert_mod_p(to_source, p))
