#!/usr/bin/env python3
"""
Dense Matrices over Finite Fields
FFMatrix stores entries as codes of one FieldCtx; vectors are tuples of codes.
"""

from typing import Iterable, List, Sequence, Tuple, Union

from ..algebra.field import FieldCtx, FieldElement, common_field
from ..core.exceptions import DimensionMismatch, LinalgError

Vector = Tuple[int, ...]
Entry = Union[int, FieldElement]


def _to_code(ctx: FieldCtx, value: Entry) -> int:
    if isinstance(value, FieldElement):
        return value.embed(ctx).code
    value = int(value)
    if not 0 <= value < ctx.size:
        raise LinalgError(f"Entry {value} outside GF({ctx.size})")
    return value


def vector(ctx: FieldCtx, values: Iterable[Entry]) -> Vector:
    """Vector of codes from codes or elements."""
    return tuple(_to_code(ctx, v) for v in values)


def embed_vector(v: Sequence[int], source: FieldCtx, target: FieldCtx) -> Vector:
    """Move a code vector along the tower (codes are unchanged)."""
    common_field(source, target)
    if any(c >= target.size for c in v):
        raise LinalgError(f"Vector does not lie in GF({target.size})")
    return tuple(v)


def zero_vector(n: int) -> Vector:
    return (0,) * n


class FFMatrix:
    """Immutable dense matrix with entries in a FieldCtx."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx: FieldCtx, rows: Iterable[Iterable[Entry]]):
        data = tuple(tuple(_to_code(ctx, v) for v in row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatch("Matrix dimensions must be positive")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionMismatch("Ragged matrix rows")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("FFMatrix is immutable")

    # -- Constructors --------------------------------------------------------

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> 'FFMatrix':
        return cls(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> 'FFMatrix':
        return cls(ctx, [[0] * cols for _ in range(rows)])

    @classmethod
    def scalar(cls, ctx: FieldCtx, n: int, value: Entry) -> 'FFMatrix':
        c = _to_code(ctx, value)
        return cls(ctx, [[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ctx: FieldCtx, columns: Sequence[Sequence[int]]) -> 'FFMatrix':
        return cls(ctx, zip(*columns))

    # -- Shape ---------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.ctx, self.rows[i][j])

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def transpose(self) -> 'FFMatrix':
        return FFMatrix(self.ctx, zip(*self.rows))

    def embed(self, ctx: FieldCtx) -> 'FFMatrix':
        if ctx == self.ctx:
            return self
        common_field(self.ctx, ctx)
        return FFMatrix(ctx, self.rows)

    # -- Arithmetic ----------------------------------------------------------

    def _lift(self, other: 'FFMatrix') -> Tuple[FieldCtx, 'FFMatrix', 'FFMatrix']:
        ctx = common_field(self.ctx, other.ctx)
        return ctx, self.embed(ctx), other.embed(ctx)

    def __add__(self, other: 'FFMatrix') -> 'FFMatrix':
        ctx, a, b = self._lift(other)
        if a.shape != b.shape:
            raise DimensionMismatch(f"Cannot add {a.shape} and {b.shape}")
        return FFMatrix(ctx, [[ctx.add(x, y) for x, y in zip(ra, rb)]
                              for ra, rb in zip(a.rows, b.rows)])

    def __neg__(self) -> 'FFMatrix':
        ctx = self.ctx
        return FFMatrix(ctx, [[ctx.neg(x) for x in row] for row in self.rows])

    def __sub__(self, other: 'FFMatrix') -> 'FFMatrix':
        return self + (-other)

    def scale(self, value: Entry) -> 'FFMatrix':
        if isinstance(value, FieldElement):
            ctx = common_field(self.ctx, value.ctx)
            c = value.embed(ctx).code
        else:
            ctx, c = self.ctx, self.ctx.from_int(int(value))
        return FFMatrix(ctx, [[ctx.mul(c, x) for x in row] for row in self.rows])

    def __matmul__(self, other: 'FFMatrix') -> 'FFMatrix':
        ctx, a, b = self._lift(other)
        if a.ncols != b.nrows:
            raise DimensionMismatch(f"Cannot multiply {a.shape} by {b.shape}")
        cols = b.columns()
        out = []
        for row in a.rows:
            out_row = []
            for col in cols:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = ctx.add(acc, ctx.mul(x, y))
                out_row.append(acc)
            out.append(out_row)
        return FFMatrix(ctx, out)

    def __mul__(self, other):
        if isinstance(other, FFMatrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product on code vectors."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"Vector of length {len(v)} for {self.shape} matrix")
        ctx = self.ctx
        out = []
        for row in self.rows:
            acc = 0
            for x, y in zip(row, v):
                if x and y:
                    acc = ctx.add(acc, ctx.mul(x, y))
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int) -> 'FFMatrix':
        if not self.is_square:
            raise DimensionMismatch("Only square matrices have powers")
        if e < 0:
            from .gauss import invert
            return invert(self) ** (-e)
        result = FFMatrix.identity(self.ctx, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    # -- Predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    @property
    def is_identity(self) -> bool:
        return all(x == (1 if i == j else 0)
                   for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FFMatrix):
            return NotImplemented
        return self.rows == other.rows and (
            self.ctx.is_subfield_of(other.ctx) or other.ctx.is_subfield_of(self.ctx)
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"FFMatrix({self.to_lists()} over GF({self.ctx.size}))"

    def render(self) -> str:
        """Rows of entries in polynomial notation, columns aligned."""
        cells = [[self.ctx.render(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)
