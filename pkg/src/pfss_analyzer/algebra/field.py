#!/usr/bin/env python3
"""
Finite Field Arithmetic
Prime fields, explicit extension towers and their elements.

An element of a tower is stored as a single integer code. At level i the code
is sum(c_j * q_{i-1}**j) where c_j are codes of level i-1 and q_{i-1} is the
size of level i-1. Level-0 codes are the integers 0..p-1. A code of a lower
level is unchanged when embedded into any level above it, so embedding along
the tower is free and an element lies in level i exactly when its code is
smaller than q_i.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from sympy import isprime

from ..core.constants import GENERATOR_NAMES, LOG_TABLE_LIMIT
from ..core.exceptions import DivisionByZero, FieldError, FieldMismatch, ZeroElement
from ..core.logging_config import get_logger
from .numbertheory import discrete_log, factor_int, order_from_multiple

logger = get_logger(__name__)

Step = Tuple[int, ...]


@dataclass(frozen=True)
class FieldCtx:
    """
    A finite field given as a tower over F_p.

    Attributes:
        p: Characteristic
        steps: Monic moduli, each as ascending codes over the previous level
    """
    p: int
    steps: Tuple[Step, ...] = ()

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"Characteristic must be prime, got {self.p}")
        for step in self.steps:
            if len(step) < 3 or step[-1] != 1:
                raise FieldError(f"Tower modulus must be monic of degree >= 2: {step}")

    # -- Shape ---------------------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self.steps)

    @property
    def top_degree(self) -> int:
        """Degree of the top step over the level below (1 for a prime field)."""
        return len(self.steps[-1]) - 1 if self.steps else 1

    @property
    def degree(self) -> int:
        """Absolute degree m over F_p."""
        m = 1
        for step in self.steps:
            m *= len(step) - 1
        return m

    @property
    def size(self) -> int:
        return self.p ** self.degree

    @property
    def parent(self) -> 'FieldCtx':
        if not self.steps:
            raise FieldError("A prime field has no parent level")
        return FieldCtx(self.p, self.steps[:-1])

    def prefix(self, depth: int) -> 'FieldCtx':
        return FieldCtx(self.p, self.steps[:depth])

    def level_sizes(self) -> List[int]:
        """Sizes of levels 0..depth."""
        sizes = [self.p]
        for step in self.steps:
            sizes.append(sizes[-1] ** (len(step) - 1))
        return sizes

    def is_subfield_of(self, other: 'FieldCtx') -> bool:
        """True when self is a prefix of other's tower."""
        return self.p == other.p and other.steps[:len(self.steps)] == self.steps

    def level_of(self, code: int) -> int:
        """Lowest tower level containing the element with this code."""
        for level, q in enumerate(self.level_sizes()):
            if code < q:
                return level
        raise FieldError(f"Code {code} outside GF({self.size})")

    # -- Elements ------------------------------------------------------------

    def __call__(self, value: Union[int, 'FieldElement']) -> 'FieldElement':
        """Coerce an integer code or element into this field."""
        if isinstance(value, FieldElement):
            return value.embed(self)
        return FieldElement(self, value)

    def from_int(self, n: int) -> int:
        """Code of the prime-field image of an integer."""
        return n % self.p

    @property
    def zero(self) -> 'FieldElement':
        return FieldElement(self, 0)

    @property
    def one(self) -> 'FieldElement':
        return FieldElement(self, 1)

    def codes(self) -> range:
        return range(self.size)

    def elements(self) -> Iterator['FieldElement']:
        for code in range(self.size):
            yield FieldElement(self, code)

    def digits(self, code: int) -> List[int]:
        """Top-level coefficients of an element (ascending, length top_degree)."""
        q = self.parent.size
        out = []
        for _ in range(self.top_degree):
            code, r = divmod(code, q)
            out.append(r)
        return out

    def undigits(self, digits: Sequence[int]) -> int:
        q = self.parent.size
        code = 0
        for c in reversed(digits):
            code = code * q + c
        return code

    # -- Arithmetic on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if not self.steps:
            return (a + b) % p
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if not self.steps:
            return -a % p
        out, place = 0, 1
        while a:
            a, x = divmod(a, p)
            out += (-x % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if not self.steps:
            return a * b % self.p
        tables = _log_tables(self)
        if tables is not None:
            log, exp = tables
            return exp[(log[a] + log[b]) % (self.size - 1)]
        return self._poly_mul(a, b)

    def _poly_mul(self, a: int, b: int) -> int:
        """Schoolbook product of top-level digit vectors, reduced by the top modulus."""
        par = self.parent
        d = self.top_degree
        a_d, b_d = self.digits(a), self.digits(b)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a_d):
            if ai == 0:
                continue
            for j, bj in enumerate(b_d):
                if bj:
                    prod[i + j] = par.add(prod[i + j], par.mul(ai, bj))
        modulus = self.steps[-1]
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                for j in range(d):
                    if modulus[j]:
                        prod[k - d + j] = par.sub(prod[k - d + j], par.mul(c, modulus[j]))
                prod[k] = 0
        return self.undigits(prod[:d])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        if not self.steps:
            return pow(a, e, self.p)
        tables = _log_tables(self)
        if tables is not None:
            log, exp = tables
            return exp[(log[a] * e) % (self.size - 1)]
        e %= self.size - 1
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul(result, a) if result != 1 else a
            e >>= 1
            if e:
                a = self._poly_mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"Zero has no inverse in GF({self.size})")
        if not self.steps:
            return pow(a, -1, self.p)
        tables = _log_tables(self)
        if tables is not None:
            log, exp = tables
            return exp[(-log[a]) % (self.size - 1)]
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, times: int = 1) -> int:
        """a^(p^times)."""
        return self.pow(a, self.p ** (times % self.degree)) if a else 0

    def generator(self) -> int:
        """A primitive element (code) of the multiplicative group."""
        tables = _log_tables(self)
        if tables is not None:
            return tables[1][1]
        return _primitive_element(self)

    def log(self, a: int) -> int:
        """
        Discrete logarithm of a nonzero element to the base generator().

        Raises:
            ZeroElement: If a is zero
        """
        if a == 0:
            raise ZeroElement("Zero has no discrete logarithm")
        tables = _log_tables(self)
        if tables is not None:
            return tables[0][a]
        k = discrete_log(self.mul, self.pow, self.generator(), a, 1, self.size - 1)
        if k is None:
            raise FieldError(f"Discrete log failed in GF({self.size})")
        return k

    # -- Rendering -----------------------------------------------------------

    def generator_name(self, level: Optional[int] = None) -> str:
        level = self.depth if level is None else level
        if level <= len(GENERATOR_NAMES):
            return GENERATOR_NAMES[level - 1]
        return f"g{level}"

    def render(self, code: int) -> str:
        """Polynomial notation, e.g. 'a^2 + a' for GF(8) or 'a*b + 1' in a tower."""
        if not self.steps:
            return str(code)
        par = self.parent
        name = self.generator_name()
        terms = []
        for i, c in reversed(list(enumerate(self.digits(code)))):
            if c == 0:
                continue
            coefficient = par.render(c)
            if i == 0:
                terms.append(coefficient)
                continue
            monomial = name if i == 1 else f"{name}^{i}"
            if c == 1:
                terms.append(monomial)
            elif " + " in coefficient:
                terms.append(f"({coefficient})*{monomial}")
            else:
                terms.append(f"{coefficient}*{monomial}")
        return " + ".join(terms) if terms else "0"

    def describe(self) -> str:
        """Tower header such as 'GF(2) > GF(2^2) [a^2 + a + 1] > GF(2^6) [b^3 + a]'."""
        parts = [f"GF({self.p})"]
        for level in range(1, self.depth + 1):
            ctx = self.prefix(level)
            name = ctx.generator_name()
            modulus = ctx.steps[-1]
            terms = []
            for i in range(len(modulus) - 1, -1, -1):
                c = modulus[i]
                if c == 0:
                    continue
                coefficient = ctx.parent.render(c)
                monomial = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
                if not monomial:
                    terms.append(coefficient)
                elif c == 1:
                    terms.append(monomial)
                else:
                    wrapped = f"({coefficient})" if " + " in coefficient else coefficient
                    terms.append(f"{wrapped}*{monomial}")
            parts.append(f"GF({self.p}^{ctx.degree}) [{' + '.join(terms)}]")
        return " > ".join(parts)

    def __repr__(self) -> str:
        return f"FieldCtx({self.describe()})"


def prime_field(p: int) -> FieldCtx:
    """The prime field F_p."""
    return FieldCtx(p)


def common_field(a: FieldCtx, b: FieldCtx) -> FieldCtx:
    """The larger of two contexts on one tower."""
    if a.is_subfield_of(b):
        return b
    if b.is_subfield_of(a):
        return a
    raise FieldMismatch(f"{a.describe()} and {b.describe()} are not on one tower")


@lru_cache(maxsize=64)
def _primitive_element(ctx: FieldCtx) -> int:
    order = ctx.size - 1
    primes = list(factor_int(order)) if order > 1 else []
    for g in range(1, ctx.size):
        if all(ctx.pow(g, order // q) != 1 for q in primes):
            return g
    raise FieldError(f"No primitive element found in GF({ctx.size})")


@lru_cache(maxsize=64)
def _log_tables(ctx: FieldCtx) -> Optional[Tuple[List[int], List[int]]]:
    """Log/antilog tables for small extension fields, None otherwise."""
    if not ctx.steps or ctx.size > LOG_TABLE_LIMIT:
        return None
    order = ctx.size - 1
    primes = list(factor_int(order)) if order > 1 else []

    def slow_pow(a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = ctx._poly_mul(result, a)
            e >>= 1
            a = ctx._poly_mul(a, a)
        return result

    generator = next(
        g for g in range(1, ctx.size)
        if all(slow_pow(g, order // q) != 1 for q in primes)
    )
    exp = [1] * order
    log = [-1] * ctx.size
    x = 1
    for i in range(order):
        exp[i] = x
        log[x] = i
        x = ctx._poly_mul(x, generator)
    logger.debug(f"Built log tables for GF({ctx.size}) with generator {generator}")
    return log, exp


class FieldElement:
    """An element of a FieldCtx. Immutable."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        code = int(code)
        if not 0 <= code < ctx.size:
            raise FieldError(f"Code {code} outside GF({ctx.size})")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- Coercion ------------------------------------------------------------

    def embed(self, ctx: FieldCtx) -> 'FieldElement':
        """The same element viewed in an extension (or subfield holding it)."""
        if ctx == self.ctx:
            return self
        if self.ctx.is_subfield_of(ctx):
            return FieldElement(ctx, self.code)
        if ctx.is_subfield_of(self.ctx) and self.code < ctx.size:
            return FieldElement(ctx, self.code)
        raise FieldMismatch(
            f"Cannot move {self} from {self.ctx.describe()} to {ctx.describe()}"
        )

    def _pair(self, other) -> Tuple[FieldCtx, int, int]:
        if isinstance(other, FieldElement):
            ctx = common_field(self.ctx, other.ctx)
            return ctx, self.code, other.code
        if isinstance(other, int):
            return self.ctx, self.code, other % self.ctx.p
        return NotImplemented

    # -- Operators -----------------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        ctx, a, b = pair
        return FieldElement(ctx, ctx.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        ctx, a, b = pair
        return FieldElement(ctx, ctx.sub(a, b))

    def __rsub__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        ctx, a, b = pair
        return FieldElement(ctx, ctx.sub(b, a))

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        ctx, a, b = pair
        return FieldElement(ctx, ctx.mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        ctx, a, b = pair
        return FieldElement(ctx, ctx.div(a, b))

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        ctx, a, b = pair
        return FieldElement(ctx, ctx.div(b, a))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self) -> 'FieldElement':
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def frobenius(self, times: int = 1) -> 'FieldElement':
        return FieldElement(self.ctx, self.ctx.frobenius(self.code, times))

    # -- Comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx.p == other.ctx.p and self.code == other.code and (
                self.ctx.is_subfield_of(other.ctx) or other.ctx.is_subfield_of(self.ctx)
            )
        if isinstance(other, int):
            return self.code == other % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"FieldElement({self.ctx.render(self.code)} in GF({self.ctx.size}))"

    def __str__(self) -> str:
        return self.ctx.render(self.code)


def ff_arith(op: str, a: FieldElement, b: Union[FieldElement, int, None] = None) -> FieldElement:
    """
    Apply one field operation.

    Args:
        op: One of add, sub, mul, div, inv, pow
        a: Left operand
        b: Right operand, or the exponent for pow (unused for inv)

    Returns:
        The result in the common field of the operands

    Raises:
        DivisionByZero: For div/inv by zero
        FieldMismatch: If the operands are on unrelated towers
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise FieldError(f"Unknown field operation: {op}")


def element_order(a: FieldElement) -> int:
    """
    Multiplicative order of a nonzero element.

    Raises:
        ZeroElement: If a is zero
    """
    if not a:
        raise ZeroElement("Zero has no multiplicative order")
    ctx = a.ctx
    return order_from_multiple(ctx.size - 1, lambda e: ctx.pow(a.code, e) == 1)
