#!/usr/bin/env python3
"""
Univariate Polynomials over Finite Fields
Arithmetic, gcd, irreducibility testing and factorization.
"""

import random
from typing import Dict, Iterable, List, Tuple, Union

from ..core.constants import DEFAULT_SEED
from ..core.exceptions import DivisionByZero, ZeroPolynomial
from ..core.logging_config import get_logger
from .field import FieldCtx, FieldElement, common_field
from .numbertheory import factor_int

logger = get_logger(__name__)

Scalar = Union[int, FieldElement]


class Poly:
    """Polynomial with coefficients in a FieldCtx, stored as ascending codes."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[Scalar] = ()):
        codes = [_code(ctx, c) for c in coeffs]
        while codes and codes[-1] == 0:
            codes.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(codes))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- Constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> 'Poly':
        return cls(ctx)

    @classmethod
    def one(cls, ctx: FieldCtx) -> 'Poly':
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx: FieldCtx) -> 'Poly':
        return cls(ctx, (0, 1))

    @classmethod
    def monomial(cls, ctx: FieldCtx, degree: int, coefficient: Scalar = 1) -> 'Poly':
        return cls(ctx, [0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, ctx: FieldCtx, roots: Iterable[Scalar]) -> 'Poly':
        """Monic product of (x - r)."""
        result = cls.one(ctx)
        for r in roots:
            result = result * cls(ctx, (ctx.neg(_code(ctx, r)), 1))
        return result

    # -- Shape ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("Zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def elements(self) -> List[FieldElement]:
        return [FieldElement(self.ctx, c) for c in self.coeffs]

    # -- Arithmetic ----------------------------------------------------------

    def _lift(self, other: 'Poly') -> Tuple[FieldCtx, 'Poly', 'Poly']:
        ctx = common_field(self.ctx, other.ctx)
        return ctx, self.embed(ctx), other.embed(ctx)

    def embed(self, ctx: FieldCtx) -> 'Poly':
        if ctx == self.ctx:
            return self
        return Poly(ctx, [FieldElement(self.ctx, c).embed(ctx) for c in self.coeffs])

    def __add__(self, other: 'Poly') -> 'Poly':
        if not isinstance(other, Poly):
            other = Poly(self.ctx, (other,))
        ctx, a, b = self._lift(other)
        n = max(len(a.coeffs), len(b.coeffs))
        return Poly(ctx, [ctx.add(a.coefficient(i), b.coefficient(i)) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other: 'Poly') -> 'Poly':
        if not isinstance(other, Poly):
            other = Poly(self.ctx, (other,))
        return self + (-other)

    def __rsub__(self, other) -> 'Poly':
        return Poly(self.ctx, (other,)) - self

    def __mul__(self, other: Union['Poly', Scalar]) -> 'Poly':
        if isinstance(other, FieldElement):
            ctx = common_field(self.ctx, other.ctx)
            return self.embed(ctx).scale(other.embed(ctx).code)
        if not isinstance(other, Poly):
            return self.scale(self.ctx.from_int(other))
        ctx, a, b = self._lift(other)
        if a.is_zero or b.is_zero:
            return Poly(ctx)
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai == 0:
                continue
            for j, bj in enumerate(b.coeffs):
                if bj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
        return Poly(ctx, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> 'Poly':
        return Poly(self.ctx, [self.ctx.mul(c, a) for a in self.coeffs])

    def __pow__(self, e: int) -> 'Poly':
        result = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        if other.is_zero:
            raise DivisionByZero("Polynomial division by zero")
        ctx, a, b = self._lift(other)
        rem = list(a.coeffs)
        db = b.degree
        inv_lead = ctx.inv(b.lead)
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = ctx.mul(c, inv_lead)
            quot[k - db] = q
            for j, bj in enumerate(b.coeffs):
                if bj:
                    rem[k - db + j] = ctx.sub(rem[k - db + j], ctx.mul(q, bj))
        return Poly(ctx, quot), Poly(ctx, rem[:db] if db > 0 else ())

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[1]

    def monic(self) -> 'Poly':
        if self.is_zero:
            raise ZeroPolynomial("Cannot normalize the zero polynomial")
        return self.scale(self.ctx.inv(self.lead))

    def derivative(self) -> 'Poly':
        ctx = self.ctx
        return Poly(ctx, [ctx.mul(ctx.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def pth_root(self) -> 'Poly':
        """g with g^p = self, for a polynomial whose derivative vanishes."""
        ctx = self.ctx
        back = ctx.degree - 1
        return Poly(ctx, [ctx.frobenius(c, back) for c in self.coeffs[::ctx.p]])

    def pow_mod(self, e: int, modulus: 'Poly') -> 'Poly':
        result = Poly.one(self.ctx) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __call__(self, x: Scalar) -> FieldElement:
        """Horner evaluation."""
        if isinstance(x, FieldElement):
            ctx = common_field(self.ctx, x.ctx)
            xc = x.embed(ctx).code
        else:
            ctx, xc = self.ctx, _code(self.ctx, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, xc), c)
        return FieldElement(ctx, acc)

    # -- Comparison and display ----------------------------------------------

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.degree, self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and (
            self.ctx.is_subfield_of(other.ctx) or other.ctx.is_subfield_of(self.ctx)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return self.render("x")

    def render(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            coefficient = self.ctx.render(c)
            monomial = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not monomial:
                terms.append(coefficient)
            elif c == 1:
                terms.append(monomial)
            elif " + " in coefficient:
                terms.append(f"({coefficient})*{monomial}")
            else:
                terms.append(f"{coefficient}*{monomial}")
        return " + ".join(terms)


def _code(ctx: FieldCtx, value: Scalar) -> int:
    if isinstance(value, FieldElement):
        return value.embed(ctx).code
    return int(value) if 0 <= int(value) < ctx.size else ctx.from_int(int(value))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def poly_gcdex(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """(s, t, g) with s*a + t*b = g = monic gcd(a, b)."""
    ctx = common_field(a.ctx, b.ctx)
    r0, r1 = a.embed(ctx), b.embed(ctx)
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return s0, t0, r0
    inv = ctx.inv(r0.lead)
    return s0.scale(inv), t0.scale(inv), r0.scale(inv)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly.zero(a.ctx)
    return ((a * b) // poly_gcd(a, b)).monic()


def _frobenius_powers(f: Poly, count: int) -> List[Poly]:
    """x^(Q^k) mod f for k = 1..count."""
    q = f.ctx.size
    powers = []
    h = Poly.x(f.ctx) % f
    for _ in range(count):
        h = h.pow_mod(q, f)
        powers.append(h)
    return powers


def is_irreducible(f: Poly) -> bool:
    """
    Rabin's irreducibility test over the top level of f's field.

    Args:
        f: Nonzero polynomial

    Returns:
        True if f is irreducible
    """
    if f.is_zero:
        raise ZeroPolynomial("Irreducibility of the zero polynomial is undefined")
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    x = Poly.x(f.ctx)
    powers = _frobenius_powers(f, n)
    if powers[-1] != x % f:
        return False
    for r in factor_int(n):
        if not poly_gcd(f, powers[n // r - 1] - x).is_one:
            return False
    return True


def square_free_decomposition(f: Poly) -> List[Tuple[Poly, int]]:
    """
    Square-free factors of a monic polynomial with their multiplicities.

    Returns:
        List of (square-free monic factor, multiplicity), factors pairwise coprime
    """
    result: Dict[Poly, int] = {}

    def collect(g: Poly, mult: int):
        if g.degree <= 0:
            return
        dg = g.derivative()
        if dg.is_zero:
            collect(g.pth_root(), mult * g.ctx.p)
            return
        c = poly_gcd(g, dg)
        w = g // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                z = z.monic()
                result[z] = result.get(z, 0) + i * mult
            i += 1
            w, c = y, c // y
        if c.degree > 0:
            collect(c.monic().pth_root(), mult * g.ctx.p)

    collect(f.monic(), 1)
    return list(result.items())


def distinct_degree_factorization(f: Poly) -> List[Tuple[Poly, int]]:
    """Split a monic square-free f into products of equal-degree irreducibles."""
    factors = []
    x = Poly.x(f.ctx)
    q = f.ctx.size
    h = x % f
    i = 1
    while 2 * i <= f.degree:
        h = h.pow_mod(q, f)
        g = poly_gcd(f, h - x)
        if not g.is_one:
            factors.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        factors.append((f.monic(), f.degree))
    return factors


def equal_degree_factorization(f: Poly, d: int, rng: random.Random) -> List[Poly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    if f.degree <= d:
        return [f.monic()]
    ctx = f.ctx
    while True:
        r = Poly(ctx, [rng.randrange(ctx.size) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        if ctx.p == 2:
            h = t = r % f
            for _ in range(ctx.degree * d - 1):
                t = (t * t) % f
                h = h + t
        else:
            h = r.pow_mod((ctx.size ** d - 1) // 2, f) - Poly.one(ctx)
        g = poly_gcd(f, h)
        if 0 < g.degree < f.degree:
            return (equal_degree_factorization(g, d, rng)
                    + equal_degree_factorization(f // g, d, rng))


def poly_factor(f: Poly, seed: int = DEFAULT_SEED) -> List[Tuple[Poly, int]]:
    """
    Factor a polynomial into monic irreducibles.

    Args:
        f: Nonzero polynomial
        seed: Seed for the randomized equal-degree splitting

    Returns:
        (irreducible monic factor, multiplicity) sorted by degree then coefficients

    Raises:
        ZeroPolynomial: If f is zero
    """
    if f.is_zero:
        raise ZeroPolynomial("Cannot factor the zero polynomial")
    rng = random.Random(seed)
    found: Dict[Poly, int] = {}
    for part, mult in square_free_decomposition(f):
        for block, d in distinct_degree_factorization(part):
            for g in equal_degree_factorization(block, d, rng):
                found[g] = found.get(g, 0) + mult
    factors = sorted(found.items(), key=lambda item: item[0].sort_key())
    logger.debug(f"Factored {f} into {len(factors)} irreducible factor(s)")
    return factors


def poly_roots(f: Poly, seed: int = DEFAULT_SEED) -> List[FieldElement]:
    """Distinct roots of f in its own field, ascending by code."""
    roots = []
    for g, _ in poly_factor(f, seed):
        if g.degree == 1:
            roots.append(FieldElement(g.ctx, g.ctx.neg(g.coeffs[0])))
    return sorted(roots, key=lambda r: r.code)
