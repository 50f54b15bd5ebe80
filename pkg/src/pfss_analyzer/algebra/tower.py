#!/usr/bin/env python3
"""
Extension Towers
Adjoining roots of irreducible polynomials and taking element N-th roots.
"""

import random
from math import gcd
from typing import Callable, Iterable, Tuple

from ..core.constants import DEFAULT_EXTENSION_CAP_FACTOR, DEFAULT_FIELD_SIZE_CAP, DEFAULT_SEED
from ..core.exceptions import ExtensionBoundExceeded, FieldError, NotIrreducible, ZeroElement
from ..core.logging_config import get_logger
from .field import FieldCtx, FieldElement, element_order
from .poly import Poly, is_irreducible

logger = get_logger(__name__)

Embedding = Callable[[FieldElement], FieldElement]


def extend_field(ctx: FieldCtx, modulus: Poly) -> Tuple[FieldCtx, Embedding]:
    """
    Adjoin a root of an irreducible polynomial to the top of a tower.

    A degree-1 modulus adjoins nothing, so the same context is returned.

    Args:
        ctx: Field to extend
        modulus: Monic irreducible polynomial over ctx

    Returns:
        (extended context, embedding of ctx elements into it)

    Raises:
        NotIrreducible: If the modulus is not monic irreducible over ctx
    """
    modulus = modulus.embed(ctx)
    if modulus.degree < 1:
        raise NotIrreducible(f"Modulus {modulus} has no roots to adjoin")
    if not modulus.is_monic:
        raise NotIrreducible(f"Modulus {modulus} is not monic")
    if modulus.degree == 1:
        logger.debug(f"Degree-1 modulus {modulus}: field unchanged")
        return ctx, lambda a: a.embed(ctx)
    if not is_irreducible(modulus):
        raise NotIrreducible(f"Modulus {modulus} is reducible over GF({ctx.size})")

    extended = FieldCtx(ctx.p, ctx.steps + (modulus.coeffs,))
    logger.info(f"Extended GF({ctx.size}) by {modulus} to GF({ctx.p}^{extended.degree})")
    return extended, lambda a: a.embed(extended)


def find_irreducible(ctx: FieldCtx, degree: int, seed: int = DEFAULT_SEED) -> Poly:
    """
    Seeded search for a monic irreducible polynomial over the top level.

    Args:
        ctx: Coefficient field
        degree: Requested degree (>= 1)
        seed: Seed for the random candidates

    Returns:
        Monic irreducible Poly of the given degree
    """
    if degree < 1:
        raise FieldError(f"Irreducible degree must be positive, got {degree}")
    rng = random.Random(seed)
    if degree == 1:
        return Poly(ctx, (ctx.neg(rng.randrange(ctx.size)), 1))

    tries = 0
    while True:
        tries += 1
        coeffs = [rng.randrange(ctx.size) for _ in range(degree)] + [1]
        if coeffs[0] == 0:
            continue
        candidate = Poly(ctx, coeffs)
        if is_irreducible(candidate):
            logger.debug(f"Irreducible of degree {degree} over GF({ctx.size}) after {tries} tries")
            return candidate


def smallest_subfield(ctx: FieldCtx, codes: Iterable[int]) -> FieldCtx:
    """Shortest prefix of the tower containing every given element code."""
    level = 0
    for code in codes:
        level = max(level, ctx.level_of(code))
    return ctx.prefix(level)


def _cyclic_root(a: FieldElement, n: int) -> FieldElement:
    """An n-th root of a in its own field, assuming one exists."""
    ctx = a.ctx
    order = ctx.size - 1
    k = ctx.log(a.code)
    d = gcd(n, order)
    if k % d:
        raise FieldError(f"{a} has no {n}-th root in GF({ctx.size})")
    reduced = order // d
    x = (k // d) * pow(n // d, -1, reduced) % reduced if reduced > 1 else 0
    return FieldElement(ctx, ctx.pow(ctx.generator(), x))


def element_nth_root(
    a: FieldElement,
    n: int,
    seed: int = DEFAULT_SEED,
    cap_factor: int = DEFAULT_EXTENSION_CAP_FACTOR,
    field_size_cap: int = DEFAULT_FIELD_SIZE_CAP,
) -> Tuple[FieldElement, FieldCtx]:
    """
    N-th root of a nonzero element, extending the field when needed.

    The p-power part of N is undone by the inverse Frobenius. For the part
    prime to p the smallest extension degree e with a root is found from the
    order of the element, and the root is read off a discrete logarithm.

    Args:
        a: Nonzero element
        n: Root index (>= 1)
        seed: Seed for the irreducible used to extend
        cap_factor: Largest allowed extension degree over a's field
        field_size_cap: Largest allowed field size

    Returns:
        (r, ctx) with r in ctx and r^n equal to a embedded in ctx

    Raises:
        ZeroElement: If a is zero
        ExtensionBoundExceeded: If no allowed extension contains a root
    """
    if not a:
        raise ZeroElement("Zero has no N-th root of interest")
    if n < 1:
        raise FieldError(f"Root index must be positive, got {n}")
    ctx = a.ctx
    if a == 1:
        return ctx.one, ctx

    p = ctx.p
    s, prime_part = 0, n
    while prime_part % p == 0:
        prime_part //= p
        s += 1
    r = a.frobenius((-s) % ctx.degree) if s else a
    if prime_part == 1:
        return r, ctx

    target_order = element_order(r)
    q = ctx.size
    e = 1
    while True:
        if e > cap_factor or q ** e > field_size_cap:
            raise ExtensionBoundExceeded(
                f"No {n}-th root of {a} within degree {cap_factor} over GF({q})"
            )
        group = q ** e - 1
        if (group // gcd(prime_part, group)) % target_order == 0:
            break
        e += 1

    if e > 1:
        ctx, _ = extend_field(ctx, find_irreducible(ctx, e, seed))
    root = _cyclic_root(r.embed(ctx), prime_part)
    if root ** n != a.embed(ctx):
        raise FieldError(f"Root check failed for {a} and N={n}")
    return root, ctx
