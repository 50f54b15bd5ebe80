#!/usr/bin/env python3
"""
Shift-Invariant Systems
Polynomial periods, cycle sets and orbit lengths of x(k+1) = A x(k).
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.field import FieldCtx
from ..algebra.numbertheory import ceil_log, lcm, lcm_all, order_from_multiple
from ..algebra.poly import Poly, poly_factor
from ..core.constants import DEFAULT_SEED, DEFAULT_STATE_CAP
from ..core.exceptions import (
    SingularMatrix, SingularPolynomial, StateSpaceTooLarge, VerificationFailed,
)
from ..core.logging_config import get_logger
from ..linalg.canonical import elementary_divisors, matrix_poly_eval, minpoly
from ..linalg.gauss import in_span, is_invertible, kernel
from ..linalg.matrix import FFMatrix, Vector, zero_vector

logger = get_logger(__name__)


@dataclass(frozen=True)
class CycleSet:
    """
    Multiset of cycles: entries (count, length) with strictly increasing lengths.
    """
    entries: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> 'CycleSet':
        """Build from {length: count}, dropping empty buckets."""
        return cls(tuple((c, t) for t, c in sorted(counts.items()) if c))

    def as_counts(self) -> Dict[int, int]:
        return {length: count for count, length in self.entries}

    @property
    def lengths(self) -> List[int]:
        return [length for _, length in self.entries]

    @property
    def total_states(self) -> int:
        return sum(count * length for count, length in self.entries)

    def __contains__(self, length: int) -> bool:
        return length in self.lengths

    def __mul__(self, other: 'CycleSet') -> 'CycleSet':
        """Cycle set of a direct sum: n1[T1]·n2[T2] = n1·n2·gcd(T1,T2)[lcm(T1,T2)]."""
        counts: Dict[int, int] = {}
        for c1, t1 in self.entries:
            for c2, t2 in other.entries:
                t = lcm(t1, t2)
                counts[t] = counts.get(t, 0) + c1 * c2 * gcd(t1, t2)
        return CycleSet.from_counts(counts)

    def to_list(self) -> List[Dict[str, int]]:
        return [{"count": count, "length": length} for count, length in self.entries]

    def __str__(self) -> str:
        return "{" + " + ".join(f"{c}[{t}]" for c, t in self.entries) + "}"


def _require_nonsingular(A: FFMatrix):
    if not is_invertible(A):
        raise SingularMatrix("The shift-invariant system matrix must be non-singular")


@lru_cache(maxsize=256)
def _irreducible_period(g: Poly) -> int:
    """Order of x modulo an irreducible g with g(0) != 0."""
    q = g.ctx.size ** g.degree
    x = Poly.x(g.ctx)
    return order_from_multiple(q - 1, lambda e: x.pow_mod(e, g).is_one)


def poly_period(f: Poly, seed: int = DEFAULT_SEED) -> int:
    """
    Smallest e >= 1 with f dividing x^e - 1.

    Args:
        f: Nonzero polynomial with f(0) != 0
        seed: Seed for factorization

    Returns:
        The period of f

    Raises:
        SingularPolynomial: If f(0) = 0
    """
    if f.is_zero or f.coefficient(0) == 0:
        raise SingularPolynomial(f"Polynomial {f} has no period: f(0) = 0")
    if f.degree == 0:
        return 1
    p = f.ctx.p
    period = 1
    for g, c in poly_factor(f, seed):
        period = lcm(period, _irreducible_period(g) * p ** ceil_log(c, p))
    return period


def _divisor_cycle_set(ctx: FieldCtx, g: Poly, c: int) -> CycleSet:
    """Cycle set of the companion matrix of g^c."""
    q, d, p = ctx.size, g.degree, ctx.p
    e = _irreducible_period(g)
    counts = {1: 1}
    for j in range(1, c + 1):
        length = e * p ** ceil_log(j, p)
        states = q ** (j * d) - q ** ((j - 1) * d)
        counts[length] = counts.get(length, 0) + states // length
    return CycleSet.from_counts(counts)


def cycle_set(A: FFMatrix, seed: int = DEFAULT_SEED) -> CycleSet:
    """
    Cycle set of the permutation x -> A x on GF(q)^n from elementary divisors.

    Raises:
        SingularMatrix: If A is singular
    """
    _require_nonsingular(A)
    result = CycleSet(((1, 1),))
    for g, c in elementary_divisors(A, seed):
        result = result * _divisor_cycle_set(A.ctx, g, c)
    logger.debug(f"Cycle set of {A.nrows}x{A.nrows} system over GF({A.ctx.size}): {result}")
    return result


def iter_vectors(ctx: FieldCtx, n: int) -> Iterator[Vector]:
    """Every vector of GF(q)^n in lexicographic code order."""
    return itertools.product(range(ctx.size), repeat=n)


def check_state_cap(ctx: FieldCtx, n: int, cap: int):
    if ctx.size ** n > cap:
        raise StateSpaceTooLarge(
            f"GF({ctx.size})^{n} has {ctx.size ** n} states, above the cap of {cap}"
        )


def exhaustive_cycle_set(A: FFMatrix, cap: int = DEFAULT_STATE_CAP) -> CycleSet:
    """Cycle set by following every state to closure."""
    _require_nonsingular(A)
    check_state_cap(A.ctx, A.nrows, cap)
    visited = set()
    counts: Dict[int, int] = {}
    for start in iter_vectors(A.ctx, A.nrows):
        if start in visited:
            continue
        length = 0
        x = start
        while True:
            visited.add(x)
            x = A.apply(x)
            length += 1
            if x == start:
                break
        counts[length] = counts.get(length, 0) + 1
    return CycleSet.from_counts(counts)


def minimal_annihilator(A: FFMatrix, x: Sequence[int]) -> Poly:
    """Monic f of least degree with f(A) x = 0."""
    ctx = A.ctx
    krylov = [tuple(x)]
    if not any(x):
        return Poly.one(ctx)
    while True:
        nxt = A.apply(krylov[-1])
        if in_span(ctx, krylov, nxt):
            relation = kernel(FFMatrix.from_columns(ctx, krylov + [nxt]))[0]
            return Poly(ctx, relation).monic()
        krylov.append(nxt)


def vector_orbit_length(A: FFMatrix, x: Sequence[int], seed: int = DEFAULT_SEED) -> int:
    """
    Smallest T >= 1 with A^T x = x.

    Raises:
        SingularMatrix: If A is singular
    """
    _require_nonsingular(A)
    return poly_period(minimal_annihilator(A, x), seed)


def _component_witnesses(A: FFMatrix, seed: int) -> List[List[Tuple[int, Vector]]]:
    """
    Per irreducible factor f of the minimal polynomial, the options
    (period, vector) for the f-primary component: zero, or a vector
    whose annihilator is exactly f^j.
    """
    p = A.ctx.p
    options = []
    for f, c in poly_factor(minpoly(A), seed):
        fA = matrix_poly_eval(f, A)
        e = _irreducible_period(f)
        choices: List[Tuple[int, Vector]] = [(1, zero_vector(A.nrows))]
        lower: List[Vector] = []
        power = fA
        for j in range(1, c + 1):
            current = kernel(power)
            witness = next(v for v in current if not in_span(A.ctx, lower, v))
            choices.append((e * p ** ceil_log(j, p), witness))
            lower = current
            power = power @ fA
        options.append(choices)
    return options


def find_vector_with_period(A: FFMatrix, T: int, seed: int = DEFAULT_SEED) -> Optional[Vector]:
    """
    A state whose orbit under A has length exactly T.

    The state is a sum of primary components, one per irreducible factor of
    the minimal polynomial, whose periods have lcm T. Among the valid
    combinations the lexicographically smallest sum is returned.

    Returns:
        The vector, or None when T is not an orbit length of A

    Raises:
        SingularMatrix: If A is singular
        VerificationFailed: If the constructed vector has another period
    """
    _require_nonsingular(A)
    ctx = A.ctx
    n = A.nrows
    if T == 1:
        return zero_vector(n)

    best: Optional[Vector] = None
    for combo in itertools.product(*_component_witnesses(A, seed)):
        if lcm_all(period for period, _ in combo) != T:
            continue
        total = zero_vector(n)
        for _, v in combo:
            total = tuple(ctx.add(a, b) for a, b in zip(total, v))
        if best is None or total < best:
            best = total

    if best is None:
        logger.info(f"No orbit of length {T} for this system")
        return None
    found = vector_orbit_length(A, best, seed)
    if found != T:
        raise VerificationFailed(f"Constructed vector {best} has period {found}, expected {T}")
    return best
