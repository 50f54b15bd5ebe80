#!/usr/bin/env python3
"""
Finite-Field Floquet Transform
N-th roots of the monodromy, the periodic change of state P(k) and the
equivalent shift-invariant system.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from ..algebra.field import FieldCtx, common_field
from ..algebra.numbertheory import divisors, lcm
from ..core.constants import DEFAULT_SEED
from ..core.exceptions import (
    DimensionMismatch, FieldMismatch, NotAnExtension, RootMismatch, SingularMatrix,
)
from ..core.logging_config import get_logger
from ..linalg.canonical import charpoly, jordan_form, minpoly
from ..linalg.gauss import invert, is_invertible, rank
from ..linalg.matrix import FFMatrix, Vector
from .lfss import cycle_set
from .pfss import Pfss, monodromy, transition
from .root_strategies import (
    DEFAULT_STRATEGIES, BaseRootStrategy, NoRootCertificate, Root, RootProblem, RootResult,
    RootSettings, Undetermined,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class FloquetData:
    """
    Floquet transform of a periodic system.

    Attributes:
        A_tilde: Matrix of the equivalent shift-invariant system
        ctx: Field of A_tilde and P
        P: P(0) = I, ..., P(N-1)
    """
    A_tilde: FFMatrix
    ctx: FieldCtx
    P: Tuple[FFMatrix, ...]

    @property
    def period(self) -> int:
        return len(self.P)

    def transform(self, k: int) -> FFMatrix:
        return self.P[k % self.period]


def matrix_nth_root(
    phi: FFMatrix,
    N: int,
    settings: Optional[RootSettings] = None,
    strategies: Optional[Sequence[BaseRootStrategy]] = None,
) -> RootResult:
    """
    Decide whether X^N = Φ has a solution over some extension, and find one.

    Strategies are tried in priority order: diagonalizable Φ, Hensel lifting
    when N is prime to p, the nonderogatory obstruction, a bounded search
    over the base field, and finally Undetermined.

    Args:
        phi: Non-singular square matrix
        N: Root index (>= 1)
        settings: Seed and caps
        strategies: Override of the strategy chain

    Returns:
        Root, NoRoot or Undetermined

    Raises:
        SingularMatrix: If phi is singular
        ExtensionBoundExceeded: If a root needs a field above the caps
    """
    if not is_invertible(phi):
        raise SingularMatrix("The monodromy matrix must be non-singular")
    if N < 1:
        raise DimensionMismatch(f"Root index must be positive, got {N}")
    settings = settings or RootSettings()
    if strategies is None:
        strategies = [cls() for cls in DEFAULT_STRATEGIES]

    problem = RootProblem(phi, N, settings)
    for strategy in strategies:
        if not strategy.can_handle(problem):
            continue
        logger.debug(f"Trying root strategy {strategy.name}")
        result = strategy.solve(problem)
        if result is not None:
            logger.info(f"Root decision for N={N}: {result.status} via {strategy.name}")
            return result
    return Undetermined(reason="no strategy applied")


def floquet_transform(sys: Pfss, A_tilde: FFMatrix) -> FloquetData:
    """
    Build P(0..N-1) from P(0) = I and P(i) = Ã·P(i-1)·A(i-1)⁻¹.

    Args:
        sys: Non-singular periodic system
        A_tilde: An N-th root of the monodromy matrix

    Returns:
        FloquetData with every conjugation identity verified

    Raises:
        RootMismatch: If A_tilde^N differs from the monodromy
    """
    try:
        ctx = common_field(sys.ctx, A_tilde.ctx)
    except FieldMismatch as e:
        raise RootMismatch(f"Root and system fields are unrelated: {e}") from e
    N = sys.period
    A_tilde = A_tilde.embed(ctx)
    if A_tilde ** N != monodromy(sys).embed(ctx):
        raise RootMismatch(f"Candidate root does not satisfy Ã^{N} = Φ")

    matrices = [m.embed(ctx) for m in sys.matrices]
    P = [FFMatrix.identity(ctx, sys.n)]
    for i in range(1, N + 1):
        P.append(A_tilde @ P[i - 1] @ invert(matrices[i - 1]))
    if not P[N].is_identity:
        raise RootMismatch("Floquet recursion does not close: P(N) != I")

    P = P[:N]
    for k in range(N):
        if P[(k + 1) % N] @ matrices[k] @ invert(P[k]) != A_tilde:
            raise RootMismatch(f"Conjugation identity fails at k = {k}")
    logger.debug(f"Floquet transform verified over GF({ctx.size}) for N={N}")
    return FloquetData(A_tilde=A_tilde, ctx=ctx, P=tuple(P))


def floquet_from_root(sys: Pfss, result: RootResult) -> Optional[FloquetData]:
    """Floquet data when the root decision produced a root, else None."""
    if isinstance(result, Root):
        return floquet_transform(sys, result.matrix)
    return None


def equivalent_lfss(fd: FloquetData) -> FFMatrix:
    """Ã, the matrix of x̃(k+1) = Ã x̃(k)."""
    return fd.A_tilde


def equivalent_state(fd: FloquetData, x: Sequence[int], k: int = 0) -> Vector:
    """x̃(k) = P(k)·x(k); at k = 0 this is x itself."""
    return fd.transform(k).apply(tuple(x))


def van_dooren_condition(sys: Pfss) -> bool:
    """
    True when, for each window length i = 1..n, the rank of the i-fold
    product starting at phase j does not depend on j.
    """
    for i in range(1, sys.n + 1):
        ranks = {rank(transition(sys, j + i, j)) for j in range(sys.period)}
        if len(ranks) > 1:
            logger.debug(f"Rank condition fails for window {i}: ranks {sorted(ranks)}")
            return False
    return True


def extend_system(sys: Pfss, ctx: FieldCtx) -> Pfss:
    """
    The same system over an extension field.

    Raises:
        NotAnExtension: If ctx does not contain the system field
    """
    if not sys.ctx.is_subfield_of(ctx):
        raise NotAnExtension(f"GF({ctx.size}) does not extend GF({sys.ctx.size}) along the tower")
    return Pfss(ctx, tuple(m.embed(ctx) for m in sys.matrices))


def verify_no_root_certificate(phi: FFMatrix, N: int, certificate: NoRootCertificate,
                               seed: int = DEFAULT_SEED) -> bool:
    """Recompute every claim of a nonderogatory obstruction independently."""
    cp, mp = charpoly(phi), minpoly(phi)
    if cp != mp or cp != certificate.charpoly or mp != certificate.minpoly:
        return False
    if certificate.p != phi.ctx.p or certificate.N != N or N % phi.ctx.p:
        return False
    max_block = jordan_form(phi, seed).max_block_size
    return max_block >= 2 and max_block == certificate.max_block_size


def possible_periods(sys: Pfss, fd: FloquetData, seed: int = DEFAULT_SEED) -> List[int]:
    """Divisors of lcm(T, N) over the cycle lengths T of the equivalent system."""
    periods: Set[int] = set()
    for T in cycle_set(fd.A_tilde, seed).lengths:
        periods.update(divisors(lcm(T, sys.period)))
    return sorted(periods)

