#!/usr/bin/env python3
"""
Matrix Root Strategies
Decision procedures for X^N = Φ, tried in order by the Floquet layer.
"""

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

from ..algebra.field import FieldCtx, FieldElement
from ..algebra.numbertheory import lcm_all
from ..algebra.poly import Poly
from ..algebra.tower import element_nth_root, extend_field, find_irreducible, smallest_subfield
from ..core.config import RunConfig
from ..core.constants import (
    DEFAULT_BRUTE_FORCE_CAP, DEFAULT_EXTENSION_CAP_FACTOR, DEFAULT_FIELD_SIZE_CAP, DEFAULT_SEED,
    STATUS_NO_ROOT, STATUS_ROOT, STATUS_UNDETERMINED,
)
from ..core.exceptions import ExtensionBoundExceeded, VerificationFailed
from ..core.logging_config import get_logger
from ..linalg.canonical import JordanDecomposition, charpoly, jordan_form, minpoly
from ..linalg.matrix import FFMatrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class RootSettings:
    """Knobs shared by the root strategies."""
    seed: int = DEFAULT_SEED
    cap_extension: int = DEFAULT_EXTENSION_CAP_FACTOR
    field_size_cap: int = DEFAULT_FIELD_SIZE_CAP
    brute_force_cap: int = DEFAULT_BRUTE_FORCE_CAP

    @classmethod
    def from_run_config(cls, run: RunConfig) -> 'RootSettings':
        return cls(
            seed=run.seed,
            cap_extension=run.cap_extension,
            field_size_cap=run.field_size_cap,
            brute_force_cap=run.brute_force_cap,
        )


# -- Results -----------------------------------------------------------------

@dataclass(frozen=True)
class Root:
    """An N-th root, verified and stored over the smallest tower prefix holding it."""
    matrix: FFMatrix
    method: str
    status: str = STATUS_ROOT

    @property
    def ctx(self) -> FieldCtx:
        return self.matrix.ctx


@dataclass(frozen=True)
class NoRootCertificate:
    """
    Evidence that no N-th root exists over any extension.

    Attributes:
        charpoly: Characteristic polynomial of Φ
        minpoly: Minimal polynomial of Φ (equal to charpoly)
        p: Characteristic, dividing N
        N: Root index
        max_block_size: Largest Jordan block of Φ (at least 2)
    """
    charpoly: Poly
    minpoly: Poly
    p: int
    N: int
    max_block_size: int

    def to_dict(self) -> Dict:
        return {
            "charpoly": list(self.charpoly.coeffs),
            "minpoly": list(self.minpoly.coeffs),
            "p": self.p,
            "N": self.N,
            "max_block_size": self.max_block_size,
        }


@dataclass(frozen=True)
class NoRoot:
    reason: str
    certificate: NoRootCertificate
    status: str = STATUS_NO_ROOT


@dataclass(frozen=True)
class Undetermined:
    reason: str
    status: str = STATUS_UNDETERMINED


RootResult = Union[Root, NoRoot, Undetermined]


# -- Problem -----------------------------------------------------------------

class RootProblem:
    """Φ, N and lazily computed canonical data shared across strategies."""

    def __init__(self, phi: FFMatrix, N: int, settings: RootSettings):
        self.phi = phi
        self.N = N
        self.settings = settings

    @property
    def p(self) -> int:
        return self.phi.ctx.p

    @cached_property
    def jordan(self) -> JordanDecomposition:
        return jordan_form(self.phi, self.settings.seed)

    @cached_property
    def nonderogatory(self) -> bool:
        return minpoly(self.phi).degree == self.phi.nrows

    def finish(self, candidate: FFMatrix, method: str) -> Root:
        """
        Verify candidate^N = Φ and contract the candidate to its smallest field.

        Raises:
            VerificationFailed: If the candidate is not a root
        """
        if candidate ** self.N != self.phi:
            raise VerificationFailed(f"{method} produced a matrix whose {self.N}-th power is not Φ")
        ctx = smallest_subfield(candidate.ctx, (c for row in candidate.rows for c in row))
        return Root(matrix=FFMatrix(ctx, candidate.rows), method=method)


def _eigenvalue_roots(problem: RootProblem) -> Tuple[FieldCtx, Dict[int, int]]:
    """
    One field holding an N-th root of every eigenvalue, and the roots by eigenvalue code.

    Raises:
        ExtensionBoundExceeded: If the common extension is above the caps
    """
    jd = problem.jordan
    settings = problem.settings
    N = problem.N
    codes = sorted({ev.code for ev, _ in jd.blocks})

    degrees = []
    for code in codes:
        _, rctx = element_nth_root(FieldElement(jd.ctx, code), N, settings.seed,
                                   settings.cap_extension, settings.field_size_cap)
        degrees.append(rctx.degree // jd.ctx.degree)
    e = lcm_all(degrees)

    ctx = jd.ctx
    if e > 1:
        if e > settings.cap_extension or ctx.size ** e > settings.field_size_cap:
            raise ExtensionBoundExceeded(
                f"Eigenvalue roots need degree {e} over GF({ctx.size})"
            )
        ctx, _ = extend_field(ctx, find_irreducible(ctx, e, settings.seed))
        logger.info(f"Eigenvalue {N}-th roots live in GF({ctx.p}^{ctx.degree})")

    roots = {}
    for code in codes:
        root, rctx = element_nth_root(FieldElement(ctx, code), N, settings.seed,
                                      settings.cap_extension, settings.field_size_cap)
        roots[code] = root.embed(ctx).code
    return ctx, roots


def _series_root(ctx: FieldCtx, N: int, length: int) -> List[int]:
    """
    Coefficients c_0..c_{length-1} of the series with (Σ c_i u^i)^N = 1 + u mod u^length.

    Solved degree by degree; N must be a unit in ctx.
    """
    def truncated_mul(a: List[int], b: List[int]) -> List[int]:
        out = [0] * length
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(length - i):
                if b[j]:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, b[j]))
        return out

    def truncated_pow(a: List[int], e: int) -> List[int]:
        result = [1] + [0] * (length - 1)
        while e:
            if e & 1:
                result = truncated_mul(result, a)
            e >>= 1
            if e:
                a = truncated_mul(a, a)
        return result

    n_inv = ctx.inv(ctx.from_int(N))
    c = [1] + [0] * (length - 1)
    for k in range(1, length):
        current = truncated_pow(c, N)[k]
        target = 1 if k == 1 else 0
        c[k] = ctx.mul(ctx.sub(target, current), n_inv)
    return c


def _assemble(jd: JordanDecomposition, ctx: FieldCtx, blocks: List[FFMatrix]) -> FFMatrix:
    """S⁻¹·diag(blocks)·S over ctx."""
    n = jd.size
    R = [[0] * n for _ in range(n)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block.rows):
            R[offset + i][offset:offset + block.nrows] = row
        offset += block.nrows
    return jd.S_inv.embed(ctx) @ FFMatrix(ctx, R) @ jd.S.embed(ctx)


# -- Strategies --------------------------------------------------------------

class BaseRootStrategy(ABC):
    """Abstract base class for root strategies"""

    name = "base"

    @abstractmethod
    def can_handle(self, problem: RootProblem) -> bool:
        """
        Determine if this strategy applies.

        Args:
            problem: Monodromy matrix, index and settings

        Returns:
            True if this strategy should be tried
        """
        pass

    @abstractmethod
    def solve(self, problem: RootProblem) -> Optional[RootResult]:
        """
        Decide the problem, or return None to pass it to the next strategy.
        """
        pass


class DiagonalizableStrategy(BaseRootStrategy):
    """Root each eigenvalue of a diagonalizable Φ and conjugate back."""

    name = "diagonal"

    def can_handle(self, problem: RootProblem) -> bool:
        return problem.jordan.is_diagonalizable

    def solve(self, problem: RootProblem) -> Optional[RootResult]:
        jd = problem.jordan
        ctx, roots = _eigenvalue_roots(problem)
        blocks = [FFMatrix(ctx, [[roots[ev.code]]]) for ev, _ in jd.blocks]
        return problem.finish(_assemble(jd, ctx, blocks), self.name)


class HenselLiftStrategy(BaseRootStrategy):
    """
    Block-wise roots when N is prime to the characteristic.

    Each block λ(I + u) gets the root μ·Σ c_i u^i with μ^N = λ and the
    series solved in the truncated algebra generated by the nilpotent u.
    """

    name = "hensel"

    def can_handle(self, problem: RootProblem) -> bool:
        return problem.N % problem.p != 0

    def solve(self, problem: RootProblem) -> Optional[RootResult]:
        jd = problem.jordan
        ctx, roots = _eigenvalue_roots(problem)
        blocks = []
        for ev, size in jd.blocks:
            lam = ev.code
            mu = roots[lam]
            series = _series_root(ctx, problem.N, size)
            lam_inv = ctx.inv(lam)
            block = [[0] * size for _ in range(size)]
            for i in range(size):
                entry = ctx.mul(mu, ctx.mul(series[i], ctx.pow(lam_inv, i)))
                for r in range(size - i):
                    block[r][r + i] = entry
            blocks.append(FFMatrix(ctx, block))
        return problem.finish(_assemble(jd, ctx, blocks), self.name)


class NonderogatoryObstructionStrategy(BaseRootStrategy):
    """
    No root exists when p | N, Φ is nonderogatory and has a block of size >= 2.

    A root commutes with Φ, so it is a polynomial g(Φ). On a block λ + t the
    p-th power of g(Φ) has no t term, while Φ does.
    """

    name = "nonderogatory-p-divides-N"

    def can_handle(self, problem: RootProblem) -> bool:
        return (problem.N % problem.p == 0
                and problem.jordan.max_block_size >= 2
                and problem.nonderogatory)

    def solve(self, problem: RootProblem) -> Optional[RootResult]:
        certificate = NoRootCertificate(
            charpoly=charpoly(problem.phi),
            minpoly=minpoly(problem.phi),
            p=problem.p,
            N=problem.N,
            max_block_size=problem.jordan.max_block_size,
        )
        return NoRoot(reason=self.name, certificate=certificate)


class BruteForceStrategy(BaseRootStrategy):
    """Search every matrix over the base field for tiny systems."""

    name = "search"

    def can_handle(self, problem: RootProblem) -> bool:
        n = problem.phi.nrows
        return n <= 3 and problem.phi.ctx.size ** (n * n) <= problem.settings.brute_force_cap

    def solve(self, problem: RootProblem) -> Optional[RootResult]:
        phi = problem.phi
        ctx = phi.ctx
        n = phi.nrows
        for entries in itertools.product(range(ctx.size), repeat=n * n):
            candidate = FFMatrix(ctx, [entries[i * n:(i + 1) * n] for i in range(n)])
            if candidate ** problem.N == phi:
                return problem.finish(candidate, self.name)
        logger.info(f"No {problem.N}-th root over GF({ctx.size}) by exhaustive search")
        return None


class UndeterminedStrategy(BaseRootStrategy):
    """Last resort: report that no branch decided the problem."""

    name = "undetermined"

    def can_handle(self, problem: RootProblem) -> bool:
        return True

    def solve(self, problem: RootProblem) -> Optional[RootResult]:
        return Undetermined(
            reason=f"p = {problem.p} divides N = {problem.N} and Φ is derogatory "
                   f"with a Jordan block of size {problem.jordan.max_block_size}"
        )


DEFAULT_STRATEGIES = (
    DiagonalizableStrategy,
    HenselLiftStrategy,
    NonderogatoryObstructionStrategy,
    BruteForceStrategy,
    UndeterminedStrategy,
)
