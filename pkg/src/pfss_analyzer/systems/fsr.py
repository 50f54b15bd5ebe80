#!/usr/bin/env python3
"""
Periodic Feedback Shift Registers
A master LFSR drives the coefficients of a slave register; the slave is a
periodic system whose period is the master's.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.field import FieldCtx
from ..core.exceptions import DimensionMismatch, NotPeriodic, WiringError
from ..core.logging_config import get_logger
from ..linalg.matrix import FFMatrix, Vector
from .pfss import Pfss

logger = get_logger(__name__)

KIND_FIBONACCI = "fibonacci"
KIND_GALOIS = "galois"


@dataclass(frozen=True)
class Tap:
    """
    One slave coefficient: a master state coordinate or a constant.

    Exactly one of master and const is set.
    """
    master: Optional[int] = None
    const: Optional[int] = None

    def value(self, y: Sequence[int]) -> int:
        return y[self.master] if self.master is not None else self.const

    def to_dict(self) -> dict:
        return {"master": self.master} if self.master is not None else {"const": self.const}


@dataclass(frozen=True)
class MasterLfsr:
    """Linear master register y(k+1) = M y(k) with a fixed start."""
    ctx: FieldCtx
    transition: FFMatrix
    initial: Vector

    def __post_init__(self):
        if not self.transition.is_square:
            raise DimensionMismatch(f"Master transition has shape {self.transition.shape}")
        if len(self.initial) != self.transition.nrows:
            raise DimensionMismatch(
                f"Master state of length {len(self.initial)} for a {self.transition.nrows}-stage register"
            )


@dataclass(frozen=True)
class PfsrSpec:
    """
    A compositional register.

    Attributes:
        kind: fibonacci (coefficients in the bottom row of a companion
            matrix) or galois (coefficients in the first column)
        master: Driving LFSR
        slave_dim: Number of slave stages n
        wiring: n taps, one per slave coefficient
    """
    kind: str
    master: MasterLfsr
    slave_dim: int
    wiring: Tuple[Tap, ...]

    @property
    def ctx(self) -> FieldCtx:
        return self.master.ctx


def master_orbit(m: MasterLfsr) -> Tuple[List[Vector], int]:
    """
    States of the master over one period.

    Returns:
        (states y(0..N-1), N)

    Raises:
        NotPeriodic: If the initial state is not on a cycle
    """
    limit = m.ctx.size ** len(m.initial)
    states = [tuple(m.initial)]
    seen = {states[0]}
    y = m.transition.apply(states[0])
    while y != states[0]:
        if y in seen or len(states) >= limit:
            raise NotPeriodic(f"Master state {list(m.initial)} is not on a cycle")
        seen.add(y)
        states.append(y)
        y = m.transition.apply(y)
    logger.debug(f"Master period {len(states)}")
    return states, len(states)


def _check_wiring(spec: PfsrSpec):
    if spec.kind not in (KIND_FIBONACCI, KIND_GALOIS):
        raise WiringError(f"Unknown register kind: {spec.kind}")
    if spec.slave_dim < 1:
        raise WiringError(f"Slave needs at least one stage, got {spec.slave_dim}")
    if len(spec.wiring) != spec.slave_dim:
        raise WiringError(f"{len(spec.wiring)} taps for {spec.slave_dim} slave stages")
    width = len(spec.master.initial)
    for i, tap in enumerate(spec.wiring):
        if (tap.master is None) == (tap.const is None):
            raise WiringError(f"Tap {i} must name either a master stage or a constant")
        if tap.master is not None and not 0 <= tap.master < width:
            raise WiringError(f"Tap {i} reads master stage {tap.master} of {width}")
        if tap.const is not None and not 0 <= tap.const < spec.ctx.size:
            raise WiringError(f"Tap {i} constant {tap.const} outside GF({spec.ctx.size})")


def slave_matrix(spec: PfsrSpec, y: Sequence[int]) -> FFMatrix:
    """Slave matrix for master state y."""
    n = spec.slave_dim
    w = [tap.value(y) for tap in spec.wiring]
    rows = [[0] * n for _ in range(n)]
    if spec.kind == KIND_FIBONACCI:
        for i in range(n - 1):
            rows[i][i + 1] = 1
        rows[n - 1] = w
    else:
        for i in range(n):
            rows[i][0] = w[i]
            if i + 1 < n:
                rows[i][i + 1] = 1
    return FFMatrix(spec.ctx, rows)


def build_pfss(spec: PfsrSpec) -> Pfss:
    """
    Periodic system of the slave register.

    Raises:
        WiringError: On malformed wiring
        NotPeriodic: If the master does not cycle
    """
    _check_wiring(spec)
    states, N = master_orbit(spec.master)
    matrices = tuple(slave_matrix(spec, y) for y in states)
    for k, flag in enumerate(step_nonsingular(spec, states)):
        if not flag:
            logger.warning(f"Slave matrix A({k}) is singular")
    return Pfss(spec.ctx, matrices)


def step_nonsingular(spec: PfsrSpec, states: Optional[List[Vector]] = None) -> List[bool]:
    """
    Non-singularity of each slave matrix: the coefficient feeding stage 0
    (fibonacci) or the last stage (galois) must be nonzero.
    """
    if states is None:
        states, _ = master_orbit(spec.master)
    index = 0 if spec.kind == KIND_FIBONACCI else spec.slave_dim - 1
    return [spec.wiring[index].value(y) != 0 for y in states]


def keystream(spec: PfsrSpec, x0: Sequence[int], steps: int, tap: int = 0) -> List[int]:
    """
    Tapped slave coordinate at times 0..steps-1.

    Raises:
        WiringError: If the tap is outside the slave
    """
    if not 0 <= tap < spec.slave_dim:
        raise WiringError(f"Tap {tap} outside a {spec.slave_dim}-stage slave")
    system = build_pfss(spec)
    if len(x0) != system.n:
        raise DimensionMismatch(f"Slave state of length {len(x0)} for n = {system.n}")
    out = []
    x = tuple(x0)
    for k in range(steps):
        out.append(x[tap])
        x = system.step(k, x)
    return out


def simulate_combined(spec: PfsrSpec, x0: Sequence[int], steps: int) -> List[Tuple[Vector, Vector]]:
    """
    Run master and slave together from the register equations.

    Returns:
        (y(k), x(k)) for k = 0..steps
    """
    _check_wiring(spec)
    ctx = spec.ctx
    n = spec.slave_dim
    y = tuple(spec.master.initial)
    x = tuple(x0)
    if len(x) != n:
        raise DimensionMismatch(f"Slave state of length {len(x)} for n = {n}")
    out = [(y, x)]
    for _ in range(steps):
        w = [t.value(y) for t in spec.wiring]
        if spec.kind == KIND_FIBONACCI:
            feedback = 0
            for wi, xi in zip(w, x):
                feedback = ctx.add(feedback, ctx.mul(wi, xi))
            x = x[1:] + (feedback,)
        else:
            x = tuple(ctx.add(ctx.mul(w[i], x[0]), x[i + 1] if i + 1 < n else 0) for i in range(n))
        y = spec.master.transition.apply(y)
        out.append((y, x))
    return out


def sequence_period(seq: Sequence[int]) -> int:
    """Least d >= 1 with seq[i + d] = seq[i] wherever both are defined (len(seq) if none)."""
    size = len(seq)
    for d in range(1, size):
        if all(seq[i + d] == seq[i] for i in range(size - d)):
            return d
    return max(size, 1)
