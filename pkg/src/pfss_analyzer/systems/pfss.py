#!/usr/bin/env python3
"""
Periodic Finite State Systems
The model x(k+1) = A(k mod N) x(k), its monodromy, the subspace of
coinciding dynamics and the exhaustive simulation oracle.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime

from ..algebra.field import FieldCtx
from ..algebra.numbertheory import divisors
from ..core.constants import DEFAULT_STATE_CAP
from ..core.exceptions import (
    BadRange, DimensionMismatch, SingularSystem, StepCapExceeded,
)
from ..core.logging_config import get_logger
from ..linalg.gauss import in_span, intersect_kernels, is_invertible, matmul_chain
from ..linalg.matrix import FFMatrix, Vector
from .lfss import check_state_cap, iter_vectors

logger = get_logger(__name__)


@dataclass(frozen=True)
class Pfss:
    """
    A periodic system x(k+1) = A(k) x(k) with A(k+N) = A(k).

    Attributes:
        ctx: Field of the entries
        matrices: A(0), ..., A(N-1), all n x n
    """
    ctx: FieldCtx
    matrices: Tuple[FFMatrix, ...]

    def __post_init__(self):
        if not self.matrices:
            raise DimensionMismatch("A periodic system needs at least one matrix")
        n = self.matrices[0].nrows
        for k, m in enumerate(self.matrices):
            if m.shape != (n, n):
                raise DimensionMismatch(f"A({k}) has shape {m.shape}, expected {(n, n)}")
            if m.ctx != self.ctx:
                raise DimensionMismatch(f"A({k}) is not over the system field")

    @classmethod
    def from_lists(cls, ctx: FieldCtx, matrices: Sequence[Sequence[Sequence[int]]]) -> 'Pfss':
        return cls(ctx, tuple(FFMatrix(ctx, m) for m in matrices))

    @property
    def n(self) -> int:
        """State dimension."""
        return self.matrices[0].nrows

    @property
    def period(self) -> int:
        """N."""
        return len(self.matrices)

    def A(self, k: int) -> FFMatrix:
        return self.matrices[k % self.period]

    def step(self, k: int, x: Sequence[int]) -> Vector:
        """x(k+1) from x(k)."""
        return self.A(k).apply(x)


@dataclass(frozen=True)
class Trajectory:
    """
    States x(0..T) of one closed trajectory.

    Attributes:
        states: x(0), ..., x(T) with x(T) = x(0)
        period: Temporal period T
        returns: Number of distinct phase-0 states on the trajectory
    """
    states: Tuple[Vector, ...]
    period: int
    returns: int = 1

    @property
    def initial(self) -> Vector:
        return self.states[0]


@dataclass
class CoprimeReport:
    """Outcome of checking the gcd(T, N) != 1 theorem and its corollaries over all states."""
    passed: bool
    period: int
    subspace_dimension: int
    states_checked: int = 0
    failures: List[Dict] = field(default_factory=list)

    @property
    def witness(self) -> Optional[Dict]:
        return self.failures[0] if self.failures else None

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "period": self.period,
            "subspace_dimension": self.subspace_dimension,
            "states_checked": self.states_checked,
            "witness": self.witness,
            "failures": list(self.failures),
        }


def is_nonsingular(sys: Pfss) -> bool:
    """True when every A(k) is invertible."""
    return all(is_invertible(m) for m in sys.matrices)


def transition(sys: Pfss, k1: int, k0: int) -> FFMatrix:
    """
    State transition S(k1, k0) = A(k1-1)···A(k0).

    Raises:
        BadRange: Unless k1 >= k0 >= 0
    """
    if not k1 >= k0 >= 0:
        raise BadRange(f"Transition needs k1 >= k0 >= 0, got k1={k1}, k0={k0}")
    if k1 == k0:
        return FFMatrix.identity(sys.ctx, sys.n)
    return matmul_chain([sys.A(k) for k in range(k1 - 1, k0 - 1, -1)])


def monodromy(sys: Pfss) -> FFMatrix:
    """Φ = A(N-1)···A(0)."""
    return transition(sys, sys.period, 0)


def subspace_A(sys: Pfss) -> List[Vector]:
    """
    Basis of the intersection of ker(A(i) - A(j)) over all pairs i < j.

    For N = 1 there are no pairs and the whole space is returned.
    """
    if sys.period == 1:
        return [tuple(1 if i == j else 0 for i in range(sys.n)) for j in range(sys.n)]
    # ker(A(i) - A(j)) for all pairs equals the common kernel of A(0) - A(j)
    differences = [sys.A(0) - sys.A(j) for j in range(1, sys.period)]
    return intersect_kernels(differences)


def fixed_points(sys: Pfss) -> List[Vector]:
    """Basis of the states fixed by every A(k)."""
    eye = FFMatrix.identity(sys.ctx, sys.n)
    return intersect_kernels([m - eye for m in sys.matrices])


def _temporal_period(states: List[Vector]) -> int:
    """Least cyclic shift fixing a closed state sequence x(0..P-1)."""
    P = len(states)
    for d in divisors(P):
        if all(states[(k + d) % P] == states[k] for k in range(P)):
            return d
    return P


def simulate_orbit(sys: Pfss, x0: Sequence[int], cap_states: int = DEFAULT_STATE_CAP) -> Trajectory:
    """
    Follow x0 until the whole trajectory repeats.

    The state first returns to x0 at phase 0 after P = L·N steps; the
    temporal period is the least divisor of P that shifts the sequence
    onto itself, so revisits at other phases do not end the period.

    Args:
        sys: The system
        x0: Initial state
        cap_states: Bound on phase-0 returns examined

    Returns:
        Trajectory with states x(0..T)

    Raises:
        StepCapExceeded: If x0 never returns (possible only for singular systems)
    """
    x0 = tuple(x0)
    if len(x0) != sys.n:
        raise DimensionMismatch(f"Initial state of length {len(x0)} for n = {sys.n}")
    N = sys.period
    limit = min(sys.ctx.size ** sys.n, cap_states)
    states: List[Vector] = []
    seen_phase0 = set()
    x = x0
    for returns in range(1, limit + 1):
        seen_phase0.add(x)
        for k in range(N):
            states.append(x)
            x = sys.step(k, x)
        if x == x0:
            T = _temporal_period(states)
            trajectory = tuple(states[:T]) + (x0,)
            return Trajectory(states=trajectory, period=T, returns=returns)
        if x in seen_phase0:
            break
    raise StepCapExceeded(f"Trajectory from {list(x0)} does not return to its start")


def period_histogram(sys: Pfss, cap_states: int = DEFAULT_STATE_CAP) -> Dict[int, int]:
    """
    Number of initial conditions per temporal period, over all of GF(q)^n.

    Raises:
        SingularSystem: If some A(k) is singular
        StateSpaceTooLarge: Above the state cap
    """
    histogram, _ = enumerate_orbits(sys, cap_states)
    return histogram


def enumerate_orbits(sys: Pfss,
                     cap_states: int = DEFAULT_STATE_CAP) -> Tuple[Dict[int, int], List[Trajectory]]:
    """Histogram plus one representative trajectory per closed orbit."""
    if not is_nonsingular(sys):
        raise SingularSystem("Exhaustive enumeration needs a non-singular system")
    check_state_cap(sys.ctx, sys.n, cap_states)
    visited = set()
    histogram: Dict[int, int] = {}
    orbits: List[Trajectory] = []
    N = sys.period
    for x0 in iter_vectors(sys.ctx, sys.n):
        if x0 in visited:
            continue
        trajectory = simulate_orbit(sys, x0, cap_states)
        lap = trajectory.states
        for k in range(0, trajectory.period * N, N):
            visited.add(lap[k % trajectory.period])
        histogram[trajectory.period] = histogram.get(trajectory.period, 0) + trajectory.returns
        orbits.append(trajectory)
    logger.debug(f"Enumerated {len(orbits)} closed trajectories")
    return dict(sorted(histogram.items())), orbits


def closed_trajectories(sys: Pfss, cap_states: int = DEFAULT_STATE_CAP) -> List[Trajectory]:
    """One trajectory per closed orbit of phase-0 states."""
    return enumerate_orbits(sys, cap_states)[1]


def check_coprime_theorem(sys: Pfss, cap_states: int = DEFAULT_STATE_CAP) -> CoprimeReport:
    """
    Check over all initial conditions that trajectories leaving the
    subspace have gcd(T, N) != 1, that fixed points lie in it, and for
    prime N that states outside it have periods divisible by N.

    Returns:
        CoprimeReport; failures list the offending states
    """
    basis = subspace_A(sys)
    N = sys.period
    ctx = sys.ctx
    n_prime = isprime(N)
    report = CoprimeReport(passed=True, period=N, subspace_dimension=len(basis))

    for trajectory in closed_trajectories(sys, cap_states):
        T = trajectory.period
        inside = [in_span(ctx, basis, x) for x in trajectory.states[:-1]]
        phase0 = [trajectory.states[k % T] for k in range(0, T * N, N)]
        report.states_checked += trajectory.returns

        if not all(inside) and gcd(T, N) == 1:
            report.failures.append({
                "check": "gcd", "state": list(trajectory.initial), "period": T,
            })
        if T == 1 and not inside[0]:
            report.failures.append({
                "check": "fixed-point", "state": list(trajectory.initial), "period": T,
            })
        if n_prime and T % N:
            for x in dict.fromkeys(phase0):
                if not in_span(ctx, basis, x):
                    report.failures.append({"check": "prime-period", "state": list(x), "period": T})
                    break

    report.passed = not report.failures
    if not report.passed:
        logger.warning(f"Coprime theorem check failed: {report.witness}")
    return report
