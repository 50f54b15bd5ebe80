#!/usr/bin/env python3
"""
Orbit Analysis
Orbit lengths, closed-orbit counts and initial-condition synthesis from Floquet data.
"""

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence

from sympy import isprime

from ..algebra.field import FieldCtx
from ..algebra.numbertheory import divisors, lcm
from ..core.config import RunConfig
from ..core.constants import (
    BRANCH_EXHAUSTIVE, BRANCH_FORMULA, CLASS_EXACT, CLASS_RESOLVED_BY_ORACLE, DEFAULT_SEED,
)
from ..core.exceptions import (
    ExtensionBoundExceeded, MissingFloquet, SingularSystem, StateSpaceTooLarge, VerificationFailed,
)
from ..core.logging_config import get_logger
from ..linalg.gauss import in_span, kernel
from ..linalg.matrix import FFMatrix, Vector, zero_vector
from .floquet import (
    FloquetData, extend_system, floquet_from_root, matrix_nth_root, possible_periods,
    van_dooren_condition,
)
from .lfss import (
    CycleSet, check_state_cap, cycle_set, find_vector_with_period, iter_vectors,
    vector_orbit_length,
)
from .pfss import (
    CoprimeReport, Pfss, check_coprime_theorem, enumerate_orbits, fixed_points, is_nonsingular,
    monodromy, simulate_orbit, subspace_A,
)
from .root_strategies import RootResult, RootSettings, Undetermined

logger = get_logger(__name__)


def _require(sys: Pfss, fd: Optional[FloquetData]) -> FloquetData:
    if not is_nonsingular(sys):
        raise SingularSystem("Orbit analysis needs a non-singular system")
    if fd is None:
        raise MissingFloquet("Orbit analysis needs Floquet data (no N-th root was found)")
    return fd


@dataclass(frozen=True)
class OrbitLength:
    """
    Temporal period of one trajectory.

    Attributes:
        length: Exact period
        classification: exact (from lcm(T, N)) or resolved-by-oracle
        bound: lcm(T, N), which the period divides
        lfss_period: T, the orbit length under the equivalent system
    """
    length: int
    classification: str
    bound: int
    lfss_period: int

    def to_dict(self) -> Dict:
        return {
            "length": self.length,
            "classification": self.classification,
            "bound": self.bound,
            "lfss_period": self.lfss_period,
        }


@dataclass
class OrbitsResult:
    """
    Orbit structure of a periodic system.

    Attributes:
        branch: formula or exhaustive
        closed_orbits: One count per closed trajectory
        per_initial_condition: One count per initial state (the period histogram)
        ctx: The system field; both counts cover its state space
        lfss_cycle_set: Cycle set of the equivalent system (formula branch)
        extension_ctx: Field of Ã when larger than the system field
        extension_closed_orbits: Closed orbits over extension_ctx
        extension_per_initial_condition: Per-state counts over extension_ctx
    """
    branch: str
    closed_orbits: CycleSet
    per_initial_condition: CycleSet
    ctx: FieldCtx
    lfss_cycle_set: Optional[CycleSet] = None
    extension_ctx: Optional[FieldCtx] = None
    extension_closed_orbits: Optional[CycleSet] = None
    extension_per_initial_condition: Optional[CycleSet] = None

    @property
    def histogram(self) -> Dict[int, int]:
        return self.per_initial_condition.as_counts()


@dataclass
class FixedPointReport:
    """Fixed points of the system and the two fixed-point lemmas for prime N."""
    basis: List[Vector]
    in_subspace: bool
    lemma_applies: bool
    pfss_fixed_lfss_periods: List[Dict] = field(default_factory=list)
    lfss_fixed_pfss_periods: List[Dict] = field(default_factory=list)
    passed: bool = True

    def to_dict(self) -> Dict:
        return {
            "basis": [list(v) for v in self.basis],
            "in_subspace": self.in_subspace,
            "lemma_applies": self.lemma_applies,
            "pfss_fixed_lfss_periods": self.pfss_fixed_lfss_periods,
            "lfss_fixed_pfss_periods": self.lfss_fixed_pfss_periods,
            "passed": self.passed,
        }


@dataclass
class AnalysisReport:
    """Everything known about one periodic system."""
    system: Pfss
    nonsingular: bool
    monodromy: FFMatrix
    subspace_basis: List[Vector]
    van_dooren: bool
    root: Optional[RootResult] = None
    floquet: Optional[FloquetData] = None
    lfss_cycle_set: Optional[CycleSet] = None
    possible_periods: List[int] = field(default_factory=list)
    orbits: Optional[OrbitsResult] = None
    coprime: Optional[CoprimeReport] = None
    fixed_points: Optional[FixedPointReport] = None
    notes: List[str] = field(default_factory=list)

    @property
    def subspace_dimension(self) -> int:
        return len(self.subspace_basis)


def orbit_length(sys: Pfss, x0: Sequence[int], fd: Optional[FloquetData],
                 seed: int = DEFAULT_SEED, cross_check: bool = False) -> OrbitLength:
    """
    Period of the trajectory from x0 via the equivalent system.

    With N prime and x0 outside the subspace the period is exactly
    lcm(T, N), T being the orbit length of x0 under Ã. Otherwise lcm(T, N)
    is only a bound and the period comes from simulation.

    Args:
        sys: Non-singular system
        x0: Initial state (codes in the system field or in fd's field)
        fd: Floquet data
        seed: Seed for factorization
        cross_check: Also simulate in the exact case

    Returns:
        OrbitLength

    Raises:
        SingularSystem: If the system is singular
        MissingFloquet: If fd is None
        VerificationFailed: If simulation contradicts the bound
    """
    fd = _require(sys, fd)
    x0 = tuple(x0)
    N = sys.period
    T = vector_orbit_length(fd.A_tilde, x0, seed)
    bound = lcm(T, N)
    ext = extend_system(sys, fd.ctx)

    if isprime(N) and not in_span(fd.ctx, subspace_A(ext), x0):
        if cross_check:
            simulated = simulate_orbit(ext, x0).period
            if simulated != bound:
                raise VerificationFailed(
                    f"Trajectory from {list(x0)} has period {simulated}, expected lcm({T}, {N}) = {bound}"
                )
        return OrbitLength(bound, CLASS_EXACT, bound, T)

    simulated = simulate_orbit(ext, x0).period
    if bound % simulated:
        raise VerificationFailed(f"Period {simulated} does not divide lcm({T}, {N}) = {bound}")
    logger.info(f"Orbit of {list(x0)} resolved by simulation: {simulated} divides {bound}")
    return OrbitLength(simulated, CLASS_RESOLVED_BY_ORACLE, bound, T)


def _formula_orbits(lfss: CycleSet, N: int) -> Dict[str, Dict[int, int]]:
    """
    Closed orbits and per-state counts predicted from the equivalent cycle set.

    The zero state stays fixed, other fixed points of Ã get period N, and a
    cycle of length T splits into gcd(T, N) trajectories of period lcm(T, N).
    """
    closed: Dict[int, int] = {1: 1}
    states: Dict[int, int] = {1: 1}

    def add(period: int, orbits: int):
        closed[period] = closed.get(period, 0) + orbits
        states[period] = states.get(period, 0) + orbits * (period // N)

    for count, T in lfss.entries:
        if T == 1:
            if count > 1:
                add(N, count - 1)
            continue
        add(lcm(T, N), count * gcd(T, N))
    return {"closed": closed, "states": states}


def _oracle_orbits(system: Pfss, cap_states: int):
    histogram, trajectories = enumerate_orbits(system, cap_states)
    closed: Dict[int, int] = {}
    for trajectory in trajectories:
        closed[trajectory.period] = closed.get(trajectory.period, 0) + 1
    return CycleSet.from_counts(closed), CycleSet.from_counts(histogram)


def _base_field_orbits(sys: Pfss, fd: FloquetData, run: RunConfig):
    """
    Counts over the system field when Ã lives in an extension.

    Every nonzero state has period lcm(T, N) with T its Ã-orbit length, and a
    closed orbit of period L holds L/N phase-0 states.
    """
    check_state_cap(sys.ctx, sys.n, run.cap_states)
    N = sys.period
    states: Dict[int, int] = {}
    for x in iter_vectors(sys.ctx, sys.n):
        period = lcm(vector_orbit_length(fd.A_tilde, x, run.seed), N) if any(x) else 1
        states[period] = states.get(period, 0) + 1
    closed = {L: c if L == 1 else c * N // L for L, c in states.items()}
    return CycleSet.from_counts(closed), CycleSet.from_counts(states)


def _compare(label: str, predicted: CycleSet, simulated: CycleSet):
    if predicted != simulated:
        raise VerificationFailed(f"{label} prediction {predicted} differs from simulation {simulated}")


def all_orbits(sys: Pfss, fd: Optional[FloquetData], run: Optional[RunConfig] = None) -> OrbitsResult:
    """
    Orbit structure of the system.

    With N prime and trivial subspace the counts follow from the cycle set
    of Ã. When Ã needs an extension field those counts are kept as the
    extension counts, and the system-field counts come from the per-state
    orbit lengths under Ã. Predictions are compared with simulation when
    the state space is within the cap. Other systems are simulated state
    by state.

    Raises:
        SingularSystem: If the system is singular
        StateSpaceTooLarge: If simulation is needed above the cap
        VerificationFailed: If prediction and simulation disagree
    """
    run = run or RunConfig()
    if not is_nonsingular(sys):
        raise SingularSystem("Orbit enumeration needs a non-singular system")
    N = sys.period

    if fd is not None and isprime(N) and not subspace_A(sys):
        lfss = cycle_set(fd.A_tilde, run.seed)
        predicted = _formula_orbits(lfss, N)
        closed = CycleSet.from_counts(predicted["closed"])
        states = CycleSet.from_counts(predicted["states"])
        result = OrbitsResult(
            branch=BRANCH_FORMULA,
            closed_orbits=closed,
            per_initial_condition=states,
            ctx=sys.ctx,
            lfss_cycle_set=lfss,
        )
        if fd.ctx != sys.ctx:
            logger.info(f"Ã lives over GF({fd.ctx.size}); counting GF({sys.ctx.size}) states separately")
            result.extension_ctx = fd.ctx
            result.extension_closed_orbits = closed
            result.extension_per_initial_condition = states
            result.closed_orbits, result.per_initial_condition = _base_field_orbits(sys, fd, run)
            ext = extend_system(sys, fd.ctx)
            if run.cross_check and fd.ctx.size ** sys.n <= run.cap_states:
                ext_closed, ext_states = _oracle_orbits(ext, run.cap_states)
                _compare("Extension closed-orbit", closed, ext_closed)
                _compare("Extension per-state", states, ext_states)

        if run.cross_check and sys.ctx.size ** sys.n <= run.cap_states:
            sim_closed, sim_states = _oracle_orbits(sys, run.cap_states)
            _compare("Closed-orbit", result.closed_orbits, sim_closed)
            _compare("Per-state", result.per_initial_condition, sim_states)
            logger.debug("Closed-orbit prediction matches simulation")
        return result

    logger.info("Orbit counts by exhaustive simulation")
    closed, states = _oracle_orbits(sys, run.cap_states)
    return OrbitsResult(
        branch=BRANCH_EXHAUSTIVE,
        closed_orbits=closed,
        per_initial_condition=states,
        ctx=sys.ctx,
    )


def _lfss_witness(A: FFMatrix, T: int, seed: int) -> Optional[Vector]:
    """A nonzero state of orbit length T under A."""
    if T == 1:
        fixed = kernel(A - FFMatrix.identity(A.ctx, A.nrows))
        return fixed[0] if fixed else None
    return find_vector_with_period(A, T, seed)


def _search_initial_condition(system: Pfss, L: int, cap_states: int) -> Optional[Vector]:
    """Smallest state (lexicographic codes) whose trajectory has period L."""
    check_state_cap(system.ctx, system.n, cap_states)
    for x0 in iter_vectors(system.ctx, system.n):
        if simulate_orbit(system, x0, cap_states).period == L:
            return x0
    return None


def find_initial_condition(sys: Pfss, fd: Optional[FloquetData], L: int,
                           run: Optional[RunConfig] = None) -> Optional[Vector]:
    """
    An initial state whose trajectory has period exactly L.

    For prime N and trivial subspace, a state of Ã-orbit length T with
    lcm(T, N) = L is built directly; T = L/N is tried first. A witness in
    the system field is preferred; when only an extension witness exists
    and the system field is small, the system field is searched instead.
    Other systems are searched exhaustively.

    Returns:
        The state, or None when L is not achievable

    Raises:
        SingularSystem: If the system is singular
        VerificationFailed: If simulation disagrees with the construction
    """
    run = run or RunConfig()
    if not is_nonsingular(sys):
        raise SingularSystem("Initial-condition synthesis needs a non-singular system")
    if L < 1:
        return None
    if L == 1:
        return zero_vector(sys.n)
    N = sys.period

    if fd is not None and isprime(N) and not subspace_A(sys):
        if L % N:
            logger.info(f"Period {L} is not a multiple of N = {N}: not achievable")
            return None
        candidates = sorted((T for T in divisors(L) if lcm(T, N) == L),
                            key=lambda T: (T != L // N, T))
        extension_witness = None
        for T in candidates:
            witness = _lfss_witness(fd.A_tilde, T, run.seed)
            if witness is None:
                continue
            if all(c < sys.ctx.size for c in witness):
                return _verified(sys, witness, L)
            extension_witness = extension_witness or witness
        if extension_witness is None:
            return None
        if sys.ctx.size ** sys.n <= run.cap_states:
            logger.info("Equivalent-system witness lies in an extension; searching the system field")
            found = _search_initial_condition(sys, L, run.cap_states)
            if found is not None:
                return found
        logger.warning(f"Period {L} reached only from an extension-field state")
        return _verified(extend_system(sys, fd.ctx), extension_witness, L)

    logger.info(f"Initial condition for period {L} by exhaustive search")
    return _search_initial_condition(sys, L, run.cap_states)


def _verified(system: Pfss, x0: Vector, L: int) -> Vector:
    period = simulate_orbit(system, x0).period
    if period != L:
        raise VerificationFailed(f"State {list(x0)} has period {period}, expected {L}")
    return x0


def _span_elements(ctx: FieldCtx, basis: List[Vector], n: int, cap: int) -> List[Vector]:
    """Every vector of span(basis) when it has at most cap elements, else the basis itself."""
    if ctx.size ** len(basis) > cap:
        return list(basis)
    out = []
    for coeffs in itertools.product(range(ctx.size), repeat=len(basis)):
        v = zero_vector(n)
        for c, b in zip(coeffs, basis):
            if c:
                v = tuple(ctx.add(x, ctx.mul(c, y)) for x, y in zip(v, b))
        out.append(v)
    return out


def fixed_point_analysis(sys: Pfss, fd: Optional[FloquetData],
                         run: Optional[RunConfig] = None) -> FixedPointReport:
    """
    Fixed points of the system and the fixed-point lemmas.

    Every fixed point must lie in the subspace. For prime N, fixed points
    of the system have Ã-orbit length 1 or N, and fixed points of Ã have
    system period 1 or N.

    Raises:
        SingularSystem: If the system is singular
        MissingFloquet: If fd is None
    """
    run = run or RunConfig()
    fd = _require(sys, fd)
    N = sys.period
    basis = fixed_points(sys)
    subspace = subspace_A(sys)
    report = FixedPointReport(
        basis=basis,
        in_subspace=all(in_span(sys.ctx, subspace, v) for v in basis),
        lemma_applies=isprime(N),
    )

    for x in _span_elements(sys.ctx, basis, sys.n, run.cap_states):
        T = vector_orbit_length(fd.A_tilde, x, run.seed)
        report.pfss_fixed_lfss_periods.append({"state": list(x), "lfss_period": T})
        if report.lemma_applies and T not in (1, N):
            report.passed = False

    ext = extend_system(sys, fd.ctx)
    lfss_fixed = kernel(fd.A_tilde - FFMatrix.identity(fd.ctx, sys.n))
    for x in _span_elements(fd.ctx, lfss_fixed, sys.n, run.cap_states):
        period = simulate_orbit(ext, x, run.cap_states).period
        report.lfss_fixed_pfss_periods.append({"state": list(x), "period": period})
        if report.lemma_applies and period not in (1, N):
            report.passed = False

    report.passed = report.passed and report.in_subspace
    if not report.passed:
        logger.warning("Fixed-point lemmas failed for this system")
    return report


def analyze(sys: Pfss, run: Optional[RunConfig] = None) -> AnalysisReport:
    """
    Run the full analysis of a periodic system.

    Parts that need exhaustive simulation are skipped with a note when the
    state space is above the cap.
    """
    run = run or RunConfig()
    report = AnalysisReport(
        system=sys,
        nonsingular=is_nonsingular(sys),
        monodromy=monodromy(sys),
        subspace_basis=subspace_A(sys),
        van_dooren=van_dooren_condition(sys),
    )
    if not report.nonsingular:
        report.notes.append("system is singular: root, orbit and theorem analyses skipped")
        logger.warning("Singular system; only structural data computed")
        return report

    try:
        report.root = matrix_nth_root(report.monodromy, sys.period, RootSettings.from_run_config(run))
    except ExtensionBoundExceeded as e:
        logger.warning(f"Root search stopped at the extension cap: {e}")
        report.root = Undetermined(f"extension bound exceeded: {e}")
    report.floquet = floquet_from_root(sys, report.root)
    if report.floquet is not None:
        report.lfss_cycle_set = cycle_set(report.floquet.A_tilde, run.seed)
        report.possible_periods = possible_periods(sys, report.floquet, run.seed)
        report.fixed_points = fixed_point_analysis(sys, report.floquet, run)
    else:
        report.notes.append(f"no Floquet transform: root status {report.root.status}")

    try:
        report.orbits = all_orbits(sys, report.floquet, run)
    except StateSpaceTooLarge as e:
        report.notes.append(f"orbit enumeration skipped: {e}")
    try:
        report.coprime = check_coprime_theorem(sys, run.cap_states)
    except StateSpaceTooLarge as e:
        report.notes.append(f"theorem check skipped: {e}")
    return report
