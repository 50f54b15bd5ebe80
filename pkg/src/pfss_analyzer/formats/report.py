#!/usr/bin/env python3
"""
Text Reports
Human-readable rendering with elements in polynomial notation.
"""

from typing import List, Optional, Sequence

from ..algebra.field import FieldCtx
from ..core.constants import NOT_ACHIEVABLE
from ..linalg.matrix import FFMatrix, Vector
from ..systems.analysis import AnalysisReport, OrbitLength, OrbitsResult
from ..systems.floquet import FloquetData
from ..systems.root_strategies import NoRoot, Root, RootResult


def _indent(text: str, prefix: str = "    ") -> str:
    return "\n".join(prefix + line for line in text.splitlines())


def render_vector(ctx: FieldCtx, v: Sequence[int]) -> str:
    return "[" + ", ".join(ctx.render(c) for c in v) + "]"


def render_matrix(label: str, M: FFMatrix) -> str:
    return f"{label} =\n{_indent(M.render())}"


def render_root(result: RootResult) -> List[str]:
    lines = [f"Root status: {result.status}"]
    if isinstance(result, Root):
        lines.append(f"  method: {result.method}")
        lines.append(f"  field:  {result.ctx.describe()}")
    elif isinstance(result, NoRoot):
        cert = result.certificate
        lines.append(f"  reason: {result.reason}")
        lines.append(f"  charpoly = minpoly = {cert.charpoly}")
        lines.append(f"  p = {cert.p} divides N = {cert.N}; largest Jordan block {cert.max_block_size}")
    else:
        lines.append(f"  reason: {result.reason}")
    return lines


def render_floquet(fd: FloquetData) -> List[str]:
    lines = [f"Floquet transform over {fd.ctx.describe()}"]
    lines.append(render_matrix("Ã", fd.A_tilde))
    for k, P in enumerate(fd.P):
        if k:
            lines.append(render_matrix(f"P({k})", P))
    return lines


def render_orbits(orbits: OrbitsResult) -> List[str]:
    lines = [f"Orbits ({orbits.branch}, over GF({orbits.ctx.size}))"]
    if orbits.lfss_cycle_set is not None:
        lines.append(f"  equivalent system cycle set: {orbits.lfss_cycle_set}")
    lines.append(f"  closed orbits:               {orbits.closed_orbits}")
    lines.append(f"  per initial condition:       {orbits.per_initial_condition}")
    histogram = ", ".join(f"{t}: {c}" for t, c in sorted(orbits.histogram.items()))
    lines.append(f"  period histogram:            {{{histogram}}}")
    if orbits.extension_ctx is not None:
        lines.append(f"  over GF({orbits.extension_ctx.size}) closed orbits: {orbits.extension_closed_orbits}")
        lines.append(f"  over GF({orbits.extension_ctx.size}) per initial condition: "
                     f"{orbits.extension_per_initial_condition}")
    return lines


def render_orbit_length(ctx: FieldCtx, x0: Vector, result: OrbitLength) -> str:
    return (f"Orbit of {render_vector(ctx, x0)}: {result.length} ({result.classification}; "
            f"divides lcm({result.lfss_period}, N) = {result.bound})")


def render_initial_condition(ctx: FieldCtx, L: int, x0: Optional[Vector]) -> str:
    if x0 is None:
        return f"Period {L}: {NOT_ACHIEVABLE}"
    return f"Period {L}: {render_vector(ctx, x0)}"


def render_report(report: AnalysisReport) -> str:
    """Full analysis report; the tower is printed once in the header."""
    sys = report.system
    ctx = sys.ctx
    lines = [
        "PFSS analysis",
        f"Field: {ctx.describe()}",
        f"n = {sys.n}, N = {sys.period}",
        f"Non-singular: {'yes' if report.nonsingular else 'no'}",
        render_matrix("Φ", report.monodromy),
    ]
    if report.subspace_basis:
        basis = ", ".join(render_vector(ctx, v) for v in report.subspace_basis)
        lines.append(f"Subspace: dimension {report.subspace_dimension}, basis {basis}")
    else:
        lines.append("Subspace: {0}")
    lines.append(f"Rank condition: {'holds' if report.van_dooren else 'fails'}")

    if report.root is not None:
        lines.extend(render_root(report.root))
    if report.floquet is not None:
        lines.extend(render_floquet(report.floquet))
    if report.lfss_cycle_set is not None:
        lines.append(f"Equivalent system cycle set: {report.lfss_cycle_set}")
    if report.possible_periods:
        lines.append(f"Possible periods: {', '.join(str(t) for t in report.possible_periods)}")
    if report.orbits is not None:
        lines.extend(render_orbits(report.orbits))
    if report.coprime is not None:
        verdict = "pass" if report.coprime.passed else f"FAIL {report.coprime.witness}"
        lines.append(f"gcd(T, N) != 1 check: {verdict}")
    if report.fixed_points is not None:
        fp = report.fixed_points
        verdict = "pass" if fp.passed else "FAIL"
        lines.append(f"Fixed points: dimension {len(fp.basis)}, lemmas {verdict}")
    for note in report.notes:
        lines.append(f"Note: {note}")
    return "\n".join(lines)
