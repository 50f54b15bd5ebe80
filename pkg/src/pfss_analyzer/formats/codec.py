#!/usr/bin/env python3
"""
JSON Codecs
Fields, elements, matrices, systems, register specs and analysis reports.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from ..algebra.field import FieldCtx, prime_field
from ..algebra.poly import Poly
from ..algebra.tower import extend_field
from ..core.constants import (
    NOT_ACHIEVABLE, SCHEMA_VERSION, STATUS_NO_ROOT, STATUS_ROOT, STATUS_UNDETERMINED,
)
from ..core.exceptions import InputError, LinalgError, ParseError, PfssError
from ..core.logging_config import get_logger
from ..linalg.matrix import FFMatrix, Vector
from ..systems.analysis import AnalysisReport, FixedPointReport, OrbitLength, OrbitsResult
from ..systems.floquet import FloquetData
from ..systems.fsr import MasterLfsr, PfsrSpec, Tap
from ..systems.lfss import CycleSet
from ..systems.pfss import CoprimeReport, Pfss, Trajectory, monodromy
from ..systems.root_strategies import NoRoot, NoRootCertificate, Root, RootResult, Undetermined

logger = get_logger(__name__)

Encoded = Union[int, List[Any]]


# -- Fields and elements -----------------------------------------------------

def element_to_json(ctx: FieldCtx, code: int) -> Encoded:
    """Integer code on towers of depth <= 1, nested top-level coefficients above."""
    if ctx.depth <= 1:
        return code
    return [element_to_json(ctx.parent, d) for d in ctx.digits(code)]


def element_from_json(ctx: FieldCtx, value: Encoded) -> int:
    """
    Code of an encoded element; plain integer codes are accepted at any depth.

    Raises:
        ParseError: If the value is not an element of ctx
    """
    if isinstance(value, bool):
        raise ParseError(f"Boolean is not a field element: {value}")
    if isinstance(value, int):
        if not 0 <= value < ctx.size:
            raise ParseError(f"Element code {value} outside GF({ctx.size})")
        return value
    if isinstance(value, list):
        if ctx.depth == 0 or len(value) != ctx.top_degree:
            raise ParseError(f"Coefficient list {value} does not match GF({ctx.size})")
        return ctx.undigits([element_from_json(ctx.parent, v) for v in value])
    raise ParseError(f"Cannot read a field element from {value!r}")


def field_to_json(ctx: FieldCtx) -> Dict:
    tower = []
    for level, step in enumerate(ctx.steps):
        below = ctx.prefix(level)
        tower.append([element_to_json(below, c) for c in step])
    return {"p": ctx.p, "tower": tower}


def field_from_json(obj: Dict) -> FieldCtx:
    """
    Build a tower, checking every modulus for irreducibility.

    Raises:
        ParseError: On malformed input
        NotIrreducible: If a modulus is reducible
    """
    if not isinstance(obj, dict) or "p" not in obj:
        raise ParseError("Field description needs a prime 'p'")
    try:
        ctx = prime_field(int(obj["p"]))
    except PfssError as e:
        raise ParseError(str(e)) from e
    for step in obj.get("tower", []):
        if not isinstance(step, list):
            raise ParseError(f"Tower step must be a coefficient list, got {step!r}")
        modulus = Poly(ctx, [element_from_json(ctx, c) for c in step])
        ctx, _ = extend_field(ctx, modulus)
    return ctx


# -- Vectors and matrices ----------------------------------------------------

def vector_to_json(ctx: FieldCtx, v: Sequence[int]) -> List[Encoded]:
    return [element_to_json(ctx, c) for c in v]


def vector_from_json(ctx: FieldCtx, values: Sequence[Encoded]) -> Vector:
    if not isinstance(values, list):
        raise ParseError(f"Vector must be a list, got {values!r}")
    return tuple(element_from_json(ctx, v) for v in values)


def matrix_to_json(M: FFMatrix) -> List[List[Encoded]]:
    return [vector_to_json(M.ctx, row) for row in M.rows]


def matrix_from_json(ctx: FieldCtx, rows: Any) -> FFMatrix:
    if not isinstance(rows, list) or not rows:
        raise ParseError("Matrix must be a non-empty list of rows")
    try:
        return FFMatrix(ctx, [vector_from_json(ctx, row) for row in rows])
    except LinalgError as e:
        raise ParseError(f"Invalid matrix: {e}") from e


# -- Systems -----------------------------------------------------------------

def _check_schema(obj: Dict):
    schema = obj.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise ParseError(f"Unsupported schema version {schema}")


def system_to_json(sys: Pfss) -> Dict:
    return {
        "schema": SCHEMA_VERSION,
        "field": field_to_json(sys.ctx),
        "period": sys.period,
        "matrices": [matrix_to_json(m) for m in sys.matrices],
    }


def system_from_json(obj: Dict) -> Pfss:
    """
    Raises:
        ParseError: On malformed input or a period/matrix count mismatch
    """
    _check_schema(obj)
    for key in ("field", "matrices"):
        if key not in obj:
            raise ParseError(f"System description is missing '{key}'")
    ctx = field_from_json(obj["field"])
    matrices = [matrix_from_json(ctx, m) for m in obj["matrices"]]
    period = obj.get("period", len(matrices))
    if period != len(matrices):
        raise ParseError(f"Period {period} does not match {len(matrices)} matrices")
    try:
        return Pfss(ctx, tuple(matrices))
    except LinalgError as e:
        raise ParseError(f"Invalid system: {e}") from e


def pfsr_to_json(spec: PfsrSpec) -> Dict:
    return {
        "schema": SCHEMA_VERSION,
        "field": field_to_json(spec.ctx),
        "kind": spec.kind,
        "master": {
            "matrix": matrix_to_json(spec.master.transition),
            "init": vector_to_json(spec.ctx, spec.master.initial),
        },
        "slave_dim": spec.slave_dim,
        "wiring": [tap.to_dict() for tap in spec.wiring],
    }


def _tap_from_json(ctx: FieldCtx, obj: Any) -> Tap:
    if not isinstance(obj, dict) or len(obj) != 1 or not ({"master", "const"} & set(obj)):
        raise ParseError(f"Wiring entry must be {{'master': i}} or {{'const': c}}, got {obj!r}")
    if "master" in obj:
        return Tap(master=int(obj["master"]))
    return Tap(const=element_from_json(ctx, obj["const"]))


def pfsr_from_json(obj: Dict) -> PfsrSpec:
    _check_schema(obj)
    try:
        ctx = field_from_json(obj["field"])
        master = obj["master"]
        transition = matrix_from_json(ctx, master["matrix"])
        init = vector_from_json(ctx, master["init"])
        wiring = tuple(_tap_from_json(ctx, t) for t in obj["wiring"])
        return PfsrSpec(
            kind=str(obj["kind"]).lower(),
            master=MasterLfsr(ctx, transition, init),
            slave_dim=int(obj.get("slave_dim", len(wiring))),
            wiring=wiring,
        )
    except KeyError as e:
        raise ParseError(f"Register description is missing {e}") from e
    except LinalgError as e:
        raise ParseError(f"Invalid register description: {e}") from e


# -- Results -----------------------------------------------------------------

def cycle_set_to_json(cs: CycleSet) -> List[Dict[str, int]]:
    return cs.to_list()


def histogram_to_json(histogram: Dict[int, int]) -> List[Dict[str, int]]:
    return [{"length": length, "count": count} for length, count in sorted(histogram.items())]


def trajectory_to_json(ctx: FieldCtx, trajectory: Trajectory) -> Dict:
    return {
        "period": trajectory.period,
        "states": [vector_to_json(ctx, x) for x in trajectory.states],
    }


def root_result_to_json(result: RootResult) -> Dict:
    out: Dict[str, Any] = {"status": result.status}
    if isinstance(result, Root):
        out["field"] = field_to_json(result.ctx)
        out["method"] = result.method
        out["matrix"] = matrix_to_json(result.matrix)
    elif isinstance(result, NoRoot):
        out["reason"] = result.reason
        out["certificate"] = result.certificate.to_dict()
    else:
        out["reason"] = result.reason
    return out


def floquet_to_json(fd: FloquetData) -> Dict:
    return {
        "field": field_to_json(fd.ctx),
        "A_tilde": matrix_to_json(fd.A_tilde),
        "P": [matrix_to_json(P) for P in fd.P],
    }


def orbit_length_to_json(result: OrbitLength) -> Dict:
    return result.to_dict()


def orbits_to_json(orbits: OrbitsResult) -> Dict:
    out = {
        "branch": orbits.branch,
        "field": field_to_json(orbits.ctx),
        "closed_orbits": cycle_set_to_json(orbits.closed_orbits),
        "per_initial_condition": cycle_set_to_json(orbits.per_initial_condition),
        "histogram": histogram_to_json(orbits.histogram),
    }
    if orbits.lfss_cycle_set is not None:
        out["lfss_cycle_set"] = cycle_set_to_json(orbits.lfss_cycle_set)
    if orbits.extension_ctx is not None:
        out["extension"] = {
            "field": field_to_json(orbits.extension_ctx),
            "closed_orbits": cycle_set_to_json(orbits.extension_closed_orbits),
            "per_initial_condition": cycle_set_to_json(orbits.extension_per_initial_condition),
        }
    return out


def initial_condition_to_json(ctx: FieldCtx, x0: Optional[Vector]) -> Union[str, List[Encoded]]:
    return NOT_ACHIEVABLE if x0 is None else vector_to_json(ctx, x0)


def report_to_json(report: AnalysisReport) -> Dict:
    """Plain JSON form of an analysis report (integer keys become records)."""
    sys = report.system
    fixed: Optional[FixedPointReport] = report.fixed_points
    return {
        "schema": SCHEMA_VERSION,
        "system": system_to_json(sys),
        "nonsingular": report.nonsingular,
        "monodromy": matrix_to_json(report.monodromy),
        "subspace": {
            "dimension": report.subspace_dimension,
            "basis": [vector_to_json(sys.ctx, v) for v in report.subspace_basis],
        },
        "van_dooren": report.van_dooren,
        "root": root_result_to_json(report.root) if report.root is not None else None,
        "floquet": floquet_to_json(report.floquet) if report.floquet is not None else None,
        "lfss_cycle_set": (cycle_set_to_json(report.lfss_cycle_set)
                           if report.lfss_cycle_set is not None else None),
        "possible_periods": list(report.possible_periods),
        "orbits": orbits_to_json(report.orbits) if report.orbits is not None else None,
        "coprime_theorem": report.coprime.to_dict() if report.coprime is not None else None,
        "fixed_points": fixed.to_dict() if fixed is not None else None,
        "notes": list(report.notes),
    }


def cycle_set_from_json(items: Any) -> CycleSet:
    if not isinstance(items, list):
        raise ParseError(f"Cycle set must be a list, got {items!r}")
    try:
        return CycleSet(tuple((int(i["count"]), int(i["length"])) for i in items))
    except (KeyError, TypeError) as e:
        raise ParseError(f"Invalid cycle set entry: {e}") from e


def root_result_from_json(ctx: FieldCtx, obj: Dict) -> RootResult:
    """
    Args:
        ctx: Field of the monodromy (for the certificate polynomials)
    """
    status = obj.get("status")
    if status == STATUS_ROOT:
        root_ctx = field_from_json(obj["field"])
        return Root(matrix_from_json(root_ctx, obj["matrix"]), obj["method"])
    if status == STATUS_NO_ROOT:
        cert = obj["certificate"]
        certificate = NoRootCertificate(
            charpoly=Poly(ctx, cert["charpoly"]),
            minpoly=Poly(ctx, cert["minpoly"]),
            p=int(cert["p"]),
            N=int(cert["N"]),
            max_block_size=int(cert["max_block_size"]),
        )
        return NoRoot(obj["reason"], certificate)
    if status == STATUS_UNDETERMINED:
        return Undetermined(obj["reason"])
    raise ParseError(f"Unknown root status {status!r}")


def floquet_from_json(obj: Dict) -> FloquetData:
    ctx = field_from_json(obj["field"])
    return FloquetData(
        A_tilde=matrix_from_json(ctx, obj["A_tilde"]),
        ctx=ctx,
        P=tuple(matrix_from_json(ctx, P) for P in obj["P"]),
    )


def orbits_from_json(ctx: FieldCtx, obj: Dict) -> OrbitsResult:
    orbits = OrbitsResult(
        branch=obj["branch"],
        closed_orbits=cycle_set_from_json(obj["closed_orbits"]),
        per_initial_condition=cycle_set_from_json(obj["per_initial_condition"]),
        ctx=ctx,
    )
    if "lfss_cycle_set" in obj:
        orbits.lfss_cycle_set = cycle_set_from_json(obj["lfss_cycle_set"])
    extension = obj.get("extension")
    if extension is not None:
        orbits.extension_ctx = field_from_json(extension["field"])
        orbits.extension_closed_orbits = cycle_set_from_json(extension["closed_orbits"])
        orbits.extension_per_initial_condition = cycle_set_from_json(
            extension["per_initial_condition"]
        )
    return orbits


def _coprime_from_json(obj: Dict) -> CoprimeReport:
    return CoprimeReport(
        passed=bool(obj["passed"]),
        period=int(obj["period"]),
        subspace_dimension=int(obj["subspace_dimension"]),
        states_checked=int(obj["states_checked"]),
        failures=list(obj.get("failures", [])),
    )


def _fixed_points_from_json(obj: Dict) -> FixedPointReport:
    return FixedPointReport(
        basis=[tuple(v) for v in obj["basis"]],
        in_subspace=bool(obj["in_subspace"]),
        lemma_applies=bool(obj["lemma_applies"]),
        pfss_fixed_lfss_periods=list(obj["pfss_fixed_lfss_periods"]),
        lfss_fixed_pfss_periods=list(obj["lfss_fixed_pfss_periods"]),
        passed=bool(obj["passed"]),
    )


def report_from_json(obj: Dict) -> AnalysisReport:
    """
    Inverse of report_to_json.

    Raises:
        ParseError: On malformed input
    """
    _check_schema(obj)
    try:
        sys = system_from_json(obj["system"])
        ctx = sys.ctx

        def optional(key, decode):
            value = obj.get(key)
            return decode(value) if value is not None else None

        return AnalysisReport(
            system=sys,
            nonsingular=bool(obj["nonsingular"]),
            monodromy=matrix_from_json(ctx, obj["monodromy"]),
            subspace_basis=[vector_from_json(ctx, v) for v in obj["subspace"]["basis"]],
            van_dooren=bool(obj["van_dooren"]),
            root=optional("root", lambda v: root_result_from_json(ctx, v)),
            floquet=optional("floquet", floquet_from_json),
            lfss_cycle_set=optional("lfss_cycle_set", cycle_set_from_json),
            possible_periods=[int(L) for L in obj["possible_periods"]],
            orbits=optional("orbits", lambda v: orbits_from_json(ctx, v)),
            coprime=optional("coprime_theorem", _coprime_from_json),
            fixed_points=optional("fixed_points", _fixed_points_from_json),
            notes=[str(note) for note in obj["notes"]],
        )
    except (KeyError, TypeError) as e:
        raise ParseError(f"Report is missing or has a malformed field: {e}") from e


def dumps(obj: Any, indent: Optional[int] = 2) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=indent, sort_keys=True, ensure_ascii=False)


# -- Files -------------------------------------------------------------------

def parse_json(text: str) -> Any:
    """
    Raises:
        ParseError: With the line and column of the syntax error
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e


def load_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    if not path.exists():
        raise InputError(f"Input file not found: {path}")
    logger.debug(f"Reading {path}")
    return parse_json(path.read_text(encoding="utf-8"))


def load_system(path: Union[str, Path]) -> Pfss:
    return system_from_json(load_json(path))


def load_pfsr(path: Union[str, Path]) -> PfsrSpec:
    return pfsr_from_json(load_json(path))


def load_matrix(path: Union[str, Path]) -> FFMatrix:
    """
    A single matrix file ({"field", "matrix"}) or a system file, whose
    monodromy is returned.
    """
    obj = load_json(path)
    if isinstance(obj, dict) and "matrix" in obj:
        _check_schema(obj)
        if "field" not in obj:
            raise ParseError("Matrix description is missing 'field'")
        return matrix_from_json(field_from_json(obj["field"]), obj["matrix"])
    return monodromy(system_from_json(obj))
