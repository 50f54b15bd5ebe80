#!/usr/bin/env python3
"""
System Dynamics

Shift-invariant and periodic systems, Floquet transforms, orbit analysis
and shift-register constructions.

Submodules:
- lfss: Cycle sets and orbit lengths of x(k+1) = A x(k)
- pfss: Periodic systems and the simulation oracle
- root_strategies: Decision procedures for matrix N-th roots
- floquet: Floquet transform and extended systems
- analysis: Orbit lengths, closed orbits and initial conditions
- fsr: Fibonacci and Galois periodic shift registers
"""

from .lfss import CycleSet, cycle_set, poly_period, vector_orbit_length, find_vector_with_period
from .pfss import (
    Pfss,
    Trajectory,
    is_nonsingular,
    monodromy,
    transition,
    subspace_A,
    simulate_orbit,
    period_histogram,
    check_coprime_theorem,
)
from .root_strategies import Root, NoRoot, Undetermined, RootSettings
from .floquet import (
    FloquetData,
    matrix_nth_root,
    floquet_transform,
    equivalent_lfss,
    van_dooren_condition,
    extend_system,
)
from .analysis import (
    AnalysisReport,
    analyze,
    orbit_length,
    all_orbits,
    find_initial_condition,
    fixed_point_analysis,
)
from .fsr import MasterLfsr, PfsrSpec, Tap, master_orbit, build_pfss, keystream

__all__ = [
    # Shift-invariant systems
    'CycleSet',
    'cycle_set',
    'poly_period',
    'vector_orbit_length',
    'find_vector_with_period',
    # Periodic systems
    'Pfss',
    'Trajectory',
    'is_nonsingular',
    'monodromy',
    'transition',
    'subspace_A',
    'simulate_orbit',
    'period_histogram',
    'check_coprime_theorem',
    # Floquet
    'Root',
    'NoRoot',
    'Undetermined',
    'RootSettings',
    'FloquetData',
    'matrix_nth_root',
    'floquet_transform',
    'equivalent_lfss',
    'van_dooren_condition',
    'extend_system',
    # Analysis
    'AnalysisReport',
    'analyze',
    'orbit_length',
    'all_orbits',
    'find_initial_condition',
    'fixed_point_analysis',
    # Shift registers
    'MasterLfsr',
    'PfsrSpec',
    'Tap',
    'master_orbit',
    'build_pfss',
    'keystream',
]
