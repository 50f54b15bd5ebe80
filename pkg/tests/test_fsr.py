#!/usr/bin/env python3
"""
Unit Tests for Periodic Shift Registers
Master orbits, slave matrices, wiring validation and keystreams.
"""

import pytest
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pfss_analyzer.algebra.field import prime_field
from pfss_analyzer.core.exceptions import NotPeriodic, WiringError
from pfss_analyzer.linalg.matrix import FFMatrix
from pfss_analyzer.systems.fsr import (
    KIND_FIBONACCI, KIND_GALOIS, MasterLfsr, PfsrSpec, Tap, build_pfss, keystream, master_orbit,
    sequence_period, simulate_combined, step_nonsingular,
)
from pfss_analyzer.systems.pfss import simulate_orbit


@pytest.fixture
def fib_spec():
    f2 = prime_field(2)
    master = MasterLfsr(f2, FFMatrix(f2, [[0, 1], [1, 1]]), (1, 1))
    return PfsrSpec(KIND_FIBONACCI, master, 3, (Tap(const=1), Tap(master=0), Tap(master=1)))


@pytest.fixture
def galois_spec():
    f5 = prime_field(5)
    master = MasterLfsr(f5, FFMatrix(f5, [[4, 1], [4, 0]]), (2, 3))
    return PfsrSpec(KIND_GALOIS, master, 3, (Tap(master=0), Tap(master=1), Tap(const=1)))


class TestMaster:
    """master_orbit."""

    def test_fibonacci_master(self, fib_spec):
        states, N = master_orbit(fib_spec.master)
        assert N == 3
        assert states == [(1, 1), (1, 0), (0, 1)]

    def test_galois_master(self, galois_spec):
        states, N = master_orbit(galois_spec.master)
        assert states == [(2, 3), (1, 3), (2, 4)]

    def test_identity_master(self):
        f2 = prime_field(2)
        master = MasterLfsr(f2, FFMatrix.identity(f2, 2), (1, 0))
        assert master_orbit(master) == ([(1, 0)], 1)

    def test_transient_start(self):
        f2 = prime_field(2)
        master = MasterLfsr(f2, FFMatrix(f2, [[0, 1], [0, 0]]), (1, 0))
        with pytest.raises(NotPeriodic):
            master_orbit(master)


class TestSlave:
    """build_pfss and the register equations."""

    def test_fibonacci_slave_matrices(self, fib_spec):
        system = build_pfss(fib_spec)
        assert [m.rows for m in system.matrices] == [
            ((0, 1, 0), (0, 0, 1), (1, 1, 1)),
            ((0, 1, 0), (0, 0, 1), (1, 1, 0)),
            ((0, 1, 0), (0, 0, 1), (1, 0, 1)),
        ]

    def test_galois_slave_matrices(self, galois_spec):
        system = build_pfss(galois_spec)
        assert [m.rows for m in system.matrices] == [
            ((2, 1, 0), (3, 0, 1), (1, 0, 0)),
            ((1, 1, 0), (3, 0, 1), (1, 0, 0)),
            ((2, 1, 0), (4, 0, 1), (1, 0, 0)),
        ]

    @pytest.mark.parametrize("spec_name", ["fib_spec", "galois_spec"])
    def test_matrices_match_register_equations(self, spec_name, request):
        spec = request.getfixturevalue(spec_name)
        system = build_pfss(spec)
        x0 = (1, 0, 1)
        combined = simulate_combined(spec, x0, 12)
        x = x0
        for k, (_, expected) in enumerate(combined):
            assert x == expected
            x = system.step(k, x)

    def test_step_nonsingular(self, fib_spec, galois_spec):
        assert step_nonsingular(fib_spec) == [True, True, True]
        assert step_nonsingular(galois_spec) == [True, True, True]

    def test_zero_tap_gives_singular_step(self):
        f2 = prime_field(2)
        master = MasterLfsr(f2, FFMatrix(f2, [[0, 1], [1, 1]]), (1, 1))
        spec = PfsrSpec(KIND_FIBONACCI, master, 2, (Tap(master=0), Tap(const=1)))
        assert step_nonsingular(spec) == [True, True, False]


class TestWiring:
    """Wiring validation."""

    def test_tap_count(self, fib_spec):
        bad = PfsrSpec(KIND_FIBONACCI, fib_spec.master, 3, (Tap(const=1),))
        with pytest.raises(WiringError):
            build_pfss(bad)

    def test_master_stage_out_of_range(self, fib_spec):
        bad = PfsrSpec(KIND_FIBONACCI, fib_spec.master, 1, (Tap(master=2),))
        with pytest.raises(WiringError):
            build_pfss(bad)

    def test_constant_outside_field(self, fib_spec):
        bad = PfsrSpec(KIND_FIBONACCI, fib_spec.master, 1, (Tap(const=2),))
        with pytest.raises(WiringError):
            build_pfss(bad)

    def test_empty_tap(self, fib_spec):
        bad = PfsrSpec(KIND_FIBONACCI, fib_spec.master, 1, (Tap(),))
        with pytest.raises(WiringError):
            build_pfss(bad)

    def test_unknown_kind(self, fib_spec):
        bad = PfsrSpec("nlfsr", fib_spec.master, 3, fib_spec.wiring)
        with pytest.raises(WiringError):
            build_pfss(bad)


class TestKeystream:
    """keystream and sequence_period."""

    def test_keystream_matches_combined_simulation(self, galois_spec):
        x0 = (1, 2, 3)
        stream = keystream(galois_spec, x0, 30, tap=2)
        assert stream == [x[2] for _, x in simulate_combined(galois_spec, x0, 29)]

    def test_keystream_period_divides_state_period(self, fib_spec):
        x0 = (0, 0, 1)
        period = simulate_orbit(build_pfss(fib_spec), x0).period
        stream = keystream(fib_spec, x0, 4 * period)
        assert period % sequence_period(stream) == 0

    def test_fibonacci_keystream_period(self, fib_spec):
        stream = keystream(fib_spec, (0, 0, 1), 18)
        assert stream[:9] == [0, 0, 1, 1, 1, 0, 0, 1, 1]
        assert sequence_period(stream) == 9

    def test_galois_keystream_period(self, galois_spec):
        stream = keystream(galois_spec, (1, 0, 0), 30)
        assert 15 % sequence_period(stream) == 0
        assert simulate_orbit(build_pfss(galois_spec), (1, 0, 0)).period == 15

    def test_zero_state_stream(self, fib_spec):
        assert keystream(fib_spec, (0, 0, 0), 10) == [0] * 10

    def test_tap_outside_slave(self, fib_spec):
        with pytest.raises(WiringError):
            keystream(fib_spec, (1, 0, 0), 5, tap=3)

    def test_sequence_period(self):
        assert sequence_period([1, 0, 1, 0, 1]) == 2
        assert sequence_period([1, 1, 1]) == 1
        assert sequence_period([0, 0, 1]) == 3
        assert sequence_period([]) == 1
