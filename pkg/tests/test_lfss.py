#!/usr/bin/env python3
"""
Unit Tests for Shift-Invariant Systems
Polynomial periods, cycle sets and per-vector orbit lengths.
"""

import random
import pytest
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pfss_analyzer.algebra.field import FieldCtx, prime_field
from pfss_analyzer.algebra.poly import Poly
from pfss_analyzer.core.exceptions import SingularMatrix, SingularPolynomial, StateSpaceTooLarge
from pfss_analyzer.linalg.gauss import is_invertible
from pfss_analyzer.linalg.matrix import FFMatrix
from pfss_analyzer.systems.lfss import (
    CycleSet, cycle_set, exhaustive_cycle_set, find_vector_with_period, minimal_annihilator,
    poly_period, vector_orbit_length,
)


@pytest.fixture
def f2():
    return prime_field(2)


@pytest.fixture
def rotation(f2):
    """[[1,1],[1,0]]: zero is fixed and the other three states form a 3-cycle."""
    return FFMatrix(f2, [[1, 1], [1, 0]])


def _random_invertible(ctx, n, rng):
    while True:
        M = FFMatrix(ctx, [[rng.randrange(ctx.size) for _ in range(n)] for _ in range(n)])
        if is_invertible(M):
            return M


class TestCycleSetType:
    """CycleSet algebra."""

    def test_from_counts_drops_empty(self):
        assert CycleSet.from_counts({3: 2, 1: 1, 5: 0}).entries == ((1, 1), (2, 3))

    def test_product_rule(self):
        a = CycleSet(((1, 1), (1, 3)))
        b = CycleSet(((1, 1), (1, 2)))
        assert (a * b).as_counts() == {1: 1, 2: 1, 3: 1, 6: 1}

    def test_total_states_and_str(self):
        cs = CycleSet(((1, 1), (4, 3), (8, 15)))
        assert cs.total_states == 1 + 12 + 120
        assert str(cs) == "{1[1] + 4[3] + 8[15]}"
        assert 15 in cs and 5 not in cs


class TestPolyPeriod:
    """poly_period."""

    @pytest.mark.parametrize("coeffs, period", [
        ((1, 1), 1),
        ((1, 1, 1), 3),
        ((1, 0, 1), 2),
        ((1, 1, 0, 1), 7),
        ((1, 1, 0, 0, 1), 15),
        ((1, 0, 0, 1), 3),
        ((1, 0, 1, 0, 1), 6),
    ])
    def test_binary_periods(self, f2, coeffs, period):
        assert poly_period(Poly(f2, coeffs)) == period

    def test_period_over_f5(self):
        f5 = prime_field(5)
        # x - 2: 2 has order 4 mod 5
        assert poly_period(Poly(f5, (3, 1))) == 4

    def test_zero_constant_term(self, f2):
        with pytest.raises(SingularPolynomial):
            poly_period(Poly(f2, (0, 1, 1)))


class TestCycleSet:
    """cycle_set against the exhaustive oracle."""

    def test_rotation(self, rotation):
        assert cycle_set(rotation).entries == ((1, 1), (1, 3))

    def test_identity(self):
        f3 = prime_field(3)
        assert cycle_set(FFMatrix.identity(f3, 2)).entries == ((9, 1),)

    def test_unipotent_block(self):
        f5 = prime_field(5)
        A = FFMatrix(f5, [[1, 2, 1], [0, 1, 2], [0, 0, 1]])
        assert cycle_set(A).as_counts() == {1: 5, 5: 24}

    def test_primitive_companion(self, f2):
        companion = FFMatrix(f2, [[0, 1, 0], [0, 0, 1], [1, 1, 0]])
        assert cycle_set(companion).entries == ((1, 1), (1, 7))

    def test_singular_rejected(self, f2):
        with pytest.raises(SingularMatrix):
            cycle_set(FFMatrix(f2, [[1, 1], [1, 1]]))

    def test_exhaustive_cap(self, f2):
        with pytest.raises(StateSpaceTooLarge):
            exhaustive_cycle_set(FFMatrix.identity(f2, 5), cap=16)

    @pytest.mark.parametrize("ctx, n", [
        (prime_field(2), 4),
        (prime_field(3), 3),
        (prime_field(5), 2),
        (FieldCtx(2, ((1, 1, 1),)), 2),
    ])
    def test_matches_oracle(self, ctx, n):
        rng = random.Random(ctx.size * 10 + n)
        for _ in range(12):
            A = _random_invertible(ctx, n, rng)
            assert cycle_set(A) == exhaustive_cycle_set(A)


class TestVectorOrbits:
    """minimal_annihilator, vector_orbit_length, find_vector_with_period."""

    def test_annihilator_of_zero(self, rotation):
        assert minimal_annihilator(rotation, (0, 0)).is_one

    def test_annihilator_of_cycle_state(self, rotation):
        assert minimal_annihilator(rotation, (1, 0)).coeffs == (1, 1, 1)

    def test_orbit_lengths(self, rotation):
        assert vector_orbit_length(rotation, (0, 0)) == 1
        for x in ((0, 1), (1, 0), (1, 1)):
            assert vector_orbit_length(rotation, x) == 3

    def test_orbit_length_matches_iteration(self):
        rng = random.Random(31)
        f3 = prime_field(3)
        for _ in range(20):
            A = _random_invertible(f3, 3, rng)
            x = tuple(rng.randrange(3) for _ in range(3))
            steps, y = 1, A.apply(x)
            while y != x:
                y = A.apply(y)
                steps += 1
            assert vector_orbit_length(A, x) == steps

    def test_find_vector(self, rotation):
        v = find_vector_with_period(rotation, 3)
        assert v is not None and vector_orbit_length(rotation, v) == 3
        assert find_vector_with_period(rotation, 2) is None
        assert find_vector_with_period(rotation, 1) == (0, 0)

    def test_find_vector_for_every_cycle_length(self):
        rng = random.Random(47)
        f2 = prime_field(2)
        for _ in range(10):
            A = _random_invertible(f2, 4, rng)
            lengths = cycle_set(A).lengths
            for T in lengths:
                v = find_vector_with_period(A, T)
                assert vector_orbit_length(A, v) == T
            missing = [T for T in range(2, 16) if T not in lengths]
            for T in missing:
                assert find_vector_with_period(A, T) is None
