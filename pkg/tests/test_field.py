#!/usr/bin/env python3
"""
Unit Tests for Finite Field Arithmetic
Prime fields, towers, element roots, flattening and integer helpers.
"""

import random
import pytest
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pfss_analyzer.algebra.field import FieldCtx, element_order, ff_arith, prime_field
from pfss_analyzer.algebra.flatten import flatten_field
from pfss_analyzer.algebra.numbertheory import (
    discrete_log, divisors, factor_int, lcm, lcm_all, order_from_multiple,
)
from pfss_analyzer.algebra.poly import Poly
from pfss_analyzer.algebra.tower import (
    element_nth_root, extend_field, find_irreducible, smallest_subfield,
)
from pfss_analyzer.core.exceptions import (
    DivisionByZero, ExtensionBoundExceeded, FieldError, FieldMismatch, NotIrreducible, ZeroElement,
)


RANDOM_SAMPLES = 1000
GF4 = FieldCtx(2, ((1, 1, 1),))
GF25 = FieldCtx(5, ((2, 0, 1),))
GF64 = FieldCtx(2, ((1, 1, 1), (2, 0, 0, 1)))
PROPERTY_FIELDS = [prime_field(2), prime_field(5), prime_field(7), GF4, GF25, GF64]


@pytest.fixture
def gf2():
    return prime_field(2)


@pytest.fixture
def gf4():
    """GF(4) with θ² + θ + 1 = 0; θ has code 2."""
    return FieldCtx(2, ((1, 1, 1),))


@pytest.fixture
def gf64(gf4):
    """GF(4) extended by x³ + θ; α has code 4 and α³ = θ."""
    return FieldCtx(2, ((1, 1, 1), (2, 0, 0, 1)))


class TestPrimeField:
    """Arithmetic in F_p."""

    def test_rejects_composite_characteristic(self):
        with pytest.raises(FieldError):
            FieldCtx(6)

    def test_add_mul_mod_p(self):
        f7 = prime_field(7)
        a, b = f7(5), f7(4)
        assert (a + b).code == 2
        assert (a * b).code == 6
        assert (a - b).code == 1
        assert (b - a).code == 6
        assert (a / b * b) == a

    def test_inverse_of_every_nonzero_element(self):
        f11 = prime_field(11)
        for a in list(f11.elements())[1:]:
            assert (a * a.inverse()).code == 1

    def test_division_by_zero(self):
        f5 = prime_field(5)
        with pytest.raises(DivisionByZero):
            f5(3) / f5(0)

    def test_zero_has_no_order_or_log(self):
        f5 = prime_field(5)
        with pytest.raises(ZeroElement):
            element_order(f5.zero)
        with pytest.raises(ZeroElement):
            f5.log(0)

    def test_ff_arith_dispatch(self):
        f5 = prime_field(5)
        assert ff_arith("add", f5(3), f5(4)).code == 2
        assert ff_arith("pow", f5(2), 3).code == 3
        assert ff_arith("inv", f5(2)).code == 3
        with pytest.raises(FieldError):
            ff_arith("sqrt", f5(2))


class TestExtensionField:
    """GF(4) and the GF(64) tower."""

    def test_theta_squared(self, gf4):
        theta = gf4(2)
        assert (theta * theta).code == 3
        assert str(theta * theta) == "a + 1"

    def test_theta_cubed_is_one(self, gf4):
        assert (gf4(2) ** 3).code == 1

    def test_characteristic_two_addition(self, gf4):
        for a in gf4.elements():
            assert (a + a).code == 0

    def test_frobenius_is_squaring(self, gf4):
        for a in gf4.elements():
            assert a.frobenius() == a * a

    def test_alpha_cubed_is_theta(self, gf64):
        alpha = gf64(4)
        assert (alpha ** 3).code == 2
        assert str(alpha) == "b"

    def test_multiplicative_group_order(self, gf64):
        g = gf64(gf64.generator())
        assert element_order(g) == 63
        for code in (1, 2, 4, 17, 63):
            assert gf64.pow(g.code, gf64.log(code)) == code

    def test_every_element_invertible(self, gf64):
        for a in list(gf64.elements())[1:]:
            assert (a * a.inverse()).code == 1

    def test_embedding_preserves_codes(self, gf4, gf64):
        theta = gf4(2)
        lifted = theta.embed(gf64)
        assert lifted.code == 2
        assert lifted.ctx == gf64
        assert lifted == theta

    def test_mixed_level_arithmetic(self, gf4, gf64):
        assert (gf4(2) * gf64(4)).ctx == gf64

    def test_unrelated_towers(self, gf4):
        other = FieldCtx(2, ((1, 1, 0, 1),))
        with pytest.raises(FieldMismatch):
            gf4(2) + other(2)

    def test_describe_prints_tower(self, gf64):
        assert gf64.describe() == "GF(2) > GF(2^2) [a^2 + a + 1] > GF(2^6) [b^3 + a]"

    def test_level_of(self, gf64):
        assert gf64.level_of(1) == 0
        assert gf64.level_of(3) == 1
        assert gf64.level_of(4) == 2


@pytest.mark.parametrize("ctx", PROPERTY_FIELDS, ids=lambda ctx: f"GF{ctx.size}")
class TestFieldLaws:
    """Field axioms and the Frobenius map on random samples."""

    def _triples(self, ctx):
        rng = random.Random(ctx.size)
        for _ in range(RANDOM_SAMPLES):
            yield tuple(ctx(rng.randrange(ctx.size)) for _ in range(3))

    def test_ring_axioms(self, ctx):
        for a, b, c in self._triples(ctx):
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a - a == ctx.zero
            assert a * ctx.one == a

    def test_inverses(self, ctx):
        for a, b, _ in self._triples(ctx):
            if a:
                assert a * a.inverse() == ctx.one
                assert (b / a) * a == b

    def test_frobenius_is_a_field_automorphism(self, ctx):
        for a, b, _ in self._triples(ctx):
            assert a.frobenius() == a ** ctx.p
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
            assert a.frobenius(ctx.degree) == a
            assert a ** ctx.size == a


class TestTower:
    """extend_field, find_irreducible, smallest_subfield."""

    def test_extend_prime_field(self, gf2):
        ctx, embed = extend_field(gf2, Poly(gf2, (1, 1, 1)))
        assert ctx.size == 4
        assert embed(gf2(1)).ctx == ctx

    def test_extend_gf4_by_cubic(self, gf4):
        ctx, _ = extend_field(gf4, Poly(gf4, (2, 0, 0, 1)))
        assert ctx.size == 64
        assert ctx.degree == 6

    def test_reducible_modulus_rejected(self, gf2):
        with pytest.raises(NotIrreducible):
            extend_field(gf2, Poly(gf2, (1, 0, 1)))

    def test_linear_modulus_keeps_field(self, gf2):
        ctx, _ = extend_field(gf2, Poly(gf2, (1, 1)))
        assert ctx == gf2

    def test_unique_quadratic_over_f2(self, gf2):
        for seed in range(5):
            assert find_irreducible(gf2, 2, seed).coeffs == (1, 1, 1)

    def test_find_irreducible_is_seeded(self, gf4):
        assert find_irreducible(gf4, 3, seed=7) == find_irreducible(gf4, 3, seed=7)

    def test_smallest_subfield(self, gf64):
        assert smallest_subfield(gf64, [0, 1]).depth == 0
        assert smallest_subfield(gf64, [1, 3]).depth == 1
        assert smallest_subfield(gf64, [1, 5]).depth == 2


class TestElementRoots:
    """element_nth_root."""

    def test_cube_root_of_theta_needs_degree_three(self, gf4):
        root, ctx = element_nth_root(gf4(2), 3)
        assert ctx.degree == 6
        assert root ** 3 == gf4(2).embed(ctx)

    def test_square_root_in_characteristic_two(self, gf4):
        root, ctx = element_nth_root(gf4(2), 2)
        assert ctx == gf4
        assert root.code == 3

    def test_root_in_same_field(self):
        f7 = prime_field(7)
        root, ctx = element_nth_root(f7(6), 3)
        assert ctx == f7
        assert root ** 3 == f7(6)

    def test_root_of_one(self, gf4):
        root, ctx = element_nth_root(gf4(1), 5)
        assert root.code == 1 and ctx == gf4

    def test_zero_rejected(self, gf4):
        with pytest.raises(ZeroElement):
            element_nth_root(gf4(0), 3)

    def test_cap_exceeded(self, gf4):
        with pytest.raises(ExtensionBoundExceeded):
            element_nth_root(gf4(2), 3, cap_factor=2)

    def test_random_roots_verify(self):
        rng = random.Random(11)
        fields = (prime_field(5), prime_field(7), GF4, GF25, GF64)
        for _ in range(RANDOM_SAMPLES):
            base = rng.choice(fields)
            a = base(rng.randrange(1, base.size))
            n = rng.randrange(1, 9)
            root, ctx = element_nth_root(a, n, seed=rng.randrange(100))
            assert root ** n == a.embed(ctx)
            assert base.is_subfield_of(ctx)


class TestFlatten:
    """flatten_field."""

    def test_prime_field_is_its_own_flattening(self, gf2):
        iso = flatten_field(gf2)
        assert iso.target.size == 2

    def test_tower_isomorphism(self, gf64):
        iso = flatten_field(gf64)
        assert iso.target.depth == 1
        assert iso.target.size == 64
        for a in gf64.elements():
            assert iso.backward(iso.forward(a)) == a

    def test_isomorphism_is_multiplicative(self, gf64):
        iso = flatten_field(gf64)
        rng = random.Random(3)
        for _ in range(30):
            a, b = gf64(rng.randrange(64)), gf64(rng.randrange(64))
            assert iso.forward(a * b) == iso.forward(a) * iso.forward(b)
            assert iso.forward(a + b) == iso.forward(a) + iso.forward(b)


class TestNumberTheory:
    """Integer helpers."""

    def test_factor_and_divisors(self):
        assert factor_int(360) == {2: 3, 3: 2, 5: 1}
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_lcm(self):
        assert lcm(4, 6) == 12
        assert lcm_all([3, 5, 9]) == 45
        assert lcm_all([]) == 1

    def test_order_from_multiple(self):
        assert order_from_multiple(100, lambda e: pow(10, e, 101) == 1) == 4

    def test_discrete_log_mod_prime(self):
        p = 101
        order = order_from_multiple(p - 1, lambda e: pow(2, e, p) == 1)
        h = pow(2, 37, p)
        x = discrete_log(lambda a, b: a * b % p, lambda a, e: pow(a, e, p), 2, h, 1, order)
        assert pow(2, x, p) == h

    def test_discrete_log_outside_subgroup(self):
        p = 13
        # 3 has order 3; 2 is not a power of 3
        x = discrete_log(lambda a, b: a * b % p, lambda a, e: pow(a, e, p), 3, 2, 1, 3)
        assert x is None
