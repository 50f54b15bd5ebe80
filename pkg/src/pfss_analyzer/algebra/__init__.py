#!/usr/bin/env python3
"""
Finite Field Algebra

Exact arithmetic in prime fields and extension towers.

Submodules:
- numbertheory: Integer factorization, orders and discrete logarithms
- field: Field contexts and elements
- poly: Polynomials, irreducibility and factorization
- tower: Extensions, irreducible search and element roots
- flatten: Single-step fields isomorphic to a tower
"""

from .field import FieldCtx, FieldElement, prime_field, common_field, ff_arith, element_order
from .poly import Poly, poly_factor, poly_roots, is_irreducible
from .tower import extend_field, find_irreducible, element_nth_root, smallest_subfield
from .flatten import flatten_field, FieldIsomorphism

__all__ = [
    # Fields
    'FieldCtx',
    'FieldElement',
    'prime_field',
    'common_field',
    'ff_arith',
    'element_order',
    # Polynomials
    'Poly',
    'poly_factor',
    'poly_roots',
    'is_irreducible',
    # Towers
    'extend_field',
    'find_irreducible',
    'element_nth_root',
    'smallest_subfield',
    'flatten_field',
    'FieldIsomorphism',
]
