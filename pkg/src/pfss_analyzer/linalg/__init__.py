#!/usr/bin/env python3
"""
Linear Algebra over Finite Fields

Dense matrices, elimination and canonical forms.
"""

from .matrix import FFMatrix, Vector
from .gauss import kernel, invert, rank, solve, matmul_chain, intersect_kernels
from .canonical import (
    charpoly,
    minpoly,
    char_min_poly,
    invariant_factors,
    elementary_divisors,
    jordan_form,
    JordanDecomposition,
)

__all__ = [
    'FFMatrix',
    'Vector',
    'kernel',
    'invert',
    'rank',
    'solve',
    'matmul_chain',
    'intersect_kernels',
    'charpoly',
    'minpoly',
    'char_min_poly',
    'invariant_factors',
    'elementary_divisors',
    'jordan_form',
    'JordanDecomposition',
]
