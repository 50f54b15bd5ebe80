#!/usr/bin/env python3
"""
Integer Helpers
Factorization, orders and discrete logarithms in cyclic groups.
"""

from functools import lru_cache, reduce
from math import gcd, isqrt
from typing import Callable, Dict, Hashable, List, Optional, TypeVar

from sympy import divisors as _sympy_divisors
from sympy.ntheory import factorint
from sympy.ntheory.modular import crt

G = TypeVar("G", bound=Hashable)


@lru_cache(maxsize=512)
def factor_int(n: int) -> Dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    return {int(q): int(e) for q, e in factorint(n).items()}


def divisors(n: int) -> List[int]:
    """Ascending divisors of n >= 1."""
    return [int(d) for d in _sympy_divisors(n)]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else 0


def lcm_all(values) -> int:
    """Least common multiple of an iterable (1 for an empty one)."""
    return reduce(lcm, values, 1)


def ceil_log(n: int, base: int) -> int:
    """Smallest t >= 0 with base**t >= n."""
    t, power = 0, 1
    while power < n:
        power *= base
        t += 1
    return t


def order_from_multiple(multiple: int, is_identity: Callable[[int], bool]) -> int:
    """
    Order of a group element given any exponent that annihilates it.

    Args:
        multiple: An exponent e with x^e = 1
        is_identity: Returns True when x^e is the identity

    Returns:
        The smallest t >= 1 with x^t = 1
    """
    order = multiple
    for q in factor_int(multiple):
        while order % q == 0 and is_identity(order // q):
            order //= q
    return order


def _bsgs(mul: Callable[[G, G], G], power: Callable[[G, int], G], g: G, h: G,
          identity: G, n: int) -> Optional[int]:
    """Baby-step giant-step: x in [0, n) with g^x = h, or None."""
    if h == identity:
        return 0
    m = isqrt(n)
    if m * m < n:
        m += 1

    table = {}
    pw = identity
    for j in range(m):
        table.setdefault(pw, j)
        pw = mul(pw, g)

    giant = power(g, -m)
    gamma = h
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % n
        gamma = mul(gamma, giant)
    return None


def discrete_log(mul: Callable[[G, G], G], power: Callable[[G, int], G], g: G, h: G,
                 identity: G, order: int) -> Optional[int]:
    """
    Pohlig-Hellman discrete logarithm in a cyclic group.

    Args:
        mul: Group multiplication
        power: Group exponentiation (negative exponents allowed)
        g: Generator of a subgroup of the given order
        h: Target element
        identity: Group identity
        order: Order of g

    Returns:
        x in [0, order) with g^x = h, or None if h is not in <g>
    """
    if power(h, order) != identity:
        return None

    residues, moduli = [], []
    for q, e in factor_int(order).items():
        pe = q ** e
        gi = power(g, order // pe)
        hi = power(h, order // pe)
        gamma = power(gi, pe // q)
        gi_inv = power(gi, -1)

        x = 0
        for k in range(e):
            hk = power(mul(power(gi_inv, x), hi), pe // q ** (k + 1))
            dk = _bsgs(mul, power, gamma, hk, identity, q)
            if dk is None:
                return None
            x += dk * q ** k
        residues.append(x % pe)
        moduli.append(pe)

    if not moduli:
        return 0
    solution = crt(moduli, residues)
    if solution is None:
        return None
    x = int(solution[0]) % order
    return x if power(g, x) == h else None
