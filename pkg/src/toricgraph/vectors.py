"""Signed integer vectors over edge/variable indices.

Kernel elements of a configuration are represented as plain tuples of ints.
The positive and negative parts of a vector u are the exponent vectors of the
two monomials of the binomial it encodes; the conformal order compares those
parts componentwise.
"""

from collections.abc import Sequence
from math import gcd

Vec = tuple[int, ...]


def positive_part(u: Sequence[int]) -> Vec:
    return tuple(x if x > 0 else 0 for x in u)


def negative_part(u: Sequence[int]) -> Vec:
    return tuple(-x if x < 0 else 0 for x in u)


def support(u: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(u) if x != 0)


def vec_add(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Sequence[int]) -> Vec:
    return tuple(-a for a in u)


def conformal_le(v: Sequence[int], u: Sequence[int]) -> bool:
    """v is conformally below u: v+ <= u+ and v- <= u- componentwise."""
    for a, b in zip(v, u):
        if a > 0 and b < a:
            return False
        if a < 0 and b > a:
            return False
    return True


def canonical_sign(u: Sequence[int]) -> Vec:
    """Flip the sign so the nonzero entry with the smallest index is positive."""
    for x in u:
        if x > 0:
            return tuple(u)
        if x < 0:
            return vec_neg(u)
    return tuple(u)


def content(u: Sequence[int]) -> int:
    """gcd of the absolute values of the entries; 0 for the zero vector."""
    g = 0
    for x in u:
        g = gcd(g, abs(x))
    return g
