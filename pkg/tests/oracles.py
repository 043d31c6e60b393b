"""Independent reference computations used to check the library.

Nothing here calls the code paths it is used to test: simple characters are
enumerated weight by weight, Weyl coefficients are read off multiplicity
differences, and products are checked by exact evaluation at rational points.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction


def digits_of(a: int, ell: int, p: int) -> tuple[int, list[int]]:
    tau = a % ell
    q = a // ell
    digits = []
    while q:
        digits.append(q % p)
        q //= p
    return tau, digits


def brute_simple_character(a: int, ell: int, p: int) -> dict[tuple[int, int], int]:
    """Weights of L(a,0): pick one weight of each restricted factor and add them up."""
    tau, digits = digits_of(a, ell, p)
    factors = [(tau, 1)] + [(d, ell * p**i) for i, d in enumerate(digits)]
    out: Counter = Counter()
    for choice in itertools.product(*(range(d + 1) for d, _ in factors)):
        e1 = sum((d - k) * s for (d, s), k in zip(factors, choice))
        e2 = sum(k * s for (_, s), k in zip(factors, choice))
        out[(e1, e2)] += 1
    return dict(out)


def weyl_coefficients_by_difference(terms: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """For a symmetric character, n(a,b) = m(a,b) - m(a+1,b-1) for a >= b."""
    keys = {k for k in terms if k[0] >= k[1]} | {(k[0] - 1, k[1] + 1) for k in terms if k[0] - 1 >= k[1] + 1}
    out = {}
    for a, b in keys:
        n = terms.get((a, b), 0) - terms.get((a + 1, b - 1), 0)
        if n:
            out[(a, b)] = n
    return out


def weyl_terms(a: int, b: int) -> dict[tuple[int, int], int]:
    return {(a - i, b + i): 1 for i in range(a - b + 1)}


def evaluate(terms, x: Fraction, y: Fraction) -> Fraction:
    return sum((c * x**e1 * y**e2 for (e1, e2), c in terms.items()), Fraction(0))


SAMPLE_POINTS = [(Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(5, 7)), (Fraction(7, 3), Fraction(-2))]
