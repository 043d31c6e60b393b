"""Exact arithmetic in the character ring Z[x^±1, y^±1] of GL2.

A :class:`LaurentCharacter` records the monomial form of a formal character
(the exponent pair (e1, e2) stands for x^e1 y^e2); a :class:`ChiExpansion`
records the same object in the basis of Weyl characters chi(a, b).
"""
from __future__ import annotations

import heapq
from collections.abc import Iterable, Mapping
from typing import Generic, TypeVar

from .errors import DomainError, NotRepresentableError, NotSymmetricError
from .weights import DominantWeight

__all__ = [
    "LaurentCharacter",
    "ChiExpansion",
    "ONE",
    "weyl_character",
    "multiply",
    "stretch",
    "dimension",
    "chi_decompose",
    "chi_expand",
    "clebsch_gordan",
    "monomial",
]

K = TypeVar("K")


class _SparseMap(Generic[K]):
    """Immutable finitely supported map to nonzero integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[K, int] | Iterable[tuple[K, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[K, int] = {}
        for key, coef in items:
            key = self._coerce_key(key)
            coef = clean.get(key, 0) + coef
            if coef:
                clean[key] = coef
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict):
        # caller guarantees no zero values and well-formed keys
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @staticmethod
    def _coerce_key(key):
        return key

    def __getitem__(self, key: K) -> int:
        return self._terms.get(key, 0)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def as_dict(self) -> dict[K, int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _combine(self, other, sign: int):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for key, coef in other._terms.items():
            c = out.get(key, 0) + sign * coef
            if c:
                out[key] = c
            else:
                del out[key]
        return self._from_clean(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def scale(self, n: int):
        if n == 0:
            return self._from_clean({})
        return self._from_clean({k: n * c for k, c in self._terms.items()})

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"

    def sorted_items(self) -> list[tuple[K, int]]:
        """Terms in descending key order."""
        return sorted(self._terms.items(), reverse=True)


class LaurentCharacter(_SparseMap[tuple[int, int]]):
    """Integer Laurent polynomial in x, y, keyed by exponent pairs."""

    __slots__ = ()

    @staticmethod
    def _coerce_key(key):
        e1, e2 = key
        return (int(e1), int(e2))

    def __mul__(self, other: LaurentCharacter) -> LaurentCharacter:
        if not isinstance(other, LaurentCharacter):
            return NotImplemented
        return multiply(self, other)

    def is_symmetric(self) -> bool:
        terms = self._terms
        return all(terms.get((e2, e1)) == c for (e1, e2), c in terms.items())

    def is_homogeneous(self) -> bool:
        return len({e1 + e2 for e1, e2 in self._terms}) <= 1

    def leading_monomial(self) -> tuple[int, int] | None:
        return max(self._terms) if self._terms else None

    def to_string(self) -> str:
        """Render as e.g. ``x^2 + x y + y^2``; terms in descending lexicographic order."""
        if not self._terms:
            return "0"
        pieces = []
        for (e1, e2), c in self.sorted_items():
            mono = " ".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", e1), ("y", e2)) if e != 0
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_string


class ChiExpansion(_SparseMap[DominantWeight]):
    """Integer combination of Weyl characters chi(lambda)."""

    __slots__ = ()

    @staticmethod
    def _coerce_key(key):
        if isinstance(key, DominantWeight):
            return key
        a, b = key
        return DominantWeight(a, b)

    def to_string(self, symbol: str = "χ") -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, (lam, c) in enumerate(self.sorted_items()):
            mag = "" if abs(c) == 1 else f"{abs(c)}·"
            term = f"{mag}{symbol}({lam.a},{lam.b})"
            if i == 0:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" {'+' if c > 0 else '-'} {term}"
        return out

    __str__ = to_string


ONE = LaurentCharacter({(0, 0): 1})


def monomial(e1: int, e2: int, coef: int = 1) -> LaurentCharacter:
    return LaurentCharacter({(e1, e2): coef})


def _weyl_terms(a: int, b: int) -> dict[tuple[int, int], int]:
    return {(a - i, b + i): 1 for i in range(a - b + 1)}


def weyl_character(lam: DominantWeight | tuple[int, int]) -> LaurentCharacter:
    """chi(a, b) = sum of x^(a-i) y^(b+i) for i = 0..a-b."""
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(*lam)
    return LaurentCharacter._from_clean(_weyl_terms(lam.a, lam.b))


def multiply(c1: LaurentCharacter, c2: LaurentCharacter) -> LaurentCharacter:
    """Product of characters (character of the tensor product)."""
    if len(c1) < len(c2):
        c1, c2 = c2, c1
    out: dict[tuple[int, int], int] = {}
    get = out.get
    right = list(c2.items())
    for (a1, a2), u in c1.items():
        for (b1, b2), v in right:
            key = (a1 + b1, a2 + b2)
            out[key] = get(key, 0) + u * v
    return LaurentCharacter._from_clean({k: c for k, c in out.items() if c})


def stretch(c: LaurentCharacter, m: int) -> LaurentCharacter:
    """Frobenius twist on characters: x -> x^m, y -> y^m."""
    if m < 1:
        raise DomainError(f"stretch factor must be at least 1, got {m}")
    if m == 1:
        return c
    return LaurentCharacter._from_clean({(m * e1, m * e2): v for (e1, e2), v in c.items()})


def dimension(c: LaurentCharacter) -> int:
    return sum(c._terms.values())


def chi_decompose(c: LaurentCharacter) -> ChiExpansion:
    """Rewrite a symmetric character in the Weyl basis by leading-term subtraction.

    The leading monomial (lexicographically maximal exponent pair) of what
    remains is always dominant for symmetric input; its multiplicity is the
    coefficient of the corresponding Weyl character, which is then subtracted.
    Weyl characters are homogeneous, so the degree components never interact.
    """
    if not c.is_symmetric():
        raise NotSymmetricError(f"character is not symmetric in x and y: {c}")
    rest = dict(c.items())
    heap = [(-e1, -e2) for e1, e2 in rest]
    heapq.heapify(heap)
    coeffs: dict[DominantWeight, int] = {}
    while heap:
        n1, n2 = heapq.heappop(heap)
        key = (-n1, -n2)
        n = rest.pop(key, 0)
        if not n:
            continue
        a, b = key
        if a < b:
            raise NotRepresentableError(f"leading monomial x^{a} y^{b} is not dominant")
        coeffs[DominantWeight(a, b)] = n
        for i in range(1, a - b + 1):
            mono = (a - i, b + i)
            if mono in rest:
                v = rest[mono] - n
                if v:
                    rest[mono] = v
                else:
                    del rest[mono]
            else:
                rest[mono] = -n
                heapq.heappush(heap, (-mono[0], -mono[1]))
    return ChiExpansion._from_clean(coeffs)


def chi_expand(e: ChiExpansion) -> LaurentCharacter:
    out: dict[tuple[int, int], int] = {}
    for lam, n in e.items():
        for key in _weyl_terms(lam.a, lam.b):
            out[key] = out.get(key, 0) + n
    return LaurentCharacter._from_clean({k: v for k, v in out.items() if v})


def clebsch_gordan(lam: DominantWeight, mu: DominantWeight) -> ChiExpansion:
    """chi(a,b) chi(c,d) = sum_{i=0}^{min(a-b, c-d)} chi(a+c-i, b+d+i)."""
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(*lam)
    if not isinstance(mu, DominantWeight):
        mu = DominantWeight(*mu)
    top_a, top_b = lam.a + mu.a, lam.b + mu.b
    return ChiExpansion._from_clean(
        {DominantWeight(top_a - i, top_b + i): 1 for i in range(min(lam.diff, mu.diff) + 1)}
    )
