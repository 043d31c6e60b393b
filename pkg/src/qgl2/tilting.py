"""Special tilting modules T(lambda), lambda in pi, and restricted tensor products."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import ChiExpansion, clebsch_gordan
from .errors import NegativeCoefficientError, RegionError
from .weights import DominantWeight, in_pi, is_restricted, linkage_partner

__all__ = [
    "TiltingLabel",
    "tilting_character",
    "tilting_dimension",
    "greedy_tilting_decompose",
    "restricted_tensor_decompose",
    "is_indecomposable_restricted_tensor",
]


@dataclass(frozen=True, order=True, slots=True)
class TiltingLabel:
    """T(weight) at ``modulus`` (ell for the quantum level, p for classical levels)."""

    weight: DominantWeight
    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.weight, DominantWeight):
            object.__setattr__(self, "weight", DominantWeight(*self.weight))
        if not in_pi(self.weight, self.modulus):
            raise RegionError(f"weight {self.weight} lies outside pi for modulus {self.modulus}")

    @property
    def is_restricted(self) -> bool:
        return is_restricted(self.weight, self.modulus)

    def __str__(self) -> str:
        return f"T{self.weight}"


@lru_cache(maxsize=4096)
def tilting_character(t: TiltingLabel) -> ChiExpansion:
    lam, m = t.weight, t.modulus
    if is_restricted(lam, m):
        return ChiExpansion({lam: 1})
    return ChiExpansion({lam: 1, linkage_partner(lam, m): 1})


def tilting_dimension(t: TiltingLabel) -> int:
    return sum((lam.diff + 1) * n for lam, n in tilting_character(t).items())


def greedy_tilting_decompose(e: ChiExpansion, m: int) -> list[TiltingLabel]:
    """Split a character into special tilting characters, highest weight first.

    Returns the multiset as a list in descending weight order, one entry per
    copy.
    """
    rest = dict(e.items())
    for lam, n in rest.items():
        if not in_pi(lam, m):
            raise RegionError(f"weight {lam} lies outside pi for modulus {m}")
        if n < 0:
            raise NegativeCoefficientError(f"coefficient of chi{lam} is negative ({n})")
    out: list[TiltingLabel] = []
    while rest:
        top = max(rest)
        n = rest[top]
        label = TiltingLabel(top, m)
        out.extend([label] * n)
        for lam, k in tilting_character(label).items():
            left = rest.get(lam, 0) - n * k
            if left < 0:
                raise NegativeCoefficientError(
                    f"subtracting {n}·{label} leaves chi{lam} with coefficient {left}"
                )
            if left:
                rest[lam] = left
            else:
                rest.pop(lam, None)
    return out


def _require_restricted(lam: DominantWeight, m: int) -> DominantWeight:
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(*lam)
    if not is_restricted(lam, m):
        raise RegionError(f"weight {lam} is not restricted for modulus {m}")
    return lam


def restricted_tensor_decompose(lam: DominantWeight, mu: DominantWeight, m: int) -> list[TiltingLabel]:
    lam = _require_restricted(lam, m)
    mu = _require_restricted(mu, m)
    return greedy_tilting_decompose(clebsch_gordan(lam, mu), m)


def is_indecomposable_restricted_tensor(lam: DominantWeight, mu: DominantWeight, m: int) -> bool:
    """Closed-form test for L(lam) ⊗ L(mu) being a single tilting module.

    Weights are reduced to (a, 0), (b, 0) by their differences; the product is
    indecomposable iff one factor is one-dimensional or {a, b} = {m-1, 1}.
    """
    lam = _require_restricted(lam, m)
    mu = _require_restricted(mu, m)
    a, b = lam.diff, mu.diff
    return min(a, b) == 0 or {a, b} == {m - 1, 1}
