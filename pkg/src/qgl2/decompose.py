"""Decomposition of L(a,0) ⊗ L(b,0) into twisted tilting summands.

Each summand is T(l_-1) ⊗ (T̄(l_0) ⊗ T̄(l_1)^F̄ ⊗ ... ⊗ T̄(l_r)^F̄^r)^F, where
the quantum-level label uses modulus ell and classical level i uses modulus p
and contributes characters stretched by ell * p**i.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .characters import (
    LaurentCharacter,
    chi_expand,
    dimension,
    monomial,
    multiply,
    stretch,
    weyl_character,
)
from .errors import DomainError
from .tilting import TiltingLabel, restricted_tensor_decompose, tilting_character, tilting_dimension
from .weights import DominantWeight, ModularParams, det_shift, lp_expansion

__all__ = [
    "TwistedTiltingSummand",
    "Decomposition",
    "VerificationReport",
    "simple_character",
    "simple_dimension",
    "tensor_decompose",
    "general_tensor_decompose",
    "summand_character",
    "summand_dimension",
    "verify_decomposition",
]

INDECOMPOSABILITY_NOTE = (
    "indecomposability of each summand is assumed, not checked; "
    "only the character identity and the per-level criterion are verified"
)

_TRIVIAL = DominantWeight(0, 0)


@dataclass(frozen=True, slots=True)
class TwistedTiltingSummand:
    lambda_neg1: TiltingLabel
    levels: tuple[TiltingLabel, ...] = ()
    multiplicity: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        if self.multiplicity < 1:
            raise DomainError(f"multiplicity must be positive, got {self.multiplicity}")
        if self.levels and self.levels[-1].weight == _TRIVIAL:
            raise DomainError("summand is not canonical: trailing trivial level")
        if len({t.modulus for t in self.levels}) > 1:
            raise DomainError("classical levels must share one modulus")

    @property
    def weights(self) -> tuple[DominantWeight, ...]:
        return (self.lambda_neg1.weight,) + tuple(t.weight for t in self.levels)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable((w.a, w.b) for w in self.weights))

    def to_text(self) -> str:
        head = f"T({self.lambda_neg1.weight.a},{self.lambda_neg1.weight.b})"
        if self.levels:
            parts = []
            for i, t in enumerate(self.levels):
                w = t.weight
                twist = "" if i == 0 else ("^F̄" if i == 1 else f"^F̄^{i}")
                parts.append(f"T̄({w.a},{w.b}){twist}")
            head += " ⊗ (" + " ⊗ ".join(parts) + ")^F"
        if self.multiplicity != 1:
            head = f"{self.multiplicity}·{head}"
        return head

    def to_latex(self) -> str:
        w = self.lambda_neg1.weight
        head = f"T({w.a},{w.b})"
        if self.levels:
            parts = []
            for i, t in enumerate(self.levels):
                v = t.weight
                twist = "" if i == 0 else ("^{\\overline{F}}" if i == 1 else f"^{{\\overline{{F}}^{{{i}}}}}")
                parts.append(f"\\overline{{T}}({v.a},{v.b}){twist}")
            if len(parts) == 1:
                head += f"\\otimes {parts[0]}^{{F}}"
            else:
                head += "\\otimes\\left(" + "\\otimes ".join(parts) + "\\right)^{F}"
        if self.multiplicity != 1:
            head = f"{self.multiplicity}\\,{head}"
        return head

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Summands of L(a,0) ⊗ L(b,0) ⊗ det^det_power, in canonical descending order.

    ``level_decompositions[0]`` is the quantum-level list I, entry ``i + 1`` is
    the classical list I_i, all before determinant shifting and trimming.
    """

    params: ModularParams
    a: int
    b: int
    summands: tuple[TwistedTiltingSummand, ...]
    det_power: int = 0
    level_decompositions: tuple[tuple[TiltingLabel, ...], ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    def to_text(self) -> str:
        return " ⊕ ".join(s.to_text() for s in self.summands)

    def to_latex(self) -> str:
        return "\\oplus ".join(s.to_latex() for s in self.summands)


@dataclass(frozen=True, slots=True)
class VerificationReport:
    passed: bool
    lhs_dim: int
    rhs_dim: int
    first_difference: tuple[tuple[int, int], int, int] | None = None
    note: str = INDECOMPOSABILITY_NOTE

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        if self.passed:
            return f"OK dim={self.lhs_dim}"
        msg = f"FAIL dims lhs={self.lhs_dim} rhs={self.rhs_dim}"
        if self.first_difference is not None:
            (e1, e2), lhs, rhs = self.first_difference
            msg += f"; monomial x^{e1} y^{e2}: lhs multiplicity {lhs}, rhs multiplicity {rhs}"
        return msg


def _check_nonnegative(a: int) -> None:
    if a < 0:
        raise DomainError(f"expected a nonnegative integer, got {a}")


@lru_cache(maxsize=8192)
def simple_character(a: int, params: ModularParams) -> LaurentCharacter:
    """Character of L(a,0) via Steinberg factorization over the (ell, p) digits."""
    _check_nonnegative(a)
    exp = lp_expansion(a, params)
    char = weyl_character(DominantWeight(exp.tau, 0))
    factor = params.ell
    for d in exp.digits:
        if d:
            char = multiply(char, stretch(weyl_character(DominantWeight(d, 0)), factor))
        factor *= params.p
    return char


def simple_dimension(a: int, params: ModularParams) -> int:
    exp = lp_expansion(a, params)
    dim = exp.tau + 1
    for d in exp.digits:
        dim *= d + 1
    return dim


def tensor_decompose(a: int, b: int, params: ModularParams) -> Decomposition:
    _check_nonnegative(a)
    _check_nonnegative(b)
    ea, eb = lp_expansion(a, params), lp_expansion(b, params)
    n = max(len(ea.digits), len(eb.digits))
    da = ea.digits + (0,) * (n - len(ea.digits))
    db = eb.digits + (0,) * (n - len(eb.digits))

    quantum = tuple(
        restricted_tensor_decompose(DominantWeight(ea.tau, 0), DominantWeight(eb.tau, 0), params.ell)
    )
    classical = [
        tuple(restricted_tensor_decompose(DominantWeight(x, 0), DominantWeight(y, 0), params.p))
        for x, y in zip(da, db)
    ]
    summands = []
    for head, *levels in itertools.product(quantum, *classical):
        while levels and levels[-1].weight == _TRIVIAL:
            levels.pop()
        summands.append(TwistedTiltingSummand(head, tuple(levels)))
    summands.sort(key=TwistedTiltingSummand.sort_key, reverse=True)
    return Decomposition(
        params, a, b, tuple(summands), level_decompositions=(quantum, *classical)
    )


def general_tensor_decompose(
    lam: DominantWeight, mu: DominantWeight, params: ModularParams
) -> Decomposition:
    """L(lam) ⊗ L(mu) for arbitrary dominant weights via determinant reduction."""
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(*lam)
    if not isinstance(mu, DominantWeight):
        mu = DominantWeight(*mu)
    base = tensor_decompose(lam.diff, mu.diff, params)
    k = lam.b + mu.b
    if k == 0:
        return base
    shifted = tuple(
        TwistedTiltingSummand(
            TiltingLabel(det_shift(s.lambda_neg1.weight, k), s.lambda_neg1.modulus),
            s.levels,
            s.multiplicity,
        )
        for s in base.summands
    )
    return Decomposition(
        params, base.a, base.b, shifted, det_power=k, level_decompositions=base.level_decompositions
    )


@lru_cache(maxsize=8192)
def _twisted_tilting_character(t: TiltingLabel, factor: int) -> LaurentCharacter:
    return stretch(chi_expand(tilting_character(t)), factor)


def summand_character(s: TwistedTiltingSummand, params: ModularParams) -> LaurentCharacter:
    char = _twisted_tilting_character(s.lambda_neg1, 1)
    factor = params.ell
    for t in s.levels:
        if t.weight != _TRIVIAL:
            char = multiply(char, _twisted_tilting_character(t, factor))
        factor *= params.p
    if s.multiplicity != 1:
        char = char.scale(s.multiplicity)
    return char


def summand_dimension(s: TwistedTiltingSummand) -> int:
    dim = tilting_dimension(s.lambda_neg1)
    for t in s.levels:
        dim *= tilting_dimension(t)
    return dim * s.multiplicity


def verify_decomposition(d: Decomposition) -> VerificationReport:
    """Compare the summed summand characters with the product of the two simple characters."""
    lhs = multiply(simple_character(d.a, d.params), simple_character(d.b, d.params))
    if d.det_power:
        lhs = multiply(lhs, monomial(d.det_power, d.det_power))
    rhs = LaurentCharacter()
    for s in d.summands:
        rhs = rhs + summand_character(s, d.params)
    lhs_dim, rhs_dim = dimension(lhs), dimension(rhs)
    if lhs == rhs:
        return VerificationReport(True, lhs_dim, rhs_dim)
    diff = lhs - rhs
    worst = max(diff.keys())
    return VerificationReport(False, lhs_dim, rhs_dim, (worst, lhs[worst], rhs[worst]))
