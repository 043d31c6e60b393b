"""Weight lattice of GL2: dominance, the regions X1 and pi, linkage, (ell, p) digits."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, RegionError

__all__ = [
    "DominantWeight",
    "ModularParams",
    "LpExpansion",
    "is_prime",
    "is_restricted",
    "in_pi",
    "linkage_partner",
    "lp_expansion",
    "recompose",
    "det_shift",
    "parse_weight",
]


@dataclass(frozen=True, order=True, slots=True)
class DominantWeight:
    """Highest weight (a, b) of GL2 with a >= b.

    Ordering is lexicographic on (a, b), which refines the dominance order
    inside a fixed total degree a + b.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise DomainError(f"weight coordinates must be integers, got ({self.a!r}, {self.b!r})")
        if self.a < self.b:
            raise DomainError(f"weight ({self.a},{self.b}) is not dominant")

    @property
    def diff(self) -> int:
        return self.a - self.b

    @property
    def degree(self) -> int:
        return self.a + self.b

    def __iter__(self):
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, slots=True)
class ModularParams:
    """Order ``ell`` of the root of unity and characteristic ``p`` of the field."""

    ell: int
    p: int

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise DomainError(f"ell must be at least 2, got {self.ell}")
        if not is_prime(self.p):
            raise DomainError(f"p must be prime, got {self.p}")
        if self.ell % self.p == 0:
            raise DomainError(f"p={self.p} divides ell={self.ell}")


@dataclass(frozen=True, slots=True)
class LpExpansion:
    """``tau + ell * sum(digits[i] * p**i)`` with canonical (no trailing zero) digits."""

    tau: int
    digits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        # accept any sequence, store a tuple
        object.__setattr__(self, "digits", tuple(self.digits))

    def check(self, params: ModularParams) -> None:
        if not 0 <= self.tau <= params.ell - 1:
            raise DomainError(f"tau={self.tau} outside [0, {params.ell - 1}]")
        for i, d in enumerate(self.digits):
            if not 0 <= d <= params.p - 1:
                raise DomainError(f"digit a_{i}={d} outside [0, {params.p - 1}]")
        if self.digits and self.digits[-1] == 0:
            raise DomainError("digit list has a trailing zero")


def _check_modulus(m: int) -> None:
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")


def is_restricted(lam: DominantWeight, m: int) -> bool:
    """True iff ``0 <= a - b <= m - 1``."""
    _check_modulus(m)
    return 0 <= lam.diff <= m - 1


def in_pi(lam: DominantWeight, m: int) -> bool:
    """True iff ``0 <= a - b <= 2(m - 1)``."""
    _check_modulus(m)
    return 0 <= lam.diff <= 2 * (m - 1)


def linkage_partner(lam: DominantWeight, m: int) -> DominantWeight:
    """Second constituent of the tilting character of a weight in pi minus X1.

    With ``a - b = m + r`` the partner is ``lam - (r+1)(e1 - e2)``; it has the
    same total degree and difference ``m - r - 2``.
    """
    _check_modulus(m)
    if not m <= lam.diff <= 2 * (m - 1):
        raise RegionError(f"weight {lam} is not in pi \\ X1 for modulus {m}")
    shift = lam.diff - m + 1
    return DominantWeight(lam.a - shift, lam.b + shift)


def lp_expansion(a: int, params: ModularParams) -> LpExpansion:
    if a < 0:
        raise DomainError(f"cannot expand negative integer {a}")
    q, tau = divmod(a, params.ell)
    digits = []
    while q:
        q, d = divmod(q, params.p)
        digits.append(d)
    return LpExpansion(tau, tuple(digits))


def recompose(exp: LpExpansion, params: ModularParams) -> int:
    exp.check(params)
    total = 0
    for d in reversed(exp.digits):
        total = total * params.p + d
    return exp.tau + params.ell * total


def det_shift(lam: DominantWeight, k: int) -> DominantWeight:
    """Tensor by the k-th power of the determinant: ``(a+k, b+k)``."""
    return DominantWeight(lam.a + k, lam.b + k)


def parse_weight(text: str) -> DominantWeight:
    """Parse ``"a,b"`` or ``"a"`` (meaning ``b = 0``)."""
    parts = [s.strip() for s in str(text).split(",")]
    if len(parts) == 1:
        parts.append("0")
    if len(parts) != 2:
        raise DomainError(f"cannot parse weight {text!r}; expected 'a' or 'a,b'")
    try:
        a, b = (int(s) for s in parts)
    except ValueError:
        raise DomainError(f"cannot parse weight {text!r}; expected integers") from None
    return DominantWeight(a, b)
