"""Numerics of pure resolutions: the closed-form shape vector attached to
a strictly increasing degree sequence, its defining linear equations, and
the degree families whose normalized shapes converge to the two-term rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ConeInputError
from .sequences import BettiVector, rho_vector


@dataclass(frozen=True)
class DegreeSequence:
    """Strictly increasing integers (d_0, ..., d_s)."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if not degrees:
            raise ConeInputError("degree sequence must be nonempty")
        if any(a >= b for a, b in zip(degrees, degrees[1:])):
            raise ConeInputError(
                f"degree sequence must be strictly increasing, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def s(self) -> int:
        return len(self.degrees) - 1

    def __iter__(self):
        return iter(self.degrees)


def herzog_kuhl(d: DegreeSequence, n: int) -> BettiVector:
    """Shape of the pure resolution with degree sequence d, zero-padded to
    length n+1: entry i (for i <= s) is 1 / prod_{j != i} |d_j - d_i|."""
    if d.s > n:
        raise ConeInputError(
            f"degree sequence length {d.s + 1} exceeds ambient n+1={n + 1}")
    degs = d.degrees
    entries = [
        Fraction(1, prod(abs(dj - degs[i]) for j, dj in enumerate(degs) if j != i))
        for i in range(d.s + 1)
    ]
    entries += [Fraction(0)] * (n - d.s)
    return BettiVector(n, tuple(entries))


def hk_residual(v: BettiVector, d: DegreeSequence, k: int) -> Fraction:
    """The k-th defining equation, sum_i (-1)^i d_i^k v_i with 0^0 = 1.

    Vanishes identically on herzog_kuhl(d) for 0 <= k <= s-1; nonzero
    residuals witness that a vector is not the pure shape for d.
    """
    total = Fraction(0)
    for i, di in enumerate(d.degrees):
        power = 1 if k == 0 else di ** k
        total += Fraction((-1) ** i) * power * v[i]
    return total


def degree_family(j: int, t: int, n: int) -> DegreeSequence:
    """The degree sequence d^{j,t}: d_k = k*t for k <= j, (k-1)*t + 1 for
    k > j; length n+1.  Requires t >= 2 so the entries stay strictly
    increasing."""
    if not 0 <= j <= n - 1:
        raise ConeInputError(f"family index j={j} out of range for n={n}")
    if t < 2:
        raise ConeInputError(f"family parameter must satisfy t >= 2, got t={t}")
    return DegreeSequence(tuple(k * t if k <= j else (k - 1) * t + 1
                                for k in range(n + 1)))


def normalize_at(v: BettiVector, j: int) -> BettiVector:
    """Scale v so entry j becomes 1."""
    if not 0 <= j <= v.n:
        raise ConeInputError(f"pivot index {j} out of range")
    if v[j] == 0:
        raise ConeInputError(f"cannot normalize at a zero entry (index {j})")
    return v.scale(Fraction(1) / v[j])


def limit_gap(j: int, t: int, n: int) -> Fraction:
    """Max-norm distance between the j-normalized pure shape for d^{j,t}
    and its limit ray epsilon_j + epsilon_{j+1}."""
    v = normalize_at(herzog_kuhl(degree_family(j, t, n), n), j)
    target = rho_vector(j, n)
    return max(abs(a - b) for a, b in zip(v.entries, target.entries))
