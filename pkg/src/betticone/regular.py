"""The closed cone of resolution shapes over an n-dimensional regular
local ring: a simplicial cone in Q^{n+1} cut out by the partial Euler
characteristics ending at n, spanned by the free-module ray and the
two-term rays.

Because the cone is simplicial, membership, decomposition, and the shape
classification are all a single pass of functional evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotInConeError
from .sequences import BettiVector, LinearFunctional, chi, chi_name, rho_vector


def facets(n: int) -> list[LinearFunctional]:
    """The n+1 facet functionals chi[j,n], j = 0..n."""
    return [chi(j, n) for j in range(n + 1)]


def rays(n: int) -> list[BettiVector]:
    """The n+1 extremal rays: the free shape, then the two-term shapes."""
    return [rho_vector(i, n) for i in range(-1, n)]


def ray_names(n: int) -> list[str]:
    return [f"rho[{i}]" for i in range(-1, n)]


def _coefficients(v: BettiVector) -> tuple[Fraction, ...]:
    # Coefficient of rho_i is chi[i+1, n](v); index i runs -1..n-1.
    return tuple(chi(i + 1, v.n)(v) for i in range(-1, v.n))


def member(v: BettiVector) -> bool:
    """Closure membership: all partial Euler characteristics chi[j,n] >= 0."""
    return all(a >= 0 for a in _coefficients(v))


def facet_violations(v: BettiVector) -> list[tuple[str, Fraction]]:
    """The facet functionals chi[j,n] that are negative on v, with values."""
    return [(chi_name(i + 1, v.n), c)
            for i, c in zip(range(-1, v.n), _coefficients(v)) if c < 0]


@dataclass(frozen=True)
class RegularDecomposition:
    """Coefficients a_i of the ray expansion v = sum a_i rho_i, i = -1..n-1.

    ``a[k]`` holds the coefficient of rho_{k-1}; use ``coefficient(i)`` to
    address by ray index.  All coefficients are nonnegative exactly when
    the vector is a member of the closed cone.
    """

    n: int
    a: tuple[Fraction, ...]

    def coefficient(self, i: int) -> Fraction:
        if not -1 <= i <= self.n - 1:
            raise IndexError(f"ray index {i} out of range for n={self.n}")
        return self.a[i + 1]

    @property
    def a_minus_1(self) -> Fraction:
        return self.a[0]

    def reconstruct(self) -> BettiVector:
        out = BettiVector(self.n, (Fraction(0),) * (self.n + 1))
        for i in range(-1, self.n):
            out = out + rho_vector(i, self.n).scale(self.a[i + 1])
        return out


def decompose(v: BettiVector) -> RegularDecomposition:
    """Exact ray-coefficient certificate for a member vector.

    Raises NotInConeError naming the violated facet when some chi[j,n] is
    negative.
    """
    coeffs = _coefficients(v)
    bad = [(chi_name(i + 1, v.n), c) for i, c in zip(range(-1, v.n), coeffs) if c < 0]
    if bad:
        raise NotInConeError(
            f"not in the regular cone: {bad[0][0]} = {bad[0][1]}", bad)
    return RegularDecomposition(v.n, coeffs)


@dataclass(frozen=True)
class ShapeClass:
    """Classification of a shape vector.

    realizable means some module's resolution has this shape; it requires
    closure membership plus a contiguous strictly-positive prefix among
    the two-term coefficients (an interior zero rules out every depth).
    depth is defined only for realizable nonzero vectors; the zero vector
    is realizable by convention with no depth.  cm_choice_exists records
    whether the free-ray coefficient vanishes.
    """

    member_of_closure: bool
    realizable: bool
    depth: Optional[int]
    cm_choice_exists: bool
    decomposition: RegularDecomposition


def classify(v: BettiVector) -> ShapeClass:
    n = v.n
    coeffs = _coefficients(v)
    dec = RegularDecomposition(n, coeffs)
    is_member = all(c >= 0 for c in coeffs)
    cm = coeffs[0] == 0

    if not is_member:
        return ShapeClass(False, False, None, cm, dec)
    if v.is_zero:
        return ShapeClass(True, True, None, cm, dec)

    positive = [i for i in range(0, n) if dec.coefficient(i) > 0]
    m = positive[-1] if positive else -1
    contiguous = positive == list(range(0, m + 1))
    if not contiguous:
        return ShapeClass(True, False, None, cm, dec)
    return ShapeClass(True, True, n - 1 - m, cm, dec)
