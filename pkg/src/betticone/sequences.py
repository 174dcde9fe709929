"""Finite and tail-periodic rational sequences, plus the linear functionals
used to cut out cones of resolution shapes.

Two ambient spaces appear throughout: finite vectors of length n+1
(`BettiVector`, resolutions over a regular ring of dimension n) and
infinite sequences whose entries are eventually 2-periodic
(`TailPeriodicSequence`, resolutions over a hypersurface ring, and every
image of the prefix-sum transform).  All entries are exact rationals; no
floating point enters anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ConeInputError, MalformedInputError

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions, and "p/q" strings; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value.strip()):
            raise MalformedInputError(f"not a rational string: {value!r}")
        return Fraction(value.strip())
    raise MalformedInputError(f"not a rational: {value!r}")


def rational_str(value: Fraction) -> str:
    """Serialize exactly: "p/q", or a bare integer string when q = 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class BettiVector:
    """A finite shape vector (v_0, ..., v_n) in Q^{n+1}."""

    n: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ConeInputError(f"ambient length must be nonnegative, got n={self.n}")
        entries = tuple(as_fraction(e) for e in self.entries)
        if len(entries) != self.n + 1:
            raise ConeInputError(
                f"expected {self.n + 1} entries for n={self.n}, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, entries: Iterable[RationalLike]) -> "BettiVector":
        items = tuple(as_fraction(e) for e in entries)
        if not items:
            raise ConeInputError("a shape vector needs at least one entry")
        return cls(len(items) - 1, items)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __add__(self, other: "BettiVector") -> "BettiVector":
        if self.n != other.n:
            raise ConeInputError("cannot add vectors of different ambient length")
        return BettiVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c: RationalLike) -> "BettiVector":
        c = as_fraction(c)
        return BettiVector(self.n, tuple(c * e for e in self.entries))

    __rmul__ = scale

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


@dataclass(frozen=True)
class TailPeriodicSequence:
    """An infinite sequence whose entries, from index ``stab`` on, depend
    only on index parity: ``tail_even`` at even indices, ``tail_odd`` at
    odd ones.

    The stored form is canonical: ``stab`` is minimal, i.e. no trailing
    head entry already agrees with the tail value for its parity.  This
    makes equality structural and the type hashable.
    """

    stab: int
    head: tuple[Fraction, ...]
    tail_even: Fraction
    tail_odd: Fraction

    def __post_init__(self):
        if self.stab < 0:
            raise ConeInputError("stabilization index must be nonnegative")
        head = tuple(as_fraction(e) for e in self.head)
        if len(head) != self.stab:
            raise ConeInputError(
                f"head length {len(head)} does not match stab={self.stab}")
        te = as_fraction(self.tail_even)
        to = as_fraction(self.tail_odd)
        # Trim head entries that the periodic tail already reproduces.
        stab = self.stab
        while stab > 0:
            tail_value = te if (stab - 1) % 2 == 0 else to
            if head[stab - 1] != tail_value:
                break
            stab -= 1
        object.__setattr__(self, "stab", stab)
        object.__setattr__(self, "head", head[:stab])
        object.__setattr__(self, "tail_even", te)
        object.__setattr__(self, "tail_odd", to)

    @classmethod
    def constant_tail(cls, head: Iterable[RationalLike], tail: RationalLike
                      ) -> "TailPeriodicSequence":
        head = tuple(as_fraction(e) for e in head)
        t = as_fraction(tail)
        return cls(len(head), head, t, t)

    @classmethod
    def zero(cls) -> "TailPeriodicSequence":
        return cls(0, (), Fraction(0), Fraction(0))

    def entry(self, i: int) -> Fraction:
        if i < 0:
            raise ConeInputError(f"sequence index must be nonnegative, got {i}")
        if i < self.stab:
            return self.head[i]
        return self.tail_even if i % 2 == 0 else self.tail_odd

    def prefix(self, length: int) -> tuple[Fraction, ...]:
        return tuple(self.entry(i) for i in range(length))

    def __add__(self, other: "TailPeriodicSequence") -> "TailPeriodicSequence":
        stab = max(self.stab, other.stab)
        head = tuple(self.entry(i) + other.entry(i) for i in range(stab))
        return TailPeriodicSequence(stab, head,
                                    self.tail_even + other.tail_even,
                                    self.tail_odd + other.tail_odd)

    def scale(self, c: RationalLike) -> "TailPeriodicSequence":
        c = as_fraction(c)
        return TailPeriodicSequence(self.stab, tuple(c * e for e in self.head),
                                    c * self.tail_even, c * self.tail_odd)

    __rmul__ = scale

    @property
    def is_zero(self) -> bool:
        return (self.tail_even == 0 and self.tail_odd == 0
                and all(e == 0 for e in self.head))


Sequence = Union[BettiVector, TailPeriodicSequence]


def embed(v: BettiVector) -> TailPeriodicSequence:
    """View a finite vector inside the tail-periodic space (zero tail)."""
    return TailPeriodicSequence(v.n + 1, v.entries, Fraction(0), Fraction(0))


def truncate(s: TailPeriodicSequence, length: int) -> BettiVector:
    """First ``length`` entries as a finite vector."""
    if length < 1:
        raise ConeInputError("truncation length must be at least 1")
    return BettiVector(length - 1, s.prefix(length))


@dataclass(frozen=True)
class LinearFunctional:
    """A finitely supported rational functional on the sequence space.

    Evaluation on either sequence type is the finite sum over the support.
    """

    coeffs: tuple[tuple[int, Fraction], ...] = field(default=())

    def __post_init__(self):
        items = []
        for i, c in self.coeffs:
            c = as_fraction(c)
            if i < 0:
                raise ConeInputError("functional support must be at nonnegative indices")
            if c != 0:
                items.append((i, c))
        items.sort()
        object.__setattr__(self, "coeffs", tuple(items))

    @classmethod
    def from_map(cls, mapping: Mapping[int, RationalLike]) -> "LinearFunctional":
        return cls(tuple((i, as_fraction(c)) for i, c in mapping.items()))

    def __call__(self, seq: Sequence) -> Fraction:
        if isinstance(seq, BettiVector):
            return sum((c * seq.entries[i] for i, c in self.coeffs if i <= seq.n),
                       Fraction(0))
        return sum((c * seq.entry(i) for i, c in self.coeffs), Fraction(0))

    def __add__(self, other: "LinearFunctional") -> "LinearFunctional":
        acc = dict(self.coeffs)
        for i, c in other.coeffs:
            acc[i] = acc.get(i, Fraction(0)) + c
        return LinearFunctional.from_map(acc)

    def scale(self, c: RationalLike) -> "LinearFunctional":
        c = as_fraction(c)
        return LinearFunctional(tuple((i, c * v) for i, v in self.coeffs))

    __rmul__ = scale

    def coefficient(self, i: int) -> Fraction:
        for j, c in self.coeffs:
            if j == i:
                return c
        return Fraction(0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.coeffs)

    def as_vector(self, length: int) -> tuple[Fraction, ...]:
        """Coefficients on indices 0..length-1 (support beyond is an error)."""
        if self.coeffs and self.coeffs[-1][0] >= length:
            raise ConeInputError("functional support exceeds requested length")
        vec = [Fraction(0)] * length
        for i, c in self.coeffs:
            vec[i] = c
        return tuple(vec)


def chi(i: int, j: int) -> LinearFunctional:
    """Partial Euler characteristic: alternating-sign coordinate sum over
    indices i..j, starting with +1 at i.  The empty range j = i-1 gives
    the zero functional (used when building the multiplicity functionals).
    """
    if i < 0:
        raise ConeInputError(f"chi range must start at a nonnegative index, got i={i}")
    if i > j + 1:
        raise ConeInputError(f"invalid chi range [{i},{j}]")
    return LinearFunctional(tuple((k, Fraction((-1) ** (k - i))) for k in range(i, j + 1)))


def xi(i: int, j: int, d: int) -> LinearFunctional:
    """Facet functional of the multiplicity-d cone: d*chi[i,j-1] plus
    (d-1) (when j-i is even) or -1 (when j-i is odd) at index j."""
    if d < 2:
        raise ConeInputError(f"multiplicity must be at least 2, got d={d}")
    if i < 0 or i > j:
        raise ConeInputError(f"invalid xi range [{i},{j}]")
    end_coeff = Fraction(d - 1) if (j - i) % 2 == 0 else Fraction(-1)
    return chi(i, j - 1).scale(d) + LinearFunctional.from_map({j: end_coeff})


def chi_name(i: int, j: int) -> str:
    return f"chi[{i},{j}]"


def xi_name(i: int, j: int) -> str:
    return f"xi[{i},{j}]"


def rho_vector(i: int, n: int) -> BettiVector:
    """The two-term-complex shape epsilon_i + epsilon_{i+1} in Q^{n+1};
    i = -1 degenerates to the free-module shape epsilon_0."""
    if not -1 <= i <= n - 1:
        raise ConeInputError(f"rho index {i} out of range for n={n}")
    entries = [Fraction(0)] * (n + 1)
    if i == -1:
        entries[0] = Fraction(1)
    else:
        entries[i] = Fraction(1)
        entries[i + 1] = Fraction(1)
    return BettiVector(n, tuple(entries))


def ray(kind: str, i: int, n: int, d: int | None = None) -> TailPeriodicSequence:
    """Named extremal rays as tail-periodic sequences.

    kind "rho": finite ray, -1 <= i <= n-1.
    kind "tau_inf": ones from index i on, i in {n-2, n-1}, n >= 2.
    kind "tau_d": like tau_inf but the entry at index n-2 is (d-1)/d
        for i = n-2 and 1/d for i = n-1; requires d >= 2.
    """
    if kind == "rho":
        return embed(rho_vector(i, n))
    if kind in ("tau_inf", "tau_d"):
        if n < 2:
            raise ConeInputError(f"tau rays need n >= 2, got n={n}")
        if i not in (n - 2, n - 1):
            raise ConeInputError(f"tau index {i} out of range for n={n}")
        if kind == "tau_inf":
            head = (Fraction(0),) * i
            return TailPeriodicSequence.constant_tail(head, 1)
        if d is None or d < 2:
            raise ConeInputError(f"tau_d rays need multiplicity d >= 2, got {d}")
        at_corner = Fraction(d - 1, d) if i == n - 2 else Fraction(1, d)
        head = (Fraction(0),) * (n - 2) + (at_corner,)
        return TailPeriodicSequence(n - 1, head, Fraction(1), Fraction(1))
    raise ConeInputError(f"unknown ray kind: {kind!r}")


def shape_equal(a: Sequence, b: Sequence) -> bool:
    """True when a = lambda * b for some positive rational lambda.

    The zero sequence is shape-equal only to itself.
    """
    a_zero = a.is_zero
    b_zero = b.is_zero
    if a_zero or b_zero:
        return a_zero and b_zero
    if isinstance(a, BettiVector) != isinstance(b, BettiVector):
        return False
    if isinstance(a, BettiVector):
        if a.n != b.n:
            return False
        pairs = list(zip(a.entries, b.entries))
    else:
        length = max(a.stab, b.stab) + 2  # two tail entries cover both parities
        pairs = list(zip(a.prefix(length), b.prefix(length)))
    lam = next((x / y for x, y in pairs if y != 0), None)
    if lam is None or lam <= 0:
        return False
    return all(x == lam * y for x, y in pairs)


# ---------------------------------------------------------------------------
# JSON schema shared by all CLI commands.
#
# finite:        {"kind": "finite", "n": 3, "entries": ["1","3","3","1"]}
# tail-periodic: {"kind": "tail", "stab": 2, "head": ["1","3"],
#                 "tail_even": "4", "tail_odd": "4"}
# ---------------------------------------------------------------------------

def sequence_to_json(seq: Sequence) -> dict:
    if isinstance(seq, BettiVector):
        return {"kind": "finite", "n": seq.n,
                "entries": [rational_str(e) for e in seq.entries]}
    return {"kind": "tail", "stab": seq.stab,
            "head": [rational_str(e) for e in seq.head],
            "tail_even": rational_str(seq.tail_even),
            "tail_odd": rational_str(seq.tail_odd)}


def sequence_from_json(data) -> Sequence:
    if not isinstance(data, dict):
        raise MalformedInputError("sequence JSON must be an object")
    kind = data.get("kind")
    try:
        if kind == "finite":
            entries = data["entries"]
            if not isinstance(entries, list):
                raise MalformedInputError('"entries" must be a list of rational strings')
            vec = BettiVector.of(entries)
            if "n" in data and data["n"] != vec.n:
                raise MalformedInputError(
                    f'"n"={data["n"]} does not match {len(entries)} entries')
            return vec
        if kind == "tail":
            head = data["head"]
            if not isinstance(head, list):
                raise MalformedInputError('"head" must be a list of rational strings')
            seq = TailPeriodicSequence(len(head), tuple(as_fraction(e) for e in head),
                                       as_fraction(data["tail_even"]),
                                       as_fraction(data["tail_odd"]))
            if "stab" in data and data["stab"] != len(head):
                raise MalformedInputError(
                    f'"stab"={data["stab"]} does not match head length {len(head)}')
            return seq
    except KeyError as exc:
        raise MalformedInputError(f"sequence JSON is missing field {exc}") from exc
    except ConeInputError as exc:
        raise MalformedInputError(str(exc)) from exc
    raise MalformedInputError(f'unknown sequence kind: {kind!r}')
