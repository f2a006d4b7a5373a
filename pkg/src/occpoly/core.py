"""Foundational domain types: quantum sectors, weight vectors, spectra, majorization.

All polytope-defining arithmetic in this package is exact rational.  The
rational type is :class:`fractions.Fraction` (always in lowest terms with a
positive denominator), re-exported here as ``ExactRational``.  Floating point
appears only in the optional eigenvalue routine of :mod:`occpoly.oracle`.

Spin quantum numbers are stored doubled (integers ``2S``, ``2M``) so that no
half-integer bookkeeping is needed.  All types are immutable after
construction and every operation is pure, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import LengthError, NormalizationError, ParityError, RangeError

#: Exact rational scalar used throughout.  ``fractions.Fraction`` already
#: guarantees lowest terms and a positive denominator.
ExactRational = Fraction

RationalLike = Union[int, Fraction, str]


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational.

    Decimal notation is rejected: exactness must be preserved end to end.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal notation is not exact: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_vector(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(rational(v) for v in values)


def format_rational(value: Fraction) -> str:
    """Render ``p/q`` (or plain ``p`` for integers)."""
    return str(value)


@dataclass(frozen=True)
class QuantumSystem:
    """A fixed sector: ``N`` fermions with total spin ``S`` in ``d`` orbitals.

    ``two_S`` and ``two_M`` store the doubled (half-integer) quantum numbers.
    ``two_M`` is optional; no spectral quantity computed here depends on it.
    """

    N: int
    two_S: int
    d: int
    two_M: int | None = None

    def __post_init__(self) -> None:
        if self.N <= 0:
            raise RangeError(f"particle number must be positive, got N={self.N}")
        if self.d <= 0:
            raise RangeError(f"orbital count must be positive, got d={self.d}")
        if self.two_S < 0:
            raise RangeError(f"2S must be nonnegative, got {self.two_S}")
        if self.two_S % 2 != self.N % 2:
            raise ParityError(f"2S={self.two_S} and N={self.N} have different parity")
        if self.two_S > self.N:
            raise RangeError(f"2S={self.two_S} exceeds N={self.N}")
        if self.N > 2 * self.d:
            raise RangeError(f"N={self.N} exceeds the capacity 2d={2 * self.d}")
        if self.N + self.two_S > 2 * self.d:
            # The sector is empty: even the maximally paired configuration
            # needs (N + 2S)/2 distinct orbitals.
            raise RangeError(
                f"(N + 2S)/2 = {(self.N + self.two_S) // 2} orbitals needed, "
                f"only d={self.d} available"
            )
        if self.two_M is not None:
            if abs(self.two_M) > self.two_S:
                raise RangeError(f"|2M|={abs(self.two_M)} exceeds 2S={self.two_S}")
            if (self.two_M - self.two_S) % 2 != 0:
                raise ParityError(f"2M={self.two_M} and 2S={self.two_S} differ in parity")

    @property
    def K(self) -> int:
        """Number of doubly occupied orbitals in the ground configuration."""
        return (self.N - self.two_S) // 2

    @property
    def J(self) -> int:
        """Number of occupied orbitals in the ground configuration."""
        return (self.N + self.two_S) // 2

    def __str__(self) -> str:
        m = "" if self.two_M is None else f", 2M={self.two_M}"
        return f"(N={self.N}, 2S={self.two_S}, d={self.d}{m})"


def validate_system(N: int, twoS: int, d: int, twoM: int | None = None) -> QuantumSystem:
    """Validate raw integers into a :class:`QuantumSystem`; never clamps."""
    return QuantumSystem(N=N, two_S=twoS, d=d, two_M=twoM)


@dataclass(frozen=True)
class WeightVector:
    """Nonincreasing positive rationals summing to one.

    Trailing zeros are implicit; ``r`` is the number of stored (positive)
    entries.  Equal consecutive entries are allowed.
    """

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("weight vector needs at least one entry")
        object.__setattr__(self, "entries", rational_vector(self.entries))
        if any(w <= 0 for w in self.entries):
            raise ValueError("all stored weights must be positive (zeros are implicit)")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("weights must be nonincreasing")
        if sum(self.entries) != 1:
            raise ValueError(f"weights must sum to 1 exactly, got {sum(self.entries)}")

    @property
    def r(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j: int) -> Fraction:
        return self.entries[j]

    def padded(self, length: int) -> tuple[Fraction, ...]:
        if length < self.r:
            raise LengthError(f"cannot pad {self.r} weights into length {length}")
        return self.entries + (Fraction(0),) * (length - self.r)

    @staticmethod
    def from_strings(text: str) -> "WeightVector":
        """Parse a comma-separated list of ``p/q`` entries."""
        return WeightVector(tuple(rational(part) for part in text.split(",")))

    @staticmethod
    def pure() -> "WeightVector":
        """The rank-1 weight vector (1, 0, ...)."""
        return WeightVector((Fraction(1),))

    @staticmethod
    def uniform(r: int) -> "WeightVector":
        return WeightVector((Fraction(1, r),) * r)

    @staticmethod
    def generic(r: int, base: int = 2) -> "WeightVector":
        """Strictly decreasing weights with pairwise distinct gaps.

        Components are proportional to ``base**(r-j)``; used as an internal
        sampling point where symbolic forms must separate.
        """
        total = sum(base**k for k in range(r))
        return WeightVector(tuple(Fraction(base ** (r - j), total) for j in range(1, r + 1)))


@dataclass(frozen=True)
class Spectrum:
    """A candidate occupation-number vector attached to nothing in particular.

    The bounds ``0 <= entry <= 2`` are deliberately not enforced: they are a
    consequence of membership in the admissible polytope, to be tested, not an
    axiom of the type.
    """

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", rational_vector(self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def sorted_descending(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.entries, reverse=True))

    def check_total(self, N: int) -> None:
        if self.total != N:
            raise NormalizationError(f"spectrum sums to {self.total}, expected {N}")


def sort_descending(
    values: Sequence[RationalLike],
) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    """Stable descending sort; returns (sorted, permutation).

    ``permutation[i]`` is the position of input entry ``i`` in the sorted
    output.  Ties keep input order, so the result is deterministic.
    """
    vec = rational_vector(values)
    order = sorted(range(len(vec)), key=lambda i: (-vec[i], i))
    perm = [0] * len(vec)
    for sorted_pos, original in enumerate(order):
        perm[original] = sorted_pos
    return tuple(vec[i] for i in order), tuple(perm)


def partial_sums(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = []
    acc = Fraction(0)
    for v in values:
        acc += v
        out.append(acc)
    return tuple(out)


def majorizes(x: Sequence[RationalLike], y: Sequence[RationalLike]) -> bool:
    """Whether ``x`` majorizes ``y`` (``y`` is at least as mixed as ``x``).

    Vectors are padded with zeros to a common length.  Totals must agree
    exactly, otherwise the comparison is undefined and ``LengthError`` is
    raised.  Returns True iff every partial sum of the descending arrangement
    of ``y`` is bounded by the corresponding partial sum for ``x``.
    """
    xv = rational_vector(x)
    yv = rational_vector(y)
    size = max(len(xv), len(yv))
    xv = xv + (Fraction(0),) * (size - len(xv))
    yv = yv + (Fraction(0),) * (size - len(yv))
    if sum(xv) != sum(yv):
        raise LengthError(f"totals differ: {sum(xv)} vs {sum(yv)}")
    xs = partial_sums(sorted(xv, reverse=True))
    ys = partial_sums(sorted(yv, reverse=True))
    return all(sy <= sx for sx, sy in zip(xs, ys))
