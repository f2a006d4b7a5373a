"""Affine forms in the ensemble weights ``w_1, ..., w_r``.

Constraint right-hand sides and vertex coordinates are affine in the weights
with integer coefficients.  Because the weights satisfy ``sum(w) = 1``, two
forms may look different yet agree on every admissible weight vector; the
canonical key eliminates the constant against that relation so that equality
of keys is equality of forms on the weight simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import WeightVector, rational


@dataclass(frozen=True)
class AffineForm:
    """``const + sum_j coeffs[j] * w_{j+1}`` with exact coefficients."""

    const: Fraction
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "const", rational(self.const))
        object.__setattr__(self, "coeffs", tuple(rational(c) for c in self.coeffs))

    @staticmethod
    def constant(value) -> "AffineForm":
        return AffineForm(rational(value), ())

    @staticmethod
    def linear(coeffs: Sequence) -> "AffineForm":
        return AffineForm(Fraction(0), tuple(rational(c) for c in coeffs))

    def evaluate(self, w: WeightVector) -> Fraction:
        if len(self.coeffs) > w.r:
            raise ValueError(f"form uses {len(self.coeffs)} weights, only {w.r} given")
        return self.const + sum(
            (c * wj for c, wj in zip(self.coeffs, w.entries)), Fraction(0)
        )

    def key(self, r: int) -> tuple[Fraction, ...]:
        """Canonical pure-linear coefficients modulo ``sum(w) = 1``.

        Folding the constant into every coefficient makes the key independent
        of how the form splits between constant and linear parts.
        """
        if len(self.coeffs) > r:
            raise ValueError(f"form uses {len(self.coeffs)} weights, rank is {r}")
        padded = self.coeffs + (Fraction(0),) * (r - len(self.coeffs))
        return tuple(self.const + c for c in padded)

    def drop_last_weight(self, r: int) -> "AffineForm":
        """The form obtained by setting ``w_r = 0`` (rank drops to ``r - 1``)."""
        key = self.key(r)
        return AffineForm.linear(key[: r - 1])

    def display_pair(self, r: int) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Normalize to ``(b0, (b1..br))`` with the last linear coefficient zero."""
        key = self.key(r)
        b0 = key[-1]
        return b0, tuple(k - b0 for k in key)

    def display(self, r: int) -> str:
        """Human-readable ``b0 + b1*w1 + ...`` with zero terms dropped."""
        b0, bw = self.display_pair(r)
        parts: list[str] = []
        if b0 != 0 or all(b == 0 for b in bw):
            parts.append(str(b0))
        for j, b in enumerate(bw, start=1):
            if b == 0:
                continue
            if b == 1:
                term = f"w{j}"
            elif b == -1:
                term = f"-w{j}"
            else:
                term = f"{b}*w{j}"
            if parts and not term.startswith("-"):
                parts.append(f"+{term}")
            else:
                parts.append(term)
        return "".join(parts)

    def __add__(self, other: "AffineForm") -> "AffineForm":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return AffineForm(self.const + other.const, tuple(x + y for x, y in zip(a, b)))

    def scale(self, factor) -> "AffineForm":
        f = rational(factor)
        return AffineForm(self.const * f, tuple(c * f for c in self.coeffs))


def dot_forms(vector: Sequence, forms: Sequence[AffineForm]) -> AffineForm:
    """Exact inner product of a rational vector with a vector of forms."""
    acc = AffineForm.constant(0)
    for a, form in zip(vector, forms):
        if a == 0:
            continue
        acc = acc + form.scale(a)
    return acc
