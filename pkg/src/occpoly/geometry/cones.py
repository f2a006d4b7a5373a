"""Extreme rays of rational polyhedral cones via the double description method.

Cones arrive as inequality systems ``<a, x> >= 0`` together with an explicit
lineality list (directions along which the cone contains full lines).  The
computation quotients the lineality away, runs an incremental double
description pass in the quotient, and lifts the primitive integer rays back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ..core import rational_vector
from ..errors import NotPointedError


def _primitive(vector: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to coprime integers."""
    denoms = [v.denominator for v in vector]
    scale = 1
    for q in denoms:
        scale = scale * q // gcd(scale, q)
    ints = [int(v * scale) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def _kernel_dim(rows: list[list[Fraction]], dim: int) -> int:
    if not rows:
        return dim
    _, pivots = _rref(rows)
    return dim - len(pivots)


def _independent_subset(rows: list[list[Fraction]], dim: int) -> list[int]:
    """Indices of ``dim`` linearly independent rows (assumes full rank)."""
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    for idx, row in enumerate(rows):
        candidate = basis + [list(row)]
        if len(_rref(candidate)[1]) == len(candidate):
            basis = candidate
            chosen.append(idx)
            if len(chosen) == dim:
                return chosen
    raise NotPointedError("inequality system does not have full rank")


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [row[:] + [Fraction(1) if j == i else Fraction(0) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced[:n]]


def extreme_rays_of_system(rows: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{x : <row, x> >= 0 for all rows}``.

    Raises :class:`NotPointedError` when the cone contains a line.  Rays are
    primitive integer vectors; the list is complete and irredundant.
    """
    frac_rows = [list(rational_vector(r)) for r in rows]
    if any(len(r) != dim for r in frac_rows):
        raise ValueError("inequality length mismatch")
    if _kernel_dim(frac_rows, dim) > 0:
        raise NotPointedError("cone contains a line (inequality normals are rank-deficient)")

    init = _independent_subset(frac_rows, dim)
    matrix = [frac_rows[i] for i in init]
    inverse = _invert(matrix)
    rays: list[tuple[int, ...]] = [
        _primitive([inverse[i][j] for i in range(dim)]) for j in range(dim)
    ]
    processed: list[list[Fraction]] = [frac_rows[i] for i in init]
    remaining = [i for i in range(len(frac_rows)) if i not in init]

    def zero_mask(ray: Sequence[int]) -> int:
        mask = 0
        for bit, row in enumerate(processed):
            if _dot(row, ray) == 0:
                mask |= 1 << bit
        return mask

    while remaining:
        # Heuristic insertion order: the row with the most zeros against the
        # current rays tends to limit intermediate blowup.
        zero_counts = [
            sum(1 for ray in rays if _dot(frac_rows[i], ray) == 0) for i in remaining
        ]
        pick = max(range(len(remaining)), key=lambda t: zero_counts[t])
        row_idx = remaining.pop(pick)
        row = frac_rows[row_idx]

        values = [_dot(row, ray) for ray in rays]
        pos = [i for i, v in enumerate(values) if v > 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        if not neg:
            processed.append(row)
            continue
        masks = [zero_mask(ray) for ray in rays]
        new_rays: list[tuple[int, ...]] = []
        for p in pos:
            for q in neg:
                common = masks[p] & masks[q]
                adjacent = not any(
                    k not in (p, q) and (masks[k] & common) == common for k in range(len(rays))
                )
                if not adjacent:
                    continue
                combo = [
                    values[p] * rays[q][j] - values[q] * rays[p][j] for j in range(dim)
                ]
                new_rays.append(_primitive(combo))
        kept = [rays[i] for i in pos + zero]
        processed.append(row)
        merged = {r: None for r in kept}
        for r in new_rays:
            merged.setdefault(r, None)
        rays = list(merged)
    return sorted(rays)


@dataclass(frozen=True)
class Cone:
    """A rational cone ``{x : <a, x> >= 0}`` with explicit lineality.

    Every inequality normal must vanish on every lineality direction (the
    inequalities are well defined on the quotient).
    """

    inequalities: tuple[tuple[Fraction, ...], ...]
    lineality: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self) -> None:
        ineqs = tuple(rational_vector(a) for a in self.inequalities)
        lin = tuple(rational_vector(v) for v in self.lineality)
        object.__setattr__(self, "inequalities", ineqs)
        object.__setattr__(self, "lineality", lin)
        for a in ineqs:
            for v in lin:
                if _dot(a, v) != 0:
                    raise ValueError("inequality does not vanish on a lineality direction")

    @property
    def dim(self) -> int:
        return len(self.inequalities[0]) if self.inequalities else len(self.lineality[0])


@dataclass(frozen=True)
class Ray:
    """A primitive integer extreme-ray direction with its stepwise expansion.

    ``f_expansion`` lists the coefficients over the nested partial-sum basis
    (``f_i`` has ones in the first ``i`` slots): entry ``i`` is
    ``direction[i] - direction[i+1]``.  For directions in the nonincreasing
    chamber these coefficients are nonnegative.
    """

    direction: tuple[int, ...]

    @property
    def f_expansion(self) -> tuple[int, ...]:
        d = self.direction
        return tuple(d[i] - d[i + 1] for i in range(len(d) - 1))


def extreme_rays(cone: Cone) -> list[Ray]:
    """Complete irredundant extreme-ray list of a cone, modulo its lineality.

    The quotient is taken by pinning the pivot coordinates of the lineality
    span to zero.  When the lineality is spanned by the all-ones direction the
    returned representatives are normalized to end in zero, which makes
    chamber rays nonincreasing nonnegative integer vectors.
    """
    dim = cone.dim
    lin = [list(v) for v in cone.lineality]
    if lin:
        _, pivots = _rref(lin)
    else:
        pivots = []
    free = [j for j in range(dim) if j not in pivots]
    if not free:
        raise NotPointedError("lineality spans the whole space")
    projected = [[row[j] for j in free] for row in cone.inequalities]
    quotient_rays = extreme_rays_of_system(projected, len(free))

    all_ones = len(lin) == 1 and len(set(lin[0])) == 1 and lin[0][0] != 0
    out: list[Ray] = []
    for qray in quotient_rays:
        lifted = [0] * dim
        for value, j in zip(qray, free):
            lifted[j] = value
        if all_ones:
            lifted = [v - lifted[-1] for v in lifted]
        out.append(Ray(direction=_primitive([Fraction(v) for v in lifted])))
    return sorted(out, key=lambda r: r.direction)
