"""Independent brute-force verifiers.

Everything here deliberately avoids the polyhedral pipeline: ensemble
energies come from direct enumeration of configuration energies, membership
cross-checks play two independent membership routes against each other on
random spectra, and facet audits count tight vertex permutations.  Agreement
between these verifiers and the pipeline is the package's strongest internal
evidence of correctness.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .core import QuantumSystem, Spectrum, WeightVector, rational_vector
from .errors import NoConvergenceError, RangeError
from .geometry.polytope import (
    HRep,
    LinearConstraint,
    VRep,
    build_polytope,
    member_hrep,
    member_majorization,
    remove_redundant,
)
from .poset import enumerate_configurations, hilbert_dim

__all__ = [
    "gok_energy_direct",
    "audit_hrep",
    "AuditReport",
    "symmetric_eigenvalues",
    "random_simplex_spectrum",
    "hierarchy_reduction_check",
]


def gok_energy_direct(h_diag, system: QuantumSystem, w: WeightVector) -> Fraction:
    """Weighted sum of the lowest ensemble energies by direct enumeration.

    Every spin-compatible configuration contributes its one-particle energy
    once per unit of multiplicity; the weights multiply the sorted energies.
    """
    h = rational_vector(h_diag)
    if len(h) != system.d:
        raise RangeError(f"spectrum has {len(h)} entries, system needs {system.d}")
    if w.r > hilbert_dim(system):
        raise RangeError(f"rank {w.r} exceeds sector dimension {hilbert_dim(system)}")
    energies: list[tuple[Fraction, int]] = []
    for config, mult in enumerate_configurations(system):
        value = sum((hi * n for hi, n in zip(h, config.occupation)), Fraction(0))
        energies.append((value, mult))
    energies.sort(key=lambda t: t[0])
    total = Fraction(0)
    level = 0
    for value, mult in energies:
        for _ in range(mult):
            if level >= w.r:
                return total
            total += w[level] * value
            level += 1
    return total


def random_simplex_spectrum(system: QuantumSystem, rng: random.Random, bits: int = 16) -> Spectrum:
    """A random nonnegative rational spectrum with exact total N.

    Dyadic coordinates are drawn and rescaled so membership checks stay exact.
    """
    while True:
        raw = [Fraction(rng.getrandbits(bits), 2**bits) for _ in range(system.d)]
        total = sum(raw, Fraction(0))
        if total > 0:
            return Spectrum(tuple(system.N * x / total for x in raw))


def _affine_rank_tracker(dim: int):
    """Incremental affine-rank counter via exact Gaussian elimination."""
    basis: list[list[Fraction]] = []
    base_point: list[Fraction] | None = None

    def add(point: Sequence[Fraction]) -> int:
        nonlocal base_point
        if base_point is None:
            base_point = list(point)
            return 0
        vec = [p - b for p, b in zip(point, base_point)]
        for row in basis:
            pivot = next((j for j in range(dim) if row[j] != 0), None)
            if pivot is not None and vec[pivot] != 0:
                factor = vec[pivot] / row[pivot]
                vec = [a - factor * b for a, b in zip(vec, row)]
        if any(x != 0 for x in vec):
            basis.append(vec)
        return len(basis)

    return add


def _tight_permutations(a: Sequence[int], vertex: Sequence[Fraction]):
    """All permutations of ``vertex`` maximizing ``<a, .>``, lazily.

    With ``a`` nonincreasing the maximizers place the largest remaining
    entries on each run of equal ``a``-values; arrangements within a run are
    free.  Runs are small, so the lazy product stays cheap.
    """
    runs: list[int] = []
    start = 0
    for i in range(1, len(a) + 1):
        if i == len(a) or a[i] != a[start]:
            runs.append(i - start)
            start = i
    values = sorted(vertex, reverse=True)
    chunks: list[tuple[tuple[Fraction, ...], ...]] = []
    offset = 0
    for size in runs:
        chunk = tuple(values[offset : offset + size])
        chunks.append(tuple(sorted(set(permutations(chunk)))))
        offset += size

    def walk(idx: int, prefix: tuple[Fraction, ...]):
        if idx == len(chunks):
            yield prefix
            return
        for arrangement in chunks[idx]:
            yield from walk(idx + 1, prefix + arrangement)

    yield from walk(0, ())


@dataclass(frozen=True)
class AuditReport:
    """Outcome of the three-part representation audit."""

    vertex_violations: tuple[str, ...] = ()
    tightness_failures: tuple[str, ...] = ()
    membership_mismatches: tuple[str, ...] = ()
    samples: int = 0
    seed: int = 0

    @property
    def ok(self) -> bool:
        return not (
            self.vertex_violations or self.tightness_failures or self.membership_mismatches
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "ok": self.ok,
                "samples": self.samples,
                "seed": self.seed,
                "vertex_violations": list(self.vertex_violations),
                "tightness_failures": list(self.tightness_failures),
                "membership_mismatches": list(self.membership_mismatches),
            },
            indent=2,
        )


def audit_hrep(vrep: VRep, hrep: HRep, sample_count: int, seed: int) -> AuditReport:
    """Audit a paired representation.

    (a) every permuted vertex satisfies every row -- since rows are
    nonincreasing, the sorted pairing bounds the whole permutation orbit, so
    the generating vertices themselves are checked exactly;
    (b) each row is tight on permuted vertices of affine rank >= d - 2;
    (c) the two membership routes agree on seeded random simplex spectra.

    Deterministic for a fixed seed.  Failures are reported, never raised.
    """
    d = vrep.system.d
    vertex_violations: list[str] = []
    rhs_values = hrep.rhs_values()
    for vertex in vrep.vertices:
        for row, rhs in zip(hrep.rows, rhs_values):
            lhs = row.lhs_value(vertex.evaluated)
            if lhs > rhs:
                vertex_violations.append(
                    f"vertex {tuple(map(str, vertex.evaluated))} violates "
                    f"{row.a}: {lhs} > {rhs}"
                )

    tightness_failures: list[str] = []
    for row, rhs in zip(hrep.rows, rhs_values):
        tracker = _affine_rank_tracker(d)
        rank = 0
        for vertex in vrep.vertices:
            if row.lhs_value(vertex.evaluated) != rhs:
                continue
            for point in _tight_permutations(row.a, vertex.evaluated):
                rank = tracker(point)
                if rank >= d - 2:
                    break
            if rank >= d - 2:
                break
        if rank < d - 2:
            tightness_failures.append(
                f"row {row.a} tight on affine rank {rank} < {d - 2}"
            )

    rng = random.Random(seed)
    membership_mismatches: list[str] = []
    for _ in range(sample_count):
        spectrum = random_simplex_spectrum(vrep.system, rng)
        via_rows = member_hrep(spectrum, hrep).is_member
        via_mixture, _ = member_majorization(spectrum, vrep)
        if via_rows != via_mixture:
            membership_mismatches.append(
                f"{tuple(map(str, spectrum.entries))}: rows={via_rows} mixture={via_mixture}"
            )
    return AuditReport(
        vertex_violations=tuple(vertex_violations),
        tightness_failures=tuple(tightness_failures),
        membership_mismatches=tuple(membership_mismatches),
        samples=sample_count,
        seed=seed,
    )


def hierarchy_reduction_check(system: QuantumSystem, r: int) -> bool:
    """Setting the last weight to zero must reproduce the rank-(r-1) system.

    The rank-r symbolic rows are restricted to ``w_r = 0``, reminimized at a
    generic rank-(r-1) weight vector, and compared (as canonical row keys)
    with the independently built rank-(r-1) description.
    """
    if r < 2:
        raise RangeError("hierarchy reduction needs r >= 2")
    w_low = WeightVector.generic(r - 1) if r > 2 else WeightVector.pure()
    high = build_polytope(system, WeightVector.generic(r)).hrep
    restricted = HRep(
        system=system,
        w=w_low,
        rows=tuple(
            LinearConstraint(a=row.a, rhs=row.rhs.drop_last_weight(r)) for row in high.rows
        ),
    )
    reduced = remove_redundant(restricted)
    low = build_polytope(system, w_low).hrep
    return set(reduced.row_keys()) == set(low.row_keys())


def symmetric_eigenvalues(matrix: Sequence[Sequence[float]], tol: float) -> tuple[float, ...]:
    """Eigenvalues of a small real symmetric matrix, sorted nonincreasing.

    Cyclic Jacobi sweeps rotate away off-diagonal mass until its Frobenius
    norm drops below ``tol``; the sweep budget is 100.
    """
    d = len(matrix)
    a = [[float(x) for x in row] for row in matrix]
    if d == 1:
        return (a[0][0],)
    for _ in range(100):
        off = sum(a[i][j] ** 2 for i in range(d) for j in range(d) if i != j)
        if off < tol * tol:
            return tuple(sorted((a[i][i] for i in range(d)), reverse=True))
        for p in range(d - 1):
            for q in range(p + 1, d):
                if a[p][q] == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q])
                t = (1.0 if theta >= 0 else -1.0) / (
                    abs(theta) + (theta * theta + 1.0) ** 0.5
                )
                c = 1.0 / (t * t + 1.0) ** 0.5
                s = t * c
                for k in range(d):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(d):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    raise NoConvergenceError("Jacobi sweeps exhausted without reaching tolerance")
