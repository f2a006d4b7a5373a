"""Hyperplane/vertex representations of the admissible-spectrum polytope.

The polytope of admissible occupation spectra is permutation invariant, so
its facet normals can be taken nonincreasing and every membership question
reduces to the sorted spectrum.  The pipeline here:

1. normal cones of the generating vertices inside the nonincreasing chamber,
2. extreme rays of those cones (modulo the all-ones lineality),
3. one inequality per ray, with the right-hand side read off the vertices,
4. exact LP-based removal of redundant rows.

Redundancy and membership are decided relative to the ambient set
``{sorted nonincreasing, sum = N, entries >= 0}``: occupation numbers are
nonnegative by definition, so rows that merely restate nonnegativity of a
tail are never reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from ..affine import AffineForm, dot_forms
from ..core import (
    QuantumSystem,
    Spectrum,
    WeightVector,
    format_rational,
    partial_sums,
    rational,
    rational_vector,
)
from ..errors import (
    DegenerateInputError,
    NormalizationError,
    NotHermitianError,
    RangeError,
    TieError,
    TraceError,
)
from ..lineups import GeneratingVertex, generating_vertices
from .cones import Cone, Ray, extreme_rays
from .linprog import OPTIMAL, UNBOUNDED, LPResult, lp_solve, solve_nonneg

__all__ = [
    "LinearConstraint",
    "HRep",
    "VRep",
    "Polytope",
    "MembershipReport",
    "fundamental_normal_cones",
    "facet_inequalities",
    "remove_redundant",
    "build_polytope",
    "member_hrep",
    "member_majorization",
    "minimize_linear",
    "density_domain_check",
    "contraction_check",
    "lp_solve",
]


@dataclass(frozen=True)
class LinearConstraint:
    """``<a, sorted(lambda)> <= rhs(w)`` with a primitive nonincreasing ``a``."""

    a: tuple[int, ...]
    rhs: AffineForm

    def lhs_value(self, sorted_spectrum: Sequence[Fraction]) -> Fraction:
        return sum((Fraction(ai) * x for ai, x in zip(self.a, sorted_spectrum)), Fraction(0))

    def key(self, r: int) -> tuple:
        return (self.a, self.rhs.key(r))

    def display(self, r: int, symbolic: bool, w: WeightVector) -> str:
        terms = []
        for i, ai in enumerate(self.a, start=1):
            if ai == 0:
                continue
            coeff = "" if ai == 1 else f"{ai}*"
            terms.append(f"{coeff}l{i}")
        lhs = " + ".join(terms) if terms else "0"
        rhs = self.rhs.display(r) if symbolic else format_rational(self.rhs.evaluate(w))
        return f"{lhs} <= {rhs}"


@dataclass(frozen=True)
class HRep:
    """Minimal inequality description on the hyperplane ``sum = N``.

    Rows act on the decreasingly sorted spectrum.  The equality and the
    nonnegativity of occupancies are ambient, not rows.
    """

    system: QuantumSystem
    w: WeightVector
    rows: tuple[LinearConstraint, ...]

    def row_keys(self) -> tuple[tuple, ...]:
        return tuple(row.key(self.w.r) for row in self.rows)

    def rhs_values(self) -> tuple[Fraction, ...]:
        return tuple(row.rhs.evaluate(self.w) for row in self.rows)

    def to_json(self) -> str:
        def as_number(x: Fraction):
            return int(x) if x.denominator == 1 else str(x)

        rows = []
        for row in self.rows:
            b0, bw = row.rhs.display_pair(self.w.r)
            rows.append({"a": list(row.a), "b0": as_number(b0), "bw": [as_number(b) for b in bw]})
        payload = {
            "system": {"N": self.system.N, "twoS": self.system.two_S, "d": self.system.d},
            "w": [format_rational(x) for x in self.w],
            "rows": rows,
        }
        return json.dumps(payload, indent=2)

    def to_ine(self) -> str:
        """cdd-style H-representation; the particle-number equality is the
        linearity row, inequality rows are ``rhs - a.x >= 0``."""
        d = self.system.d
        lines = ["H-representation", "linearity 1 1", "begin"]
        lines.append(f" {len(self.rows) + 1} {d + 1} rational")
        lines.append(" ".join([str(-self.system.N)] + ["1"] * d))
        for row in self.rows:
            rhs = row.rhs.evaluate(self.w)
            lines.append(" ".join([format_rational(rhs)] + [str(-ai) for ai in row.a]))
        lines.append("end")
        return "\n".join(lines)


@dataclass(frozen=True)
class VRep:
    """Generating vertices; the permutation closure is implicit."""

    system: QuantumSystem
    w: WeightVector
    vertices: tuple[GeneratingVertex, ...]

    def evaluated(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(v.evaluated for v in self.vertices)

    def to_json(self) -> str:
        payload = {
            "system": {"N": self.system.N, "twoS": self.system.two_S, "d": self.system.d},
            "w": [format_rational(x) for x in self.w],
            "vertices": [[format_rational(x) for x in v.evaluated] for v in self.vertices],
        }
        return json.dumps(payload, indent=2)

    def to_ext(self) -> str:
        d = self.system.d
        lines = ["V-representation", "begin"]
        lines.append(f" {len(self.vertices)} {d + 1} rational")
        for v in self.vertices:
            lines.append(" ".join(["1"] + [format_rational(x) for x in v.evaluated]))
        lines.append("end")
        return "\n".join(lines)


class Polytope(NamedTuple):
    vrep: VRep
    hrep: HRep


def _integer_direction(vector: Sequence[Fraction]) -> tuple[int, ...]:
    denom = 1
    for v in vector:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints) if g else tuple(ints)


def fundamental_normal_cones(vertices: Sequence[GeneratingVertex]) -> list[Cone]:
    """Normal cone of each vertex intersected with the nonincreasing chamber.

    Cone ``i`` collects the chamber functionals maximized at vertex ``i``
    over the whole polytope; the all-ones direction is pure lineality because
    every spectrum carries the same total.
    """
    if not vertices:
        raise DegenerateInputError("need at least one vertex")
    d = vertices[0].d
    evaluated = [v.evaluated for v in vertices]
    if len(set(evaluated)) != len(evaluated):
        raise DegenerateInputError("vertices must be pairwise distinct; deduplicate first")
    chamber = [
        tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0) for j in range(d))
        for i in range(d - 1)
    ]
    ones = (tuple(Fraction(1) for _ in range(d)),)
    cones = []
    for i, vi in enumerate(evaluated):
        diff_rows = [
            tuple(Fraction(x - y) for x, y in zip(vi, vj))
            for j, vj in enumerate(evaluated)
            if j != i
        ]
        cones.append(Cone(inequalities=tuple(chamber) + tuple(diff_rows), lineality=ones))
    return cones


_TIE_SAMPLE_BASES = (3, 5, 7, 11, 13)


def _select_rhs_form(
    ray: tuple[int, ...],
    vertices: Sequence[GeneratingVertex],
    w: WeightVector,
) -> AffineForm:
    """Right-hand side of a ray's inequality: support value over the vertices.

    The exact value is the maximum at ``w``; the symbolic label is the form of
    a maximizing vertex.  If distinct forms tie at ``w``, increasingly generic
    weight samples break the tie; a tie surviving all samples is reported.
    """
    values = [sum((Fraction(ai) * x for ai, x in zip(ray, v.evaluated)), Fraction(0)) for v in vertices]
    peak = max(values)
    tied: list[AffineForm] = []
    seen_keys: set[tuple] = set()
    for v, val in zip(vertices, values):
        if val == peak:
            form = dot_forms(ray, v.coordinates)
            key = form.key(w.r)
            if key not in seen_keys:
                seen_keys.add(key)
                tied.append(form)
    if len(tied) == 1:
        return tied[0]
    if w.r == 1:
        # All forms are constants equal to the peak; they cannot differ.
        return tied[0]
    for base in _TIE_SAMPLE_BASES:
        sample = WeightVector.generic(w.r, base=base)
        sample_values = [form.evaluate(sample) for form in tied]
        best = max(sample_values)
        winners = [f for f, sv in zip(tied, sample_values) if sv == best]
        if len(winners) == 1:
            return winners[0]
        tied = winners
    raise TieError(f"distinct symbolic right-hand sides tie at {list(w)} for ray {ray}")


def facet_inequalities(
    vertices: Sequence[GeneratingVertex],
    cones: Sequence[Cone],
    system: QuantumSystem,
    w: WeightVector,
) -> HRep:
    """Collect the rays of all fundamental cones into valid inequalities.

    The result is complete but typically redundant; pass it through
    :func:`remove_redundant` for the minimal description.
    """
    directions: dict[tuple[int, ...], Ray] = {}
    for cone in cones:
        for ray in extreme_rays(cone):
            directions.setdefault(ray.direction, ray)
    rows = []
    for direction in sorted(directions):
        rhs = _select_rhs_form(direction, vertices, w)
        rows.append(LinearConstraint(a=direction, rhs=rhs))
    return HRep(system=system, w=w, rows=tuple(rows))


def _max_over_ambient(
    objective_a: Sequence[int | Fraction],
    other_rows: Sequence[tuple[Sequence[int], Fraction]],
    system: QuantumSystem,
) -> LPResult:
    """Maximize ``<a, lambda>`` over sorted nonnegative spectra with total N
    subject to the given rows.  Gap coordinates make sortedness and
    nonnegativity implicit: ``lambda_i = sum of mu_j for j >= i``, ``mu >= 0``.
    """
    d = system.d
    psum = partial_sums(rational_vector(objective_a))
    leq_rows = []
    leq_rhs = []
    for a, rhs in other_rows:
        leq_rows.append(list(partial_sums(rational_vector(a))))
        leq_rhs.append(rhs)
    eq = [[Fraction(j) for j in range(1, d + 1)]]
    return solve_nonneg(
        list(psum),
        leq_rows=leq_rows,
        leq_rhs=leq_rhs,
        eq_rows=eq,
        eq_rhs=[Fraction(system.N)],
        maximize=True,
    )


def remove_redundant(hrep: HRep) -> HRep:
    """Drop rows whose removal leaves the feasible set unchanged (exact LP).

    A row survives iff maximizing its left side subject to the remaining rows
    (and the ambient sorted/nonnegative/total-N set) strictly exceeds its
    right-hand side.  Duplicate rows are collapsed first, keeping the tighter
    right-hand side for equal left sides.
    """
    w = hrep.w
    by_lhs: dict[tuple[int, ...], LinearConstraint] = {}
    for row in sorted(hrep.rows, key=lambda r: r.key(w.r)):
        current = by_lhs.get(row.a)
        if current is None or row.rhs.evaluate(w) < current.rhs.evaluate(w):
            by_lhs[row.a] = row
    active = sorted(by_lhs.values(), key=lambda r: r.key(w.r))
    kept: list[LinearConstraint] = list(active)
    for row in active:
        others = [
            (other.a, other.rhs.evaluate(w)) for other in kept if other is not row
        ]
        result = _max_over_ambient(row.a, others, hrep.system)
        if result.status == UNBOUNDED:
            continue
        if result.status != OPTIMAL:
            raise RuntimeError(f"redundancy probe returned {result.status}")
        if result.optimum <= row.rhs.evaluate(w):
            kept.remove(row)
    return HRep(system=hrep.system, w=w, rows=tuple(sorted(kept, key=lambda r: r.key(w.r))))


def build_polytope(system: QuantumSystem, w: WeightVector) -> Polytope:
    """Vertex and minimal hyperplane representations at the given weights."""
    if system.d == 1:
        vertex = generating_vertices(system, w)[0]
        vrep = VRep(system=system, w=w, vertices=(vertex,))
        return Polytope(vrep, HRep(system=system, w=w, rows=()))
    symbolic = generating_vertices(system, w)
    distinct: list[GeneratingVertex] = []
    seen: set[tuple[Fraction, ...]] = set()
    for vertex in symbolic:
        if vertex.evaluated not in seen:
            seen.add(vertex.evaluated)
            distinct.append(vertex)
    vrep = VRep(system=system, w=w, vertices=tuple(distinct))
    cones = fundamental_normal_cones(distinct)
    raw = facet_inequalities(distinct, cones, system, w)
    return Polytope(vrep, remove_redundant(raw))


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    lhs: Fraction | None = None
    rhs: Fraction | None = None


@dataclass(frozen=True)
class MembershipReport:
    is_member: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.is_member


def _as_spectrum(values) -> Spectrum:
    if isinstance(values, Spectrum):
        return values
    return Spectrum(tuple(values))


def member_hrep(spectrum, hrep: HRep) -> MembershipReport:
    """Exact membership test against the minimal inequality description.

    The input is sorted first; every violated row is reported.  Negative
    entries violate the ambient nonnegativity of occupancies and are reported
    alongside the rows.
    """
    spec = _as_spectrum(spectrum)
    spec.check_total(hrep.system.N)
    lam = spec.sorted_descending()
    violations: list[Violation] = []
    if lam and lam[-1] < 0:
        violations.append(
            Violation(kind="nonnegativity", detail=f"smallest entry {lam[-1]} < 0")
        )
    for row in hrep.rows:
        lhs = row.lhs_value(lam)
        rhs = row.rhs.evaluate(hrep.w)
        if lhs > rhs:
            violations.append(
                Violation(
                    kind="row",
                    detail=row.display(hrep.w.r, symbolic=False, w=hrep.w),
                    lhs=lhs,
                    rhs=rhs,
                )
            )
    return MembershipReport(is_member=not violations, violations=tuple(violations))


def member_majorization(spectrum, vrep: VRep) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Membership via mixtures: is the sorted spectrum majorized by some
    convex combination of the generating vertices?

    Mixtures of nonincreasing vertices are nonincreasing, so the comparison
    uses plain prefix sums.  Returns the mixture weights on success.
    """
    spec = _as_spectrum(spectrum)
    spec.check_total(vrep.system.N)
    lam = spec.sorted_descending()
    d = vrep.system.d
    targets = partial_sums(lam)[: d - 1]
    vertex_psums = [v.prefix_sums() for v in vrep.vertices]
    nv = len(vertex_psums)
    for k in range(d - 1):
        if targets[k] > max(ps[k] for ps in vertex_psums):
            return False, None
    leq_rows = []
    leq_rhs = []
    for k in range(d - 1):
        leq_rows.append([-vertex_psums[j][k] for j in range(nv)])
        leq_rhs.append(-targets[k])
    result = solve_nonneg(
        [Fraction(0)] * nv,
        leq_rows=leq_rows,
        leq_rhs=leq_rhs,
        eq_rows=[[Fraction(1)] * nv],
        eq_rhs=[Fraction(1)],
    )
    if result.status != OPTIMAL:
        return False, None
    return True, result.witness


def minimize_linear(h_diag, polytope: Polytope) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact minimum of ``<h, lambda>`` over the polytope, with a witness.

    Two independent routes must agree: pairing each generating vertex against
    the sorted spectrum (the rearrangement optimum over the permutation
    orbit), and an LP over the inequality description.  The witness places the
    optimal vertex entries against ``h`` in its original coordinate order.
    """
    vrep, hrep = polytope
    d = vrep.system.d
    h = rational_vector(h_diag)
    if len(h) != d:
        raise RangeError(f"spectrum has {len(h)} entries, system needs {d}")
    order = sorted(range(d), key=lambda i: (h[i], i))
    h_sorted = [h[i] for i in order]
    best_value: Fraction | None = None
    best_vertex: GeneratingVertex | None = None
    for vertex in vrep.vertices:
        value = sum((hi * vi for hi, vi in zip(h_sorted, vertex.evaluated)), Fraction(0))
        if best_value is None or value < best_value:
            best_value = value
            best_vertex = vertex
    witness = [Fraction(0)] * d
    for pos, vi in zip(order, best_vertex.evaluated):
        witness[pos] = vi

    rows = [(row.a, row.rhs.evaluate(hrep.w)) for row in hrep.rows]
    lp = _max_over_ambient([-x for x in h_sorted], rows, vrep.system)
    if lp.status != OPTIMAL:
        raise RuntimeError(f"minimization LP returned {lp.status}")
    lp_value = -lp.optimum
    if lp_value != best_value:
        raise RuntimeError(
            f"vertex enumeration ({best_value}) and LP ({lp_value}) disagree"
        )
    return best_value, tuple(witness)


def density_domain_check(rho, system: QuantumSystem, w: WeightVector) -> bool:
    """Admissibility of a site-occupation vector.

    Diagonal entries of any admissible one-body matrix are majorized by its
    spectrum, so the domain test is the mixture-majorization membership of the
    sorted density.
    """
    values = rational_vector(rho)
    if any(x < 0 for x in values):
        raise NormalizationError("site occupations must be nonnegative")
    spec = Spectrum(values)
    spec.check_total(system.N)
    vrep = build_polytope(system, w).vrep
    ok, _ = member_majorization(spec, vrep)
    return ok


def contraction_check(
    matrix: Sequence[Sequence[float]],
    system: QuantumSystem,
    w: WeightVector,
    tol: Fraction = Fraction(1, 10**10),
) -> bool:
    """Necessary admissibility test for a numerically supplied one-body matrix.

    The matrix must be symmetric and carry trace ``N`` within ``tol``; its
    spectrum is then tested against the inequality description with every
    right-hand side inflated by ``tol * ||a||_1``.  This is the only
    tolerance-based operation in the package.
    """
    from ..oracle import symmetric_eigenvalues

    tol = rational(tol)
    d = system.d
    if len(matrix) != d or any(len(row) != d for row in matrix):
        raise RangeError(f"matrix must be {d}x{d}")
    ftol = float(tol)
    for i in range(d):
        for j in range(i + 1, d):
            if abs(matrix[i][j] - matrix[j][i]) > ftol:
                raise NotHermitianError(f"entries ({i},{j}) and ({j},{i}) differ")
    trace = sum(matrix[i][i] for i in range(d))
    if abs(trace - system.N) > ftol:
        raise TraceError(f"trace {trace} is not {system.N} within tolerance")
    eigenvalues = symmetric_eigenvalues(matrix, ftol)
    lam = sorted((Fraction(x) for x in eigenvalues), reverse=True)
    hrep = build_polytope(system, w).hrep
    if lam[-1] < -tol:
        return False
    for row in hrep.rows:
        slack = tol * sum(abs(ai) for ai in row.a)
        if row.lhs_value(lam) > row.rhs.evaluate(hrep.w) + slack:
            return False
    return True
