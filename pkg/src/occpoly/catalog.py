"""Closed-form constraint and vertex families, parameterized by (N, S, d, w).

These are literal transcriptions of the known families, kept deliberately
unminimized: redundant ladder rows are emitted as written and minimality is
delegated to :func:`occpoly.geometry.polytope.remove_redundant`.  The
computed pipeline must reproduce these families exactly wherever they apply;
that comparison is the package's central ground truth.

Generic-spin families exist for weight ranks 1..3 under the three stability
conditions; spin-zero (singlet) families exist for ranks 1..4.  No closed
forms are known beyond that; larger ranks are served solely by the computed
pipeline.
"""

from __future__ import annotations

from fractions import Fraction

from .affine import AffineForm
from .core import QuantumSystem, WeightVector
from .errors import ApplicabilityError, StabilityError
from .geometry.polytope import HRep, LinearConstraint, VRep
from .lineups import GeneratingVertex, _coordinate_sort_key
from .poset import highest_weight_config, stability_check

__all__ = [
    "spin_pauli",
    "generic_family",
    "singlet_family",
    "catalog_vertices",
    "pauli_minkowski_vertices",
]


def _ladder_vector(d: int, k: int) -> tuple[int, ...]:
    """Partial-sum functional: ones in the first ``k`` slots."""
    return (1,) * k + (0,) * (d - k)


def _run_vector(d: int, runs: list[tuple[int, int]]) -> tuple[int, ...]:
    out: list[int] = []
    for count, value in runs:
        out.extend([value] * count)
    if len(out) > d:
        raise ApplicabilityError(f"constraint needs {len(out)} orbitals, d={d}")
    return tuple(out) + (0,) * (d - len(out))


def spin_pauli(system: QuantumSystem) -> HRep:
    """The occupancy ladder: partial sums capped at 2k up to K, then K + k.

    Emitted for every k = 1..J even where redundant; the cap at k = J equals
    N, completing the ladder.
    """
    d, K, J = system.d, system.K, system.J
    rows = []
    for k in range(1, J + 1):
        cap = min(2 * k, K + k)
        rows.append(LinearConstraint(a=_ladder_vector(d, k), rhs=AffineForm.constant(cap)))
    return HRep(system=system, w=WeightVector.pure(), rows=tuple(rows))


def generic_family(system: QuantumSystem, w: WeightVector, r: int) -> HRep:
    """Ladder plus the weight-dependent rows for generic spin, ranks 1..3."""
    if r not in (1, 2, 3):
        raise ApplicabilityError(f"no closed generic-spin family for rank {r}")
    if not stability_check(system, r):
        raise StabilityError(
            f"stability conditions fail for {system} at rank {r}: "
            f"{stability_check(system, r).as_dict()}"
        )
    d, K, J, twoS = system.d, system.K, system.J, system.two_S
    N = system.N
    rows = list(spin_pauli(system).rows)
    if r >= 2:
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(K, 2), (J - K, 1)]),
                rhs=AffineForm(2 * N - twoS - 1, (1,)),
            )
        )
    if r >= 3:
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(K - 1, 3), (2, 2), (J - K - 1, 1)]),
                rhs=AffineForm(3 * N - 2 * twoS - 2, (1, 1)),
            )
        )
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(K, 3), (J - 1 - K, 2), (2, 1)]),
                rhs=AffineForm(3 * N - twoS - 2, (1, 1)),
            )
        )
    return HRep(system=system, w=w, rows=tuple(rows))


def _singlet_system(N: int, d: int) -> QuantumSystem:
    return QuantumSystem(N=N, two_S=0, d=d)


def _check_singlet(N: int, d: int, r: int) -> None:
    if N % 2 != 0 or N < 2:
        raise ApplicabilityError(f"singlet family needs even N >= 2, got {N}")
    if r not in (1, 2, 3, 4):
        raise ApplicabilityError(f"no closed singlet family for rank {r}")
    if d < N // 2 + r - 1:
        raise ApplicabilityError(f"singlet family at rank {r} needs d >= {N // 2 + r - 1}")
    if r == 4 and N < 4:
        raise ApplicabilityError("singlet rank-4 rows need N >= 4")


def singlet_family(N: int, d: int, w: WeightVector, r: int) -> HRep:
    """Spin-zero constraint family for ranks 1..4."""
    _check_singlet(N, d, r)
    system = _singlet_system(N, d)
    h = N // 2
    rows = [LinearConstraint(a=_ladder_vector(d, 1), rhs=AffineForm.constant(2))]
    if r >= 2:
        rows.append(
            LinearConstraint(a=_ladder_vector(d, h), rhs=AffineForm(N - 1, (1,)))
        )
    if r >= 3:
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(h - 1, 3), (1, 2), (1, 1)]),
                rhs=AffineForm(3 * N - 4, (2, 1)),
            )
        )
    if r >= 4:
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(h - 1, 3), (1, 2), (2, 1)]),
                rhs=AffineForm(3 * N - 4, (2, 1, 1)),
            )
        )
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(h - 1, 2), (2, 1)]),
                rhs=AffineForm(2 * N - 3, (1, 1, 1)),
            )
        )
        rows.append(
            LinearConstraint(
                a=_run_vector(d, [(h - 2, 3), (2, 2), (1, 1)]),
                rhs=AffineForm(3 * N - 6, (2, 1, 1)),
            )
        )
    return HRep(system=system, w=w, rows=tuple(rows))


def _vertex_from_runs(
    d: int, w: WeightVector, runs: list[tuple[int, tuple[int, ...]]]
) -> GeneratingVertex:
    """Assemble a vertex from run-length coefficient columns, canonically sorted."""
    forms: list[AffineForm] = []
    for count, coeffs in runs:
        if count < 0:
            raise ApplicabilityError("vertex family shape does not fit this N")
        forms.extend([AffineForm.linear(tuple(Fraction(c) for c in coeffs))] * count)
    if len(forms) > d:
        raise ApplicabilityError(f"vertex needs {len(forms)} orbitals, d={d}")
    zero = AffineForm.linear((Fraction(0),) * w.r)
    forms.extend([zero] * (d - len(forms)))
    forms.sort(key=lambda f: _coordinate_sort_key(f, w), reverse=True)
    return GeneratingVertex(
        coordinates=tuple(forms), evaluated=tuple(f.evaluate(w) for f in forms)
    )


def catalog_vertices(system: QuantumSystem, w: WeightVector, r: int) -> VRep:
    """The displayed generating-vertex families, canonically normalized."""
    d, K, twoS = system.d, system.K, system.two_S
    if w.r != r:
        raise ApplicabilityError(f"weight rank {w.r} does not match requested rank {r}")
    if twoS == 0:
        vertices = _singlet_vertices(system, w, r)
    else:
        vertices = _generic_vertices(system, w, r, K, twoS)
    vertices.sort(key=lambda v: (v.evaluated, v.form_key(r)), reverse=True)
    return VRep(system=system, w=w, vertices=tuple(vertices))


def _generic_vertices(
    system: QuantumSystem, w: WeightVector, r: int, K: int, twoS: int
) -> list[GeneratingVertex]:
    d = system.d
    if r == 1:
        ground = highest_weight_config(system)
        return [
            _vertex_from_runs(d, w, [(1, (n,)) for n in ground.occupation if n > 0])
        ]
    if not stability_check(system, r):
        raise StabilityError(f"stability conditions fail for {system} at rank {r}")
    if r == 2:
        return [
            _vertex_from_runs(
                d, w, [(K, (2, 2)), (twoS - 1, (1, 1)), (1, (1, 0)), (1, (0, 1))]
            ),
            _vertex_from_runs(
                d, w, [(K - 1, (2, 2)), (1, (2, 1)), (1, (1, 2)), (twoS - 1, (1, 1))]
            ),
        ]
    if r == 3:
        two = (2, 2, 2)
        one = (1, 1, 1)
        return [
            _vertex_from_runs(
                d, w,
                [(K - 1, two), (1, (2, 1, 2)), (1, (1, 2, 1)), (twoS - 2, one),
                 (1, (1, 1, 0)), (1, (0, 0, 1))],
            ),
            _vertex_from_runs(
                d, w,
                [(K - 1, two), (1, (2, 2, 1)), (1, (1, 1, 2)), (twoS - 2, one),
                 (1, (1, 0, 1)), (1, (0, 1, 0))],
            ),
            _vertex_from_runs(
                d, w,
                [(K - 1, two), (1, (2, 1, 1)), (1, (1, 2, 1)), (1, (1, 1, 2)),
                 (twoS - 2, one)],
            ),
            _vertex_from_runs(
                d, w,
                [(K - 2, two), (1, (2, 2, 1)), (1, (2, 1, 2)), (1, (1, 2, 2)),
                 (twoS - 1, one)],
            ),
            _vertex_from_runs(
                d, w,
                [(K, two), (twoS - 1, one), (1, (1, 0, 0)), (1, (0, 1, 0)),
                 (1, (0, 0, 1))],
            ),
            _vertex_from_runs(
                d, w,
                [(K, two), (twoS - 2, one), (1, (1, 1, 0)), (1, (1, 0, 1)),
                 (1, (0, 1, 1))],
            ),
        ]
    raise ApplicabilityError(f"no closed generic-spin vertex family for rank {r}")


def _singlet_vertices(
    system: QuantumSystem, w: WeightVector, r: int
) -> list[GeneratingVertex]:
    d, N = system.d, system.N
    h = N // 2
    if r >= 2:
        _check_singlet(N, d, r)
    if r == 1:
        return [_vertex_from_runs(d, w, [(h, (2,))])]
    if r == 2:
        return [_vertex_from_runs(d, w, [(h - 1, (2, 2)), (1, (2, 1)), (1, (0, 1))])]
    if r == 3:
        two = (2, 2, 2)
        return [
            _vertex_from_runs(
                d, w, [(h - 1, two), (1, (2, 1, 1)), (1, (0, 1, 0)), (1, (0, 0, 1))]
            ),
            _vertex_from_runs(d, w, [(h - 1, two), (1, (2, 1, 0)), (1, (0, 1, 2))]),
            _vertex_from_runs(
                d, w, [(h - 2, two), (1, (2, 2, 1)), (1, (2, 1, 2)), (1, (0, 1, 1))]
            ),
        ]
    if r == 4:
        two = (2, 2, 2, 2)
        vertices = [
            _vertex_from_runs(
                d, w,
                [(h - 1, two), (1, (2, 1, 1, 1)), (1, (0, 1, 0, 0)),
                 (1, (0, 0, 1, 0)), (1, (0, 0, 0, 1))],
            ),
            _vertex_from_runs(
                d, w,
                [(h - 1, two), (1, (2, 1, 1, 0)), (1, (0, 1, 0, 2)), (1, (0, 0, 1, 0))],
            ),
            _vertex_from_runs(
                d, w,
                [(h - 1, two), (1, (2, 1, 0, 1)), (1, (0, 1, 2, 0)), (1, (0, 0, 0, 1))],
            ),
            _vertex_from_runs(
                d, w,
                [(h - 2, two), (1, (2, 2, 2, 1)), (1, (2, 1, 0, 2)), (1, (0, 1, 2, 1))],
            ),
            _vertex_from_runs(
                d, w,
                [(h - 2, two), (1, (2, 2, 1, 2)), (1, (2, 1, 2, 0)), (1, (0, 1, 1, 2))],
            ),
            _vertex_from_runs(
                d, w,
                [(h - 2, two), (1, (2, 2, 2, 1)), (1, (2, 1, 1, 2)),
                 (1, (0, 1, 0, 1)), (1, (0, 0, 1, 0))],
            ),
            _vertex_from_runs(
                d, w,
                [(h - 2, two), (1, (2, 2, 1, 2)), (1, (2, 1, 2, 1)),
                 (1, (0, 1, 1, 0)), (1, (0, 0, 0, 1))],
            ),
        ]
        if h >= 3:
            # The deepest rank-4 family member needs three doubly occupied
            # orbitals below the active window, hence N >= 6.
            vertices.append(
                _vertex_from_runs(
                    d, w,
                    [(h - 3, two), (1, (2, 2, 2, 1)), (1, (2, 2, 1, 2)),
                     (1, (2, 1, 2, 2)), (1, (0, 1, 1, 1))],
                )
            )
        return vertices
    raise ApplicabilityError(f"no closed singlet vertex family for rank {r}")


def pauli_minkowski_vertices(system: QuantumSystem) -> tuple[VRep, VRep]:
    """Generators of the two one-species boxes whose sum is the pure-weight polytope.

    The first carries the paired electrons (K ones), the second the full
    occupied window (J ones); both are closed under coordinate permutations.
    """
    d, K, J = system.d, system.K, system.J
    w = WeightVector.pure()
    first = _vertex_from_runs(d, w, [(K, (1,))])
    second = _vertex_from_runs(d, w, [(J, (1,))])
    return (
        VRep(system=system, w=w, vertices=(first,)),
        VRep(system=system, w=w, vertices=(second,)),
    )
