"""Command-line interface.

Subcommands: ``constraints`` (print the inequality description), ``check``
(membership of a spectrum or a numeric one-body matrix), ``verify`` (audit a
grid of systems against the closed-form catalog), ``energy`` (ensemble energy
by two independent routes), ``export-slice`` (three-coordinate projection
data for d = 4 systems).

Exit-code contract: 0 success/member, 1 semantic negative (non-member,
verification mismatch, energy disagreement), 2 invalid flags, 3
applicability or stability failure, 4 normalization/Hermiticity errors.
Rational arguments must be ``p/q`` strings; decimals are rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .core import QuantumSystem, Spectrum, WeightVector, rational, validate_system
from .errors import (
    ApplicabilityError,
    NormalizationError,
    NotHermitianError,
    OccPolyError,
    ParityError,
    RangeError,
    StabilityError,
    TraceError,
)
from .geometry.polytope import (
    HRep,
    build_polytope,
    contraction_check,
    member_hrep,
    minimize_linear,
    remove_redundant,
)
from .oracle import audit_hrep, gok_energy_direct, hierarchy_reduction_check
from .poset import stability_check

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_APPLICABILITY = 3
EXIT_NORMALIZATION = 4

DEFAULT_GRID = (
    "4:2:4:1;7:3:7:1;6:0:6:1;5:1:6:1;8:2:8:1;"
    "4:2:4:2;7:3:7:2;5:1:6:2;8:2:8:2;7:3:7:3;"
    "6:0:6:2;6:0:6:3;4:0:5:2;3:1:3:3"
)


def _system_from_args(args) -> QuantumSystem:
    return validate_system(args.N, args.twoS, args.d)


def _weights_from_args(args) -> WeightVector:
    return WeightVector.from_strings(args.w)


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(rational(part) for part in text.split(","))


def _add_system_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--N", type=int, required=True, help="particle count")
    parser.add_argument("--twoS", type=int, required=True, help="doubled total spin 2S")
    parser.add_argument("--d", type=int, required=True, help="orbital count")
    parser.add_argument("--w", type=str, required=True, help='weights, e.g. "7/10,3/10"')


def cmd_constraints(args) -> int:
    try:
        system = _system_from_args(args)
        w = _weights_from_args(args)
    except (ParityError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.r is not None and args.r != w.r:
        print(f"error: --r {args.r} does not match {w.r} weights", file=sys.stderr)
        return EXIT_USAGE
    try:
        polytope = build_polytope(system, w)
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_APPLICABILITY
    hrep = polytope.hrep
    if args.format == "json":
        print(hrep.to_json())
    elif args.format == "ine":
        print(hrep.to_ine())
    else:
        print(f"# system {system}, weights {','.join(map(str, w))}")
        print(f"# equality: l1 + ... + l{system.d} == {system.N}; entries nonnegative")
        for row in hrep.rows:
            print(row.display(w.r, symbolic=args.symbolic, w=w))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        system = _system_from_args(args)
        w = _weights_from_args(args)
    except (ParityError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if (args.lam is None) == (args.matrix is None):
        print("error: provide exactly one of --lambda / --matrix", file=sys.stderr)
        return EXIT_USAGE
    if args.lam is not None:
        try:
            spectrum = Spectrum(_parse_vector(args.lam))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        hrep = build_polytope(system, w).hrep
        try:
            report = member_hrep(spectrum, hrep)
        except NormalizationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NORMALIZATION
        if report.is_member:
            print("member")
            return EXIT_OK
        print("non-member")
        for violation in report.violations:
            print(f"  violated: {violation.detail}")
        return EXIT_NEGATIVE
    try:
        with open(args.matrix, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        matrix = payload["matrix"] if isinstance(payload, dict) else payload
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: cannot read matrix file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        ok = contraction_check(matrix, system, w, rational(args.tol))
    except (NotHermitianError, TraceError, NormalizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NORMALIZATION
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("member" if ok else "non-member")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _catalog_hrep(system: QuantumSystem, w: WeightVector, r: int) -> HRep | None:
    """Minimized closed-form description, or None where no family applies."""
    try:
        if r == 1:
            family = catalog.spin_pauli(system)
            family = HRep(system=system, w=w, rows=family.rows)
        elif system.two_S == 0:
            family = catalog.singlet_family(system.N, system.d, w, r)
        else:
            family = catalog.generic_family(system, w, r)
    except (ApplicabilityError, StabilityError):
        return None
    return remove_redundant(family)


def run_verify(grid, samples: int, seed: int, catalog_hrep=_catalog_hrep, echo=print) -> int:
    """Audit each grid point; exit 0 iff every check is clean.

    Per point: the computed description is audited (vertex satisfaction,
    facet tightness, membership cross-route), compared against the minimized
    closed-form family where one applies, and checked to collapse onto the
    next-lower rank when the last weight is set to zero.
    """
    for (N, twoS, d, r) in grid:
        label = f"N={N} 2S={twoS} d={d} r={r}"
        try:
            system = validate_system(N, twoS, d)
        except (ParityError, RangeError) as exc:
            echo(f"error: {label}: {exc}")
            return EXIT_USAGE
        w = WeightVector.generic(r) if r > 1 else WeightVector.pure()
        polytope = build_polytope(system, w)
        report = audit_hrep(polytope.vrep, polytope.hrep, samples, seed)
        if not report.ok:
            echo(f"FAIL {label}: audit unclean")
            echo(report.to_json())
            return EXIT_NEGATIVE
        reference = catalog_hrep(system, w, r)
        if reference is not None:
            if set(reference.row_keys()) != set(polytope.hrep.row_keys()):
                echo(f"FAIL {label}: computed rows differ from the closed-form family")
                echo(json.dumps({
                    "computed": [str(k) for k in sorted(polytope.hrep.row_keys())],
                    "catalog": [str(k) for k in sorted(reference.row_keys())],
                }, indent=2))
                return EXIT_NEGATIVE
        if r >= 2 and not hierarchy_reduction_check(system, r):
            echo(f"FAIL {label}: rank reduction does not match rank {r - 1}")
            return EXIT_NEGATIVE
        checked = "catalog+" if reference is not None else ""
        echo(f"ok   {label}: {checked}audit clean ({samples} samples)")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        grid = []
        for chunk in args.grid.split(";"):
            n, two_s, d, r = (int(x) for x in chunk.split(":"))
            grid.append((n, two_s, d, r))
    except ValueError as exc:
        print(f"error: bad grid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run_verify(grid, args.samples, args.seed)


def cmd_energy(args) -> int:
    try:
        system = _system_from_args(args)
        w = _weights_from_args(args)
        h = _parse_vector(args.h)
    except (ParityError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        direct = gok_energy_direct(h, system, w)
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_APPLICABILITY
    try:
        polytope = build_polytope(system, w)
        via_polytope, _ = minimize_linear(h, polytope)
    except RuntimeError as exc:
        print(f"error: internal disagreement: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    relation = "==" if via_polytope == direct else "!="
    print(f"{via_polytope} {relation} {direct}")
    return EXIT_OK if via_polytope == direct else EXIT_NEGATIVE


def _distinct_permutations(values):
    from itertools import permutations

    return sorted(set(permutations(values)), reverse=True)


def cmd_export_slice(args) -> int:
    try:
        system = _system_from_args(args)
        w = _weights_from_args(args)
    except (ParityError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if system.d != 4:
        print("error: the three-coordinate projection is defined for d = 4 only", file=sys.stderr)
        return EXIT_APPLICABILITY
    polytope = build_polytope(system, w)
    lines: list[str] = []
    for vertex in polytope.vrep.vertices:
        for point in _distinct_permutations(vertex.evaluated):
            lines.append("v," + ",".join(str(x) for x in point[:3]))
    facet_lines: set[str] = set()
    rows = [(row.a, row.rhs.evaluate(w)) for row in polytope.hrep.rows]
    # Ambient nonnegativity becomes explicit boundary data in the projection.
    rows.extend(((0, 0, 0, -1), Fraction(0)) for _ in range(1))
    for a, rhs in rows:
        for pa in set(_distinct_permutations(a)):
            coeffs = tuple(Fraction(pa[i] - pa[3]) for i in range(3))
            shifted = rhs - Fraction(pa[3]) * system.N
            facet_lines.add("f," + ",".join(str(c) for c in coeffs) + f",{shifted}")
    lines.extend(sorted(facet_lines))
    print("\n".join(dict.fromkeys(lines)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="occpoly",
        description="Exact polytopes of spin-resolved ensemble occupation spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constraints", help="print the inequality description")
    _add_system_flags(p)
    p.add_argument("--r", type=int, default=None, help="expected weight rank (consistency check)")
    p.add_argument("--format", choices=("text", "json", "ine"), default="text")
    p.add_argument("--symbolic", action="store_true", help="print right-hand sides as forms in w")
    p.set_defaults(func=cmd_constraints)

    p = sub.add_parser("check", help="membership of a spectrum or a one-body matrix")
    _add_system_flags(p)
    p.add_argument("--lambda", dest="lam", type=str, default=None, help='spectrum "2,1,7/10,3/10"')
    p.add_argument("--matrix", type=str, default=None, help="JSON file with a d x d matrix")
    p.add_argument("--tol", type=str, default="1/10000000000", help="matrix tolerance (rational)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="audit a grid against the closed-form catalog")
    p.add_argument("--grid", type=str, default=DEFAULT_GRID, help='"N:twoS:d:r;..."')
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("energy", help="ensemble energy via polytope and via enumeration")
    _add_system_flags(p)
    p.add_argument("--h", type=str, required=True, help='one-particle energies "0,1,2,3"')
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("export-slice", help="projection data for d = 4 figures")
    _add_system_flags(p)
    p.set_defaults(func=cmd_export_slice)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OccPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
