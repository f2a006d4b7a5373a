"""Lineups: orderings of the energetically lowest configurations, and the
polytope vertices they generate.

A lineup of length ``r`` is a sequence of configurations (repeats allowed up
to multiplicity) for which some nondecreasing one-particle spectrum ``h``
realizes exactly the ``r`` smallest configuration energies, counted with
multiplicity, in sequence order.  Distinct configurations must be separated
strictly, and every configuration outside the sequence must sit strictly
above its last entry.  Validity is certified by an exact feasibility LP that
maximizes a shared strictness slack; a lineup is accepted iff the optimal
slack is positive.

Weighting the occupancy vectors of a lineup by the ensemble weights gives a
generating vertex; the full vertex set of the spectral polytope consists of
all coordinate permutations of the generating vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .affine import AffineForm
from .core import QuantumSystem, WeightVector
from .errors import DepthError, LengthError, RangeError
from .geometry.linprog import OPTIMAL, solve_nonneg
from .poset import Configuration, ConfigurationPoset, build_poset, hilbert_dim


@dataclass(frozen=True)
class Lineup:
    """An accepted sequence with its certificate spectrum.

    ``certificate`` is a nondecreasing rational vector ``h`` whose
    configuration energies order the sequence strictly (repeats of one
    configuration excepted) and push every non-member strictly above.
    """

    sequence: tuple[Configuration, ...]
    certificate: tuple[Fraction, ...]

    @property
    def r(self) -> int:
        return len(self.sequence)

    def blocks(self) -> tuple[tuple[Configuration, int], ...]:
        """Distinct configurations with their repeat counts, in order."""
        out: list[tuple[Configuration, int]] = []
        for config in self.sequence:
            if out and out[-1][0] == config:
                out[-1] = (config, out[-1][1] + 1)
            else:
                out.append((config, 1))
        return tuple(out)

    def to_json(self) -> str:
        return json.dumps(
            {
                "sequence": [list(c.index_multiset) for c in self.sequence],
                "certificate": [str(h) for h in self.certificate],
            }
        )


@dataclass(frozen=True)
class GeneratingVertex:
    """A vertex of the spectral polytope, affine in the ensemble weights.

    ``coordinates`` hold one affine form per orbital slot, ordered so that the
    evaluated vector is nonincreasing; ``evaluated`` is the exact value at the
    weight vector the vertex was built with.
    """

    coordinates: tuple[AffineForm, ...]
    evaluated: tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.coordinates)

    def form_key(self, r: int) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(form.key(r) for form in self.coordinates)

    def prefix_sums(self) -> tuple[Fraction, ...]:
        out: list[Fraction] = []
        acc = Fraction(0)
        for v in self.evaluated:
            acc += v
            out.append(acc)
        return tuple(out)

    def evaluate(self, w: WeightVector) -> tuple[Fraction, ...]:
        return tuple(form.evaluate(w) for form in self.coordinates)


def _gap_vector(poset_bottom: Configuration, config: Configuration) -> tuple[int, ...]:
    """Prefix-sum gaps to the ground configuration (last entry dropped: totals agree)."""
    base = poset_bottom.prefix_sums
    cur = config.prefix_sums
    return tuple(b - c for b, c in zip(base[:-1], cur[:-1]))


def _certificate_lp(
    d: int,
    block_gaps: list[tuple[int, ...]],
    nonmember_gaps: list[tuple[int, ...]],
) -> tuple[bool, tuple[Fraction, ...]]:
    """Maximize a shared strictness slack over nondecreasing spectra.

    Variables are the ``d - 1`` nonnegative increments of ``h`` plus the slack.
    Each required strict comparison ``E(b) - E(a) > 0`` becomes
    ``<increments, gap> >= slack``; the optimum is positive iff some spectrum
    satisfies all comparisons strictly.
    """
    n = d - 1
    rows: list[list[int]] = []
    rhs: list[int] = []
    for prev, nxt in zip(block_gaps, block_gaps[1:]):
        delta = [nxt[i] - prev[i] for i in range(n)]
        rows.append([-x for x in delta] + [1])
        rhs.append(0)
    last = block_gaps[-1]
    for gap in nonmember_gaps:
        delta = [gap[i] - last[i] for i in range(n)]
        rows.append([-x for x in delta] + [1])
        rhs.append(0)
    rows.append([1] * n + [0])  # keep the spectrum spread bounded
    rhs.append(1)
    rows.append([0] * n + [1])  # cap the slack so the LP stays bounded
    rhs.append(1)
    objective = [Fraction(0)] * n + [Fraction(1)]
    result = solve_nonneg(objective, leq_rows=rows, leq_rhs=rhs, maximize=True)
    if result.status != OPTIMAL or result.optimum <= 0:
        return False, ()
    increments = result.witness[:n]
    h = [Fraction(0)]
    for delta in increments:
        h.append(h[-1] + delta)
    return True, tuple(h)


@lru_cache(maxsize=None)
def enumerate_lineups(system: QuantumSystem, r: int) -> tuple[Lineup, ...]:
    """All lineups of length ``r``, in canonical order.

    Candidates are drawn from the excitation closure at depth ``r + 1``.  The
    sequence must start at the ground configuration, every configuration
    packed below a member must itself be a member, and a configuration used
    fewer times than its multiplicity can only close the sequence.  Each
    surviving candidate is certified by the strictness LP.
    """
    if r < 1:
        raise RangeError(f"lineup length must be positive, got {r}")
    dim = hilbert_dim(system)
    if r > dim:
        raise RangeError(f"lineup length {r} exceeds the sector dimension {dim}")
    depth = r + 1
    poset = build_poset(system, depth)
    return tuple(_search_lineups(system, r, poset))


def _search_lineups(system: QuantumSystem, r: int, poset: ConfigurationPoset) -> list[Lineup]:
    nodes = poset.configurations()
    mult = dict(poset.nodes)
    bottom = poset.bottom
    gaps = {c: _gap_vector(bottom, c) for c in nodes}
    strict_below = {
        g: [c for c in nodes if c != g and c.dominates(g)] for g in nodes
    }

    accepted: list[Lineup] = []

    def certify(blocks: list[tuple[Configuration, int]]) -> None:
        members = {g for g, _ in blocks}
        block_gaps = [gaps[g] for g, _ in blocks]
        nonmember_gaps = [gaps[c] for c in nodes if c not in members]
        ok, certificate = _certificate_lp(system.d, block_gaps, nonmember_gaps)
        if not ok:
            return
        sequence: list[Configuration] = []
        for g, k in blocks:
            sequence.extend([g] * k)
        for g, _ in blocks:
            if poset.level(g) > poset.depth - 2:
                raise DepthError(
                    f"lineup member {g} sits at level {poset.level(g)} of a "
                    f"depth-{poset.depth} closure; separation is uncertified"
                )
        accepted.append(Lineup(sequence=tuple(sequence), certificate=certificate))

    def extend(blocks: list[tuple[Configuration, int]], placed: int) -> None:
        if placed == r:
            certify(blocks)
            return
        chosen = {g for g, _ in blocks}
        for g in nodes:
            if g in chosen:
                continue
            if any(c not in chosen for c in strict_below[g]):
                continue
            k = min(mult[g], r - placed)
            extend(blocks + [(g, k)], placed + k)

    if mult[bottom] != 1:
        raise RangeError("ground configuration must have multiplicity one")
    extend([(bottom, min(1, r))] if r >= 1 else [], min(1, r))
    accepted.sort(key=lambda l: tuple(c.occupation for c in l.sequence))
    return accepted


_TIE_BREAK_BASES = (3, 5, 7)


def _coordinate_sort_key(form: AffineForm, w: WeightVector):
    primary = form.evaluate(w)
    ties = tuple(
        form.evaluate(WeightVector.generic(w.r, base=b)) if w.r > 1 else primary
        for b in _TIE_BREAK_BASES
    )
    return (primary, ties, form.key(w.r))


def generating_vertex(lineup: Lineup, w: WeightVector) -> GeneratingVertex:
    """Weight the lineup's occupancies into a vertex of the spectral polytope.

    Coordinate ``j`` carries the affine form ``sum_J w_J * n_J[j]``; the
    coordinates are ordered nonincreasingly at ``w`` (generic-weight values
    break ties) so equal lineups always produce identical symbolic vertices.
    """
    if lineup.r != w.r:
        raise LengthError(f"lineup length {lineup.r} != weight rank {w.r}")
    d = len(lineup.sequence[0].occupation)
    forms = [
        AffineForm.linear(tuple(Fraction(c.occupation[j]) for c in lineup.sequence))
        for j in range(d)
    ]
    forms.sort(key=lambda f: _coordinate_sort_key(f, w), reverse=True)
    evaluated = tuple(form.evaluate(w) for form in forms)
    total = sum(evaluated, Fraction(0))
    if total != lineup.sequence[0].N:
        raise RangeError(f"vertex coordinates sum to {total}, expected {lineup.sequence[0].N}")
    return GeneratingVertex(coordinates=tuple(forms), evaluated=evaluated)


def generating_vertices(system: QuantumSystem, w: WeightVector) -> list[GeneratingVertex]:
    """Generating vertices at ``w``: one per lineup, deduplicated symbolically."""
    vertices: list[GeneratingVertex] = []
    seen: set[tuple] = set()
    for lineup in enumerate_lineups(system, w.r):
        vertex = generating_vertex(lineup, w)
        key = vertex.form_key(w.r)
        if key not in seen:
            seen.add(key)
            vertices.append(vertex)
    vertices.sort(key=lambda v: (v.evaluated, v.form_key(w.r)), reverse=True)
    return vertices
