"""Orbital configurations, spin multiplicities, and the excitation diagram.

A configuration assigns each of ``d`` orbitals an occupancy in {0, 1, 2}.
Within a fixed-(S, M) sector a configuration labels ``m`` orthogonal basis
states, where ``m`` is the spin-coupling multiplicity computed from the count
of singly occupied orbitals.  Configurations with ``m = 0`` label nothing and
are pruned everywhere.

The excitation diagram is generated from the unique ground configuration by
single moves of one electron from an orbital to the next one up; the partial
order ranks configurations by the total of their orbital labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator

from .core import QuantumSystem
from .errors import RangeError


@dataclass(frozen=True)
class Configuration:
    """An occupancy vector ``n`` in {0,1,2}^d with ``sum(n) = N``."""

    occupation: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(n not in (0, 1, 2) for n in self.occupation):
            raise ValueError(f"occupancies must lie in {{0,1,2}}: {self.occupation}")

    @property
    def N(self) -> int:
        return sum(self.occupation)

    @property
    def n_unpaired(self) -> int:
        """Count of singly occupied orbitals."""
        return sum(1 for n in self.occupation if n == 1)

    @property
    def index_multiset(self) -> tuple[int, ...]:
        """Nondecreasing orbital labels, each repeated by its occupancy (1-based)."""
        out: list[int] = []
        for i, n in enumerate(self.occupation, start=1):
            out.extend([i] * n)
        return tuple(out)

    @property
    def index_sum(self) -> int:
        return sum(i * n for i, n in enumerate(self.occupation, start=1))

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """Occupancy accumulated over leading orbitals; determines the energy
        of the configuration for every one-particle spectrum."""
        out: list[int] = []
        acc = 0
        for n in self.occupation:
            acc += n
            out.append(acc)
        return tuple(out)

    def dominates(self, other: "Configuration") -> bool:
        """Prefix-sum dominance: self is at least as packed-down as ``other``.

        For every nondecreasing one-particle spectrum the dominating
        configuration has the lower (or equal) energy.
        """
        return all(a >= b for a, b in zip(self.prefix_sums, other.prefix_sums))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.index_multiset)) + ")"


def multiplicity(config: Configuration, two_S: int) -> int:
    """Number of orthogonal spin-coupled basis states on this configuration.

    Zero signals that the configuration cannot carry total spin ``S``.
    """
    n_u = config.n_unpaired
    if (n_u - two_S) % 2 != 0 or n_u < two_S:
        return 0
    t = (n_u - two_S) // 2
    lower = comb(n_u, t - 1) if t >= 1 else 0
    return comb(n_u, t) - lower


def highest_weight_config(system: QuantumSystem) -> Configuration:
    """The unique ground configuration: K doubles, then 2S singles."""
    if system.J > system.d:
        raise RangeError(f"ground configuration needs {system.J} orbitals, d={system.d}")
    occ = (2,) * system.K + (1,) * system.two_S + (0,) * (system.d - system.J)
    return Configuration(occ)


def _occupancy_vectors(d: int, total: int) -> Iterator[tuple[int, ...]]:
    """All vectors in {0,1,2}^d with the given total, lexicographically."""

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        for n in (0, 1, 2):
            if n <= remaining and remaining - n <= 2 * (slots - 1):
                yield from rec(prefix + (n,), remaining - n, slots - 1)

    yield from rec((), total, d)


@lru_cache(maxsize=None)
def enumerate_configurations(system: QuantumSystem) -> tuple[tuple[Configuration, int], ...]:
    """All spin-compatible configurations with their multiplicities.

    Deterministic lexicographic order on the occupancy vector.  The result is
    independent of ``two_M``.
    """
    out = []
    for occ in _occupancy_vectors(system.d, system.N):
        config = Configuration(occ)
        m = multiplicity(config, system.two_S)
        if m > 0:
            out.append((config, m))
    return tuple(out)


def hilbert_dim(system: QuantumSystem) -> int:
    """Dimension of the fixed-(S, M) sector: total multiplicity."""
    return sum(m for _, m in enumerate_configurations(system))


@dataclass(frozen=True)
class StabilityReport:
    """Truth values of the three size-stability conditions at rank ``r``."""

    headroom_above: bool  # d - (N + 2S)/2 >= r - 1
    headroom_paired: bool  # (N - 2S)/2 >= r - 1
    headroom_spin: bool  # 2S >= r - 1

    def __bool__(self) -> bool:
        return self.headroom_above and self.headroom_paired and self.headroom_spin

    def as_dict(self) -> dict[str, bool]:
        return {
            "headroom_above": self.headroom_above,
            "headroom_paired": self.headroom_paired,
            "headroom_spin": self.headroom_spin,
            "all": bool(self),
        }


def stability_check(system: QuantumSystem, r: int) -> StabilityReport:
    """Whether the constraint structure at rank ``r`` is size-independent."""
    return StabilityReport(
        headroom_above=system.d - system.J >= r - 1,
        headroom_paired=system.K >= r - 1,
        headroom_spin=system.two_S >= r - 1,
    )


def excitations(config: Configuration, two_S: int) -> list[Configuration]:
    """Single-step excitations: move one electron from orbital j to j + 1.

    Both occupancies must stay within {0,1,2}; spin-incompatible results
    (multiplicity zero) are dropped.
    """
    occ = config.occupation
    out = []
    for j in range(len(occ) - 1):
        if occ[j] >= 1 and occ[j + 1] <= 1:
            moved = occ[:j] + (occ[j] - 1, occ[j + 1] + 1) + occ[j + 2 :]
            child = Configuration(moved)
            if multiplicity(child, two_S) > 0:
                out.append(child)
    return out


@dataclass(frozen=True)
class ConfigurationPoset:
    """Excitation diagram up to a fixed number of steps above the ground.

    ``nodes`` maps each configuration to its multiplicity; ``generator_edges``
    are the single-move covers discovered during the closure.  Configurations
    are ranked by ``index_sum``; distinct configurations with equal rank are
    incomparable.
    """

    system: QuantumSystem
    depth: int
    bottom: Configuration
    nodes: tuple[tuple[Configuration, int], ...]
    generator_edges: tuple[tuple[Configuration, Configuration], ...] = field(repr=False)

    @property
    def base_index_sum(self) -> int:
        return self.bottom.index_sum

    def level(self, config: Configuration) -> int:
        return config.index_sum - self.base_index_sum

    def configurations(self) -> tuple[Configuration, ...]:
        return tuple(c for c, _ in self.nodes)

    def multiplicity_of(self, config: Configuration) -> int:
        for c, m in self.nodes:
            if c == config:
                return m
        raise KeyError(f"{config} not in poset")

    def to_json(self) -> str:
        configs = self.configurations()
        index = {c: i for i, c in enumerate(configs)}
        payload = {
            "system": {"N": self.system.N, "twoS": self.system.two_S, "d": self.system.d},
            "depth": self.depth,
            "nodes": [
                {
                    "occupation": list(c.occupation),
                    "multiplicity": m,
                    "index_sum": c.index_sum,
                }
                for c, m in self.nodes
            ],
            "edges": [[index[a], index[b]] for a, b in self.generator_edges],
        }
        return json.dumps(payload, indent=2)

    def to_dot(self) -> str:
        configs = self.configurations()
        index = {c: i for i, c in enumerate(configs)}
        lines = ["digraph excitations {", "  rankdir=BT;"]
        for c, m in self.nodes:
            label = str(c) + (f" x{m}" if m > 1 else "")
            lines.append(f'  n{index[c]} [label="{label}"];')
        for a, b in self.generator_edges:
            lines.append(f"  n{index[a]} -> n{index[b]};")
        lines.append("}")
        return "\n".join(lines)


def build_poset(system: QuantumSystem, depth: int) -> ConfigurationPoset:
    """Breadth-first closure of single-move excitations up to ``depth`` levels.

    Every spin-compatible configuration whose index sum exceeds the ground's
    by at most ``depth`` is reachable this way, so the level sets are complete.
    """
    if depth < 0:
        raise RangeError(f"depth must be nonnegative, got {depth}")
    bottom = highest_weight_config(system)
    seen: dict[Configuration, int] = {bottom: multiplicity(bottom, system.two_S)}
    edges: list[tuple[Configuration, Configuration]] = []
    frontier = [bottom]
    for _ in range(depth):
        nxt: list[Configuration] = []
        for parent in frontier:
            for child in excitations(parent, system.two_S):
                edges.append((parent, child))
                if child not in seen:
                    seen[child] = multiplicity(child, system.two_S)
                    nxt.append(child)
        frontier = nxt
        if not frontier:
            break
    ordered = sorted(seen.items(), key=lambda item: (item[0].index_sum, item[0].occupation))
    return ConfigurationPoset(
        system=system,
        depth=depth,
        bottom=bottom,
        nodes=tuple(ordered),
        generator_edges=tuple(sorted(set(edges), key=lambda e: (e[0].occupation, e[1].occupation))),
    )
