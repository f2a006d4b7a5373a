import json
from math import comb

import pytest

from occpoly import (
    Configuration,
    RangeError,
    build_poset,
    enumerate_configurations,
    excitations,
    highest_weight_config,
    hilbert_dim,
    multiplicity,
    stability_check,
    validate_system,
)


def config_from_indices(indices, d):
    occ = [0] * d
    for i in indices:
        occ[i - 1] += 1
    return Configuration(tuple(occ))


def sector_dimension_by_spin_counting(N, two_S, d):
    """Independent oracle: dim = W(M=S) - W(M=S+1) with W counting
    determinant states of fixed magnetization."""

    def W(two_M):
        n_up = (N + two_M) // 2
        n_down = (N - two_M) // 2
        if n_up < 0 or n_down < 0:
            return 0
        return comb(d, n_up) * comb(d, n_down)

    return W(two_S) - W(two_S + 2)


class TestHighestWeight:
    def test_quartet(self, quartet_737):
        assert highest_weight_config(quartet_737).index_multiset == (1, 1, 2, 2, 3, 4, 5)

    def test_triplet(self, triplet_444):
        assert highest_weight_config(triplet_444).occupation == (2, 1, 1, 0)

    def test_singlet(self):
        system = validate_system(6, 0, 4)
        assert highest_weight_config(system).occupation == (2, 2, 2, 0)


class TestMultiplicity:
    def test_three_particle_doublet(self):
        config = config_from_indices((1, 2, 3), 3)
        assert multiplicity(config, 1) == 2

    def test_nine_particle_quartet(self):
        config = config_from_indices((1, 1, 2, 2, 3, 4, 5, 6, 7), 7)
        assert multiplicity(config, 3) == 4

    def test_closed_shell_singlet(self):
        config = Configuration((2, 2, 0))
        assert multiplicity(config, 0) == 1

    def test_insufficient_unpaired(self):
        assert multiplicity(Configuration((2, 2, 0)), 2) == 0


class TestEnumeration:
    def test_three_in_three(self):
        system = validate_system(3, 1, 3)
        configs = enumerate_configurations(system)
        assert len(configs) == 7
        assert sum(m for _, m in configs) == 8

    def test_two_aligned(self):
        system = validate_system(2, 2, 2)
        configs = enumerate_configurations(system)
        assert [(c.occupation, m) for c, m in configs] == [((1, 1), 1)]

    def test_single_orbital(self):
        system = validate_system(2, 0, 1)
        configs = enumerate_configurations(system)
        assert [(c.occupation, m) for c, m in configs] == [((2,), 1)]

    def test_lexicographic_order(self):
        system = validate_system(2, 0, 3)
        occupations = [c.occupation for c, _ in enumerate_configurations(system)]
        assert occupations == sorted(occupations)


class TestHilbertDim:
    def test_three_in_three(self):
        assert hilbert_dim(validate_system(3, 1, 3)) == 8

    def test_trivial(self):
        assert hilbert_dim(validate_system(2, 0, 1)) == 1

    def test_triplet_four(self, triplet_444):
        # Independent sum over the binomial multiplicity formula: 12 + 3.
        assert hilbert_dim(triplet_444) == 15

    @pytest.mark.parametrize(
        "N,two_S,d",
        [(4, 2, 4), (7, 3, 7), (6, 0, 6), (5, 1, 6), (8, 2, 8), (3, 1, 3), (4, 0, 5)],
    )
    def test_matches_spin_counting_oracle(self, N, two_S, d):
        assert hilbert_dim(validate_system(N, two_S, d)) == sector_dimension_by_spin_counting(
            N, two_S, d
        )

    def test_fully_aligned_counts_subsets(self):
        # 2S = N: every configuration is all-single with multiplicity one.
        system = validate_system(3, 3, 5)
        assert hilbert_dim(system) == comb(5, 3)


class TestStability:
    def test_quartet_rank3(self, quartet_737):
        assert bool(stability_check(quartet_737, 3))

    def test_singlet_fails_spin_headroom(self):
        report = stability_check(validate_system(6, 0, 6), 2)
        assert not report.headroom_spin
        assert report.headroom_above and report.headroom_paired
        assert not bool(report)

    def test_rank1_always_holds(self, triplet_444, quartet_737):
        assert bool(stability_check(triplet_444, 1))
        assert bool(stability_check(quartet_737, 1))


class TestExcitations:
    def test_quartet_first_steps(self, quartet_737):
        ground = highest_weight_config(quartet_737)
        children = {c.index_multiset for c in excitations(ground, 3)}
        assert children == {(1, 1, 2, 3, 3, 4, 5), (1, 1, 2, 2, 3, 4, 6)}

    def test_singlet_unique_first_step(self):
        ground = highest_weight_config(validate_system(6, 0, 6))
        children = excitations(ground, 0)
        assert [c.index_multiset for c in children] == [(1, 1, 2, 2, 3, 4)]

    def test_fully_packed_has_none(self):
        assert excitations(Configuration((2, 2)), 0) == []


class TestBuildPoset:
    def test_depth_two_levels(self, quartet_737):
        poset = build_poset(quartet_737, 2)
        levels = {}
        for config, m in poset.nodes:
            levels.setdefault(poset.level(config), []).append((config, m))
            assert m >= 1
        assert len(levels[0]) == 1 and len(levels[1]) == 2
        assert set(levels) == {0, 1, 2}

    def test_small_system_closes(self):
        poset = build_poset(validate_system(3, 1, 3), 10)
        assert len(poset.nodes) == 7
        assert sum(m for _, m in poset.nodes) == 8

    def test_levels_are_complete(self, quartet_737):
        # Breadth-first closure must reach every spin-compatible configuration
        # within the depth, matching a direct enumeration filter.
        depth = 3
        poset = build_poset(quartet_737, depth)
        base = poset.base_index_sum
        expected = {
            c.occupation
            for c, _ in enumerate_configurations(quartet_737)
            if c.index_sum <= base + depth
        }
        assert {c.occupation for c in poset.configurations()} == expected

    def test_edges_increase_index_sum_by_one(self, quartet_737):
        poset = build_poset(quartet_737, 3)
        for parent, child in poset.generator_edges:
            assert child.index_sum == parent.index_sum + 1

    def test_bottom_multiplicity_one(self, quartet_737):
        poset = build_poset(quartet_737, 2)
        assert poset.multiplicity_of(poset.bottom) == 1

    def test_negative_depth_rejected(self, quartet_737):
        with pytest.raises(RangeError):
            build_poset(quartet_737, -1)

    def test_json_and_dot(self, quartet_737):
        poset = build_poset(quartet_737, 2)
        payload = json.loads(poset.to_json())
        assert payload["system"] == {"N": 7, "twoS": 3, "d": 7}
        assert len(payload["nodes"]) == len(poset.nodes)
        assert all(len(edge) == 2 for edge in payload["edges"])
        dot = poset.to_dot()
        assert dot.startswith("digraph") and "->" in dot
