from fractions import Fraction

import pytest

from occpoly import (
    ApplicabilityError,
    StabilityError,
    WeightVector,
    validate_system,
)
from occpoly.catalog import (
    catalog_vertices,
    generic_family,
    pauli_minkowski_vertices,
    singlet_family,
    spin_pauli,
)

F = Fraction


class TestSpinPauli:
    def test_triplet_ladder(self, triplet_444):
        rows = spin_pauli(triplet_444).rows
        assert [(row.a, row.rhs.const) for row in rows] == [
            ((1, 0, 0, 0), 2),
            ((1, 1, 0, 0), 3),
            ((1, 1, 1, 0), 4),
        ]

    def test_singlet_ladder(self):
        rows = spin_pauli(validate_system(4, 0, 4)).rows
        assert [(row.a, row.rhs.const) for row in rows] == [
            ((1, 0, 0, 0), 2),
            ((1, 1, 0, 0), 4),
        ]

    def test_fully_aligned(self):
        rows = spin_pauli(validate_system(2, 2, 2)).rows
        assert [(row.a, row.rhs.const) for row in rows] == [((1, 0), 1), ((1, 1), 2)]


class TestGenericFamily:
    def test_rank2_instantiation(self, triplet_444, w_73):
        rows = generic_family(triplet_444, w_73, 2).rows
        extra = rows[-1]
        assert extra.a == (2, 1, 1, 0)
        assert extra.rhs.evaluate(w_73) == F(57, 10)

    def test_rank3_right_hand_sides(self, quartet_737):
        w = WeightVector.generic(3)
        rows = generic_family(quartet_737, w, 3).rows
        tail = rows[-3:]
        assert [row.rhs.display_pair(3) for row in tail] == [
            (F(10), (F(1), F(0), F(0))),
            (F(13), (F(1), F(1), F(0))),
            (F(16), (F(1), F(1), F(0))),
        ]
        assert tail[1].a == (3, 2, 2, 1, 1, 0, 0)
        assert tail[2].a == (3, 3, 2, 2, 1, 1, 0)

    def test_rank1_is_ladder(self, triplet_444):
        w = WeightVector.pure()
        assert generic_family(triplet_444, w, 1).rows == spin_pauli(triplet_444).rows

    def test_stability_gate(self):
        with pytest.raises(StabilityError):
            generic_family(validate_system(6, 0, 6), WeightVector.generic(2), 2)

    def test_no_closed_form_beyond_rank3(self, quartet_737):
        with pytest.raises(ApplicabilityError):
            generic_family(quartet_737, WeightVector.generic(4), 4)


class TestSingletFamily:
    def test_rank2_instantiation(self):
        w = WeightVector((F(3, 5), F(2, 5)))
        rows = singlet_family(4, 4, w, 2).rows
        assert rows[-1].a == (1, 1, 0, 0)
        assert rows[-1].rhs.evaluate(w) == F(18, 5)

    def test_rank3_right_hand_sides(self):
        w = WeightVector.generic(3)
        rows = singlet_family(6, 6, w, 3).rows
        assert rows[-2].rhs.display_pair(3) == (F(5), (F(1), F(0), F(0)))
        assert rows[-1].rhs.display_pair(3) == (F(14), (F(2), F(1), F(0)))

    def test_rank4_right_hand_sides(self):
        w = WeightVector.generic(4)
        rows = singlet_family(6, 6, w, 4).rows
        assert [row.rhs.display_pair(4)[0] for row in rows[-3:]] == [14, 9, 12]
        assert [row.rhs.display_pair(4)[1] for row in rows[-3:]] == [
            (F(2), F(1), F(1), F(0)),
            (F(1), F(1), F(1), F(0)),
            (F(2), F(1), F(1), F(0)),
        ]

    def test_applicability(self):
        with pytest.raises(ApplicabilityError):
            singlet_family(5, 6, WeightVector.generic(2), 2)
        with pytest.raises(ApplicabilityError):
            singlet_family(6, 4, WeightVector.generic(3), 3)
        with pytest.raises(ApplicabilityError):
            singlet_family(6, 9, WeightVector.generic(5), 5)


class TestCatalogVertices:
    def test_generic_rank2(self, quartet_737, w_73):
        vertices = catalog_vertices(quartet_737, w_73, 2).vertices
        w1 = F(7, 10)
        assert {v.evaluated for v in vertices} == {
            (2, 2, 1, 1, w1, 1 - w1, 0),
            (2, 1 + w1, 2 - w1, 1, 1, 0, 0),
        }

    def test_singlet_rank3_instantiation(self):
        w = WeightVector((F(1, 2), F(3, 10), F(1, 5)))
        vertices = catalog_vertices(validate_system(4, 0, 4), w, 3).vertices
        assert [v.evaluated for v in vertices] == [
            (2, F(3, 2), F(3, 10), F(1, 5)),
            (2, F(13, 10), F(7, 10), 0),
            (F(9, 5), F(17, 10), F(1, 2), 0),
        ]

    def test_rank3_collapses_to_rank2_at_zero_weight(self, quartet_737):
        w2 = WeightVector.generic(2)
        rank2 = {
            tuple(sorted(v.form_key(2)))
            for v in catalog_vertices(quartet_737, w2, 2).vertices
        }
        for vertex in catalog_vertices(quartet_737, WeightVector.generic(3), 3).vertices:
            restricted = tuple(
                sorted(form.drop_last_weight(3).key(2) for form in vertex.coordinates)
            )
            assert restricted in rank2

    @pytest.mark.parametrize(
        "N,twoS,d,r,count",
        [
            (7, 3, 7, 2, 2),
            (7, 3, 7, 3, 6),
            (8, 2, 8, 3, 6),
            (6, 0, 6, 2, 1),
            (6, 0, 6, 3, 3),
            (6, 0, 6, 4, 8),
            (8, 0, 7, 4, 8),
        ],
    )
    def test_counts(self, N, twoS, d, r, count):
        system = validate_system(N, twoS, d)
        assert len(catalog_vertices(system, WeightVector.generic(r), r).vertices) == count


class TestPauliMinkowski:
    def test_triplet_generators(self, triplet_444):
        first, second = pauli_minkowski_vertices(triplet_444)
        assert first.vertices[0].evaluated == (1, 0, 0, 0)
        assert second.vertices[0].evaluated == (1, 1, 1, 0)
        summed = tuple(
            sorted(
                (a + b for a, b in zip(first.vertices[0].evaluated, second.vertices[0].evaluated)),
                reverse=True,
            )
        )
        assert summed == (2, 1, 1, 0)

    def test_fully_aligned_first_generator_vanishes(self):
        first, second = pauli_minkowski_vertices(validate_system(2, 2, 3))
        assert first.vertices[0].evaluated == (0, 0, 0)
        assert second.vertices[0].evaluated == (1, 1, 0)
