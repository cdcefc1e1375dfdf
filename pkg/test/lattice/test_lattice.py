"""
Picard 格测试：相交形式、命名类与 −K·D = m 类的枚举。
"""

import pytest

from edgealpha.exceptions import UsageError
from edgealpha.lattice import (
    PicClass,
    anticanonical,
    conic_through,
    enumerate_rational_classes,
    exceptional,
    hyperplane,
    line_through,
    quadric_class,
)


class TestIntersectionForm:
    @pytest.mark.parametrize("degree", range(1, 10))
    def test_anticanonical_self_intersection(self, degree):
        assert anticanonical(degree).self_intersection == degree

    def test_quadric_anticanonical(self):
        assert anticanonical(8, quadric=True).self_intersection == 8
        assert quadric_class(1, 0).intersect(quadric_class(0, 1)) == 1

    def test_exceptional_curve(self):
        e1 = exceptional(7, 1)
        assert e1.self_intersection == -1
        assert e1.anticanonical_degree == 1

    def test_line_through_two_points(self):
        line = line_through(7, 1, 2)
        assert line.self_intersection == -1
        assert line.anticanonical_degree == 1
        assert line.intersect(exceptional(7, 1)) == 1

    def test_conic_through_four_points(self):
        conic = conic_through(5, (1, 2, 3, 4))
        assert conic.self_intersection == 0
        assert conic.anticanonical_degree == 2

    def test_linear_equivalence(self):
        assert hyperplane(8) - exceptional(8, 1) + exceptional(8, 1) == hyperplane(8)
        assert 3 * hyperplane(9) == anticanonical(9)

    def test_mixed_lattices_rejected(self):
        with pytest.raises(UsageError):
            hyperplane(8).intersect(quadric_class(1, 1))

    def test_wrong_coordinate_count(self):
        with pytest.raises(UsageError):
            PicClass(7, (1, 0))

    def test_exceptional_index_range(self):
        with pytest.raises(UsageError):
            exceptional(7, 3)


class TestEnumeration:
    @pytest.mark.parametrize(
        "degree, count",
        [(7, 3), (6, 6), (5, 10), (4, 16), (3, 27), (2, 56), (1, 240)],
    )
    def test_line_counts(self, degree, count):
        assert len(enumerate_rational_classes(degree, 1)) == count

    def test_quadric_rulings(self):
        classes = enumerate_rational_classes(8, 2, quadric=True)
        assert [str(item) for item in classes] == ["(1,0)", "(0,1)"]

    def test_projective_plane_has_no_lines(self):
        assert enumerate_rational_classes(9, 1) == []

    @pytest.mark.parametrize("degree", range(1, 10))
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_enumerated_classes_satisfy_equations(self, degree, m):
        classes = enumerate_rational_classes(degree, m)
        assert len(set(classes)) == len(classes)
        for item in classes:
            assert item.anticanonical_degree == m
            assert item.self_intersection == m - 2

    def test_cubic_conic_classes_include_residuals(self):
        classes = enumerate_rational_classes(3, 2)
        assert conic_through(3, (1, 2, 3, 4)) in classes
        assert hyperplane(3) - exceptional(3, 1) in classes

    def test_invalid_m(self):
        with pytest.raises(UsageError):
            enumerate_rational_classes(3, 4)
