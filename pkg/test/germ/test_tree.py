"""
无穷近点树测试：拓扑校验、邻近不等式、总变换重数与经典对数典范阈值。
"""

from fractions import Fraction

import pytest
import sympy

from edgealpha.exceptions import GermStructureError, UsageError
from edgealpha.germ import (
    BranchTrace,
    InfinitelyNearPoint,
    InfinitelyNearTree,
    discrepancies,
    intersection_multiplicity,
    lct_plain,
    total_multiplicities,
    validate_trace,
)


def quasihomogeneous_lct(a: int, b: int) -> Fraction:
    """x^a + y^b 的对数典范阈值 min{1, 1/a + 1/b}，用 sympy 独立计算"""
    value = sympy.Min(sympy.Integer(1), sympy.Rational(1, a) + sympy.Rational(1, b))
    return Fraction(str(value))


class TestTreeStructure:
    def test_chain_ids(self):
        assert InfinitelyNearTree.chain(3).ids == ("p1", "p2", "p3")

    def test_cusp_proximity(self):
        tree = InfinitelyNearTree.cusp()
        assert tree.proximate_to("p3") == ("p2", "p1")
        assert set(tree.proximate_points("p1")) == {"p2", "p3"}

    def test_satellite_must_be_grandparent(self):
        with pytest.raises(GermStructureError):
            InfinitelyNearTree(
                (
                    InfinitelyNearPoint("p1"),
                    InfinitelyNearPoint("p2", "p1"),
                    InfinitelyNearPoint("p3", "p2", "p2"),
                )
            )

    def test_parent_must_come_first(self):
        with pytest.raises(GermStructureError):
            InfinitelyNearTree((InfinitelyNearPoint("p2", "p1"), InfinitelyNearPoint("p1")))

    def test_unknown_point(self):
        with pytest.raises(GermStructureError):
            InfinitelyNearTree.chain(2).point("q")


class TestTraces:
    def test_negative_multiplicity(self):
        with pytest.raises(GermStructureError):
            BranchTrace.of({"p1": -1})

    def test_zero_multiplicities_are_dropped(self):
        assert BranchTrace.of({"p1": 1, "p2": 0}).support == ("p1",)

    def test_proximity_violation(self):
        tree = InfinitelyNearTree.cusp()
        with pytest.raises(GermStructureError):
            validate_trace(tree, BranchTrace.of({"p1": 1, "p2": 1, "p3": 1}))

    def test_support_closed_under_parents(self):
        with pytest.raises(GermStructureError):
            validate_trace(InfinitelyNearTree.chain(2), BranchTrace.of({"p2": 1}))

    def test_cusp_total_multiplicities(self):
        tree = InfinitelyNearTree.cusp()
        cusp = BranchTrace.of({"p1": 2, "p2": 1, "p3": 1})
        assert total_multiplicities(tree, cusp) == {"p1": 2, "p2": 3, "p3": 6}
        assert discrepancies(tree) == {"p1": 1, "p2": 2, "p3": 4}

    def test_noether_formula(self):
        tree = InfinitelyNearTree.chain(3)
        first = BranchTrace.along(["p1", "p2", "p3"])
        second = BranchTrace.along(["p1", "p2"])
        assert intersection_multiplicity(tree, first, second) == 2

    def test_sum_of_traces(self):
        combined = BranchTrace.along(["p1", "p2"], "A") + BranchTrace.along(["p1"], "B")
        assert combined.at("p1") == 2
        assert combined.at("p2") == 1
        assert combined.label == "A"


class TestPlainThreshold:
    def test_cusp(self):
        tree = InfinitelyNearTree.cusp()
        assert lct_plain(tree, BranchTrace.of({"p1": 2, "p2": 1, "p3": 1})) == quasihomogeneous_lct(2, 3)

    def test_tacnode(self):
        tree = InfinitelyNearTree.chain(2)
        assert lct_plain(tree, BranchTrace.of({"p1": 2, "p2": 2})) == Fraction(3, 4)
        assert quasihomogeneous_lct(2, 4) == Fraction(3, 4)

    @pytest.mark.parametrize("k", range(2, 10))
    def test_ordinary_multiple_point(self, k):
        tree = InfinitelyNearTree.chain(1)
        assert lct_plain(tree, BranchTrace.of({"p1": k})) == quasihomogeneous_lct(k, k)

    @pytest.mark.parametrize("contact", range(1, 6))
    def test_smooth_branches_with_contact(self, contact):
        # 两条接触阶为 contact 的光滑分支：y(y − x^contact)
        tree = InfinitelyNearTree.chain(contact)
        both = BranchTrace.of({point_id: 2 for point_id in tree.ids})
        assert lct_plain(tree, both) == quasihomogeneous_lct(2, 2 * contact)

    def test_zero_branch(self):
        with pytest.raises(UsageError):
            lct_plain(InfinitelyNearTree.chain(1), BranchTrace.of({}))
