"""
芽引擎测试：关于 β 的阈值、逐点特化求解、对数典范判定与标准芽构造。
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgealpha.exactmath import BetaFraction, min_envelope, piecewise_equal
from edgealpha.exceptions import FixedPartNotLcError, GermStructureError, UnboundedThresholdError, UsageError
from edgealpha.germ import (
    BranchTrace,
    FixedBranch,
    InfinitelyNearTree,
    LinearCoefficient,
    ScalableBranch,
    WeightedGermConfig,
    is_log_canonical,
    lct_at,
    lct_in_t,
    scaled_weights,
    standard_germ,
    threshold_constraints,
)

betas = st.fractions(min_value=Fraction(1, 40), max_value=1, max_denominator=40)

STANDARD_GERMS = [
    standard_germ("eckardt", weights=(1, 1, 1), with_fixed_C=True),
    standard_germ("eckardt", weights=(1, 1, 1)),
    standard_germ("transverse_lines", weights=(2, 1), with_fixed_C=True),
    standard_germ("tangent_pair", contact=3, weights=(1, 1), with_fixed_C=True),
    standard_germ("tangent_pair", contact=2, weights=(1, 2), with_fixed_C=True, C_transverse=False),
    standard_germ("tacnode", with_fixed_C=True),
    standard_germ("cusp", weight=1),
    standard_germ("cusp", weight=1, with_fixed_C=True, C_contact=3),
    standard_germ("osculating", contact=3, tangent_weights=(1,), transverse_weights=(1,)),
    standard_germ("anticanonical_self"),
]


class TestThresholdInBeta:
    def test_eckardt_point_on_boundary(self):
        config = standard_germ("eckardt", weights=(1, 1, 1), with_fixed_C=True)
        assert piecewise_equal(lct_in_t(config), min_envelope([BetaFraction.over_beta(1, 1, 3)]))

    def test_eckardt_point_off_boundary(self):
        config = standard_germ("eckardt", weights=(1, 1, 1))
        assert piecewise_equal(lct_in_t(config), min_envelope([BetaFraction.over_beta(2, 0, 3)]))

    def test_cusp_without_boundary(self):
        config = standard_germ("cusp", weight=1)
        assert piecewise_equal(lct_in_t(config), min_envelope([BetaFraction.over_beta(5, 0, 6)]))
        assert lct_in_t(config)(1) == Fraction(5, 6)

    def test_boundary_itself_gives_constant_one(self):
        config = standard_germ("anticanonical_self")
        assert piecewise_equal(lct_in_t(config), min_envelope([BetaFraction.constant(1)]))

    def test_scaled_weights_divide_threshold(self):
        config = standard_germ("eckardt", weights=(1, 1, 1), with_fixed_C=True)
        assert piecewise_equal(lct_in_t(scaled_weights(config, 2)), lct_in_t(config).scaled(Fraction(1, 2)))

    def test_constraints_are_nonincreasing(self):
        for config in STANDARD_GERMS:
            assert all(fraction.derivative_numerator <= 0 for fraction in threshold_constraints(config))

    @pytest.mark.parametrize("config", STANDARD_GERMS)
    @given(beta=betas)
    def test_specialization_agrees(self, config, beta):
        assert lct_in_t(config)(beta) == lct_at(config, beta)


class TestLogCanonical:
    @pytest.mark.parametrize("config", STANDARD_GERMS)
    @pytest.mark.parametrize("beta", [Fraction(1, 7), Fraction(1, 2), Fraction(1)])
    def test_threshold_is_sharp(self, config, beta):
        threshold = lct_at(config, beta)
        assert is_log_canonical(config, beta, threshold)
        assert not is_log_canonical(config, beta, threshold + Fraction(1, 1000))

    def test_negative_t(self):
        with pytest.raises(UsageError):
            is_log_canonical(standard_germ("eckardt", weights=(1, 1, 1)), Fraction(1, 2), -1)


class TestInvalidGerms:
    def test_fixed_part_not_log_canonical(self):
        config = WeightedGermConfig(
            InfinitelyNearTree.chain(1),
            (FixedBranch(BranchTrace.of({"p1": 3}, "F"), LinearCoefficient(Fraction(1))),),
            (ScalableBranch(BranchTrace.along(["p1"], "L"), 1),),
        )
        with pytest.raises(FixedPartNotLcError):
            lct_in_t(config)
        with pytest.raises(FixedPartNotLcError):
            lct_at(config, Fraction(1, 2))

    def test_scalable_part_misses_germ(self):
        config = WeightedGermConfig(
            InfinitelyNearTree.chain(1),
            (),
            (ScalableBranch(BranchTrace.of({}, "L"), 1),),
        )
        with pytest.raises(UnboundedThresholdError):
            lct_in_t(config)

    def test_empty_scalable_part(self):
        with pytest.raises(UsageError):
            WeightedGermConfig(InfinitelyNearTree.chain(1), (), ())

    def test_nonpositive_weight(self):
        with pytest.raises(UsageError):
            WeightedGermConfig(
                InfinitelyNearTree.chain(1), (), (ScalableBranch(BranchTrace.along(["p1"], "L"), 0),)
            )

    def test_coefficient_leaves_unit_interval(self):
        with pytest.raises(GermStructureError):
            WeightedGermConfig(
                InfinitelyNearTree.chain(1),
                (FixedBranch(BranchTrace.along(["p1"], "F"), LinearCoefficient(Fraction(2))),),
                (ScalableBranch(BranchTrace.along(["p1"], "L"), 1),),
            )


class TestStandardGerms:
    def test_unknown_kind(self):
        with pytest.raises(UsageError):
            standard_germ("node")

    def test_cusp_contact_must_be_two_or_three(self):
        with pytest.raises(GermStructureError):
            standard_germ("cusp", with_fixed_C=True, C_contact=4)

    def test_cusp_meeting_boundary_once_is_impossible(self):
        with pytest.raises(GermStructureError):
            standard_germ("cusp", with_fixed_C=True, C_contact=2, C_intersection=1)

    def test_reserved_label(self):
        with pytest.raises(UsageError):
            standard_germ("eckardt", weights=(1, 1, 1), labels=["C", "L2", "L3"])

    def test_wrong_weight_count(self):
        with pytest.raises(UsageError):
            standard_germ("eckardt", weights=(1, 1))

    def test_boundary_branch_lookup(self):
        config = standard_germ("tacnode", with_fixed_C=True)
        assert config.branch("C").support == ("p1",)
        with pytest.raises(UsageError):
            config.branch("missing")
