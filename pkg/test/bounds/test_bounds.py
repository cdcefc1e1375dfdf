"""
界测试：Tian 区间、α 推出的 R 下界、Berman 型普适下界与界报告。
"""

from fractions import Fraction

import pytest

from edgealpha.bounds import (
    BoundSource,
    TianInterval,
    berman_constant,
    berman_envelope,
    berman_lower_bound,
    berman_r_bound,
    bound_report,
    cited_upper_bound,
    r_lower_bound,
    sufficient_range,
    tian_sufficient_range,
    tian_threshold,
)
from edgealpha.catalog import SurfaceConfig, alpha_hat, all_configs
from edgealpha.exactmath import BetaFraction, PiecewiseBetaFunction, min_envelope, pointwise_le
from edgealpha.exceptions import DomainError, UsageError

S = SurfaceConfig
OPEN_UNIT = TianInterval(Fraction(1), includes_upper=False)
CLOSED_UNIT = TianInterval(Fraction(1), includes_upper=True)

EXPECTED_INTERVALS = {
    S.DEG9: TianInterval(Fraction(1, 3)),
    S.DEG8_QUADRIC: TianInterval(Fraction(1, 2)),
    S.F1_TANGENT: TianInterval(Fraction(3, 10)),
    S.F1_GENERAL: TianInterval(Fraction(3, 7)),
    S.DEG7_EDGE_POINT: TianInterval(Fraction(3, 7)),
    S.DEG7_L_TANGENT: TianInterval(Fraction(1, 2)),
    S.DEG7_R_CONTACT3: TianInterval(Fraction(1, 2)),
    S.DEG7_R_CONTACT2: TianInterval(Fraction(1, 2)),
    S.DEG6_LINE_POINT: TianInterval(Fraction(3, 5)),
    S.DEG6_CONIC_TANGENT: TianInterval(Fraction(3, 4)),
    S.DEG6_GENERIC: TianInterval(Fraction(3, 4)),
    S.DEG5: TianInterval(Fraction(3, 4)),
    S.DEG4_LINE_POINT: OPEN_UNIT,
    S.DEG4_CONIC_PAIR: OPEN_UNIT,
    S.DEG4_GENERIC: OPEN_UNIT,
    S.DEG3_ECKARDT_ON_C: OPEN_UNIT,
    S.DEG3_ECKARDT_OFF_C: OPEN_UNIT,
    S.DEG3_LINE_CONIC_TANGENT: CLOSED_UNIT,
    S.DEG3_CUSP_MEETS_C_ONCE: CLOSED_UNIT,
    S.DEG3_GENERIC: CLOSED_UNIT,
    S.DEG2_TACNODE_ON_C: CLOSED_UNIT,
    S.DEG2_TACNODE_OFF_C: CLOSED_UNIT,
    S.DEG2_CUSP_ON_C: CLOSED_UNIT,
    S.DEG2_GENERIC: CLOSED_UNIT,
    S.DEG1_NO_CUSPIDAL: CLOSED_UNIT,
    S.DEG1_CUSPIDAL: CLOSED_UNIT,
}


class TestTianInterval:
    def test_expected_table_covers_catalog(self):
        assert set(EXPECTED_INTERVALS) == set(all_configs())

    @pytest.mark.parametrize("config", list(SurfaceConfig), ids=lambda config: config.value)
    def test_interval(self, config):
        assert tian_sufficient_range(config) == EXPECTED_INTERVALS[config]

    @pytest.mark.parametrize("config", list(SurfaceConfig), ids=lambda config: config.value)
    def test_alpha_exceeds_threshold_inside(self, config):
        interval = tian_sufficient_range(config)
        f = alpha_hat(config)
        inside = interval.upper * Fraction(99, 100)
        assert f(inside) > tian_threshold()
        if interval.includes_upper:
            assert f(interval.upper) > tian_threshold()
        else:
            assert f(interval.upper) <= tian_threshold()

    def test_r_lower_bounds(self):
        assert r_lower_bound(S.F1_TANGENT) == Fraction(3, 10)
        assert r_lower_bound(S.F1_GENERAL) == Fraction(3, 7)
        assert r_lower_bound(S.DEG7_EDGE_POINT) == Fraction(3, 7)
        assert r_lower_bound(S.DEG7_L_TANGENT) == Fraction(1, 2)
        assert r_lower_bound(S.DEG3_GENERIC) == 1

    def test_interval_text(self):
        assert str(EXPECTED_INTERVALS[S.DEG9]) == "(0, 1/3)"
        assert str(CLOSED_UNIT) == "(0, 1]"

    def test_membership(self):
        assert Fraction(1, 4) in EXPECTED_INTERVALS[S.DEG9]
        assert Fraction(1, 3) not in EXPECTED_INTERVALS[S.DEG9]
        assert Fraction(1) in CLOSED_UNIT

    def test_threshold_in_higher_dimension(self):
        assert tian_threshold(3) == Fraction(3, 4)

    def test_increasing_function_rejected(self):
        increasing = min_envelope([BetaFraction.identity()])
        with pytest.raises(DomainError):
            sufficient_range(increasing, Fraction(1, 2))

    def test_function_already_below_threshold(self):
        below = min_envelope([BetaFraction.constant(Fraction(1, 2))])
        assert sufficient_range(below, Fraction(2, 3)) == TianInterval(Fraction(0))

    def test_threshold_reached_at_breakpoint(self):
        f = PiecewiseBetaFunction.from_breakpoints(
            [BetaFraction.constant(1), BetaFraction.over_beta(1, 2, 6), BetaFraction.constant(Fraction(2, 3))],
            ["1/4", "1/2"],
        )
        assert sufficient_range(f, Fraction(2, 3)) == TianInterval(Fraction(1, 2))


class TestBerman:
    def test_constants(self):
        assert berman_constant(2) == 9
        assert berman_constant(3) == 64
        assert berman_constant(4) > 10 ** 20

    def test_dimension_must_be_at_least_two(self):
        with pytest.raises(UsageError):
            berman_constant(1)
        with pytest.raises(UsageError):
            berman_r_bound(True)

    def test_lower_bound_values(self):
        assert berman_lower_bound(2, Fraction(1, 9)) == 1
        assert berman_lower_bound(2, 1) == Fraction(1, 9)
        assert berman_r_bound(2) == Fraction(1, 6)
        assert berman_r_bound(3) == Fraction(1, 48)

    @pytest.mark.parametrize("config", list(SurfaceConfig), ids=lambda config: config.value)
    def test_alpha_dominates_universal_bound(self, config):
        assert pointwise_le(berman_envelope(2), alpha_hat(config))


class TestReport:
    @pytest.mark.parametrize("config", list(SurfaceConfig), ids=lambda config: config.value)
    def test_bounds_are_sandwiched(self, config):
        report = bound_report(config)
        assert report.berman_lower <= report.r_lower
        if report.upper_bound is not None:
            assert report.r_lower <= report.upper_bound.value

    def test_cited_upper_bounds(self):
        assert cited_upper_bound(S.F1_TANGENT).value == Fraction(4, 5)
        assert cited_upper_bound(S.F1_GENERAL).value == Fraction(4, 5)
        assert cited_upper_bound(S.DEG7_EDGE_POINT).value == Fraction(7, 9)
        assert cited_upper_bound(S.DEG9) is None

    def test_report_dictionary(self):
        payload = bound_report(S.F1_GENERAL).to_dict()
        assert payload == {
            "case_id": "f1-general",
            "tian_interval": "(0, 3/7)",
            "r_lower": "3/7",
            "r_lower_source": BoundSource.ALPHA.value,
            "berman_lower": "1/6",
            "berman_lower_source": "berman",
            "upper_bound": "4/5",
            "upper_bound_source": "szekelyhidi",
            "kahler_einstein_surface": False,
            "kahler_einstein_surface_source": "classical",
        }
