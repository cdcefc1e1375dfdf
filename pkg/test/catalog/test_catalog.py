"""
目录测试：情形元数据、显式公式、测试除子与全目录的引擎复核。
"""

from fractions import Fraction

import pytest

from edgealpha.catalog import (
    ALPHA_FORMULAS,
    Component,
    SurfaceConfig,
    SurfaceFamily,
    TestDivisor as Divisor,
    alpha_engine,
    alpha_hat,
    alpha_terms,
    all_configs,
    configs_of_degree,
    perturbed,
    test_divisors as divisors_of,
    verify_case,
    verify_catalog,
)
from edgealpha.exactmath import BetaFraction, min_envelope, piecewise_equal
from edgealpha.exceptions import GermStructureError, UsageError
from edgealpha.germ import standard_germ
from edgealpha.lattice import hyperplane

S = SurfaceConfig


class TestConfigs:
    def test_case_count(self):
        assert len(all_configs()) == 26
        assert set(ALPHA_FORMULAS) == set(all_configs())

    def test_from_id(self):
        assert S.from_id("deg3-eckardt-on-c") is S.DEG3_ECKARDT_ON_C
        with pytest.raises(UsageError):
            S.from_id("deg10")

    def test_degree_eight_families(self):
        assert configs_of_degree(8) == [S.F1_TANGENT, S.F1_GENERAL]
        assert configs_of_degree(8, quadric=True) == [S.DEG8_QUADRIC]
        assert S.DEG8_QUADRIC.family is SurfaceFamily.QUADRIC

    @pytest.mark.parametrize(
        "config, expected",
        [(S.DEG9, True), (S.DEG8_QUADRIC, True), (S.F1_GENERAL, False), (S.DEG7_R_CONTACT2, False), (S.DEG3_GENERIC, True)],
    )
    def test_kahler_einstein_surface(self, config, expected):
        assert config.kahler_einstein_surface is expected


class TestFormulas:
    def test_projective_plane(self):
        f = alpha_hat(S.DEG9)
        assert f.breakpoints == (Fraction(1, 6), Fraction(2, 3))
        assert f(Fraction(1, 2)) == Fraction(5, 9)
        assert f(1) == Fraction(1, 3)

    def test_quadric(self):
        f = alpha_hat(S.DEG8_QUADRIC)
        assert f.breakpoints == (Fraction(1, 4),)
        assert f(1) == Fraction(1, 2)

    def test_degree_one_without_cuspidal_curve(self):
        f = alpha_hat(S.DEG1_NO_CUSPIDAL)
        assert f.breakpoints == ()
        assert f(1) == 1

    @pytest.mark.parametrize("config", list(SurfaceConfig))
    def test_formula_shape(self, config):
        f = alpha_hat(config)
        assert f.is_nonincreasing()
        assert f.initial_constant_interval() is not None
        assert piecewise_equal(f, min_envelope(alpha_terms(config)))

    def test_perturbation_changes_last_piece(self):
        assert not piecewise_equal(perturbed(S.DEG9), alpha_hat(S.DEG9))


class TestDivisors:
    @pytest.mark.parametrize("config", list(SurfaceConfig))
    def test_witness_comes_first(self, config):
        divisors = divisors_of(config)
        assert divisors
        assert piecewise_equal(divisors[0].threshold(), min_envelope([BetaFraction.constant(1)]))

    def test_wrong_linear_equivalence_class(self):
        with pytest.raises(GermStructureError):
            Divisor(
                "H",
                (Component("L", hyperplane(9), 1),),
                standard_germ("transverse_lines", weights=(1,), labels=["L"], with_fixed_C=True),
            )

    def test_germ_weight_must_match_component(self):
        with pytest.raises(GermStructureError):
            Divisor(
                "3L",
                (Component("L", hyperplane(9), 3),),
                standard_germ("transverse_lines", weights=(1,), labels=["L"], with_fixed_C=True),
            )


class TestVerification:
    def test_every_case_matches_engine(self):
        report = verify_catalog(max_workers=4)
        assert [result.config for result in report.results] == all_configs()
        failures = [(r.config.value, r.hard_coded.pretty(), r.derived.pretty()) for r in report.failures]
        assert failures == []
        assert report.all_passed

    def test_engine_reproduces_projective_plane(self):
        assert piecewise_equal(alpha_engine(S.DEG9), alpha_hat(S.DEG9))

    @pytest.mark.parametrize("config", [S.DEG9, S.F1_TANGENT, S.DEG3_CUSP_MEETS_C_ONCE, S.DEG1_NO_CUSPIDAL])
    def test_perturbed_formula_fails_with_witness(self, config):
        result = verify_case(config, formula=perturbed)
        assert not result.passed
        assert result.status == "FAIL"
        assert result.witness is not None
        assert result.hard_coded(result.witness) != result.derived(result.witness)

    def test_partial_catalog_keeps_order(self):
        selected = [S.DEG5, S.DEG9]
        report = verify_catalog(selected, max_workers=1)
        assert [result.config for result in report.results] == selected
