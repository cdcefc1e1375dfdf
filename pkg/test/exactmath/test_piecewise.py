"""
分段函数测试：构造校验、最小包络、逐点比较与见证。
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgealpha.exactmath import (
    BetaFraction,
    Piece,
    PiecewiseBetaFunction,
    first_difference,
    first_violation,
    min_envelope,
    parse_piecewise,
    piecewise_equal,
    pointwise_le,
    pointwise_min,
)
from edgealpha.exceptions import DomainError, UsageError

ONE = BetaFraction.constant(1)
DEG9_TERMS = [ONE, BetaFraction.over_beta(1, 3, 9), BetaFraction.over_beta(1, 0, 3)]

fraction_terms = st.builds(
    BetaFraction.over_beta,
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=1, max_value=9),
)
betas = st.fractions(min_value=Fraction(1, 50), max_value=1, max_denominator=50)


class TestConstruction:
    def test_adjacent_equal_pieces_are_merged(self):
        f = PiecewiseBetaFunction.from_breakpoints([ONE, ONE], ["1/2"])
        assert len(f.pieces) == 1
        assert f.breakpoints == ()

    def test_discontinuity_rejected(self):
        with pytest.raises(DomainError):
            PiecewiseBetaFunction(
                (
                    Piece(Fraction(0), Fraction(1, 2), ONE),
                    Piece(Fraction(1, 2), Fraction(1), BetaFraction.constant(2)),
                )
            )

    def test_gap_rejected(self):
        with pytest.raises(DomainError):
            PiecewiseBetaFunction(
                (
                    Piece(Fraction(0), Fraction(1, 3), ONE),
                    Piece(Fraction(1, 2), Fraction(1), ONE),
                )
            )

    def test_partition_must_reach_one(self):
        with pytest.raises(DomainError):
            PiecewiseBetaFunction((Piece(Fraction(0), Fraction(1, 2), ONE),))

    def test_breakpoint_count_mismatch(self):
        with pytest.raises(UsageError):
            PiecewiseBetaFunction.from_breakpoints([ONE], ["1/2"])


class TestMinEnvelope:
    def test_projective_plane_breakpoints(self):
        f = min_envelope(DEG9_TERMS)
        assert f.breakpoints == (Fraction(1, 6), Fraction(2, 3))
        assert f.fractions == tuple(DEG9_TERMS)
        assert f(Fraction(1, 2)) == Fraction(5, 9)
        assert f(1) == Fraction(1, 3)

    def test_describe_lines(self):
        assert min_envelope(DEG9_TERMS).describe() == [
            "0 < β ≤ 1/6 : 1",
            "1/6 ≤ β ≤ 2/3 : (1+3β)/(9β)",
            "2/3 ≤ β ≤ 1 : 1/(3β)",
        ]

    def test_pretty(self):
        assert min_envelope(DEG9_TERMS).pretty() == "min{1, (1+3β)/(9β), 1/(3β)}"

    def test_empty_list(self):
        with pytest.raises(UsageError):
            min_envelope([])

    def test_order_of_terms_is_irrelevant(self):
        assert piecewise_equal(min_envelope(DEG9_TERMS), min_envelope(list(reversed(DEG9_TERMS))))

    @given(terms=st.lists(fraction_terms, min_size=1, max_size=4), beta=betas)
    def test_envelope_is_pointwise_minimum(self, terms, beta):
        envelope = min_envelope([ONE, *terms])
        assert envelope(beta) == min(term(beta) for term in [ONE, *terms])
        assert envelope.is_nonincreasing()

    def test_serialized_form_parses_back(self):
        f = min_envelope(DEG9_TERMS)
        assert f.serialize().startswith("0/1..1/6 : (1/1+0/1*b)/(1/1+0/1*b)")
        assert parse_piecewise(f.serialize()) == f


class TestComparison:
    def test_pointwise_min_of_functions(self):
        f = min_envelope([ONE, BetaFraction.over_beta(1, 0, 2)])
        g = min_envelope([ONE, BetaFraction.over_beta(1, 1, 4)])
        low = pointwise_min([f, g])
        for k in range(1, 13):
            beta = Fraction(k, 12)
            assert low(beta) == min(f(beta), g(beta))

    def test_pointwise_min_empty(self):
        with pytest.raises(UsageError):
            pointwise_min([])

    def test_first_difference_witness(self):
        f = min_envelope(DEG9_TERMS)
        g = min_envelope([ONE, BetaFraction.over_beta(1, 4, 9), BetaFraction.over_beta(1, 0, 3)])
        witness = first_difference(f, g)
        assert witness is not None
        assert f(witness) != g(witness)
        assert first_difference(f, f) is None

    def test_pointwise_le_and_violation(self):
        lower = min_envelope([ONE, BetaFraction.over_beta(1, 0, 9)])
        upper = min_envelope(DEG9_TERMS)
        assert pointwise_le(lower, upper)
        witness = first_violation(upper, lower)
        assert witness is not None
        assert upper(witness) > lower(witness)
