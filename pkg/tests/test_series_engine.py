"""Exact-recurrence tests.

The sextic coefficient tables are pinned against their closed-form
generator; the octic x0**7 sequence is pinned against an independent
oracle built from the multiple-angle expansion of its resummed response
(cos 7t + 14 cos 5t + 126 cos 3t - 141 cos t - 840 t sin t)/3072, whose
r-th Taylor entry is (-1)**r (49**r + 14*25**r + 126*9**r - 141 + 1680 r)/3072.
"""

import math
from fractions import Fraction

import pytest

from anharmonic import (
    InitialState,
    OscillatorSpec,
    coefficient_sequence,
    derivative_polynomials,
    integrate,
    sextic_generator,
    taylor_partial_sum,
)

SEXTIC = OscillatorSpec(3, 0.01)
OCTIC = OscillatorSpec(4, 0.01)


def octic_leading_oracle(r: int) -> Fraction:
    """Independent closed form for the r-th x0**7 contribution (m=4)."""
    return Fraction((-1) ** r * (49**r + 14 * 25**r + 126 * 9**r - 141 + 1680 * r), 3072)


class TestDerivativePolynomials:
    def test_first_two_orders_are_initial_data(self):
        polys = derivative_polynomials(SEXTIC, 2)
        assert [(t.a, t.b, t.lambda_order, t.coeff) for t in polys[0].terms] == [(1, 0, 0, 1)]
        assert [(t.a, t.b, t.lambda_order, t.coeff) for t in polys[1].terms] == [(0, 1, 0, 1)]

    def test_second_order_is_equation_of_motion(self):
        poly = derivative_polynomials(SEXTIC, 2)[2]
        assert poly.coefficient(1, 0, 0) == -1
        assert poly.coefficient(5, 0, 1) == -1
        assert len(poly.terms) == 2

    def test_third_order(self):
        # -v0 - 5 lam x0^4 v0
        poly = derivative_polynomials(SEXTIC, 3)[3]
        assert poly.coefficient(0, 1, 0) == -1
        assert poly.coefficient(4, 1, 1) == -5
        assert len(poly.terms) == 2

    def test_fourth_order(self):
        # x0 + 6 lam x0^5 - 20 lam x0^3 v0^2
        poly = derivative_polynomials(SEXTIC, 4)[4]
        assert poly.coefficient(1, 0, 0) == 1
        assert poly.coefficient(5, 0, 1) == 6
        assert poly.coefficient(3, 2, 1) == -20

    def test_fifth_order(self):
        # v0 + 70 lam x0^4 v0 - 60 lam x0^2 v0^3
        poly = derivative_polynomials(SEXTIC, 5)[5]
        assert poly.coefficient(0, 1, 0) == 1
        assert poly.coefficient(4, 1, 1) == 70
        assert poly.coefficient(2, 3, 1) == -60

    def test_lambda_free_part_follows_sho_four_cycle(self):
        polys = derivative_polynomials(SEXTIC, 12)
        signs = [1, 1, -1, -1]
        for k, poly in enumerate(polys):
            x_coeff = poly.coefficient(1, 0, 0)
            v_coeff = poly.coefficient(0, 1, 0)
            if k % 2 == 0:
                assert (x_coeff, v_coeff) == (signs[k % 4], 0)
            else:
                assert (x_coeff, v_coeff) == (0, signs[(k - 1) % 4])

    def test_all_monomials_have_odd_total_degree(self):
        for poly in derivative_polynomials(OCTIC, 10):
            for term in poly.terms:
                assert (term.a + term.b) % 2 == 1

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            derivative_polynomials(SEXTIC, -1)


class TestCoefficientSequences:
    def test_sextic_leading_table(self):
        assert coefficient_sequence(SEXTIC, 0, 4).terms == (-1, 6, -71, 1276)

    def test_sextic_i1_table(self):
        assert coefficient_sequence(SEXTIC, 1, 3).terms == (-5, 70, -1275)

    def test_sextic_i2_table(self):
        assert coefficient_sequence(SEXTIC, 2, 2).terms == (-20, 460)

    def test_sextic_i3_table_from_engine(self):
        # The printed reference row for this sequence carries a corrupted
        # fourth entry; the recurrence is authoritative.
        assert coefficient_sequence(SEXTIC, 3, 5).terms == (-60, 1860, -49320, 1257720, -31664580)

    def test_sextic_i4_equals_i5_values(self):
        # Same values at different Taylor orders (even vs odd derivatives).
        assert coefficient_sequence(SEXTIC, 4, 5).terms == coefficient_sequence(SEXTIC, 5, 5).terms

    def test_generator_matches_sequence(self):
        seq = coefficient_sequence(SEXTIC, 0, 8)
        for r in range(1, 9):
            assert seq.terms[r - 1] == sextic_generator(r)

    def test_generator_values(self):
        assert sextic_generator(0) == 0
        assert sextic_generator(1) == -1
        assert sextic_generator(3) == -71

    def test_octic_leading_sequence_against_independent_oracle(self):
        seq = coefficient_sequence(OCTIC, 0, 6)
        assert seq.terms == tuple(octic_leading_oracle(r) for r in range(1, 7))
        # frozen values from the oracle
        assert seq.terms == (-1, 8, -141, 3928, -138881, 5640048)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            coefficient_sequence(SEXTIC, 6, 1)
        with pytest.raises(ValueError):
            coefficient_sequence(SEXTIC, -1, 1)

    def test_count_must_be_positive(self):
        with pytest.raises(ValueError):
            coefficient_sequence(SEXTIC, 0, 0)


class TestTaylorPartialSum:
    def test_initial_value(self):
        assert taylor_partial_sum(SEXTIC, InitialState(1.0, 0.0), 0.0, 10) == 1.0

    def test_sho_limit_matches_cosine(self):
        spec = OscillatorSpec(3, 0.0)
        value = taylor_partial_sum(spec, InitialState(1.0, 0.0), 0.1, 20)
        assert abs(value - math.cos(0.1)) <= 1e-15

    def test_matches_oracle_within_lambda_square_budget(self):
        # The residual is the dropped lam^2 tail: it shrinks fourfold when
        # lam is halved.  Measured residual/lam^2 is about 5.1 here.
        state = InitialState(2.0, 0.0)
        diffs = {}
        for lam in (0.01, 0.005):
            spec = OscillatorSpec(3, lam)
            traj = integrate(spec, state, 0.5, rel_tol=1e-12, samples=3)
            value = taylor_partial_sum(spec, state, 0.5, 30)
            diffs[lam] = abs(value - traj.positions[-1])
            assert diffs[lam] <= 1e-6 + 10.0 * lam**2
        assert diffs[0.01] / diffs[0.005] == pytest.approx(4.0, rel=0.1)

    def test_rejects_nonpositive_order(self):
        with pytest.raises(ValueError):
            taylor_partial_sum(SEXTIC, InitialState(1.0, 0.0), 0.1, 0)
