import math

import numpy as np
import pytest

from toepstab.polynomial import TrigPolynomial, eval_trig
from toepstab.toeplitz import (
    SymmetricBandedToeplitz,
    build_moment,
    build_weighted,
    frobenius_gap,
    quadratic_form,
    to_dense,
)

from oracles import random_trig_coeffs

P = TrigPolynomial((2.0, 1.0, 0.8))

FROB_REL = 1e-12


class TestStorage:
    def test_entry_and_bandwidth(self):
        T = SymmetricBandedToeplitz(4, (2.0, 1.5))
        assert T.bandwidth == 1
        assert T.entry(0, 0) == 2.0
        assert T.entry(2, 1) == 1.5
        assert T.entry(0, 3) == 0.0

    def test_entry_bounds_checked(self):
        T = SymmetricBandedToeplitz(3, (1.0,))
        with pytest.raises(IndexError):
            T.entry(3, 0)

    def test_band_must_fit(self):
        with pytest.raises(ValueError):
            SymmetricBandedToeplitz(2, (1.0, 0.5, 0.2))

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            SymmetricBandedToeplitz(0, (1.0,))

    def test_dense_is_symmetric_toeplitz(self):
        T = SymmetricBandedToeplitz(5, (3.0, -1.0, 0.5))
        A = to_dense(T)
        assert np.array_equal(A, A.T)
        for i in range(5):
            for j in range(5):
                assert A[i, j] == T.entry(i, j)

    def test_inf_norm(self):
        T = SymmetricBandedToeplitz(5, (2.0, -1.0, 0.5))
        assert T.inf_norm() == 2.0 + 2.0 * 1.5


class TestBuildWeighted:
    def test_order_three_diagonals(self):
        # weights m/(m-k) at m=3: (1, 3/2, 3)
        T = build_weighted(P, 3)
        assert T.order == 3
        assert T.diagonals == pytest.approx((2.0, 1.5, 2.4), abs=1e-15)

    def test_order_four_diagonals(self):
        # weights at m=4: (1, 4/3, 2)
        T = build_weighted(P, 4)
        assert T.diagonals == pytest.approx((2.0, 4.0 / 3.0, 1.6), abs=1e-15)

    def test_dense_order_three(self):
        A = to_dense(build_weighted(P, 3))
        expected = np.array(
            [
                [2.0, 1.5, 2.4],
                [1.5, 2.0, 1.5],
                [2.4, 1.5, 2.0],
            ]
        )
        assert np.allclose(A, expected, atol=1e-15)

    def test_order_must_exceed_degree(self):
        with pytest.raises(ValueError):
            build_weighted(P, 2)

    def test_degree_zero(self):
        T = build_weighted(TrigPolynomial((4.0,)), 5)
        assert T.bandwidth == 0
        assert np.allclose(to_dense(T), 4.0 * np.eye(5))

    def test_weights_approach_one(self):
        small = build_weighted(P, 3)
        large = build_weighted(P, 1000)
        assert abs(large.diagonals[2] - P.coeffs[2]) < abs(
            small.diagonals[2] - P.coeffs[2]
        )


class TestBuildMoment:
    def test_diagonals_are_coefficients(self):
        T = build_moment(P, 6)
        assert T.diagonals == P.coeffs

    def test_truncates_to_fit(self):
        T = build_moment(P, 2)
        assert T.diagonals == (2.0, 1.0)

    def test_order_one(self):
        T = build_moment(P, 1)
        assert to_dense(T) == pytest.approx(np.array([[2.0]]))


class TestFrobeniusGap:
    def test_matches_dense_difference_exactly(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            p = TrigPolynomial(random_trig_coeffs(rng))
            m = int(rng.integers(p.degree + 1, p.degree + 40))
            dense = np.linalg.norm(
                to_dense(build_weighted(p, m)) - to_dense(build_moment(p, m))
            )
            gap = frobenius_gap(p, m)
            assert abs(gap - dense) <= FROB_REL * max(1.0, dense)

    def test_frozen_value(self):
        # diagonal k of P_3 - R_3 holds k p_k / (3 - k) on 2 (3 - k) slots,
        # so the squares sum to 2 (1^2 1^2 / 2 + 2^2 0.8^2 / 1) = 6.12
        assert frobenius_gap(P, 3) == pytest.approx(math.sqrt(6.12), abs=1e-15)

    def test_decays_like_inverse_sqrt(self):
        gaps = np.array([frobenius_gap(P, m) for m in range(3, 200)])
        assert np.all(np.diff(gaps) < 0)
        scaled = gaps * np.sqrt(np.arange(3, 200))
        # m / (m - k) factors flatten out, so the scaled sequence stays bounded
        assert scaled[-1] <= scaled[0]
        assert scaled[-1] == pytest.approx(
            math.sqrt(2.0 * (1.0 + 4.0 * 0.64)), rel=0.05
        )

    def test_requires_room_for_band(self):
        with pytest.raises(ValueError):
            frobenius_gap(P, 2)


class TestQuadraticForm:
    def test_weighted_reproduces_polynomial(self):
        rng = np.random.default_rng(37)
        for _ in range(50):
            p = TrigPolynomial(random_trig_coeffs(rng))
            m = int(rng.integers(p.degree + 1, p.degree + 30))
            T = build_weighted(p, m)
            scale = 1.0 + sum(abs(v) for v in p.coeffs)
            for theta in rng.uniform(0, math.pi, size=10):
                err = abs(quadratic_form(T, theta) - eval_trig(p, theta))
                assert err <= 1e-12 * m * scale

    def test_moment_at_zero_angle(self):
        # v = all-ones: (1/m) 1^T R_m 1 = p_0 + 2 sum_k p_k (m - k) / m
        m = 7
        T = build_moment(P, m)
        expected = 2.0 + 2.0 * (1.0 * 6 + 0.8 * 5) / m
        assert quadratic_form(T, 0.0) == pytest.approx(expected, abs=1e-13)

    def test_identity_matrix(self):
        T = SymmetricBandedToeplitz(6, (1.0,))
        for theta in (0.0, 0.3, 2.0):
            assert quadratic_form(T, theta) == pytest.approx(1.0, abs=1e-14)
