import math

import numpy as np
import pytest

from toepstab.approx import (
    CONVERGENCE_HEADER,
    NotInSprSetError,
    convergence_csv,
    convergence_table,
    find_m0,
    member_Pc,
    member_Pcm,
    member_S,
)
from toepstab.polynomial import (
    MonicPolynomial,
    TrigPolynomial,
    schur_stable,
    symmetrized_product,
)
from toepstab.spectra import min_eigenvalue
from toepstab.toeplitz import build_weighted, frobenius_gap

C2 = MonicPolynomial.power(2)
D_REF = MonicPolynomial((0.8, 1.0))
PROD_REF = symmetrized_product(C2, D_REF)


class TestMemberS:
    def test_verdicts(self):
        assert member_S(MonicPolynomial((0.0, 0.0))).member
        assert not member_S(MonicPolynomial((1.0, 2.0))).member

    def test_certificate_is_nan(self):
        assert math.isnan(member_S(MonicPolynomial((0.0, 0.0))).certificate)
        assert member_S(MonicPolynomial((0.0, 0.0))).matrix_order is None


class TestMemberPc:
    def test_origin_is_member(self):
        # d = c means p = 2 |c|^2 with c root-free on the circle
        v = member_Pc(C2, C2)
        assert v.member
        assert v.certificate == pytest.approx(2.0, abs=1e-9)

    def test_reference_pair(self):
        v = member_Pc(C2, D_REF)
        assert v.member
        assert v.certificate == pytest.approx(0.0875, abs=1e-9)

    def test_interior_point_with_small_margin(self):
        # p = 2 + 1.8 cos(2 theta) bottoms out at 0.2
        v = member_Pc(C2, MonicPolynomial((0.9, 0.0)))
        assert v.member
        assert v.certificate == pytest.approx(0.2, abs=1e-9)

    def test_boundary_pair_is_outside(self):
        # d = (z+1)^2: in x = cos(theta) the product is 4x(x+1), zero at
        # theta = pi and -1 at the valley x = -1/2
        v = member_Pc(C2, MonicPolynomial((1.0, 2.0)))
        assert not v.member
        assert v.certificate == pytest.approx(-1.0, abs=1e-9)

    def test_stable_d_can_still_be_outside(self):
        # (0.9, 1): roots at modulus sqrt(0.9), yet the product dips to
        # 0.2 + 2x + 3.6 x^2 at x = cos(theta), valley value -7/90
        d = MonicPolynomial((0.9, 1.0))
        assert schur_stable(d)
        v = member_Pc(C2, d)
        assert not v.member
        assert v.certificate == pytest.approx(-7.0 / 90.0, abs=1e-9)

    def test_requires_stable_c(self):
        with pytest.raises(ValueError):
            member_Pc(MonicPolynomial((2.0, 0.0)), D_REF)


class TestMemberPcm:
    def test_origin_small_order(self):
        v = member_Pcm(C2, MonicPolynomial((0.0, 0.0)), 3)
        assert v.member
        assert v.matrix_order == 3

    def test_certificate_matches_eigenvalue(self):
        v = member_Pcm(C2, D_REF, 30)
        iv = min_eigenvalue(build_weighted(PROD_REF, 30))
        assert v.certificate == pytest.approx(iv.midpoint, abs=1e-12)
        assert v.member

    def test_membership_grows_in_this_family(self):
        assert not member_Pcm(C2, D_REF, 4).member
        assert not member_Pcm(C2, D_REF, 29).member
        assert member_Pcm(C2, D_REF, 30).member

    def test_non_member_inside_positivity_region(self):
        # (0.9, 0) lies in the positivity region, but the order-3 weighted
        # matrix has diagonals (2, 0, 2.7) and an eigenvalue 2 - 2.7
        v = member_Pcm(C2, MonicPolynomial((0.9, 0.0)), 3)
        assert not v.member
        assert v.certificate == pytest.approx(-0.7, abs=1e-9)

    def test_order_must_exceed_degree(self):
        with pytest.raises(ValueError):
            member_Pcm(C2, D_REF, 2)


class TestChain:
    """The three sets are nested: matrix certificate => positive product
    => Schur stable."""

    def test_matrix_members_are_stable(self):
        rng = np.random.default_rng(73)
        checked = 0
        for _ in range(300):
            n = int(rng.integers(1, 5))
            c = MonicPolynomial.power(n)
            d = MonicPolynomial(tuple(rng.uniform(-2, 2, size=n)))
            m = int(rng.integers(n + 1, n + 25))
            if member_Pcm(c, d, m).member:
                checked += 1
                assert schur_stable(d)
        assert checked > 20

    def test_matrix_members_have_positive_product(self):
        rng = np.random.default_rng(79)
        for _ in range(200):
            n = int(rng.integers(1, 5))
            c = MonicPolynomial.power(n)
            d = MonicPolynomial(tuple(rng.uniform(-2, 2, size=n)))
            m = int(rng.integers(n + 1, n + 25))
            v = member_Pcm(c, d, m)
            # the eigenvalue is itself a lower bound for the product, so
            # only clear margins are asserted to keep roundoff out of play
            if v.member and v.certificate > 1e-6:
                assert member_Pc(c, d, 1e-8).member

    def test_positive_product_implies_stable(self):
        rng = np.random.default_rng(83)
        checked = 0
        for _ in range(300):
            n = int(rng.integers(1, 5))
            c = MonicPolynomial.power(n)
            d = MonicPolynomial(tuple(rng.uniform(-2, 2, size=n)))
            if member_Pc(c, d).member:
                checked += 1
                assert schur_stable(d)
        assert checked > 20


class TestFindM0:
    def test_reference_pair(self):
        assert find_m0(C2, D_REF, 100) == 30

    def test_result_is_tight(self):
        m0 = find_m0(C2, D_REF, 100)
        assert member_Pcm(C2, D_REF, m0).member
        assert not member_Pcm(C2, D_REF, m0 - 1).member

    def test_immediate_member(self):
        assert find_m0(C2, C2, 20) == 3

    def test_not_found_within_budget(self):
        assert find_m0(C2, D_REF, 10) is None

    def test_outside_spr_set_raises(self):
        with pytest.raises(NotInSprSetError):
            find_m0(C2, MonicPolynomial((1.0, 2.0)), 50)

    def test_touching_zero_raises(self):
        # p = (2, 1, 0) has minimum exactly 0, so every order keeps an
        # eigenvalue at or below zero and no certificate can ever appear
        with pytest.raises(NotInSprSetError):
            find_m0(C2, MonicPolynomial((0.0, 1.0)), 50)

    def test_stable_but_outside_spr_set_raises(self):
        with pytest.raises(NotInSprSetError):
            find_m0(C2, MonicPolynomial((0.9, 1.0)), 50)

    def test_budget_must_exceed_degree(self):
        with pytest.raises(ValueError):
            find_m0(C2, D_REF, 2)


class TestConvergenceTable:
    def test_reference_rows(self):
        p = TrigPolynomial((2.0, 1.0, 0.8))
        rows = convergence_table(p, [3, 4, 30])
        assert [r.m for r in rows] == [3, 4, 30]
        assert rows[0].lambda_min_Pm == pytest.approx(-0.4, abs=1e-9)
        assert rows[1].lambda_min_Pm == pytest.approx(
            8.0 / 3.0 - 2.0 * math.sqrt(509.0) / 15.0, abs=1e-9
        )
        assert rows[2].lambda_min_Pm > 0.0
        for r in rows:
            assert r.trig_min == pytest.approx(0.0875, abs=1e-9)
            assert r.frobenius_gap == pytest.approx(frobenius_gap(p, r.m), abs=1e-15)

    def test_constant_polynomial(self):
        rows = convergence_table(TrigPolynomial((1.0,)), [1, 2, 3])
        for r in rows:
            assert r.lambda_min_Pm == pytest.approx(1.0, abs=1e-12)
            assert r.lambda_min_Rm == pytest.approx(1.0, abs=1e-12)
            assert r.frobenius_gap == 0.0
            assert r.trig_min == 1.0

    def test_rows_satisfy_eigenvalue_cage(self):
        rng = np.random.default_rng(89)
        for _ in range(15):
            n = int(rng.integers(1, 6))
            p = TrigPolynomial(tuple(rng.uniform(-3, 3, size=n + 1)))
            rows = convergence_table(p, range(n + 1, n + 20))
            for r in rows:
                assert r.lambda_min_Pm <= r.trig_min + 1e-8
                assert r.lambda_min_Rm >= r.trig_min - 1e-8
                assert abs(r.lambda_min_Pm - r.lambda_min_Rm) <= r.frobenius_gap + 1e-8

    def test_rejects_small_orders(self):
        with pytest.raises(ValueError):
            convergence_table(TrigPolynomial((2.0, 1.0, 0.8)), [2, 3])


class TestConvergenceCsv:
    def test_header_and_shape(self):
        p = TrigPolynomial((2.0, 1.0, 0.8))
        text = convergence_csv(convergence_table(p, [3, 4]))
        lines = text.strip().split("\n")
        assert lines[0] == CONVERGENCE_HEADER
        assert lines[0] == "m,lambda_min_Pm,lambda_min_Rm,frobenius_gap,trig_min"
        assert len(lines) == 3
        assert text.endswith("\n")

    def test_round_trips_at_full_precision(self):
        p = TrigPolynomial((2.0, 1.0, 0.8))
        rows = convergence_table(p, [3, 4, 5])
        lines = convergence_csv(rows).strip().split("\n")[1:]
        for r, line in zip(rows, lines):
            parts = line.split(",")
            assert int(parts[0]) == r.m
            assert float(parts[1]) == r.lambda_min_Pm
            assert float(parts[2]) == r.lambda_min_Rm
            assert float(parts[3]) == r.frobenius_gap
            assert float(parts[4]) == r.trig_min
