import pytest

from plethyx import formulas as F
from plethyx.formulas import ScopeError
from plethyx.partitions import Partition, iter_partitions, partitions_up_to
from plethyx.plethysm import H_series, frobenius_oracle, plethysm, plethysm_adjoint, restriction_oracle
from plethyx.schur import SchurPoly, e, e_to_schur, h, h_to_schur, hall_inner, s

ONE = SchurPoly.constant(1)


def brute_coeff(lam, mu, r):
    return hall_inner(s(*lam), plethysm(s(*mu), h(r)))


class TestPlethysmCoefficients:
    def test_examples(self):
        assert F.plethysm_coeff_hr_closed((2, 2), (2,), 2) == 1 == brute_coeff((2, 2), (2,), 2)
        assert F.plethysm_coeff_hr_closed((3, 3), (1, 1), 3) == 1 == brute_coeff((3, 3), (1, 1), 3)
        assert F.plethysm_coeff_hr_closed((), (), 5) == 1

    def test_r_zero_matches_one_row_rule(self):
        for mu in partitions_up_to(4):
            assert F.plethysm_coeff_hr_closed((), mu, 0) == int(len(mu) <= 1)
            assert F.plethysm_coeff_hr_closed((), mu, 0) == brute_coeff((), mu, 0)
        assert F.plethysm_coeff_hr_closed((1,), (1,), 0) == 0

    def test_scope(self):
        with pytest.raises(ScopeError):
            F.plethysm_coeff_hr_closed((4,), (2,), 2)
        with pytest.raises(ScopeError):
            F.plethysm_coeff_small_r((4,), (1,), 4)

    def test_small_r_examples(self):
        assert F.plethysm_coeff_small_r((3, 2, 1), (2, 1), 2) == 1 == brute_coeff((3, 2, 1), (2, 1), 2)
        assert F.plethysm_coeff_small_r((2, 2, 1), (2, 2, 1), 1) == 1
        # (mu^T_1, mu^T_1, mu^T_1)^T for mu = (1,1) is (3,3), not (2,2,2)
        assert F.plethysm_coeff_small_r((3, 3), (1, 1), 3) == 1 == brute_coeff((3, 3), (1, 1), 3)
        assert F.plethysm_coeff_small_r((2, 2, 2), (1, 1), 3) == 0 == brute_coeff((2, 2, 2), (1, 1), 3)
        assert F.plethysm_coeff_small_r((), (), 7) == 1
        assert F.plethysm_coeff_small_r((1,), (1,), 7) == 0

    def test_small_r_matches_general(self):
        for r in range(0, 6):
            for d in range(0, 9):
                for lam in iter_partitions(d, max_part=min(3, r + 1)):
                    for mu in partitions_up_to(4):
                        assert F.plethysm_coeff_small_r(lam, mu, r) == F.plethysm_coeff_hr_closed(lam, mu, r)


class TestAdjoints:
    def test_s_perp_examples(self):
        assert F.s_lambda_hr_perp_closed((3, 1), 2, 4).value == s(1, 1)
        assert plethysm_adjoint(s(3, 1), h(2)) == s(1, 1)
        assert F.s_lambda_hr_perp_closed((2, 2), 2, 4).value == s(2)
        assert F.s_lambda_hr_perp_closed((), 4, 4).value == ONE
        assert F.s_lambda_hr_perp_closed((), 0, 3) == H_series(3)
        assert F.s_lambda_hr_perp_closed((1,), 0, 3).value == SchurPoly()
        assert F.s_lambda_hr_perp_closed((2, 2, 1), 1, 5).value == s(2, 2, 1)

    def test_s_perp_cases(self):
        assert F.s_lambda_h_perp_cases((3, 3), 3, 6).value == e(2)
        assert F.s_lambda_h_perp_cases((3, 2), 3, 6).value == SchurPoly()
        assert F.s_lambda_h_perp_cases((2, 1), 2, 6).value == SchurPoly()
        assert F.s_lambda_h_perp_cases((), 5, 6).value == ONE
        with pytest.raises(ScopeError):
            F.s_lambda_h_perp_cases((4,), 2, 4)
        with pytest.raises(ScopeError):
            F.s_lambda_hr_perp_closed((3,), 1, 4)

    def test_h_perp_examples(self):
        assert F.h_lambda_hr_perp_closed((2, 2), 2) == h(2) + h_to_schur((1, 1))
        assert F.h_lambda_hr_perp_closed((2, 2), 2) == plethysm_adjoint(h_to_schur((2, 2)), h(2))
        assert F.h_lambda_hr_perp_closed((0, 0, 0), 2) == ONE
        assert F.h_lambda_hr_perp_closed((1,), 1) == h(1)
        assert F.h_lambda_h0_perp((0, 0), 2) == H_series(2)
        assert F.h_lambda_h0_perp((1, 0), 2).value == SchurPoly()
        with pytest.raises(ValueError):
            F.h_lambda_hr_perp_closed((1,), 0)

    def test_e_perp_examples(self):
        assert F.e_lambda_hr_perp_closed((2, 1, 1), 2) == h_to_schur((1, 1)) == s(2) + s(1, 1)
        assert F.e_lambda_hr_perp_closed((1, 1), 1) == e_to_schur((1, 1))
        assert F.e_lambda_hr_perp_closed((0, 0), 3) == ONE
        assert F.e_lambda_hr_perp_closed((2, 1, 1), 2) == plethysm_adjoint(e_to_schur((2, 1, 1)), h(2))

    def test_special_vector(self):
        assert F.e_vector_hr_perp_special((2, 1, 1), 2) == s(2) + s(1, 1)
        assert F.e_vector_hr_perp_special((1, 1, 1, 0), 3) == s(1)
        assert F.e_vector_hr_perp_special((1, 1, 1, 0), 3) == plethysm_adjoint(e_to_schur((1, 1, 1)), h(3))
        assert F.e_vector_hr_perp_special((2, 0, 0), 2) == SchurPoly()
        assert F.e_vector_hr_perp_special((1, 0, 0), 2) == SchurPoly()  # |lam|/r = 1/2
        assert F.e_vector_hr_perp_special((2, -1, 1), 2) == SchurPoly()
        with pytest.raises(ValueError):
            F.e_vector_hr_perp_special((1, 1), 2)

    def test_compositions(self):
        assert F.weak_compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert F.binary_vectors(3, 2) == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
        assert F.weak_compositions(0, 0) == [()]


class TestFrobenius:
    def test_h_examples(self):
        assert F.frobenius_h_closed((2,)).factor == h(1) + h(2)
        assert F.frobenius_h_closed((3,)).factor == h(1) + h_to_schur((1, 1)) + h(3)
        assert F.frobenius_h_closed(()).factor == ONE
        for lam in [(2,), (3,), (1, 1)]:
            assert F.frobenius_h_closed(lam).truncate(5) == frobenius_oracle(h_to_schur(lam), 5).value

    def test_e_examples(self):
        assert F.frobenius_e_closed((2,)).factor == e(2)
        assert F.frobenius_e_closed((1, 1)).factor == h(1) + e_to_schur((1, 1))
        assert F.frobenius_e_closed((0, 0)).factor == ONE
        assert F.frobenius_e_closed((2,)).truncate(4) == frobenius_oracle(s(1, 1), 4).value

    def test_max_degree_prunes_factor(self):
        assert F.frobenius_h_closed((3,), 2).factor == h(1) + h_to_schur((1, 1))

    def test_three_columns_examples(self):
        assert F.frobenius_three_columns((1, 1)).factor == s(1, 1)
        assert F.frobenius_three_columns((1,)).factor == s(1)
        f3 = F.frobenius_three_columns((3,)).factor
        assert f3 == s(3) + s(2) + s(1, 1) + s(1)
        assert f3 == F.frobenius_h_closed((3,)).factor
        with pytest.raises(ScopeError):
            F.frobenius_three_columns((4,))

    def test_main_terms_for_row_of_three(self):
        terms = [(r, nu) for r, nu, _ in F.main_terms((3,))]
        assert sorted(terms) == [(0, ()), (0, (1, 1)), (1, (1, 1, 1))]


class TestRestriction:
    @pytest.mark.parametrize(
        "lam, mu, value",
        [((1, 1), (2, 1), 1), ((1, 1, 1), (2, 1, 1), 1), ((1, 1), (3,), 0), ((1, 1), (2,), 0), ((), (3,), 1)],
    )
    def test_examples(self, lam, mu, value):
        assert F.restriction_via_main(lam, mu) == value
        assert F.count_restriction_tuples(lam, mu) == value
        assert restriction_oracle(lam, mu) == value

    def test_witness_structure(self):
        (t,) = F.enumerate_restriction_tuples((1, 1), (2, 1))
        assert (t.r, t.nu, t.lambda1, t.lambda2, t.lambda3) == (0, (), (1, 1), (1, 1), (1, 1))
        assert t.t1.rows == ((1,), (2,))
        assert t.t2.rows == ((), ())
        assert t.is_valid((1, 1), (2, 1))

    def test_all_witnesses_valid(self):
        for lam in [(3, 2, 1), (2, 2), (3, 3), (1, 1, 1, 1)]:
            for mu in partitions_up_to(5):
                for t in F.enumerate_restriction_tuples(lam, mu):
                    assert t.is_valid(lam, mu)
                    assert isinstance(t.content2(), Partition)

    def test_scope(self):
        with pytest.raises(ScopeError):
            F.restriction_via_main((4,), (4,))
        with pytest.raises(ScopeError):
            F.count_restriction_tuples((4,), (4,))
