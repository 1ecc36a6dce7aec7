import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import partitions
from plethyx.partitions import SkewShape, iter_partitions, transpose
from plethyx.schur import (
    HPrefixedSeries,
    NonIntegralError,
    PowerSumPoly,
    SchurPoly,
    add,
    antipode,
    character,
    e,
    e_to_schur,
    from_power_sum,
    h,
    h_to_schur,
    hall_inner,
    jacobi_trudi_e,
    jacobi_trudi_h,
    multiply,
    omega,
    p,
    pieri_e,
    pieri_h,
    s,
    scale,
    skew_schur,
    to_power_sum,
)
from plethyx.tableaux import lr_coefficient

ONE = SchurPoly.constant(1)


def test_add_and_scale():
    assert add(s(2), s(2)) == scale(2, s(2))
    assert add(s(2), scale(-1, s(2))) == SchurPoly()
    assert not (s(2) - s(2))
    assert scale(3, s(1) + s(1, 1)).terms == {(1,): 3, (1, 1): 3}


def test_multiply_examples():
    assert s(1) * s(1) == s(2) + s(1, 1)
    assert s(2, 1) * s(2, 1) == (
        s(4, 2) + s(4, 1, 1) + s(3, 3) + 2 * s(3, 2, 1) + s(3, 1, 1, 1) + s(2, 2, 2) + s(2, 2, 1, 1)
    )
    assert ONE * s(3, 2) == s(3, 2)


def test_hall_inner_examples():
    assert hall_inner(s(2, 1), s(2, 1)) == 1
    assert hall_inner(s(2), s(1, 1)) == 0
    assert hall_inner(e(2), s(1, 1)) == 1


def test_skew_examples():
    assert skew_schur((2, 1), (1,)) == s(2) + s(1, 1)
    assert skew_schur((3, 1), ()) == s(3, 1)
    assert skew_schur((2, 2), (2, 2)) == ONE
    assert skew_schur((2,), (1, 1)) == SchurPoly()
    assert skew_schur(SkewShape.of((3, 2, 1), (2, 1))) == s(3) + 2 * s(2, 1) + s(1, 1, 1)


def test_omega_and_antipode():
    assert omega(s(3, 1)) == s(2, 1, 1)
    f = s(2) + 2 * s(1, 1)
    assert omega(omega(f)) == f
    assert omega(h(3)) == e(3)
    assert omega(h_to_schur((2, 1))) == e_to_schur((2, 1))
    assert antipode(s(1)) == -s(1)
    assert antipode(s(2, 1)) == -s(2, 1)
    assert antipode(s(1, 1)) == s(2)
    assert antipode(ONE + s(1)) == ONE - s(1)


def test_h_e_products():
    assert h_to_schur((2, 1)) == s(3) + s(2, 1)
    assert e_to_schur((1, 1)) == s(2) + s(1, 1)
    assert h_to_schur((0, 0)) == ONE
    assert h_to_schur((2, -1)) == SchurPoly()
    assert e_to_schur((Fraction(1, 2),)) == SchurPoly()
    assert h_to_schur((1, 2)) == h_to_schur((2, 1))


def test_pieri_examples():
    assert pieri_h(2, (2, 1)) == s(4, 1) + s(3, 2) + s(3, 1, 1) + s(2, 2, 1)
    assert pieri_e(1, ()) == s(1)
    assert pieri_h(0, (3, 3)) == s(3, 3)
    assert pieri_h(-1, (1,)) == SchurPoly()


def test_jacobi_trudi_examples():
    assert jacobi_trudi_h((2, 1)) == h_to_schur((2, 1)) - h(3) == s(2, 1)
    assert jacobi_trudi_e((2, 1)) == s(2, 1)
    assert jacobi_trudi_h((0, 0, 0)) == ONE
    # non-partition input straightens to +-s or 0
    assert jacobi_trudi_h((1, 2)) == SchurPoly()
    assert jacobi_trudi_h((0, 2)) == -s(1, 1)


@pytest.mark.parametrize("n", range(9))
def test_jacobi_trudi_all(n):
    for lam in iter_partitions(n):
        assert jacobi_trudi_h(lam) == s(*lam)
        assert jacobi_trudi_e(lam) == s(*transpose(lam))


def test_power_sum_examples():
    half = Fraction(1, 2)
    assert to_power_sum(s(2)) == PowerSumPoly({(1, 1): half, (2,): half})
    assert to_power_sum(s(1, 1)) == PowerSumPoly({(1, 1): half, (2,): -half})
    assert from_power_sum(p(1)) == s(1)
    with pytest.raises(NonIntegralError):
        from_power_sum(p(2).scale(half))


def test_character_column_orthogonality():
    # sum_lam chi^lam(rho)^2 = z_rho
    from plethyx.schur import z_factor

    for rho in iter_partitions(6):
        assert sum(character(lam, rho) ** 2 for lam in iter_partitions(6)) == z_factor(rho)


@pytest.mark.parametrize("n", range(9))
def test_power_sum_round_trip(n):
    for lam in iter_partitions(n):
        assert from_power_sum(to_power_sum(s(*lam))) == s(*lam)


def test_multiply_agrees_with_power_sums():
    for n in range(9):
        for a in range(n + 1):
            for mu in iter_partitions(a):
                for nu in iter_partitions(n - a):
                    direct = from_power_sum(to_power_sum(s(*mu)) * to_power_sum(s(*nu)))
                    assert multiply(s(*mu), s(*nu)) == direct
                    for lam in iter_partitions(n):
                        assert hall_inner(direct, s(*lam)) == lr_coefficient(lam, mu, nu)


@settings(max_examples=40, deadline=None)
@given(partitions(max_size=5), partitions(max_size=5))
def test_omega_ring_homomorphism(mu, nu):
    f, g = s(*mu), s(*nu)
    assert omega(f * g) == omega(f) * omega(g)


def test_json_round_trip():
    f = 2 * s(3, 1) - s() + s(1, 1, 1)
    data = f.to_json()
    assert data["terms"][0] == {"partition": [3, 1], "coeff": 2}
    assert data["terms"][-1] == {"partition": [], "coeff": -1}
    assert SchurPoly.from_json(json.dumps(data)) == f


def test_format():
    assert repr(s(4) + s(2, 2)) == "s[4] + s[2,2]"
    assert repr(SchurPoly()) == "0"
    assert repr(ONE - 2 * s(1)) == "-2*s[1] + s[]"


def test_h_prefixed_series():
    series = HPrefixedSeries(s(1))
    assert series.truncate(2) == s(1) + s(2) + s(1, 1)
    assert series.coefficient((2, 1)) == 1
    assert series.coefficient((1, 1, 1)) == 0
    assert series.coefficient(()) == 0
    assert HPrefixedSeries(ONE).truncate(3) == ONE + h(1) + h(2) + h(3)
    assert series.to_json()["h_prefixed"] is True
    assert HPrefixedSeries(s(1)) == HPrefixedSeries(s(1))
