import pytest

from qcong.qproducts import (
    EtaExponentMap,
    eta,
    eta_power,
    eta_quotient,
    inverse_pochhammer_inf,
    jacobi_cube_series,
    partition_series,
    pentagonal_series,
    pochhammer_fin,
    pochhammer_inf,
    theta_phi_neg,
    theta_psi,
    triple_product,
)
from qcong.oracle import count_p
from qcong.series import Series, SeriesError, mul, power, reduce_mod, substitute


def test_pochhammer_inf_is_euler_product():
    assert pochhammer_inf(1, 1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert pochhammer_inf(2, 5, 6).coeffs == (1, 0, -1, 0, 0, 0)
    assert pochhammer_inf(5, 5, 60) == substitute(eta(1, 12), 5)
    with pytest.raises(SeriesError):
        pochhammer_inf(0, 1, 5)


def test_pochhammer_fin():
    assert pochhammer_fin(1, 2, 1, 4).coeffs == (1, -1, 0, 0)
    assert pochhammer_fin(3, 4, 0, 5) == Series.one(5)
    assert pochhammer_fin(1, 2, 2, 6).coeffs == (1, -1, 0, -1, 1, 0)


def test_pentagonal_theorem():
    assert pochhammer_inf(1, 1, 500) == pentagonal_series(500)
    assert eta(1, 500) == pentagonal_series(500)


def test_eta_j_matches_product():
    for j in (2, 3, 7):
        assert eta(j, 300) == pochhammer_inf(j, j, 300)


def test_eta_power_matches_repeated_product():
    for j, e in ((1, 5), (2, -3), (5, 4), (10, -1)):
        assert eta_power(j, e, 200) == power(eta(j, 200), e)


def test_eta_power_modular_matches_exact():
    assert eta_power(2, -9, 400, 625) == reduce_mod(eta_power(2, -9, 400), 625)


def test_partition_series_counts_partitions():
    s = partition_series(201)
    assert [s.coeff(n) for n in range(201)] == [count_p(n) for n in range(201)]


def test_eta_quotient_of_maps():
    a = EtaExponentMap.of({2: 3, 1: -2})
    assert eta_quotient(a, 5).coeffs == (1, 2, 2, 4, 5)
    assert eta_quotient({}, 4) == Series.one(4)
    assert (a * a)[2] == 6 and (a ** -1)[1] == 2
    assert EtaExponentMap.of({1: 2}) * EtaExponentMap.of({1: -2}) == EtaExponentMap()
    assert str(a) == "E1^-2*E2^3"


def test_eta_map_rejects_bad_index():
    with pytest.raises(SeriesError):
        EtaExponentMap.of({0: 1})


def test_jacobi_cube_identity():
    assert jacobi_cube_series(500) == eta_power(1, 3, 500)


def test_theta_functions():
    assert theta_phi_neg(5).coeffs == (1, -2, 0, 0, 2)
    assert theta_phi_neg(500) == eta_quotient({1: 2, 2: -1}, 500)
    assert theta_psi(500) == eta_quotient({2: 2, 1: -1}, 500)


def test_triple_product_matches_pochhammers():
    N = 300
    for a, m in ((1, 5), (2, 5), (15, 50)):
        prod = mul(mul(pochhammer_inf(a, m, N), pochhammer_inf(m - a, m, N)),
                   pochhammer_inf(m, m, N))
        assert triple_product(a, m, N) == prod
    with pytest.raises(SeriesError):
        triple_product(5, 5, 10)


def test_inverse_pochhammer():
    assert mul(inverse_pochhammer_inf(1, 5, 100), pochhammer_inf(1, 5, 100)) == Series.one(100)
