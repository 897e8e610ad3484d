import pytest
from hypothesis import given, strategies as st

from coendkit import fixtures as fx
from coendkit.classical import (ClassicalHopf, canonical_R, check_balanced, check_central, check_grouplike,
                                check_pivotal, check_R, check_ribbon, corollary_check, drinfeld_double,
                                drinfeld_map_rank, drinfeld_u_classical, is_factorizable)
from coendkit.errors import ConstructionFailure, NotInvertible
from coendkit.linalg import Matrix, PrimeField, Rationals, kron
from coendkit.search import SearchSpec, enumerate_elements

Q = Rationals()


def H_of(data):
    return ClassicalHopf.from_data(data)


@pytest.fixture(scope="module")
def sw():
    return fx.sweedler()


@pytest.fixture(scope="module")
def double_z2():
    return drinfeld_double(H_of(fx.cyclic(2)))


@pytest.mark.parametrize("data", [fx.trivial(), fx.cyclic(2), fx.cyclic(3, PrimeField(7)), fx.symmetric3(),
                                  fx.sweedler(), fx.sweedler(PrimeField(5))], ids=lambda d: "-".join(d.names))
def test_hopf_axioms(data):
    rep = H_of(data).validate()
    assert rep.ok, str(rep)


def test_bad_antipode_rejected():
    d = fx.cyclic(3)
    with pytest.raises(ConstructionFailure):
        ClassicalHopf(d.field, d.m, d.u, d.delta, d.eps, Matrix.identity(Q, 3))


@pytest.mark.parametrize("alpha", [0, 1, 2, -1])
def test_sweedler_R_family(sw, alpha):
    assert check_R(H_of(sw), fx.sweedler_R(sw, alpha)).ok


def test_sweedler_R21_fails_for_alpha_1(sw):
    H = H_of(sw)
    assert not check_R(H, H.R21(fx.sweedler_R(sw, 1))).ok


def test_R_1_tensor_g_fails_hexagon_and_counit():
    """1 (x) g is multiplicative in the second leg but violates the first-leg coproduct law and the counit law."""
    d = fx.cyclic(2)
    rep = check_R(H_of(d), d.tensor({("1", "g"): 1}))
    assert rep.get("classical.R.coproduct_second_leg").ok
    assert not rep.get("classical.R.coproduct_first_leg").ok
    assert not rep.get("classical.R.left_counit").ok


def test_R_minus_and_trivial():
    d = fx.cyclic(2)
    H = H_of(d)
    assert check_R(H, fx.R_minus(d)).ok and check_R(H, kron(d.u, d.u)).ok


@pytest.mark.parametrize("alpha", [0, 1])
def test_drinfeld_u_matches_ambient(sw, alpha):
    R = fx.sweedler_R(sw, alpha)
    qc = drinfeld_u_classical(H_of(sw), R)
    H = H_of(sw)
    assert H.mul(qc["u"], qc["u_inv"]) == H.one == H.mul(qc["u_inv"], qc["u"])
    assert qc["u"] == sw.ambient(R).drinfeld_u


def test_grouplike_and_central_checks(sw):
    H = H_of(sw)
    g = sw.element({"g": 1})
    x = sw.element({"x": 1})
    assert check_grouplike(H, g).ok and check_grouplike(H, H.one).ok
    assert not check_grouplike(H, x).ok
    assert not check_grouplike(H, Matrix.zeros(Q, 4, 1)).ok
    assert check_central(H, H.one).ok and not check_central(H, g).ok
    assert check_pivotal(H, g).ok and not check_pivotal(H, H.one).ok
    with pytest.raises(NotInvertible):
        check_pivotal(H, x)


def test_sweedler_special_elements_over_F3():
    d = fx.sweedler(PrimeField(3))
    H = H_of(d)
    R = fx.sweedler_R(d, 1)
    keys = lambda kind: sorted(h.key for h in enumerate_elements(SearchSpec(kind, H, R)))
    assert keys("classical_pivotal") == [(0, 1, 0, 0)]
    assert keys("classical_balanced") == [(1, 0, 0, 0)]
    assert keys("classical_ribbon") == [(1, 0, 0, 0)]
    assert keys("classical_grouplike") == [(0, 1, 0, 0), (1, 0, 0, 0)]
    assert len(enumerate_elements(SearchSpec("classical_r_matrix", H))) == 3


def test_balanced_not_ribbon_kZ3():
    """kZ/3 with R = 1 (x) 1 over F_7: every group element is balanced, only 1 is ribbon."""
    d = fx.cyclic(3, PrimeField(7))
    H = H_of(d)
    R = kron(d.u, d.u)
    gs = [d.element({n: 1}) for n in d.names]
    assert all(check_balanced(H, g, R).ok for g in gs)
    assert [check_ribbon(H, g, R).ok for g in gs] == [True, False, False]
    for g in gs:
        rep = corollary_check(H, R, t=g)
        assert rep.ok, str(rep)
        assert rep.get("criterion.p_squared_eq_q").ok == rep.get("criterion.t_minus2_eq_c").ok == (g == H.one)


def test_double_of_z2(double_z2):
    D, R = double_z2["D"], double_z2["R"]
    assert D.dim == 4
    assert D.validate().ok and check_R(D, R).ok
    assert drinfeld_map_rank(D, R) == 4 and is_factorizable(D, R)
    assert canonical_R(H_of(fx.cyclic(2))) == R


def test_group_algebra_not_factorizable():
    d = fx.cyclic(2)
    H = H_of(d)
    assert drinfeld_map_rank(H, kron(d.u, d.u)) == 1
    assert drinfeld_map_rank(H, fx.R_minus(d)) == 1
    assert not is_factorizable(H, fx.R_minus(d))


def test_double_of_sweedler():
    dd = drinfeld_double(H_of(fx.sweedler()))
    D, R = dd["D"], dd["R"]
    assert D.dim == 16 and check_R(D, R).ok
    assert drinfeld_map_rank(D, R) == 16


def test_double_of_S3():
    dd = drinfeld_double(H_of(fx.symmetric3()))
    D, R = dd["D"], dd["R"]
    assert D.dim == 36 and check_R(D, R).ok
    assert drinfeld_map_rank(D, R) == 36


def _vec(D, coeffs):
    return Matrix.column(D.field, coeffs)


@given(st.lists(st.integers(-2, 2), min_size=12, max_size=12))
def test_double_algebra_laws(double_z2, c):
    D = double_z2["D"]
    x, y, z = _vec(D, c[:4]), _vec(D, c[4:8]), _vec(D, c[8:])
    assert D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z))
    assert D.delta @ D.mul(x, y) == D.mul2(D.delta @ x, D.delta @ y)
    assert D.S @ D.mul(x, y) == D.mul(D.S @ y, D.S @ x)


@given(st.lists(st.integers(-2, 2), min_size=8, max_size=8))
def test_sweedler_antipode_antimultiplicative(sw, c):
    H = H_of(sw)
    x, y = _vec(H, c[:4]), _vec(H, c[4:])
    assert H.S @ H.mul(x, y) == H.mul(H.S @ y, H.S @ x)
    assert H.S_inv @ (H.S @ x) == x


def test_inverse_in_algebra(sw):
    H = H_of(sw)
    g = sw.element({"g": 1})
    assert H.inverse(g) == g
    assert not H.is_invertible(sw.element({"x": 1}))
