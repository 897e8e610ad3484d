import pytest
from hypothesis import given, strategies as st

from coendkit import fixtures as fx
from coendkit.ambient import (AmbientHopf, VMorphism, braiding_inv_matrix, braiding_matrix, check_braiding,
                              check_snakes, double_dual, drinfeld_mu, is_morphism, kappa_gamma, left_dual,
                              right_dual, tensor_obj, validate_ambient)
from coendkit.errors import ValidationFailure
from coendkit.linalg import Matrix, PrimeField, Rationals, kron, swap

Q = Rationals()


def ambients():
    sw = fx.sweedler()
    return {
        "vec": fx.vec_ambient(),
        "svec": fx.svec_ambient(),
        "anyon": fx.anyon_ambient(),
        "sweedler_R1": sw.ambient(fx.sweedler_R(sw, 1)),
        "sweedler_R0": sw.ambient(fx.sweedler_R(sw, 0)),
    }


@pytest.mark.parametrize("name", list(ambients()))
def test_ambient_validates(name):
    rep = validate_ambient(ambients()[name])
    assert rep.ok, str(rep)


def test_sweedler_R21_not_quasitriangular():
    sw = fx.sweedler()
    R = fx.sweedler_R(sw, 1)
    A = sw.ambient(R)
    with pytest.raises(ValidationFailure):
        sw.ambient(A.R21)


def test_bad_R_rejected_with_report():
    d = fx.cyclic(2)
    bad = d.tensor({("1", "g"): 1})
    with pytest.raises(ValidationFailure) as ei:
        d.ambient(bad)
    assert ei.value.report is not None and not ei.value.report.ok


def test_super_sign():
    A = fx.svec_ambient()
    odd, even = fx.super_line(A, True), fx.super_line(A, False)
    assert braiding_matrix(odd, odd).to_strings() == [["-1"]]
    assert braiding_matrix(odd, even).to_strings() == [["1"]]
    assert braiding_matrix(even, even).to_strings() == [["1"]]


def _character(A, lam):
    F = A.field
    return A.module([Matrix.scalar(F, 1), Matrix.scalar(F, lam), Matrix.scalar(F, lam * lam % F.characteristic)])


@pytest.mark.parametrize("lx,ly", [(2, 2), (2, 4), (4, 2), (1, 2), (4, 4)])
def test_anyon_braiding_scalar(lx, ly):
    """sigma(x (x) y) = y R_i (x) x R^i with R = 1/3 sum zeta^{jk} g^j (x) g^k, zeta = 2 over F_7."""
    A = fx.anyon_ambient()
    X, Y = _character(A, lx), _character(A, ly)
    expect = sum(pow(2, j * k, 7) * pow(ly, j, 7) * pow(lx, k, 7) for j in range(3) for k in range(3))
    expect = expect * pow(3, -1, 7) % 7
    assert braiding_matrix(X, Y).to_strings() == [[str(expect)]]


def test_anyon_not_symmetric():
    A = fx.anyon_ambient()
    X = _character(A, 2)
    s = braiding_matrix(X, X)
    assert s @ s != X.I


def super_spaces(A):
    return st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(lambda t: sum(t) > 0).map(
        lambda t: fx.super_space(A, *t))


@given(st.data())
def test_svec_hexagons_random(data):
    A = fx.svec_ambient()
    X, Y, Z = (data.draw(super_spaces(A)) for _ in range(3))
    rep = check_braiding(X, Y, Z)
    assert rep.ok, str(rep)


@pytest.mark.parametrize("name", ["anyon", "sweedler_R1"])
def test_hexagons_regular(name):
    A = ambients()[name]
    X = A.regular
    rep = check_braiding(X, X, A.unit_object)
    rep.extend(check_braiding(X, A.unit_object, X))
    assert rep.ok, str(rep)


@pytest.mark.parametrize("name", list(ambients()))
def test_snakes(name):
    A = ambients()[name]
    X = A.regular
    for side, fn in (("right", right_dual), ("left", left_dual)):
        D, ev, coev = fn(X)
        rep = check_snakes(X, D, ev.mat, coev.mat, side)
        assert rep.ok, str(rep)


def test_nonlinear_map_detected():
    A = fx.svec_ambient()
    X = fx.super_space(A, 1, 1)
    f = Matrix.from_rows(Q, [[0, 1], [1, 0]])       # swaps parity
    assert is_morphism(f, X, X) is not None
    assert is_morphism(X.I, X, X) is None
    assert not VMorphism(X, X, f, check=False).is_linear()


@pytest.mark.parametrize("alpha", [0, 1])
def test_mu_is_right_multiplication_by_drinfeld_u(alpha):
    sw = fx.sweedler()
    A = sw.ambient(fx.sweedler_R(sw, alpha))
    X = A.regular
    d = drinfeld_mu(X)
    u = A.drinfeld_u
    assert d["mu"] == A.right_mul(u)
    u_inv = A.m @ kron(A.S2, A.I) @ A.R
    assert d["mu_bar"] == A.right_mul(u_inv)
    assert d["mu_shriek"] == A.right_mul(A.S @ u)
    kg = kappa_gamma(X)
    assert kg["gamma"] == A.right_mul(A.mul(u, A.S @ u))


def test_double_dual_acts_by_S_squared():
    sw = fx.sweedler()
    A = sw.ambient(fx.sweedler_R(sw, 1))
    X = A.regular
    Xvv = double_dual(X)
    for k in range(A.dim):
        a = A.basis(k)
        assert Xvv.rho(a) == X.rho(A.S2 @ a)


def test_braiding_inverse_and_naturality():
    A = fx.anyon_ambient()
    X = A.regular
    Y = _character(A, 2)
    s, si = braiding_matrix(X, Y), braiding_inv_matrix(X, Y)
    assert si @ s == Matrix.identity(A.field, X.dim * Y.dim)
    g = A.left_mul(A.basis(1))        # left multiplication commutes with the right action
    assert is_morphism(g, X, X) is None
    assert braiding_matrix(X, Y) @ kron(g, Y.I) == kron(Y.I, g) @ braiding_matrix(X, Y)


def test_trivial_ambient_is_vec():
    A = AmbientHopf.trivial(PrimeField(5))
    assert A.dim == 1
    X = A.module([Matrix.identity(A.field, 3)])
    assert braiding_matrix(X, X) == swap(A.field, 3, 3)
    assert tensor_obj(X, X).dim == 9
