import pytest
from hypothesis import given, strategies as st

from coendkit import elements as el
from coendkit.internal_hopf import apply_element, coend_hopf, exterior_line, unit_hopf
from coendkit.linalg import Matrix, kron


@pytest.fixture(scope="module")
def hopfs(svec_coend, anyon_coend):
    return {"ext": exterior_line(svec_coend), "svC": coend_hopf(svec_coend), "anyC": coend_hopf(anyon_coend),
            "sv1": unit_hopf(svec_coend)}


def elements_of(H):
    basis = el.element_space(H)
    return st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)).map(
        lambda c: el.combine(basis, c))


NAMES = ["ext", "svC", "anyC"]


@pytest.mark.parametrize("name", NAMES)
@given(data=st.data())
def test_convolution_monoid(hopfs, name, data):
    H = hopfs[name]
    a, b, c = (data.draw(elements_of(H)) for _ in range(3))
    ab_c = el.conv_product(el.conv_product(a, b), c)
    a_bc = el.conv_product(a, el.conv_product(b, c))
    assert ab_c.mat == a_bc.mat
    one = el.conv_unit(H)
    assert el.conv_product(one, a).mat == a.mat == el.conv_product(a, one).mat
    assert el.conv_product(a, b).mat == el.conv_product_alt(a, b).mat


@pytest.mark.parametrize("name", NAMES)
@given(data=st.data())
def test_action_is_antimultiplicative(hopfs, name, data):
    """(a * b)^# = b^# a^#."""
    H = hopfs[name]
    a, b = data.draw(elements_of(H)), data.draw(elements_of(H))
    M = H.F
    assert apply_element(el.conv_product(a, b).mat, M) == apply_element(b.mat, M) @ apply_element(a.mat, M)


@pytest.mark.parametrize("name", NAMES)
@given(data=st.data())
def test_antipode_laws(hopfs, name, data):
    H = hopfs[name]
    a, b = data.draw(elements_of(H)), data.draw(elements_of(H))
    Sa = el.antipode_S(a)
    assert Sa.mat == el.antipode_closed_form(a).mat
    assert el.antipode_S_inv(Sa).mat == a.mat
    assert el.antipode_S(el.conv_product(a, b)).mat == el.conv_product(el.antipode_S(b), Sa).mat


@pytest.mark.parametrize("name", NAMES)
@given(data=st.data())
def test_predicate_forms_agree(hopfs, name, data):
    H = hopfs[name]
    a = data.draw(elements_of(H))
    assert el.is_central(a)[0] == el.is_central_coend_form(a)[0]
    assert el.is_grouplike(a)[0] == el.semantic_grouplike(a)[0]
    assert el.is_twisted_grouplike(a)[0] == el.semantic_twisted_grouplike(a)[0]


@pytest.mark.parametrize("name", NAMES)
@given(data=st.data())
def test_conv_inverse(hopfs, name, data):
    H = hopfs[name]
    a = data.draw(elements_of(H))
    if el.is_conv_invertible(a):
        ai = el.conv_inverse(a)
        assert el.conv_product(a, ai).mat == el.conv_unit(H).mat == el.conv_product(ai, a).mat


@pytest.mark.parametrize("name", NAMES)
def test_powers(hopfs, name):
    H = hopfs[name]
    a = el.combine(el.element_space(H), [1] * len(el.element_space(H)))
    assert el.conv_power(a, 0).mat == el.conv_unit(H).mat
    assert el.conv_power(a, 3).mat == el.conv_product(el.conv_product(a, a), a).mat


@pytest.mark.parametrize("name", NAMES + ["sv1"])
def test_unit_satisfies_every_predicate(hopfs, name):
    H = hopfs[name]
    one = el.conv_unit(H)
    for pred in (el.is_central, el.is_grouplike, el.is_twisted_grouplike, el.is_pivotal):
        assert pred(one)[0], pred.__name__


@pytest.mark.parametrize("name", NAMES)
def test_zero_element_is_rejected(hopfs, name):
    """The zero morphism satisfies the coproduct laws; the counit law excludes it."""
    H = hopfs[name]
    zero = el.CoendElement(H, Matrix.zeros(H.field, H.dim, H.coend.dim))
    assert el.is_grouplike(zero, with_counit=False)[0]
    assert not el.is_grouplike(zero)[0]
    assert not el.is_twisted_grouplike(zero)[0]
    assert not el.is_pivotal(zero)[0]


def test_nonlinear_element_detected(hopfs):
    """Matrix units are A-linear exactly when they lie in the element space (parity-preserving here)."""
    H = hopfs["ext"]
    r, c = H.dim, H.coend.dim
    linear = 0
    for i in range(r):
        for j in range(c):
            E = Matrix.from_rows(H.field, [[1 if (a, b) == (i, j) else 0 for b in range(c)] for a in range(r)])
            linear += el.CoendElement(H, E).linearity_witness() is None
    assert linear == len(el.element_space(H)) < r * c


def test_R_round_trips(hopfs, exterior_Rs):
    H = hopfs["ext"]
    for Rm in exterior_Rs:
        R = el.CoendRMatrix(H, Rm)
        assert el.validate_R(R).ok
        assert el.R_from_braiding(H, el.braiding_from_R(R, H.F, H.F)).mat == Rm
        assert el.validate_R(el.reverse_R(R)).ok


def test_canonical_R_for_coend(hopfs, svec_coend):
    cd = svec_coend
    H = hopfs["svC"]
    R = el.CoendRMatrix(H, kron(cd.u, kron(cd.eps, cd.I)))
    rep = el.validate_R(R)
    rep.extend(el.check_braiding_on(R, [H.trivial, H.regular, H.F]))
    assert rep.ok, str(rep)


def test_zero_R_fails_unit_laws(hopfs):
    H = hopfs["ext"]
    n, c = H.dim, H.coend.dim
    rep = el.validate_R(el.CoendRMatrix(H, Matrix.zeros(H.field, n * n, c * c)))
    assert not rep.ok


def test_drinfeld_element_and_ribbon_sets(hopfs, exterior_Rs):
    H = hopfs["ext"]
    for Rm in exterior_Rs:
        R = el.CoendRMatrix(H, Rm)
        qc = el.q_c_elements(R)
        u, ui = qc["u"], qc["u_inv"]
        assert el.conv_product(u, ui).mat == el.conv_unit(H).mat
        one = el.conv_unit(H)
        res = el.bal_piv_bijection_check(one, R, qc)
        crit = res["ribbon_criteria"]
        assert res["ribbon"] == crit["p_squared_eq_q"] == crit["t_minus2_eq_c"]


def test_element_report_flags(hopfs, exterior_Rs):
    H = hopfs["ext"]
    R = el.CoendRMatrix(H, exterior_Rs[-1])
    rep = el.element_report(el.conv_unit(H), R)
    assert rep.consistent()
    assert set(rep.flags) >= {"central", "grouplike", "twisted_grouplike", "pivotal", "balanced", "ribbon"}
    assert all(rep.flags.values())


def test_structures_from_elements_round_trip(hopfs, exterior_Rs):
    H = hopfs["ext"]
    R = el.CoendRMatrix(H, exterior_Rs[-1])
    one = el.conv_unit(H)
    phi = el.pivotal_map(one, H.F)
    assert el.pivotal_from_structure(H, phi).mat == one.mat
    theta = el.twist_from_element(one, H.F, R)
    assert el.twist_from_structure(H, theta).mat == one.mat
