import random

import pytest

from coendkit import elements as el
from coendkit import fixtures as fx
from coendkit.ambient import braiding_matrix
from coendkit.coend import build_coend
from coendkit.errors import DimensionMismatch, HopfMismatch, NotNatural, ValidationFailure
from coendkit.internal_hopf import (InternalHopf, apply_element, braided_line, check_hmod_duals,
                                    classical_hopf, coend_hopf, coend_of_VH, element_from_endo, exterior_line,
                                    factorizability_pairing, hmod_tensor, hom_witness, unit_hopf, vh_braiding)
from coendkit.linalg import Matrix, Rationals, kron, swap


def _anyon_line(cd):
    A, F = cd.ambient, cd.field
    X = A.module([Matrix.scalar(F, 1), Matrix.scalar(F, 2), Matrix.scalar(F, 4)])
    return braided_line(cd, X)


@pytest.fixture(scope="module")
def instances(svec_coend, anyon_coend):
    return {
        "svec_1": unit_hopf(svec_coend),
        "svec_ext": exterior_line(svec_coend),
        "svec_C": coend_hopf(svec_coend),
        "anyon_C": coend_hopf(anyon_coend),
        "anyon_line": _anyon_line(anyon_coend),
    }


NAMES = ["svec_1", "svec_ext", "svec_C", "anyon_C", "anyon_line"]


@pytest.mark.parametrize("name", NAMES)
def test_validates(instances, name):
    rep = instances[name].validate()
    assert rep.ok, str(rep)


def test_even_exterior_line_is_not_braided_hopf(svec_coend):
    H = exterior_line(svec_coend, odd=False)
    fails = [c.name for c in H.validate().failures()]
    assert "hopf.bialgebra" in fails


def test_anyon_line_dimension(anyon_coend, instances):
    """N is the least n with 1 + q + ... + q^(n-1) = 0 for q the self-braiding scalar."""
    H = instances["anyon_line"]
    X = anyon_coend.ambient.module([Matrix.scalar(anyon_coend.field, v) for v in (1, 2, 4)])
    q = int(braiding_matrix(X, X).a[0, 0])
    n, s = 1, 1
    while s % 7:
        s += pow(q, n, 7)
        n += 1
    assert H.dim == n


def test_classical_needs_trivial_ambient(svec_coend):
    with pytest.raises(DimensionMismatch):
        classical_hopf(svec_coend, fx.cyclic(2))


def test_invalid_structure_rejected():
    cd = build_coend(fx.vec_ambient())
    d = fx.cyclic(2)
    bad_S = Matrix.from_rows(Rationals(), [[0, 1], [1, 0]])
    with pytest.raises(ValidationFailure):
        InternalHopf(cd, cd.ambient.module([Matrix.identity(cd.field, 2)]), d.m, d.u, d.delta, d.eps, bad_S)


@pytest.mark.parametrize("name", NAMES)
def test_modules_and_tensor_products(instances, name):
    H = instances[name]
    mods = [H.trivial, H.regular, H.F]
    for M in mods:
        assert M.validate().ok, M.name
    for M in mods[:2]:
        for N in mods[:2]:
            assert hmod_tensor(M, N).validate().ok
    M, N, P = H.regular, H.trivial, H.regular
    assert hmod_tensor(hmod_tensor(M, N), P).r == hmod_tensor(M, hmod_tensor(N, P)).r


@pytest.mark.parametrize("name", NAMES)
def test_duals_in_VH(instances, name):
    H = instances[name]
    for M in (H.regular, H.F):
        rep = check_hmod_duals(M)
        assert rep.ok, str(rep)


@pytest.mark.parametrize("name", NAMES)
def test_element_from_endo_round_trip(instances, name):
    H = instances[name]
    basis = el.element_space(H)
    rng = random.Random(5)
    for _ in range(10):
        a = el.combine(basis, [rng.randint(-2, 2) for _ in basis])
        assert element_from_endo(H, apply_element(a.mat, H.F)) == a.mat


def test_non_natural_endo_rejected(instances):
    H = instances["svec_ext"]
    n = H.F.dim
    bad = Matrix.from_rows(H.field, [[1 if i == j or (i, j) == (0, 1) else 0 for j in range(n)] for i in range(n)])
    with pytest.raises(NotNatural):
        element_from_endo(H, bad)


def test_unit_element_acts_as_identity(instances):
    for name in NAMES:
        H = instances[name]
        one = H.u @ H.coend.eps
        for M in (H.regular, H.F, H.trivial):
            assert apply_element(one, M) == M.I


def test_hom_witness_reports_side(instances):
    H = instances["svec_ext"]
    M = H.regular
    assert hom_witness(M.I, M, M) is None
    # projection onto the odd part commutes with the A-action but not with H
    P = Matrix.from_rows(H.field, [[0, 0], [0, 1]])
    w = hom_witness(P, M, M)
    assert w is not None and w[0] == "H"


def test_modules_over_different_hopf_rejected(instances):
    with pytest.raises(HopfMismatch):
        hmod_tensor(instances["svec_1"].regular, instances["svec_ext"].regular)


def test_classical_braiding_is_flip_or_super_sign():
    cd = build_coend(fx.vec_ambient())
    d = fx.cyclic(2)
    H = classical_hopf(cd, d)
    M = H.regular
    R1 = kron(d.u, d.u) @ kron(cd.eps, cd.eps)
    assert vh_braiding(H, R1, M, M) == swap(H.field, 2, 2)
    Rm = fx.R_minus(d) @ kron(cd.eps, cd.eps)
    s = vh_braiding(H, Rm, M, M)
    # on g-eigenvectors 1 - g (odd) the braiding is -flip
    odd = Matrix.column(H.field, [1, -1])
    assert s @ kron(odd, odd) == kron(odd, odd).scale(-1)


def test_Z_object_checks(instances):
    for name in ("svec_1", "svec_ext"):
        Z = coend_of_VH(instances[name])
        assert Z.check().ok


def test_factorizability_double_vs_group():
    from coendkit.classical import ClassicalHopf, drinfeld_double

    cd = build_coend(fx.vec_ambient())
    d = fx.cyclic(2)
    H = classical_hopf(cd, d)
    assert factorizability_pairing(H, kron(d.u, d.u) @ kron(cd.eps, cd.eps))["nondegenerate"] is False
    dd = drinfeld_double(ClassicalHopf.from_data(d))
    D = classical_hopf(cd, dd["D"].to_data())
    assert factorizability_pairing(D, dd["R"] @ kron(cd.eps, cd.eps))["nondegenerate"] is True
