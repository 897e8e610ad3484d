import numpy as np
import pytest

from coendkit import fixtures as fx
from coendkit.coend import build_coend, pairing_variants
from coendkit.errors import NotNatural, SourceMismatch
from coendkit.linalg import Matrix, PrimeField, Rationals, kron


def _sweedler_ambient(alpha):
    sw = fx.sweedler()
    return sw.ambient(fx.sweedler_R(sw, alpha))


AMBIENTS = {
    "vec": lambda: fx.vec_ambient(),
    "svec": lambda: fx.svec_ambient(),
    "anyon": lambda: fx.anyon_ambient(),
    "sweedler_R1": lambda: _sweedler_ambient(1),
}

_cache = {}


def coend(name):
    if name not in _cache:
        cd = build_coend(AMBIENTS[name]())
        cd.derive_structure()
        _cache[name] = cd
    return _cache[name]


def rand_matrix(F, r, c, rng):
    return Matrix(F, F.array([[F.random(rng) for _ in range(c)] for _ in range(r)]))


@pytest.mark.parametrize("name", list(AMBIENTS))
def test_structure_is_braided_hopf_with_pairing(name):
    cd = coend(name)
    rep = cd.validate_structure()
    rep.extend(cd.pairing_report())
    assert rep.ok, str(rep)


@pytest.mark.parametrize("name", list(AMBIENTS))
def test_coaction_axioms_on_regular_and_coend(name):
    cd = coend(name)
    for X in (cd.ambient.regular, cd.C, cd.ambient.unit_object):
        rep = cd.check_coaction(X)
        assert rep.ok, str(rep)


@pytest.mark.parametrize("name,expect", [("vec", True), ("svec", False), ("anyon", True), ("sweedler_R1", False)])
def test_nondegenerate(name, expect):
    """Symmetric sVec and Sweedler's modules are not factorizable; Z/3 anyons with a primitive root are."""
    assert coend(name).nondegenerate() is expect


@pytest.mark.parametrize("name", list(AMBIENTS))
def test_sigma1_factorize1_round_trip(name):
    cd = coend(name)
    F, G = cd.field, cd.generator
    rng = np.random.default_rng(7)
    for trial in range(10):
        d = 1 + trial % 3
        f = rand_matrix(F, d, cd.dim, rng)
        assert cd.factorize1(cd.sigma1(f, G), d) == f


@pytest.mark.parametrize("name", list(AMBIENTS))
def test_sigma2_factorize2_round_trip(name):
    cd = coend(name)
    F, G = cd.field, cd.generator
    rng = np.random.default_rng(11)
    for trial in range(10):
        d = 1 + trial % 2
        f = rand_matrix(F, d, cd.dim * cd.dim, rng)
        assert cd.factorize2(cd.sigma2(f, G, G), d) == f


@pytest.mark.parametrize("name", ["svec", "anyon", "sweedler_R1"])
def test_dinaturality_on_linear_maps(name):
    """delta is natural along A-linear maps: left multiplications on the regular module."""
    cd = coend(name)
    A = cd.ambient
    rng = np.random.default_rng(3)
    X = A.regular
    for _ in range(5):
        a = rand_matrix(cd.field, A.dim, 1, rng)
        f = A.left_mul(a)
        assert cd.dinaturality_witness(f, X, X) is None


def test_non_natural_component_rejected():
    cd = coend("svec")
    bogus = Matrix.from_rows(cd.field, [[1, 1], [0, 1]])
    with pytest.raises(NotNatural):
        cd.factorize1(bogus, 1)
    with pytest.raises(NotNatural):
        cd.factorize1(Matrix.identity(cd.field, 3), 1)


def test_source_mismatch():
    cd = coend("svec")
    with pytest.raises(SourceMismatch):
        cd.sigma1(Matrix.identity(cd.field, 3), cd.generator)


def test_vec_coend_is_unit():
    cd = coend("vec")
    assert cd.dim == 1
    for k in ("m", "u", "Delta", "eps", "S", "omega"):
        assert getattr(cd, k).to_strings() == [["1"]]


def test_pairing_variants_match_braid_switch_formulas():
    cd = coend("anyon")
    v = pairing_variants(cd)
    I = cd.I
    assert v["omega_bar"] == cd.omega @ kron(cd.S, I)
    assert v["omega_under"] == cd.omega @ kron(cd.S, I) @ cd.sigma_CC


def test_coend_over_prime_field():
    cd = build_coend(fx.svec_ambient(PrimeField(3)))
    cd.derive_structure()
    assert cd.validate_structure().ok


def test_morphism_wrappers_are_linear():
    cd = coend("sweedler_R1")
    for name in ("m", "u", "Delta", "eps", "S", "S_inv", "omega"):
        assert cd.morphism(name).is_linear(), name
    assert isinstance(cd.field, Rationals)
