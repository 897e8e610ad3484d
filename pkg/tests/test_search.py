import pytest

from coendkit import fixtures as fx
from coendkit.classical import ClassicalHopf
from coendkit.errors import FieldMismatch, SearchSpaceTooLarge
from coendkit.internal_hopf import braided_line, coend_hopf, unit_hopf
from coendkit.linalg import Matrix, PrimeField, kron
from coendkit.search import (CLASSICAL_KINDS, COEND_KINDS, SearchSpec, enumerate_elements, key_set, linearize,
                             oracle_enumerate_all, parameter_basis, run, verify_candidates)

F3 = PrimeField(3)


def count(spec):
    return len(enumerate_elements(spec))


def test_exterior_counts(exterior, exterior_Rs):
    assert len(exterior_Rs) == 3
    R = exterior_Rs[-1]
    got = {k: count(SearchSpec(k, exterior, R)) for k in COEND_KINDS[:-1]}
    assert got == {"central": 3, "grouplike": 2, "twisted_grouplike": 2, "pivotal": 1, "balanced": 1, "ribbon": 1}


def test_unit_hopf_counts(svec_coend):
    H = unit_hopf(svec_coend)
    Rs = enumerate_elements(SearchSpec("r_matrix", H))
    assert len(Rs) == 2
    for kind in ("grouplike", "pivotal", "balanced", "ribbon"):
        assert count(SearchSpec(kind, H, Rs[0].mat)) == 2


def test_classical_z2_counts():
    d = fx.cyclic(2, F3)
    H = ClassicalHopf.from_data(d)
    Rm = fx.R_minus(d)
    Rs = {h.key for h in enumerate_elements(SearchSpec("classical_r_matrix", H))}
    assert Rs == {tuple(int(x) for x in kron(d.u, d.u).flat()), tuple(int(x) for x in Rm.flat())}
    for kind in ("classical_grouplike", "classical_pivotal", "classical_balanced", "classical_ribbon"):
        assert key_set(enumerate_elements(SearchSpec(kind, H, Rm))) == {(1, 0), (0, 1)}
    assert count(SearchSpec("classical_central", H)) == 9


@pytest.mark.parametrize("kind", CLASSICAL_KINDS)
def test_oracle_equivalence_classical(kind):
    for d, R in [(fx.cyclic(2, F3), None), (fx.sweedler(F3), None)]:
        H = ClassicalHopf.from_data(d)
        R = fx.R_minus(d) if d.dim == 2 else fx.sweedler_R(d, 1)
        spec = SearchSpec(kind, H, R)
        r, c = spec.shape
        if r * c > 9:
            continue
        assert key_set(enumerate_elements(spec)) == key_set(oracle_enumerate_all(spec))


@pytest.mark.parametrize("kind", COEND_KINDS[:-1])
def test_oracle_equivalence_exterior(exterior, exterior_Rs, kind):
    spec = SearchSpec(kind, exterior, exterior_Rs[-1])
    assert spec.shape[0] * spec.shape[1] <= 9
    assert key_set(enumerate_elements(spec)) == key_set(oracle_enumerate_all(spec))


def test_r_matrix_space_beyond_oracle(exterior):
    """The R-matrix space of the exterior line has 16 entries: too many for the full scan."""
    spec = SearchSpec("r_matrix", exterior)
    with pytest.raises(SearchSpaceTooLarge):
        oracle_enumerate_all(spec)
    assert len(parameter_basis(spec)) < 16


def test_anyon_line_has_no_R_matrix(anyon_coend):
    A, F = anyon_coend.ambient, anyon_coend.field
    X = A.module([Matrix.scalar(F, v) for v in (1, 2, 4)])
    H = braided_line(anyon_coend, X)
    spec = SearchSpec("r_matrix", H)
    assert linearize(spec).dim == -1
    assert enumerate_elements(spec) == []


def test_guard(svec_coend):
    H = coend_hopf(svec_coend)
    spec = SearchSpec("central", H)
    with pytest.raises(SearchSpaceTooLarge):
        oracle_enumerate_all(spec, guard=3)


def test_prime_field_required():
    H = ClassicalHopf.from_data(fx.cyclic(2))
    with pytest.raises(FieldMismatch):
        enumerate_elements(SearchSpec("classical_grouplike", H))


def test_verify_candidates_filters():
    d = fx.cyclic(2)
    H = ClassicalHopf.from_data(d)
    cands = [d.element({"1": 1}), d.element({"g": 1}), d.element({"1": 1, "g": 1})]
    hits = verify_candidates(SearchSpec("classical_grouplike", H, None, "verify_candidates", cands))
    assert [h.mat for h in hits] == cands[:2]


def test_run_dispatch_and_hit_reports(exterior, exterior_Rs):
    spec = SearchSpec("ribbon", exterior, exterior_Rs[-1], "enumerate_all")
    hits = run(spec)
    assert len(hits) == 1
    d = hits[0].to_dict()
    assert d["kind"] == "ribbon" and d["report"]["flags"]["ribbon"]


def test_bad_kind_and_strategy(exterior):
    with pytest.raises(ValueError):
        SearchSpec("nonsense", exterior)
    with pytest.raises(ValueError):
        SearchSpec("central", exterior, strategy="guess")
    with pytest.raises(ValueError):
        SearchSpec("balanced", exterior)          # needs an R-matrix
