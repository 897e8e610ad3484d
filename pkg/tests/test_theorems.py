import pytest

from coendkit import elements as el
from coendkit import fixtures as fx
from coendkit.classical import ClassicalHopf, corollary_check
from coendkit.coend import build_coend
from coendkit.internal_hopf import classical_hopf, coend_hopf, unit_hopf
from coendkit.linalg import PrimeField, kron
from coendkit.search import SearchSpec, enumerate_elements
from coendkit.theorems import special_sets, theorem_suite, twist_self_dual


def _families(rep):
    return {c.name.split("[")[0] for c in rep.checks}


def test_exterior_every_R(exterior, exterior_Rs):
    for R in exterior_Rs:
        rep, sets = theorem_suite(exterior, R)
        assert rep.ok, str(rep)
        assert {k: len(v) for k, v in sets.items()} == {"pivotal": 1, "balanced": 1, "ribbon": 1}
        fam = _families(rep)
        assert {"piv.structure_hlinear", "piv.monoidal", "piv.round_trip", "bal.twist", "bal.balancing_law",
                "bal.round_trip", "rbn.self_dual_iff_ribbon", "drinfeld.image_in_pivotal", "drinfeld.injective",
                "drinfeld.surjective", "drinfeld.criteria"} <= fam


def test_unit_hopf_svec(svec_coend):
    H = unit_hopf(svec_coend)
    for h in enumerate_elements(SearchSpec("r_matrix", H)):
        rep, sets = theorem_suite(H, h.mat)
        assert rep.ok, str(rep)
        assert len(sets["balanced"]) == len(sets["pivotal"]) == 2


def test_coend_hopf_canonical_R(svec_coend):
    cd = svec_coend
    H = coend_hopf(cd)
    rep, sets = theorem_suite(H, kron(cd.u, kron(cd.eps, cd.I)))
    assert rep.ok, str(rep)
    assert len(sets["pivotal"]) == len(sets["balanced"]) == 4


@pytest.mark.parametrize("p", [7, 3])
def test_balanced_not_ribbon_general(p):
    """kZ/3, R = 1 (x) 1: the three group elements are balanced and pivotal, only 1 is ribbon."""
    F = PrimeField(p)
    cd = build_coend(fx.vec_ambient(F))
    d = fx.cyclic(3, F)
    H = classical_hopf(cd, d)
    R = kron(d.u, d.u)
    rep, sets = theorem_suite(H, R)
    assert rep.ok, str(rep)
    gs = sorted(tuple(int(x) for x in d.element({n: 1}).flat()) for n in d.names)
    key = lambda a: tuple(int(x) for x in a.mat.flat())
    assert sorted(map(key, sets["balanced"])) == gs == sorted(map(key, sets["pivotal"]))
    assert [key(t) for t in sets["ribbon"]] == [(1, 0, 0)]
    crit = [c for c in rep.checks if c.name.startswith("drinfeld.criteria")]
    assert len(crit) == 3 and all(c.ok for c in crit)
    # the classical corollary gives the same verdicts
    CH = ClassicalHopf.from_data(d)
    for t in sets["balanced"]:
        assert corollary_check(CH, R, t=t.mat).ok


def test_self_dual_twist_detects_non_ribbon():
    F = PrimeField(7)
    cd = build_coend(fx.vec_ambient(F))
    d = fx.cyclic(3, F)
    H = classical_hopf(cd, d)
    g = el.CoendElement(H, d.element({"g": 1}))
    assert twist_self_dual(el.conv_unit(H), H.regular)
    assert not twist_self_dual(g, H.regular)


def test_special_sets_with_candidates():
    cd = build_coend(fx.vec_ambient())
    d = fx.cyclic(2)
    H = classical_hopf(cd, d)
    R = el.CoendRMatrix(H, fx.R_minus(d))
    cands = [d.element({"1": 1}), d.element({"g": 1}), d.element({"1": 1, "g": 1})]
    sets = special_sets(H, R, cands)
    assert len(sets["pivotal"]) == len(sets["balanced"]) == len(sets["ribbon"]) == 2
