"""Checks of the element/structure correspondences on V_H.

* pivotal elements p  <->  pivotal structures phi_M = mu_M p^#_M;
* balanced elements t <->  twists theta_M = t^#_M, ribbon exactly when theta is self-dual;
* t -> t u is a bijection from balanced onto pivotal elements;
* t ribbon  <=>  (t u)^2 = q_mu  <=>  t^-2 = c_mu.

Element sets come from exhaustive search over prime fields, or from supplied
candidates otherwise. Every check is an exact matrix identity.
"""
from __future__ import annotations

from . import elements as el
from .errors import CoendError, NotInvertible
from .internal_hopf import InternalHopf, apply_element, hmod_dual_right, hmod_tensor
from .linalg import PrimeField, kron
from .report import ValidationReport
from .search import SearchSpec, enumerate_elements, verify_candidates


def special_sets(H: InternalHopf, R: el.CoendRMatrix, candidates=None) -> dict:
    """Pivotal, balanced and ribbon elements as lists of CoendElement."""
    out = {}
    for kind in ("pivotal", "balanced", "ribbon"):
        if isinstance(H.field, PrimeField) and candidates is None:
            hits = enumerate_elements(SearchSpec(kind, H, R))
        else:
            hits = verify_candidates(SearchSpec(kind, H, R, "verify_candidates", list(candidates or [])))
        out[kind] = [el.CoendElement(H, h.mat) for h in hits]
    return out


def _key(a):
    return a.mat.to_strings().__repr__()


def pivotal_theorem(H, pivotal, modules, rep: ValidationReport):
    for i, p in enumerate(pivotal):
        tag = f"[p{i}]"
        try:
            for M in modules:
                el.pivotal_structure_from_element(p, M)
            rep.flag("piv.structure_hlinear" + tag, True)
        except CoendError as e:
            rep.flag("piv.structure_hlinear" + tag, False, str(e))
        ok = all(el.check_pivotal_monoidal(p, M, N)[0] for M in modules for N in modules)
        rep.flag("piv.monoidal" + tag, ok)
        back = el.pivotal_from_structure(H, el.pivotal_map(p, H.F))
        rep.equal("piv.round_trip" + tag, back.mat, p.mat)


def twist_self_dual(t, M) -> bool:
    """theta_{M^v} equals the transpose of theta_M (duals of V_H on dual bases)."""
    return apply_element(t.mat, hmod_dual_right(M)).diff(apply_element(t.mat, M).T) is None


def balanced_theorem(H, R, balanced, ribbon, modules, rep: ValidationReport):
    ribbon_keys = {_key(t) for t in ribbon}
    for i, t in enumerate(balanced):
        tag = f"[t{i}]"
        try:
            for M in modules:
                el.twist_from_element(t, M, R)
            rep.flag("bal.twist" + tag, True)
        except CoendError as e:
            rep.flag("bal.twist" + tag, False, str(e))
        law = all(
            apply_element(t.mat, hmod_tensor(M, N)).diff(
                kron(apply_element(t.mat, M), apply_element(t.mat, N))
                @ el.braiding_from_R(R, N, M) @ el.braiding_from_R(R, M, N)) is None
            for M in modules for N in modules)
        rep.flag("bal.balancing_law" + tag, law)
        rep.equal("bal.round_trip" + tag, el.twist_from_structure(H, apply_element(t.mat, H.F)).mat, t.mat)
        self_dual = all(twist_self_dual(t, M) for M in modules)
        rep.flag("rbn.self_dual_iff_ribbon" + tag, self_dual == (_key(t) in ribbon_keys))


def drinfeld_theorems(H, R, sets, rep: ValidationReport):
    qc = el.q_c_elements(R)
    u, u_inv = qc["u"], qc["u_inv"]
    piv_keys = {_key(p) for p in sets["pivotal"]}
    image = [el.conv_product(t, u) for t in sets["balanced"]]
    rep.flag("drinfeld.image_in_pivotal", all(_key(p) in piv_keys for p in image))
    rep.flag("drinfeld.injective", len({_key(p) for p in image}) == len(image))
    back = [el.conv_product(p, u_inv) for p in sets["pivotal"]]
    bal_keys = {_key(t) for t in sets["balanced"]}
    rep.flag("drinfeld.surjective", all(_key(t) in bal_keys for t in back))
    for i, t in enumerate(sets["balanced"]):
        res = el.bal_piv_bijection_check(t, R, qc)
        crit = res["ribbon_criteria"]
        rep.flag(f"drinfeld.criteria[t{i}]",
                 res["ribbon"] == crit["p_squared_eq_q"] == crit["t_minus2_eq_c"],
                 detail=f"ribbon={res['ribbon']} p^2=q:{crit['p_squared_eq_q']} t^-2=c:{crit['t_minus2_eq_c']}")


def theorem_suite(H: InternalHopf, R, modules=None, candidates=None) -> tuple:
    """Run all four checks; returns (report, element sets)."""
    if not isinstance(R, el.CoendRMatrix):
        R = el.CoendRMatrix(H, R)
    mods = list(modules) if modules is not None else [H.trivial, H.regular, H.F]
    rep = ValidationReport("theorem suite")
    rep.extend(el.validate_R(R), prefix="premise.")
    sets = special_sets(H, R, candidates)
    rep.flag("sets.nonempty_balanced", bool(sets["balanced"]), informational=True)
    pivotal_theorem(H, sets["pivotal"], mods, rep)
    balanced_theorem(H, R, sets["balanced"], sets["ribbon"], mods, rep)
    try:
        drinfeld_theorems(H, R, sets, rep)
    except NotInvertible as e:
        rep.flag("drinfeld.u_invertible", False, str(e))
    return rep, sets


__all__ = ["special_sets", "pivotal_theorem", "balanced_theorem", "drinfeld_theorems", "theorem_suite",
           "twist_self_dual"]
