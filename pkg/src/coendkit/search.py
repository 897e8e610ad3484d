"""Exhaustive and affine-reduced search for special elements and R-matrices.

Each kind splits its axioms into conditions that are affine in the unknown and
a residual of nonlinear ones. The affine part is solved exactly; the coset is
then scanned over a prime field and every hit is re-verified by the full
predicate. ``oracle_enumerate_all`` skips the linear algebra entirely and scans
the whole ambient vector space, which makes it an independent check.

Hits are sorted lexicographically by the row-major integer entries of their
matrices.
"""
from __future__ import annotations

import builtins
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np

from . import elements as el
from .ambient import is_morphism
from .classical import (
    ClassicalHopf, check_balanced, check_central, check_grouplike, check_pivotal, check_R, check_ribbon,
)
from .errors import FieldMismatch, InternalInconsistency, NotInvertible, SearchSpaceTooLarge
from .internal_hopf import hmod_double_dual, hmod_tensor
from .linalg import Matrix, PrimeField, hstack, kron, solve_affine, vstack

COEND_KINDS = ("central", "grouplike", "twisted_grouplike", "pivotal", "balanced", "ribbon", "r_matrix")
CLASSICAL_KINDS = ("classical_central", "classical_grouplike", "classical_pivotal", "classical_balanced",
                   "classical_ribbon", "classical_r_matrix")
KINDS = COEND_KINDS + CLASSICAL_KINDS
STRATEGIES = ("affine_then_enumerate", "enumerate_all", "verify_candidates")
NEEDS_R = {"balanced", "ribbon", "classical_balanced", "classical_ribbon"}

ENUMERATE_GUARD = 12
ORACLE_GUARD = 9


@dataclass
class SearchSpec:
    kind: str
    hopf: object
    R: object = None
    strategy: str = "affine_then_enumerate"
    candidates: list | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        classical = isinstance(self.hopf, ClassicalHopf)
        if classical != self.kind.startswith("classical_"):
            raise ValueError(f"kind {self.kind} does not match {type(self.hopf).__name__}")
        if self.kind in NEEDS_R and self.R is None:
            raise ValueError(f"kind {self.kind} needs an R-matrix")
        if self.R is not None and not classical and not isinstance(self.R, el.CoendRMatrix):
            self.R = el.CoendRMatrix(self.hopf, self.R)

    @property
    def field(self):
        return self.hopf.field

    @property
    def classical(self) -> bool:
        return self.kind.startswith("classical_")

    @property
    def shape(self) -> tuple:
        H = self.hopf
        if self.classical:
            return (H.dim ** 2, 1) if self.kind == "classical_r_matrix" else (H.dim, 1)
        c = H.coend.dim
        return (H.dim ** 2, c * c) if self.kind == "r_matrix" else (H.dim, c)


@dataclass
class Linearized:
    """Parameter basis, affine solution in parameter coordinates and the axiom partition."""

    basis: list
    solution: object          # AffineSolution over coefficient vectors, or None when inconsistent
    affine_axioms: list
    residual_axioms: list
    informational: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return -1 if self.solution is None else self.solution.dim

    def generators(self):
        """(particular point, direction matrices) of the coset."""
        part = _combine(self.basis, self.solution.particular)
        return part, [_combine(self.basis, v) for v in self.solution.nullspace_basis]

    def points(self):
        """(coefficients, matrix) over the affine coset, lexicographic in the free coordinates."""
        if self.solution is None:
            return
        F = self.solution.particular.field
        part, dirs = self.generators()
        for coeffs in product(range(F.p), repeat=len(dirs)):
            yield coeffs, _affine(part, dirs, coeffs)


def _affine(part, dirs, coeffs):
    x = part
    for c, d in zip(coeffs, dirs):
        if c:
            x = x + d.scale(c)
    return x


@dataclass
class Hit:
    kind: str
    mat: Matrix
    report: object

    @property
    def key(self) -> tuple:
        return _key(self.mat)

    def to_dict(self):
        rep = self.report.to_dict() if hasattr(self.report, "to_dict") else self.report
        return {"kind": self.kind, "matrix": self.mat.to_strings(), "report": rep}


def _key(M: Matrix) -> tuple:
    if isinstance(M.field, PrimeField):
        return tuple(int(x) for x in M.a.reshape(-1))
    return tuple(s for row in M.to_strings() for s in row)


def _combine(basis, coeffs: Matrix) -> Matrix:
    acc = None
    for k, b in builtins.enumerate(basis):
        c = coeffs.a[k, 0]
        if b.field.is_zero(c):
            continue
        term = b.scale(c)
        acc = term if acc is None else acc + term
    return acc if acc is not None else Matrix.zeros(basis[0].field, *basis[0].shape)


def _col(M: Matrix) -> Matrix:
    return Matrix(M.field, M.a.reshape(-1, 1).copy(), _trusted=True)


def _hdefect(f: Matrix, M, N) -> Matrix:
    return f @ M.r - N.r @ kron(f, M.hopf.I)


# -- axiom partition per kind

def _coend_conditions(spec: SearchSpec):
    """(affine conditions as defect functions, residual names, informational names)."""
    H = spec.hopf
    cd = H.coend
    one = Matrix.identity(H.field, 1)
    E = lambda a: el.CoendElement(H, a)
    counit = ("counit", lambda a: H.eps @ a @ cd.u - one)
    central = ("central", lambda a: _hdefect(el.apply_element(a, H.F), H.F, H.F))
    k = spec.kind
    if k == "central":
        return [central], [], []
    if k == "grouplike":
        return [counit], ["grouplike.comultiplicative"], []
    if k == "twisted_grouplike":
        return [counit], ["twisted_grouplike.comultiplicative"], []
    if k == "pivotal":
        DD = hmod_double_dual(H.F)
        piv = ("pivotal.intertwines_S2", lambda a: _hdefect(el.pivotal_map(E(a), H.F), H.F, DD))
        return [counit, piv], ["twisted_grouplike.comultiplicative"], []
    if k in ("balanced", "ribbon"):
        conds = [central, ("CT2", counit[1])]
        if k == "ribbon":
            conds.append(("CT4", lambda a: el.antipode_S(E(a)).mat - a))
        return conds, ["CT3"], []
    if k == "r_matrix":
        FF = hmod_tensor(H.F, H.F)
        Rm = lambda r: el.CoendRMatrix(H, r)
        return ([("R.hlinear", lambda r: _hdefect(el.braiding_from_R(Rm(r), H.F, H.F), FF, FF)),
                 ("R.unit_left", lambda r: el.braiding_from_R(Rm(r), H.trivial, H.F) - H.F.I),
                 ("R.unit_right", lambda r: el.braiding_from_R(Rm(r), H.F, H.trivial) - H.F.I)],
                ["R.hexagon_right", "R.hexagon_left"], ["R.invertible"])
    raise ValueError(k)


def _classical_conditions(spec: SearchSpec):
    H: ClassicalHopf = spec.hopf
    n, I = H.dim, H.I
    one = Matrix.identity(H.field, 1)
    S2 = H.S @ H.S
    counit = ("grouplike.counit", lambda x: H.eps @ x - one)
    central = ("central", lambda x: H.m @ kron(x, I) - H.m @ kron(I, x))
    k = spec.kind
    if k == "classical_central":
        return [central], [], []
    if k == "classical_grouplike":
        return [counit], ["grouplike.coproduct"], []
    if k == "classical_pivotal":
        # p^-1 h p = S^2(h) for invertible p  <=>  h p = p S^2(h)
        return [counit, ("pivotal.S2_conjugation", lambda x: H.m @ kron(I, x) - H.m @ kron(x, I) @ S2)], ["grouplike.coproduct"], []
    if k in ("classical_balanced", "classical_ribbon"):
        conds = [central, ("balanced.counit", counit[1])]
        if k == "classical_ribbon":
            conds.append(("ribbon.antipode_fixed", lambda x: H.S @ x - x))
        return conds, ["balanced.coproduct"], []
    if k == "classical_r_matrix":
        def r1(x):
            cols = []
            for h in range(n):
                dh = H.delta @ H.basis(h)
                cols.append(H.mul2(x, dh) - H.mul2(H.R21(dh), x))
            return hstack(cols)

        return ([("R.quasi_cocommutative", r1),
                 ("R.left_counit", lambda x: kron(H.eps, I) @ x - H.u),
                 ("R.right_counit", lambda x: kron(I, H.eps) @ x - H.u)],
                ["R.coproduct_second_leg", "R.coproduct_first_leg"], [])
    raise ValueError(k)


def parameter_basis(spec: SearchSpec) -> list:
    """Basis of the unknown's domain: Hom_V for coend kinds, the full tensor power for classical ones."""
    H = spec.hopf
    if spec.classical:
        r, c = spec.shape
        return [Matrix.unit_column(H.field, r, i) for i in range(r)]
    if spec.kind == "r_matrix":
        return [b.mat for b in el.r_matrix_space(H)]
    return [b.mat for b in el.element_space(H)]


def linearize(spec: SearchSpec) -> Linearized:
    conds, residual, info = (_classical_conditions if spec.classical else _coend_conditions)(spec)
    basis = parameter_basis(spec)
    F = spec.field
    affine_names = ([] if spec.classical else ["A-linearity"]) + [name for name, _ in conds]
    if not basis:
        return Linearized(basis, None, affine_names, residual, info)
    zero = Matrix.zeros(F, *spec.shape)
    blocks_L, blocks_b = [], []
    for _, fn in conds:
        f0 = _col(fn(zero))
        blocks_L.append(hstack([_col(fn(b)) - f0 for b in basis]))
        blocks_b.append(-f0)
    if blocks_L:
        sol = solve_affine(vstack(blocks_L), vstack(blocks_b))
    else:
        sol = solve_affine(Matrix.zeros(F, 1, len(basis)), Matrix.zeros(F, 1, 1))
    return Linearized(basis, sol, affine_names, residual, info)


# -- full predicates (the double-entry side)

def full_predicate(spec: SearchSpec) -> Callable[[Matrix], bool]:
    H, R, k = spec.hopf, spec.R, spec.kind
    if spec.classical:
        def safe(check):
            def run(x):
                try:
                    return check(x).ok
                except NotInvertible:
                    return False
            return run

        return {
            "classical_central": safe(lambda x: check_central(H, x)),
            "classical_grouplike": safe(lambda x: check_grouplike(H, x)),
            "classical_pivotal": safe(lambda x: check_pivotal(H, x)),
            "classical_balanced": safe(lambda x: check_balanced(H, x, R)),
            "classical_ribbon": safe(lambda x: check_ribbon(H, x, R)),
            "classical_r_matrix": safe(lambda x: check_R(H, x)),
        }[k]
    C = H.coend.C

    def linear(x):
        return is_morphism(x, C, H.carrier) is None

    E = lambda x: el.CoendElement(H, x)
    preds = {
        "central": lambda x: el.is_central(E(x))[0],
        "grouplike": lambda x: el.is_grouplike(E(x))[0],
        "twisted_grouplike": lambda x: el.is_twisted_grouplike(E(x))[0],
        "pivotal": lambda x: el.is_pivotal(E(x))[0],
        "balanced": lambda x: el.is_balanced(E(x), R)[0],
        "ribbon": lambda x: el.is_ribbon(E(x), R)[0],
    }
    if k == "r_matrix":
        from .ambient import tensor_obj

        CC, HH = tensor_obj(C, C), tensor_obj(H.carrier, H.carrier)
        return lambda x: is_morphism(x, CC, HH) is None and el.validate_R(el.CoendRMatrix(H, x)).ok
    p = preds[k]
    return lambda x: linear(x) and p(x)


def hit_report(spec: SearchSpec, x: Matrix):
    """Full report for a hit; raises InternalInconsistency if it contradicts the search."""
    H, R = spec.hopf, spec.R
    if spec.kind == "r_matrix":
        rep = el.validate_R(el.CoendRMatrix(H, x))
        ok = rep.ok
    elif spec.kind == "classical_r_matrix":
        rep = check_R(H, x)
        ok = rep.ok
    elif spec.classical:
        rep = classical_report(H, x, R)
        ok = rep.flags[spec.kind.removeprefix("classical_")]
    else:
        rep = el.element_report(el.CoendElement(H, x), R)
        ok = rep.flags[spec.kind]
        if not rep.consistent():
            raise InternalInconsistency(f"inconsistent flags {rep.flags}")
    if not ok:
        raise InternalInconsistency(f"search hit fails the full {spec.kind} predicate")
    return rep


def classical_report(H: ClassicalHopf, x: Matrix, R=None) -> el.ElementReport:
    rep = el.ElementReport()

    def put(name, check):
        try:
            r = check()
        except NotInvertible:
            rep.set(name, (False, ("pivotal.S2_conjugation", "not invertible")))
            return
        f = r.failures()
        rep.set(name, (r.ok, None if r.ok else (f[0].name, f[0].witness)))

    put("central", lambda: check_central(H, x))
    put("grouplike", lambda: check_grouplike(H, x))
    put("pivotal", lambda: check_pivotal(H, x))
    if R is not None:
        put("balanced", lambda: check_balanced(H, x, R))
        put("ribbon", lambda: check_ribbon(H, x, R))
    return rep


# -- strategies

def _require_prime(spec):
    if not isinstance(spec.field, PrimeField):
        raise FieldMismatch("enumeration needs a prime field; use verify_candidates over Q or extensions")


def enumerate_elements(spec: SearchSpec, guard: int = ENUMERATE_GUARD) -> list:
    """All elements of the kind, via the affine reduction."""
    _require_prime(spec)
    lin = linearize(spec)
    if lin.dim > guard:
        raise SearchSpaceTooLarge(lin.dim, guard)
    pred = _residual_fast(spec, lin) if spec.kind == "r_matrix" else None
    if pred is None:
        full = full_predicate(spec)
        pred = lambda coeffs, x: full(x)
    hits = [Hit(spec.kind, x, hit_report(spec, x)) for coeffs, x in lin.points() if pred(coeffs, x)]
    return sorted(hits, key=lambda h: h.key)


def _residual_fast(spec: SearchSpec, lin: Linearized):
    """Hexagon residual for coend R-matrices from precomputed braidings of the coset generators.

    sigma^R is linear in R, so each braiding at a point is the same affine
    combination of the generators' braidings. Hits still pass through the full
    predicate in ``hit_report``.
    """
    if lin.solution is None:
        return None
    H = spec.hopf
    F = H.F
    FF = hmod_tensor(F, F)
    part, dirs = lin.generators()

    def braids(r):
        R = el.CoendRMatrix(H, r)
        return (el.braiding_from_R(R, F, F), el.braiding_from_R(R, F, FF), el.braiding_from_R(R, FF, F))

    base = braids(part)
    gens = [braids(d) for d in dirs]
    I = F.I

    def pred(coeffs, x):
        s_ff, s_f_ff, s_ff_f = (_affine(b, [g[i] for g in gens], coeffs) for i, b in builtins.enumerate(base))
        if s_f_ff.diff(kron(I, s_ff) @ kron(s_ff, I)) is not None:
            return False
        return s_ff_f.diff(kron(s_ff, I) @ kron(I, s_ff)) is None

    return pred


def oracle_enumerate_all(spec: SearchSpec, guard: int = ORACLE_GUARD) -> list:
    """Scan every matrix of the kind's shape with the full predicate; no linear algebra."""
    _require_prime(spec)
    F = spec.field
    r, c = spec.shape
    if r * c > guard:
        raise SearchSpaceTooLarge(r * c, guard)
    pred = full_predicate(spec)
    hits = []
    for vals in product(range(F.p), repeat=r * c):
        x = Matrix(F, _grid(F, vals, r, c), _trusted=True)
        if pred(x):
            hits.append(Hit(spec.kind, x, hit_report(spec, x)))
    return sorted(hits, key=lambda h: h.key)


def _grid(F, vals, r, c):
    return np.array(vals, dtype=F.zeros((1, 1)).dtype).reshape(r, c)


def verify_candidates(spec: SearchSpec) -> list:
    """The candidates that pass the full predicate, in input order."""
    pred = full_predicate(spec)
    out = []
    for x in spec.candidates or []:
        x = getattr(x, "mat", x)
        if x.shape != spec.shape:
            continue
        if pred(x):
            out.append(Hit(spec.kind, x, hit_report(spec, x)))
    return out


def run(spec: SearchSpec, guard: int | None = None) -> list:
    if spec.strategy == "verify_candidates":
        return verify_candidates(spec)
    if spec.strategy == "enumerate_all":
        return oracle_enumerate_all(spec, guard or ORACLE_GUARD)
    return enumerate_elements(spec, guard or ENUMERATE_GUARD)


def key_set(hits) -> set:
    return {h.key for h in hits}


enumerate = enumerate_elements  # noqa: A001  (search.enumerate, the operation's public name)


__all__ = [
    "SearchSpec", "Linearized", "Hit", "KINDS", "COEND_KINDS", "CLASSICAL_KINDS", "linearize", "parameter_basis",
    "full_predicate", "hit_report", "classical_report", "enumerate_elements", "oracle_enumerate_all", "verify_candidates",
    "run", "key_set", "ENUMERATE_GUARD", "ORACLE_GUARD",
]
