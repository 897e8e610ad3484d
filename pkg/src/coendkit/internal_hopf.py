"""Hopf algebras H internal to V, the category V_H of right H-modules, and its coend Z(H).

Conventions: right duals have ev: M (x) M^v -> 1 and coev: 1 -> M^v (x) M, left
duals have ev: ^vM (x) M -> 1 and coev: 1 -> M (x) ^vM, all given by the
canonical pairing. So a dual object lives on the dual space of M and only its
actions need computing.

Natural families on V_H are pinned down by their component on the free module
F(A) = A (x) H. The results used throughout are "Yoneda at the free module":
an equation between natural transformations holds everywhere once it holds on
F(A) (or F(A) (x) F(A) for two variables).
"""
from __future__ import annotations

from functools import cached_property

from .ambient import VObject, braiding_inv_matrix, braiding_matrix, is_morphism, left_dual, right_dual, tensor_obj
from .coend import CoendCalculus, CoendData, check_braided_hopf
from .errors import (
    DimensionMismatch, HopfMismatch, NotNatural, SourceMismatch, TranscriptionFailure, ValidationFailure,
)
from .linalg import Matrix, apply_kron, invert, kron, kron_all, linear_map_matrix, solve_affine
from .report import ValidationReport
from . import config


def _mat(x) -> Matrix:
    return x.mat if hasattr(x, "mat") else x


class InternalHopf:
    """A Hopf algebra in V with carrier a VObject and structure given as matrices."""

    def __init__(self, coend: CoendData, carrier: VObject, m, u, Delta, eps, S, S_inv=None,
                 name="H", validate=True):
        if carrier.ambient is not coend.ambient:
            raise HopfMismatch("carrier and coend live over different ambients")
        self.coend = coend.derive_structure()
        self.ambient = coend.ambient
        self.field = coend.field
        self.carrier = carrier
        self.name = name
        self.m, self.u, self.Delta, self.eps, self.S = map(_mat, (m, u, Delta, eps, S))
        d = carrier.dim
        for nm, M, shp in [("m", self.m, (d, d * d)), ("u", self.u, (d, 1)), ("Delta", self.Delta, (d * d, d)),
                           ("eps", self.eps, (1, d)), ("S", self.S, (d, d))]:
            if M.shape != shp:
                raise DimensionMismatch(f"{nm} has shape {M.shape}, expected {shp}")
        self.S_inv = _mat(S_inv) if S_inv is not None else invert(self.S)
        if validate:
            rep = self.validate()
            if not rep.ok:
                raise ValidationFailure(f"{name} is not a Hopf algebra in V: {[c.name for c in rep.failures()]}", rep)

    @property
    def dim(self):
        return self.carrier.dim

    @cached_property
    def I(self):
        return Matrix.identity(self.field, self.dim)

    @cached_property
    def sigma_HH(self):
        return braiding_matrix(self.carrier, self.carrier)

    def validate(self) -> ValidationReport:
        H = self.carrier
        one = self.ambient.unit_object
        HH = tensor_obj(H, H)
        rep = ValidationReport(f"internal Hopf algebra {self.name}")
        for nm, M, src, tgt in [("m", self.m, HH, H), ("u", self.u, one, H), ("Delta", self.Delta, H, HH),
                                ("eps", self.eps, H, one), ("S", self.S, H, H), ("S_inv", self.S_inv, H, H)]:
            rep.flag(f"hopf.{nm}_linear", is_morphism(M, src, tgt) is None)
        rep.extend(check_braided_hopf(self.field, self.dim, self.m, self.u, self.Delta, self.eps,
                                      self.S, self.S_inv, self.sigma_HH, "hopf."))
        rep.equal("hopf.antipode_inverse_right", self.S @ self.S_inv, self.I)
        return rep

    # -- modules
    def module(self, carrier: VObject, r: Matrix, name=None, validate=True) -> "HModule":
        return HModule(self, carrier, r, name=name, validate=validate)

    def free_module(self, X: VObject, name=None) -> "HModule":
        """X (x) H with H acting on the right factor."""
        return HModule(self, tensor_obj(X, self.carrier), kron(X.I, self.m),
                       name=name or (f"F({X.name})" if X.name else None), validate=False)

    @cached_property
    def F(self) -> "HModule":
        """The free module on the regular A-module, the evaluation point for natural families."""
        return self.free_module(self.ambient.regular, name="F(A)")

    @cached_property
    def base_point(self) -> Matrix:
        return kron(self.ambient.u, self.u)

    @cached_property
    def regular(self) -> "HModule":
        return HModule(self, self.carrier, self.m, name=self.name, validate=False)

    @cached_property
    def trivial(self) -> "HModule":
        """The unit object 1 with H acting through eps."""
        return HModule(self, self.ambient.unit_object, self.eps, name="1", validate=False)


class HModule:
    """A right H-module (M, r) in V."""

    def __init__(self, hopf: InternalHopf, carrier: VObject, r: Matrix, name=None, validate=True):
        r = _mat(r)
        if r.shape != (carrier.dim, carrier.dim * hopf.dim):
            raise DimensionMismatch(f"action of shape {r.shape} on a {carrier.dim}-dim carrier")
        self.hopf, self.carrier, self.r, self.name = hopf, carrier, r, name
        if validate or config.DEBUG_REVALIDATE:
            rep = self.validate()
            if not rep.ok:
                raise ValidationFailure(f"not an H-module: {[c.name for c in rep.failures()]}", rep)

    @property
    def dim(self):
        return self.carrier.dim

    @property
    def I(self):
        return self.carrier.I

    def validate(self) -> ValidationReport:
        H = self.hopf
        rep = ValidationReport(f"H-module {self.name or ''}".strip())
        rep.flag("hmodule.action_linear", is_morphism(self.r, tensor_obj(self.carrier, H.carrier), self.carrier) is None)
        rep.equal("hmodule.associativity", self.r @ kron(self.r, H.I), self.r @ kron(self.I, H.m))
        rep.equal("hmodule.unit", self.r @ kron(self.I, H.u), self.I)
        return rep

    def __repr__(self):
        return f"HModule({self.name or '?'}, dim={self.dim})"


def validate_internal_hopf(H: InternalHopf) -> ValidationReport:
    return H.validate()


def _same_hopf(*mods):
    H = mods[0].hopf
    for M in mods[1:]:
        if M.hopf is not H:
            raise HopfMismatch("modules over different internal Hopf algebras")
    return H


def hom_witness(f: Matrix, M: HModule, N: HModule):
    """A witness that f: M -> N fails to be a morphism of V_H (A- or H-linearity), or None."""
    H = _same_hopf(M, N)
    w = is_morphism(f, M.carrier, N.carrier)
    if w is not None:
        return ("A", w)
    w = (f @ M.r).diff(N.r @ kron(f, H.I))
    return None if w is None else ("H", w)


def is_hlinear(f: Matrix, M: HModule, N: HModule) -> bool:
    return hom_witness(f, M, N) is None


# -- monoidal structure of V_H

def hmod_tensor(M: HModule, N: HModule) -> HModule:
    """(M (x) N) with (r_M (x) r_N)(id (x) sigma_{N,H} (x) id)(id (x) id (x) Delta_H)."""
    H = _same_hopf(M, N)
    # built transposed so that no (dim M N H H)-square factor is materialized
    rt = apply_kron([M.dim, braiding_matrix(N.carrier, H.carrier).T, H.dim], kron(M.r.T, N.r.T))
    r = apply_kron([M.dim * N.dim, H.Delta.T], rt).T
    name = f"({M.name}⊗{N.name})" if M.name and N.name else None
    return HModule(H, tensor_obj(M.carrier, N.carrier), r, name=name, validate=False)


def hmod_tensor_all(*mods: HModule) -> HModule:
    out = mods[0]
    for M in mods[1:]:
        out = hmod_tensor(out, M)
    return out


def hmod_dual_right(M: HModule) -> HModule:
    """M^v in V_H: (id (x) ev)(id (x) r_M (x) id)(coev (x) id_H (x) id)(sigma_{M^v,H})(id (x) S_H).

    The crossing is the one making ev and coev H-linear in a non-symmetric V.
    """
    H = M.hopf
    D, ev, coev = right_dual(M.carrier)
    T = braiding_matrix(D, H.carrier)
    r = (kron(D.I, ev.mat) @ kron_all(D.I, M.r, D.I) @ kron_all(coev.mat, H.I, D.I)
         @ T @ kron(D.I, H.S))
    return HModule(H, D, r, name=f"{M.name}^v" if M.name else None, validate=False)


def hmod_dual_left(M: HModule) -> HModule:
    """^vM in V_H: (ev (x) id)(id (x) r_M (x) id)(id (x) sigma^-1_{M,H} (x) id)(id (x) S_H^-1 (x) coev)."""
    H = M.hopf
    D, ev, coev = left_dual(M.carrier)
    B = braiding_inv_matrix(M.carrier, H.carrier)
    r = (kron(ev.mat, D.I) @ kron_all(D.I, M.r, D.I) @ kron_all(D.I, B, D.I)
         @ kron_all(D.I, H.S_inv, coev.mat))
    return HModule(H, D, r, name=f"^v{M.name}" if M.name else None, validate=False)


def hmod_double_dual(M: HModule) -> HModule:
    return hmod_dual_right(hmod_dual_right(M))


def check_hmod_duals(M: HModule) -> ValidationReport:
    """Module axioms of both duals, H-linearity of their ev/coev and the snake identities."""
    H = M.hopf
    rep = ValidationReport(f"V_H duals of {M.name or 'M'}")
    one = H.trivial
    for side, fn in (("right", hmod_dual_right), ("left", hmod_dual_left)):
        D = fn(M)
        for c in D.validate().checks:
            rep.flag(f"vh_dual.{side}.{c.name}", c.ok, c.witness)
        ev, coev = _canonical_pairing(H.field, M.dim)
        if side == "right":
            src_ev, tgt_coev = hmod_tensor(M, D), hmod_tensor(D, M)
            rep.equal(f"vh_dual.{side}.snake_object", kron(ev, M.I) @ kron(M.I, coev), M.I)
            rep.equal(f"vh_dual.{side}.snake_dual", kron(D.I, ev) @ kron(coev, D.I), D.I)
        else:
            src_ev, tgt_coev = hmod_tensor(D, M), hmod_tensor(M, D)
            rep.equal(f"vh_dual.{side}.snake_object", kron(M.I, ev) @ kron(coev, M.I), M.I)
            rep.equal(f"vh_dual.{side}.snake_dual", kron(ev, D.I) @ kron(D.I, coev), D.I)
        rep.flag(f"vh_dual.{side}.ev_hlinear", hom_witness(ev, src_ev, one) is None)
        rep.flag(f"vh_dual.{side}.coev_hlinear", hom_witness(coev, one, tgt_coev) is None)
    return rep


def _canonical_pairing(F, n):
    from .ambient import _pairing

    return _pairing(F, n)


# -- coend elements acting on modules

def apply_element(a: Matrix, M: HModule) -> Matrix:
    """a^#_M = r_M (id_M (x) a) delta_M for a: C -> H."""
    a = _mat(a)
    H = M.hopf
    if a.shape != (H.dim, H.coend.dim):
        raise SourceMismatch(f"expected a map C -> H of shape {(H.dim, H.coend.dim)}, got {a.shape}")
    return M.r @ H.coend.sigma1(a, M.carrier)


def element_from_endo(H: InternalHopf, phi_F: Matrix) -> Matrix:
    """The a: C -> H with a^#_{F(A)} = phi_F, for an endomorphism of the free module natural in V_H."""
    A = H.ambient
    iota = kron(A.I, H.u)                      # A -> A (x) H, x -> x (x) 1
    a = H.coend.factorize1(phi_F @ iota, H.dim)
    w = apply_element(a, H.F).diff(phi_F)
    if w is not None:
        raise NotNatural(f"endomorphism of F(A) is not of the form a^# (witness {w})")
    return a


def factorize1_param(H: InternalHopf, T_A: Matrix, d_in: int, d_out: int) -> Matrix:
    return H.coend.factorize1_param(T_A, d_in, d_out)


# -- braidings on V_H from a coend R-matrix

def vh_braiding(H: InternalHopf, R: Matrix, M: HModule, N: HModule) -> Matrix:
    """sigma^R_{M,N}: M (x) N -> N (x) M.

    (r_N (x) r_M)(id_N (x) sigma_{M,H} (x) id_H)(sigma_{M,N} (x) id_HH)(id_MN (x) R)
    (id_M (x) sigma_{C,N} (x) id_C)(delta_M (x) delta_N); the first output leg of R acts on N.
    """
    Mc, Nc, h = M.carrier, N.carrier, H.dim
    X = H.coend.sigma2_pre(Mc, Nc)
    X = apply_kron([M.dim * N.dim, R], X)
    X = apply_kron([braiding_matrix(Mc, Nc), h * h], X)
    X = apply_kron([N.dim, braiding_matrix(Mc, H.carrier), h], X)
    return apply_kron([N.r, M.r], X)


def vh_mu(H: InternalHopf, R: Matrix, M: HModule) -> Matrix:
    """The Drinfeld morphism nu_M: M -> M^vv of V_H with braiding sigma^R (double dual on the space of M)."""
    D = hmod_dual_right(M)
    ev, coev = _canonical_pairing(H.field, M.dim)
    return kron(M.I, ev) @ kron(M.I, vh_braiding(H, R, D, M)) @ kron(coev, M.I)


# -- the coend of V_H

class ZObject(CoendCalculus):
    """Z(H) = ^vH (x) C, the coend of V_H, with coaction
    delta~_M = (r_M (x) id)(id_M (x) coev^l_H (x) id_C) delta_M.

    The H-action on Z(H) is the unique one making delta~ on the free module
    H-linear; it is solved for and then checked against the module axioms.
    Braided structure (m_Z, omega_Z) needs an R-matrix for the braiding of V_H.
    """

    def __init__(self, H: InternalHopf, R: Matrix | None = None):
        self.hopf = H
        self.field = H.field
        self.R = R
        cd = H.coend
        self._dualH, _, coevl = left_dual(H.carrier)
        self._coevl = coevl.mat
        carrier = tensor_obj(self._dualH, cd.C)
        self.carrier = carrier
        self.C = HModule(H, carrier, self._solve_action(), name="Z(H)", validate=False)
        rep = self.C.validate()
        if not rep.ok:
            raise TranscriptionFailure(f"Z(H) action fails {[c.name for c in rep.failures()]}")
        self.z_action = self.C.r

    def delta(self, M: HModule) -> Matrix:
        cd = self.hopf.coend
        return (kron(M.r, Matrix.identity(self.field, self.carrier.dim))
                @ kron_all(M.I, self._coevl, cd.I) @ cd.delta(M.carrier))

    def delta_tilde(self, M: HModule) -> Matrix:
        return self.delta(M)

    def _solve_action(self) -> Matrix:
        """Solve delta~_F r_F = (r_F (x) z)(id_F (x) sigma_{Z,H} (x) id_H)(id (x) Delta_H)(delta~_F (x) id_H) for z."""
        H = self.hopf
        F = H.F
        dZ, dH = self.carrier.dim, H.dim
        dt = self.delta(F)
        pre = (kron_all(F.I, braiding_matrix(self.carrier, H.carrier), H.I)
               @ kron(Matrix.identity(self.field, F.dim * dZ), H.Delta) @ kron(dt, H.I))

        def eq(x):
            z = Matrix(self.field, x.a.reshape(dZ, dZ * dH).copy(), _trusted=True)
            return _flatten(kron(F.r, z) @ pre)

        sol = solve_affine(linear_map_matrix(eq, dZ * dZ * dH, self.field), _flatten(dt @ F.r))
        if sol is None:
            raise TranscriptionFailure("no H-action on ^vH (x) C makes the coaction H-linear")
        if sol.dim:
            raise TranscriptionFailure(f"the H-action on Z(H) is not unique ({sol.dim} parameters)")
        return Matrix(self.field, sol.particular.a.reshape(dZ, dZ * dH).copy(), _trusted=True)

    # category hooks
    def tensor(self, M, N):
        return hmod_tensor(M, N)

    def braid(self, M, N):
        if self.R is None:
            raise ValueError("braided structure of Z(H) needs an R-matrix")
        return vh_braiding(self.hopf, self.R, M, N)

    def braid_inv(self, M, N):
        return invert(self.braid(M, N))

    def is_map(self, f, M, N):
        return hom_witness(f, M, N)

    @property
    def unit_object(self):
        return self.hopf.trivial

    @property
    def generator(self):
        return self.hopf.F

    @property
    def base_point(self):
        return self.hopf.base_point

    def check(self, samples=()) -> ValidationReport:
        """Module axioms, H-linearity of the coaction and dinaturality on sampled V_H morphisms."""
        H = self.hopf
        rep = ValidationReport("Z(H)")
        rep.extend(self.C.validate())
        for M in (H.F, H.regular, H.trivial, *[s for s in samples if isinstance(s, HModule)]):
            rep.flag(f"zh.coaction_hlinear[{M.name}]",
                     hom_witness(self.delta(M), M, hmod_tensor(M, self.C)) is None)
        for f, M, N in [s for s in samples if isinstance(s, tuple)]:
            rep.flag(f"zh.dinatural[{M.name}->{N.name}]", self.dinaturality_witness(f, M, N) is None)
        return rep


def _flatten(M: Matrix) -> Matrix:
    return Matrix(M.field, M.a.reshape(-1, 1).copy(), _trusted=True)


def coend_of_VH(H: InternalHopf, R: Matrix | None = None) -> ZObject:
    return ZObject(H, R)


def factorizability_pairing(H: InternalHopf, R) -> dict:
    """The canonical pairing of Z(H) for the braiding induced by R and whether it is nondegenerate."""
    Z = ZObject(H, _mat(R))
    Z.derive_structure()
    return {"pairing": Z.omega, "nondegenerate": Z.nondegenerate(), "coend": Z}


# -- factories

def unit_hopf(cd: CoendData) -> InternalHopf:
    one = Matrix.identity(cd.field, 1)
    return InternalHopf(cd, cd.ambient.unit_object, one, one, one, one, one, one, name="1")


def coend_hopf(cd: CoendData) -> InternalHopf:
    cd.derive_structure()
    return InternalHopf(cd, cd.C, cd.m, cd.u, cd.Delta, cd.eps, cd.S, cd.S_inv, name="C")


def exterior_line(cd: CoendData, odd: bool = True) -> InternalHopf:
    """Lambda(theta) in sVec: basis 1, theta with theta^2 = 0 and theta primitive.

    With theta even the braided bialgebra axiom fails; ``validate`` is then skipped
    so the failing report can be inspected.
    """
    from .fixtures import super_space

    A, F = cd.ambient, cd.field
    if A.dim != 2:
        raise DimensionMismatch("the exterior line needs the sVec ambient (k Z/2)")
    X = super_space(A, 1, 1, "Λθ") if odd else super_space(A, 2, 0, "Λθ_even")
    one, z, mone = F.one, F.zero, F.neg(F.one)
    m = Matrix.from_rows(F, [[one, z, z, z], [z, one, one, z]])
    u = Matrix.column(F, [1, 0])
    D = Matrix.from_rows(F, [[one, z], [z, one], [z, one], [z, z]])
    e = Matrix.row(F, [1, 0])
    S = Matrix.from_rows(F, [[one, z], [z, mone]])
    return InternalHopf(cd, X, m, u, D, e, S, S, name="Λ(θ)" if odd else "Λ(θ) even", validate=odd)


def braided_line(cd: CoendData, X: VObject, name="k[x]/x^N") -> InternalHopf:
    """The Nichols algebra of a one dimensional object X: k[x]/(x^N) with x primitive.

    q is the scalar of sigma_{X,X} and N the least n with (n)_q = 0. Then
    Delta(x^n) = sum_k binom(n,k)_q x^k (x) x^(n-k) and S(x^n) = (-1)^n q^(n(n-1)/2) x^n.
    """
    A, F = cd.ambient, cd.field
    if X.dim != 1:
        raise DimensionMismatch("braided_line needs a one dimensional object")
    q = braiding_matrix(X, X).a[0, 0]
    qint = [F.zero]                               # (n)_q for n = 0, 1, ...
    power = F.one
    while True:
        qint.append(F.add(qint[-1], power))
        power = F.mul(power, q)
        if F.is_zero(qint[-1]) or len(qint) > 64:
            break
    if not F.is_zero(qint[-1]):
        raise DimensionMismatch("q is not a root of unity of small order; the Nichols algebra is infinite")
    N = len(qint) - 1

    def qfact(n):
        out = F.one
        for k in range(1, n + 1):
            out = F.mul(out, qint[k])
        return out

    def qbinom(n, k):
        return F.div(qfact(n), F.mul(qfact(k), qfact(n - k)))

    def qpow(e):
        out = F.one
        for _ in range(e):
            out = F.mul(out, q)
        return out

    # carrier: direct sum of X^(x)a, a < N
    chars = [X.rho(A.basis(k)).a[0, 0] for k in range(A.dim)]
    mats = []
    for k in range(A.dim):
        diag = [F.one]
        for a in range(1, N):
            diag.append(F.mul(diag[-1], chars[k]))
        mats.append(Matrix.from_rows(F, [[diag[i] if i == j else F.zero for j in range(N)] for i in range(N)]))
    H = VObject.from_actions(A, mats, name=name)
    m, D, S = F.zeros((N, N * N)), F.zeros((N * N, N)), F.zeros((N, N))
    for a in range(N):
        for b in range(N):
            if a + b < N:
                m[a + b, a * N + b] = F.one
        for k in range(a + 1):
            D[k * N + (a - k), a] = qbinom(a, k)
        sign = F.one if a % 2 == 0 else F.neg(F.one)
        S[a, a] = F.mul(sign, qpow(a * (a - 1) // 2))
    M = lambda x: Matrix(F, x, _trusted=True)
    u = Matrix.unit_column(F, N, 0)
    e = Matrix.unit_column(F, N, 0).T
    return InternalHopf(cd, H, M(m), u, M(D), e, M(S), name=name)


def classical_hopf(cd: CoendData, data, name="H") -> InternalHopf:
    """An ordinary Hopf algebra over k as a Hopf algebra in V = Vec (requires A = k)."""
    A = cd.ambient
    if A.dim != 1:
        raise DimensionMismatch("classical Hopf algebras embed only over the trivial ambient")
    n = data.dim
    X = A.module([Matrix.identity(cd.field, n)])
    X.name = name
    return InternalHopf(cd, X, data.m, data.u, data.delta, data.eps, data.S, data.S_inv, name=name)


__all__ = [
    "InternalHopf", "HModule", "ZObject", "validate_internal_hopf", "hom_witness", "is_hlinear",
    "hmod_tensor", "hmod_tensor_all", "hmod_dual_right", "hmod_dual_left", "hmod_double_dual",
    "check_hmod_duals", "apply_element", "element_from_endo", "factorize1_param", "vh_braiding", "vh_mu",
    "coend_of_VH", "factorizability_pairing", "unit_hopf", "coend_hopf", "exterior_line", "braided_line", "classical_hopf",
]
