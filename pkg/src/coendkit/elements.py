"""Coend elements a: C -> H, coend R-matrices and the special elements built from them.

Every predicate returns ``(ok, witness)`` where witness names the failing
equation and the first differing basis index. Equations between natural
families on V_H are evaluated on the free module F(A) (or its tensor powers),
which determines them.

Convolution is a * b = m_H (a (x) b) Delta_C. Acting on modules it reverses
order: apply(a * b) = apply(b) o apply(a).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ambient import kappa_gamma, mu_bar_matrix, mu_matrix
from .errors import (
    DefiningPropertyFailure, DimensionMismatch, HopfMismatch, NotBalanced, NotInvertible, NotNatural, NotPivotal,
)
from .internal_hopf import (
    HModule, InternalHopf, apply_element, element_from_endo, hmod_double_dual, hmod_dual_left,
    hmod_dual_right, hmod_tensor, hom_witness, vh_braiding, vh_mu,
)
from .linalg import Matrix, invert, kron, kron_all, linear_map_matrix, solve_affine
from .report import ValidationReport


class CoendElement:
    """A morphism C -> H in V."""

    __slots__ = ("hopf", "mat")

    def __init__(self, hopf: InternalHopf, mat: Matrix):
        mat = getattr(mat, "mat", mat)
        if mat.shape != (hopf.dim, hopf.coend.dim):
            raise DimensionMismatch(f"coend element of shape {mat.shape}, expected {(hopf.dim, hopf.coend.dim)}")
        self.hopf, self.mat = hopf, mat

    def linearity_witness(self):
        from .ambient import is_morphism

        return is_morphism(self.mat, self.hopf.coend.C, self.hopf.carrier)

    def __mul__(self, other):
        return conv_product(self, other)

    def __eq__(self, other):
        return isinstance(other, CoendElement) and self.hopf is other.hopf and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def key(self):
        return tuple(self.mat.to_strings()[i][j] for i in range(self.mat.rows) for j in range(self.mat.cols))

    def __repr__(self):
        return f"CoendElement({self.mat.to_strings()})"


class CoendRMatrix:
    """A morphism C (x) C -> H (x) H in V, read through sigma^R_{M,N}."""

    __slots__ = ("hopf", "mat")

    def __init__(self, hopf: InternalHopf, mat: Matrix):
        mat = getattr(mat, "mat", mat)
        c, h = hopf.coend.dim, hopf.dim
        if mat.shape != (h * h, c * c):
            raise DimensionMismatch(f"R-matrix of shape {mat.shape}, expected {(h * h, c * c)}")
        self.hopf, self.mat = hopf, mat

    def __eq__(self, other):
        return isinstance(other, CoendRMatrix) and self.hopf is other.hopf and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"CoendRMatrix({self.mat.shape})"


@dataclass
class ElementReport:
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def set(self, name, result):
        ok, w = result
        self.flags[name] = bool(ok)
        if not ok:
            self.witnesses[name] = w
        return ok

    def consistent(self) -> bool:
        f = self.flags
        if f.get("ribbon") and f.get("balanced") is False:
            return False
        if f.get("pivotal") and f.get("twisted_grouplike") is False:
            return False
        return True

    def to_dict(self):
        return {"flags": dict(self.flags), "witnesses": {k: _jsonable(v) for k, v in self.witnesses.items()}}


def _jsonable(w):
    if isinstance(w, tuple):
        return [_jsonable(x) for x in w]
    return w


def _el(H, a) -> CoendElement:
    if isinstance(a, CoendElement):
        if a.hopf is not H:
            raise HopfMismatch("element of a different internal Hopf algebra")
        return a
    return CoendElement(H, a)


def _cmp(name, lhs: Matrix, rhs: Matrix):
    w = lhs.diff(rhs)
    return (w is None, None if w is None else (name, w))


def _both(*results):
    for ok, w in results:
        if not ok:
            return ok, w
    return True, None


# -- convolution monoid

def conv_product(a: CoendElement, b: CoendElement) -> CoendElement:
    """a * b = m_H (a (x) b) Delta_C."""
    H = a.hopf
    b = _el(H, b)
    return CoendElement(H, H.m @ kron(a.mat, b.mat) @ H.coend.Delta)


def conv_product_alt(a: CoendElement, b: CoendElement) -> CoendElement:
    """The same product through the monad: factorize (id (x) m_H)(Sigma(a) (x) id_H) Sigma(b) on A."""
    H = a.hopf
    b = _el(H, b)
    cd, A = H.coend, H.ambient.regular
    comp = kron(A.I, H.m) @ kron(cd.sigma1(a.mat, A), H.I) @ cd.sigma1(b.mat, A)
    return CoendElement(H, cd.factorize1(comp, H.dim))


def conv_unit(H: InternalHopf) -> CoendElement:
    return CoendElement(H, H.u @ H.coend.eps)


def conv_power(a: CoendElement, k: int) -> CoendElement:
    if k < 0:
        return conv_power(conv_inverse(a), -k)
    out = conv_unit(a.hopf)
    for _ in range(k):
        out = conv_product(out, a)
    return out


def conv_inverse(a: CoendElement) -> CoendElement:
    """Solve a * x = unit (linear in x) and verify x * a = unit."""
    H = a.hopf
    cd = H.coend
    h, c = H.dim, cd.dim
    F = H.field

    def lhs(v):
        x = Matrix(F, v.a.reshape(h, c).copy(), _trusted=True)
        return _col(H.m @ kron(a.mat, x) @ cd.Delta)

    sol = solve_affine(linear_map_matrix(lhs, h * c, F), _col(conv_unit(H).mat))
    if sol is None:
        raise NotInvertible("element has no convolution inverse")
    x = CoendElement(H, Matrix(F, sol.particular.a.reshape(h, c).copy(), _trusted=True))
    if conv_product(x, a).mat.diff(conv_unit(H).mat) is not None:
        raise NotInvertible("convolution inverse is one-sided")
    return x


def is_conv_invertible(a: CoendElement) -> bool:
    try:
        conv_inverse(a)
        return True
    except NotInvertible:
        return False


def _col(M: Matrix) -> Matrix:
    return Matrix(M.field, M.a.reshape(-1, 1).copy(), _trusted=True)


# -- counit-valued convolution (Hom(C, 1))

def conv_product_scalar(f: Matrix, g: Matrix, cd) -> Matrix:
    return kron(f, g) @ cd.Delta


def conv_inverse_scalar(f: Matrix, cd) -> Matrix:
    F, c = cd.field, cd.dim

    def lhs(v):
        return _col(kron(f, Matrix(F, v.a.reshape(1, c).copy(), _trusted=True)) @ cd.Delta)

    sol = solve_affine(linear_map_matrix(lhs, c, F), _col(cd.eps))
    if sol is None:
        raise NotInvertible("scalar coend element has no convolution inverse")
    x = Matrix(F, sol.particular.a.reshape(1, c).copy(), _trusted=True)
    if (kron(x, f) @ cd.Delta).diff(cd.eps) is not None:
        raise NotInvertible("scalar inverse is one-sided")
    return x


# -- antipode on Hom(C, H)

def antipode_S(a: CoendElement) -> CoendElement:
    """S(a) with S(a)^#_M = (a^#_{M^v})^T, M^v the right dual in V_H."""
    H = a.hopf
    phi = apply_element(a.mat, hmod_dual_right(H.F)).T
    return CoendElement(H, element_from_endo(H, phi))


def antipode_S_inv(a: CoendElement) -> CoendElement:
    """S^-1(a) with S^-1(a)^#_M = (a^#_{^vM})^T, ^vM the left dual in V_H."""
    H = a.hopf
    phi = apply_element(a.mat, hmod_dual_left(H.F)).T
    return CoendElement(H, element_from_endo(H, phi))


def antipode_closed_form(a: CoendElement) -> CoendElement:
    """S_H o a o S_C^-1; agrees with :func:`antipode_S` (checked by the tests)."""
    H = a.hopf
    return CoendElement(H, H.S @ a.mat @ H.coend.S_inv)


# -- predicates on single elements

def is_central(a: CoendElement):
    """a^# commutes with the H-action: a^#_{F(A)} is a morphism of V_H."""
    H = a.hopf
    w = hom_witness(apply_element(a.mat, H.F), H.F, H.F)
    return (w is None, None if w is None else ("central", w))


def is_central_coend_form(a: CoendElement):
    """m_H (a (x) id_H) = m_H (id_H (x) a m_C)(sigma_{C,H} (x) id_C)(id_C (x) delta_H)."""
    H = a.hopf
    cd = H.coend
    lhs = H.m @ kron(a.mat, H.I)
    rhs = (H.m @ kron(H.I, a.mat @ cd.m) @ kron(cd.braid(cd.C, H.carrier), cd.I)
           @ kron(cd.I, cd.delta(H.carrier)))
    return _cmp("central.coend_form", lhs, rhs)


def is_twisted_grouplike(a: CoendElement, with_counit=True):
    """Delta_H a m_C = a (x) a and eps_H a u_C = 1.

    The counit law follows from the first for nonzero a, but the zero morphism
    satisfies comultiplicativity alone, so it is kept in the predicate.
    """
    H = a.hopf
    cd = H.coend
    res = _cmp("twisted_grouplike.comultiplicative", H.Delta @ a.mat @ cd.m, kron(a.mat, a.mat))
    if with_counit:
        res = _both(res, _cmp("twisted_grouplike.counit", H.eps @ a.mat @ cd.u, Matrix.identity(H.field, 1)))
    return res


def is_grouplike(a: CoendElement, with_counit=True):
    """Delta_H a m_C = (a (x) a) B, B the braid switch of C (identity when V is symmetric)."""
    H = a.hopf
    cd = H.coend
    res = _cmp("grouplike.comultiplicative", H.Delta @ a.mat @ cd.m, kron(a.mat, a.mat) @ cd.braid_switch)
    if with_counit:
        res = _both(res, _cmp("grouplike.counit", H.eps @ a.mat @ cd.u, Matrix.identity(H.field, 1)))
    return res


def semantic_grouplike(a: CoendElement):
    """a^#_{F (x) F} = a^#_F (x) a^#_F and a^#_1 = id_1."""
    H = a.hopf
    F = H.F
    FF = hmod_tensor(F, F)
    t = apply_element(a.mat, F)
    res = _cmp("grouplike.semantic", apply_element(a.mat, FF), kron(t, t))
    return _both(res, _cmp("grouplike.semantic_unit", apply_element(a.mat, H.trivial), H.trivial.I))


def semantic_twisted_grouplike(a: CoendElement):
    """a^#_{F (x) F} = (a^#_F (x) a^#_F) sigma_{F,F} sigma_{F,F} with the braiding of V, and a^#_1 = id_1."""
    from .ambient import braiding_matrix

    H = a.hopf
    F = H.F
    FF = hmod_tensor(F, F)
    t = apply_element(a.mat, F)
    s = braiding_matrix(F.carrier, F.carrier)
    res = _cmp("twisted_grouplike.semantic", apply_element(a.mat, FF), kron(t, t) @ s @ s)
    return _both(res, _cmp("twisted_grouplike.semantic_unit", apply_element(a.mat, H.trivial), H.trivial.I))


def pivotal_map(p: CoendElement, M: HModule) -> Matrix:
    """phi_M = mu_M p^#_M: M -> M^vv (double dual on the space of M)."""
    return mu_matrix(M.carrier) @ apply_element(p.mat, M)


def is_pivotal(p: CoendElement):
    """Twisted grouplike, and mu_F p^#_F: F -> F^vv is a morphism of V_H."""
    H = p.hopf
    ok, w = is_twisted_grouplike(p)
    if not ok:
        return ok, w
    F = H.F
    w = hom_witness(pivotal_map(p, F), F, hmod_double_dual(F))
    return (w is None, None if w is None else ("pivotal.intertwines_S2", w))


# -- R-matrices

def braiding_from_R(R: CoendRMatrix, M: HModule, N: HModule) -> Matrix:
    return vh_braiding(R.hopf, R.mat, M, N)


def _double_braiding(R: CoendRMatrix, M: HModule, N: HModule) -> Matrix:
    return braiding_from_R(R, N, M) @ braiding_from_R(R, M, N)


def validate_R(R: CoendRMatrix) -> ValidationReport:
    """Linearity, H-linearity of sigma^R, both hexagons and the unit laws.

    Invertibility of sigma^R is reported informationally: it follows from the
    other axioms for Hopf H. The unit laws are what exclude R = 0.
    """
    H = R.hopf
    F, one = H.F, H.trivial
    rep = ValidationReport("coend R-matrix")
    from .ambient import is_morphism, tensor_obj

    CC = tensor_obj(H.coend.C, H.coend.C)
    HH = tensor_obj(H.carrier, H.carrier)
    rep.flag("R.linear", is_morphism(R.mat, CC, HH) is None)
    s = braiding_from_R(R, F, F)
    w = hom_witness(s, hmod_tensor(F, F), hmod_tensor(F, F))
    rep.flag("R.hlinear", w is None, w)
    rep.extend(_hexagons(R, F, F, F))
    rep.equal("R.unit_left", braiding_from_R(R, one, F), F.I)
    rep.equal("R.unit_right", braiding_from_R(R, F, one), F.I)
    try:
        invert(s)
        rep.flag("R.invertible", True, informational=True)
    except NotInvertible:
        rep.flag("R.invertible", False, informational=True)
    return rep


def _hexagons(R, M, N, P) -> ValidationReport:
    rep = ValidationReport("hexagons")
    rep.equal("R.hexagon_right", braiding_from_R(R, M, hmod_tensor(N, P)),
              kron(N.I, braiding_from_R(R, M, P)) @ kron(braiding_from_R(R, M, N), P.I))
    rep.equal("R.hexagon_left", braiding_from_R(R, hmod_tensor(M, N), P),
              kron(braiding_from_R(R, M, P), N.I) @ kron(M.I, braiding_from_R(R, N, P)))
    return rep


def check_braiding_on(R: CoendRMatrix, mods) -> ValidationReport:
    """H-linearity, invertibility and hexagons of sigma^R on the given modules."""
    rep = ValidationReport("induced braiding")
    for M in mods:
        for N in mods:
            s = braiding_from_R(R, M, N)
            tag = f"[{M.name},{N.name}]"
            rep.flag("braiding.hlinear" + tag, hom_witness(s, hmod_tensor(M, N), hmod_tensor(N, M)) is None)
            try:
                invert(s)
                rep.flag("braiding.invertible" + tag, True)
            except NotInvertible:
                rep.flag("braiding.invertible" + tag, False)
    for M in mods:
        for N in mods:
            for P in mods:
                rep.extend(_hexagons(R, M, N, P), prefix=f"[{M.name},{N.name},{P.name}]")
    return rep


def _R_readout(H: InternalHopf) -> Matrix:
    """Q: A (x) A (x) H (x) H -> F (x) F, the tail of sigma^R_{F,F} restricted to generators; invertible."""
    from .ambient import braiding_matrix

    F = H.F
    A = H.ambient.regular
    iota = kron(A.I, H.u)
    Q = (kron(F.r, F.r) @ kron_all(F.I, braiding_matrix(F.carrier, H.carrier), H.I)
         @ kron(braiding_matrix(F.carrier, F.carrier), Matrix.identity(H.field, H.dim * H.dim))
         @ kron_all(iota, iota, Matrix.identity(H.field, H.dim * H.dim)))
    return Q


def R_from_braiding(H: InternalHopf, sigma_FF: Matrix) -> CoendRMatrix:
    """Recover R from the component sigma_{F(A),F(A)} of a braiding on V_H."""
    A = H.ambient.regular
    iota = kron(A.I, H.u)
    Q_inv = invert(_R_readout(H))
    T = Q_inv @ sigma_FF @ kron(iota, iota)
    return CoendRMatrix(H, H.coend.factorize2(T, H.dim * H.dim))


def reverse_R(R: CoendRMatrix) -> CoendRMatrix:
    """R-bar inducing the reverse braiding sigma^-1_{N,M}; checked on the free pair."""
    H = R.hopf
    F = H.F
    Rb = R_from_braiding(H, invert(braiding_from_R(R, F, F)))
    w = (braiding_from_R(Rb, F, F) @ braiding_from_R(R, F, F)).diff(Matrix.identity(H.field, F.dim * F.dim))
    if w is not None:
        raise NotNatural(f"reverse R does not invert the braiding (witness {w})")
    return Rb


# -- balanced and ribbon

def is_balanced(t: CoendElement, R: CoendRMatrix):
    """CT1 central, CT2 counit and CT3 t^#_{F (x) F} = (t^#_F (x) t^#_F) sigma^R sigma^R.

    CT2 is implied by CT3 except for t = 0, which it excludes.
    """
    ok, w = is_central(t)
    if not ok:
        return False, ("CT1", w)
    ok, w = balanced_counit(t)
    if not ok:
        return ok, w
    H = t.hopf
    F = H.F
    th = apply_element(t.mat, F)
    lhs = apply_element(t.mat, hmod_tensor(F, F))
    rhs = kron(th, th) @ _double_braiding(R, F, F)
    w = lhs.diff(rhs)
    return (w is None, None if w is None else ("CT3", w))


def balanced_counit(t: CoendElement):
    """CT2: eps_H t u_C = 1."""
    H = t.hopf
    return _cmp("CT2", H.eps @ t.mat @ H.coend.u, Matrix.identity(H.field, 1))


def is_ribbon(t: CoendElement, R: CoendRMatrix):
    ok, w = is_balanced(t, R)
    if not ok:
        return ok, w
    return _cmp("CT4", antipode_S(t).mat, t.mat)


# -- Drinfeld element and q, c

def vh_nu(R: CoendRMatrix, M: HModule) -> Matrix:
    return vh_mu(R.hopf, R.mat, M)


def drinfeld_u(R: CoendRMatrix, samples=()) -> CoendElement:
    """The element u with u^#_M = mu_bar_M nu_M; verified on F, the regular and trivial modules and samples."""
    H = R.hopf
    F = H.F
    u = CoendElement(H, element_from_endo(H, mu_bar_matrix(F.carrier) @ vh_nu(R, F)))
    for M in (H.regular, H.trivial, *samples):
        w = apply_element(u.mat, M).diff(mu_bar_matrix(M.carrier) @ vh_nu(R, M))
        if w is not None:
            raise DefiningPropertyFailure(f"u^# differs from mu_bar nu on {M.name} at {w}")
    return u


def c0_element(H: InternalHopf) -> Matrix:
    """c_0: C -> 1 with c_0^# = gamma = mu^! mu of V."""
    cd = H.coend
    return cd.factorize1(kappa_gamma(H.ambient.regular)["gamma"], 1)


def q_c_elements(R: CoendRMatrix, u: CoendElement | None = None) -> dict:
    H = R.hopf
    cd = H.coend
    u = u or drinfeld_u(R)
    ubar = conv_inverse(u)
    c0 = c0_element(H)
    c0bar = conv_inverse_scalar(c0, cd)
    q = CoendElement(H, kron(conv_product(u, antipode_S(ubar)).mat, c0bar) @ cd.Delta)
    c = CoendElement(H, kron(conv_product(u, antipode_S(u)).mat, c0) @ cd.Delta)
    return {"u": u, "u_inv": ubar, "q_mu": q, "c_mu": c, "c0": c0, "c0_inv": c0bar}


def bal_piv_bijection_check(t: CoendElement, R: CoendRMatrix, qc: dict | None = None) -> dict:
    """p = t u; pivotal check and the two ribbon criteria p^2 = q_mu and t^-2 = c_mu."""
    qc = qc or q_c_elements(R)
    p = conv_product(t, qc["u"])
    fwd, _ = is_pivotal(p)
    p2 = conv_product(p, p).mat.diff(qc["q_mu"].mat) is None
    try:
        tm2 = conv_inverse(conv_product(t, t)).mat.diff(qc["c_mu"].mat) is None
    except NotInvertible:
        tm2 = False
    rib, _ = is_ribbon(t, R)
    return {"p": p, "forward_ok": fwd, "ribbon": rib,
            "ribbon_criteria": {"p_squared_eq_q": p2, "t_minus2_eq_c": tm2}}


def balanced_from_pivotal(p: CoendElement, R: CoendRMatrix, u: CoendElement | None = None) -> CoendElement:
    """Inverse of t -> t u: p -> p u^-1."""
    u = u or drinfeld_u(R)
    return conv_product(p, conv_inverse(u))


# -- structures on V_H from elements

def pivotal_structure_from_element(p: CoendElement, M: HModule) -> Matrix:
    phi = pivotal_map(p, M)
    w = hom_witness(phi, M, hmod_double_dual(M))
    if w is not None:
        raise NotPivotal(f"phi_M is not H-linear on {M.name} (witness {w})")
    return phi


def check_pivotal_monoidal(p: CoendElement, M: HModule, N: HModule):
    """phi_{M (x) N} = phi_M (x) phi_N under (M (x) N)^vv = M^vv (x) N^vv on the same space."""
    return _cmp("pivotal.monoidal", pivotal_map(p, hmod_tensor(M, N)),
                kron(pivotal_map(p, M), pivotal_map(p, N)))


def pivotal_from_structure(H: InternalHopf, phi_F: Matrix) -> CoendElement:
    """Inverse direction: p^#_F = mu_F^-1 phi_F."""
    return CoendElement(H, element_from_endo(H, invert(mu_matrix(H.F.carrier)) @ phi_F))


def twist_from_element(t: CoendElement, M: HModule, R: CoendRMatrix | None = None) -> Matrix:
    theta = apply_element(t.mat, M)
    w = hom_witness(theta, M, M)
    if w is not None:
        raise NotBalanced(f"theta_M is not H-linear on {M.name} (witness {w})")
    if R is not None:
        MM = hmod_tensor(M, M)
        w = apply_element(t.mat, MM).diff(kron(theta, theta) @ _double_braiding(R, M, M))
        if w is not None:
            raise NotBalanced(f"balancing law fails on {M.name} (witness {w})")
    return theta


def twist_from_structure(H: InternalHopf, theta_F: Matrix) -> CoendElement:
    return CoendElement(H, element_from_endo(H, theta_F))


# -- parameter spaces

def linear_maps_basis(X, Y) -> list:
    """A basis of Hom_V(X, Y), the A-linear maps, as matrices."""
    from .linalg import nullspace

    F = X.field
    A = X.ambient
    rows, cols = Y.dim, X.dim

    def eq(v):
        f = Matrix(F, v.a.reshape(rows, cols).copy(), _trusted=True)
        return _col(f @ X.action - Y.action @ kron(f, A.I))

    L = linear_map_matrix(eq, rows * cols, F)
    return [Matrix(F, k.a.reshape(rows, cols).copy(), _trusted=True) for k in nullspace(L)]


def element_space(H: InternalHopf) -> list:
    return [CoendElement(H, b) for b in linear_maps_basis(H.coend.C, H.carrier)]


def r_matrix_space(H: InternalHopf) -> list:
    from .ambient import tensor_obj

    C = H.coend.C
    return [CoendRMatrix(H, b) for b in linear_maps_basis(tensor_obj(C, C), tensor_obj(H.carrier, H.carrier))]


def combine(basis, coeffs, cls=None):
    """sum_k coeffs[k] basis[k] for CoendElement or CoendRMatrix bases."""
    H = basis[0].hopf
    acc = basis[0].mat.scale(coeffs[0])
    for b, c in zip(basis[1:], coeffs[1:]):
        acc = acc + b.mat.scale(c)
    return (cls or type(basis[0]))(H, acc)


# -- full report

def element_report(a: CoendElement, R: CoendRMatrix | None = None) -> ElementReport:
    rep = ElementReport()
    rep.set("central", is_central(a))
    rep.set("grouplike", is_grouplike(a))
    rep.set("twisted_grouplike", is_twisted_grouplike(a))
    rep.set("pivotal", is_pivotal(a))
    if R is not None:
        rep.set("balanced", is_balanced(a, R))
        rep.set("ribbon", is_ribbon(a, R))
    return rep


__all__ = [
    "CoendElement", "CoendRMatrix", "ElementReport", "conv_product", "conv_product_alt", "conv_unit", "conv_power",
    "conv_inverse", "is_conv_invertible", "conv_product_scalar", "conv_inverse_scalar", "antipode_S",
    "antipode_S_inv", "antipode_closed_form", "is_central", "is_central_coend_form", "is_twisted_grouplike",
    "is_grouplike", "semantic_grouplike", "semantic_twisted_grouplike", "pivotal_map", "is_pivotal",
    "braiding_from_R", "validate_R", "check_braiding_on", "R_from_braiding", "reverse_R", "is_balanced",
    "balanced_counit", "is_ribbon", "vh_nu", "drinfeld_u", "c0_element", "q_c_elements", "bal_piv_bijection_check",
    "balanced_from_pivotal", "pivotal_structure_from_element", "check_pivotal_monoidal", "pivotal_from_structure",
    "twist_from_element", "twist_from_structure", "element_report", "linear_maps_basis", "element_space",
    "r_matrix_space", "combine",
]
