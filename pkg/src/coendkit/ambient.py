"""The base braided rigid category V: right modules over a quasitriangular Hopf algebra A.

Structure maps are matrices on the basis a_0..a_{n-1} of A:
m: A(x)A -> A, u: 1 -> A, Delta: A -> A(x)A, eps: A -> 1, S, S_inv: A -> A and
R: 1 -> A(x)A, the element R = R_i (x) R^i.
"""
from __future__ import annotations

from functools import cached_property

from . import config
from .errors import AmbientMismatch, ConventionFailure, DimensionMismatch, ValidationFailure
from .linalg import Matrix, invert, kron, swap, tensor_permutation
from .report import ValidationReport
from .sparse import TensorAlgebra


class AmbientHopf:
    def __init__(self, field, m, u, delta, eps, S, S_inv=None, R=None, name="A", validate=True):
        self.field = field
        self.name = name
        n = u.rows
        self.dim = n
        self.m, self.u, self.delta, self.eps, self.S = m, u, delta, eps, S
        shapes = {"m": (m, (n, n * n)), "u": (u, (n, 1)), "delta": (delta, (n * n, n)),
                  "eps": (eps, (1, n)), "S": (S, (n, n))}
        if S_inv is not None:
            shapes["S_inv"] = (S_inv, (n, n))
        if R is None:
            R = kron(u, u)
        shapes["R"] = (R, (n * n, 1))
        for key, (mat, shape) in shapes.items():
            if mat.field != field:
                raise DimensionMismatch(f"{key} is over {mat.field}, expected {field}")
            if mat.shape != shape:
                raise DimensionMismatch(f"{key} has shape {mat.shape}, expected {shape}")
        self.S_inv = S_inv if S_inv is not None else invert(S)
        self.R = R
        if validate:
            rep = self.validate()
            if not rep.ok:
                raise ValidationFailure(f"ambient {name} fails: {[c.name for c in rep.failures()]}", rep)

    @classmethod
    def trivial(cls, field):
        one = Matrix.identity(field, 1)
        return cls(field, one, one, one, one, one, one, one, name="k")

    # -- elementwise helpers
    @cached_property
    def I(self):
        return Matrix.identity(self.field, self.dim)

    def basis(self, i):
        return Matrix.unit_column(self.field, self.dim, i)

    def left_mul(self, a):
        """Matrix of x -> a x."""
        return self.m @ kron(a, self.I)

    def right_mul(self, a):
        """Matrix of x -> x a."""
        return self.m @ kron(self.I, a)

    def mul(self, a, b):
        return self.m @ kron(a, b)

    @cached_property
    def m2(self):
        """Multiplication of A(x)A, (a(x)b)(c(x)d) = ac (x) bd."""
        n = self.dim
        return kron(self.m, self.m) @ tensor_permutation(self.field, [n, n, n, n], [0, 2, 1, 3])

    @cached_property
    def flip(self):
        return swap(self.field, self.dim, self.dim)

    @cached_property
    def R21(self):
        return self.flip @ self.R

    @cached_property
    def R_inv(self):
        return kron(self.S, self.I) @ self.R

    @cached_property
    def S2(self):
        return self.S @ self.S

    @cached_property
    def S2_inv(self):
        return self.S_inv @ self.S_inv

    @cached_property
    def drinfeld_u(self):
        """u = R_i S(R^i)."""
        return self.m @ kron(self.I, self.S) @ self.R

    def validate(self) -> ValidationReport:
        return validate_ambient(self)

    # -- objects
    @cached_property
    def unit_object(self):
        return VObject(self, self.eps)

    @cached_property
    def regular(self):
        return VObject(self, self.m)

    def module(self, generator_actions):
        """VObject from the matrices rho(a_k) of the basis elements acting on the right."""
        return VObject.from_actions(self, generator_actions)

    def __repr__(self):
        return f"AmbientHopf({self.name}, dim={self.dim}, field={self.field})"


def validate_ambient(A: AmbientHopf) -> ValidationReport:
    F, n = A.field, A.dim
    I, I1 = A.I, Matrix.identity(F, 1)
    m, u, D, e, S = A.m, A.u, A.delta, A.eps, A.S
    rep = ValidationReport(f"ambient {A.name}")
    mid = tensor_permutation(F, [n, n, n, n], [0, 2, 1, 3])
    rep.equal("hopf.associativity", m @ kron(m, I), m @ kron(I, m))
    rep.equal("hopf.left_unit", m @ kron(u, I), I)
    rep.equal("hopf.right_unit", m @ kron(I, u), I)
    rep.equal("hopf.coassociativity", kron(D, I) @ D, kron(I, D) @ D)
    rep.equal("hopf.left_counit", kron(e, I) @ D, I)
    rep.equal("hopf.right_counit", kron(I, e) @ D, I)
    rep.equal("hopf.bialgebra", D @ m, kron(m, m) @ mid @ kron(D, D))
    rep.equal("hopf.unit_coproduct", D @ u, kron(u, u))
    rep.equal("hopf.counit_product", e @ m, kron(e, e))
    rep.equal("hopf.counit_unit", e @ u, I1)
    rep.equal("hopf.left_antipode", m @ kron(S, I) @ D, u @ e)
    rep.equal("hopf.right_antipode", m @ kron(I, S) @ D, u @ e)
    rep.equal("hopf.antipode_inverse_left", A.S_inv @ S, I)
    rep.equal("hopf.antipode_inverse_right", S @ A.S_inv, I)
    rep.extend(check_R_matrix(F, m, u, D, e, A.R))
    return rep


def check_R_matrix(F, m, u, D, e, R, prefix="") -> ValidationReport:
    """Quasitriangularity of R in the algebra (m, u) with coproduct D and counit e."""
    T = TensorAlgebra(F, m, u)
    n = T.n
    rep = ValidationReport("R-matrix")
    r = T.from_vector(R, 2)
    # R Delta(h) = tau Delta(h) R on every basis element h
    w = None
    for h in range(n):
        dh = T.apply(T.basis(h), [(D, 2)])
        d = T.diff(T.mul(r, dh), T.mul(T.permute(dh, [1, 0]), r))
        if d is not None:
            w = (h,) + d
            break
    rep.flag(prefix + "R.quasi_cocommutative", w is None, w)
    # (id (x) Delta)(R) = R_13 R_12 and (Delta (x) id)(R) = R_13 R_23
    R13, R12, R23 = T.embed(r, [0, 2], 3), T.embed(r, [0, 1], 3), T.embed(r, [1, 2], 3)
    w = T.diff(T.apply(r, [None, (D, 2)]), T.mul(R13, R12))
    rep.flag(prefix + "R.coproduct_second_leg", w is None, w)
    w = T.diff(T.apply(r, [(D, 2), None]), T.mul(R13, R23))
    rep.flag(prefix + "R.coproduct_first_leg", w is None, w)
    unit = T.from_vector(u, 1)
    w = T.diff(T.apply(r, [None, (e, 0)]), unit)
    rep.flag(prefix + "R.right_counit", w is None, w)
    w = T.diff(T.apply(r, [(e, 0), None]), unit)
    rep.flag(prefix + "R.left_counit", w is None, w)
    return rep


class VObject:
    """A finite dimensional right A-module; ``action`` is the matrix of r: X (x) A -> X."""

    def __init__(self, ambient: AmbientHopf, action: Matrix, name=None, validate=None):
        n_A = ambient.dim
        if action.cols % n_A or action.cols // n_A != action.rows:
            raise DimensionMismatch(f"action of shape {action.shape} for dim A = {n_A}")
        self.ambient = ambient
        self.action = action
        self.dim = action.rows
        self.name = name
        if validate or (validate is None and config.DEBUG_REVALIDATE):
            rep = self.validate()
            if not rep.ok:
                raise ValidationFailure(f"not a module: {[c.name for c in rep.failures()]}", rep)

    @classmethod
    def from_actions(cls, ambient, mats, name=None, validate=True):
        F, n_A = ambient.field, ambient.dim
        d = mats[0].rows
        a = F.zeros((d, d * n_A))
        for k, M in enumerate(mats):
            a[:, k::n_A] = M.a
        return cls(ambient, Matrix(F, a, _trusted=True), name=name, validate=validate)

    @property
    def field(self):
        return self.ambient.field

    @cached_property
    def I(self):
        return Matrix.identity(self.field, self.dim)

    def rho(self, a: Matrix) -> Matrix:
        """x -> x . a for an element a of A (a column)."""
        return self.action @ kron(self.I, a)

    @cached_property
    def gens(self):
        return [self.rho(self.ambient.basis(k)) for k in range(self.ambient.dim)]

    def validate(self) -> ValidationReport:
        A = self.ambient
        r = self.action
        rep = ValidationReport(f"module {self.name or ''}".strip())
        rep.equal("module.associativity", r @ kron(r, A.I), r @ kron(self.I, A.m))
        rep.equal("module.unit", r @ kron(self.I, A.u), self.I)
        return rep

    def same_as(self, other):
        return self.ambient is other.ambient and self.action == other.action

    def __repr__(self):
        return f"VObject({self.name or '?'}, dim={self.dim})"


class VMorphism:
    """An A-linear map src -> tgt (linearity is checked on demand)."""

    __slots__ = ("src", "tgt", "mat")

    def __init__(self, src: VObject, tgt: VObject, mat: Matrix, check=None):
        if mat.shape != (tgt.dim, src.dim):
            raise DimensionMismatch(f"matrix {mat.shape} for {src.dim} -> {tgt.dim}")
        self.src, self.tgt, self.mat = src, tgt, mat
        if check or (check is None and config.DEBUG_REVALIDATE):
            w = self.linearity_witness()
            if w is not None:
                raise ValidationFailure(f"map is not A-linear (witness {w})")

    def linearity_witness(self):
        A = self.src.ambient
        lhs = self.mat @ self.src.action
        rhs = self.tgt.action @ kron(self.mat, A.I)
        return lhs.diff(rhs)

    def is_linear(self):
        return self.linearity_witness() is None

    def __matmul__(self, other):
        return VMorphism(other.src, self.tgt, self.mat @ other.mat, check=False)

    def __repr__(self):
        return f"VMorphism({self.src} -> {self.tgt})"


def is_morphism(f: Matrix, X: VObject, Y: VObject):
    """First witness of failure of A-linearity of f: X -> Y, or None."""
    return VMorphism(X, Y, f, check=False).linearity_witness()


def _same_ambient(*objs):
    A = objs[0].ambient
    for o in objs[1:]:
        if o.ambient is not A:
            raise AmbientMismatch("objects over different ambient Hopf algebras")
    return A


# -- monoidal structure

def tensor_obj(X: VObject, Y: VObject) -> VObject:
    A = _same_ambient(X, Y)
    F, n = A.field, A.dim
    shuffle = tensor_permutation(F, [X.dim, Y.dim, n, n], [0, 2, 1, 3])
    action = kron(X.action, Y.action) @ shuffle @ kron(Matrix.identity(F, X.dim * Y.dim), A.delta)
    name = f"({X.name}⊗{Y.name})" if X.name and Y.name else None
    return VObject(A, action, name=name)


def tensor_mor(f: VMorphism, g: VMorphism) -> VMorphism:
    _same_ambient(f.src, g.src)
    return VMorphism(tensor_obj(f.src, g.src), tensor_obj(f.tgt, g.tgt), kron(f.mat, g.mat))


def rho2(X: VObject, Y: VObject, b: Matrix) -> Matrix:
    """Right action of b in A(x)A on X (x) Y factorwise: x (x) y -> x b' (x) y b''."""
    A = X.ambient
    shuffle = tensor_permutation(A.field, [X.dim, Y.dim, A.dim, A.dim], [0, 2, 1, 3])
    return kron(X.action, Y.action) @ shuffle @ kron(Matrix.identity(A.field, X.dim * Y.dim), b)


def braiding_matrix(X: VObject, Y: VObject) -> Matrix:
    """sigma_{X,Y}(x (x) y) = (y . R_i) (x) (x . R^i)."""
    A = _same_ambient(X, Y)
    return swap(A.field, X.dim, Y.dim) @ rho2(X, Y, A.R21)


def braiding_inv_matrix(X: VObject, Y: VObject) -> Matrix:
    """sigma_{X,Y}^{-1}: Y (x) X -> X (x) Y."""
    A = _same_ambient(X, Y)
    R_inv21 = A.flip @ A.R_inv
    return rho2(X, Y, R_inv21) @ swap(A.field, Y.dim, X.dim)


def braiding(X: VObject, Y: VObject) -> VMorphism:
    s = VMorphism(tensor_obj(X, Y), tensor_obj(Y, X), braiding_matrix(X, Y))
    if config.DEBUG_REVALIDATE:
        rep = check_braiding(X, Y, X)
        if not rep.ok:
            raise ValidationFailure(f"braiding fails: {[c.name for c in rep.failures()]}", rep)
    return s


def braiding_inv(X: VObject, Y: VObject) -> VMorphism:
    return VMorphism(tensor_obj(Y, X), tensor_obj(X, Y), braiding_inv_matrix(X, Y))


def check_braiding(X, Y, Z) -> ValidationReport:
    """Invertibility, naturality-free axioms: both hexagons and linearity on (X, Y, Z)."""
    rep = ValidationReport("braiding")
    s, si = braiding_matrix(X, Y), braiding_inv_matrix(X, Y)
    rep.equal("braiding.inverse_left", si @ s, Matrix.identity(X.field, X.dim * Y.dim))
    rep.equal("braiding.inverse_right", s @ si, Matrix.identity(X.field, X.dim * Y.dim))
    rep.flag("braiding.linear", is_morphism(s, tensor_obj(X, Y), tensor_obj(Y, X)) is None)
    IX, IY, IZ = X.I, Y.I, Z.I
    rep.equal("braiding.hexagon_right", braiding_matrix(X, tensor_obj(Y, Z)),
              kron(IY, braiding_matrix(X, Z)) @ kron(braiding_matrix(X, Y), IZ))
    rep.equal("braiding.hexagon_left", braiding_matrix(tensor_obj(X, Y), Z),
              kron(braiding_matrix(X, Z), IY) @ kron(IX, braiding_matrix(Y, Z)))
    return rep


# -- duality

def _pairing(F, n):
    """The row e_i (x) xi^j -> delta_ij and the column sum_i xi^i (x) e_i."""
    ev = F.zeros((1, n * n))
    coev = F.zeros((n * n, 1))
    for i in range(n):
        ev[0, i * n + i] = F.one
        coev[i * n + i, 0] = F.one
    return Matrix(F, ev, _trusted=True), Matrix(F, coev, _trusted=True)


def _twisted_dual(X: VObject, antipode: Matrix, name):
    A = X.ambient
    mats = [X.rho(antipode @ A.basis(k)).T for k in range(A.dim)]
    return VObject.from_actions(A, mats, name=name, validate=False)


def right_dual(X: VObject):
    """X^v with ev: X (x) X^v -> 1 and coev: 1 -> X^v (x) X; (xi . a)(x) = xi(x . S(a))."""
    A = X.ambient
    D = _twisted_dual(X, A.S, f"{X.name}^v" if X.name else None)
    ev, coev = _pairing(A.field, X.dim)
    one = A.unit_object
    ev_m = VMorphism(tensor_obj(X, D), one, ev, check=False)
    coev_m = VMorphism(one, tensor_obj(D, X), coev, check=False)
    _check_duality(X, D, ev_m, coev_m, "right")
    return D, ev_m, coev_m


def left_dual(X: VObject):
    """^vX with ev: ^vX (x) X -> 1 and coev: 1 -> X (x) ^vX; (xi . a)(x) = xi(x . S^-1(a))."""
    A = X.ambient
    D = _twisted_dual(X, A.S_inv, f"^v{X.name}" if X.name else None)
    ev, coev = _pairing(A.field, X.dim)
    one = A.unit_object
    ev_m = VMorphism(tensor_obj(D, X), one, ev, check=False)
    coev_m = VMorphism(one, tensor_obj(X, D), coev, check=False)
    _check_duality(X, D, ev_m, coev_m, "left")
    return D, ev_m, coev_m


def _check_duality(X, D, ev, coev, side):
    for mor in (ev, coev):
        w = mor.linearity_witness()
        if w is not None:
            raise ConventionFailure(f"{side} duality map is not A-linear (witness {w})")
    if config.DEBUG_REVALIDATE:
        rep = check_snakes(X, D, ev.mat, coev.mat, side)
        if not rep.ok:
            raise ConventionFailure(f"{side} snake identities fail", rep)


def check_snakes(X, D, ev, coev, side) -> ValidationReport:
    rep = ValidationReport(f"{side} dual")
    IX, ID = X.I, D.I
    if side == "right":
        rep.equal("dual.snake_object", kron(ev, IX) @ kron(IX, coev), IX)
        rep.equal("dual.snake_dual", kron(ID, ev) @ kron(coev, ID), ID)
    else:
        rep.equal("dual.snake_object", kron(IX, ev) @ kron(coev, IX), IX)
        rep.equal("dual.snake_dual", kron(ev, ID) @ kron(ID, coev), ID)
    rep.flag("dual.ev_linear", is_morphism(ev, tensor_obj(X, D) if side == "right" else tensor_obj(D, X), X.ambient.unit_object) is None)
    rep.flag("dual.coev_linear", is_morphism(coev, X.ambient.unit_object, tensor_obj(D, X) if side == "right" else tensor_obj(X, D)) is None)
    return rep


def double_dual(X: VObject) -> VObject:
    """X^vv on the underlying space of X (canonical basis identification): action by S^2."""
    A = X.ambient
    return _twisted_dual(_twisted_dual(X, A.S, None), A.S, f"{X.name}^vv" if X.name else None)


def double_left_dual(X: VObject) -> VObject:
    A = X.ambient
    return _twisted_dual(_twisted_dual(X, A.S_inv, None), A.S_inv, f"^vv{X.name}" if X.name else None)


def dual_mor(f: Matrix) -> Matrix:
    """Dual of a morphism on either side, in dual bases: the transpose."""
    return f.T


# -- Drinfeld morphisms of V

def mu_matrix(X: VObject) -> Matrix:
    """mu_X = (id (x) ev_X)(id (x) sigma_{X^v,X})(coev_{X^v} (x) id): X -> X^vv."""
    F = X.field
    Xv = _twisted_dual(X, X.ambient.S, None)
    n = X.dim
    ev, coev = _pairing(F, n)
    return kron(X.I, ev) @ kron(X.I, braiding_matrix(Xv, X)) @ kron(coev, X.I)


def mu_bar_matrix(X: VObject) -> Matrix:
    """mu_bar_X = (ev_{X^v} (x) id)(sigma^{-1}_{X^v,X^vv} (x) id)(id (x) coev_X): X^vv -> X."""
    F = X.field
    Xv = _twisted_dual(X, X.ambient.S, None)
    Xvv = _twisted_dual(Xv, X.ambient.S, None)
    ev, coev = _pairing(F, X.dim)
    return kron(ev, X.I) @ kron(braiding_inv_matrix(Xv, Xvv), X.I) @ kron(X.I, coev)


def drinfeld_mu(X: VObject) -> dict:
    """mu, mu_bar, mu_shriek, mu_bar_shriek as n x n matrices (double duals identified with X)."""
    A = X.ambient
    Xv = _twisted_dual(X, A.S, None)
    mu, mu_bar = mu_matrix(X), mu_bar_matrix(X)
    out = {
        "mu": mu,
        "mu_bar": mu_bar,
        "mu_shriek": mu_matrix(Xv).T,
        "mu_bar_shriek": mu_bar_matrix(Xv).T,
    }
    I = X.I
    if (mu_bar @ mu).diff(I) is not None or (mu @ mu_bar).diff(I) is not None:
        raise ConventionFailure("mu_bar is not inverse to mu")
    if (out["mu_bar_shriek"] @ out["mu_shriek"]).diff(I) is not None:
        raise ConventionFailure("mu_bar^! is not inverse to mu^!")
    return out


def kappa_gamma(X: VObject) -> dict:
    """kappa_X = mu_{X^vv} mu_bar^!_X : X -> X^vvvv and gamma_X = mu^!_X mu_X : X -> X."""
    Xvv = double_dual(X)
    d = drinfeld_mu(X)
    kappa = mu_matrix(Xvv) @ d["mu_bar_shriek"]
    gamma = d["mu_shriek"] @ d["mu"]
    vvX = double_left_dual(X)
    Xv_of_vvX = _twisted_dual(vvX, X.ambient.S, None)
    gamma_alt = mu_matrix(vvX) @ mu_matrix(Xv_of_vvX).T
    if gamma.diff(gamma_alt) is not None:
        raise ConventionFailure("the two expressions for gamma disagree")
    kappa_alt = mu_bar_matrix(_twisted_dual(Xvv, X.ambient.S, None)).T @ d["mu"]
    if kappa.diff(kappa_alt) is not None:
        raise ConventionFailure("the two expressions for kappa disagree")
    return {"kappa": kappa, "gamma": gamma}
