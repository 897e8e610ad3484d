"""Coends with their universal coaction, factorization bijections and derived Hopf structure.

A natural transformation out of a category of modules is determined by its
component on a generator G evaluated at one base point g0. The universal
coaction at g0, read as a dim G x dim C matrix, is invertible; inverting it
turns a component into the factoring morphism. Both Sigma^(1) and Sigma^(2)
are inverted this way, and every structure map of the coend follows.

:class:`CoendData` realizes the coend of V (right A-modules) on A* with
delta_X(x) = sum_i (x . a_i) (x) a^i.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .ambient import (
    AmbientHopf, VMorphism, VObject, braiding_inv_matrix, braiding_matrix, is_morphism, tensor_obj,
)
from .errors import NoCoendAction, NotNatural, SourceMismatch, StructureDerivationFailure
from .linalg import Matrix, exact_tensordot, invert, kron, kron_all, linear_map_matrix, rank, solve_affine
from .report import ValidationReport


class CoendCalculus:
    """Factorization and derived structure; subclasses supply the category."""

    field = None
    C = None
    _derived = False

    # -- category hooks
    def delta(self, X) -> Matrix:
        raise NotImplementedError

    def tensor(self, X, Y):
        raise NotImplementedError

    def braid(self, X, Y) -> Matrix:
        raise NotImplementedError

    def braid_inv(self, X, Y) -> Matrix:
        """sigma_{X,Y}^{-1}: Y (x) X -> X (x) Y."""
        raise NotImplementedError

    def is_map(self, f, X, Y):
        """A witness that f: X -> Y is not a morphism, or None."""
        raise NotImplementedError

    unit_object = None
    generator = None
    base_point = None

    @property
    def dim(self) -> int:
        return self.C.dim

    @cached_property
    def I(self):
        return Matrix.identity(self.field, self.dim)

    # -- one variable
    def sigma1(self, f: Matrix, X) -> Matrix:
        """Sigma(f)_X = (id_X (x) f) delta_X for f: C -> D."""
        if f.cols != self.dim:
            raise SourceMismatch(f"expected a map out of the coend (dim {self.dim}), got {f.shape}")
        return kron(X.I, f) @ self.delta(X)

    @cached_property
    def _W1_inv(self):
        G = self.generator
        return invert(_reshape(self.delta(G) @ self.base_point, G.dim, self.dim))

    def factorize1(self, alpha_G: Matrix, d: int) -> Matrix:
        """The f: C -> D with sigma1(f)_G = alpha_G."""
        G = self.generator
        if alpha_G.shape != (G.dim * d, G.dim):
            raise NotNatural(f"component has shape {alpha_G.shape}, expected {(G.dim * d, G.dim)}")
        f = (self._W1_inv @ _reshape(alpha_G @ self.base_point, G.dim, d)).T
        w = self.sigma1(f, G).diff(alpha_G)
        if w is not None:
            raise NotNatural(f"round trip fails on the generator at {w}")
        return f

    def factorize1_param(self, T_G: Matrix, d_in: int, d_out: int) -> Matrix:
        """K: C (x) P -> D with T_X = (id_X (x) K)(delta_X (x) id_P), read from T_G: G (x) P -> G (x) D."""
        G, F = self.generator, self.field
        if T_G.shape != (G.dim * d_out, G.dim * d_in):
            raise NotNatural(f"component has shape {T_G.shape}")
        blocks = []
        for j in range(d_in):
            pt = kron(self.base_point, Matrix.unit_column(F, d_in, j))
            blocks.append((self._W1_inv @ _reshape(T_G @ pt, G.dim, d_out)).T.a)   # d_out x dim C
        K = Matrix(F, np.stack(blocks, axis=2).reshape(d_out, self.dim * d_in), _trusted=True)
        w = (kron(G.I, K) @ kron(self.delta(G), Matrix.identity(F, d_in))).diff(T_G)
        if w is not None:
            raise NotNatural(f"parametrized round trip fails at {w}")
        return K

    # -- two variables
    def sigma2_pre(self, X, Y) -> Matrix:
        """(id_X (x) sigma_{C,Y} (x) id_C)(delta_X (x) delta_Y): X (x) Y -> X (x) Y (x) C (x) C."""
        return kron_all(X.I, self.braid(self.C, Y), self.I) @ kron(self.delta(X), self.delta(Y))

    def sigma2(self, f: Matrix, X, Y) -> Matrix:
        if f.cols != self.dim * self.dim:
            raise SourceMismatch(f"expected a map out of C (x) C, got {f.shape}")
        return kron(Matrix.identity(self.field, X.dim * Y.dim), f) @ self.sigma2_pre(X, Y)

    @cached_property
    def _W2_inv(self):
        G = self.generator
        w = self.sigma2_pre(G, G) @ kron(self.base_point, self.base_point)
        return invert(_reshape(w, G.dim * G.dim, self.dim * self.dim))

    def factorize2(self, alpha_GG: Matrix, d: int) -> Matrix:
        """The f: C (x) C -> D with sigma2(f)_{G,G} = alpha_GG."""
        G = self.generator
        g2 = G.dim * G.dim
        if alpha_GG.shape != (g2 * d, g2):
            raise NotNatural(f"component has shape {alpha_GG.shape}, expected {(g2 * d, g2)}")
        V = _reshape(alpha_GG @ kron(self.base_point, self.base_point), g2, d)
        f = (self._W2_inv @ V).T
        w = self.sigma2(f, G, G).diff(alpha_GG)
        if w is not None:
            raise NotNatural(f"round trip fails on the generator pair at {w}")
        return f

    # -- derived structure
    def derive_structure(self):
        if self._derived:
            return self
        G = self.generator
        n = self.dim
        dG = self.delta(G)
        self.eps = self.factorize1(G.I, 1)
        self.u = self.delta(self.unit_object)
        self.Delta = self.factorize1(kron(dG, self.I) @ dG, n * n)
        self.m = self.factorize2(self.delta(self.tensor(G, G)), n)
        sGG = self.braid(G, G)
        self.omega = self.factorize2(sGG @ sGG, 1)
        self.S = self._solve_antipode()
        self.S_inv = invert(self.S)
        self._derived = True
        rep = self.validate_structure()
        if not rep.ok:
            self._derived = False
            raise StructureDerivationFailure(
                f"derived coend structure fails: {[c.name for c in rep.failures()]}")
        self.omega_bar = self.omega @ kron(self.S, self.I)
        self.omega_under = self.omega @ kron(self.S_inv, self.I)
        return self

    def _solve_antipode(self) -> Matrix:
        """S as the unique solution of m (S (x) id) Delta = u eps, which is linear in S."""
        F, n = self.field, self.dim
        m, D, I = self.m, self.Delta, self.I

        def lhs(x):
            Sx = Matrix(F, x.a.reshape(n, n).copy(), _trusted=True)
            return _flatten(m @ kron(Sx, I) @ D)

        sol = solve_affine(linear_map_matrix(lhs, n * n, F), _flatten(self.u @ self.eps))
        if sol is None or sol.dim:
            raise StructureDerivationFailure("antipode equation has no unique solution")
        return Matrix(F, sol.particular.a.reshape(n, n).copy(), _trusted=True)

    @cached_property
    def sigma_CC(self):
        return self.braid(self.C, self.C)

    @cached_property
    def sigma_CC_inv(self):
        return self.braid_inv(self.C, self.C)

    def validate_structure(self) -> ValidationReport:
        I = self.I
        m, u, D, e, S = self.m, self.u, self.Delta, self.eps, self.S
        C, one = self.C, self.unit_object
        CC = self.tensor(C, C)
        rep = ValidationReport("coend structure")
        for name, mat, src, tgt in [("m", m, CC, C), ("u", u, one, C), ("Delta", D, C, CC),
                                    ("eps", e, C, one), ("S", S, C, C), ("omega", self.omega, CC, one)]:
            rep.flag(f"coend.{name}_linear", self.is_map(mat, src, tgt) is None)
        rep.extend(check_braided_hopf(self.field, self.dim, m, u, D, e, S, self.S_inv, self.sigma_CC, "coend."))
        rep.extend(check_pairing(self.field, self.dim, m, u, D, e, self.omega, "coend.omega."))
        rep.equal("coend.self_coaction", self.delta(C),
                  kron(I, m) @ kron(self.sigma_CC, I) @ kron(S, D) @ D)
        return rep

    def pairing_report(self) -> ValidationReport:
        """Alternative formulas for omega_bar and omega_under, and the convolution inverse law."""
        self.derive_structure()
        I = self.I
        om, S, Si = self.omega, self.S, self.S_inv
        rep = ValidationReport("pairing variants")
        rep.equal("pairing.omega_bar_alt", self.omega_bar, om @ kron(I, Si) @ self.sigma_CC_inv)
        rep.equal("pairing.omega_under_alt", self.omega_under, om @ kron(S, I) @ self.sigma_CC)
        mid = kron_all(I, self.sigma_CC, I)
        DD = kron(self.Delta, self.Delta)
        ee = kron(self.eps, self.eps)
        rep.equal("pairing.omega_under_right_inverse", kron(om, self.omega_under) @ mid @ DD, ee)
        rep.equal("pairing.omega_under_left_inverse", kron(self.omega_under, om) @ mid @ DD, ee)
        return rep

    def nondegenerate(self) -> bool:
        """Whether the pairing omega is nondegenerate (the factorizable case)."""
        self.derive_structure()
        return rank(_reshape(self.omega.T, self.dim, self.dim)) == self.dim

    def check_coaction(self, X) -> ValidationReport:
        rep = ValidationReport(f"coaction on {getattr(X, 'name', None) or 'X'}")
        d = self.delta(X)
        rep.flag("coaction.linear", self.is_map(d, X, self.tensor(X, self.C)) is None)
        if self._derived:
            rep.equal("coaction.counit", kron(X.I, self.eps) @ d, X.I)
            rep.equal("coaction.coassociative", kron(d, self.I) @ d, kron(X.I, self.Delta) @ d)
        return rep

    def dinaturality_witness(self, f: Matrix, X, Y):
        """Naturality of delta in coaction form: delta_Y f = (f (x) id_C) delta_X."""
        return (self.delta(Y) @ f).diff(kron(f, self.I) @ self.delta(X))

    @cached_property
    def braid_switch(self) -> Matrix:
        """B: C (x) C -> C (x) C with sigma2(B) = (id (x) sigma^-1_{Y,C} (x) id)(delta_X (x) delta_Y)."""
        G = self.generator
        pre = kron_all(G.I, self.braid_inv(G, self.C), self.I) @ kron(self.delta(G), self.delta(G))
        return self.factorize2(pre, self.dim * self.dim)


class CoendData(CoendCalculus):
    """The coend of the category of right A-modules, on the space A*."""

    def __init__(self, ambient: AmbientHopf):
        self.ambient = A = ambient
        self.field = F = A.field
        n = self.n = A.dim
        coev = F.zeros((n * n, 1))
        for i in range(n):
            coev[i * n + i, 0] = F.one
        #: sum_i a_i (x) a^i as a column of A (x) C
        self._copair = Matrix(F, coev, _trusted=True)
        self.C = VObject(A, self._solve_action(), name="C", validate=False)
        if not self.C.validate().ok:
            raise NoCoendAction("solved C-action is not a module action")

    def delta(self, X: VObject) -> Matrix:
        """delta_X: X -> X (x) C."""
        return kron(X.action, Matrix.identity(self.field, self.n)) @ kron(X.I, self._copair)

    def tensor(self, X, Y):
        return tensor_obj(X, Y)

    def braid(self, X, Y):
        return braiding_matrix(X, Y)

    def braid_inv(self, X, Y):
        return braiding_inv_matrix(X, Y)

    def is_map(self, f, X, Y):
        return is_morphism(f, X, Y)

    @property
    def unit_object(self):
        return self.ambient.unit_object

    @property
    def generator(self):
        return self.ambient.regular

    @property
    def base_point(self):
        return self.ambient.u

    def _solve_action(self) -> Matrix:
        """The unique C-action making delta_A A-linear.

        A-linearity of delta_A is delta_A(a_k) = delta_A(1) . a_k for every basis
        element. With P_t = rho_C(a_t) the (r, q) coordinate reads
        sum_{t,i} T[(k,r),(t,i)] P_t[q,i] with T[k,r,t,i] = sum_s D[s,t,k] m[r,i,s],
        so every row q of every P_t solves the same square system.
        """
        A, F, n = self.ambient, self.field, self.n
        D3 = A.delta.a.reshape(n, n, n)             # [s, t, k]
        m3 = A.m.a.reshape(n, n, n)                 # [r, i, s]
        T = exact_tensordot(F, D3, m3, ([0], [2]))  # [t, k, r, i]
        T = Matrix(F, np.ascontiguousarray(T.transpose(1, 2, 0, 3)).reshape(n * n, n * n), _trusted=True)
        dA = self.delta(A.regular).a.reshape(n, n, n)  # [r, q, k]
        B = Matrix(F, np.ascontiguousarray(dA.transpose(2, 0, 1)).reshape(n * n, n), _trusted=True)
        sol = solve_affine(T, B)
        if sol is None:
            raise NoCoendAction("no A-action on A* makes the universal coaction A-linear")
        if sol.dim:
            raise NoCoendAction(f"the C-action is not unique ({sol.dim} free parameters)")
        X = sol.particular.a.reshape(n, n, n)       # [t, i, q]
        return _action_from_mats(F, [Matrix(F, X[t].T.copy(), _trusted=True) for t in range(n)])

    def morphism(self, name) -> VMorphism:
        """A structure map wrapped as a VMorphism."""
        self.derive_structure()
        C, one = self.C, self.ambient.unit_object
        CC = tensor_obj(C, C)
        table = {"m": (CC, C), "u": (one, C), "Delta": (C, CC), "eps": (C, one), "S": (C, C),
                 "S_inv": (C, C), "omega": (CC, one), "omega_bar": (CC, one), "omega_under": (CC, one)}
        src, tgt = table[name]
        return VMorphism(src, tgt, getattr(self, name))


def build_coend(A: AmbientHopf) -> CoendData:
    return CoendData(A)


def derive_structure(cd: CoendCalculus) -> CoendCalculus:
    return cd.derive_structure()


def pairing_variants(cd: CoendCalculus) -> dict:
    cd.derive_structure()
    return {"omega_bar": cd.omega_bar, "omega_under": cd.omega_under}


# -- axiom suites shared with internal Hopf algebras

def check_braided_hopf(F, n, m, u, D, e, S, S_inv, sigma_HH, prefix="") -> ValidationReport:
    I = Matrix.identity(F, n)
    one = Matrix.identity(F, 1)
    rep = ValidationReport("braided Hopf algebra")
    rep.equal(prefix + "associativity", m @ kron(m, I), m @ kron(I, m))
    rep.equal(prefix + "left_unit", m @ kron(u, I), I)
    rep.equal(prefix + "right_unit", m @ kron(I, u), I)
    rep.equal(prefix + "coassociativity", kron(D, I) @ D, kron(I, D) @ D)
    rep.equal(prefix + "left_counit", kron(e, I) @ D, I)
    rep.equal(prefix + "right_counit", kron(I, e) @ D, I)
    rep.equal(prefix + "bialgebra", D @ m, kron(m, m) @ kron_all(I, sigma_HH, I) @ kron(D, D))
    rep.equal(prefix + "unit_coproduct", D @ u, kron(u, u))
    rep.equal(prefix + "counit_product", e @ m, kron(e, e))
    rep.equal(prefix + "counit_unit", e @ u, one)
    rep.equal(prefix + "left_antipode", m @ kron(S, I) @ D, u @ e)
    rep.equal(prefix + "right_antipode", m @ kron(I, S) @ D, u @ e)
    if S_inv is not None:
        rep.equal(prefix + "antipode_inverse", S_inv @ S, I)
    return rep


def check_pairing(F, n, m, u, D, e, omega, prefix="") -> ValidationReport:
    """The four bialgebra-pairing axioms for omega: H (x) H -> 1."""
    I = Matrix.identity(F, n)
    rep = ValidationReport("pairing")
    rep.equal(prefix + "product_left", omega @ kron(m, I), omega @ kron_all(I, omega, I) @ kron_all(I, I, D))
    rep.equal(prefix + "product_right", omega @ kron(I, m), omega @ kron_all(I, omega, I) @ kron_all(D, I, I))
    rep.equal(prefix + "unit_left", omega @ kron(u, I), e)
    rep.equal(prefix + "unit_right", omega @ kron(I, u), e)
    return rep


# -- small helpers

def _reshape(col: Matrix, r: int, c: int) -> Matrix:
    """A column of X (x) Y read as its dim X x dim Y coefficient matrix."""
    return Matrix(col.field, col.a.reshape(r, c).copy(), _trusted=True)


def _flatten(M: Matrix) -> Matrix:
    return Matrix(M.field, M.a.reshape(-1, 1).copy(), _trusted=True)


def _action_from_mats(F, mats) -> Matrix:
    d = mats[0].rows
    n_A = len(mats)
    a = F.zeros((d, d * n_A))
    for k, M in enumerate(mats):
        a[:, k::n_A] = M.a
    return Matrix(F, a, _trusted=True)
