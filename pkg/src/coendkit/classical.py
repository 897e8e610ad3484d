"""Classical Hopf algebras over a field: R-matrices, special elements, u, q, c and the Drinfeld double.

Right-module conventions: R = R_i (x) R^i acts on M (x) N through
sigma(m (x) n) = n R_i (x) m R^i, the Drinfeld element is u = R_i S(R^i) and
a balanced element satisfies Delta(t) = (t (x) t)(R_21 R).
"""
from __future__ import annotations

from functools import cached_property

from .ambient import check_R_matrix
from .errors import ConstructionFailure, DimensionMismatch, InternalInconsistency, NotInvertible
from .fixtures import HopfData
from .linalg import Matrix, hstack, invert, kron, rank, solve_affine
from .report import ValidationReport
from .sparse import TensorAlgebra


class ClassicalHopf:
    """A finite dimensional Hopf algebra given by structure matrices.

    Products in tensor powers go through a sparse tensor algebra, so doubles of
    dimension 36 stay tractable.
    """

    def __init__(self, field, m, u, delta, eps, S, S_inv=None, names=None, validate=True):
        self.field = field
        self.m, self.u, self.delta, self.eps, self.S = m, u, delta, eps, S
        self.dim = u.rows
        self.names = list(names) if names else [f"e{i}" for i in range(self.dim)]
        try:
            self.S_inv = S_inv if S_inv is not None else invert(S)
        except NotInvertible as exc:
            raise ConstructionFailure("antipode is not invertible") from exc
        if validate:
            rep = self.validate()
            if not rep.ok:
                raise ConstructionFailure(f"Hopf axioms fail: {[c.name for c in rep.failures()]}")

    @classmethod
    def from_data(cls, data: HopfData, validate=True):
        return cls(data.field, data.m, data.u, data.delta, data.eps, data.S, data.S_inv, data.names, validate)

    def to_data(self) -> HopfData:
        return HopfData(self.field, self.names, self.m, self.u, self.delta, self.eps, self.S, self.S_inv)

    @cached_property
    def I(self):
        return Matrix.identity(self.field, self.dim)

    @cached_property
    def T(self) -> TensorAlgebra:
        return TensorAlgebra(self.field, self.m, self.u)

    def validate(self) -> ValidationReport:
        """Hopf algebra axioms checked basis element by basis element."""
        T, n, F = self.T, self.dim, self.field
        D, e, S = (self.delta, 2), (self.eps, 0), (self.S, 1)
        rep = ValidationReport("Hopf algebra")
        one = T.from_vector(self.u, 1)
        b = [T.basis(i) for i in range(n)]
        eps = [self.eps.a[0, i] for i in range(n)]
        dlt = [T.apply(x, [D]) for x in b]

        def first(name, pairs):
            for key, (x, y) in pairs:
                w = T.diff(x, y)
                if w is not None:
                    return rep.flag(name, False, (key, w))
            return rep.flag(name, True)

        first("hopf.associativity", (((i, j, k), (T.mul(T.mul(b[i], b[j]), b[k]), T.mul(b[i], T.mul(b[j], b[k]))))
                                     for i in range(n) for j in range(n) for k in range(n)))
        first("hopf.unit", ((i, (T.mul(one, b[i]), b[i])) for i in range(n)))
        first("hopf.unit_right", ((i, (T.mul(b[i], one), b[i])) for i in range(n)))
        first("hopf.coassociativity", ((i, (T.apply(dlt[i], [D, None]), T.apply(dlt[i], [None, D]))) for i in range(n)))
        first("hopf.counit", ((i, (T.apply(dlt[i], [e, None]), b[i])) for i in range(n)))
        first("hopf.counit_right", ((i, (T.apply(dlt[i], [None, e]), b[i])) for i in range(n)))
        first("hopf.bialgebra", (((i, j), (T.apply(T.mul(b[i], b[j]), [D]), T.mul(dlt[i], dlt[j])))
                                 for i in range(n) for j in range(n)))
        rep.equal("hopf.unit_coproduct", self.delta @ self.u, kron(self.u, self.u))
        rep.equal("hopf.counit_product", self.eps @ self.m, kron(self.eps, self.eps))
        rep.equal("hopf.counit_unit", self.eps @ self.u, Matrix.identity(F, 1))
        first("hopf.left_antipode", ((i, (T.multiply_legs(T.apply(dlt[i], [S, None])), T.scale(one, eps[i])))
                                     for i in range(n)))
        first("hopf.right_antipode", ((i, (T.multiply_legs(T.apply(dlt[i], [None, S])), T.scale(one, eps[i])))
                                      for i in range(n)))
        rep.equal("hopf.antipode_inverse_left", self.S_inv @ self.S, self.I)
        rep.equal("hopf.antipode_inverse_right", self.S @ self.S_inv, self.I)
        return rep

    # element helpers
    def element(self, coeffs) -> Matrix:
        if isinstance(coeffs, dict):
            col = [0] * self.dim
            for k, v in coeffs.items():
                col[self.names.index(k) if isinstance(k, str) else k] = v
            return Matrix.column(self.field, col)
        return Matrix.column(self.field, list(coeffs))

    def basis(self, i) -> Matrix:
        return Matrix.unit_column(self.field, self.dim, i)

    @property
    def one(self) -> Matrix:
        return self.u

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        return self.m @ kron(a, b)

    def mul_k(self, x: Matrix, y: Matrix, k: int) -> Matrix:
        """Factorwise product in the k-th tensor power."""
        T = self.T
        return T.to_vector(T.mul(T.from_vector(x, k), T.from_vector(y, k)), k)

    def mul2(self, x: Matrix, y: Matrix) -> Matrix:
        return self.mul_k(x, y, 2)

    def inverse(self, a: Matrix) -> Matrix:
        """Two-sided inverse in H, solved from the left multiplication matrix."""
        L = self.m @ kron(a, self.I)
        sol = solve_affine(L, self.u)
        if sol is None:
            raise NotInvertible("element is not invertible")
        x = sol.particular
        if self.mul(x, a).diff(self.u) is not None:
            raise NotInvertible("element has only a one-sided inverse")
        return x

    def is_invertible(self, a) -> bool:
        try:
            self.inverse(a)
            return True
        except NotInvertible:
            return False

    def R21(self, R):
        n = self.dim
        return Matrix(self.field, R.a.reshape(n, n).T.reshape(-1, 1).copy(), _trusted=True)

    def legs_product(self, R: Matrix, left=None, right=None) -> Matrix:
        """sum left(R_i) right(R^i) for matrices left, right (identity when None)."""
        T = self.T
        x = T.apply(T.from_vector(R, 2), [None if left is None else (left, 1), None if right is None else (right, 1)])
        return T.to_vector(T.multiply_legs(x), 1)


class ClassicalElement:
    """An element of H as a column vector."""

    __slots__ = ("hopf", "vec")

    def __init__(self, hopf: ClassicalHopf, vec: Matrix):
        vec = getattr(vec, "vec", vec)
        if vec.shape != (hopf.dim, 1):
            raise DimensionMismatch(f"element of shape {vec.shape} in a Hopf algebra of dimension {hopf.dim}")
        self.hopf, self.vec = hopf, vec

    def __mul__(self, other):
        return ClassicalElement(self.hopf, self.hopf.mul(self.vec, other.vec))

    def __eq__(self, other):
        return isinstance(other, ClassicalElement) and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"ClassicalElement({[r[0] for r in self.vec.to_strings()]})"


# -- R-matrices

def check_R(H: ClassicalHopf, R: Matrix) -> ValidationReport:
    """Quasitriangularity: R Delta(h) = tau Delta(h) R, (id (x) Delta)R = R_13 R_12, (Delta (x) id)R = R_13 R_23, counits."""
    return check_R_matrix(H.field, H.m, H.u, H.delta, H.eps, R, "classical.")


# -- special elements

def check_grouplike(H: ClassicalHopf, g: Matrix) -> ValidationReport:
    rep = ValidationReport("grouplike")
    rep.equal("grouplike.coproduct", H.delta @ g, kron(g, g))
    rep.equal("grouplike.counit", H.eps @ g, Matrix.identity(H.field, 1))
    return rep


def check_pivotal(H: ClassicalHopf, p: Matrix) -> ValidationReport:
    """Grouplike and S^2(h) = p^-1 h p on a basis."""
    rep = check_grouplike(H, p)
    rep.subject = "pivotal"
    p_inv = H.inverse(p)
    S2 = H.S @ H.S
    for i in range(H.dim):
        h = H.basis(i)
        if not rep.equal(f"pivotal.S2_conjugation[{H.names[i]}]", S2 @ h, H.mul(H.mul(p_inv, h), p)):
            break
    return rep


def check_central(H: ClassicalHopf, t: Matrix) -> ValidationReport:
    rep = ValidationReport("central")
    for i in range(H.dim):
        h = H.basis(i)
        if not rep.equal(f"central[{H.names[i]}]", H.mul(t, h), H.mul(h, t)):
            break
    return rep


def check_balanced(H: ClassicalHopf, t: Matrix, R: Matrix) -> ValidationReport:
    """Central, eps(t) = 1 and Delta(t) = (t (x) t)(R_21 R)."""
    rep = check_central(H, t)
    rep.subject = "balanced"
    rep.equal("balanced.counit", H.eps @ t, Matrix.identity(H.field, 1))
    rep.equal("balanced.coproduct", H.delta @ t, H.mul2(kron(t, t), H.mul2(H.R21(R), R)))
    return rep


def check_ribbon(H: ClassicalHopf, t: Matrix, R: Matrix) -> ValidationReport:
    rep = check_balanced(H, t, R)
    rep.subject = "ribbon"
    rep.equal("ribbon.antipode_fixed", H.S @ t, t)
    return rep


# -- Drinfeld element

def drinfeld_u_classical(H: ClassicalHopf, R: Matrix) -> dict:
    """u = R_i S(R^i), u^-1 = S^2(R_i) R^i, q = u S(u)^-1, c = u S(u)."""
    u = H.legs_product(R, right=H.S)
    u_inv = H.legs_product(R, left=H.S @ H.S)
    if H.mul(u, u_inv).diff(H.u) is not None or H.mul(u_inv, u).diff(H.u) is not None:
        raise InternalInconsistency("u and the formula for its inverse do not multiply to 1")
    Su = H.S @ u
    q = H.mul(u, H.inverse(Su))
    c = H.mul(u, Su)
    return {"u": u, "u_inv": u_inv, "q": q, "c": c}


def corollary_check(H: ClassicalHopf, R: Matrix, p: Matrix | None = None, t: Matrix | None = None) -> ValidationReport:
    """Bijection p -> u^-1 p, t -> u t between pivotal and balanced elements, with the ribbon criteria."""
    d = drinfeld_u_classical(H, R)
    rep = ValidationReport("Drinfeld bijection")
    if t is not None:
        p_t = H.mul(d["u"], t)
        rep.flag("t_to_p.pivotal", check_pivotal(H, p_t).ok)
        rep.equal("t_to_p.round_trip", H.mul(d["u_inv"], p_t), t)
        ribbon = check_ribbon(H, t, R).ok
        crit_p = H.mul(p_t, p_t).diff(d["q"]) is None
        t2 = H.mul(t, t)
        crit_t = H.is_invertible(t2) and H.inverse(t2).diff(d["c"]) is None
        rep.flag("criterion.p_squared_eq_q", crit_p, informational=True)
        rep.flag("criterion.t_minus2_eq_c", crit_t, informational=True)
        rep.flag("criteria_match_ribbon", crit_p == ribbon and crit_t == ribbon)
    if p is not None:
        t_p = H.mul(d["u_inv"], p)
        rep.flag("p_to_t.balanced", check_balanced(H, t_p, R).ok)
        rep.equal("p_to_t.round_trip", H.mul(d["u"], t_p), p)
    return rep


# -- Drinfeld double

def drinfeld_double(H: ClassicalHopf) -> dict:
    """D(H) on (H^op)^* (x) H, basis e^p (x) e_s at index p * n + s.

    (f (x) a)(g (x) b) = f g(S^-1(a''') _ a') (x) a'' b, the blank marking the
    argument of g. H^* is multiplied by the coproduct of H and comultiplied by
    the product of H^op. The canonical R = sum_i (1 (x) e_i) (x) (e^i (x) 1).
    """
    F, n = H.field, H.dim
    N = n * n
    Fz = F.zeros
    D3 = H.delta.a.reshape(n, n, n)                        # [x, y, z]: coeff of e_x (x) e_y in Delta(e_z)
    m3 = H.m.a.reshape(n, n, n)                            # [z, x, y]: coeff of e_z in e_x e_y
    D2 = (kron(H.delta, H.I) @ H.delta).a.reshape(n, n, n, n)   # [u, v, w, s]
    Sinv = H.S_inv.a
    add, mul = F.add, F.mul

    # conj[q, w, u, y] = e^q(S^-1(e_w) e_y e_u)
    triple = _triple_products(H)                           # [r, x, y, z] coeff of e_r in e_x e_y e_z
    conj = Fz((n, n, n, n))
    for w in range(n):
        for x in range(n):
            if F.is_zero(Sinv[x, w]):
                continue
            for y in range(n):
                for u_ in range(n):
                    for q in range(n):
                        c = triple[q, x, y, u_]
                        if not F.is_zero(c):
                            conj[q, w, u_, y] = add(conj[q, w, u_, y], mul(Sinv[x, w], c))

    m = Fz((N, N * N))
    for p in range(n):
        for s in range(n):
            for q in range(n):
                for t in range(n):
                    col = (p * n + s) * N + (q * n + t)
                    for u_ in range(n):
                        for v in range(n):
                            for w in range(n):
                                c = D2[u_, v, w, s]
                                if F.is_zero(c):
                                    continue
                                for y in range(n):
                                    cy = conj[q, w, u_, y]
                                    if F.is_zero(cy):
                                        continue
                                    cy = mul(c, cy)
                                    for z in range(n):       # e^p e^y = sum_z D3[p, y, z] e^z
                                        cz = D3[p, y, z]
                                        if F.is_zero(cz):
                                            continue
                                        czy = mul(cy, cz)
                                        for r in range(n):   # e_v e_t = sum_r m3[r, v, t] e_r
                                            cr = m3[r, v, t]
                                            if not F.is_zero(cr):
                                                m[z * n + r, col] = add(m[z * n + r, col], mul(czy, cr))
    u = kron(H.eps.T, H.u)                                 # eps (x) 1
    # coproduct: Delta(e^p) = sum e^p(e_y e_x) e^x (x) e^y ; Delta(a) = Delta_H(a)
    D = Fz((N * N, N))
    for p in range(n):
        for s in range(n):
            for x in range(n):
                for y in range(n):
                    cf = m3[p, y, x]
                    if F.is_zero(cf):
                        continue
                    for s1 in range(n):
                        for s2 in range(n):
                            ca = D3[s1, s2, s]
                            if F.is_zero(ca):
                                continue
                            row = (x * n + s1) * N + (y * n + s2)
                            D[row, p * n + s] = add(D[row, p * n + s], mul(cf, ca))
    eD = kron(H.u.T, H.eps)                                # f (x) a -> f(1) eps(a)
    M = lambda a: Matrix(F, a, _trusted=True)
    mD, uD, DD = M(m), u, M(D)
    S = _double_antipode(H, mD)
    names = [f"e^{H.names[p]}⊗{H.names[s]}" for p in range(n) for s in range(n)]
    Dh = ClassicalHopf(F, mD, uD, DD, eD, S, names=names)
    R = canonical_R(H)
    rep = check_R(Dh, R)
    if not rep.ok:
        raise ConstructionFailure(f"canonical R of the double fails {[c.name for c in rep.failures()]}")
    return {"D": Dh, "R": R}


def canonical_R(H: ClassicalHopf) -> Matrix:
    """sum_i (eps (x) e_i) (x) (e^i (x) 1) in D(H) (x) D(H)."""
    total = None
    for i in range(H.dim):
        term = kron(kron(H.eps.T, H.basis(i)), kron(H.basis(i), H.u))
        total = term if total is None else total + term
    return total


def _triple_products(H):
    n = H.dim
    return (H.m @ kron(H.m, H.I)).a.reshape(n, n, n, n)


def _double_antipode(H, mD):
    """S(f (x) a) = (eps (x) S(a)) (f o S^-1 (x) 1), using both factors as Hopf subalgebras."""
    F, n = H.field, H.dim
    cols = []
    for p in range(n):
        f = Matrix(F, H.S_inv.a[p, :].reshape(-1, 1).copy(), _trusted=True)
        right = kron(f, H.u)
        for s_ in range(n):
            cols.append(mD @ kron(kron(H.eps.T, H.S @ H.basis(s_)), right))
    return hstack(cols)


def drinfeld_map(H: ClassicalHopf, R: Matrix) -> Matrix:
    """f -> (f (x) id)(R_21 R) as an n x n matrix (columns indexed by the dual basis)."""
    n = H.dim
    Q = H.mul2(H.R21(R), R)
    return Matrix(H.field, Q.a.reshape(n, n).T.copy(), _trusted=True)


def drinfeld_map_rank(H: ClassicalHopf, R: Matrix) -> int:
    return rank(drinfeld_map(H, R))


def is_factorizable(H: ClassicalHopf, R: Matrix) -> bool:
    return drinfeld_map_rank(H, R) == H.dim


__all__ = [
    "ClassicalHopf", "ClassicalElement", "check_R", "check_grouplike", "check_pivotal", "check_central", "check_balanced",
    "check_ribbon", "drinfeld_u_classical", "corollary_check", "drinfeld_double", "canonical_R", "drinfeld_map",
    "drinfeld_map_rank", "is_factorizable",
]
