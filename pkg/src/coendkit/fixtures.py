"""Standard small Hopf algebras and ambient categories used by tests, bundles and the CLI.

Everything is given by structure constants on a named basis; products and
coproducts are dicts ``{basis index (tuple): coefficient}``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .ambient import AmbientHopf
from .linalg import Matrix, PrimeField, Rationals


class HopfData:
    """Structure matrices of a Hopf algebra over k on the basis ``names``."""

    def __init__(self, field, names, m, u, delta, eps, S, S_inv=None):
        self.field, self.names = field, list(names)
        self.m, self.u, self.delta, self.eps, self.S, self.S_inv = m, u, delta, eps, S, S_inv

    @property
    def dim(self):
        return len(self.names)

    def element(self, coeffs: dict) -> Matrix:
        """Column vector from {name: coefficient}."""
        col = [0] * self.dim
        for k, v in coeffs.items():
            col[self.names.index(k)] = v
        return Matrix.column(self.field, col)

    def tensor(self, coeffs: dict) -> Matrix:
        """Element of H(x)H from {(name, name): coefficient}."""
        n = self.dim
        col = [0] * (n * n)
        for (a, b), v in coeffs.items():
            col[self.names.index(a) * n + self.names.index(b)] = v
        return Matrix.column(self.field, col)

    def ambient(self, R=None, name=None, validate=True):
        return AmbientHopf(self.field, self.m, self.u, self.delta, self.eps, self.S, self.S_inv,
                           R, name=name or "A", validate=validate)


def from_tables(field, names, mul, unit, comul, counit, antipode) -> HopfData:
    """Build matrices from functions on basis indices.

    mul(i, j) -> {k: c}; comul(i) -> {(j, k): c}; counit(i) -> c; antipode(i) -> {k: c}.
    """
    n = len(names)
    F = field
    m = F.zeros((n, n * n))
    D = F.zeros((n * n, n))
    e = F.zeros((1, n))
    S = F.zeros((n, n))
    for i in range(n):
        for j in range(n):
            for k, c in mul(i, j).items():
                m[k, i * n + j] = F.coerce(c)
        for (j, k), c in comul(i).items():
            D[j * n + k, i] = F.coerce(c)
        e[0, i] = F.coerce(counit(i))
        for k, c in antipode(i).items():
            S[k, i] = F.coerce(c)
    u = Matrix.unit_column(F, n, unit)
    M = lambda a: Matrix(F, a, _trusted=True)
    return HopfData(F, names, M(m), u, M(D), M(e), M(S))


def trivial(field=None) -> HopfData:
    field = field or Rationals()
    return from_tables(field, ["1"], lambda i, j: {0: 1}, 0, lambda i: {(0, 0): 1},
                       lambda i: 1, lambda i: {0: 1})


def group_algebra(field, elements, op, inverse, names=None, identity=None) -> HopfData:
    elements = list(elements)
    idx = {g: k for k, g in enumerate(elements)}
    e = identity if identity is not None else next(g for g in elements if all(op(g, h) == h for h in elements))
    return from_tables(
        field,
        names or [str(g) for g in elements],
        lambda i, j: {idx[op(elements[i], elements[j])]: 1},
        idx[e],
        lambda i: {(i, i): 1},
        lambda i: 1,
        lambda i: {idx[inverse(elements[i])]: 1},
    )


def cyclic(n=2, field=None) -> HopfData:
    """k Z/n on the basis 1, g, ..., g^{n-1}."""
    field = field or Rationals()
    names = ["1"] + [("g" if k == 1 else f"g^{k}") for k in range(1, n)]
    return group_algebra(field, range(n), lambda a, b: (a + b) % n, lambda a: (-a) % n, names, 0)


def symmetric3(field=None) -> HopfData:
    """k S_3 with basis ordered as itertools.permutations((0, 1, 2))."""
    field = field or Rationals()
    els = list(permutations(range(3)))
    comp = lambda s, t: tuple(s[t[i]] for i in range(3))
    inv = lambda s: tuple(sorted(range(3), key=lambda i: s[i]))
    names = ["".join(map(str, s)) for s in els]
    return group_algebra(field, els, comp, inv, names, (0, 1, 2))


def sweedler(field=None) -> HopfData:
    """Sweedler's H_4: g^2 = 1, x^2 = 0, xg = -gx, Delta x = x(x)1 + g(x)x, S x = -gx.

    Basis 1, g, x, gx; the basis element g^a x^b has index a + 2b.
    """
    field = field or Rationals()

    def mul(i, j):
        a, b = i % 2, i // 2
        c, d = j % 2, j // 2
        if b + d > 1:
            return {}
        return {(a + c) % 2 + 2 * (b + d): (-1) ** (b * c)}

    comul_tab = {
        0: {(0, 0): 1},
        1: {(1, 1): 1},
        2: {(2, 0): 1, (1, 2): 1},
        3: {(3, 1): 1, (0, 3): 1},
    }
    anti = {0: {0: 1}, 1: {1: 1}, 2: {3: -1}, 3: {2: 1}}
    return from_tables(field, ["1", "g", "x", "gx"], mul, 0, comul_tab.__getitem__,
                       lambda i: 1 if i < 2 else 0, anti.__getitem__)


def R_minus(H: HopfData) -> Matrix:
    """The super-vector-space R-matrix 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) of k Z/2."""
    h = Fraction(1, 2)
    return H.tensor({("1", "1"): h, ("1", "g"): h, ("g", "1"): h, ("g", "g"): -h})


def sweedler_R(H: HopfData, alpha=1) -> Matrix:
    """The quasitriangular structures R_alpha of Sweedler's algebra."""
    h = Fraction(1, 2)
    a = H.field.mul(H.field.coerce(alpha), H.field.coerce(h))
    na = H.field.neg(a)
    return H.tensor({("1", "1"): h, ("1", "g"): h, ("g", "1"): h, ("g", "g"): -h,
                     ("x", "x"): a, ("x", "gx"): na, ("gx", "gx"): a, ("gx", "x"): a})


def cyclic_R(H: HopfData, zeta) -> Matrix:
    """(1/n) sum_{j,k} zeta^{jk} g^j (x) g^k on k Z/n for a primitive n-th root of unity zeta."""
    F, n = H.field, H.dim
    z = F.coerce(zeta)
    inv_n = F.inv(F.coerce(n))
    coeffs = {}
    for j in range(n):
        for k in range(n):
            c = F.one
            for _ in range(j * k):
                c = F.mul(c, z)
            coeffs[(H.names[j], H.names[k])] = F.mul(c, inv_n)
    return H.tensor(coeffs)


def anyon_ambient(n=3, p=7, zeta=2) -> AmbientHopf:
    """k Z/n over F_p with a non-symmetric R-matrix: a genuinely braided V."""
    H = cyclic(n, PrimeField(p))
    return H.ambient(cyclic_R(H, zeta), name=f"Z{n}-anyons")


def R_trivial(H: HopfData) -> Matrix:
    return H.tensor({("1", "1"): 1})


def svec_ambient(field=None) -> AmbientHopf:
    """k Z/2 with R_-: right modules are super vector spaces, g acting by the parity sign."""
    H = cyclic(2, field)
    return H.ambient(R_minus(H), name="sVec")


def vec_ambient(field=None) -> AmbientHopf:
    return AmbientHopf.trivial(field or Rationals())


def super_line(A: AmbientHopf, odd: bool, name=None):
    """One dimensional super vector space (needs the sVec ambient)."""
    s = -1 if odd else 1
    return _named(A.module([Matrix.scalar(A.field, 1), Matrix.scalar(A.field, s)]), name)


def super_space(A: AmbientHopf, even: int, odd: int, name=None):
    """k^{even|odd} in the sVec presentation."""
    d = even + odd
    g = Matrix.from_rows(A.field, [[(1 if i < even else -1) if i == j else 0 for j in range(d)] for i in range(d)])
    return _named(A.module([Matrix.identity(A.field, d), g]), name)


def _named(X, name):
    X.name = name
    return X


__all__ = [
    "HopfData", "from_tables", "trivial", "group_algebra", "cyclic", "symmetric3", "sweedler",
    "R_minus", "sweedler_R", "cyclic_R", "anyon_ambient", "R_trivial", "svec_ambient", "vec_ambient", "super_line", "super_space", "PrimeField",
]
