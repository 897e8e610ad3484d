"""Immutable dense matrices over an exact field.

Morphisms act on column vectors, so ``f @ g`` is "f after g". Tensor factors
are flattened row-major: e_i (x) f_j sits at index ``i*dim(Y) + j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import DimensionMismatch, FieldMismatch, NotInvertible
from ._backend import kernels
from .fields import Field, PrimeField, SimpleExtension


class Matrix:
    __slots__ = ("field", "a")

    def __init__(self, field: Field, a: np.ndarray, _trusted=False):
        if not _trusted:
            a = field.array(a)
            if a.ndim != 2:
                raise DimensionMismatch(f"expected a 2d array, got shape {a.shape}")
        a.flags.writeable = False
        self.field = field
        self.a = a

    # -- constructors
    @classmethod
    def from_rows(cls, field, rows):
        rows = list(rows)
        if rows and not isinstance(rows[0], (list, tuple, np.ndarray)):
            raise DimensionMismatch("rows must be sequences")
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        arr = np.empty((len(rows), ncols), dtype=object)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                arr[i, j] = v
        return cls(field, arr)

    @classmethod
    def zeros(cls, field, r, c):
        return cls(field, field.zeros((r, c)), _trusted=True)

    @classmethod
    def identity(cls, field, n):
        a = field.zeros((n, n))
        for i in range(n):
            a[i, i] = field.one
        return cls(field, a, _trusted=True)

    @classmethod
    def column(cls, field, values):
        return cls.from_rows(field, [[v] for v in values])

    @classmethod
    def row(cls, field, values):
        return cls.from_rows(field, [list(values)])

    @classmethod
    def scalar(cls, field, value):
        return cls.from_rows(field, [[value]])

    @classmethod
    def unit_column(cls, field, n, i):
        a = field.zeros((n, 1))
        a[i, 0] = field.one
        return cls(field, a, _trusted=True)

    # -- shape
    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def __getitem__(self, idx):
        r, c = idx if isinstance(idx, tuple) else (idx, slice(None))
        ints = (int, np.integer)
        if isinstance(r, ints) and isinstance(c, ints):
            return self.a[r, c]
        r = slice(r, r + 1) if isinstance(r, ints) else r
        c = slice(c, c + 1) if isinstance(c, ints) else c
        return Matrix(self.field, self.a[r, c].copy(), _trusted=True)

    # -- arithmetic
    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        if isinstance(self.field, PrimeField):
            return Matrix(self.field, (self.a + other.a) % self.field.p, _trusted=True)
        return Matrix(self.field, self.a + other.a, _trusted=True)

    def __neg__(self):
        if isinstance(self.field, PrimeField):
            return Matrix(self.field, (-self.a) % self.field.p, _trusted=True)
        return Matrix(self.field, -self.a, _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.coerce(c)
        if isinstance(self.field, PrimeField):
            return Matrix(self.field, (self.a * c) % self.field.p, _trusted=True)
        return Matrix(self.field, self.a * c, _trusted=True)

    @property
    def T(self):
        return Matrix(self.field, self.a.T.copy(), _trusted=True)

    def kron(self, other):
        return kron(self, other)

    def __pow__(self, k):
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return invert(self) ** (-k)
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    # -- comparison
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.array_equal(self.a, other.a))

    def __hash__(self):
        return hash((self.field, self.shape, tuple(map(str, self.a.reshape(-1)))))

    def is_zero(self):
        return self.witness_nonzero() is None

    def witness_nonzero(self):
        """First (row, col) holding a nonzero entry, or None."""
        nz = _nonzero_mask(self.field, self.a)
        idx = np.argwhere(nz)
        return None if idx.size == 0 else (int(idx[0][0]), int(idx[0][1]))

    def diff(self, other):
        """First (row, col) where the two matrices differ, or None when equal."""
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return (self - other).witness_nonzero()

    # -- conversion
    def to_strings(self):
        fmt = self.field.format
        return [[fmt(v) for v in row] for row in self.a]

    def entries(self):
        return [list(row) for row in self.a]

    def flat(self):
        """Entries as a tuple in row-major order (useful as a sort/dict key)."""
        return tuple(self.a.reshape(-1).tolist())

    def __repr__(self):
        body = "; ".join(" ".join(r) for r in self.to_strings())
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"


def _nonzero_mask(field, a):
    if a.dtype != object:
        return a != 0
    if isinstance(field, SimpleExtension):
        return np.frompyfunc(lambda x: not x.is_zero(), 1, 1)(a).astype(bool)
    return (a != 0).astype(bool)


def mat_mul(f: Matrix, g: Matrix) -> Matrix:
    f._check(g)
    if f.cols != g.rows:
        raise DimensionMismatch(f"cannot compose {f.shape} after {g.shape}")
    field = f.field
    if f.cols == 0:
        return Matrix.zeros(field, f.rows, g.cols)
    if isinstance(field, PrimeField):
        return Matrix(field, kernels.matmul_mod(f.a, g.a, field.p), _trusted=True)
    rows, ks = np.nonzero(_nonzero_mask(field, f.a))
    if 4 * len(rows) > f.a.size:
        return Matrix(field, f.a.dot(g.a), _trusted=True)
    # sparse left factor: layer j adds the j-th nonzero of every row in one vectorized step
    out = field.zeros((f.rows, g.cols))
    first = np.searchsorted(rows, rows)
    layer = np.arange(len(rows)) - first
    for j in range(int(layer.max(initial=-1)) + 1):
        sel = layer == j
        ri, ki = rows[sel], ks[sel]
        v = f.a[ri, ki]
        term = g.a[ki] if all(x == field.one for x in v) else v[:, None] * g.a[ki]
        if j == 0:
            out[ri] = term
        else:
            out[ri] += term
    return Matrix(field, out, _trusted=True)


def kron(f: Matrix, g: Matrix) -> Matrix:
    f._check(g)
    out = np.kron(f.a, g.a)
    if isinstance(f.field, PrimeField):
        out %= f.field.p
    if out.size == 0:
        out = f.field.zeros((f.rows * g.rows, f.cols * g.cols))
    return Matrix(f.field, out, _trusted=True)


def kron_all(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = kron(out, m)
    return out


def apply_kron(factors, X: Matrix) -> Matrix:
    """kron_all(*factors) @ X without forming the Kronecker product.

    A factor may be an int n, standing for the identity of size n.
    """
    field = X.field
    dims_in = [f if isinstance(f, int) else f.cols for f in factors]
    if int(np.prod(dims_in)) != X.rows:
        raise DimensionMismatch(f"factors with {dims_in} inputs cannot act on {X.rows} rows")
    n = X.cols
    t = X.a.reshape(dims_in + [n])
    for i, f in enumerate(factors):
        if isinstance(f, int):
            continue
        moved = np.moveaxis(t, i, 0)
        rest = moved.shape[1:]
        flat = Matrix(field, moved.reshape(f.cols, -1), _trusted=True)
        t = np.moveaxis((f @ flat).a.reshape((f.rows,) + rest), 0, i)
    return Matrix(field, np.ascontiguousarray(t).reshape(-1, n), _trusted=True)


def hstack(ms) -> Matrix:
    ms = list(ms)
    for m in ms[1:]:
        ms[0]._check(m)
    return Matrix(ms[0].field, np.hstack([m.a for m in ms]), _trusted=True)


def vstack(ms) -> Matrix:
    ms = list(ms)
    for m in ms[1:]:
        ms[0]._check(m)
    return Matrix(ms[0].field, np.vstack([m.a for m in ms]), _trusted=True)


def tensor_permutation(field: Field, dims, order) -> Matrix:
    """Matrix of the map V_0 (x) ... (x) V_k -> V_order[0] (x) ... (x) V_order[k]."""
    dims = list(dims)
    order = list(order)
    if sorted(order) != list(range(len(dims))):
        raise ValueError(f"{order} is not a permutation")
    out_dims = [dims[i] for i in order]
    total = int(np.prod(dims)) if dims else 1
    a = field.zeros((total, total))
    for idx in product(*[range(d) for d in dims]):
        src = 0
        for k, d in zip(idx, dims):
            src = src * d + k
        dst = 0
        for t, d in zip(order, out_dims):
            dst = dst * d + idx[t]
        a[dst, src] = field.one
    return Matrix(field, a, _trusted=True)


def swap(field: Field, m: int, n: int) -> Matrix:
    """The flip X (x) Y -> Y (x) X for dim X = m, dim Y = n."""
    return tensor_permutation(field, [m, n], [1, 0])


# -- row reduction

def rref(A: Matrix):
    """Reduced row echelon form of A; returns (R, pivot columns)."""
    field = A.field
    if isinstance(field, PrimeField):
        R, piv = kernels.rref_mod(A.a, field.p)
        return Matrix(field, R, _trusted=True), piv
    R, piv = _rref_object(field, A.a)
    return Matrix(field, R, _trusted=True), piv


def _rref_object(field, a):
    R = np.array(a, dtype=object, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(_nonzero_mask(field, R[r:, c]))
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r, c:] = R[r, c:] * field.inv(R[r, c])
        col = R[:, c].copy()
        col[r] = field.zero
        hit = np.flatnonzero(_nonzero_mask(field, col))
        if hit.size:
            R[np.ix_(hit, range(c, cols))] = R[np.ix_(hit, range(c, cols))] - np.outer(col[hit], R[r, c:])
        pivots.append(c)
        r += 1
    return R, tuple(pivots)


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def nullspace(A: Matrix) -> list:
    """Basis of ker A as column matrices, one per free variable in increasing order."""
    R, piv = rref(A)
    return _kernel_basis(A.field, R, piv, A.cols)


def _kernel_basis(field, R, piv, n):
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for f in free:
        v = field.zeros((n, 1))
        v[f, 0] = field.one
        for i, p in enumerate(piv):
            v[p, 0] = field.neg(R.a[i, f])
        basis.append(Matrix(field, v, _trusted=True))
    return basis


@dataclass(frozen=True)
class AffineSolution:
    particular: Matrix
    nullspace_basis: list

    @property
    def dim(self):
        return len(self.nullspace_basis)

    def point(self, coeffs):
        """particular + sum coeffs[i] * basis[i]."""
        x = self.particular
        for c, v in zip(coeffs, self.nullspace_basis):
            x = x + v.scale(c)
        return x


def solve_affine(A: Matrix, b: Matrix):
    """All x with A x = b, or None when the system is inconsistent.

    ``b`` may have several columns; the solution then has as many columns and
    the null space basis still describes single columns of x.
    """
    A._check(b)
    if A.rows != b.rows:
        raise DimensionMismatch(f"A has {A.rows} rows, b has {b.rows}")
    n, k = A.cols, b.cols
    R, piv = rref(hstack([A, b]))
    if any(p >= n for p in piv):
        return None
    field = A.field
    x = field.zeros((n, k))
    for i, p in enumerate(piv):
        x[p, :] = R.a[i, n:]
    basis = _kernel_basis(field, Matrix(field, R.a[:, :n].copy(), _trusted=True), piv, n)
    return AffineSolution(Matrix(field, x, _trusted=True), basis)


def invert(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise DimensionMismatch(f"cannot invert a {A.rows}x{A.cols} matrix")
    n = A.rows
    R, piv = rref(hstack([A, Matrix.identity(A.field, n)]))
    if piv[:n] != tuple(range(n)):
        raise NotInvertible(f"rank {sum(1 for p in piv if p < n)} < {n}")
    return Matrix(A.field, R.a[:, n:].copy(), _trusted=True)


def is_invertible(A: Matrix) -> bool:
    return A.rows == A.cols and rank(A) == A.rows


def linear_map_matrix(fn, n: int, field: Field) -> Matrix:
    """Matrix of a linear map given as a function on column vectors of length n.

    ``fn`` must return a column Matrix; column k of the result is fn(e_k).
    """
    cols = [fn(Matrix.unit_column(field, n, k)) for k in range(n)]
    return hstack(cols)


def exact_tensordot(field: Field, a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    """np.tensordot without int64 overflow for prime fields."""
    if isinstance(field, PrimeField):
        out = np.tensordot(a.astype(object), b.astype(object), axes)
        return np.mod(out, field.p).astype(np.int64)
    return np.tensordot(a, b, axes)
