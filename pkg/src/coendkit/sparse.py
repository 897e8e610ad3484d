"""Sparse elements of tensor powers H^{(x)k} of a finite dimensional algebra.

An element is a dict mapping index tuples to nonzero field values. This keeps
checks like (id (x) Delta)(R) = R_13 R_12 cheap even when dim(H)^3 is large.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from .linalg import Matrix
from .linalg.matrix import _nonzero_mask


class TensorAlgebra:
    def __init__(self, field, m: Matrix, u: Matrix):
        self.field = field
        self.n = u.rows
        n = self.n
        self._prod = {}
        for i in range(n):
            for j in range(n):
                col = self._column(m, i * n + j)
                if col:
                    self._prod[i, j] = col
        self.unit = self._column(u, 0)

    def _column(self, M: Matrix, c):
        nz = np.flatnonzero(_nonzero_mask(self.field, M.a[:, c]))
        return {int(r): M.a[r, c] for r in nz}

    # -- conversion
    def from_vector(self, v: Matrix, k: int) -> dict:
        n = self.n
        out = {}
        for flat in range(v.rows):
            val = v.a[flat, 0]
            if self.field.is_zero(val):
                continue
            idx = []
            for _ in range(k):
                idx.append(flat % n)
                flat //= n
            out[tuple(reversed(idx))] = val
        return out

    def to_vector(self, x: dict, k: int) -> Matrix:
        n = self.n
        a = self.field.zeros((n ** k, 1))
        for idx, val in x.items():
            flat = 0
            for i in idx:
                flat = flat * n + i
            a[flat, 0] = val
        return Matrix(self.field, a, _trusted=True)

    def basis(self, *idx) -> dict:
        return {tuple(idx): self.field.one}

    # -- arithmetic
    def add(self, x, y):
        F = self.field
        out = dict(x)
        for idx, v in y.items():
            s = F.add(out.get(idx, F.zero), v)
            if F.is_zero(s):
                out.pop(idx, None)
            else:
                out[idx] = s
        return out

    def scale(self, x, c):
        F = self.field
        c = F.coerce(c)
        if F.is_zero(c):
            return {}
        return {idx: F.mul(v, c) for idx, v in x.items()}

    def sub(self, x, y):
        return self.add(x, self.scale(y, self.field.neg(self.field.one)))

    def mul(self, x, y):
        """Factorwise product in H^{(x)k}."""
        F = self.field
        acc = {}
        for I, xv in x.items():
            for J, yv in y.items():
                cols = []
                for i, j in zip(I, J):
                    c = self._prod.get((i, j))
                    if not c:
                        break
                    cols.append(c.items())
                else:
                    c0 = F.mul(xv, yv)
                    for combo in product(*cols):
                        val = c0
                        for _, cv in combo:
                            val = F.mul(val, cv)
                        idx = tuple(r for r, _ in combo)
                        acc[idx] = F.add(acc.get(idx, F.zero), val)
        return {k: v for k, v in acc.items() if not F.is_zero(v)}

    def apply(self, x, maps):
        """Apply one linear map per tensor factor.

        ``maps[t]`` is a pair (M, j) with M a Matrix from H to H^{(x)j}, or None
        for the identity.
        """
        F = self.field
        n = self.n
        decoded = []
        for spec in maps:
            if spec is None:
                decoded.append(None)
                continue
            M, k_out = spec
            table = {}
            for c in range(M.cols):
                col = self._column(M, c)
                table[c] = [(_unflatten(r, n, k_out), v) for r, v in col.items()]
            decoded.append(table)
        acc = {}
        for I, xv in x.items():
            parts = []
            for i, table in zip(I, decoded):
                parts.append([((i,), F.one)] if table is None else table[i])
            for combo in product(*parts):
                val = xv
                idx = ()
                for sub, cv in combo:
                    val = F.mul(val, cv)
                    idx += sub
                acc[idx] = F.add(acc.get(idx, F.zero), val)
        return {k: v for k, v in acc.items() if not F.is_zero(v)}

    def multiply_legs(self, x):
        """x_1 x_2 ... x_k as an element of H."""
        F = self.field
        acc = {}
        for I, v in x.items():
            cur = {(I[0],): v}
            for i in I[1:]:
                cur = self.mul(cur, {(i,): F.one})
            acc = self.add(acc, cur)
        return acc

    def permute(self, x, order):
        """Reorder tensor factors: output factor t is input factor order[t]."""
        return {tuple(I[o] for o in order): v for I, v in x.items()}

    def embed(self, x, positions, k):
        """Place the factors of x at ``positions`` of H^{(x)k}, units elsewhere."""
        F = self.field
        out = {}
        units = list(self.unit.items())
        others = [p for p in range(k) if p not in positions]
        for I, v in x.items():
            for combo in product(units, repeat=len(others)):
                idx = [None] * k
                for p, i in zip(positions, I):
                    idx[p] = i
                val = v
                for p, (r, cv) in zip(others, combo):
                    idx[p] = r
                    val = F.mul(val, cv)
                idx = tuple(idx)
                acc = F.add(out.get(idx, F.zero), val)
                out[idx] = acc
        return {k_: v for k_, v in out.items() if not F.is_zero(v)}

    def diff(self, x, y):
        """A differing index tuple, or None when x == y."""
        d = self.sub(x, y)
        return min(d) if d else None


def _unflatten(flat, n, k):
    idx = []
    for _ in range(k):
        idx.append(flat % n)
        flat //= n
    return tuple(reversed(idx))
