# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense matrices over F_p (int64 storage, p < 2^31)."""
import numpy as np
cimport numpy as cnp

NAME = "cython"

ctypedef cnp.int64_t i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt; t = nt; nt = tmp
        tmp = r - q * nr; r = nr; nr = tmp
    if t < 0:
        t += p
    return t


def matmul_mod(a, b, i64 p):
    cdef const i64[:, ::1] A = np.ascontiguousarray(a, dtype=np.int64)
    cdef const i64[:, ::1] B = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t n = A.shape[0], m = A.shape[1], k = B.shape[1]
    cdef Py_ssize_t i, j, l
    out = np.zeros((n, k), dtype=np.int64)
    cdef i64[:, ::1] O = out
    cdef i64 x
    for i in range(n):
        for l in range(m):
            x = A[i, l]
            if x == 0:
                continue
            for j in range(k):
                O[i, j] = (O[i, j] + x * B[l, j]) % p
    return out


def rref_mod(a, i64 p):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    out = np.array(a, dtype=np.int64) % p
    cdef i64[:, ::1] R = out
    cdef Py_ssize_t rows = R.shape[0], cols = R.shape[1]
    cdef Py_ssize_t r = 0, c, k, i, j
    cdef i64 inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        k = r
        while k < rows and R[k, c] == 0:
            k += 1
        if k == rows:
            continue
        if k != r:
            for j in range(cols):
                tmp = R[r, j]; R[r, j] = R[k, j]; R[k, j] = tmp
        inv = _inv(R[r, c], p)
        for j in range(c, cols):
            R[r, j] = (R[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = R[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                R[i, j] = (R[i, j] - f * R[r, j]) % p
                if R[i, j] < 0:
                    R[i, j] += p
        pivots.append(c)
        r += 1
    return out, tuple(pivots)
