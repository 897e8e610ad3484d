"""Pure numpy kernels for dense matrices over F_p (int64 storage, p < 2^31)."""
import numpy as np

NAME = "python"

_LIMIT = 2**63 - 1


def matmul_mod(a, b, p):
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    inner = a.shape[1]
    # largest chunk of the inner dimension whose partial sums cannot overflow
    step = max(1, _LIMIT // ((p - 1) ** 2 + 1)) if p > 1 else inner
    if step >= inner:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(0, inner, step):
        out = (out + (a[:, k:k + step] @ b[k:k + step]) % p) % p
    return out


def rref_mod(a, p):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = np.array(a, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = (R[r] * inv) % p
        f = R[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            R[hit] = (R[hit] - np.outer(f[hit], R[r]) % p) % p
        pivots.append(c)
        r += 1
    return R, tuple(pivots)
