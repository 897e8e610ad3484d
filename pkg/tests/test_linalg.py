from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coendkit.errors import DivisionByZero, FieldMismatch, NotInvertible, ParseError
from coendkit.linalg import (Matrix, apply_kron, PrimeField, Rationals, SimpleExtension, field_from_spec, field_to_spec, invert,
                             is_invertible, kron, kron_all, nullspace, rank, rref, solve_affine, swap,
                             tensor_permutation)
from coendkit.linalg import _fallback

Q = Rationals()
F5 = PrimeField(5)
QI = SimpleExtension(Q, (1, 0, 1), "i")
FIELDS = [Q, F5, PrimeField(3), QI]

small = st.integers(-4, 4)


def mats(F, r, c):
    return st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r).map(
        lambda rows: Matrix.from_rows(F, rows))


def square(F, n=3):
    return mats(F, n, n)


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(6)


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_parse_format_round_trip(F):
    rng = np.random.default_rng(1)
    for _ in range(20):
        x = F.random(rng)
        assert F.parse(F.format(x)) == x


def test_parse_grammar():
    assert Q.parse("-1/2") == Fraction(-1, 2)
    assert F5.parse("7") == 2
    assert F5.format(F5.parse("-1")) == "4"
    assert QI.is_zero(QI.parse("i^2+1"))
    with pytest.raises(ParseError):
        F5.parse("x")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q.inv(Q.zero)
    with pytest.raises(DivisionByZero):
        F5.inv(0)


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_field_spec_round_trip(F):
    assert field_to_spec(field_from_spec(field_to_spec(F))) == field_to_spec(F)


@given(st.data())
@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_field_axioms(F, data):
    a, b, c = (F.coerce(data.draw(small)) for _ in range(3))
    if F is QI:
        a = F.add(a, F.mul(F.coerce(data.draw(small)), F.gen()))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    if not F.is_zero(a):
        assert F.mul(a, F.inv(a)) == F.one


def _dense_product(f, g):
    return Matrix.from_rows(f.field, [[sum((f.a[i, k] * g.a[k, j] for k in range(f.cols)), f.field.zero)
                                       for j in range(g.cols)] for i in range(f.rows)])


@given(st.data())
@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_sparse_product_matches_definition(F, data):
    """Mostly-zero left factors take the row-gather path; results must not change."""
    n = data.draw(st.integers(1, 6))
    entries = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), small), max_size=n))
    rows = [[0] * n for _ in range(n)]
    for i, k, v in entries:
        rows[i][k] = v
    f = Matrix.from_rows(F, rows)
    g = data.draw(mats(F, n, 3))
    want = _dense_product(f, g)
    if isinstance(F, PrimeField):
        want = Matrix.from_rows(F, [[x % F.p for x in r] for r in want.a.tolist()])
    assert f @ g == want


@given(st.data())
@pytest.mark.parametrize("F", [Q, F5], ids=str)
def test_apply_kron_matches_kron(F, data):
    A, B = data.draw(mats(F, 2, 3)), data.draw(mats(F, 3, 2))
    X = data.draw(mats(F, 3 * 4 * 2, 2))
    assert apply_kron([A, 4, B], X) == kron_all(A, Matrix.identity(F, 4), B) @ X


@given(st.data())
@pytest.mark.parametrize("F", [Q, F5], ids=str)
def test_matmul_associative_and_kron_mixed_product(F, data):
    A, B, C = data.draw(mats(F, 2, 3)), data.draw(mats(F, 3, 2)), data.draw(mats(F, 2, 2))
    assert (A @ B) @ C == A @ (B @ C)
    D, E = data.draw(mats(F, 2, 3)), data.draw(mats(F, 3, 1))
    assert kron(A, D) @ kron(B, E) == kron(A @ B, D @ E)


@given(st.data())
@pytest.mark.parametrize("F", [Q, F5, QI], ids=str)
def test_rank_nullity(F, data):
    A = data.draw(mats(F, 3, 4))
    ns = nullspace(A)
    assert rank(A) + len(ns) == 4
    for v in ns:
        assert (A @ v).is_zero()


@given(st.data())
@pytest.mark.parametrize("F", [Q, F5, QI], ids=str)
def test_inverse(F, data):
    A = data.draw(square(F))
    I = Matrix.identity(F, 3)
    if is_invertible(A):
        assert A @ invert(A) == I and invert(A) @ A == I
    else:
        with pytest.raises(NotInvertible):
            invert(A)


@given(st.data())
def test_solve_affine(data):
    A = data.draw(mats(Q, 3, 4))
    x = data.draw(mats(Q, 4, 1))
    b = A @ x
    sol = solve_affine(A, b)
    assert sol is not None
    assert A @ sol.particular == b
    coeffs = [Fraction(k) for k in range(sol.dim)]
    assert A @ sol.point(coeffs) == b


def test_solve_affine_inconsistent():
    A = Matrix.from_rows(Q, [[1, 0], [1, 0]])
    assert solve_affine(A, Matrix.column(Q, [1, 2])) is None


def test_rref_known():
    R, piv = rref(Matrix.from_rows(Q, [[1, 2], [3, 4]]))
    assert R == Matrix.identity(Q, 2) and tuple(piv) == (0, 1)
    assert invert(Matrix.from_rows(Q, [[1, 2], [3, 4]])).to_strings() == [["-2", "1"], ["3/2", "-1/2"]]


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Matrix.identity(Q, 2) @ Matrix.identity(F5, 2)


def test_swap_and_permutation():
    a, b = Matrix.column(Q, [1, 2]), Matrix.column(Q, [3, 4, 5])
    assert swap(Q, 2, 3) @ kron(a, b) == kron(b, a)
    c = Matrix.column(Q, [6, 7])
    P = tensor_permutation(Q, (2, 3, 2), (2, 0, 1))
    assert P @ kron_all(a, b, c) == kron_all(c, a, b)


@given(st.integers(2, 40), st.integers(1, 12), st.integers(0, 10_000))
def test_kernels_agree(n, m, seed):
    """Compiled and numpy kernels give identical results."""
    from coendkit.linalg import _backend

    p = 7
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, (n, m))
    b = rng.integers(0, p, (m, n))
    k = _backend.kernels
    assert np.array_equal(k.matmul_mod(a, b, p), _fallback.matmul_mod(a, b, p))
    r1, p1 = k.rref_mod(a, p)
    r2, p2 = _fallback.rref_mod(a, p)
    assert np.array_equal(r1, r2) and tuple(p1) == tuple(p2)


def test_fallback_large_prime_no_overflow():
    p = 2**31 - 1
    a = np.full((3, 70000), p - 1, dtype=np.int64)
    b = np.full((70000, 1), p - 1, dtype=np.int64)
    expect = (70000 * (p - 1) ** 2) % p
    assert _fallback.matmul_mod(a, b, p)[0, 0] == expect
