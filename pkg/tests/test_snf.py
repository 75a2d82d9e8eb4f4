"""Smith normal form: unimodular transforms, divisibility, sympy cross-check."""

import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from twochar.snf import smith_normal_form, solve_mod


def _as_np(rows):
    return np.array(rows, dtype=object)


def _check_decomposition(A):
    A = [list(map(int, row)) for row in A]
    m, n = len(A), len(A[0]) if A else 0
    res = smith_normal_form(A, want_u=True, want_v=True, want_uinv=True, want_vinv=True)
    U, V = _as_np(res.U), _as_np(res.V)
    S = U @ _as_np(A) @ V
    for i in range(m):
        for j in range(n):
            expect = res.diag[i] if i == j and i < len(res.diag) else 0
            assert S[i][j] == expect
    assert abs(round(float(sympy.Matrix(res.U).det()))) == 1
    assert abs(round(float(sympy.Matrix(res.V).det()))) == 1
    assert (_as_np(res.U) @ _as_np(res.Uinv) == np.eye(m, dtype=object)).all()
    assert (_as_np(res.V) @ _as_np(res.Vinv) == np.eye(n, dtype=object)).all()
    for i in range(len(res.diag) - 1):
        if res.diag[i + 1]:
            assert res.diag[i + 1] % max(res.diag[i], 1) == 0 or res.diag[i] == 0
    return res


def _sympy_divisors(A):
    m = sympy.Matrix(A)
    if m.rows == 0 or m.cols == 0:
        return []
    d = sympy_snf(m)
    return [abs(int(d[i, i])) for i in range(min(d.rows, d.cols))]


def test_known_matrices():
    res = _check_decomposition([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert res.diag == [2, 2, 156]
    res = _check_decomposition([[1, 0], [0, 1]])
    assert res.diag == [1, 1]
    res = _check_decomposition([[0, 0], [0, 0]])
    assert res.diag == [0, 0]


@settings(max_examples=80, deadline=None)
@given(
    m=st.integers(1, 5),
    n=st.integers(1, 5),
    data=st.data(),
)
def test_matches_sympy_oracle(m, n, data):
    A = [
        [data.draw(st.integers(-9, 9)) for _ in range(n)]
        for _ in range(m)
    ]
    res = _check_decomposition(A)
    mine = [d for d in res.diag if d]
    theirs = [d for d in _sympy_divisors(A) if d]
    assert mine == theirs


def test_large_entries_stay_exact():
    A = [[10**12, 10**9 + 7], [10**6, 3]]
    res = _check_decomposition(A)
    assert [d for d in res.diag if d] == [d for d in _sympy_divisors(A) if d]


def test_solve_mod_roundtrip():
    A = [[2, 0, 1], [0, 4, 2], [2, 4, 3]]
    L = 8
    res = smith_normal_form(A, want_u=True, want_v=True)
    rng = np.random.default_rng(7)
    for _ in range(25):
        x = rng.integers(0, L, size=3)
        b = (np.array(A) @ x) % L
        sol = solve_mod(res, b, L)
        assert sol is not None
        assert ((np.array(A) @ np.array(sol)) % L == b).all()


def test_solve_mod_detects_inconsistency():
    A = [[2, 0], [0, 2]]
    res = smith_normal_form(A)
    assert solve_mod(res, [1, 0], 4) is None
    assert solve_mod(res, [2, 2], 4) is not None
