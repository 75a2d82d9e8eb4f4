"""Smith normal form over the integers, with unimodular transforms.

``smith_normal_form(A)`` returns ``U·A·V = S`` with ``S`` diagonal, entries
nonnegative, and each diagonal entry dividing the next.  Inverses of the
transforms can be tracked alongside (columns/rows updated by the inverse
elementary operations), which is what the cohomology solvers need to move
between cocycle coordinates and class coordinates exactly.

All arithmetic is plain Python integers, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class SNFResult:
    rows: int
    cols: int
    diag: list[int]
    U: list[list[int]] | None
    V: list[list[int]] | None
    Uinv: list[list[int]] | None
    Vinv: list[list[int]] | None

    _mod_cache: dict | None = None

    def _mod(self, which: str, L: int) -> np.ndarray:
        """Transform reduced mod L as int64; safe because every later product
        stays below L²·cols < 2^63 for the levels this package uses."""
        if self._mod_cache is None:
            self._mod_cache = {}
        key = (which, L)
        if key not in self._mod_cache:
            mat = self.U if which == "U" else self.V
            size = self.rows if which == "U" else self.cols
            arr = np.zeros((size, size), dtype=np.int64)
            for i, row in enumerate(mat):
                arr[i] = [v % L for v in row]
            self._mod_cache[key] = arr
        return self._mod_cache[key]


def _eye(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(
    A,
    want_u: bool = True,
    want_v: bool = True,
    want_uinv: bool = False,
    want_vinv: bool = False,
) -> SNFResult:
    S = [[int(v) for v in row] for row in A]
    m = len(S)
    n = len(S[0]) if m else 0
    U = _eye(m) if want_u else None
    Uinv = _eye(m) if want_uinv else None
    V = _eye(n) if want_v else None
    Vinv = _eye(n) if want_vinv else None

    def row_sub(i: int, j: int, q: int):
        # S_i ← S_i − q·S_j
        Si, Sj = S[i], S[j]
        for k in range(n):
            Si[k] -= q * Sj[k]
        if U is not None:
            Ui, Uj = U[i], U[j]
            for k in range(m):
                Ui[k] -= q * Uj[k]
        if Uinv is not None:
            for r in Uinv:        # col_j ← col_j + q·col_i
                r[j] += q * r[i]

    def swap_rows(i: int, j: int):
        S[i], S[j] = S[j], S[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]
        if Uinv is not None:
            for r in Uinv:
                r[i], r[j] = r[j], r[i]

    def negate_row(i: int):
        S[i] = [-v for v in S[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]
        if Uinv is not None:
            for r in Uinv:
                r[i] = -r[i]

    def col_sub(j: int, i: int, q: int):
        # col_j ← col_j − q·col_i
        for r in S:
            r[j] -= q * r[i]
        if V is not None:
            for r in V:
                r[j] -= q * r[i]
        if Vinv is not None:
            Vi, Vj = Vinv[i], Vinv[j]
            for k in range(n):    # row_i ← row_i + q·row_j
                Vi[k] += q * Vj[k]

    def swap_cols(i: int, j: int):
        for r in S:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]
        if Vinv is not None:
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    t = 0
    R = min(m, n)
    while t < R:
        best = None
        piv = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best, piv = abs(v), (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            again = False
            for i in range(m):
                if i != t and S[i][t]:
                    q = S[i][t] // S[t][t]
                    if q:
                        row_sub(i, t, q)
                    if S[i][t]:
                        swap_rows(i, t)
                        again = True
            if again:
                continue
            for j in range(n):
                if j != t and S[t][j]:
                    q = S[t][j] // S[t][t]
                    if q:
                        col_sub(j, t, q)
                    if S[t][j]:
                        swap_cols(j, t)
                        again = True
            if again:
                continue
            # pivot must divide the remaining block for the divisor chain
            p = S[t][t]
            viol = None
            for i in range(t + 1, m):
                row = S[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            row_sub(t, viol, -1)
        if S[t][t] < 0:
            negate_row(t)
        t += 1

    diag = [S[i][i] for i in range(R)]
    return SNFResult(m, n, diag, U, V, Uinv, Vinv)


def solve_mod(snf: SNFResult, b, L: int):
    """One solution of ``A·x ≡ b (mod L)`` from a precomputed SNF of A,
    or None when the congruence has no solution."""
    from math import gcd

    m, n = snf.rows, snf.cols
    assert L * L * max(m, n, 1) < 2**62, "level too large for the int64 fast path"
    if n == 0:
        return [] if not (np.asarray(b, dtype=np.int64) % L).any() else None
    if m == 0:
        return [0] * n
    bv = np.asarray(b, dtype=np.int64) % L
    t = (snf._mod("U", L) @ bv) % L
    y = np.zeros(n, dtype=np.int64)
    for i in range(m):
        d = snf.diag[i] if i < len(snf.diag) else 0
        ti = int(t[i])
        g = gcd(d, L)
        if ti % g:
            return None
        if d:
            red = L // g
            y[i] = (ti // g) * pow(d // g, -1, red) % red if red > 1 else 0
    x = (snf._mod("V", L) @ y) % L
    return [int(v) for v in x]
