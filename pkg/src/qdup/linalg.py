"""Exact dense linear algebra over any of the supported fields.

Matrices are lists (or tuples) of rows of scalars.  Everything is Gaussian
elimination; sizes stay tiny (dim <= ~16), so no effort is spent on anything
asymptotically clever.  Raw mod-p variants are provided for hot enumeration
loops that work on plain ints.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .fields import Field, Scalar


def zeros(field: Field, rows: int, cols: int) -> List[List[Scalar]]:
    z = field.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(field: Field, n: int) -> List[List[Scalar]]:
    mat = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        mat[i][i] = one
    return mat


def mat_vec(mat: Sequence[Sequence[Scalar]], vec: Sequence[Scalar]) -> tuple:
    return tuple(sum((row[j] * vec[j] for j in range(1, len(vec))),
                     row[0] * vec[0]) for row in mat)


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> list:
    n, m, k = len(a), len(b[0]), len(b)
    return [[sum((a[i][t] * b[t][j] for t in range(1, k)), a[i][0] * b[0][j])
             for j in range(m)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_smul(c: Scalar, a) -> list:
    return [[c * x for x in row] for row in a]


def transpose(a) -> list:
    return [list(col) for col in zip(*a)]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(rows: Sequence[Sequence[Scalar]]):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    mat = [list(row) for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Sequence[Sequence[Scalar]], field: Field, ncols: int) -> list:
    """Basis of the right kernel of the matrix (rows of length ncols)."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero, one = field.zero(), field.one()
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve(mat: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Optional[list]:
    """One solution of ``mat @ x = rhs``, or None if inconsistent."""
    if not mat:
        return None
    ncols = len(mat[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    field = rhs[0].field
    x = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def inverse(mat: Sequence[Sequence[Scalar]]) -> Optional[list]:
    """Inverse of a square matrix, or None if singular."""
    n = len(mat)
    field = mat[0][0].field
    aug = [list(row) + identity(field, n)[i] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def is_invertible(mat) -> bool:
    return rank(mat) == len(mat)


# --------------------------------------------------------------------------
# raw mod-p kernels (ints only), for enumeration-heavy paths
# --------------------------------------------------------------------------

def rref_mod_p(rows: List[List[int]], p: int):
    mat = [row[:] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def kernel_mod_p(rows: List[List[int]], ncols: int, p: int) -> List[List[int]]:
    red, pivots = rref_mod_p(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-red[r][fc]) % p
        basis.append(vec)
    return basis


def solve_mod_p(rows: List[List[int]], rhs: List[int], p: int) -> Optional[List[int]]:
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [row + [rhs[i]] for i, row in enumerate(rows)]
    red, pivots = rref_mod_p(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def rank_mod_p(rows: List[List[int]], p: int) -> int:
    return len(rref_mod_p(rows, p)[1])


def mat_mul_mod_p(a, b, p):
    k = len(b)
    m = len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m)]
            for i in range(len(a))]
