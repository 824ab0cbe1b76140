"""
This module contains the linear algebra kernels over the prime field F_p
(and exact integer helpers) used by the subspace, Lie algebra and group
modules.

All kernels work on int64 arrays whose entries are assumed to be reduced
modulo ``p`` (they reduce their inputs on entry). Products of two residues
must fit in an int64, which holds for any prime below 3e9.

"""

import numpy as np

from chevcert.errors import InputError
from chevcert.utilities.numba import njit_serial


@njit_serial
def inv_mod(a, p):
    """Inverse of ``a`` modulo the prime ``p`` (extended Euclid).

    Returns 0 if ``a`` is divisible by ``p``.
    """
    a = a % p
    if a == 0:
        return 0
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@njit_serial
def rref_mod_p(mat, p):
    """
    Compute the reduced row echelon form of a matrix over F_p.

    Parameters
    ----------
    mat : ndarray
        2D int64 array. It is not modified.
    p : int
        The prime modulus.

    Returns
    -------
    A tuple ``(rref, rank)`` where ``rref`` contains only the ``rank``
    nonzero rows of the reduced echelon form.
    """
    m = mat % p
    n_rows, n_cols = m.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = -1
        for r in range(rank, n_rows):
            if m[r, col] != 0:
                pivot = r
                break
        if pivot == -1:
            continue
        if pivot != rank:
            for c in range(n_cols):
                tmp = m[rank, c]
                m[rank, c] = m[pivot, c]
                m[pivot, c] = tmp
        inv = inv_mod(m[rank, col], p)
        for c in range(n_cols):
            m[rank, c] = (m[rank, c] * inv) % p
        for r in range(n_rows):
            if r != rank and m[r, col] != 0:
                f = m[r, col]
                for c in range(n_cols):
                    m[r, c] = (m[r, c] - f * m[rank, c]) % p
        rank += 1
    return m[:rank].copy(), rank


@njit_serial
def independent_rows_mod_p(rows, p):
    """
    Greedily select a maximal linearly independent subset of ``rows``.

    The rows are processed in order and a row is kept whenever it is not in
    the span of the rows kept before it. This gives both a basis of the
    span and the provenance (index) of every basis vector.

    Returns
    -------
    A tuple ``(selected, echelon)`` with the indices of the kept rows and an
    echelon basis (not fully reduced) of their span.
    """
    n_rows, n_cols = rows.shape
    basis = np.zeros((n_cols, n_cols), dtype=np.int64)
    pivot_cols = np.zeros(n_cols, dtype=np.int64)
    selected = np.zeros(n_cols, dtype=np.int64)
    v = np.zeros(n_cols, dtype=np.int64)
    rank = 0
    for i in range(n_rows):
        if rank == n_cols:
            break
        for c in range(n_cols):
            v[c] = rows[i, c] % p
        for j in range(rank):
            f = v[pivot_cols[j]]
            if f != 0:
                for c in range(n_cols):
                    v[c] = (v[c] - f * basis[j, c]) % p
        lead = -1
        for c in range(n_cols):
            if v[c] != 0:
                lead = c
                break
        if lead == -1:
            continue
        inv = inv_mod(v[lead], p)
        for c in range(n_cols):
            basis[rank, c] = (v[c] * inv) % p
        pivot_cols[rank] = lead
        selected[rank] = i
        rank += 1
    return selected[:rank].copy(), basis[:rank].copy()


def pivot_columns(rref):
    """Return the pivot column of every row of a matrix in RREF."""
    return np.array([int(np.flatnonzero(row)[0]) for row in rref],
                    dtype=np.int64)


def reduce_vector(rref, vector, p):
    """
    Reduce ``vector`` modulo the row space of ``rref`` (a matrix in reduced
    row echelon form over F_p). The result is zero iff ``vector`` lies in
    the row space.
    """
    vector = np.asarray(vector, dtype=np.int64) % p
    if rref.shape[0] == 0:
        return vector
    coeffs = vector[pivot_columns(rref)]
    return (vector - coeffs @ rref) % p


def solve_mod_p(a, b, p):
    """
    Solve ``a @ x = b`` over F_p.

    Parameters
    ----------
    a : ndarray
        2D array of shape (m, n).
    b : ndarray
        1D array of length m.
    p : int
        The prime modulus.

    Returns
    -------
    A tuple ``(x, unique)``. ``x`` is a solution (free variables set to 0)
    and ``unique`` tells whether ``a`` has full column rank.

    Raises
    ------
    InputError
        If the system is inconsistent.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    n = a.shape[1]
    aug = np.ascontiguousarray(np.hstack((a, b)))
    rref, rank = rref_mod_p(aug, p)
    x = np.zeros(n, dtype=np.int64)
    for row in rref:
        lead = int(np.flatnonzero(row)[0])
        if lead == n:
            raise InputError('The linear system has no solution over '
                             f'F_{p}.')
        x[lead] = row[n]
    return x, rank == n


def integer_determinant(mat):
    """Exact determinant of a square integer matrix (Bareiss algorithm)."""
    m = [[int(v) for v in row] for row in np.asarray(mat)]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
