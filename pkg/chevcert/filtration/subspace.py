""" This module contains the Subspace class and the subspace algebra. """

from typing import Iterable, Optional, Tuple

import numpy as np

from chevcert.errors import InputError
from chevcert.lie_algebras import ChevalleyBasis, LieElement
from chevcert.utilities.fp_linalg import (
    rref_mod_p, independent_rows_mod_p, reduce_vector)


class Subspace():
    """F_p-subspace of ``g``, stored by its reduced row echelon basis.

    Two subspaces are equal if and only if their basis matrices are equal.

    Parameters
    ----------
    p : int
        The prime.
    ambient_dim : int
        Dimension of the ambient space.
    basis : ndarray, optional
        Matrix whose rows span the subspace. It is row reduced on
        construction.

    """

    def __init__(
        self,
        p: int,
        ambient_dim: int,
        basis: Optional[np.ndarray] = None
    ) -> None:
        self.p = p
        self.ambient_dim = ambient_dim
        if basis is None or len(basis) == 0:
            self.basis = np.zeros((0, ambient_dim), dtype=np.int64)
        else:
            basis = np.ascontiguousarray(basis, dtype=np.int64)
            if basis.ndim != 2 or basis.shape[1] != ambient_dim:
                raise InputError(
                    f'Expected vectors of length {ambient_dim}, got array '
                    f'of shape {basis.shape}.')
            self.basis, _ = rref_mod_p(basis, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check_compatible(self, other: 'Subspace') -> None:
        if other.p != self.p or other.ambient_dim != self.ambient_dim:
            raise InputError(
                f'Subspace mismatch: F_{self.p}^{self.ambient_dim} vs '
                f'F_{other.p}^{other.ambient_dim}.')

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.p == other.p and self.ambient_dim == other.ambient_dim
                and np.array_equal(self.basis, other.basis))

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return subspace_sum(self, other)

    def contains(self, vector) -> bool:
        if isinstance(vector, LieElement):
            vector = vector.coeffs
        vector = np.asarray(vector, dtype=np.int64)
        if vector.shape != (self.ambient_dim,):
            raise InputError(
                f'Vector of shape {vector.shape} does not belong to '
                f'F_{self.p}^{self.ambient_dim}.')
        return not np.any(reduce_vector(self.basis, vector, self.p))

    def contains_subspace(self, other: 'Subspace') -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def __repr__(self):
        return (f'Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, '
                f'p={self.p})')


def _as_rows(vectors: Iterable, ambient_dim: int) -> np.ndarray:
    rows = [v.coeffs if isinstance(v, LieElement) else np.asarray(v)
            for v in vectors]
    if len(rows) == 0:
        return np.zeros((0, ambient_dim), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def span(vectors: Iterable, p: int, ambient_dim: int) -> Subspace:
    """Span of vectors (arrays or LieElement) over F_p."""
    return Subspace(p, ambient_dim, _as_rows(vectors, ambient_dim))


def subspace_sum(v: Subspace, w: Subspace) -> Subspace:
    v._check_compatible(w)
    return Subspace(v.p, v.ambient_dim, np.vstack((v.basis, w.basis)))


def contains(v: Subspace, x) -> bool:
    return v.contains(x)


def bracket_products(
    cb: ChevalleyBasis,
    v: Subspace,
    w: Subspace
) -> np.ndarray:
    """
    All brackets ``[v_i, w_j]`` of basis vectors, as an array of shape
    ``(dim v, dim w, ambient_dim)``.
    """
    v._check_compatible(w)
    if v.ambient_dim != cb.dim:
        raise InputError(
            f'Subspace of dimension {v.ambient_dim} is not in a Lie algebra '
            f'of dimension {cb.dim}.')
    products = np.einsum('ia,jb,abc->ijc', v.basis, w.basis,
                         cb.structure_tensor % v.p, optimize=True)
    return products % v.p


def bracket_space(cb: ChevalleyBasis, v: Subspace, w: Subspace) -> Subspace:
    """Span of all brackets of basis vectors of ``v`` and ``w``."""
    products = bracket_products(cb, v, w)
    return Subspace(v.p, v.ambient_dim,
                    products.reshape(-1, v.ambient_dim))


def independent_brackets(
    cb: ChevalleyBasis,
    v: Subspace,
    w: Subspace,
    start: Optional[np.ndarray] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Greedily pick brackets ``[v_i, w_j]`` that enlarge the span of the
    rows of ``start``.

    Returns
    -------
    A tuple ``(pairs, rows)`` with the ``(i, j)`` index pairs of the picked
    brackets and the picked bracket vectors.
    """
    products = bracket_products(cb, v, w)
    n_w = w.dim
    flat = products.reshape(-1, v.ambient_dim)
    if start is None:
        start = np.zeros((0, v.ambient_dim), dtype=np.int64)
    rows = np.ascontiguousarray(np.vstack((start, flat)))
    selected, _ = independent_rows_mod_p(rows, v.p)
    picked = selected[selected >= start.shape[0]] - start.shape[0]
    pairs = np.stack((picked // max(n_w, 1), picked % max(n_w, 1)), axis=1)
    return pairs, flat[picked]
