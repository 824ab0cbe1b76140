"""
This module contains the GroupElement class and the one-parameter
generators of the adjoint Chevalley group over Z/p^k.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from chevcert.errors import InputError, StructureConstantsVanish
from chevcert.lie_algebras import ChevalleyBasis

# Largest int64 value; matrix products must stay below it.
_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True, eq=False)
class GroupElement():
    """Matrix of the adjoint Chevalley group over ``Z/p^k``.

    Parameters
    ----------
    p : int
        The prime.
    k : int
        The level. Entries are reduced modulo ``p**k``.
    matrix : ndarray
        Square integer matrix of size ``dim g``.

    """

    p: int
    k: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f'Level must be at least 1, got {self.k}.')
        mat = np.array(self.matrix, dtype=np.int64) % self.modulus
        d = mat.shape[0]
        if d * (self.modulus - 1) ** 2 > _INT64_MAX:
            raise InputError(
                f'Modulus {self.p}^{self.k} is too large for exact int64 '
                f'products of {d}x{d} matrices.')
        mat.setflags(write=False)
        object.__setattr__(self, 'matrix', mat)

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, dim: int, p: int, k: int) -> 'GroupElement':
        return cls(p, k, np.eye(dim, dtype=np.int64))

    def _check_compatible(self, other: 'GroupElement') -> None:
        if (other.p, other.k, other.dim) != (self.p, self.k, self.dim):
            raise InputError(
                f'Cannot multiply elements over Z/{self.p}^{self.k} '
                f'(dim {self.dim}) and Z/{other.p}^{other.k} '
                f'(dim {other.dim}).')

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        self._check_compatible(other)
        return GroupElement(self.p, self.k, self.matrix @ other.matrix)

    def __pow__(self, n: int) -> 'GroupElement':
        result = GroupElement.identity(self.dim, self.p, self.k)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return ((self.p, self.k) == (other.p, other.k)
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.p, self.k, self.matrix.tobytes()))

    def is_identity(self) -> bool:
        return np.array_equal(self.matrix, np.eye(self.dim, dtype=np.int64))

    def reduce(self, level: int) -> 'GroupElement':
        """Image under the reduction ``Z/p^k -> Z/p^level``."""
        if not 1 <= level <= self.k:
            raise InputError(
                f'Cannot reduce an element of level {self.k} to level '
                f'{level}.')
        return GroupElement(self.p, level, self.matrix)

    def in_kernel(self, m: int) -> bool:
        """Whether the element is trivial modulo ``p**m``."""
        eye = np.eye(self.dim, dtype=np.int64)
        return not np.any((self.matrix - eye) % self.p ** m)


def exp_nilpotent(ad: np.ndarray, t: int) -> np.ndarray:
    """
    Exact integer matrix ``sum_n t^n ad^n / n!`` of a nilpotent integer
    matrix whose divided powers are integral.
    """
    d = ad.shape[0]
    result = np.eye(d, dtype=object)
    power = np.eye(d, dtype=object)
    ad = ad.astype(object)
    n = 0
    while True:
        n += 1
        power = power.dot(ad)
        if not np.any(power != 0):
            break
        if n > d:
            raise InputError('Matrix is not nilpotent.')
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        divided = power // fact
        if np.any(divided * fact != power):
            raise ArithmeticError(
                f'Divided power ad^{n}/{n}! is not integral.')
        result = result + divided * (t ** n)
    return result


def root_element_matrix(cb: ChevalleyBasis, root, t: int) -> np.ndarray:
    """Integer matrix of ``x_alpha(t) = exp(t ad X_alpha)``."""
    a = root if isinstance(root, (int, np.integer)) else cb.rs.index(root)
    return exp_nilpotent(cb.ad_root_matrices[int(a)], t)


def root_element(
    cb: ChevalleyBasis,
    root,
    t: int,
    p: int,
    k: int
) -> GroupElement:
    """``x_alpha(t)`` as an element over ``Z/p^k``."""
    mat = root_element_matrix(cb, root, int(t) % p ** k)
    return GroupElement(p, k, (mat % p ** k).astype(np.int64))


def chevalley_generators(
    cb: ChevalleyBasis,
    p: int,
    k: int,
    t: Optional[int] = 1
) -> List[GroupElement]:
    """
    The generators ``x_alpha(t)`` for the simple roots and their
    negatives, in that order.
    """
    if p <= cb.max_structure_constant():
        raise StructureConstantsVanish(
            f'p={p} does not exceed the largest structure constant '
            f'{cb.max_structure_constant()} of {cb.rs.cartan_type}.')
    n_pos = cb.rs.n_positive
    indices = list(range(cb.rank)) + [n_pos + i for i in range(cb.rank)]
    return [root_element(cb, a, t, p, k) for a in indices]
