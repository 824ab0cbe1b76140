""" This module contains the LieElement class. """

from typing import TYPE_CHECKING

import numpy as np

from chevcert.errors import InputError

if TYPE_CHECKING:
    from .chevalley_basis import ChevalleyBasis


class LieElement():
    """Element of the Chevalley lattice of ``g`` or of ``g`` over F_p.

    The coefficients refer to the basis ``H_1, ..., H_r`` (coroots of the
    simple roots) followed by ``X_alpha`` for every root in canonical order.

    Parameters
    ----------
    basis : ChevalleyBasis
        The Chevalley basis the coefficients refer to.
    coeffs : array_like
        Coefficient vector of length ``basis.dim``.
    modulus : int, optional
        Either 0 (integer lattice) or a prime ``p``. Coefficients are
        reduced modulo ``p`` on construction.

    """

    __slots__ = ('basis', 'coeffs', 'modulus')

    def __init__(
        self,
        basis: 'ChevalleyBasis',
        coeffs,
        modulus: int = 0
    ) -> None:
        coeffs = np.array(coeffs, dtype=np.int64).reshape(-1)
        if coeffs.shape[0] != basis.dim:
            raise InputError(
                f'Expected {basis.dim} coefficients, got {coeffs.shape[0]}.')
        if modulus < 0 or modulus == 1:
            raise InputError(f'Invalid modulus {modulus}.')
        if modulus:
            coeffs %= modulus
        self.basis = basis
        self.coeffs = coeffs
        self.modulus = modulus

    @property
    def toral(self) -> np.ndarray:
        """Coefficients on ``H_1, ..., H_r``."""
        return self.coeffs[:self.basis.rank]

    @property
    def root_part(self) -> np.ndarray:
        """Coefficients on the root vectors ``X_alpha``."""
        return self.coeffs[self.basis.rank:]

    def is_toral(self) -> bool:
        return not np.any(self.root_part)

    def root_values(self) -> np.ndarray:
        """
        The values ``alpha(H)`` of the toral part on every root (reduced
        modulo the modulus when there is one).
        """
        values = self.basis.cartan_integers @ self.toral
        if self.modulus:
            values %= self.modulus
        return values

    def _check_compatible(self, other: 'LieElement') -> None:
        if other.basis is not self.basis:
            raise InputError('Lie elements refer to different bases.')
        if other.modulus != self.modulus:
            raise InputError(
                f'Modulus mismatch: {self.modulus} vs {other.modulus}.')

    def __add__(self, other: 'LieElement') -> 'LieElement':
        self._check_compatible(other)
        return LieElement(self.basis, self.coeffs + other.coeffs,
                          self.modulus)

    def __sub__(self, other: 'LieElement') -> 'LieElement':
        self._check_compatible(other)
        return LieElement(self.basis, self.coeffs - other.coeffs,
                          self.modulus)

    def __neg__(self) -> 'LieElement':
        return LieElement(self.basis, -self.coeffs, self.modulus)

    def __mul__(self, scalar: int) -> 'LieElement':
        return LieElement(self.basis, self.coeffs * int(scalar),
                          self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return (other.basis is self.basis and other.modulus == self.modulus
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.basis), self.modulus, self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def reduce(self, p: int) -> 'LieElement':
        """Reduce an integral element modulo the prime ``p``."""
        if self.modulus not in (0, p):
            raise InputError(
                f'Cannot reduce an element mod {self.modulus} to mod {p}.')
        return LieElement(self.basis, self.coeffs, p)

    def bracket(self, other: 'LieElement') -> 'LieElement':
        return bracket(self, other)

    def __repr__(self):
        terms = []
        for name, c in zip(self.basis.labels, self.coeffs):
            if c:
                terms.append(f'{c}*{name}')
        body = ' + '.join(terms) if terms else '0'
        mod = f' (mod {self.modulus})' if self.modulus else ''
        return f'LieElement({body}{mod})'


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Lie bracket ``[x, y]`` of two elements over the same basis."""
    x._check_compatible(y)
    coeffs = np.einsum('i,j,ijk->k', x.coeffs, y.coeffs,
                       x.basis.structure_tensor, optimize=True)
    return LieElement(x.basis, coeffs, x.modulus)
