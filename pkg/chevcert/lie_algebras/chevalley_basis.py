"""
This module contains the ChevalleyBasis class, which builds the integral
structure constants of a Chevalley basis from a root system.

Signs are fixed with extraspecial pairs: for every non-simple positive root
``xi`` the pair ``(alpha, beta)`` with ``alpha + beta = xi`` and ``alpha``
first in the canonical root order gets ``N_{alpha, beta} = p + 1 > 0``.
All other constants follow from the Chevalley relations.

"""

import logging
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Tuple

import numpy as np

from chevcert.errors import DegenerateCartanPairing, InputError
from chevcert.root_systems import CocharVec, RootSystem
from chevcert.utilities.fp_linalg import solve_mod_p
from .lie_element import LieElement


logger = logging.getLogger(__name__)

SIGN_CONVENTION = 'extraspecial-pairs-positive'


class ChevalleyBasis():
    """Chevalley basis ``{H_i, X_alpha}`` of the Lie algebra of a root
    system.

    Parameters
    ----------
    rs : RootSystem
        The root system.

    Attributes
    ----------
    struct_consts : dict
        Maps pairs of root indices ``(i, j)`` with ``roots[i] + roots[j]`` a
        root to the integer ``N_{alpha_i, alpha_j}``.
    cartan_integers : ndarray
        Array of shape ``(n_roots, rank)`` with entries
        ``alpha(H_{alpha_j})``.
    coroot_expansion : ndarray
        Array of shape ``(n_roots, rank)`` expressing ``H_alpha`` in terms
        of ``H_1, ..., H_r``.

    """

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self.rank = rs.rank
        self.n_roots = len(rs.roots)
        self.dim = self.rank + self.n_roots
        self.cartan_integers = rs.root_array @ rs.cartan_matrix.T
        self.coroot_expansion = rs.coroot_coords
        self.sign_convention = SIGN_CONVENTION
        self._positive_cache: Dict[Tuple[int, int], int] = {}
        self._extraspecial = self._find_extraspecial_pairs()
        self.struct_consts = self._compute_all_structure_constants()
        logger.debug('Built Chevalley basis of %s (dim %d, %d constants).',
                     rs.cartan_type, self.dim, len(self.struct_consts))

    # Construction.

    def _sum_index(self, i: int, j: int) -> int:
        """Index of ``roots[i] + roots[j]`` or -1 if it is not a root."""
        coeffs = self.rs.root_array[i] + self.rs.root_array[j]
        return self.rs._index.get(tuple(int(c) for c in coeffs), -1)

    def _find_extraspecial_pairs(self) -> Dict[int, Tuple[int, int]]:
        extraspecial = {}
        n_pos = self.rs.n_positive
        for k in range(self.rank, n_pos):
            xi = self.rs.root_array[k]
            for a in range(n_pos):
                b = self.rs._index.get(
                    tuple(int(c) for c in xi - self.rs.root_array[a]), -1)
                if 0 <= b < n_pos:
                    extraspecial[k] = (a, b)
                    break
        return extraspecial

    def _norm(self, i: int) -> int:
        return int(self.rs.squared_lengths[i])

    def _neg(self, i: int) -> int:
        n_pos = self.rs.n_positive
        return i + n_pos if i < n_pos else i - n_pos

    def _positive_constant(self, a: int, b: int) -> int:
        """``N_{a,b}`` for positive roots ``a``, ``b`` with a root sum."""
        key = (a, b)
        if key in self._positive_cache:
            return self._positive_cache[key]
        if a > b:
            value = -self._positive_constant(b, a)
        else:
            xi = self._sum_index(a, b)
            alpha, beta = self._extraspecial[xi]
            if (a, b) == (alpha, beta):
                value = self.rs.root_string(
                    self.rs.roots[a], self.rs.roots[b])[0] + 1
            else:
                value = self._special_constant(a, b, xi, alpha, beta)
        self._positive_cache[key] = value
        return value

    def _special_constant(self, gamma, delta, xi, alpha, beta) -> int:
        # Relation among four roots summing to zero:
        # gamma + delta + (-alpha) + (-beta) = 0.
        total = Fraction(0)
        na, nb = self._neg(alpha), self._neg(beta)
        if self._sum_index(delta, na) >= 0:
            d_a = self.rs.root_array[delta] - self.rs.root_array[alpha]
            total += Fraction(
                self.constant(delta, na) * self.constant(gamma, nb),
                self.rs.inner_product(d_a, d_a))
        if self._sum_index(na, gamma) >= 0:
            g_a = self.rs.root_array[gamma] - self.rs.root_array[alpha]
            total += Fraction(
                self.constant(na, gamma) * self.constant(delta, nb),
                self.rs.inner_product(g_a, g_a))
        value = Fraction(self._norm(xi), self.constant(alpha, beta)) * total
        if value.denominator != 1:
            raise ArithmeticError(
                f'Non-integral structure constant {value} for roots '
                f'{self.rs.roots[gamma]}, {self.rs.roots[delta]}.')
        return int(value)

    def constant(self, i: int, j: int) -> int:
        """
        Structure constant ``N_{alpha, beta}`` for root indices ``i``,
        ``j``. Zero when the sum is not a root.
        """
        z = self._sum_index(i, j)
        if z < 0:
            return 0
        n_pos = self.rs.n_positive
        i_pos, j_pos = i < n_pos, j < n_pos
        if i_pos and j_pos:
            return self._positive_constant(i, j)
        if not i_pos and not j_pos:
            return -self._positive_constant(self._neg(i), self._neg(j))
        if not i_pos:
            return -self.constant(j, i)
        # alpha = roots[i] positive and beta = roots[j] negative.
        if z < n_pos:
            return _exact_div(
                -self._norm(z) * self._positive_constant(self._neg(j), z),
                self._norm(i))
        return _exact_div(
            self._norm(z) * self._positive_constant(self._neg(z), i),
            self._norm(j))

    def _compute_all_structure_constants(self) -> Dict[Tuple[int, int], int]:
        consts = {}
        for i in range(self.n_roots):
            for j in range(self.n_roots):
                if self._sum_index(i, j) >= 0:
                    consts[(i, j)] = self.constant(i, j)
        return consts

    # Basis data.

    @cached_property
    def labels(self) -> List[str]:
        """Human-readable names of the basis vectors."""
        names = [f'H{i + 1}' for i in range(self.rank)]
        names += [f'X[{root}]' for root in self.rs.roots]
        return names

    def root_index(self, root) -> int:
        """Position of ``X_root`` in the basis."""
        if isinstance(root, (int, np.integer)):
            return self.rank + int(root)
        return self.rank + self.rs.index(root)

    @cached_property
    def structure_tensor(self) -> np.ndarray:
        """
        Dense tensor ``T`` with ``[e_i, e_j] = sum_k T[i, j, k] e_k`` over
        the integers.
        """
        r, d = self.rank, self.dim
        tensor = np.zeros((d, d, d), dtype=np.int64)
        for a in range(self.n_roots):
            xa = r + a
            tensor[:r, xa, xa] = self.cartan_integers[a]
            tensor[xa, :r, xa] = -self.cartan_integers[a]
            neg = self._neg(a)
            tensor[xa, r + neg, :r] = self.coroot_expansion[a]
        for (i, j), n in self.struct_consts.items():
            tensor[r + i, r + j, r + self._sum_index(i, j)] = n
        return tensor

    def element(self, coeffs, modulus: int = 0) -> LieElement:
        return LieElement(self, coeffs, modulus)

    def zero(self, modulus: int = 0) -> LieElement:
        return LieElement(self, np.zeros(self.dim, dtype=np.int64), modulus)

    def basis_element(self, k: int, modulus: int = 0) -> LieElement:
        coeffs = np.zeros(self.dim, dtype=np.int64)
        coeffs[k] = 1
        return LieElement(self, coeffs, modulus)

    def x(self, root, modulus: int = 0) -> LieElement:
        """Root vector ``X_root``."""
        return self.basis_element(self.root_index(root), modulus)

    def h(self, root, modulus: int = 0) -> LieElement:
        """Coroot element ``H_root`` for an arbitrary root."""
        k = root if isinstance(root, (int, np.integer)) else \
            self.rs.index(root)
        coeffs = np.zeros(self.dim, dtype=np.int64)
        coeffs[:self.rank] = self.coroot_expansion[int(k)]
        return LieElement(self, coeffs, modulus)

    def basis_elements(self, modulus: int = 0) -> Iterator[LieElement]:
        for k in range(self.dim):
            yield self.basis_element(k, modulus)

    def ad_matrix(self, x: LieElement) -> np.ndarray:
        """Matrix of ``ad(x)``, acting on column coefficient vectors."""
        mat = np.einsum('i,ijk->kj', x.coeffs, self.structure_tensor)
        if x.modulus:
            mat %= x.modulus
        return mat

    @cached_property
    def ad_root_matrices(self) -> np.ndarray:
        """Integer matrices ``ad(X_alpha)`` for every root."""
        r = self.rank
        return np.ascontiguousarray(
            np.transpose(self.structure_tensor[r:], (0, 2, 1)))

    def max_structure_constant(self) -> int:
        """Largest ``|N_{alpha, beta}|`` over all valid pairs."""
        if not self.struct_consts:
            return 0
        return max(abs(n) for n in self.struct_consts.values())

    def jacobi_defect(self, modulus: int = 0) -> np.ndarray:
        """
        Jacobi sums ``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``
        for all basis triples, as an array of shape ``(d, d, d, d)``.
        """
        t = self.structure_tensor
        a = np.tensordot(t, t, axes=([2], [0]))
        defect = (a + np.einsum('jkin->ijkn', a)
                  + np.einsum('kijn->ijkn', a))
        if modulus:
            defect %= modulus
        return defect

    def structure_constant_rows(self) -> Iterator[Tuple[int, int, int]]:
        """Rows ``(alpha, beta, N)`` in canonical order."""
        for (i, j) in sorted(self.struct_consts):
            yield i, j, self.struct_consts[(i, j)]

    def to_csv(self) -> str:
        lines = ['alpha,beta,N']
        lines += [f'{i},{j},{n}' for i, j, n in self.structure_constant_rows()]
        return '\n'.join(lines) + '\n'


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f'{a} is not divisible by {b}.')
    return q


@lru_cache(maxsize=None)
def build_chevalley_basis(rs: RootSystem) -> ChevalleyBasis:
    """Build the Chevalley basis of a root system (cached per system)."""
    return ChevalleyBasis(rs)


def max_structure_constant(rs: RootSystem) -> int:
    """Largest ``n_{alpha, beta} = |N_{alpha, beta}|`` of the root system."""
    return build_chevalley_basis(rs).max_structure_constant()


def cochar_to_toral(
    cb: ChevalleyBasis,
    cochar: CocharVec,
    p: int
) -> LieElement:
    """
    Find ``H`` in the Cartan subalgebra over F_p with
    ``alpha_i(H) = <alpha_i, cochar>`` for every simple root.

    Raises
    ------
    DegenerateCartanPairing
        If ``p`` divides the determinant of the Cartan matrix.
    """
    if len(cochar.pairings) != cb.rank:
        raise InputError(
            f'Cocharacter of rank {len(cochar.pairings)} does not match '
            f'{cb.rs.cartan_type}.')
    det = cb.rs.determinant
    if det % p == 0:
        raise DegenerateCartanPairing(
            f'Degenerate Cartan pairing: p={p} divides det(Cartan) = {det} '
            f'for {cb.rs.cartan_type}.')
    # alpha_j(sum_i h_i H_i) = sum_i h_i A_ij.
    h, _ = solve_mod_p(cb.rs.cartan_matrix.T, np.array(cochar.pairings), p)
    coeffs = np.zeros(cb.dim, dtype=np.int64)
    coeffs[:cb.rank] = h
    return LieElement(cb, coeffs, p)
