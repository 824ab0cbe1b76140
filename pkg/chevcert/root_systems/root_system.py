"""
This module contains the RootSystem class and the Root and CocharVec
value types.

Roots are stored in simple-root coordinates, so every query reduces to
integer vector arithmetic.

"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from chevcert.errors import InputError
from .cartan_type import CartanType


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Root():
    """A root given by its coefficients in the simple-root basis."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> 'Root':
        return Root(tuple(-c for c in self.coeffs))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            mag = '' if abs(c) == 1 else str(abs(c))
            terms.append(f'{sign}{mag}a{i + 1}')
        text = ''.join(terms)
        return text[1:] if text.startswith('+') else text


@dataclass(frozen=True)
class CocharVec():
    """
    A cocharacter given by its pairings ``x_j = <alpha_j, lambda>`` with
    the simple roots. The fundamental coweights are the standard basis
    vectors.
    """

    pairings: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, 'pairings', tuple(int(x) for x in self.pairings))

    def __add__(self, other: 'CocharVec') -> 'CocharVec':
        if len(other.pairings) != len(self.pairings):
            raise InputError('Cannot add cocharacters of different rank.')
        return CocharVec(
            tuple(a + b for a, b in zip(self.pairings, other.pairings)))

    def __str__(self):
        return '(' + ','.join(str(x) for x in self.pairings) + ')'


def height(root: Union[Root, Sequence[int]]) -> int:
    """Height (sum of simple-root coefficients) of a root."""
    if isinstance(root, Root):
        return root.height
    return int(sum(root))


def pairing(root: Union[Root, Sequence[int]], cochar: CocharVec) -> int:
    """Canonical pairing ``<root, cochar>``."""
    coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
    if len(coeffs) != len(cochar.pairings):
        raise InputError(
            f'Rank mismatch: root of rank {len(coeffs)} paired with a '
            f'cocharacter of rank {len(cochar.pairings)}.')
    return sum(int(n) * x for n, x in zip(coeffs, cochar.pairings))


class RootSystem():
    """Root system of a simple Cartan type.

    The roots are enumerated from the Cartan matrix by adding simple roots
    along root strings. They are kept in a canonical order: positive roots
    first, sorted by height and then by decreasing coefficient vector (so
    the first ``rank`` roots are the simple roots), followed by the
    negative roots in the same order.

    Parameters
    ----------
    cartan_type : CartanType or str
        The Cartan type, e.g. ``CartanType('G', 2)`` or ``'G2'``.

    """

    def __init__(self, cartan_type: Union[CartanType, str]) -> None:
        if isinstance(cartan_type, str):
            cartan_type = CartanType.from_string(cartan_type)
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan_matrix = cartan_type.cartan_matrix()
        self.gram_matrix = cartan_type.inner_product_matrix()
        positives = self._enumerate_positive_roots()
        self.n_positive = len(positives)
        self.root_array = np.concatenate(
            (positives, -positives)).astype(np.int64)
        self.roots = [Root(row) for row in self.root_array]
        self._index = {r.coeffs: i for i, r in enumerate(self.roots)}
        logger.debug('Built root system %s with %d roots.',
                     cartan_type, len(self.roots))

    def _enumerate_positive_roots(self) -> np.ndarray:
        r = self.rank
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simple)
        layer = list(simple)
        while layer:
            next_layer = set()
            for beta in layer:
                for i in range(r):
                    # Length of the alpha_i string below beta.
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) not in found:
                            break
                        p += 1
                    q = p - int(np.dot(self.cartan_matrix[i], beta))
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        next_layer.add(tuple(up))
            found.update(next_layer)
            layer = list(next_layer)
        ordered = sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))
        return np.array(ordered, dtype=np.int64)

    # Queries.

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return f'RootSystem({self.cartan_type})'

    def index(self, root: Union[Root, Sequence[int]]) -> int:
        """Position of ``root`` in the canonical order."""
        coeffs = root.coeffs if isinstance(root, Root) else tuple(
            int(c) for c in root)
        try:
            return self._index[coeffs]
        except KeyError:
            raise InputError(
                f'{coeffs} is not a root of {self.cartan_type}.') from None

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return tuple(int(c) for c in coeffs) in self._index

    @property
    def positive_roots(self) -> List[Root]:
        return self.roots[:self.n_positive]

    @property
    def simple_roots(self) -> List[Root]:
        return self.roots[:self.rank]

    @property
    def heights(self) -> np.ndarray:
        return self.root_array.sum(axis=1)

    @property
    def highest_root(self) -> Root:
        return self.roots[self.n_positive - 1]

    def highest_root_coeffs(self) -> Tuple[int, ...]:
        """Coefficients ``(c_1, ..., c_r)`` of the highest root."""
        return self.highest_root.coeffs

    @cached_property
    def squared_lengths(self) -> np.ndarray:
        """Squared length of every root (short roots have length 2)."""
        a = self.root_array
        return np.einsum('ni,ij,nj->n', a, self.gram_matrix, a)

    @cached_property
    def coroot_coords(self) -> np.ndarray:
        """Coordinates of every coroot in the basis of simple coroots."""
        d = np.diag(self.gram_matrix)
        return (self.root_array * d) // self.squared_lengths[:, np.newaxis]

    def inner_product(self, alpha, beta) -> int:
        """Symmetric invariant form ``(alpha, beta)``."""
        a = np.asarray(alpha.coeffs if isinstance(alpha, Root) else alpha)
        b = np.asarray(beta.coeffs if isinstance(beta, Root) else beta)
        return int(a @ self.gram_matrix @ b)

    def cartan_integer(self, alpha, beta) -> int:
        """``<alpha, beta^vee> = 2 (alpha, beta) / (beta, beta)``."""
        return (2 * self.inner_product(alpha, beta)
                // self.inner_product(beta, beta))

    def reflect(self, root, beta) -> Root:
        """
        Apply the Weyl reflection ``s_beta``. ``beta`` is a root or the
        (0-based) index of a simple root.
        """
        if isinstance(beta, (int, np.integer)):
            beta = self.roots[int(beta)]
        coeffs = np.asarray(root.coeffs if isinstance(root, Root) else root)
        n = self.cartan_integer(coeffs, beta)
        return Root(coeffs - n * np.asarray(beta.coeffs))

    def root_string(self, alpha, beta) -> Tuple[int, int]:
        """
        Return ``(p, q)`` such that ``beta - p alpha, ..., beta + q alpha``
        is the ``alpha``-string through ``beta``.
        """
        a = np.asarray(alpha.coeffs if isinstance(alpha, Root) else alpha)
        b = np.asarray(beta.coeffs if isinstance(beta, Root) else beta)
        p = 0
        while self.is_root(b - (p + 1) * a):
            p += 1
        q = 0
        while self.is_root(b + (q + 1) * a):
            q += 1
        return p, q

    def root_string_constant(self, alpha, beta) -> int:
        """
        The value ``p + 1`` of the root-string rule, i.e. the magnitude of
        the structure constant ``N_{alpha, beta}``. Zero when
        ``alpha + beta`` is not a root.
        """
        a = np.asarray(alpha.coeffs if isinstance(alpha, Root) else alpha)
        b = np.asarray(beta.coeffs if isinstance(beta, Root) else beta)
        if not self.is_root(a + b):
            return 0
        return self.root_string(a, b)[0] + 1

    def pairing(self, root, cochar: CocharVec) -> int:
        if len(cochar.pairings) != self.rank:
            raise InputError(
                f'Cocharacter of rank {len(cochar.pairings)} does not match '
                f'{self.cartan_type}.')
        return pairing(root, cochar)

    def pairings(self, cochar: CocharVec) -> np.ndarray:
        """Pairings ``<alpha, cochar>`` for all roots, in canonical order."""
        if len(cochar.pairings) != self.rank:
            raise InputError(
                f'Cocharacter of rank {len(cochar.pairings)} does not match '
                f'{self.cartan_type}.')
        return self.root_array @ np.array(cochar.pairings, dtype=np.int64)

    # Coxeter data.

    def coxeter_number(self) -> int:
        return self.highest_root.height + 1

    @cached_property
    def simple_reflection_permutations(self) -> np.ndarray:
        """Permutation of the root indices induced by each ``s_i``."""
        perms = np.zeros((self.rank, len(self.roots)), dtype=np.int64)
        for i in range(self.rank):
            for j, root in enumerate(self.roots):
                perms[i, j] = self.index(self.reflect(root, i))
        return perms

    def coxeter_element_order(self) -> int:
        """Order of ``s_1 ... s_r`` as a permutation of the roots."""
        w = np.arange(len(self.roots))
        for perm in self.simple_reflection_permutations[::-1]:
            w = perm[w]
        seen = np.zeros(len(w), dtype=bool)
        order = 1
        for start in range(len(w)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = w[j]
                length += 1
            order = order * length // math.gcd(order, length)
        return order

    @property
    def determinant(self) -> int:
        return self.cartan_type.determinant()

    @property
    def fundamental_group_exponent(self) -> int:
        return self.cartan_type.fundamental_group_exponent()

    def to_dict(self) -> Dict:
        """JSON-ready description of the root system."""
        return {
            'type': str(self.cartan_type),
            'cartan_matrix': self.cartan_matrix.tolist(),
            'roots': self.root_array.tolist(),
            'highest_root': list(self.highest_root.coeffs),
        }


@lru_cache(maxsize=None)
def _build_root_system(cartan_type: CartanType) -> RootSystem:
    return RootSystem(cartan_type)


def build_root_system(cartan_type: Union[CartanType, str]) -> RootSystem:
    """
    Build (or fetch from the in-process cache) the root system of a
    Cartan type. Root systems are never mutated after construction.
    """
    if isinstance(cartan_type, str):
        cartan_type = CartanType.from_string(cartan_type)
    return _build_root_system(cartan_type)


def highest_root_coeffs(rs: RootSystem) -> Tuple[int, ...]:
    return rs.highest_root_coeffs()


def coxeter_number(rs: RootSystem) -> int:
    return rs.coxeter_number()


def coxeter_element_order(rs: RootSystem) -> int:
    return rs.coxeter_element_order()
