"""
This module contains the exact enumeration of subgroups of the adjoint
Chevalley group over ``Z/p^k`` and the finite-level filtration
``Phi_m = image at level m+1 of the kernel at level m``.
"""

import logging
from typing import Dict, Iterable, List, Optional

import numpy as np

from chevcert.errors import EnumerationCapExceeded, InputError
from chevcert.filtration import Subspace, bracket_space, span
from chevcert.lie_algebras import ChevalleyBasis
from .group_element import GroupElement, chevalley_generators, root_element
from .kernel_layers import log_layer


logger = logging.getLogger(__name__)

DEFAULT_CAP = 10 ** 6


class _KeyEncoder():
    """Turns stacks of matrices into hashable keys.

    Matrices are packed into a single int64 when ``modulus^(d*d)`` fits,
    and into bytes otherwise.
    """

    def __init__(self, dim: int, modulus: int) -> None:
        self.packed = modulus ** (dim * dim) < 2 ** 63
        if self.packed:
            self.powers = np.array(
                [modulus ** i for i in range(dim * dim)], dtype=np.int64)

    def keys(self, stack: np.ndarray) -> List:
        flat = stack.reshape(stack.shape[0], -1)
        if self.packed:
            return (flat @ self.powers).tolist()
        flat = np.ascontiguousarray(flat)
        return [row.tobytes() for row in flat]


class EnumeratedSubgroup():
    """Exact element set of a subgroup of ``G(Z/p^k)``.

    Parameters
    ----------
    cb : ChevalleyBasis
        The Chevalley basis defining the adjoint representation.
    p, k : int
        Prime and level.
    elements : ndarray
        Array of shape ``(order, d, d)`` with all the elements.

    """

    def __init__(
        self,
        cb: ChevalleyBasis,
        p: int,
        k: int,
        elements: np.ndarray
    ) -> None:
        self.cb = cb
        self.p = p
        self.k = k
        self.elements = elements
        self._encoder = _KeyEncoder(cb.dim, p ** k)
        self._keys = set(self._encoder.keys(elements))

    @property
    def order(self) -> int:
        return self.elements.shape[0]

    def __len__(self):
        return self.order

    def __contains__(self, g: GroupElement) -> bool:
        if (g.p, g.k) != (self.p, self.k):
            return False
        return self._encoder.keys(g.matrix[np.newaxis])[0] in self._keys

    def reduced_elements(self, level: int) -> np.ndarray:
        """Distinct images of the elements modulo ``p**level``."""
        if not 1 <= level <= self.k:
            raise InputError(
                f'Cannot reduce a subgroup of level {self.k} to level '
                f'{level}.')
        reduced = self.elements % self.p ** level
        flat = reduced.reshape(reduced.shape[0], -1)
        _, first = np.unique(flat, axis=0, return_index=True)
        return reduced[np.sort(first)]

    def kernel_elements(self, m: int) -> np.ndarray:
        """Elements trivial modulo ``p**m``."""
        eye = np.eye(self.cb.dim, dtype=np.int64)
        diff = (self.elements - eye) % self.p ** m
        return self.elements[~np.any(diff.reshape(self.order, -1), axis=1)]

    def kernel_layer_sizes(self) -> Dict[int, int]:
        """Order of the kernel of reduction to level ``m``, per ``m``."""
        return {m: int(self.kernel_elements(m).shape[0])
                for m in range(1, self.k + 1)}

    def image_orders(self) -> Dict[int, int]:
        """Order of the image at every level ``1 ... k``."""
        return {m: int(self.reduced_elements(m).shape[0])
                for m in range(1, self.k + 1)}

    def phi(self, m: int) -> Subspace:
        """
        ``Phi_m``: the image at level ``m+1`` of the elements trivial at
        level ``m``, identified with a subspace of ``g`` over F_p through
        the layer logarithm.
        """
        if not 1 <= m < self.k:
            raise InputError(
                f'Phi_{m} needs the subgroup at level >= {m + 1}, got '
                f'level {self.k}.')
        layer = self.reduced_elements(m + 1)
        eye = np.eye(self.cb.dim, dtype=np.int64)
        trivial = ~np.any(((layer - eye) % self.p ** m)
                          .reshape(layer.shape[0], -1), axis=1)
        logs = [log_layer(self.cb, GroupElement(self.p, m + 1, g), m)
                for g in layer[trivial]]
        return span(logs, self.p, self.cb.dim)

    def verify_bracket_containment(self, l_level: int, m_level: int) -> bool:
        """Check ``[Phi_l, Phi_m] in Phi_{l+m}``."""
        if l_level + m_level + 1 > self.k:
            raise InputError(
                f'Bracket containment for l={l_level}, m={m_level} needs '
                f'the subgroup at level {l_level + m_level + 1}, got '
                f'{self.k}.')
        brackets = bracket_space(self.cb, self.phi(l_level),
                                 self.phi(m_level))
        return self.phi(l_level + m_level).contains_subspace(brackets)

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'k': self.k,
            'order': self.order,
            'image_orders': self.image_orders(),
            'kernel_layer_sizes': self.kernel_layer_sizes(),
        }


def enumerate_subgroup(
    cb: ChevalleyBasis,
    gens: Iterable[GroupElement],
    cap: Optional[int] = DEFAULT_CAP
) -> EnumeratedSubgroup:
    """
    Enumerate the subgroup generated by ``gens`` by breadth-first closure
    under right multiplication by the generators.

    Raises
    ------
    EnumerationCapExceeded
        If the subgroup has more than ``cap`` elements.
    """
    gens = list(gens)
    if len(gens) == 0:
        raise InputError('At least one generator is required.')
    p, k, d = gens[0].p, gens[0].k, gens[0].dim
    for g in gens:
        if (g.p, g.k, g.dim) != (p, k, d):
            raise InputError('All generators must share p, k and dimension.')
    modulus = p ** k
    encoder = _KeyEncoder(d, modulus)
    gen_stack = np.array([g.matrix for g in gens], dtype=np.int64)
    frontier = np.eye(d, dtype=np.int64)[np.newaxis]
    seen = set(encoder.keys(frontier))
    found = [frontier]
    while frontier.shape[0] > 0:
        products = np.matmul(frontier[:, np.newaxis], gen_stack) % modulus
        products = products.reshape(-1, d, d)
        keys = encoder.keys(products)
        new = []
        for i, key in enumerate(keys):
            if key not in seen:
                seen.add(key)
                new.append(i)
        frontier = products[new]
        found.append(frontier)
        if len(seen) > cap:
            raise EnumerationCapExceeded(
                f'Subgroup of G(Z/{p}^{k}) exceeds the enumeration cap of '
                f'{cap} elements. Use a smaller p or k.')
    elements = np.concatenate(found)
    logger.debug('Enumerated subgroup of order %d over Z/%d^%d.',
                 elements.shape[0], p, k)
    return EnumeratedSubgroup(cb, p, k, elements)


def full_adjoint_group(
    cb: ChevalleyBasis,
    p: int,
    k: int,
    cap: Optional[int] = DEFAULT_CAP
) -> EnumeratedSubgroup:
    """
    The subgroup generated by all ``x_alpha(1)``, ``alpha`` in ``+-Delta``,
    i.e. the adjoint elementary group over ``Z/p^k``.
    """
    return enumerate_subgroup(cb, chevalley_generators(cb, p, k), cap)


def random_generator_set(
    cb: ChevalleyBasis,
    p: int,
    k: int,
    rng: np.random.Generator,
    n_gens: Optional[int] = 3,
    min_depth: Optional[int] = 0
) -> List[GroupElement]:
    """
    Random generators ``x_alpha(p^a t)`` with ``alpha`` in ``+-Delta``,
    ``a`` in ``[min_depth, k-1]`` and ``t`` a unit.
    """
    n_pos = cb.rs.n_positive
    roots = list(range(cb.rank)) + [n_pos + i for i in range(cb.rank)]
    gens = []
    for _ in range(n_gens):
        a = int(rng.integers(min_depth, k))
        t = int(rng.integers(1, p))
        root = roots[int(rng.integers(len(roots)))]
        gens.append(root_element(cb, root, p ** a * t, p, k))
    return gens


def phi_m(subgroup: EnumeratedSubgroup, m: int) -> Subspace:
    """``Phi_m`` of an enumerated subgroup."""
    return subgroup.phi(m)


def verify_bracket_containment(
    subgroup: EnumeratedSubgroup,
    l_level: int,
    m_level: int
) -> bool:
    return subgroup.verify_bracket_containment(l_level, m_level)


def kernel_layer_sizes(subgroup: EnumeratedSubgroup) -> Dict[int, int]:
    return subgroup.kernel_layer_sizes()
