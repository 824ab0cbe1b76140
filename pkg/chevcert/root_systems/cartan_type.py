""" This module contains the definition of the CartanType class. """

import re
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from chevcert.errors import InputError
from chevcert.utilities.fp_linalg import integer_determinant


_TYPE_PATTERN = re.compile(r'^\s*([A-Ga-g])\s*(\d+)\s*$')


@dataclass(frozen=True)
class CartanType():
    """Cartan type of a split simple group, e.g. ``A2`` or ``G2``.

    Simple roots are numbered following Bourbaki.

    Parameters
    ----------
    family : str
        One of ``'A'``, ``'B'``, ``'C'``, ``'D'``, ``'E'``, ``'F'``, ``'G'``.
    rank : int
        Rank of the root system.

    """

    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper() if isinstance(self.family, str) else ''
        object.__setattr__(self, 'family', family)
        if family not in 'ABCDEFG' or len(family) != 1:
            raise InputError(
                f"Cartan family '{self.family}' not recognized. Possible "
                "values are 'A', 'B', 'C', 'D', 'E', 'F' and 'G'.")
        r = self.rank
        valid = (
            (family == 'A' and r >= 1)
            or (family in 'BC' and r >= 2)
            or (family == 'D' and r >= 4)
            or (family == 'E' and r in (6, 7, 8))
            or (family == 'F' and r == 4)
            or (family == 'G' and r == 2)
        )
        if not valid:
            raise InputError(
                f"Rank {r} is not valid for Cartan family '{family}'.")

    @classmethod
    def from_string(cls, name: str) -> 'CartanType':
        """Parse a case-insensitive type string such as ``'d4'``."""
        match = _TYPE_PATTERN.match(name) if isinstance(name, str) else None
        if match is None:
            raise InputError(
                f"Cartan type string '{name}' not understood. Expected a "
                "family letter followed by the rank, e.g. 'A2' or 'G2'.")
        return cls(match.group(1), int(match.group(2)))

    def __str__(self):
        return f'{self.family}{self.rank}'

    def dynkin_data(self) -> Tuple[List[Tuple[int, int]], List[int]]:
        """
        Return the Dynkin diagram edges (0-based, Bourbaki numbering) and
        the squared lengths of the simple roots, normalized so that short
        roots have squared length 2.
        """
        f, r = self.family, self.rank
        chain = [(i, i + 1) for i in range(r - 1)]
        if f == 'A':
            return chain, [2] * r
        if f == 'B':
            return chain, [4] * (r - 1) + [2]
        if f == 'C':
            return chain, [2] * (r - 1) + [4]
        if f == 'D':
            edges = [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
            return edges, [2] * r
        if f == 'E':
            edges = [(0, 2), (2, 3), (3, 4), (1, 3)]
            edges += [(i, i + 1) for i in range(4, r - 1)]
            return edges, [2] * r
        if f == 'F':
            return chain, [4, 4, 2, 2]
        return chain, [2, 6]

    def inner_product_matrix(self) -> np.ndarray:
        """Gram matrix ``(alpha_i, alpha_j)`` of the simple roots."""
        edges, lengths = self.dynkin_data()
        gram = np.diag(np.array(lengths, dtype=np.int64))
        for i, j in edges:
            gram[i, j] = gram[j, i] = -max(lengths[i], lengths[j]) // 2
        return gram

    def cartan_matrix(self) -> np.ndarray:
        """Cartan matrix ``A_ij = <alpha_j, alpha_i^vee>``."""
        gram = self.inner_product_matrix()
        lengths = np.diag(gram)
        return (2 * gram) // lengths[:, np.newaxis]

    def determinant(self) -> int:
        """Determinant of the Cartan matrix (order of the center)."""
        return integer_determinant(self.cartan_matrix())

    def fundamental_group_exponent(self) -> int:
        """Exponent of the fundamental group of the adjoint form."""
        f, r = self.family, self.rank
        if f == 'A':
            return r + 1
        if f in 'BC':
            return 2
        if f == 'D':
            return 2 if r % 2 == 0 else 4
        if f == 'E':
            return {6: 3, 7: 2, 8: 1}[r]
        return 1


def parse_cartan_types(names: str) -> List[CartanType]:
    """Parse a comma separated list of Cartan types, e.g. ``'A1,G2'``."""
    items = [s for s in names.split(',') if s.strip()]
    if len(items) == 0:
        raise InputError('At least one Cartan type is required.')
    return [CartanType.from_string(s) for s in items]
