"""
This module contains the bracket-filtration closure engine.

Given seeds spanning ``W_1``, the levels ``W_k = sum_{l+m=k} [W_l, W_m]``
form the smallest family of subspaces containing the seeds in level 1 and
satisfying ``[W_l, W_m] in W_{l+m}``. No inclusion ``W_k in W_{k+1}`` is
assumed.

"""

import logging
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from chevcert.errors import InputError, StructureConstantsVanish
from chevcert.lie_algebras import ChevalleyBasis
from chevcert.utilities.fp_linalg import independent_rows_mod_p
from .subspace import Subspace, span, bracket_space, independent_brackets


logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 4


@dataclass
class FiltrationTrace():
    """Levels ``W_1 ... W_depth`` of a bracket filtration.

    Attributes
    ----------
    p : int
        The prime.
    levels : list of Subspace
        ``levels[k - 1]`` is ``W_k``.
    provenance : list of list
        For level 1, ``[0, 0, s, -1]`` marks seed number ``s``. For level
        ``k > 1``, an entry ``[l, m, i, j]`` states that the bracket of basis
        vector ``i`` of ``W_l`` with basis vector ``j`` of ``W_m`` was used
        as a spanning vector of ``W_k``.
    exploratory : bool
        Whether the closure was run with ``p`` at or below the largest
        structure constant.

    """

    p: int
    levels: List[Subspace]
    provenance: List[List[List[int]]] = field(default_factory=list)
    exploratory: bool = False

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, k: int) -> Subspace:
        """Return ``W_k`` (1-based)."""
        return self.levels[k - 1]

    @property
    def dimensions(self) -> List[int]:
        return [w.dim for w in self.levels]

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'depth': self.depth,
            'dimensions': self.dimensions,
            'exploratory': self.exploratory,
            'levels': [
                {'level': k + 1, 'dim': w.dim, 'witnesses': wit}
                for k, (w, wit) in enumerate(zip(self.levels,
                                                 self.provenance))
            ],
        }


def check_prime_bound(
    cb: ChevalleyBasis,
    p: int,
    allow_small_prime: bool = False
) -> bool:
    """
    Check that ``p`` exceeds every ``|N_{alpha, beta}|``.

    Returns whether the run is exploratory (below the bound, allowed by
    ``allow_small_prime``).

    Raises
    ------
    StructureConstantsVanish
        If ``p <= n_max`` and ``allow_small_prime`` is not set.
    """
    n_max = cb.max_structure_constant()
    if p > n_max:
        return False
    msg = (f'Structure constants vanish mod p: p={p} does not exceed the '
           f'largest structure constant {n_max} of {cb.rs.cartan_type}.')
    if not allow_small_prime:
        raise StructureConstantsVanish(msg)
    warnings.warn(msg + ' Running in exploratory mode.')
    logger.warning(msg)
    return True


def closure_filtration(
    cb: ChevalleyBasis,
    seeds: Sequence,
    p: int,
    depth: Optional[int] = DEFAULT_DEPTH,
    allow_small_prime: Optional[bool] = False
) -> FiltrationTrace:
    """
    Compute the bracket filtration generated by ``seeds`` in level 1.

    Parameters
    ----------
    cb : ChevalleyBasis
        The Chevalley basis of ``g``.
    seeds : sequence
        LieElement instances (or coefficient arrays) spanning ``W_1``.
    p : int
        The prime.
    depth : int, optional
        Number of levels to compute.
    allow_small_prime : bool, optional
        Allow ``p`` at or below the largest structure constant. The trace is
        then flagged as exploratory.

    Returns
    -------
    A FiltrationTrace.
    """
    if depth < 1:
        raise InputError(f'Filtration depth must be at least 1, got {depth}.')
    exploratory = check_prime_bound(cb, p, allow_small_prime)
    d = cb.dim
    seeds = list(seeds)
    first = span(seeds, p, d)
    seed_rows = [s.coeffs if hasattr(s, 'coeffs') else np.asarray(s)
                 for s in seeds]
    # Provenance of level 1: which seeds are needed to span it.
    seed_witnesses = []
    if seed_rows:
        selected, _ = independent_rows_mod_p(
            np.array(seed_rows, dtype=np.int64) % p, p)
        seed_witnesses = [[0, 0, int(s), -1] for s in selected]
    levels = [first]
    provenance = [seed_witnesses]
    for k in range(2, depth + 1):
        rows = np.zeros((0, d), dtype=np.int64)
        witnesses = []
        for low in range(1, k // 2 + 1):
            high = k - low
            pairs, picked = independent_brackets(
                cb, levels[low - 1], levels[high - 1], start=rows)
            witnesses += [[low, high, int(i), int(j)] for i, j in pairs]
            rows = np.vstack((rows, picked))
            if rows.shape[0] == d:
                break
        level = Subspace(p, d, rows)
        logger.debug('W_%d has dimension %d (of %d).', k, level.dim, d)
        levels.append(level)
        provenance.append(witnesses)
    return FiltrationTrace(p, levels, provenance, exploratory)


def derived_algebra(cb: ChevalleyBasis, p: int) -> Subspace:
    """The derived algebra ``[g, g]`` over F_p."""
    full = Subspace(p, cb.dim, np.eye(cb.dim, dtype=np.int64))
    return bracket_space(cb, full, full)
