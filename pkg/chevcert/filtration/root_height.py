"""
This module verifies the root-height generation lemma: for a toral ``H``
with ``alpha(H) != 0`` for every root, the bracket filtration seeded by
``H`` and the root vectors of odd height contains ``g^der`` in level 4.

"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from chevcert.errors import InputError, InvariantViolation, NoValidToralElement
from chevcert.lie_algebras import ChevalleyBasis, LieElement, cochar_to_toral
from chevcert.root_systems import CocharVec
from .closure import (
    DEFAULT_DEPTH, FiltrationTrace, check_prime_bound, closure_filtration,
    derived_algebra)


logger = logging.getLogger(__name__)

ASSERTIONS = ('even_roots_in_W2', 'roots_in_W3_W4', 'coroots_in_W4',
              'derived_in_W4')

# Largest number of pairing vectors scanned when random sampling fails.
EXHAUSTIVE_SEARCH_LIMIT = 100_000


@dataclass
class RootHeightReport():
    """Outcome of a root-height lemma check.

    Attributes
    ----------
    hypothesis_ok : bool
        Whether ``alpha(H) != 0`` in F_p for every root.
    zero_roots : list
        Indices of the roots with ``alpha(H) = 0`` (hypothesis witnesses).
    assertions : dict
        Pass/fail of every conclusion of the lemma. Empty when the
        hypothesis fails.
    missing : dict
        For every failed assertion, the basis vectors (labels) not found in
        the required level.
    trace : FiltrationTrace or None
        The filtration trace, when the closure was run.

    """

    p: int
    hypothesis_ok: bool
    zero_roots: List[int] = field(default_factory=list)
    assertions: Dict[str, bool] = field(default_factory=dict)
    missing: Dict[str, List[str]] = field(default_factory=dict)
    trace: Optional[FiltrationTrace] = None

    @property
    def passed(self) -> bool:
        return (self.hypothesis_ok and len(self.assertions) > 0
                and all(self.assertions.values()))

    @property
    def exploratory(self) -> bool:
        return self.trace is not None and self.trace.exploratory

    def raise_for_violation(self) -> None:
        """
        Raise InvariantViolation if the conclusion failed although the
        hypothesis holds and the run is not exploratory.
        """
        if self.hypothesis_ok and not self.exploratory and not self.passed:
            failed = [k for k, v in self.assertions.items() if not v]
            raise InvariantViolation(
                f'Root-height lemma conclusion failed at p={self.p} with a '
                f'valid toral element: {failed}.')

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'hypothesis_ok': self.hypothesis_ok,
            'zero_roots': self.zero_roots,
            'assertions': self.assertions,
            'missing': self.missing,
            'passed': self.passed,
            'trace': None if self.trace is None else self.trace.to_dict(),
        }


def root_height_seeds(cb: ChevalleyBasis, h: LieElement) -> List[LieElement]:
    """``H`` together with the root vectors of odd height."""
    heights = cb.rs.heights
    seeds = [h]
    seeds += [cb.x(k, h.modulus) for k in range(cb.n_roots)
              if heights[k] % 2 != 0]
    return seeds


def check_root_height_lemma(
    cb: ChevalleyBasis,
    p: int,
    h: LieElement,
    depth: Optional[int] = DEFAULT_DEPTH,
    allow_small_prime: Optional[bool] = False
) -> RootHeightReport:
    """
    Check the root-height lemma for the toral element ``h``.

    Parameters
    ----------
    cb : ChevalleyBasis
        The Chevalley basis.
    p : int
        The prime.
    h : LieElement
        A toral element over F_p.
    depth : int, optional
        Depth of the filtration (at least 4).
    allow_small_prime : bool, optional
        Allow an exploratory run with ``p`` at or below the largest
        structure constant.

    Returns
    -------
    A RootHeightReport. Hypothesis failures are reported, not raised.
    """
    if depth < DEFAULT_DEPTH:
        raise InputError(
            f'The root-height check needs depth >= {DEFAULT_DEPTH}, got '
            f'{depth}.')
    if h.modulus not in (0, p):
        raise InputError(f'Toral element is defined mod {h.modulus}, not '
                         f'mod {p}.')
    if not h.is_toral():
        raise InputError('The element H must be toral.')
    check_prime_bound(cb, p, allow_small_prime)
    h = h.reduce(p)
    zero_roots = [int(k) for k in np.flatnonzero(h.root_values() == 0)]
    if zero_roots:
        logger.info('Hypothesis violated at p=%d: alpha(H) = 0 for %d '
                    'roots.', p, len(zero_roots))
        return RootHeightReport(p, False, zero_roots)

    trace = closure_filtration(cb, root_height_seeds(cb, h), p, depth,
                               allow_small_prime)
    w2, w3, w4 = trace.level(2), trace.level(3), trace.level(4)
    heights = cb.rs.heights
    labels = cb.labels
    missing = {name: [] for name in ASSERTIONS}
    for k in range(cb.n_roots):
        x = cb.x(k, p)
        if heights[k] % 2 == 0 and not w2.contains(x):
            missing['even_roots_in_W2'].append(labels[cb.rank + k])
        if not (w3.contains(x) and w4.contains(x)):
            missing['roots_in_W3_W4'].append(labels[cb.rank + k])
        if not w4.contains(cb.h(k, p)):
            missing['coroots_in_W4'].append(f'H[{cb.rs.roots[k]}]')
    if not w4.contains_subspace(derived_algebra(cb, p)):
        missing['derived_in_W4'].append('g^der')
    assertions = {name: len(missing[name]) == 0 for name in ASSERTIONS}
    missing = {k: v for k, v in missing.items() if v}
    report = RootHeightReport(p, True, [], assertions, missing, trace)
    logger.debug('Root-height check at p=%d: %s', p, assertions)
    return report


def valid_pairing_vectors(cb: ChevalleyBasis, p: int) -> np.ndarray:
    """All ``x`` in ``[1, p-1]^r`` with ``<alpha, x> != 0 mod p`` for every
    root."""
    grid = np.array(list(itertools.product(range(1, p), repeat=cb.rank)),
                    dtype=np.int64)
    values = (grid @ cb.rs.root_array.T) % p
    return grid[np.all(values != 0, axis=1)]


def random_valid_toral(
    cb: ChevalleyBasis,
    p: int,
    rng: np.random.Generator,
    max_attempts: Optional[int] = 1000
) -> LieElement:
    """
    Sample a toral element ``H = cochar_to_toral(x)`` with ``alpha(H) != 0``
    for every root, drawing ``x`` uniformly from ``[1, p-1]^r``.

    Raises
    ------
    NoValidToralElement
        If no valid element exists (established by exhaustive search) or
        the search budget ran out.
    """
    positives = cb.rs.root_array[:cb.rs.n_positive]
    for _ in range(max_attempts):
        x = rng.integers(1, p, size=cb.rank)
        if np.all((positives @ x) % p != 0):
            return cochar_to_toral(cb, CocharVec(x), p)
    if (p - 1) ** cb.rank > EXHAUSTIVE_SEARCH_LIMIT:
        raise NoValidToralElement(
            f'No valid toral element found in {max_attempts} attempts for '
            f'{cb.rs.cartan_type} at p={p}.')
    candidates = valid_pairing_vectors(cb, p)
    if len(candidates) == 0:
        raise NoValidToralElement(
            f'No toral element with alpha(H) != 0 for all roots exists for '
            f'{cb.rs.cartan_type} at p={p}.')
    x = candidates[rng.integers(len(candidates))]
    return cochar_to_toral(cb, CocharVec(x), p)


def check_multiples(
    cb: ChevalleyBasis,
    p: int,
    h: LieElement,
    multiples: Optional[int] = 2
) -> Dict[int, bool]:
    """
    Check that ``W_{4k}`` contains ``g^der`` for ``k = 1 ... multiples``.

    Once ``W_4`` contains ``g^der``, the identity ``[g^der, g^der] =
    g^der`` propagates the containment to every multiple of 4.
    """
    trace = closure_filtration(cb, root_height_seeds(cb, h.reduce(p)), p,
                               DEFAULT_DEPTH * multiples)
    der = derived_algebra(cb, p)
    return {DEFAULT_DEPTH * k: trace.level(DEFAULT_DEPTH * k)
            .contains_subspace(der) for k in range(1, multiples + 1)}
