"""
This module contains the irregularity data of a prime: the irregular
indices, the index of irregularity ``e_p``, the eigenspace-vanishing
verdicts and the bad set.

The index of irregularity counts the nonzero eigenspaces of the
p-part of the class group of ``Q(mu_p)``. It is computed as the number of
even ``k`` with ``p | B_k``, which is exact for the odd eigenspaces and
relies on Vandiver's conjecture for the even ones.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from chevcert.errors import InputError
from chevcert.utilities.numba import thread_limit
from chevcert.utilities.primes import is_prime, primes_in_range
from chevcert.utilities.progress_bar import get_progress_bar
from .bernoulli import bernoulli_residues, irregular_flags
from .cache import IrregularCache


logger = logging.getLogger(__name__)

# Number of primes handed to the parallel kernel at once.
SCAN_CHUNK = 64

REGULAR_DENSITY = math.exp(-0.5)


class EigenspaceVerdict(str, Enum):
    """Verdict on the vanishing of one eigenspace."""

    PROVABLY_ZERO = 'ProvablyZero'
    NONZERO_ODD = 'NonzeroOdd'
    ASSUMED_ZERO_VANDIVER = 'AssumedZeroVandiver'

    @property
    def is_zero(self) -> bool:
        return self is not EigenspaceVerdict.NONZERO_ODD


@dataclass(frozen=True)
class IrregularData():
    """Irregular indices of a prime.

    Attributes
    ----------
    p : int
        The prime.
    irregular_indices : tuple
        Sorted even ``k`` in ``[2, p-3]`` with ``B_k = 0 mod p``.
    vandiver_assumed : bool
        Whether ``e_p`` relies on Vandiver's conjecture (always true).

    """

    p: int
    irregular_indices: Tuple[int, ...]
    vandiver_assumed: bool = True

    @property
    def e_p(self) -> int:
        """Index of irregularity."""
        return len(self.irregular_indices)

    @property
    def is_regular(self) -> bool:
        return self.e_p == 0

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'irregular_indices': list(self.irregular_indices),
            'e_p': self.e_p,
            'vandiver_assumed': self.vandiver_assumed,
        }


@dataclass(frozen=True)
class BadSet():
    """
    Residues ``n`` mod ``p - 1`` for which the eigenspace at exponent
    ``1 + n`` or ``1 - n`` is nonzero.
    """

    p: int
    members: Tuple[int, ...]
    vandiver_assumed: bool = True

    def __contains__(self, n: int) -> bool:
        return int(n) % (self.p - 1) in self.members

    def __len__(self):
        return len(self.members)


def _check_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise InputError(f'p must be a prime >= 5, got {p}.')


def _indices_from_residues(p: int) -> Tuple[int, ...]:
    residues = bernoulli_residues(p)
    return tuple(k for k in range(2, p - 2, 2) if residues[k] == 0)


def index_of_irregularity(
    p: int,
    cache: Optional[IrregularCache] = None
) -> IrregularData:
    """
    Irregular indices and index of irregularity of ``p``.

    Parameters
    ----------
    p : int
        A prime, at least 5.
    cache : IrregularCache, optional
        Cache to read from and write to.
    """
    _check_prime(p)
    if cache is not None and p in cache:
        return IrregularData(p, tuple(cache.get(p)))
    indices = _indices_from_residues(p)
    if cache is not None:
        cache.update([(p, indices)])
    return IrregularData(p, indices)


def eigenspace_is_zero(
    p: int,
    j: int,
    irr: Optional[IrregularData] = None
) -> EigenspaceVerdict:
    """
    Vanishing verdict for the eigenspace of exponent ``j`` (mod ``p-1``).

    Exponents 0 and 1 give zero eigenspaces. An odd exponent ``j`` gives a
    nonzero eigenspace exactly when ``p | B_{p-j}``. Even exponents are
    assumed zero (Vandiver).
    """
    if irr is None:
        irr = index_of_irregularity(p)
    elif irr.p != p:
        raise InputError(f'Irregular data of p={irr.p} used for p={p}.')
    j = int(j) % (p - 1)
    if j in (0, 1):
        return EigenspaceVerdict.PROVABLY_ZERO
    if j % 2 == 0:
        return EigenspaceVerdict.ASSUMED_ZERO_VANDIVER
    if p - j in irr.irregular_indices:
        return EigenspaceVerdict.NONZERO_ODD
    return EigenspaceVerdict.PROVABLY_ZERO


def bad_set(p: int, irr: Optional[IrregularData] = None) -> BadSet:
    """The set of ``n`` mod ``p-1`` excluded for cocharacter pairings."""
    if irr is None:
        irr = index_of_irregularity(p)
    members = []
    for n in range(p - 1):
        plus = eigenspace_is_zero(p, 1 + n, irr)
        minus = eigenspace_is_zero(p, 1 - n, irr)
        if not (plus.is_zero and minus.is_zero):
            members.append(n)
    return BadSet(p, tuple(members), irr.vandiver_assumed)


def irregularity_density_estimate(r: int) -> Tuple[float, float]:
    """
    Heuristic density of primes with index of irregularity ``r``, and the
    lower bound for the density of primes with index at most ``r``.
    """
    if r < 0:
        raise InputError(f'r must be non-negative, got {r}.')
    # Log space: for large r the point estimate underflows to 0.
    point = math.exp(-0.5 - r * math.log(2) - math.lgamma(r + 1))
    cumulative_lower = 1 - math.exp(-0.5) * 0.5 ** r
    return point, cumulative_lower


@dataclass
class ScanResult():
    """Outcome of a scan over a prime range.

    Attributes
    ----------
    data : dict
        Maps every prime of the range to its IrregularData.
    computed : list
        The primes that were not found in the cache.

    """

    data: Dict[int, IrregularData]
    computed: List[int]


def scan_primes(
    p_min: int,
    p_max: int,
    cache: Optional[IrregularCache] = None,
    n_threads: Optional[int] = None,
    show_progress_bar: Optional[bool] = False
) -> ScanResult:
    """
    Compute the irregular indices of all primes in ``[p_min, p_max]``.

    Primes present in ``cache`` are not recomputed; new results are
    written to it.

    Parameters
    ----------
    p_min, p_max : int
        Bounds of the (inclusive) range. Primes below 5 are skipped.
    cache : IrregularCache, optional
        The cache.
    n_threads : int, optional
        Number of numba threads for the scan. Defaults to
        ``CHEVCERT_NUM_THREADS`` (or 1).
    show_progress_bar : bool, optional
        Whether to show a progress bar.
    """
    if p_min > p_max:
        raise InputError(f'Empty prime range [{p_min}, {p_max}].')
    primes = primes_in_range(max(p_min, 5), p_max)
    data = {}
    todo = []
    for p in primes:
        if cache is not None and p in cache:
            data[p] = IrregularData(p, tuple(cache.get(p)))
        else:
            todo.append(p)
    logger.info('Irregular scan [%d, %d]: %d cached, %d to compute.',
                p_min, p_max, len(data), len(todo))

    progress_bar = get_progress_bar(
        description='Irregular scan', total=len(todo),
        disable=not show_progress_bar)
    with thread_limit(n_threads), progress_bar:
        for start in range(0, len(todo), SCAN_CHUNK):
            chunk = np.array(todo[start:start + SCAN_CHUNK], dtype=np.int64)
            flags = irregular_flags(chunk, int(chunk.max()))
            records = []
            for p, row in zip(chunk.tolist(), flags):
                indices = tuple(int(k) for k in np.flatnonzero(row))
                data[p] = IrregularData(p, indices)
                records.append((p, indices))
            if cache is not None:
                cache.update(records)
            progress_bar.update(len(chunk))
    data = {p: data[p] for p in sorted(data)}
    return ScanResult(data, todo)


def irregular_pairs(
    p_min: int,
    p_max: int,
    cache: Optional[IrregularCache] = None,
    n_threads: Optional[int] = None
) -> Dict[int, Tuple[int, ...]]:
    """Irregular indices of every prime in ``[p_min, p_max]``."""
    result = scan_primes(p_min, p_max, cache, n_threads)
    return {p: d.irregular_indices for p, d in result.data.items()}


def regular_prime_fraction(
    p_min: int,
    p_max: int,
    tolerance: Optional[float] = 0.05,
    cache: Optional[IrregularCache] = None,
    n_threads: Optional[int] = None
) -> float:
    """
    Fraction of regular primes in ``[p_min, p_max]``. A warning is issued
    when it is further than ``tolerance`` from the heuristic ``e^(-1/2)``.
    """
    result = scan_primes(p_min, p_max, cache, n_threads)
    if len(result.data) == 0:
        raise InputError(f'No primes >= 5 in [{p_min}, {p_max}].')
    n_regular = sum(d.is_regular for d in result.data.values())
    fraction = n_regular / len(result.data)
    if abs(fraction - REGULAR_DENSITY) > tolerance:
        msg = (f'Fraction of regular primes in [{p_min}, {p_max}] is '
               f'{fraction:.4f}, more than {tolerance} away from '
               f'{REGULAR_DENSITY:.4f}.')
        warnings.warn(msg)
        logger.warning(msg)
    return fraction
