"""
This module contains the effective bound calculator for a product of
simple factors.

For every factor it reports ``2h - 2`` (``h`` the Coxeter number), the
order ``h~`` of the Coxeter lift and the least prime congruent to 1 mod
``h~``. The constant ``c(h~_1, ..., h~_n)`` is the smallest possible value
of ``max(p_1, ..., p_n)`` over distinct primes with ``p_i = 1 mod h~_i``.

"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from chevcert.errors import InputError, PrimeSearchCeilingExceeded
from chevcert.chevalley_groups import tits_lift_order
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import (
    CartanType, build_root_system, parse_cartan_types)
from chevcert.utilities.primes import euler_phi, prime_sieve


logger = logging.getLogger(__name__)

# Largest integer sieved when searching for the primes of c.
PRIME_SEARCH_CEILING = 10**6
INITIAL_SIEVE_LIMIT = 1024

C_G_NOTE = 'c_G from external reference, not computable here'


@dataclass(frozen=True)
class FactorBound():
    """Bound data of one simple factor."""

    cartan_type: str
    coxeter_number: int
    coxeter_bound: int
    h_tilde_adjoint: int
    h_tilde_sc_bound: int
    h_tilde_sc: Optional[int]
    sc_status: str
    h_tilde: int
    least_prime: int
    analytic_bound: int

    @property
    def analytic_bound_holds(self) -> bool:
        return self.least_prime <= self.analytic_bound

    def to_dict(self) -> Dict:
        return {
            'cartan_type': self.cartan_type,
            'coxeter_number': self.coxeter_number,
            'coxeter_bound': self.coxeter_bound,
            'h_tilde_adjoint': self.h_tilde_adjoint,
            'h_tilde_sc_bound': self.h_tilde_sc_bound,
            'h_tilde_sc': self.h_tilde_sc,
            'sc_status': self.sc_status,
            'h_tilde': self.h_tilde,
            'least_prime': self.least_prime,
            'analytic_bound': self.analytic_bound,
            'analytic_bound_holds': self.analytic_bound_holds,
        }


@dataclass(frozen=True)
class EffectiveBoundReport():
    """Per-factor data, the constant ``c`` with the primes attaining it,
    and the maximum of the computable constants."""

    factors: List[FactorBound]
    c: int
    primes: List[int]

    @property
    def max_coxeter_bound(self) -> int:
        return max(f.coxeter_bound for f in self.factors)

    @property
    def max_h_tilde(self) -> int:
        return max(f.h_tilde for f in self.factors)

    @property
    def bound(self) -> int:
        """Maximum of the computable constants (``c_G`` excluded)."""
        return max(self.max_coxeter_bound, self.max_h_tilde, self.c)

    def to_dict(self) -> Dict:
        return {
            'factors': [f.to_dict() for f in self.factors],
            'max_coxeter_bound': self.max_coxeter_bound,
            'max_h_tilde': self.max_h_tilde,
            'c': self.c,
            'c_primes': self.primes,
            'bound': self.bound,
            'c_G': C_G_NOTE,
        }


def analytic_prime_bound(n: int) -> int:
    """Upper bound ``2^(phi(n) + 1) - 1`` for the least prime ``= 1 mod n``.
    """
    return 2 ** (euler_phi(n) + 1) - 1


def _assign_distinct_primes(
    moduli: Sequence[int],
    primes: np.ndarray
) -> Optional[List[int]]:
    """
    Distinct primes ``q_i = 1 mod moduli[i]`` minimizing the largest one,
    taken from ``primes`` (sorted), or None if there is no assignment.
    """
    n = len(moduli)
    admissible = np.array([(primes - 1) % m == 0 for m in moduli])
    if not admissible.any(axis=1).all():
        return None
    # Smallest prefix of ``primes`` admitting a perfect matching.
    columns = np.flatnonzero(admissible.any(axis=0))
    for stop in columns[n - 1:]:
        graph = csr_matrix(admissible[:, :stop + 1].astype(np.int8))
        matching = maximum_bipartite_matching(graph, perm_type='column')
        if np.all(matching >= 0):
            return [int(primes[j]) for j in matching]
    return None


def minimal_distinct_primes(
    moduli: Sequence[int],
    ceiling: Optional[int] = PRIME_SEARCH_CEILING
) -> List[int]:
    """
    Distinct primes ``p_i = 1 mod moduli[i]`` with the smallest possible
    maximum.

    Raises
    ------
    PrimeSearchCeilingExceeded
        If no assignment exists among the primes below ``ceiling``.
    """
    if len(moduli) == 0:
        raise InputError('At least one modulus is required.')
    if any(m < 1 for m in moduli):
        raise InputError(f'Moduli must be positive, got {list(moduli)}.')
    limit = INITIAL_SIEVE_LIMIT
    while True:
        limit = min(limit, ceiling)
        primes = np.flatnonzero(prime_sieve(limit))
        assignment = _assign_distinct_primes(moduli, primes)
        if assignment is not None:
            return assignment
        if limit >= ceiling:
            raise PrimeSearchCeilingExceeded(
                f'No distinct primes = 1 mod {list(moduli)} below '
                f'{ceiling}.')
        logger.debug('Prime search for %s: raising sieve limit to %d.',
                     list(moduli), 2 * limit)
        limit *= 2


def factor_bound(cartan_type: Union[CartanType, str]) -> FactorBound:
    rs = build_root_system(cartan_type)
    tits = tits_lift_order(build_chevalley_basis(rs))
    h = rs.coxeter_number()
    least = minimal_distinct_primes([tits.h_tilde])[0]
    return FactorBound(
        cartan_type=str(rs.cartan_type),
        coxeter_number=h,
        coxeter_bound=2 * h - 2,
        h_tilde_adjoint=tits.order_adjoint,
        h_tilde_sc_bound=tits.sc_order_bound,
        h_tilde_sc=tits.sc_order,
        sc_status=tits.sc_status,
        h_tilde=tits.h_tilde,
        least_prime=least,
        analytic_bound=analytic_prime_bound(tits.h_tilde),
    )


def effective_bound(
    types: Union[str, Sequence[Union[CartanType, str]]],
    ceiling: Optional[int] = PRIME_SEARCH_CEILING
) -> EffectiveBoundReport:
    """
    Compute the effective bound data of a product of simple factors.

    Parameters
    ----------
    types : str or list
        The simple factors, as a list or a comma-separated string such as
        ``'A1,G2'``.
    ceiling : int, optional
        Largest integer searched for the primes of ``c``.

    Returns
    -------
    An EffectiveBoundReport. ``c_G`` is reported as unavailable.
    """
    if isinstance(types, str):
        types = parse_cartan_types(types)
    if len(types) == 0:
        raise InputError('At least one Cartan type is required.')
    factors = [factor_bound(t) for t in types]
    primes = minimal_distinct_primes([f.h_tilde for f in factors], ceiling)
    for f in factors:
        if not f.analytic_bound_holds:
            logger.warning('Least prime %d = 1 mod %d exceeds the analytic '
                           'bound %d.', f.least_prime, f.h_tilde,
                           f.analytic_bound)
    return EffectiveBoundReport(factors, max(primes), primes)
