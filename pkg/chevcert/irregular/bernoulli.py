"""
This module contains the Bernoulli number kernels: residues modulo p by
power-series inversion and an exact rational oracle.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List

import numpy as np

from chevcert.errors import InputError, InvariantViolation
from chevcert.utilities.fp_linalg import inv_mod
from chevcert.utilities.numba import njit_serial, njit_parallel, prange
from chevcert.utilities.primes import is_prime

# Largest index served by the exact oracle.
ORACLE_LIMIT = 400


@njit_serial
def bernoulli_residues(p):
    """
    Residues ``B_n mod p`` for ``n = 0 ... p-3``.

    The series ``t / (e^t - 1) = sum B_n t^n / n!`` is obtained by
    inverting ``(e^t - 1) / t = sum t^j / (j+1)!`` modulo ``t^(p-2)``.
    """
    n_terms = p - 2
    fact = np.ones(p, dtype=np.int64)
    for i in range(1, p):
        fact[i] = (fact[i - 1] * i) % p
    a = np.zeros(n_terms, dtype=np.int64)
    for j in range(n_terms):
        a[j] = inv_mod(fact[j + 1], p)
    b = np.zeros(n_terms, dtype=np.int64)
    b[0] = 1
    # Products are below p^2; sum this many before reducing mod p.
    chunk = max(1, (2 ** 62) // ((p - 1) * (p - 1)))
    for n in range(1, n_terms):
        acc = 0
        for start in range(1, n + 1, chunk):
            stop = min(start + chunk, n + 1)
            for j in range(start, stop):
                acc += a[j] * b[n - j]
            acc %= p
        b[n] = (p - acc) % p
    for n in range(n_terms):
        b[n] = (b[n] * fact[n]) % p
    return b


@njit_parallel
def irregular_flags(primes, width):
    """
    For every prime, flag the even ``k`` in ``[2, p-3]`` with
    ``B_k = 0 mod p``. Returns an array of shape ``(len(primes), width)``.
    """
    n = primes.shape[0]
    flags = np.zeros((n, width), dtype=np.uint8)
    for i in prange(n):
        p = primes[i]
        residues = bernoulli_residues(p)
        for k in range(2, p - 2, 2):
            if residues[k] == 0:
                flags[i, k] = 1
    return flags


def _check_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise InputError(f'p must be a prime >= 5, got {p}.')


def bernoulli_mod_p(p: int) -> Dict[int, int]:
    """
    ``B_k mod p`` for every even ``k`` in ``[2, p-3]``.

    Parameters
    ----------
    p : int
        A prime, at least 5.

    Returns
    -------
    A dictionary mapping ``k`` to the residue in ``[0, p)``.
    """
    _check_prime(p)
    residues = bernoulli_residues(p)
    return {k: int(residues[k]) for k in range(2, p - 2, 2)}


@lru_cache(maxsize=None)
def _oracle_table(max_index: int) -> List[Fraction]:
    values = [Fraction(1)]
    for m in range(1, max_index + 1):
        total = sum(comb(m + 1, j) * values[j] for j in range(m))
        values.append(-total / (m + 1))
    return values


def exact_bernoulli_oracle(
    max_index: int,
    limit: int = ORACLE_LIMIT
) -> List[Fraction]:
    """
    Exact ``B_0 ... B_max_index`` from the recurrence
    ``sum_{j=0}^{m} C(m+1, j) B_j = 0`` (so ``B_1 = -1/2``).
    """
    if max_index < 0 or max_index > limit:
        raise InputError(
            f'Oracle index must be in [0, {limit}], got {max_index}.')
    return list(_oracle_table(max_index))


def reduce_mod_p(value: Fraction, p: int) -> int:
    """Reduce a rational number whose denominator is prime to ``p``."""
    if value.denominator % p == 0:
        raise InvariantViolation(
            f'Denominator of {value} is divisible by p={p}.')
    return value.numerator * pow(value.denominator, -1, p) % p


def oracle_mod_p(p: int, limit: int = ORACLE_LIMIT) -> Dict[int, int]:
    """``B_k mod p`` for even ``k`` in ``[2, p-3]`` from the exact oracle."""
    _check_prime(p)
    table = exact_bernoulli_oracle(max(p - 3, 0), limit)
    return {k: reduce_mod_p(table[k], p) for k in range(2, p - 2, 2)}
