""" Contains elementary prime-number utilities. """

import math

import numpy as np


def prime_sieve(limit):
    """
    Sieve of Eratosthenes.

    Parameters
    ----------
    limit : int
        Largest integer to classify.

    Returns
    -------
    A boolean array ``is_prime`` of length ``limit + 1``.
    """
    is_prime = np.ones(max(limit + 1, 2), dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i::i] = False
    return is_prime[:limit + 1]


def primes_in_range(p_min, p_max):
    """Return the primes ``p`` with ``p_min <= p <= p_max``."""
    if p_max < 2:
        return []
    is_prime = prime_sieve(p_max)
    return [int(p) for p in np.flatnonzero(is_prime) if p >= p_min]


def is_prime(n):
    """Deterministic primality test by trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def euler_phi(n):
    """Euler's totient function."""
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result
