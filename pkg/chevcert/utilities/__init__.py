from .fp_linalg import (
    inv_mod, rref_mod_p, independent_rows_mod_p, reduce_vector, solve_mod_p,
    integer_determinant)
from .primes import prime_sieve, primes_in_range, is_prime, euler_phi
from .progress_bar import get_progress_bar


__all__ = [
    'inv_mod', 'rref_mod_p', 'independent_rows_mod_p', 'reduce_vector',
    'solve_mod_p', 'integer_determinant', 'prime_sieve', 'primes_in_range',
    'is_prime', 'euler_phi', 'get_progress_bar']
