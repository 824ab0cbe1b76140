from .bernoulli import (
    bernoulli_mod_p, exact_bernoulli_oracle, oracle_mod_p, ORACLE_LIMIT)
from .irregularity import (
    IrregularData, BadSet, EigenspaceVerdict, ScanResult,
    index_of_irregularity, eigenspace_is_zero, bad_set,
    irregularity_density_estimate, scan_primes, irregular_pairs,
    regular_prime_fraction)
from .cache import IrregularCache, ALGORITHM_VERSION


__all__ = ['bernoulli_mod_p', 'exact_bernoulli_oracle', 'oracle_mod_p',
           'ORACLE_LIMIT', 'IrregularData', 'BadSet', 'EigenspaceVerdict',
           'ScanResult', 'index_of_irregularity', 'eigenspace_is_zero',
           'bad_set', 'irregularity_density_estimate', 'scan_primes',
           'irregular_pairs', 'regular_prime_fraction', 'IrregularCache',
           'ALGORITHM_VERSION']
