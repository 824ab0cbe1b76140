from .n_sequence import NSequence, n_sequence, star
from .conditions import (
    CONDITIONS, ConditionVerdict, CheckReport, check_theorem_conditions)
from .selection import SelectionResult, candidate, select_cocharacter
from .certificate import (
    WitnessCertificate, Rejection, ValidationResult, certify_one_prime,
    certify_range, validate_certificate, to_json, SCHEMA_VERSION)
from .effective_bound import (
    FactorBound, EffectiveBoundReport, effective_bound,
    minimal_distinct_primes, analytic_prime_bound, PRIME_SEARCH_CEILING)


__all__ = ['NSequence', 'n_sequence', 'star', 'CONDITIONS',
           'ConditionVerdict', 'CheckReport', 'check_theorem_conditions',
           'SelectionResult', 'candidate', 'select_cocharacter',
           'WitnessCertificate', 'Rejection', 'ValidationResult',
           'certify_one_prime', 'certify_range', 'validate_certificate',
           'to_json', 'SCHEMA_VERSION', 'FactorBound',
           'EffectiveBoundReport', 'effective_bound',
           'minimal_distinct_primes', 'analytic_prime_bound',
           'PRIME_SEARCH_CEILING']
