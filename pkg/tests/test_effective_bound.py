import pytest

from chevcert.errors import InputError, PrimeSearchCeilingExceeded
from chevcert.witness import (
    analytic_prime_bound, effective_bound, minimal_distinct_primes)


def test_a1():
    """ ``(2h - 2, h~_adjoint, h~_sc, c) = (2, 2, 4, 5)``. """
    report = effective_bound('A1')
    factor = report.factors[0]
    assert (factor.coxeter_bound, factor.h_tilde_adjoint,
            factor.h_tilde_sc, report.c) == (2, 2, 4, 5)
    assert factor.least_prime == 5
    assert factor.analytic_bound == 7
    assert factor.analytic_bound_holds
    assert report.bound == 5


def test_product_needs_distinct_primes():
    report = effective_bound(['A1', 'A1'])
    assert report.c == 13
    assert sorted(report.primes) == [5, 13]
    assert report.to_dict()['c_G'].startswith('c_G')


@pytest.mark.parametrize('types', ['A2', 'G2', 'B2', 'A1,G2', 'A2,A2,A2'])
def test_analytic_bound_dominates(types):
    report = effective_bound(types)
    for factor in report.factors:
        assert factor.least_prime % factor.h_tilde == 1
        assert factor.least_prime <= factor.analytic_bound
    assert len(set(report.primes)) == len(report.primes)
    for q, factor in zip(report.primes, report.factors):
        assert q % factor.h_tilde == 1


def test_known_constants():
    """ G2 has ``h~ = 6``; three A2 factors use 7, 13 and 19. """
    g2 = effective_bound('G2').factors[0]
    assert g2.h_tilde == 6
    assert g2.least_prime == 7
    assert effective_bound('A2,A2,A2').c == 19
    assert effective_bound('B3').factors[0].sc_status == \
        'sc order undetermined'
    b2 = effective_bound('B2').factors[0]
    assert (b2.h_tilde_sc, b2.least_prime) == (8, 17)


def test_minimal_distinct_primes():
    assert sorted(minimal_distinct_primes([4, 4, 4])) == [5, 13, 17]
    assert sorted(minimal_distinct_primes([4, 6])) == [5, 7]
    assert analytic_prime_bound(6) == 7
    with pytest.raises(PrimeSearchCeilingExceeded):
        minimal_distinct_primes([4, 4], ceiling=10)
    with pytest.raises(InputError):
        minimal_distinct_primes([])
    with pytest.raises(InputError):
        effective_bound([])


if __name__ == '__main__':
    test_a1()
    test_product_needs_distinct_primes()
    test_known_constants()
    test_minimal_distinct_primes()
