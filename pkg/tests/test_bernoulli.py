from fractions import Fraction

import pytest

from chevcert.errors import InputError
from chevcert.irregular import (
    bernoulli_mod_p, exact_bernoulli_oracle, index_of_irregularity,
    oracle_mod_p)
from chevcert.utilities import primes_in_range


def test_oracle_values():
    """ First Bernoulli numbers, with the ``B_1 = -1/2`` convention. """
    b = exact_bernoulli_oracle(12)
    assert b[0] == 1
    assert b[1] == Fraction(-1, 2)
    assert b[2] == Fraction(1, 6)
    assert b[3] == 0
    assert b[4] == Fraction(-1, 30)
    assert b[10] == Fraction(5, 66)
    assert b[12] == Fraction(-691, 2730)
    assert all(b[n] == 0 for n in range(3, 13, 2))


def test_residues_match_oracle():
    """
    The power-series residues agree with the exact numbers reduced
    modulo ``p`` for every prime below 300.
    """
    for p in primes_in_range(5, 300):
        assert bernoulli_mod_p(p) == oracle_mod_p(p), p


def test_691():
    """ 691 divides the numerator of ``B_12``. """
    assert bernoulli_mod_p(691)[12] == 0
    assert 12 in index_of_irregularity(691).irregular_indices


@pytest.mark.parametrize(('p', 'indices'), [
    (5, ()), (31, ()), (37, (32,)), (59, (44,)), (67, (58,)),
    (101, (68,)), (103, (24,)), (131, (22,)), (149, (130,)),
    (157, (62, 110))])
def test_index_of_irregularity(p, indices):
    irr = index_of_irregularity(p)
    assert irr.irregular_indices == indices
    assert irr.e_p == len(indices)
    assert irr.vandiver_assumed


def test_regular_below_37():
    for p in primes_in_range(5, 36):
        assert index_of_irregularity(p).is_regular


def test_invalid_input():
    for p in (2, 3, 9, 100):
        with pytest.raises(InputError):
            bernoulli_mod_p(p)
    with pytest.raises(InputError):
        exact_bernoulli_oracle(401)
    with pytest.raises(InputError):
        exact_bernoulli_oracle(-1)


if __name__ == '__main__':
    test_oracle_values()
    test_residues_match_oracle()
    test_691()
    test_regular_below_37()
    test_invalid_input()
