import pytest

from chevcert.errors import InputError
from chevcert.root_systems import build_root_system
from chevcert.witness import n_sequence, star


@pytest.mark.parametrize(('name', 'values'), [
    ('A1', (1, 3, 5, 7)),
    ('A2', (1, 8, 24, 56)),
    ('G2', (1, 19, 109, 559)),
])
def test_values(name, values):
    seq = n_sequence(build_root_system(name), 3)
    assert seq.values == values


def test_prime_bound():
    seq = n_sequence(build_root_system('A2'), 2)
    assert seq.prime_bound(0) == 17
    assert seq.prime_bound(1) == 49
    assert seq.starred == (1, 9, 25)
    assert seq.to_dict() == {'values': [1, 8, 24], 'starred': [1, 9, 25]}


@pytest.mark.parametrize('name', ['A1', 'A3', 'B3', 'C3', 'D4', 'F4', 'G2',
                                  'E6'])
def test_monotone(name):
    """
    The sequence increases strictly, and the candidate intervals
    ``[N_i^* + 2, N_{i+1}]`` are disjoint.
    """
    seq = n_sequence(build_root_system(name), 12)
    for k in range(12):
        assert seq[k + 1] > seq.starred[k] >= seq[k]
        assert seq.starred[k] % 2 == 1


def test_star():
    assert star(3) == 3
    assert star(8) == 9


def test_upto_must_be_positive():
    with pytest.raises(InputError):
        n_sequence(build_root_system('A1'), 0)


if __name__ == '__main__':
    test_prime_bound()
    test_monotone('G2')
    test_star()
