import json

import pytest

from chevcert.errors import InputError
from chevcert.irregular import IrregularCache, index_of_irregularity
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import build_root_system
from chevcert.utilities import primes_in_range
from chevcert.witness import (
    Rejection, WitnessCertificate, certify_one_prime, certify_range,
    n_sequence, validate_certificate)


TYPES = ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'D4', 'G2']


@pytest.fixture(scope='module')
def cache(tmp_path_factory):
    return IrregularCache(str(tmp_path_factory.mktemp('irregular')))


@pytest.mark.parametrize('name', TYPES)
def test_certificate_sweep(name, cache):
    """
    Every prime below 500 above the structure constants and the prime
    bound for ``e = e_p``, and not dividing the Cartan determinant, is
    certified.
    """
    rs = build_root_system(name)
    n_max = build_chevalley_basis(rs).max_structure_constant()
    n_certified = 0
    for p in primes_in_range(5, 499):
        e_p = index_of_irregularity(p, cache).e_p
        bound = n_sequence(rs, e_p + 1).prime_bound(e_p)
        if p <= max(n_max, bound) or rs.determinant % p == 0:
            continue
        result = certify_one_prime(rs, p, e_p, cache)
        assert isinstance(result, WitnessCertificate), result
        doc = result.to_dict()
        assert doc['status'] == 'certified'
        assert doc['conditions']['passed']
        assert doc['root_height']['passed']
        assert max(result.pairing_set) == n_sequence(
            rs, e_p + 1)[result.base_index + 1]
        n_certified += 1
    assert n_certified > 0


def test_a2_67():
    cert = certify_one_prime('A2', 67, 1)
    assert cert.cocharacter == [11, 13]
    assert cert.base_index == 1
    assert cert.pairing_set == [11, 13, 24]
    doc = cert.to_dict()
    assert doc['bad_set'] == [8, 58]
    assert doc['hypotheses'] == {
        'n_max': 1, 'prime_bound': 49, 'e_p': 1, 'determinant': 3}
    assert doc['root_numbering'] == 'bourbaki'
    assert doc['vandiver_assumed'] is True


@pytest.mark.parametrize(('name', 'p', 'e', 'code', 'message'), [
    ('A1', 5, 0, 'prime-bound', 'p=5 <= 1+2N_1=7'),
    ('A1', 37, 0, 'irregularity-index', 'e_p=1 > e'),
    ('A2', 37, 1, 'prime-bound', 'p=37 <= 1+2N_2=49'),
    ('G2', 5, 0, 'prime-bound', None),
])
def test_rejections(name, p, e, code, message):
    result = certify_one_prime(name, p, e)
    assert isinstance(result, Rejection)
    assert result.code == code
    if message is not None:
        assert result.message == message
    doc = result.to_dict()
    assert doc['status'] == 'rejected'
    assert doc['reason'] == code


def test_prime_bound_precedes_determinant():
    """ 5 divides the determinant of A4, but the prime bound fails first. """
    result = certify_one_prime('A4', 5, 0)
    assert result.code == 'prime-bound'


def test_validate_round_trip(tmp_path):
    """ A certificate written to disk validates; a tampered one does not.
    """
    cert = certify_one_prime('G2', 229, 0)
    assert isinstance(cert, WitnessCertificate)
    path = tmp_path / 'g2.json'
    path.write_text(cert.to_json(), encoding='utf-8')
    document = json.loads(path.read_text(encoding='utf-8'))
    assert validate_certificate(document).valid

    document['cocharacter'] = [1, 3]
    result = validate_certificate(document)
    assert not result.valid
    assert "field 'cocharacter' does not match" in result.mismatches

    result = validate_certificate({'p': 5})
    assert not result.valid


@pytest.mark.parametrize('override', [
    {'cartan_type': 5}, {'cartan_type': None}, {'cartan_type': ['A', 2]},
    {'p': True}, {'p': 11.5}, {'p': '11'}, {'e': None}, {'e': False},
])
def test_validate_malformed_fields(override):
    """ Wrongly typed inputs are reported as invalid, not raised. """
    document = {'schema_version': 1, 'cartan_type': 'A1', 'p': 11, 'e': 0}
    document.update(override)
    result = validate_certificate(document)
    assert not result.valid
    assert result.mismatches
    assert not validate_certificate([document]).valid


def test_determinism():
    first = certify_one_prime('B2', 29, 0).to_json()
    second = certify_one_prime('B2', 29, 0).to_json()
    assert first == second
    assert first.endswith('\n')


def test_certify_range(cache):
    results = certify_range('A1', 5, 50, cache)
    assert list(results) == primes_in_range(5, 50)
    assert isinstance(results[5], Rejection)
    assert isinstance(results[11], WitnessCertificate)
    assert isinstance(results[37], WitnessCertificate)
    assert results[37].base_index == 0


def test_invalid_input():
    with pytest.raises(InputError):
        certify_one_prime('A1', 3, 0)
    with pytest.raises(InputError):
        certify_one_prime('A1', 15, 0)
    with pytest.raises(InputError):
        certify_one_prime('A1', 11, -1)


if __name__ == '__main__':
    test_a2_67()
    test_determinism()
    test_invalid_input()
