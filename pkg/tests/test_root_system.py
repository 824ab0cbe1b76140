import numpy as np
import pytest
from hypothesis import given, strategies as st
from numpy.testing import assert_array_equal

from chevcert.errors import InputError
from chevcert.root_systems import (
    CartanType, CocharVec, Root, build_root_system, parse_cartan_types,
    pairing)


# (type, number of positive roots, highest root, Coxeter number, det)
ROOT_DATA = [
    ('A1', 1, (1,), 2, 2),
    ('A2', 3, (1, 1), 3, 3),
    ('A3', 6, (1, 1, 1), 4, 4),
    ('B2', 4, (1, 2), 4, 2),
    ('B3', 9, (1, 2, 2), 6, 2),
    ('C3', 9, (2, 2, 1), 6, 2),
    ('D4', 12, (1, 2, 1, 1), 6, 4),
    ('G2', 6, (3, 2), 6, 1),
    ('F4', 24, (2, 3, 4, 2), 12, 1),
    ('E6', 36, (1, 2, 2, 3, 2, 1), 12, 3),
    ('E7', 63, (2, 2, 3, 4, 3, 2, 1), 18, 2),
    ('E8', 120, (2, 3, 4, 6, 5, 4, 3, 2), 30, 1),
]

SMALL_TYPES = ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'D4', 'G2']


@pytest.mark.parametrize('name,n_pos,highest,h,det', ROOT_DATA)
def test_root_data(name, n_pos, highest, h, det):
    """
    Check the number of roots, the highest root, the Coxeter number and
    the Cartan determinant of every exceptional type and a few classical
    ones.
    """
    rs = build_root_system(name)
    assert rs.n_positive == n_pos
    assert len(rs) == 2 * n_pos
    assert rs.highest_root_coeffs() == highest
    assert rs.coxeter_number() == h
    assert rs.determinant == det


@pytest.mark.parametrize('name', [d[0] for d in ROOT_DATA])
def test_coxeter_element_order(name):
    """
    The order of the Coxeter element ``s_1 ... s_r`` equals the height of
    the highest root plus one.
    """
    rs = build_root_system(name)
    assert rs.coxeter_element_order() == rs.highest_root.height + 1


def test_canonical_order():
    """
    Simple roots come first, positives are sorted by height and the
    negative of root ``i`` is root ``i + n_positive``.
    """
    rs = build_root_system('G2')
    assert [r.coeffs for r in rs.simple_roots] == [(1, 0), (0, 1)]
    heights = rs.heights[:rs.n_positive]
    assert np.all(np.diff(heights) >= 0)
    assert_array_equal(rs.root_array[rs.n_positive:],
                       -rs.root_array[:rs.n_positive])
    assert str(rs.highest_root) == '3a1+2a2'


def test_cartan_matrices():
    """ Check the Cartan matrices of B2, C3 and G2 (Bourbaki numbering). """
    assert_array_equal(build_root_system('B2').cartan_matrix,
                       [[2, -1], [-2, 2]])
    assert_array_equal(build_root_system('C3').cartan_matrix,
                       [[2, -1, 0], [-1, 2, -2], [0, -1, 2]])
    assert_array_equal(build_root_system('G2').cartan_matrix,
                       [[2, -3], [-1, 2]])


@pytest.mark.parametrize('name', SMALL_TYPES)
def test_weyl_reflections_permute_roots(name):
    """
    Every simple reflection is a permutation of the roots which sends
    ``alpha_i`` to ``-alpha_i``.
    """
    rs = build_root_system(name)
    perms = rs.simple_reflection_permutations
    for i, perm in enumerate(perms):
        assert sorted(perm.tolist()) == list(range(len(rs)))
        assert rs.roots[perm[i]] == -rs.simple_roots[i]


def test_root_strings():
    """
    In G2 the short root string through the long simple root has length 4.
    """
    rs = build_root_system('G2')
    a1, a2 = rs.simple_roots
    assert rs.root_string(a1, a2) == (0, 3)
    assert rs.root_string_constant(a1, a2) == 1
    assert rs.root_string_constant((1, 1), (1, 0)) == 2
    assert rs.root_string_constant(a1, (2, 1)) == 3
    assert rs.root_string_constant(a2, a2) == 0


def test_parse_cartan_types():
    """ Type strings are case insensitive and comma separated. """
    types = parse_cartan_types('a1, G2,d4')
    assert [str(t) for t in types] == ['A1', 'G2', 'D4']
    assert CartanType.from_string(' e8 ') == CartanType('E', 8)


@pytest.mark.parametrize('name', ['A0', 'B1', 'D3', 'E5', 'F3', 'G3', 'H3',
                                  'X', '', '2A'])
def test_invalid_types(name):
    """ Invalid family/rank combinations raise an InputError. """
    with pytest.raises(InputError):
        CartanType.from_string(name)


def test_pairing_rank_mismatch():
    """ A cocharacter of the wrong rank cannot be paired. """
    rs = build_root_system('A2')
    with pytest.raises(InputError):
        rs.pairings(CocharVec((1, 2, 3)))
    with pytest.raises(InputError):
        pairing(Root((1, 1)), CocharVec((1,)))
    with pytest.raises(InputError):
        rs.index((2, 2))


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=2),
       st.lists(st.integers(-50, 50), min_size=2, max_size=2))
def test_pairing_is_additive(x, y):
    """ ``<alpha, lambda + mu> = <alpha, lambda> + <alpha, mu>``. """
    rs = build_root_system('G2')
    lam, mu = CocharVec(x), CocharVec(y)
    assert_array_equal(rs.pairings(lam + mu),
                       rs.pairings(lam) + rs.pairings(mu))


@given(st.sampled_from(SMALL_TYPES), st.data())
def test_reflection_preserves_inner_product(name, data):
    """ Weyl reflections are isometries of the invariant form. """
    rs = build_root_system(name)
    n = len(rs)
    a = rs.roots[data.draw(st.integers(0, n - 1))]
    b = rs.roots[data.draw(st.integers(0, n - 1))]
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.inner_product(rs.reflect(a, i), rs.reflect(b, i)) == \
        rs.inner_product(a, b)


def test_to_dict():
    """ The JSON document has the documented keys. """
    doc = build_root_system('A2').to_dict()
    assert set(doc) == {'type', 'cartan_matrix', 'roots', 'highest_root'}
    assert doc['type'] == 'A2'
    assert doc['roots'][:3] == [[1, 0], [0, 1], [1, 1]]
    assert doc['highest_root'] == [1, 1]


if __name__ == '__main__':
    for data in ROOT_DATA:
        test_root_data(*data)
        test_coxeter_element_order(data[0])
    test_canonical_order()
    test_cartan_matrices()
    for name in SMALL_TYPES:
        test_weyl_reflections_permute_roots(name)
    test_root_strings()
    test_parse_cartan_types()
    test_pairing_rank_mismatch()
    test_pairing_is_additive()
    test_reflection_preserves_inner_product()
    test_to_dict()
