import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_array_equal

from chevcert.errors import InputError
from chevcert.filtration import Subspace, bracket_space, span
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import build_root_system
from chevcert.utilities import (
    integer_determinant, inv_mod, rref_mod_p, solve_mod_p)


def test_rref():
    """ Check the reduced row echelon form of a small matrix over F_5. """
    mat = np.array([[2, 4, 1], [1, 2, 3], [0, 0, 1]], dtype=np.int64)
    rref, rank = rref_mod_p(mat, 5)
    assert rank == 2
    assert_array_equal(rref, [[1, 2, 0], [0, 0, 1]])


def test_inverse():
    """ ``a * inv_mod(a, p) = 1`` for every unit. """
    for p in (5, 7, 101):
        for a in range(1, p):
            assert a * inv_mod(a, p) % p == 1
    assert inv_mod(0, 7) == 0


def test_solve():
    """ Solve a linear system over F_7 and detect an inconsistent one. """
    a = np.array([[1, 2], [3, 4]], dtype=np.int64)
    x, unique = solve_mod_p(a, np.array([5, 6]), 7)
    assert unique
    assert_array_equal((a @ x) % 7, [5, 6])
    singular = np.array([[1, 2], [2, 4]], dtype=np.int64)
    with pytest.raises(InputError):
        solve_mod_p(singular, np.array([1, 0]), 7)


def test_integer_determinant():
    """ Exact determinants, including a zero pivot. """
    assert integer_determinant([[0, 1], [1, 0]]) == -1
    assert integer_determinant([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4
    assert integer_determinant([[1, 2], [2, 4]]) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 10), min_size=5, max_size=5),
                min_size=1, max_size=6),
       st.integers(1, 10))
def test_canonical_basis(rows, scale):
    """
    The stored basis is canonical: reordering and rescaling the spanning
    vectors does not change the subspace.
    """
    p = 11
    a = span(rows, p, 5)
    b = span([np.array(r) * scale for r in reversed(rows)], p, 5)
    assert a == b
    for r in rows:
        assert a.contains(np.array(r))


def test_sum_and_containment():
    """ The sum of two lines spans the plane that contains both. """
    p = 7
    v = span([[1, 0, 0]], p, 3)
    w = span([[0, 1, 0]], p, 3)
    s = v + w
    assert s.dim == 2
    assert s.contains_subspace(v) and s.contains_subspace(w)
    assert s.contains([3, 5, 0])
    assert not s.contains([0, 0, 1])
    with pytest.raises(InputError):
        s.contains([1, 0])
    with pytest.raises(InputError):
        s.contains_subspace(Subspace(5, 3))


@pytest.mark.parametrize('name', ['A1', 'A2', 'B2', 'G2'])
def test_algebra_is_perfect(name):
    """ ``[g, g] = g`` over F_p for p above the structure constants. """
    cb = build_chevalley_basis(build_root_system(name))
    full = Subspace(7, cb.dim, np.eye(cb.dim, dtype=np.int64))
    assert bracket_space(cb, full, full).is_full()


def test_empty_and_idempotent_sum():
    """ The span of no vectors is zero and ``V + V = V``. """
    p = 7
    zero = span([], p, 4)
    assert zero.dim == 0
    assert zero == Subspace(p, 4)
    v = span([[1, 2, 0, 3], [0, 1, 1, 1]], p, 4)
    assert v + v == v
    assert v + zero == v
    assert v.contains_subspace(zero)


def test_bracket_of_root_lines():
    """ ``[<X_alpha>, <X_-alpha>] = <H_alpha>`` in A1 over F_5. """
    p = 5
    cb = build_chevalley_basis(build_root_system('A1'))
    positive = span([cb.x(0, p)], p, cb.dim)
    negative = span([cb.x(1, p)], p, cb.dim)
    assert bracket_space(cb, positive, negative) == span([cb.h(0, p)], p,
                                                         cb.dim)
    assert bracket_space(cb, positive, positive).dim == 0


_A2 = build_chevalley_basis(build_root_system('A2'))
_A2_VECTORS = st.lists(
    st.lists(st.integers(0, 6), min_size=_A2.dim, max_size=_A2.dim),
    max_size=4)


@settings(max_examples=30, deadline=None)
@given(_A2_VECTORS, _A2_VECTORS)
def test_bracket_space_symmetric(v_rows, w_rows):
    """ ``[V, W] = [W, V]`` for random subspaces of A2 over F_7. """
    p = 7
    v = span(v_rows, p, _A2.dim)
    w = span(w_rows, p, _A2.dim)
    assert bracket_space(_A2, v, w) == bracket_space(_A2, w, v)


if __name__ == '__main__':
    test_rref()
    test_inverse()
    test_solve()
    test_integer_determinant()
    test_canonical_basis()
    test_sum_and_containment()
    test_empty_and_idempotent_sum()
    test_bracket_of_root_lines()
    test_bracket_space_symmetric()
    for name in ['A1', 'A2', 'B2', 'G2']:
        test_algebra_is_perfect(name)
