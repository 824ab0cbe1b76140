import itertools

import numpy as np
import pytest

from chevcert.chevalley_groups import (
    GroupElement, chevalley_generators, enumerate_subgroup, exp_layer,
    full_adjoint_group, log_layer, random_generator_set, root_element)
from chevcert.errors import (
    DegenerateCartanPairing, EnumerationCapExceeded, InputError,
    StructureConstantsVanish)
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import build_root_system


def _basis(name):
    return build_chevalley_basis(build_root_system(name))


@pytest.mark.parametrize('name,p,k,order', [
    ('A1', 3, 1, 12),
    ('A1', 5, 1, 60),
    ('A1', 3, 2, 324),
    ('A1', 5, 2, 7500),
    ('A2', 2, 1, 168),
    ('A2', 3, 1, 5616),
])
def test_group_orders(name, p, k, order):
    """
    The adjoint elementary group has the order of ``PSL_2`` and ``PSL_3``
    and their congruence extensions.
    """
    group = full_adjoint_group(_basis(name), p, k)
    assert group.order == order


@pytest.mark.parametrize('p', [3, 5])
def test_kernel_layer_size(p):
    """ The kernel of reduction to level 1 has ``p^dim(g)`` elements. """
    group = full_adjoint_group(_basis('A1'), p, 2)
    assert group.kernel_layer_sizes() == {1: p ** 3, 2: 1}
    assert group.image_orders()[1] == group.order // p ** 3


@pytest.mark.parametrize('p,m', [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_exp_log_layer(p, m):
    """
    ``log_layer`` inverts ``exp_layer`` and ``exp_layer`` turns sums into
    products, for every pair of elements of ``sl_2`` over F_p.
    """
    cb = _basis('A1')
    elements = [cb.element(c, p)
                for c in itertools.product(range(p), repeat=3)]
    layers = {}
    for v in elements:
        g = exp_layer(cb, v, m)
        assert g.in_kernel(m)
        assert log_layer(cb, g, m) == v
        layers[v] = g
    assert len(set(layers.values())) == p ** 3
    for v, w in itertools.product(elements, repeat=2):
        assert layers[v] * layers[w] == layers[v + w]


def test_layer_levels():
    """ Levels outside ``1 <= m < k <= 2m + 1`` are rejected. """
    cb = _basis('A1')
    v = cb.x(0, 5)
    with pytest.raises(InputError):
        exp_layer(cb, v, 1, 4)
    with pytest.raises(InputError):
        exp_layer(cb, v, 0)
    with pytest.raises(InputError):
        exp_layer(cb, cb.x(0), 1)
    g = root_element(cb, 0, 1, 5, 2)
    with pytest.raises(InputError, match='not trivial'):
        log_layer(cb, g, 1)


def test_degenerate_layer_logarithm():
    """ Over F_2 the adjoint action of ``sl_2`` is not faithful. """
    cb = _basis('A1')
    g = GroupElement.identity(cb.dim, 2, 2)
    with pytest.raises(DegenerateCartanPairing):
        log_layer(cb, g, 1)


def test_root_elements():
    """
    ``x_alpha(s) x_alpha(t) = x_alpha(s + t)`` and ``x_alpha(1)`` has order
    ``p`` at level 1.
    """
    cb = _basis('G2')
    p, k = 7, 2
    for a in range(len(cb.rs)):
        x2 = root_element(cb, a, 2, p, k)
        x3 = root_element(cb, a, 3, p, k)
        assert x2 * x3 == root_element(cb, a, 5, p, k)
        assert (root_element(cb, a, 1, p, 1) ** p).is_identity()
        assert not (root_element(cb, a, 1, p, k) ** p).is_identity()
        assert (root_element(cb, a, 1, p, k) ** p).in_kernel(1)


def test_generators_need_large_prime():
    """ Generators are refused at ``p <= n_max``. """
    with pytest.raises(StructureConstantsVanish):
        chevalley_generators(_basis('G2'), 3, 1)


def test_enumeration_cap():
    """ Passing the enumeration cap raises an error. """
    cb = _basis('A1')
    with pytest.raises(EnumerationCapExceeded):
        enumerate_subgroup(cb, chevalley_generators(cb, 5, 2), cap=1000)


def test_subgroup_membership():
    """ Generators and their products belong to the enumerated group. """
    cb = _basis('A1')
    gens = chevalley_generators(cb, 3, 2)
    group = enumerate_subgroup(cb, gens)
    prod = gens[0] * gens[1] * gens[0]
    assert prod in group
    assert GroupElement.identity(cb.dim, 3, 2) in group
    assert GroupElement.identity(cb.dim, 3, 1) not in group


@pytest.mark.parametrize('p,k,min_depth', [(3, 4, 0), (5, 3, 1)])
def test_bracket_containment(p, k, min_depth):
    """
    ``[Phi_l, Phi_m]`` is contained in ``Phi_{l+m}`` for 10 random
    subgroups of the adjoint group of ``sl_2`` over ``Z/p^k``.
    """
    cb = _basis('A1')
    rng = np.random.default_rng(42)
    for _ in range(10):
        gens = random_generator_set(cb, p, k, rng, min_depth=min_depth)
        group = enumerate_subgroup(cb, gens)
        for low in range(1, k):
            for high in range(low, k - low):
                assert group.verify_bracket_containment(low, high)


def test_phi_of_full_group():
    """ For the full group every ``Phi_m`` is all of ``g``. """
    group = full_adjoint_group(_basis('A1'), 3, 3)
    assert group.phi(1).is_full()
    assert group.phi(2).is_full()
    with pytest.raises(InputError):
        group.phi(3)
    with pytest.raises(InputError):
        group.verify_bracket_containment(1, 2)


if __name__ == '__main__':
    test_group_orders('A1', 3, 1, 12)
    test_group_orders('A2', 3, 1, 5616)
    test_kernel_layer_size(3)
    test_exp_log_layer(3, 1)
    test_layer_levels()
    test_degenerate_layer_logarithm()
    test_root_elements()
    test_generators_need_large_prime()
    test_enumeration_cap()
    test_subgroup_membership()
    test_bracket_containment(3, 4, 0)
    test_phi_of_full_group()
