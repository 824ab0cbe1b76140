import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chevcert.errors import (
    InvariantViolation, NoValidToralElement, StructureConstantsVanish)
from chevcert.filtration import (
    RootHeightReport, check_multiples, check_root_height_lemma,
    closure_filtration, random_valid_toral)
from chevcert.filtration.root_height import ASSERTIONS
from chevcert.lie_algebras import build_chevalley_basis, cochar_to_toral
from chevcert.root_systems import CocharVec, build_root_system
from chevcert.utilities import primes_in_range


TYPES = ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'D4', 'G2']


@pytest.mark.parametrize('name', TYPES)
def test_root_height_lemma(name):
    """
    For every prime ``n_max < p < 50`` not dividing the Cartan
    determinant, 20 random toral elements with ``alpha(H) != 0`` for every
    root give a filtration whose fourth level contains ``g^der``.

    Primes without any such toral element are skipped.
    """
    rs = build_root_system(name)
    cb = build_chevalley_basis(rs)
    rng = np.random.default_rng(0)
    n_checked = 0
    for p in primes_in_range(cb.max_structure_constant() + 1, 49):
        if rs.determinant % p == 0:
            continue
        try:
            random_valid_toral(cb, p, rng)
        except NoValidToralElement:
            continue
        for _ in range(20):
            h = random_valid_toral(cb, p, rng)
            report = check_root_height_lemma(cb, p, h)
            assert report.hypothesis_ok
            assert report.passed, report.missing
            assert set(report.assertions) == set(ASSERTIONS)
            n_checked += 1
    assert n_checked > 0


def test_hypothesis_violation():
    """
    In G2 the cocharacter (3, 5) pairs to 11 with ``2 a1 + a2``, so at
    ``p = 11`` the hypothesis fails and is reported, not raised.
    """
    rs = build_root_system('G2')
    cb = build_chevalley_basis(rs)
    h = cochar_to_toral(cb, CocharVec((3, 5)), 11)
    report = check_root_height_lemma(cb, 11, h)
    assert not report.hypothesis_ok
    assert not report.passed
    assert rs.index((2, 1)) in report.zero_roots
    assert report.trace is None
    report.raise_for_violation()


def test_passing_g2():
    """ The same cocharacter passes at ``p = 13``. """
    cb = build_chevalley_basis(build_root_system('G2'))
    h = cochar_to_toral(cb, CocharVec((3, 5)), 13)
    report = check_root_height_lemma(cb, 13, h)
    assert report.passed
    assert report.trace.dimensions[3] == cb.dim


def test_small_prime():
    """
    At ``p <= n_max`` the check refuses to run unless the exploratory mode
    is requested, which issues a warning.
    """
    cb = build_chevalley_basis(build_root_system('G2'))
    h = cochar_to_toral(cb, CocharVec((1, 1)), 3)
    with pytest.raises(StructureConstantsVanish):
        check_root_height_lemma(cb, 3, h)
    with pytest.warns(UserWarning, match='exploratory'):
        report = check_root_height_lemma(cb, 3, h, allow_small_prime=True)
    assert not report.hypothesis_ok


def test_no_valid_toral_element():
    """ In B2 over F_3 every toral element vanishes on some root. """
    cb = build_chevalley_basis(build_root_system('B2'))
    with pytest.raises(NoValidToralElement):
        random_valid_toral(cb, 3, np.random.default_rng(1),
                           max_attempts=10)


def test_conclusion_failure_is_a_violation():
    """
    A failed conclusion with a valid hypothesis raises InvariantViolation.
    """
    report = RootHeightReport(
        7, True, [], {name: name != 'derived_in_W4' for name in ASSERTIONS},
        {'derived_in_W4': ['g^der']})
    with pytest.raises(InvariantViolation, match='derived_in_W4'):
        report.raise_for_violation()


def test_multiples():
    """ ``W_8`` also contains ``g^der`` once ``W_4`` does. """
    cb = build_chevalley_basis(build_root_system('A2'))
    h = cochar_to_toral(cb, CocharVec((3, 5)), 11)
    assert check_multiples(cb, 11, h) == {4: True, 8: True}


def test_trace_provenance():
    """
    Level 1 records the seeds used; every witness of a higher level points
    to basis vectors of two lower levels whose indices add up.
    """
    cb = build_chevalley_basis(build_root_system('B2'))
    seeds = [cb.x(0, 7), cb.x(1, 7)]
    trace = closure_filtration(cb, seeds, 7, depth=4)
    assert trace.provenance[0] == [[0, 0, 0, -1], [0, 0, 1, -1]]
    for k in range(2, trace.depth + 1):
        for low, high, i, j in trace.provenance[k - 1]:
            assert low + high == k
            assert i < trace.level(low).dim and j < trace.level(high).dim
        assert len(trace.provenance[k - 1]) == trace.level(k).dim
    doc = trace.to_dict()
    assert doc['dimensions'] == trace.dimensions
    assert doc['levels'][0]['witnesses'] == trace.provenance[0]


def test_empty_seeds():
    """ No seeds give the zero filtration. """
    cb = build_chevalley_basis(build_root_system('A2'))
    trace = closure_filtration(cb, [], 7)
    assert trace.dimensions == [0, 0, 0, 0]
    assert trace.provenance[0] == []


def test_coroot_in_second_level():
    """ ``H_alpha`` lies in ``W_2`` when ``X_alpha, X_-alpha`` seed A1. """
    p = 5
    cb = build_chevalley_basis(build_root_system('A1'))
    trace = closure_filtration(cb, [cb.x(0, p), cb.x(1, p)], p)
    assert trace.dimensions[0] == 2
    assert not trace.level(1).contains(cb.h(0, p))
    assert trace.level(2).contains(cb.h(0, p))


def test_simple_root_vectors_and_regular_toral():
    """
    A regular toral element with the simple root vectors and their
    negatives fills all of A2 by the fourth level over F_7.
    """
    p = 7
    cb = build_chevalley_basis(build_root_system('A2'))
    coeffs = np.zeros(cb.dim, dtype=np.int64)
    coeffs[:2] = (1, 3)
    seeds = [cb.element(coeffs, p), cb.x(0, p), cb.x(3, p), cb.x(1, p),
             cb.x(4, p)]
    trace = closure_filtration(cb, seeds, p)
    assert trace.dimensions[0] == 5
    assert trace.level(4).dim == 8


_A2 = build_chevalley_basis(build_root_system('A2'))
_A2_SEEDS = st.lists(
    st.lists(st.integers(0, 6), min_size=_A2.dim, max_size=_A2.dim),
    max_size=3)


@settings(max_examples=25, deadline=None)
@given(_A2_SEEDS, _A2_SEEDS)
def test_monotone_in_seeds(seeds, extra):
    """ Enlarging the seeds enlarges every level of the filtration. """
    small = closure_filtration(_A2, seeds, 7)
    large = closure_filtration(_A2, seeds + extra, 7)
    for k in range(1, small.depth + 1):
        assert large.level(k).contains_subspace(small.level(k))


if __name__ == '__main__':
    for name in TYPES:
        test_root_height_lemma(name)
    test_hypothesis_violation()
    test_passing_g2()
    test_small_prime()
    test_no_valid_toral_element()
    test_conclusion_failure_is_a_violation()
    test_multiples()
    test_trace_provenance()
    test_empty_seeds()
    test_coroot_in_second_level()
    test_simple_root_vectors_and_regular_toral()
    test_monotone_in_seeds()
