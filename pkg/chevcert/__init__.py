__version__ = '0.1.0'


from .root_systems import CartanType, RootSystem, build_root_system
from .lie_algebras import ChevalleyBasis, build_chevalley_basis
from .filtration import check_root_height_lemma, closure_filtration
from .chevalley_groups import (
    enumerate_subgroup, full_adjoint_group, tits_lift_order)
from .irregular import (
    IrregularCache, index_of_irregularity, bad_set, scan_primes)
from .witness import (
    n_sequence, check_theorem_conditions, select_cocharacter,
    certify_one_prime, validate_certificate, effective_bound)


__all__ = ['__version__', 'CartanType', 'RootSystem', 'build_root_system',
           'ChevalleyBasis', 'build_chevalley_basis',
           'check_root_height_lemma', 'closure_filtration',
           'enumerate_subgroup', 'full_adjoint_group', 'tits_lift_order',
           'IrregularCache', 'index_of_irregularity', 'bad_set',
           'scan_primes', 'n_sequence', 'check_theorem_conditions',
           'select_cocharacter', 'certify_one_prime',
           'validate_certificate', 'effective_bound']
