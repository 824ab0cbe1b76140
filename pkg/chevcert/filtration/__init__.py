from .subspace import (
    Subspace, span, subspace_sum, contains, bracket_space)
from .closure import (
    FiltrationTrace, closure_filtration, derived_algebra, DEFAULT_DEPTH)
from .root_height import (
    RootHeightReport, check_root_height_lemma, random_valid_toral,
    valid_pairing_vectors, check_multiples)


__all__ = ['Subspace', 'span', 'subspace_sum', 'contains', 'bracket_space',
           'FiltrationTrace', 'closure_filtration', 'derived_algebra',
           'DEFAULT_DEPTH', 'RootHeightReport', 'check_root_height_lemma',
           'random_valid_toral', 'valid_pairing_vectors', 'check_multiples']
