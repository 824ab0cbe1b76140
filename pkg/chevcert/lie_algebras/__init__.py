from .chevalley_basis import (
    ChevalleyBasis, SIGN_CONVENTION, build_chevalley_basis,
    max_structure_constant, cochar_to_toral)
from .lie_element import LieElement, bracket


__all__ = ['ChevalleyBasis', 'SIGN_CONVENTION', 'build_chevalley_basis',
           'max_structure_constant', 'cochar_to_toral', 'LieElement',
           'bracket']
