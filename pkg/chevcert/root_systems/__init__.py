from .cartan_type import CartanType, parse_cartan_types
from .root_system import (
    Root, CocharVec, RootSystem, build_root_system, height, pairing,
    highest_root_coeffs, coxeter_number, coxeter_element_order)


__all__ = ['CartanType', 'parse_cartan_types', 'Root', 'CocharVec',
           'RootSystem', 'build_root_system', 'height', 'pairing',
           'highest_root_coeffs', 'coxeter_number', 'coxeter_element_order']
