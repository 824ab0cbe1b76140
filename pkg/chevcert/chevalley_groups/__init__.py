from .group_element import (
    GroupElement, chevalley_generators, root_element, root_element_matrix)
from .kernel_layers import exp_layer, log_layer
from .enumeration import (
    EnumeratedSubgroup, enumerate_subgroup, full_adjoint_group,
    random_generator_set, phi_m, verify_bracket_containment,
    kernel_layer_sizes, DEFAULT_CAP)
from .tits_lift import (
    TitsLiftData, tits_lift_order, defining_tits_lift_order, matrix_order)


__all__ = ['GroupElement', 'chevalley_generators', 'root_element',
           'root_element_matrix', 'exp_layer', 'log_layer',
           'EnumeratedSubgroup', 'enumerate_subgroup', 'full_adjoint_group',
           'random_generator_set', 'phi_m', 'verify_bracket_containment',
           'kernel_layer_sizes', 'DEFAULT_CAP', 'TitsLiftData',
           'tits_lift_order', 'defining_tits_lift_order', 'matrix_order']
