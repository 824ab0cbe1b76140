"""
This module computes the order of the standard lift of a Coxeter element,
``n_1 ... n_r`` with ``n_i = x_i(1) x_{-i}(-1) x_i(1)``, to the normalizer
of the maximal torus.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from chevcert.errors import InputError, InvariantViolation
from chevcert.lie_algebras import ChevalleyBasis
from chevcert.root_systems import RootSystem
from .group_element import root_element_matrix


logger = logging.getLogger(__name__)

# Upper bound for the order search.
MAX_ORDER = 10_000

SC_EXACT_DEFINING = 'exact (defining representation)'
SC_EXACT_TRIVIAL_CENTER = 'exact (trivial center)'
SC_UNDETERMINED = 'sc order undetermined'


@dataclass(frozen=True)
class TitsLiftData():
    """Orders of the Coxeter lift.

    Attributes
    ----------
    order_adjoint : int
        Order in the adjoint representation.
    sc_order_bound : int
        ``order_adjoint`` times the exponent of the fundamental group, an
        upper bound for the order in the simply-connected group.
    sc_order : int or None
        The exact simply-connected order when it is determined.
    sc_status : str
        How ``sc_order`` was obtained.

    """

    order_adjoint: int
    sc_order_bound: int
    sc_order: Optional[int]
    sc_status: str

    @property
    def h_tilde(self) -> int:
        """The exact order if known, else the bound."""
        return self.sc_order if self.sc_order is not None \
            else self.sc_order_bound

    def to_dict(self) -> Dict:
        return {
            'order_adjoint': self.order_adjoint,
            'sc_order_bound': self.sc_order_bound,
            'sc_order': self.sc_order,
            'sc_status': self.sc_status,
        }


def matrix_order(mat: np.ndarray, max_order: int = MAX_ORDER) -> int:
    """Order of an integer matrix of finite order (exact arithmetic)."""
    mat = np.asarray(mat, dtype=object)
    eye = np.eye(mat.shape[0], dtype=object)
    power = mat
    for n in range(1, max_order + 1):
        if np.array_equal(power, eye):
            return n
        power = power.dot(mat)
    raise InvariantViolation(
        f'Matrix has no finite order below {max_order}.')


def coxeter_lift_adjoint(cb: ChevalleyBasis) -> np.ndarray:
    """Integer matrix of ``n_1 ... n_r`` in the adjoint representation."""
    n_pos = cb.rs.n_positive
    result = np.eye(cb.dim, dtype=object)
    for i in range(cb.rank):
        x_pos = root_element_matrix(cb, i, 1)
        x_neg = root_element_matrix(cb, n_pos + i, -1)
        n_i = x_pos.dot(x_neg).dot(x_pos)
        result = result.dot(n_i)
    return result


def _unit(d: int, i: int, j: int) -> np.ndarray:
    mat = np.zeros((d, d), dtype=object)
    mat[i, j] = 1
    return mat


def _special_linear_root_vectors(r: int) -> List[Tuple[np.ndarray, ...]]:
    """``(E_{i,i+1}, E_{i+1,i})`` in ``sl_{r+1}``."""
    d = r + 1
    return [(_unit(d, i, i + 1), _unit(d, i + 1, i)) for i in range(r)]


def _symplectic_root_vectors(r: int) -> List[Tuple[np.ndarray, ...]]:
    """
    Simple root vectors of ``sp_{2r}`` (type C_r) on the basis
    ``e_1 ... e_r, f_1 ... f_r`` with ``<e_i, f_j> = delta_ij``.
    """
    d = 2 * r
    vectors = []
    for i in range(r - 1):
        # e_i - e_{i+1}
        x_pos = _unit(d, i, i + 1) - _unit(d, r + i + 1, r + i)
        vectors.append((x_pos, x_pos.T.copy()))
    # 2 e_r
    vectors.append((_unit(d, r - 1, d - 1), _unit(d, d - 1, r - 1)))
    return vectors


def coxeter_lift_defining(rs: RootSystem) -> np.ndarray:
    """
    Matrix of ``n_1 ... n_r`` in a faithful representation of the
    simply-connected group: ``SL_{r+1}`` for A_r, ``Sp_{2r}`` for C_r
    and ``Sp_4 = Spin_5`` for B2. The root elements are
    ``x_alpha(t) = I + t X_alpha``.
    """
    family, r = rs.cartan_type.family, rs.rank
    if family == 'A':
        vectors = _special_linear_root_vectors(r)
    elif family == 'C' or (family == 'B' and r == 2):
        vectors = _symplectic_root_vectors(r)
        if family == 'B':
            # Long and short simple roots swap between B2 and C2.
            vectors = vectors[::-1]
    else:
        raise InputError(
            f'No defining representation of the simply-connected group of '
            f'type {rs.cartan_type} is implemented.')
    d = vectors[0][0].shape[0]
    eye = np.eye(d, dtype=object)
    result = eye
    for x_pos, x_neg in vectors:
        n_i = (eye + x_pos).dot(eye - x_neg).dot(eye + x_pos)
        result = result.dot(n_i)
    return result


def has_defining_lift(rs: RootSystem) -> bool:
    family = rs.cartan_type.family
    return family in 'AC' or (family == 'B' and rs.rank == 2)



def defining_tits_lift_order(rs: RootSystem) -> int:
    """Exact order of the Coxeter lift in the simply-connected group
    (types A, C and B2)."""
    return matrix_order(coxeter_lift_defining(rs))


def tits_lift_order(cb: ChevalleyBasis) -> TitsLiftData:
    """
    Order of the Coxeter lift in the adjoint representation, together with
    the simply-connected bound (adjoint order times the exponent of the
    fundamental group) and the exact simply-connected order where it is
    determined.
    """
    rs = cb.rs
    order = matrix_order(coxeter_lift_adjoint(cb))
    bound = order * rs.fundamental_group_exponent
    if rs.fundamental_group_exponent == 1:
        sc_order, status = order, SC_EXACT_TRIVIAL_CENTER
    elif has_defining_lift(rs):
        sc_order, status = defining_tits_lift_order(rs), SC_EXACT_DEFINING
        if sc_order > bound or sc_order % order != 0:
            raise InvariantViolation(
                f'Defining-representation order {sc_order} is incompatible '
                f'with the adjoint order {order} of {rs.cartan_type}.')
    else:
        sc_order, status = None, SC_UNDETERMINED
    logger.debug('Coxeter lift of %s: adjoint order %d, sc bound %d.',
                 rs.cartan_type, order, bound)
    return TitsLiftData(order, bound, sc_order, status)
