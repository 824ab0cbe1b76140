"""
This module contains the exponential isomorphism between ``g`` over F_p
and the kernel layers ``ker(G(Z/p^{m+1}) -> G(Z/p^m))``, which is
``v -> I + p^m ad(v)``.
"""

from functools import lru_cache
from typing import Optional

import numpy as np

from chevcert.errors import DegenerateCartanPairing, InputError
from chevcert.lie_algebras import ChevalleyBasis, LieElement
from chevcert.utilities.fp_linalg import solve_mod_p, rref_mod_p
from .group_element import GroupElement


def _check_levels(m: int, k: int) -> None:
    if not (1 <= m < k <= 2 * m + 1):
        raise InputError(
            f'Level bounds violated: need 1 <= m < k <= 2m+1, got m={m}, '
            f'k={k}.')


def exp_layer(
    cb: ChevalleyBasis,
    v: LieElement,
    m: int,
    k: Optional[int] = None
) -> GroupElement:
    """
    Element ``I + p^m ad(v)`` of the kernel of reduction to level ``m``.

    Parameters
    ----------
    cb : ChevalleyBasis
        The Chevalley basis.
    v : LieElement
        Element of ``g`` over F_p.
    m : int
        The layer.
    k : int, optional
        Level of the returned element, ``m + 1`` by default.
    """
    if v.modulus == 0:
        raise InputError('exp_layer needs an element over F_p.')
    p = v.modulus
    k = m + 1 if k is None else k
    _check_levels(m, k)
    ad = cb.ad_matrix(LieElement(cb, v.coeffs, 0))
    mat = np.eye(cb.dim, dtype=np.int64) + p ** m * ad
    return GroupElement(p, k, mat)


@lru_cache(maxsize=None)
def _ad_system(cb: ChevalleyBasis, p: int) -> np.ndarray:
    """Matrix whose column ``i`` is ``vec(ad(e_i))`` mod ``p``."""
    t = cb.structure_tensor % p
    # ad(e_i)[a, b] = T[i, b, a]
    system = np.transpose(t, (2, 1, 0)).reshape(cb.dim * cb.dim, cb.dim)
    system = np.ascontiguousarray(system)
    _, rank = rref_mod_p(np.ascontiguousarray(system.T), p)
    if rank < cb.dim:
        raise DegenerateCartanPairing(
            f'ad is not injective on g over F_{p} for '
            f'{cb.rs.cartan_type}: the layer logarithm is undefined.')
    return system


def log_layer(cb: ChevalleyBasis, g: GroupElement, m: int) -> LieElement:
    """
    Inverse of ``exp_layer``: the ``v`` with ``g = I + p^m ad(v)`` modulo
    ``p^{m+1}``.

    Raises
    ------
    InputError
        If ``g`` is not trivial modulo ``p^m``, its level is below
        ``m + 1``, or it is not of the form ``I + p^m ad(v)``.
    """
    p = g.p
    if g.k < m + 1 or m < 1:
        raise InputError(
            f'Level bounds violated: element of level {g.k} has no layer '
            f'{m}.')
    if not g.in_kernel(m):
        raise InputError(f'Element is not trivial modulo {p}^{m}.')
    diff = (g.matrix - np.eye(g.dim, dtype=np.int64)) % p ** (m + 1)
    target = (diff // p ** m) % p
    v, _ = solve_mod_p(_ad_system(cb, p), target.reshape(-1), p)
    return LieElement(cb, v, p)
