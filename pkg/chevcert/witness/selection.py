"""
This module contains the cocharacter selector.

The candidates are the arithmetic progressions ``x_j = N_i^* + 2j``
(``j = 1 ... r``) for ``i = 0 ... e``. The pairing sets of the candidates
lie in disjoint intervals ``[N_i^* + 2, N_{i+1}]``, and the bad set meets
at most ``e`` of them, so one candidate avoids it whenever
``p > 1 + 2 N_{e+1}`` and ``e_p <= e``.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from chevcert.errors import InvariantViolation
from chevcert.irregular import IrregularData
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import CocharVec, RootSystem
from .conditions import CheckReport, check_theorem_conditions
from .n_sequence import n_sequence


logger = logging.getLogger(__name__)


def candidate(rs: RootSystem, base: int) -> CocharVec:
    """Candidate cocharacter ``(b + 2, b + 4, ..., b + 2r)`` with
    ``b = N_base^*``."""
    b = n_sequence(rs, base + 1).starred[base]
    return CocharVec(tuple(b + 2 * (j + 1) for j in range(rs.rank)))


@dataclass
class SelectionResult():
    """Outcome of the cocharacter selection.

    Attributes
    ----------
    cochar : CocharVec or None
        The selected cocharacter.
    base_index : int or None
        The ``i`` of the selected candidate.
    report : CheckReport or None
        Condition report of the selected candidate.
    failures : list
        ``(base_index, cochar, first failing condition)`` of every rejected
        candidate.

    """

    p: int
    e: int
    cochar: Optional[CocharVec] = None
    base_index: Optional[int] = None
    report: Optional[CheckReport] = None
    failures: List[Dict] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.cochar is not None

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'e': self.e,
            'success': self.success,
            'cocharacter': None if self.cochar is None
            else list(self.cochar.pairings),
            'base_index': self.base_index,
            'failures': self.failures,
        }


def select_cocharacter(
    rs: RootSystem,
    p: int,
    e: int,
    irr: IrregularData
) -> SelectionResult:
    """
    Return the first candidate cocharacter passing all five conditions.

    Raises
    ------
    InvariantViolation
        If the pairing bound of a candidate is not ``N_{i+1}``, or if the
        selection fails in a way excluded by ``p > 1 + 2 N_{e+1}``,
        ``e_p <= e`` and ``p > n_max``. A failure caused only by coinciding
        pairings (condition 4) is reported, not raised.
    """
    seq = n_sequence(rs, e + 1)
    result = SelectionResult(p, e)
    guaranteed = (
        p > seq.prime_bound(e)
        and irr.e_p <= e
        and p > build_chevalley_basis(rs).max_structure_constant()
    )
    positives = rs.root_array[:rs.n_positive]
    for i in range(e + 1):
        cochar = candidate(rs, i)
        max_pairing = int((positives @ cochar.pairings).max())
        if max_pairing != seq[i + 1]:
            raise InvariantViolation(
                f'Candidate {cochar} has largest pairing {max_pairing}, '
                f'expected N_{i + 1} = {seq[i + 1]}.')
        report = check_theorem_conditions(rs, p, cochar, irr)
        if report.passed:
            result.cochar = cochar
            result.base_index = i
            result.report = report
            logger.info('Selected %s (base %d) for %s at p=%d.', cochar, i,
                        rs.cartan_type, p)
            return result
        failed = [c for c, v in report.verdicts.items() if not v.passed]
        result.failures.append({
            'base_index': i,
            'cocharacter': list(cochar.pairings),
            'first_failure': report.first_failure(),
            'failed_conditions': failed,
            'witness': report.verdicts[report.first_failure()].witness,
        })
        if guaranteed and any(c in failed for c in ('1', '2', '3')):
            raise InvariantViolation(
                f'Candidate {cochar} for {rs.cartan_type} at p={p} fails '
                f'conditions {failed} although p > 1 + 2N_{e + 1}.')
    if guaranteed and all('5' in f['failed_conditions']
                          for f in result.failures):
        raise InvariantViolation(
            f'Every candidate for {rs.cartan_type} at p={p}, e={e} meets the '
            'bad set although e_p <= e and p > 1 + 2N_{e+1}.')
    logger.info('No candidate passes for %s at p=%d, e=%d.',
                rs.cartan_type, p, e)
    return result
