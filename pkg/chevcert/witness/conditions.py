"""
This module checks the five conditions on a cocharacter ``lambda`` and a
prime ``p``:

1. ``p`` exceeds every ``|N_{alpha, beta}|``.
2. ``0 < |<alpha, lambda>| < p - 1`` for every root.
3. ``<alpha, lambda>`` is odd for every simple root.
4. The residues ``<alpha, lambda> mod (p - 1)`` over all roots are
   pairwise distinct and different from 1.
5. The eigenspace of exponent ``p - <alpha, lambda>`` vanishes for every
   root.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from chevcert.errors import InputError
from chevcert.irregular import IrregularData, eigenspace_is_zero
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import CocharVec, RootSystem


CONDITIONS = ('1', '2', '3', '4', '5')


@dataclass
class ConditionVerdict():
    """Pass/fail of one condition with an optional witness."""

    passed: bool
    witness: Optional[Dict] = None

    def to_dict(self) -> Dict:
        return {'passed': self.passed, 'witness': self.witness}


@dataclass
class CheckReport():
    """Verdicts of the five conditions.

    Attributes
    ----------
    verdicts : dict
        Maps ``'1' ... '5'`` to a ConditionVerdict.
    vandiver_assumed : bool
        Whether condition 5 treats the even eigenspaces as zero.

    """

    p: int
    cochar: CocharVec
    verdicts: Dict[str, ConditionVerdict] = field(default_factory=dict)
    vandiver_assumed: bool = True

    @property
    def passed(self) -> bool:
        return all(self.verdicts[c].passed for c in CONDITIONS)

    def first_failure(self) -> Optional[str]:
        for c in CONDITIONS:
            if not self.verdicts[c].passed:
                return c
        return None

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'cocharacter': list(self.cochar.pairings),
            'conditions': {c: self.verdicts[c].to_dict()
                           for c in CONDITIONS},
            'passed': self.passed,
            'vandiver_assumed': self.vandiver_assumed,
        }


def check_theorem_conditions(
    rs: RootSystem,
    p: int,
    cochar: CocharVec,
    irr: IrregularData
) -> CheckReport:
    """
    Evaluate the five conditions. Failures are verdicts, never errors.

    Parameters
    ----------
    rs : RootSystem
        The root system.
    p : int
        A prime, at least 5.
    cochar : CocharVec
        The cocharacter.
    irr : IrregularData
        Irregularity data of ``p``.
    """
    if p < 5:
        raise InputError(f'p must be at least 5, got {p}.')
    if irr.p != p:
        raise InputError(f'Irregular data of p={irr.p} used for p={p}.')
    pairings = rs.pairings(cochar)
    roots = rs.roots
    verdicts = {}

    n_max = build_chevalley_basis(rs).max_structure_constant()
    verdicts['1'] = ConditionVerdict(
        p > n_max, None if p > n_max else {'n_max': n_max})

    bad = np.flatnonzero((pairings == 0) | (np.abs(pairings) >= p - 1))
    verdicts['2'] = ConditionVerdict(
        len(bad) == 0, None if len(bad) == 0 else {
            'root': str(roots[bad[0]]), 'pairing': int(pairings[bad[0]])})

    even = [i for i in range(rs.rank) if pairings[i] % 2 == 0]
    verdicts['3'] = ConditionVerdict(
        len(even) == 0, None if len(even) == 0 else {
            'root': str(roots[even[0]]), 'pairing': int(pairings[even[0]])})

    residues = pairings % (p - 1)
    witness = None
    seen = {}
    for i, res in enumerate(residues.tolist()):
        if res == 1:
            witness = {'root': str(roots[i]), 'residue': 1}
            break
        if res in seen:
            witness = {'roots': [str(roots[seen[res]]), str(roots[i])],
                       'residue': res}
            break
        seen[res] = i
    verdicts['4'] = ConditionVerdict(witness is None, witness)

    witness = None
    for i, pairing in enumerate(pairings.tolist()):
        exponent = (p - pairing) % (p - 1)
        verdict = eigenspace_is_zero(p, exponent, irr)
        if not verdict.is_zero:
            witness = {'root': str(roots[i]), 'pairing': pairing,
                       'exponent': exponent, 'verdict': verdict.value}
            break
    verdicts['5'] = ConditionVerdict(witness is None, witness)
    return CheckReport(p, cochar, verdicts, irr.vandiver_assumed)
