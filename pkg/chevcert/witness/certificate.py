"""
This module contains the one-prime certification pipeline and the witness
certificate document.

A certificate records, for a Cartan type ``G``, a prime ``p`` and a bound
``e``, the selected cocharacter, the verdicts of the five conditions and
the bracket-filtration trace of the root-height check. Every field can be
recomputed from ``(G, p, e)``, which is what ``validate_certificate`` does.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from chevcert import __version__
from chevcert.errors import InputError, InvariantViolation
from chevcert.filtration import check_root_height_lemma
from chevcert.irregular import (
    IrregularCache, bad_set, index_of_irregularity)
from chevcert.lie_algebras import (
    SIGN_CONVENTION, build_chevalley_basis, cochar_to_toral)
from chevcert.root_systems import RootSystem, build_root_system
from chevcert.utilities.primes import is_prime, primes_in_range
from chevcert.utilities.progress_bar import get_progress_bar
from .n_sequence import n_sequence
from .selection import select_cocharacter


logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# Machine-readable rejection reasons.
REJECT_STRUCTURE_CONSTANTS = 'structure-constants'
REJECT_PRIME_BOUND = 'prime-bound'
REJECT_IRREGULARITY = 'irregularity-index'
REJECT_DEGENERATE_PAIRING = 'degenerate-cartan-pairing'
REJECT_NO_CANDIDATE = 'no-candidate'

CENTRAL_TORUS_NOTE = (
    'Lie computations concern the derived group only; a one-dimensional '
    'central torus is covered by the cyclotomic character.')


@dataclass
class Rejection():
    """A failed hypothesis of the one-prime pipeline."""

    cartan_type: str
    p: int
    e: int
    code: str
    message: str
    details: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'schema_version': SCHEMA_VERSION,
            'status': 'rejected',
            'cartan_type': self.cartan_type,
            'p': self.p,
            'e': self.e,
            'reason': self.code,
            'message': self.message,
            'details': self.details,
        }


@dataclass
class WitnessCertificate():
    """Checkable record of the hypotheses for ``(G, p, e)``."""

    document: Dict

    @property
    def cocharacter(self) -> List[int]:
        return self.document['cocharacter']

    @property
    def base_index(self) -> int:
        return self.document['base_index']

    @property
    def pairing_set(self) -> List[int]:
        return self.document['pairing_set']

    def to_dict(self) -> Dict:
        return self.document

    def to_json(self) -> str:
        return to_json(self.document)


def to_json(document: Dict) -> str:
    """Deterministic JSON serialization (sorted keys, fixed indentation)."""
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def _normalize(document: Dict) -> Dict:
    # Round trip through JSON so tuples, numpy ints and int dict keys
    # compare like their serialized form.
    return json.loads(json.dumps(document, sort_keys=True))


def certify_one_prime(
    rs: Union[RootSystem, str],
    p: int,
    e: int,
    cache: Optional[IrregularCache] = None
) -> Union[WitnessCertificate, Rejection]:
    """
    Check the hypotheses on ``p`` and, when they hold, select a cocharacter
    and run the root-height check with ``H = cochar_to_toral(lambda)``.

    Parameters
    ----------
    rs : RootSystem or str
        The root system (or its Cartan type string).
    p : int
        A prime, at least 5.
    e : int
        The allowed index of irregularity.
    cache : IrregularCache, optional
        Cache for the irregularity data.

    Returns
    -------
    A WitnessCertificate, or a Rejection naming the first failing
    hypothesis.
    """
    if isinstance(rs, str):
        rs = build_root_system(rs)
    if p < 5 or not is_prime(p):
        raise InputError(f'p must be a prime >= 5, got {p}.')
    if e < 0:
        raise InputError(f'e must be non-negative, got {e}.')
    name = str(rs.cartan_type)
    cb = build_chevalley_basis(rs)
    n_max = cb.max_structure_constant()
    seq = n_sequence(rs, e + 1)

    if p <= n_max:
        return Rejection(name, p, e, REJECT_STRUCTURE_CONSTANTS,
                         f'p={p} <= n_max={n_max}', {'n_max': n_max})
    bound = seq.prime_bound(e)
    if p <= bound:
        return Rejection(name, p, e, REJECT_PRIME_BOUND,
                         f'p={p} <= 1+2N_{e + 1}={bound}',
                         {'prime_bound': bound})
    irr = index_of_irregularity(p, cache)
    if irr.e_p > e:
        return Rejection(name, p, e, REJECT_IRREGULARITY,
                         f'e_p={irr.e_p} > e', {'e_p': irr.e_p})
    det = rs.determinant
    if det % p == 0:
        return Rejection(name, p, e, REJECT_DEGENERATE_PAIRING,
                         f'p={p} divides det(Cartan)={det}',
                         {'determinant': det})

    selection = select_cocharacter(rs, p, e, irr)
    if not selection.success:
        return Rejection(name, p, e, REJECT_NO_CANDIDATE,
                         'no candidate cocharacter passes all conditions',
                         {'failures': selection.failures})

    h = cochar_to_toral(cb, selection.cochar, p)
    lemma = check_root_height_lemma(cb, p, h)
    if not lemma.hypothesis_ok:
        raise InvariantViolation(
            f'Selected cocharacter {selection.cochar} has a root with '
            f'vanishing pairing mod {p}.')
    lemma.raise_for_violation()

    positives = rs.root_array[:rs.n_positive]
    pairing_set = sorted(
        set((positives @ selection.cochar.pairings).tolist()))
    document = {
        'schema_version': SCHEMA_VERSION,
        'status': 'certified',
        'tool': {'name': 'chevcert', 'version': __version__},
        'cartan_type': name,
        'root_numbering': 'bourbaki',
        'sign_convention': SIGN_CONVENTION,
        'central_torus_note': CENTRAL_TORUS_NOTE,
        'p': p,
        'e': e,
        'hypotheses': {
            'n_max': n_max,
            'prime_bound': bound,
            'e_p': irr.e_p,
            'determinant': det,
        },
        'n_sequence': seq.to_dict(),
        'irregular': irr.to_dict(),
        'bad_set': list(bad_set(p, irr).members),
        'cocharacter': list(selection.cochar.pairings),
        'base_index': selection.base_index,
        'pairing_set': pairing_set,
        'conditions': selection.report.to_dict(),
        'root_height': lemma.to_dict(),
        'vandiver_assumed': irr.vandiver_assumed,
    }
    logger.info('Certified %s at p=%d with lambda=%s.', name, p,
                selection.cochar)
    return WitnessCertificate(_normalize(document))


@dataclass
class ValidationResult():
    """Outcome of re-validating a certificate document."""

    valid: bool
    mismatches: List[str] = field(default_factory=list)


def validate_certificate(
    document: Dict,
    cache: Optional[IrregularCache] = None
) -> ValidationResult:
    """
    Re-run every check from the inputs recorded in ``document`` and compare
    each recorded field with its recomputed value.
    """
    if not isinstance(document, dict):
        return ValidationResult(
            False, [f'certificate must be a JSON object, got '
                    f'{type(document).__name__}'])
    mismatches = []
    name = document.get('cartan_type')
    p = document.get('p')
    e = document.get('e')
    if not isinstance(name, str):
        mismatches.append(f'cartan_type must be a string, got {name!r}')
    for key, value in (('p', p), ('e', e)):
        if isinstance(value, bool) or not isinstance(value, int):
            mismatches.append(f'{key} must be an integer, got {value!r}')
    if mismatches:
        return ValidationResult(False, mismatches)
    if document.get('schema_version') != SCHEMA_VERSION:
        mismatches.append(
            f"schema_version {document.get('schema_version')} != "
            f'{SCHEMA_VERSION}')
    try:
        result = certify_one_prime(name, p, e, cache)
    except InputError as err:
        return ValidationResult(False, [f'invalid input: {err}'])
    recomputed = _normalize(result.to_dict())
    recorded = _normalize(document)
    for key in sorted(set(recomputed) | set(recorded)):
        if key == 'tool':
            continue
        if recomputed.get(key) != recorded.get(key):
            mismatches.append(f'field {key!r} does not match')
    if recorded.get('status') == 'certified':
        report_ok = recorded.get('conditions', {}).get('passed') is True
        lemma_ok = recorded.get('root_height', {}).get('passed') is True
        if not (report_ok and lemma_ok):
            mismatches.append('recorded verdicts are not all passing')
    return ValidationResult(len(mismatches) == 0, mismatches)


def certify_range(
    rs: Union[RootSystem, str],
    p_min: int,
    p_max: int,
    cache: Optional[IrregularCache] = None,
    show_progress_bar: Optional[bool] = False
) -> Dict[int, Union[WitnessCertificate, Rejection]]:
    """
    Certify every prime ``p`` in ``[p_min, p_max]`` with ``e = e_p``.
    """
    if isinstance(rs, str):
        rs = build_root_system(rs)
    primes = primes_in_range(max(p_min, 5), p_max)
    results = {}
    progress_bar = get_progress_bar(
        description=f'Certifying {rs.cartan_type}', total=len(primes),
        disable=not show_progress_bar)
    try:
        for p in primes:
            e_p = index_of_irregularity(p, cache).e_p
            results[p] = certify_one_prime(rs, p, e_p, cache)
            progress_bar.update(1)
    finally:
        progress_bar.close()
    return results
