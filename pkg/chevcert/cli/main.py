"""
Command-line interface of ChevCert.

Exit codes: 0 on success, 1 when the hypotheses or verdicts are negative,
2 on usage errors or an enumeration passing its --cap, and 3 when an
outcome contradicts a proved statement.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional

import numpy as np

from chevcert import __version__
from chevcert.chevalley_groups import (
    enumerate_subgroup, full_adjoint_group, random_generator_set)
from chevcert.errors import (
    ChevCertError, EnumerationCapExceeded, InputError, InvariantViolation)
from chevcert.filtration import check_root_height_lemma, random_valid_toral
from chevcert.irregular import (
    IrregularCache, index_of_irregularity, irregularity_density_estimate,
    scan_primes)
from chevcert.lie_algebras import build_chevalley_basis
from chevcert.root_systems import build_root_system
from chevcert.witness import (
    Rejection, certify_one_prime, certify_range, effective_bound,
    select_cocharacter, to_json, validate_certificate)
from .config import CommandConfig


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _print_json(document: Dict) -> None:
    sys.stdout.write(to_json(document))


def _cache(config: CommandConfig) -> IrregularCache:
    return IrregularCache(config.cache_dir)


def run_root_data(config: CommandConfig) -> int:
    _print_json(build_root_system(config.types[0]).to_dict())
    return EXIT_OK


def run_struct_consts(config: CommandConfig) -> int:
    cb = build_chevalley_basis(build_root_system(config.types[0]))
    sys.stdout.write(cb.to_csv())
    if config.check:
        if np.any(cb.jacobi_defect()):
            raise InvariantViolation(
                f'Jacobi identity fails for {config.types[0]}.')
        print(f'Jacobi identity holds for all basis triples of '
              f'{config.types[0]}.', file=sys.stderr)
    return EXIT_OK


def run_check_lemma(config: CommandConfig) -> int:
    cb = build_chevalley_basis(build_root_system(config.types[0]))
    rng = np.random.default_rng(config.seed)
    trials = []
    for _ in range(config.trials):
        h = random_valid_toral(cb, config.p, rng)
        report = check_root_height_lemma(
            cb, config.p, h, config.depth, config.allow_small_prime)
        report.raise_for_violation()
        trial = {
            'toral': h.toral.tolist(),
            'passed': report.passed,
            'assertions': report.assertions,
            'dimensions': report.trace.dimensions,
        }
        if config.emit_trace:
            trial['trace'] = report.trace.to_dict()
        trials.append(trial)
    passed = all(t['passed'] for t in trials)
    _print_json({
        'cartan_type': config.types[0],
        'p': config.p,
        'trials': trials,
        'passed': passed,
    })
    return EXIT_OK if passed else EXIT_NEGATIVE


def run_scan_irregular(config: CommandConfig) -> int:
    result = scan_primes(config.p_min, config.p_max, _cache(config),
                         config.jobs, config.show_progress)
    lines = ['p,e_p,indices']
    for p, data in result.data.items():
        indices = ' '.join(str(k) for k in data.irregular_indices)
        lines.append(f'{p},{data.e_p},{indices}')
    sys.stdout.write('\n'.join(lines) + '\n')
    logger.info('Computed %d primes, %d from cache.', len(result.computed),
                len(result.data) - len(result.computed))
    return EXIT_OK


def run_select_cochar(config: CommandConfig) -> int:
    rs = build_root_system(config.types[0])
    irr = index_of_irregularity(config.p, _cache(config))
    result = select_cocharacter(rs, config.p, config.e, irr)
    _print_json(result.to_dict())
    return EXIT_OK if result.success else EXIT_NEGATIVE


def run_certify(config: CommandConfig) -> int:
    result = certify_one_prime(config.types[0], config.p, config.e,
                               _cache(config))
    if isinstance(result, Rejection):
        print(f'Rejected: {result.message}', file=sys.stderr)
        _print_json(result.to_dict())
        return EXIT_NEGATIVE
    document = result.to_dict()
    if not config.emit_trace:
        document = dict(document)
        document['root_height'] = dict(document['root_height'], trace=None)
    if config.output is None:
        _print_json(document)
    else:
        with open(config.output, 'w', encoding='utf-8') as f:
            f.write(to_json(document))
        logger.info('Certificate written to %s.', config.output)
    return EXIT_OK


def run_certify_range(config: CommandConfig) -> int:
    results = certify_range(config.types[0], config.p_min, config.p_max,
                            _cache(config), config.show_progress)
    lines = ['p,status,cocharacter,reason']
    for p, result in results.items():
        if isinstance(result, Rejection):
            lines.append(f'{p},rejected,,{result.code}')
        else:
            cochar = ' '.join(str(x) for x in result.cocharacter)
            lines.append(f'{p},certified,{cochar},')
    sys.stdout.write('\n'.join(lines) + '\n')
    return EXIT_OK


def run_simulate_filtration(config: CommandConfig) -> int:
    cb = build_chevalley_basis(build_root_system(config.types[0]))
    p, k = config.p, config.k
    if config.full_group:
        subgroup = full_adjoint_group(cb, p, k, config.cap)
    else:
        rng = np.random.default_rng(config.seed)
        gens = random_generator_set(cb, p, k, rng, config.generators)
        subgroup = enumerate_subgroup(cb, gens, config.cap)
    report = subgroup.to_dict()
    report['cartan_type'] = config.types[0]
    report['phi_dimensions'] = {m: subgroup.phi(m).dim for m in range(1, k)}
    containment = {}
    for low in range(1, k):
        for high in range(low, k - low):
            containment[f'{low},{high}'] = \
                subgroup.verify_bracket_containment(low, high)
    report['bracket_containment'] = containment
    _print_json(report)
    if not all(containment.values()):
        raise InvariantViolation(
            f'[Phi_l, Phi_m] is not contained in Phi_(l+m) for '
            f'{config.types[0]} at p={p}, k={k}.')
    return EXIT_OK


def run_effective_bound(config: CommandConfig) -> int:
    _print_json(effective_bound(list(config.types)).to_dict())
    return EXIT_OK


def run_density(config: CommandConfig) -> int:
    point, cumulative = irregularity_density_estimate(config.r)
    print(f'{point:.4f} / {cumulative:.4f}')
    return EXIT_OK


def run_validate(config: CommandConfig) -> int:
    try:
        with open(config.input_file, encoding='utf-8') as f:
            document = json.load(f)
    except json.JSONDecodeError as err:
        raise InputError(f'{config.input_file} is not valid JSON: {err}')
    result = validate_certificate(document, _cache(config))
    for mismatch in result.mismatches:
        print(mismatch, file=sys.stderr)
    print('valid' if result.valid else 'invalid')
    return EXIT_OK if result.valid else EXIT_NEGATIVE


COMMANDS: Dict[str, Callable[[CommandConfig], int]] = {
    'root-data': run_root_data,
    'struct-consts': run_struct_consts,
    'check-lemma': run_check_lemma,
    'scan-irregular': run_scan_irregular,
    'select-cochar': run_select_cochar,
    'certify': run_certify,
    'certify-range': run_certify_range,
    'simulate-filtration': run_simulate_filtration,
    'effective-bound': run_effective_bound,
    'density': run_density,
    'validate': run_validate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='chevcert',
        description='Certify the Lie-theoretic and arithmetic hypotheses '
                    'for Galois representations with open image in a '
                    'split semisimple group.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress (repeat for debug output).')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='Only log errors.')
    parser.add_argument('--no-progress', dest='show_progress',
                        action='store_false',
                        help='Do not show progress bars.')
    parser.add_argument('--cache-dir', default=None,
                        help='Directory of the irregular-prime cache '
                             '(default: CHEVCERT_CACHE_DIR or '
                             '~/.cache/chevcert).')
    sub = parser.add_subparsers(dest='command', required=True)

    cmd = sub.add_parser('root-data', help='Root system as JSON.')
    cmd.add_argument('types', metavar='TYPE')

    cmd = sub.add_parser('struct-consts',
                         help='Structure constants as CSV.')
    cmd.add_argument('types', metavar='TYPE')
    cmd.add_argument('--check', action='store_true',
                     help='Also check the Jacobi identity.')

    cmd = sub.add_parser('check-lemma',
                         help='Root-height lemma on random toral elements.')
    cmd.add_argument('types', metavar='TYPE')
    cmd.add_argument('p', metavar='P', type=int)
    cmd.add_argument('--trials', type=int, default=20)
    cmd.add_argument('--seed', type=int, default=None)
    cmd.add_argument('--depth', type=int, default=None)
    cmd.add_argument('--allow-small-prime', action='store_true')
    cmd.add_argument('--no-trace', dest='emit_trace', action='store_false')

    cmd = sub.add_parser('scan-irregular',
                         help='Irregular indices of a prime range.')
    cmd.add_argument('p_min', metavar='PMIN', type=int)
    cmd.add_argument('p_max', metavar='PMAX', type=int)
    cmd.add_argument('--jobs', type=int, default=None,
                     help='Number of threads for the scan.')

    cmd = sub.add_parser('select-cochar', help='Select a cocharacter.')
    cmd.add_argument('types', metavar='TYPE')
    cmd.add_argument('p', metavar='P', type=int)
    cmd.add_argument('e', metavar='E', type=int)

    cmd = sub.add_parser('certify', help='Witness certificate as JSON.')
    cmd.add_argument('types', metavar='TYPE')
    cmd.add_argument('p', metavar='P', type=int)
    cmd.add_argument('e', metavar='E', type=int)
    cmd.add_argument('-o', '--output', default=None)
    cmd.add_argument('--no-trace', dest='emit_trace', action='store_false')

    cmd = sub.add_parser('certify-range',
                         help='Certify every prime of a range with e = e_p.')
    cmd.add_argument('types', metavar='TYPE')
    cmd.add_argument('p_min', metavar='PMIN', type=int)
    cmd.add_argument('p_max', metavar='PMAX', type=int)

    cmd = sub.add_parser('simulate-filtration',
                         help='Phi_m of a subgroup of G(Z/p^k).')
    cmd.add_argument('types', metavar='TYPE')
    cmd.add_argument('p', metavar='P', type=int)
    cmd.add_argument('k', metavar='K', type=int)
    cmd.add_argument('--seed', type=int, default=None)
    cmd.add_argument('--generators', type=int, default=None)
    cmd.add_argument('--full-group', action='store_true')
    cmd.add_argument('--cap', type=int, default=None)

    cmd = sub.add_parser('effective-bound', help='Effective bound report.')
    cmd.add_argument('types', metavar='TYPE[,TYPE...]')

    cmd = sub.add_parser('density', help='Irregularity density estimate.')
    cmd.add_argument('r', metavar='R', type=int)

    cmd = sub.add_parser('validate', help='Re-validate a certificate.')
    cmd.add_argument('input_file', metavar='FILE')
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK
    _configure_logging(args.verbose, args.quiet)
    try:
        config = CommandConfig.from_namespace(args)
        return COMMANDS[config.command](config)
    except InputError as err:
        print(f'chevcert {args.command}: error: {err}', file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapExceeded as err:
        print(f'chevcert {args.command}: error: {err}; raise --cap to '
              f'enumerate larger groups', file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as err:
        logger.error('Invariant violation: %s', err)
        print(f'chevcert {args.command}: invariant violation: {err}',
              file=sys.stderr)
        return EXIT_INVARIANT
    except ChevCertError as err:
        print(f'chevcert {args.command}: {err}', file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == '__main__':
    sys.exit(main())
