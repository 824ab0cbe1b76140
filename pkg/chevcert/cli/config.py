"""
This module contains the validated configuration of a CLI command.
"""

import argparse
import os
from dataclasses import dataclass, fields
from typing import Optional, Tuple

from chevcert.chevalley_groups import DEFAULT_CAP
from chevcert.errors import InputError
from chevcert.filtration import DEFAULT_DEPTH
from chevcert.root_systems import parse_cartan_types
from chevcert.utilities.primes import is_prime


@dataclass(frozen=True)
class CommandConfig():
    """Options of one CLI invocation, validated before dispatch.

    Attributes
    ----------
    command : str
        The subcommand.
    types : tuple of str
        Normalized Cartan type strings.
    p, e, k, r : int or None
        Prime, irregularity bound, level and density index.
    p_min, p_max : int or None
        Bounds of a prime range.
    cache_dir : str or None
        Directory of the irregular-prime cache (None uses the default).

    """

    command: str
    types: Tuple[str, ...] = ()
    p: Optional[int] = None
    e: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    p_min: Optional[int] = None
    p_max: Optional[int] = None
    trials: int = 20
    seed: Optional[int] = None
    jobs: Optional[int] = None
    depth: int = DEFAULT_DEPTH
    cap: int = DEFAULT_CAP
    generators: int = 3
    full_group: bool = False
    allow_small_prime: bool = False
    check: bool = False
    emit_trace: bool = True
    output: Optional[str] = None
    input_file: Optional[str] = None
    cache_dir: Optional[str] = None
    show_progress: bool = True

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> 'CommandConfig':
        """Build and validate the configuration from parsed arguments."""
        names = [f.name for f in fields(cls)]
        values = {name: getattr(args, name) for name in names
                  if getattr(args, name, None) is not None}
        if 'types' in values:
            values['types'] = tuple(
                str(t) for t in parse_cartan_types(values['types']))
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        """
        Raises
        ------
        InputError
            If any option is out of range.
        """
        if self.command != 'effective-bound' and len(self.types) > 1:
            raise InputError(
                f'{self.command} takes a single Cartan type, got '
                f"{','.join(self.types)}.")
        if self.p is not None and not is_prime(self.p):
            raise InputError(f'P must be prime, got {self.p}.')
        if self.command not in ('simulate-filtration', 'check-lemma'):
            if self.p is not None and self.p < 5:
                raise InputError(f'P must be at least 5, got {self.p}.')
        if self.e is not None and self.e < 0:
            raise InputError(f'E must be non-negative, got {self.e}.')
        if self.k is not None and self.k < 1:
            raise InputError(f'K must be at least 1, got {self.k}.')
        if self.r is not None and self.r < 0:
            raise InputError(f'R must be non-negative, got {self.r}.')
        if self.p_min is not None and self.p_max is not None:
            if self.p_min > self.p_max:
                raise InputError(
                    f'Empty prime range [{self.p_min}, {self.p_max}].')
        if self.trials < 1:
            raise InputError(f'--trials must be positive, got {self.trials}.')
        if self.jobs is not None and self.jobs < 1:
            raise InputError(f'--jobs must be positive, got {self.jobs}.')
        if self.depth < DEFAULT_DEPTH:
            raise InputError(
                f'--depth must be at least {DEFAULT_DEPTH}, got {self.depth}.')
        if self.cap < 1:
            raise InputError(f'--cap must be positive, got {self.cap}.')
        if self.generators < 1:
            raise InputError(
                f'--generators must be positive, got {self.generators}.')
        if self.input_file is not None and not os.path.isfile(
                self.input_file):
            raise InputError(f'No such file: {self.input_file}')
