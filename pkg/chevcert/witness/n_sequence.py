""" This module contains the N_k sequence controlling the prime bound. """

from dataclasses import dataclass
from typing import Dict, Tuple

from chevcert.errors import InputError
from chevcert.root_systems import RootSystem


def star(n: int) -> int:
    """``n`` if it is odd, ``n + 1`` otherwise."""
    return n if n % 2 else n + 1


@dataclass(frozen=True)
class NSequence():
    """Values ``N_0 ... N_upto`` of the sequence
    ``N_0 = 1``, ``N_{k+1} = sum_i c_i (N_k^* + 2i)``, where ``c_i`` are the
    coefficients of the highest root.
    """

    cartan_type: str
    coeffs: Tuple[int, ...]
    values: Tuple[int, ...]

    @property
    def starred(self) -> Tuple[int, ...]:
        return tuple(star(n) for n in self.values)

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def prime_bound(self, e: int) -> int:
        """The bound ``1 + 2 N_{e+1}`` that ``p`` must exceed."""
        return 1 + 2 * self.values[e + 1]

    def to_dict(self) -> Dict:
        return {'values': list(self.values), 'starred': list(self.starred)}


def next_value(coeffs: Tuple[int, ...], n: int) -> int:
    s = star(n)
    return sum(c * (s + 2 * (i + 1)) for i, c in enumerate(coeffs))


def n_sequence(rs: RootSystem, upto: int) -> NSequence:
    """Evaluate the sequence up to ``N_upto``."""
    if upto < 1:
        raise InputError(f'upto must be at least 1, got {upto}.')
    coeffs = rs.highest_root_coeffs()
    values = [1]
    for _ in range(upto):
        values.append(next_value(coeffs, values[-1]))
    return NSequence(str(rs.cartan_type), coeffs, tuple(values))
