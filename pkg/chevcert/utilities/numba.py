"""
Numba decorators and thread control for the compiled kernels.

Caching of compiled kernels is disabled with ``CHEVCERT_DISABLE_CACHING=1``
and the default thread count of the parallel kernels is read from
``CHEVCERT_NUM_THREADS``.
"""

import os
from contextlib import contextmanager
from typing import Iterator, Optional

from numba import (
    njit, __version__ as numba_version, set_num_threads, get_num_threads,
    prange, config
)

if numba_version == '0.57.0':
    raise RuntimeError(
        'ChevCert is incompatible with numba 0.57.0.\n'
        'Please install either a later or an earlier version.'
    )


caching = os.environ.get('CHEVCERT_DISABLE_CACHING', '0').strip() != '1'

num_threads = int(os.environ.get('CHEVCERT_NUM_THREADS', 1))

# Largest thread count numba was launched with.
max_threads = config.NUMBA_NUM_THREADS


def njit_serial(*args, **kwargs):
    return njit(*args, cache=caching, **kwargs)


def njit_parallel(*args, **kwargs):
    return njit(*args, cache=caching, parallel=True, **kwargs)


@contextmanager
def thread_limit(n_threads: Optional[int] = None) -> Iterator[int]:
    """
    Run the enclosed parallel kernels with ``n_threads`` threads (default
    ``num_threads``, clamped to ``max_threads``) and restore the previous
    setting on exit.
    """
    threads = max(1, min(n_threads or num_threads, max_threads))
    threads_outside = get_num_threads()
    set_num_threads(threads)
    try:
        yield threads
    finally:
        set_num_threads(threads_outside)


__all__ = [
    'njit_serial', 'njit_parallel', 'num_threads', 'max_threads',
    'thread_limit', 'prange'
]
