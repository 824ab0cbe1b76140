"""
This module contains the on-disk cache of irregular-prime tables.

The cache is a UTF-8 JSON-lines file with one record
``{"p": ..., "indices": [...]}`` per prime, sorted by ``p``. The file name
carries the algorithm version, so tables computed by a different algorithm
are never mixed.
"""

import json
import logging
import os
import tempfile
import threading
import warnings
from typing import Dict, Iterable, List, Optional, Tuple

logger = logging.getLogger(__name__)

ALGORITHM_VERSION = 1

# Directory of the cache, which can be set with CHEVCERT_CACHE_DIR.
DEFAULT_CACHE_DIR = os.path.join(os.path.expanduser('~'), '.cache',
                                 'chevcert')
if 'CHEVCERT_CACHE_DIR' in os.environ:
    DEFAULT_CACHE_DIR = os.environ['CHEVCERT_CACHE_DIR']


def _parse_record(line: str) -> Tuple[int, List[int]]:
    record = json.loads(line)
    p = record['p']
    indices = record['indices']
    if not isinstance(p, int) or p < 5 or not isinstance(indices, list):
        raise ValueError('malformed record')
    for k in indices:
        if not isinstance(k, int) or k % 2 or not 2 <= k <= p - 3:
            raise ValueError(f'invalid irregular index {k!r} for p={p}')
    if indices != sorted(set(indices)):
        raise ValueError('indices not sorted')
    return p, indices


class IrregularCache():
    """JSON-lines cache of irregular indices.

    Parameters
    ----------
    directory : str, optional
        Cache directory. Defaults to ``CHEVCERT_CACHE_DIR`` or
        ``~/.cache/chevcert``.

    """

    def __init__(self, directory: Optional[str] = None) -> None:
        self.directory = directory or DEFAULT_CACHE_DIR
        self.path = os.path.join(
            self.directory, f'irregular-v{ALGORITHM_VERSION}.jsonl')
        self.quarantine_path = self.path + '.quarantine'
        self._lock = threading.Lock()
        self._records: Dict[int, List[int]] = {}
        self.n_quarantined = 0
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            return
        corrupt = []
        with open(self.path, encoding='utf-8') as f:
            for n, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    p, indices = _parse_record(line)
                except (ValueError, KeyError, TypeError) as err:
                    corrupt.append(line)
                    msg = (f'Corrupt record on line {n} of {self.path} '
                           f'({err}); it will be quarantined and recomputed.')
                    warnings.warn(msg)
                    logger.warning(msg)
                    continue
                self._records[p] = indices
        if corrupt:
            self.n_quarantined = len(corrupt)
            with self._lock:
                os.makedirs(self.directory, exist_ok=True)
                with open(self.quarantine_path, 'a', encoding='utf-8') as f:
                    for line in corrupt:
                        f.write(line if line.endswith('\n') else line + '\n')
                self._write()

    def __contains__(self, p: int) -> bool:
        return p in self._records

    def __len__(self):
        return len(self._records)

    def get(self, p: int) -> Optional[List[int]]:
        indices = self._records.get(p)
        return None if indices is None else list(indices)

    def primes(self) -> List[int]:
        return sorted(self._records)

    def update(self, records: Iterable[Tuple[int, Iterable[int]]]) -> None:
        """Add records and rewrite the file atomically."""
        with self._lock:
            for p, indices in records:
                self._records[int(p)] = sorted(int(k) for k in indices)
            self._write()

    def _write(self) -> None:
        os.makedirs(self.directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(
            dir=self.directory, prefix='.irregular-', suffix='.tmp')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                for p in sorted(self._records):
                    f.write(json.dumps(
                        {'p': p, 'indices': self._records[p]}) + '\n')
            os.replace(tmp_path, self.path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
        logger.debug('Wrote %d records to %s.', len(self._records),
                     self.path)
