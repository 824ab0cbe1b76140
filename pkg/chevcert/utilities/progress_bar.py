"""Defines the progress bar used by the long-running scans."""

import sys

from tqdm import tqdm


def get_progress_bar(description, total, disable, unit='p'):
    """Get a progress bar for a scan or a trial suite.

    Parameters
    ----------
    description : str
        Description to be appended to start of the progress bar.
    total : int
        Total number of items (primes, trials, ...) to process.
    disable : bool
        Whether to disable (not show) the progress bar.
    unit : str, optional
        Label of the items being counted.

    Returns
    -------
    A tqdm progress bar.
    """
    l_bar = "{desc}: {percentage:3.0f}%|"
    r_bar = "| {n_fmt}/{total_fmt} {unit} [{elapsed}]"
    progress_bar = tqdm(
        desc=description,
        total=total,
        unit=unit,
        bar_format=l_bar + "{bar}" + r_bar,
        file=sys.stderr,
        disable=disable
    )
    return progress_bar
