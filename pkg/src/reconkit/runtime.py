"""Runtime knobs shared by sweeps and the CLI."""

import os

from .errors import InputError

THREADS_ENV = "RECONKIT_THREADS"


def thread_count() -> int:
    """Worker cap from RECONKIT_THREADS (default 1)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if value < 1:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value
