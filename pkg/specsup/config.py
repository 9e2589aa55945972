"""Runtime configuration and numerical constants."""

import logging
import os

logger = logging.getLogger(__name__)

WORKERS_ENV = "SPECSUP_WORKERS"

DEFAULT_TOLERANCE = 1e-10
SEARCH_TOLERANCE = 1e-8
TIGHT_TOLERANCE = 1e-12
COMPARISON_MARGIN = 1e-8
MATCH_TOLERANCE = 1e-6

EXACT_MAXCUT_LIMIT = 28
ENUMERATION_LIMIT = 10
TAU3_TRIANGLE_LIMIT = 100_000
EXACT_SPECTRUM_LIMIT = 16


def default_workers() -> int:
    """Worker count from SPECSUP_WORKERS, falling back to 1.

    Returns:
        Positive worker count
    """
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or not raw.strip():
        return 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {WORKERS_ENV}={raw!r}")
        return 1
    if value < 1:
        logger.warning(f"Ignoring non-positive {WORKERS_ENV}={value}")
        return 1
    return value
