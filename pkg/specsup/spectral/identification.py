"""Match a polynomial to the graph class whose spectral radius it describes."""

import logging
from collections.abc import Callable, Sequence

from ..config import MATCH_TOLERANCE
from ..exceptions import IdentificationError
from ..models import Graph
from .power_iteration import lambda_of

logger = logging.getLogger(__name__)


def match_polynomial_to_class(
    family: Callable[[int], Sequence[Graph]],
    root: Callable[[int], float],
    n_samples: Sequence[int],
    tolerance: float = MATCH_TOLERANCE,
) -> int:
    """Index of the unique class whose lambda equals the polynomial's largest root at every sample.

    Args:
        family: Builds the classes at a given n, in an order that does not depend on n
        root: Largest real root of the polynomial at a given n
        n_samples: Vertex counts to test
        tolerance: Allowed |lambda - root|

    Returns:
        Class index

    Raises:
        IdentificationError: If no class or more than one class matches
    """
    candidates: set[int] | None = None
    for n in n_samples:
        classes = family(n)
        target = root(n)
        hits = {i for i, g in enumerate(classes) if abs(lambda_of(g) - target) <= tolerance}
        candidates = hits if candidates is None else candidates & hits
        logger.debug(f"n={n}: root {target:.12g} matches classes {sorted(hits)}")
        if not candidates:
            break
    matches = sorted(candidates or ())
    if len(matches) != 1:
        raise IdentificationError(
            f"expected exactly one matching class, found {len(matches)}", matches=matches
        )
    return matches[0]
