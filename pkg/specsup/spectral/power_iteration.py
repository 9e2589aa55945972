"""Spectral radius and Perron vector by power iteration on the shifted adjacency matrix.

A + n*I has the same eigenvectors as A and, since every eigenvalue of A lies in
[-n, n], its largest eigenvalue dominates. The iterate starts from the all-ones
vector, so it stays non-negative. When plain steps make slow progress the shifted
matrix is squared (with rescaling), which keeps iterating powers of the same matrix
but doubles the exponent per squaring.
"""

import logging

import numpy as np

from ..config import DEFAULT_TOLERANCE
from ..core.graph_ops import adjacency_array
from ..exceptions import ConvergenceError
from ..models import Graph, SpectralResult

logger = logging.getLogger(__name__)

_PLAIN_STEPS = 200
_CHECK_EVERY = 5
_MAX_SQUARINGS = 60
_STALL_WINDOW = 4


def _measure(a: np.ndarray, x: np.ndarray) -> tuple[float, float]:
    ax = a @ x
    radius = float(x @ ax)
    residual = float(np.max(np.abs(ax - radius * x)))
    return radius, residual


def _nudge(x: np.ndarray, round_: int) -> np.ndarray:
    """Deterministic positive perturbation keyed on the vertex index."""
    n = x.shape[0]
    bump = 1e-3 * (1.0 + (np.arange(n) * (round_ + 1) % n) / n)
    y = x + bump
    return y / np.linalg.norm(y)


def spectral_radius(
    g: Graph, tol: float = DEFAULT_TOLERANCE, max_iterations: int = 100_000
) -> SpectralResult:
    """Estimate lambda(G) and a Perron vector.

    Args:
        g: Graph
        tol: Stop once max|A x - lambda x| <= tol
        max_iterations: Cap on matrix-vector steps (squarings count as one step each)

    Returns:
        SpectralResult with the Rayleigh quotient as radius

    Raises:
        ValueError: If tol is not positive
        ConvergenceError: If the cap is reached; carries the best estimate
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    n = g.n
    if n == 0:
        return SpectralResult(radius=0.0, perron=(), residual=0.0, iterations=0)
    if g.m == 0:
        uniform = 1.0 / np.sqrt(n)
        return SpectralResult(radius=0.0, perron=(uniform,) * n, residual=0.0, iterations=0)

    a = adjacency_array(g)
    step = a + n * np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    best_radius, best_residual = _measure(a, x)
    history: list[float] = []
    squarings = 0
    nudges = 0
    iterations = 0

    while iterations < max_iterations:
        y = step @ x
        x = y / np.linalg.norm(y)
        iterations += 1
        if iterations % _CHECK_EVERY:
            continue
        radius, residual = _measure(a, x)
        if residual < best_residual:
            best_radius, best_residual = radius, residual
        if residual <= tol:
            logger.debug(f"Power iteration n={n}: lambda={radius:.12g} after {iterations} steps")
            return SpectralResult(
                radius=radius,
                perron=tuple(float(v) for v in np.abs(x)),
                residual=residual,
                iterations=iterations,
            )
        history.append(radius)
        stalled = len(history) > _STALL_WINDOW and (
            abs(history[-1] - history[-1 - _STALL_WINDOW]) <= 1e-15 * max(1.0, abs(radius))
        )
        if iterations >= _PLAIN_STEPS and squarings < _MAX_SQUARINGS:
            step = step @ step
            step /= np.max(np.abs(step))
            squarings += 1
            iterations += 1
        elif stalled:
            nudges += 1
            x = _nudge(x, nudges)
            history.clear()
            logger.debug(f"Power iteration stalled at lambda={radius:.12g}; perturbing start")

    raise ConvergenceError(
        f"power iteration did not reach residual {tol} in {max_iterations} steps "
        f"(best residual {best_residual:.3g})",
        best_estimate=best_radius,
    )


def lambda_of(g: Graph, tol: float = DEFAULT_TOLERANCE) -> float:
    """Spectral radius, falling back to the best estimate if iteration does not converge."""
    try:
        return spectral_radius(g, tol).radius
    except ConvergenceError as e:
        logger.warning(f"{e}; using best estimate")
        return float(e.best_estimate or 0.0)
