"""Shared fixtures for specsup tests."""

import numpy as np
import pytest

from specsup.construction.families import complete, cycle, turan_bipartite
from specsup.core.graph_ops import from_edges
from specsup.factories.component_factory import create_registry
from specsup.models import Graph
from specsup.theorems.registry import PredicateRegistry


@pytest.fixture
def make_graph():
    """Factory fixture to build a graph from an edge list."""

    def _create(n: int, edges: list[tuple[int, int]]) -> Graph:
        return from_edges(n, edges)

    return _create


@pytest.fixture
def k3() -> Graph:
    """Triangle K_3."""
    return complete(3)


@pytest.fixture
def k5() -> Graph:
    """Complete graph K_5."""
    return complete(5)


@pytest.fixture
def c5() -> Graph:
    """Five-cycle C_5."""
    return cycle(5)


@pytest.fixture
def turan8() -> Graph:
    """Balanced complete bipartite graph T_{8,2} = K_{4,4}."""
    return turan_bipartite(8)


@pytest.fixture
def registry() -> PredicateRegistry:
    """Registry with every built-in predicate and family check."""
    return create_registry()


@pytest.fixture
def graph6_file(tmp_path):
    """Factory fixture writing graph6 lines to a file and returning its path."""

    def _create(lines: list[str], name: str = "graphs.g6") -> str:
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        return str(path)

    return _create


@pytest.fixture
def random_graphs():
    """Factory fixture producing seeded random graphs with varying order and density."""

    def _create(count: int, min_n: int, max_n: int, seed: int = 0) -> list[Graph]:
        rng = np.random.default_rng(seed)
        graphs = []
        for _ in range(count):
            n = int(rng.integers(min_n, max_n + 1))
            p = float(rng.uniform(0.2, 0.8))
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
            graphs.append(from_edges(n, edges))
        return graphs

    return _create
