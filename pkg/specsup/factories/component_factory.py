"""Factory for creating application components."""

from typing import TextIO

from ..cli.commands import CommandRunner
from ..theorems.family_checks import FAMILY_CHECKS
from ..theorems.predicates import ALL_PREDICATES
from ..theorems.registry import PredicateRegistry


def create_registry() -> PredicateRegistry:
    """Create the predicate registry with every built-in predicate and family check.

    Returns:
        Configured PredicateRegistry instance
    """
    return PredicateRegistry(
        predicates=[cls() for cls in ALL_PREDICATES],
        family_checks=dict(FAMILY_CHECKS),
    )


def create_runner(
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> CommandRunner:
    """Create the command runner with all dependencies.

    Args:
        stdin: Input stream for "-" arguments
        stdout: Report stream
        stderr: Failure-witness stream

    Returns:
        Configured CommandRunner instance
    """
    return CommandRunner(registry=create_registry(), stdin=stdin, stdout=stdout, stderr=stderr)
