"""Factory components."""

from .component_factory import create_registry, create_runner

__all__ = [
    "create_registry",
    "create_runner",
]
