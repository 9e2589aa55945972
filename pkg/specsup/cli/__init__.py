"""Command-line surface: subcommand handlers and report serialization."""

from .commands import CommandRunner, METRICS
from .reporting import build_report, render_json, round_floats, write_csv

__all__ = [
    "CommandRunner",
    "METRICS",
    "build_report",
    "render_json",
    "round_floats",
    "write_csv",
]
