"""CLI interface for specsup."""

import sys
import argparse
import logging

from pydantic import ValidationError

from specsup.cli.commands import METRICS
from specsup.config import default_workers
from specsup.factories.component_factory import create_runner
from specsup.exceptions import (
    SpecsupError,
    GraphSizeError,
    Graph6ParseError,
    PartitionError,
    UnknownFamilyError,
    UnknownPolynomialError,
    UnknownPredicateError,
)

USAGE_ERRORS = (
    UnknownPredicateError,
    UnknownFamilyError,
    UnknownPolynomialError,
    GraphSizeError,
    Graph6ParseError,
    PartitionError,
    ValidationError,
    ValueError,
    FileNotFoundError,
)


def setup_logging(verbose: bool = False) -> None:
    """Configure logging for the application.

    Logs go to stderr so that stdout carries only reports and graph6 lines.

    Args:
        verbose: Enable debug logging
    """
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _add_part_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--s", type=int, help="Size of part S (default: balanced)")
    parser.add_argument("--t", type=int, help="Size of part T (default: balanced)")
    parser.add_argument("--q", type=int, help="Number of inside edges for Y_{n,2,q}")
    parser.add_argument("--b", type=int, help="Parameter b for K_{4b+3,b}^{+2}")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--in",
        dest="input",
        default="-",
        help="graph6 file, one graph per line ('-' for stdin, the default)",
    )


def _add_workers(parser: argparse.ArgumentParser, default: int | None) -> None:
    parser.add_argument(
        "--workers",
        type=int,
        default=default,
        help="Worker processes (default: SPECSUP_WORKERS or 1)",
    )


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments.

    Args:
        argv: Argument list (default: sys.argv[1:])

    Returns:
        Parsed arguments
    """
    parser = argparse.ArgumentParser(
        prog="specsup",
        description="Verify and explore spectral supersaturation of triangles and bowties",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable verbose logging",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    workers = default_workers()

    p = sub.add_parser("construct", help="Emit a constructor family as graph6")
    p.add_argument("family", help="Family name")
    p.add_argument("--n", type=int, required=True, help="Vertex count")
    _add_part_options(p)

    p = sub.add_parser("count", help="Count a substructure per graph (CSV)")
    p.add_argument("metric", choices=METRICS, help="Counter")
    _add_input(p)

    p = sub.add_parser("spectral", help="Spectral radius and optional quotient polynomial (JSON)")
    p.add_argument("--tol", type=float, default=1e-10, help="Residual tolerance (default: 1e-10)")
    p.add_argument(
        "--quotient",
        help="'auto' for the coarsest equitable partition, or a comma list of class indices",
    )
    _add_input(p)

    p = sub.add_parser("poly", help="Polynomial registry")
    poly_sub = p.add_subparsers(dest="poly_command", required=True)
    v = poly_sub.add_parser("verify", help="Check a registered polynomial against its graphs")
    v.add_argument("--name", required=True, help="Registry name")
    v.add_argument("--n", type=int, help="Vertex count")
    v.add_argument("--s", type=int, help="Part size s")
    v.add_argument("--t", type=int, help="Part size t")

    p = sub.add_parser("check", help="Exhaustively check predicates (JSON)")
    p.add_argument("predicate", help="Predicate id, comma list, or 'all'")
    p.add_argument("--n", type=int, help="Generate all graphs on n vertices")
    p.add_argument("--mode", choices=("strict", "exploratory"), default="strict")
    p.add_argument("--in", dest="input", help="graph6 file instead of --n ('-' for stdin)")
    _add_workers(p, workers)

    p = sub.add_parser("check-family", help="Run a family check or a predicate on a family (JSON)")
    p.add_argument("check", help="Family-check id or predicate id")
    p.add_argument("--family", help="Constructor family when check is a predicate id")
    p.add_argument("--n-list", type=_int_list, required=True, help="Comma-separated vertex counts")
    p.add_argument("--mode", choices=("strict", "exploratory"), default="strict")
    _add_part_options(p)

    p = sub.add_parser("enumerate", help="All graphs on n vertices up to isomorphism (graph6)")
    p.add_argument("--n", type=int, required=True, help="Vertex count (at most 10)")
    _add_workers(p, workers)

    p = sub.add_parser("search", help="Simulated annealing under hard constraints (JSON)")
    p.add_argument("--config", required=True, help="SearchConfig JSON file ('-' for stdin)")
    _add_workers(p, None)

    p = sub.add_parser("probe", help="Structural probe around a maximum cut (JSON)")
    p.add_argument("--seed", type=int, default=0, help="Seed for the heuristic cut")
    _add_input(p)

    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    """Main entry point.

    Returns:
        Exit code: 0 all hold, 1 a failure was witnessed, 2 usage error,
        3 internal error, 130 interrupted
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    args.argv = ["specsup", *argv]
    setup_logging(args.verbose)

    try:
        runner = create_runner()
        return runner.run(args)

    except KeyboardInterrupt:
        print("\n\nCancelled by user", file=sys.stderr)
        return 130

    except USAGE_ERRORS as e:
        logging.error(f"Usage error: {e}")
        return 2

    except SpecsupError as e:
        logging.error(f"specsup error: {e}", exc_info=args.verbose)
        return 3

    except Exception as e:
        logging.error(f"Unexpected error: {e}", exc_info=args.verbose)
        return 3


if __name__ == "__main__":
    sys.exit(main())
