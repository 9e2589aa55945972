"""Subcommand handlers behind the specsup command line."""

import argparse
import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import TextIO

from ..construction.families import build_family
from ..enumeration.generator import generate_all
from ..enumeration.graph6 import graph6_encode, graph6_read_stream
from ..enumeration.verifier import exhaustive_verify
from ..models import Graph, SearchConfig, VerdictStatus
from ..search.annealer import anneal
from ..search.constraints import COUNTERS
from ..spectral.power_iteration import spectral_radius
from ..spectral.quotient import char_poly, coarsest_equitable_partition, equitable_quotient
from ..spectral.registry import verify_polynomial
from ..spectral.roots import largest_real_root
from ..theorems.probe import probe
from ..theorems.registry import PredicateRegistry
from .reporting import build_report, render_json, write_csv

logger = logging.getLogger(__name__)

METRICS = ("triangles", "bowties", "booksize", "tau3", "triangular-edges")

EXIT_OK = 0
EXIT_FAILURE = 1


class CommandRunner:
    """Runs one parsed subcommand against injected streams and registry."""

    def __init__(
        self,
        registry: PredicateRegistry,
        stdin: TextIO | None = None,
        stdout: TextIO | None = None,
        stderr: TextIO | None = None,
    ):
        """Initialize runner.

        Args:
            registry: Predicate registry used by check and check-family
            stdin: Source for "-" inputs (default: sys.stdin)
            stdout: Report stream (default: sys.stdout)
            stderr: Failure-witness stream (default: sys.stderr)
        """
        self.registry = registry
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def run(self, args: argparse.Namespace) -> int:
        """Dispatch on args.command.

        Returns:
            Exit code: 0 when everything holds, 1 when a failure is witnessed
        """
        handler = getattr(self, "cmd_" + args.command.replace("-", "_"))
        return handler(args)

    @contextmanager
    def _open(self, path: str | None) -> Iterator[TextIO]:
        if path is None or path == "-":
            yield self.stdin
        else:
            with Path(path).open(encoding="ascii") as handle:
                yield handle

    def _graphs(self, path: str | None) -> Iterator[Graph]:
        with self._open(path) as handle:
            yield from graph6_read_stream(handle)

    def _emit(self, text: str) -> None:
        self.stdout.write(text + "\n")

    def cmd_construct(self, args: argparse.Namespace) -> int:
        graphs = build_family(args.family, args.n, s=args.s, t=args.t, q=args.q, b=args.b)
        for g in graphs:
            self._emit(graph6_encode(g))
        return EXIT_OK

    def cmd_count(self, args: argparse.Namespace) -> int:
        counter = COUNTERS[args.metric]
        rows = ((graph6_encode(g), counter(g)) for g in self._graphs(args.input))
        count = write_csv(self.stdout, rows)
        logger.debug(f"Counted {args.metric} on {count} graphs")
        return EXIT_OK

    def cmd_spectral(self, args: argparse.Namespace) -> int:
        records = []
        for g in self._graphs(args.input):
            result = spectral_radius(g, args.tol)
            record = {
                "graph6": graph6_encode(g),
                "lambda": result.radius,
                "residual": result.residual,
                "iterations": result.iterations,
            }
            if args.quotient is not None:
                if args.quotient == "auto":
                    partition = coarsest_equitable_partition(g)
                else:
                    partition = [int(part) for part in args.quotient.split(",")]
                q = equitable_quotient(g, partition)
                p = char_poly(q)
                record["quotient"] = {
                    "classes": q.k,
                    "polynomial": str(p.as_expr()),
                    "largest_root": largest_real_root(p),
                }
            records.append(record)
        self._emit(render_json(build_report(args.argv, records)))
        return EXIT_OK

    def cmd_poly(self, args: argparse.Namespace) -> int:
        report = verify_polynomial(args.name, args.n, args.s, args.t)
        disagreements = [c.name for c in report.claims if not c.agrees]
        if disagreements:
            logger.warning(f"Claims not reproduced exactly: {', '.join(disagreements)}")
        summary = {
            "graphs": len(report.graph_lambda),
            "matched": len(report.matched),
            "claims_disagreeing": disagreements,
        }
        self._emit(render_json(build_report(args.argv, [report], summary)))
        if report.graph_lambda and not report.matched:
            return EXIT_FAILURE
        return EXIT_OK

    def cmd_check(self, args: argparse.Namespace) -> int:
        ids = self.registry.resolve(args.predicate)
        graphs = self._graphs(args.input) if args.input is not None else None
        if graphs is None and args.n is None:
            raise ValueError("check needs --n or --in")
        report = exhaustive_verify(
            ids, n=args.n, mode=args.mode, graphs=graphs, workers=args.workers, registry=self.registry
        )
        witnesses = sorted({code for s in report.predicates.values() for code in s.failures})
        for code in witnesses:
            self.stderr.write(code + "\n")
        summary = report.model_dump(mode="json", exclude={"n"})
        timing = {"elapsed_seconds": report.elapsed_seconds}
        self._emit(render_json(build_report(args.argv, [], summary, timing)))
        return EXIT_FAILURE if report.failure_count else EXIT_OK

    def cmd_check_family(self, args: argparse.Namespace) -> int:
        started = time.perf_counter()
        verdicts = self.registry.check_family(
            args.check, args.n_list, family=args.family, mode=args.mode,
            s=args.s, t=args.t, q=args.q, b=args.b,
        )
        counts = {status.value: 0 for status in VerdictStatus}
        for v in verdicts:
            counts[v.status.value] += 1
            if v.status == VerdictStatus.FAILS and v.witness is not None:
                self.stderr.write(v.witness.graph6 + "\n")
        timing = {"elapsed_seconds": time.perf_counter() - started}
        self._emit(render_json(build_report(args.argv, verdicts, {"counts": counts}, timing)))
        return EXIT_FAILURE if counts[VerdictStatus.FAILS.value] else EXIT_OK

    def cmd_enumerate(self, args: argparse.Namespace) -> int:
        for g in generate_all(args.n, args.workers):
            self._emit(graph6_encode(g))
        return EXIT_OK

    def cmd_search(self, args: argparse.Namespace) -> int:
        with self._open(args.config) as handle:
            cfg = SearchConfig.model_validate_json(handle.read())
        if args.workers is not None:
            cfg = cfg.model_copy(update={"workers": args.workers})
        started = time.perf_counter()
        result = anneal(cfg)
        timing = {"elapsed_seconds": time.perf_counter() - started}
        self._emit(render_json(build_report(args.argv, [result], {"config": cfg.model_dump()}, timing)))
        return EXIT_OK

    def cmd_probe(self, args: argparse.Namespace) -> int:
        records = [probe(g, seed=args.seed) for g in self._graphs(args.input)]
        self._emit(render_json(build_report(args.argv, records)))
        return EXIT_OK
