"""Predicate registry: lookup by id, single-graph checks and family checks."""

import logging
from collections.abc import Iterable, Mapping, Sequence

from ..construction.families import build_family
from ..exceptions import UnknownPredicateError
from ..models import Graph, Verdict
from .base_predicate import BasePredicate, Mode
from .context import GraphContext
from .family_checks import FAMILY_CHECKS, FamilyCheck
from .predicates import ALL_PREDICATES

logger = logging.getLogger(__name__)


class PredicateRegistry:
    """Holds the theorem predicates and the family checks by id."""

    def __init__(
        self,
        predicates: Iterable[BasePredicate] | None = None,
        family_checks: Mapping[str, FamilyCheck] | None = None,
    ):
        """Initialize registry.

        Args:
            predicates: Predicate instances (default: one of every built-in predicate)
            family_checks: Family checks by id (default: the built-in checks)
        """
        items = list(predicates) if predicates is not None else [cls() for cls in ALL_PREDICATES]
        self.predicates: dict[str, BasePredicate] = {p.predicate_id: p for p in items}
        self.family_checks: dict[str, FamilyCheck] = dict(
            family_checks if family_checks is not None else FAMILY_CHECKS
        )
        logger.debug(
            f"Registry with {len(self.predicates)} predicates and {len(self.family_checks)} family checks"
        )

    def ids(self) -> list[str]:
        return list(self.predicates)

    def check_ids(self) -> list[str]:
        return list(self.family_checks)

    def get(self, predicate_id: str) -> BasePredicate:
        """Look up a predicate.

        Raises:
            UnknownPredicateError: If predicate_id is not registered
        """
        try:
            return self.predicates[predicate_id]
        except KeyError:
            raise UnknownPredicateError(
                f"unknown predicate {predicate_id!r}; known: {', '.join(self.predicates)}"
            ) from None

    def resolve(self, selection: str | Sequence[str]) -> list[str]:
        """Expand "all" or a comma-separated list into registered predicate ids."""
        if isinstance(selection, str):
            if selection == "all":
                return self.ids()
            selection = [part.strip() for part in selection.split(",") if part.strip()]
        for predicate_id in selection:
            self.get(predicate_id)
        return list(selection)

    def check(self, predicate_id: str, g: Graph, mode: Mode = "strict") -> Verdict:
        """Evaluate one predicate on one graph.

        Args:
            predicate_id: Registered predicate id
            g: Graph
            mode: strict or exploratory threshold handling

        Returns:
            Verdict

        Raises:
            UnknownPredicateError: If predicate_id is not registered
        """
        return self.get(predicate_id).evaluate(GraphContext(g), mode)

    def check_many(self, predicate_ids: Sequence[str], g: Graph, mode: Mode = "strict") -> list[Verdict]:
        """Evaluate several predicates on one graph, sharing its cached invariants."""
        ctx = GraphContext(g)
        return [self.get(pid).evaluate(ctx, mode) for pid in predicate_ids]

    def check_family(
        self,
        check_id: str,
        n_list: Sequence[int],
        family: str | None = None,
        mode: Mode = "strict",
        **params: int | None,
    ) -> list[Verdict]:
        """Run a family check, or a predicate on constructed family instances.

        Args:
            check_id: A family-check id, or a predicate id (then family is required)
            n_list: Vertex counts
            family: Constructor family name for predicate ids
            mode: Threshold handling for predicates
            **params: Extra family parameters (s, t, q, b)

        Returns:
            One verdict per family check and n, or per constructed instance

        Raises:
            UnknownPredicateError: If check_id is neither a check nor a predicate,
                or a predicate is given without a family
        """
        if check_id in self.family_checks:
            run = self.family_checks[check_id]
            verdicts = []
            for n in n_list:
                logger.info(f"Family check {check_id} at n={n}")
                verdicts.append(run(n))
            return verdicts
        predicate = self.get(check_id)
        if family is None:
            raise UnknownPredicateError(f"predicate {check_id} needs a family to check against")
        verdicts = []
        for n in n_list:
            for g in build_family(family, n, **params):
                verdicts.append(predicate.evaluate(GraphContext(g), mode))
        return verdicts
