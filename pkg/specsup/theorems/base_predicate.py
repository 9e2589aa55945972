"""Base class for executable theorem predicates."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Literal

from pydantic import BaseModel, Field

from ..models import Verdict, VerdictStatus, Witness
from .context import GraphContext

logger = logging.getLogger(__name__)

Mode = Literal["strict", "exploratory"]


class Hypothesis(BaseModel):
    """Whether a predicate's hypothesis holds; met=None marks an unresolved spectral tie."""

    met: bool | None = Field(..., description="True, False, or None when borderline")
    resolution: str | None = Field(default=None, description="How a spectral comparison was settled")
    details: dict[str, Any] = Field(default_factory=dict, description="Values used")


class Conclusion(BaseModel):
    """Outcome of a predicate's conclusion on one graph."""

    holds: bool = Field(..., description="Whether the conclusion held")
    slack: float | None = Field(default=None, description="Margin; negative on violation")
    details: dict[str, Any] = Field(default_factory=dict, description="Values used")
    borderline: bool = Field(default=False, description="Decided within numeric tolerance only")
    resolution: str | None = Field(default=None, description="How a spectral comparison was settled")


class BasePredicate(ABC):
    """Abstract base class for predicates of the form hypothesis => conclusion.

    Subclasses set predicate_id and description, and may set threshold (the
    smallest n the statement is proved for), min_n (below which the statement
    is not meaningful) and report_only (conclusions are recorded, never failed).
    """

    predicate_id: str = ""
    description: str = ""
    threshold: int | None = None
    min_n: int = 0
    report_only: bool = False

    @abstractmethod
    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        """Evaluate the hypothesis.

        Args:
            ctx: Cached invariants of the graph

        Returns:
            Hypothesis outcome
        """
        pass

    @abstractmethod
    def conclusion(self, ctx: GraphContext) -> Conclusion:
        """Evaluate the conclusion; only called when the hypothesis is met or borderline.

        Args:
            ctx: Cached invariants of the graph

        Returns:
            Conclusion outcome
        """
        pass

    def exception(self, ctx: GraphContext) -> str | None:
        """Name of a stated exceptional graph that g is, if any."""
        return None

    def observe(self, ctx: GraphContext) -> dict[str, float]:
        """Auxiliary values aggregated by maximum over graphs meeting the hypothesis."""
        return {}

    def get_name(self) -> str:
        """Get predicate name.

        Returns:
            Predicate class name
        """
        return self.__class__.__name__

    def _verdict(self, status: VerdictStatus, met: bool, **kwargs: Any) -> Verdict:
        return Verdict(predicate_id=self.predicate_id, status=status, hypothesis_met=met, **kwargs)

    def evaluate(self, ctx: GraphContext, mode: Mode = "strict") -> Verdict:
        """Evaluate hypothesis and conclusion on one graph.

        Below the threshold, strict mode reports notApplicable with
        hypothesis_met=False; exploratory mode evaluates anyway and reports a
        violation as a finding rather than a failure. A failing conclusion is
        recomputed with brute-force counters before it is reported.
        """
        if ctx.n < self.min_n:
            return self._verdict(VerdictStatus.NOT_APPLICABLE, False)
        below = self.threshold is not None and ctx.n < self.threshold
        if below and mode == "strict":
            return self._verdict(VerdictStatus.NOT_APPLICABLE, False)

        hyp = self.hypothesis(ctx)
        if hyp.met is False:
            return self._verdict(VerdictStatus.NOT_APPLICABLE, False, resolution=hyp.resolution)
        exception = self.exception(ctx)
        if exception is not None:
            return self._verdict(
                VerdictStatus.NOT_APPLICABLE,
                True,
                witness=Witness(graph6=ctx.graph6, details={"exception": exception}),
            )

        result = self.conclusion(ctx)
        observed = self.observe(ctx) if hyp.met else {}
        resolution = result.resolution or hyp.resolution
        common = dict(slack=result.slack, observed=observed, resolution=resolution)
        if result.holds or self.report_only:
            return self._verdict(VerdictStatus.HOLDS, hyp.met is True, **common)

        details = {**hyp.details, **result.details}
        witness = Witness(graph6=ctx.graph6, details=details)
        if hyp.met is None or result.borderline:
            return self._verdict(VerdictStatus.WITHIN_TOLERANCE, hyp.met is True, witness=witness, **common)

        if not ctx.oracle:
            recheck = self.conclusion(ctx.bruteforce())
            if recheck.holds:
                logger.error(
                    f"{self.predicate_id}: fast counters disagree with brute force on {ctx.graph6}"
                )
                return self._verdict(VerdictStatus.HOLDS, True, **common)
        if below:
            return self._verdict(
                VerdictStatus.NOT_APPLICABLE, True, witness=witness, finding=True, **common
            )
        return self._verdict(VerdictStatus.FAILS, True, witness=witness, **common)
