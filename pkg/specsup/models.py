"""Pydantic models for graphs, spectra, verdicts and reports."""

from enum import StrEnum
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic.alias_generators import to_camel


class Graph(BaseModel):
    """Immutable simple undirected graph on vertices 0..n-1 stored as bit rows."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    adj: tuple[int, ...] = Field(
        ..., description="Bit rows; bit v of adj[u] is set iff uv is an edge"
    )
    m: int = Field(..., ge=0, description="Cached edge count")

    @model_validator(mode="after")
    def _check_rows(self) -> "Graph":
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.adj)}")
        limit = 1 << self.n
        total = 0
        for u, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise ValueError(f"row {u} references a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            rest = row
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric pair ({u}, {v})")
                rest ^= low
            total += row.bit_count()
        if total != 2 * self.m:
            raise ValueError(f"m={self.m} but rows hold {total // 2} edges")
        return self

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Return edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u] >> (u + 1) << (u + 1))]


def bits_of(mask: int) -> list[int]:
    """List the set bit positions of mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Bipartition(BaseModel):
    """A 2-colouring S, T of the vertex set with cached edge counts."""

    model_config = ConfigDict(frozen=True)

    side: tuple[int, ...] = Field(..., description="0 for S, 1 for T, per vertex")
    e_s: int = Field(..., ge=0, description="Edges inside S")
    e_t: int = Field(..., ge=0, description="Edges inside T")
    e_st: int = Field(..., ge=0, description="Crossing edges")

    @property
    def s_mask(self) -> int:
        return sum(1 << v for v, c in enumerate(self.side) if c == 0)

    @property
    def t_mask(self) -> int:
        return sum(1 << v for v, c in enumerate(self.side) if c == 1)

    @property
    def s_size(self) -> int:
        return self.side.count(0)

    @property
    def t_size(self) -> int:
        return self.side.count(1)


class BipartiteDistance(BaseModel):
    """D(G) = m - maxcut(G), the number of edges to delete to reach bipartite."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0, description="m minus the best cut found")
    exact: bool = Field(..., description="Whether value is the true D(G)")
    witness: Bipartition = Field(..., description="Bipartition attaining the cut")


class EmbeddedBipartiteSpec(BaseModel):
    """K_{s,t} minus some cross edges plus edges embedded inside the parts."""

    s: int = Field(..., ge=0, description="Size of side S (labels 0..s-1)")
    t: int = Field(..., ge=0, description="Size of side T (labels 0..t-1)")
    inside_s: list[tuple[int, int]] = Field(default_factory=list, description="Edges on S-labels")
    inside_t: list[tuple[int, int]] = Field(default_factory=list, description="Edges on T-labels")
    missing_cross: list[tuple[int, int]] = Field(
        default_factory=list, description="(S-label, T-label) pairs removed from K_{s,t}"
    )


class TriangleStats(BaseModel):
    """Triangle count with per-vertex and per-edge breakdowns."""

    total: int = Field(..., ge=0, description="t(G)")
    per_vertex: tuple[int, ...] = Field(..., description="Triangles through each vertex")
    per_edge: dict[tuple[int, int], int] = Field(
        ..., description="Common-neighbourhood size of every edge (u < v)"
    )


class SpectralResult(BaseModel):
    """Power-iteration estimate of the spectral radius and Perron vector."""

    radius: float = Field(..., description="Estimate of lambda(G)")
    perron: tuple[float, ...] = Field(..., description="Non-negative unit Perron vector")
    residual: float = Field(..., ge=0, description="Max-norm of A x - lambda x")
    iterations: int = Field(..., ge=0, description="Power steps taken")


class QuotientMatrix(BaseModel):
    """Quotient matrix of an equitable partition."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0, description="Number of classes")
    b: tuple[tuple[int, ...], ...] = Field(
        ..., description="b[i][j] = neighbours in class j of any vertex of class i"
    )
    class_sizes: tuple[int, ...] = Field(..., description="Size of every class")


class QuadraticSurd(BaseModel):
    """Exact real number a + b*sqrt(c) with rational a, b, c and c >= 0."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: Fraction = Field(default=Fraction(0), description="Rational part")
    b: Fraction = Field(default=Fraction(0), description="Coefficient of the root")
    c: Fraction = Field(default=Fraction(0), description="Radicand")


class CanonicalForm(BaseModel):
    """Upper-triangle bit string of the minimal relabelled adjacency matrix."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    code: bytes = Field(..., description="Packed upper triangle, row-major")
    labeling: tuple[int, ...] = Field(
        default=(), description="labeling[i] = original vertex placed at position i",
        exclude=True,
    )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.n == other.n and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.n, self.code))

    def sort_key(self) -> tuple[int, bytes]:
        return (self.n, self.code)


class VerdictStatus(StrEnum):
    """Outcome of a predicate on one graph."""

    HOLDS = "holds"
    FAILS = "fails"
    WITHIN_TOLERANCE = "withinTolerance"
    NOT_APPLICABLE = "notApplicable"


class Witness(BaseModel):
    """Graph and numbers backing a verdict."""

    graph6: str = Field(..., description="Graph in graph6")
    details: dict[str, Any] = Field(default_factory=dict, description="Numeric evidence")


class Verdict(BaseModel):
    """Result of evaluating one predicate on one graph."""

    predicate_id: str = Field(..., description="Registered predicate id")
    status: VerdictStatus = Field(..., description="Outcome")
    hypothesis_met: bool = Field(..., description="Whether the hypothesis held")
    witness: Witness | None = Field(default=None, description="Evidence, always set on failure")
    slack: float | None = Field(
        default=None, description="Conclusion margin (>= 0 means the inequality held)"
    )
    observed: dict[str, float] = Field(
        default_factory=dict, description="Auxiliary values aggregated by maximum"
    )
    finding: bool = Field(
        default=False, description="Exploratory violation below the stated threshold"
    )
    resolution: str | None = Field(
        default=None, description="How a borderline spectral comparison was settled"
    )

    @model_validator(mode="after")
    def _fails_has_witness(self) -> "Verdict":
        if self.status == VerdictStatus.FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")
        return self


class PredicateSummary(BaseModel):
    """Aggregated verdicts of one predicate over a batch of graphs."""

    counts: dict[str, int] = Field(
        default_factory=lambda: {s.value: 0 for s in VerdictStatus},
        description="Verdict count per status",
    )
    failures: list[str] = Field(default_factory=list, description="Failure witnesses (graph6)")
    findings: list[str] = Field(default_factory=list, description="Exploratory violations (graph6)")
    borderline: list[str] = Field(default_factory=list, description="Within-tolerance graphs")
    worst_slack: float | None = Field(default=None, description="Smallest slack observed")
    worst_slack_graph6: str | None = Field(default=None, description="Graph attaining worst_slack")
    observed_max: dict[str, float] = Field(default_factory=dict, description="Max of observed values")


class VerificationReport(BaseModel):
    """Exhaustive verification outcome."""

    mode: Literal["strict", "exploratory"] = Field(..., description="Threshold handling")
    n: int | None = Field(default=None, description="Vertex count when generated in-process")
    graphs_checked: int = Field(default=0, ge=0, description="Number of graphs evaluated")
    predicates: dict[str, PredicateSummary] = Field(
        default_factory=dict, description="Per-predicate summary"
    )
    elapsed_seconds: float = Field(default=0.0, description="Wall-clock time", exclude=True)

    @property
    def failure_count(self) -> int:
        return sum(p.counts[VerdictStatus.FAILS.value] for p in self.predicates.values())


class Schedule(BaseModel):
    """Annealing temperature schedule."""

    initial_temperature: float = Field(default=1.0, gt=0, description="Starting temperature")
    cooling: float = Field(default=0.999, gt=0, lt=1, description="Geometric cooling factor")
    steps: int = Field(default=5000, ge=1, description="Moves per restart")


class Constraint(BaseModel):
    """Bound on an exact substructure counter."""

    counter: Literal["bowties", "triangles", "edges", "booksize", "tau3", "triangular-edges"] = Field(
        ..., description="Counter to bound"
    )
    op: Literal["le", "eq"] = Field(default="le", description="Relation to the bound")
    bound: int = Field(..., ge=0, description="Bound value")


class SearchConfig(BaseModel):
    """Simulated-annealing configuration."""

    n: int = Field(..., ge=1, description="Vertex count")
    objective: Literal["maximize-lambda"] = Field(default="maximize-lambda", description="Objective")
    constraints: list[Constraint] = Field(default_factory=list, description="Hard constraints")
    moves: Literal["single-flip", "swap"] = Field(default="single-flip", description="Move type")
    schedule: Schedule = Field(default_factory=Schedule, description="Temperature schedule")
    seed: int = Field(default=0, ge=0, description="RNG seed")
    restarts: int = Field(default=1, ge=1, description="Independent restarts")
    workers: int = Field(default=1, ge=1, description="Processes for restarts")

    @model_validator(mode="after")
    def _moves_fit_constraints(self) -> "SearchConfig":
        # a single flip always changes m
        if self.moves == "single-flip" and any(
            c.counter == "edges" and c.op == "eq" for c in self.constraints
        ):
            raise ValueError("single-flip moves cannot keep a fixed edge count; use moves='swap'")
        return self


class TrajectorySummary(BaseModel):
    """Counters describing an annealing run."""

    accepted: int = Field(default=0, description="Accepted moves")
    rejected_constraint: int = Field(default=0, description="Moves violating a constraint")
    rejected_metropolis: int = Field(default=0, description="Moves rejected by Metropolis")
    improvements: int = Field(default=0, description="Times the best graph improved")
    restart_best: list[float] = Field(default_factory=list, description="Best lambda per restart")


class SearchResult(BaseModel):
    """Best graph found by annealing."""

    best: Graph = Field(..., description="Best graph", exclude=True)
    best_graph6: str = Field(..., description="Best graph in graph6")
    best_lambda: float = Field(..., description="Spectral radius of best")
    constraint_values: dict[str, int] = Field(default_factory=dict, description="Counter values of best")
    trajectory: TrajectorySummary = Field(default_factory=TrajectorySummary, description="Run summary")
    matched_family: str | None = Field(default=None, description="Constructor family best is isomorphic to")


class Report(BaseModel):
    """Machine-readable CLI report, serialized with camelCase keys."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)

    tool_version: str = Field(..., description="specsup version")
    command: list[str] = Field(..., description="Command echo")
    records: list[dict[str, Any]] = Field(default_factory=list, description="Per-item records")
    summary: dict[str, Any] = Field(default_factory=dict, description="Aggregate results")
    timing: dict[str, float] = Field(default_factory=dict, description="Wall-clock fields")


class ClaimCheck(BaseModel):
    """Exact re-derivation of one quoted polynomial fact."""

    name: str = Field(..., description="Claim identifier")
    statement: str = Field(..., description="What is being checked")
    expected: str = Field(..., description="Quoted value or identity")
    derived: str = Field(..., description="Value obtained by exact evaluation")
    agrees: bool = Field(..., description="Whether quoted and derived forms coincide")


class PolynomialReport(BaseModel):
    """Numeric-versus-exact agreement report for a registered polynomial."""

    name: str = Field(..., description="Registry name")
    n: int | None = Field(default=None, description="Vertex count")
    s: int | None = Field(default=None, description="Part size s")
    t: int | None = Field(default=None, description="Part size t")
    polynomial: str = Field(..., description="Polynomial in x after substitution")
    largest_root: float = Field(..., description="Largest real root")
    graph_lambda: list[float] = Field(
        default_factory=list, description="Spectral radii of the associated graph(s)"
    )
    matched: list[int] = Field(
        default_factory=list, description="Indices of associated graphs agreeing within tolerance"
    )
    claims: list[ClaimCheck] = Field(default_factory=list, description="Exact claim checks")


class ProbeReport(BaseModel):
    """Structural facts about a near-extremal graph, relative to a maximum cut."""

    graph6: str = Field(..., description="Graph in graph6")
    n: int = Field(..., description="Vertex count")
    m: int = Field(..., description="Edge count")
    lam: float = Field(..., description="Spectral radius")
    above_kplus2: bool | None = Field(
        default=None, description="lambda >= lambda(K^{+2}); None when n < 7 or unresolved"
    )
    bowties: int = Field(..., description="Bowtie count")
    distance: int = Field(..., description="m minus the cut found")
    exact_cut: bool = Field(..., description="Whether the cut is a maximum cut")
    s_size: int = Field(..., description="|S|")
    t_size: int = Field(..., description="|T|")
    e_s: int = Field(..., description="Edges inside S")
    e_t: int = Field(..., description="Edges inside T")
    low: list[int] = Field(default_factory=list, description="Low-degree vertices L")
    heavy: list[int] = Field(default_factory=list, description="High inside-degree vertices W")
    perron_mass: float = Field(..., description="Perron mass on an independent set opposite the top vertex")
    checks: dict[str, bool] = Field(default_factory=dict, description="Structural statements and whether they hold")
