"""The registered theorem predicates.

Integer-valued inequalities are compared exactly after clearing denominators;
slack is still reported as a float in the statement's own units.
"""

import logging
from math import comb, isqrt

from ..construction.families import kplus, kplus2
from .base_predicate import BasePredicate, Conclusion, Hypothesis
from .context import (
    Comparison,
    GraphContext,
    kplus2_reference,
    kplus_reference,
    sqrt_reference,
    turan_reference,
)

logger = logging.getLogger(__name__)


def _spectral_hypothesis(c: Comparison, strict: bool) -> Hypothesis:
    """lambda >= reference (strict=False) or lambda > reference (strict=True)."""
    details = {"lambda_minus_reference": c.difference}
    if c.sign is None:
        return Hypothesis(met=None, resolution=c.resolution, details=details)
    met = c.sign > 0 if strict else c.sign >= 0
    return Hypothesis(met=met, resolution=c.resolution, details=details)


def _edge_hypothesis(met: bool, **details: float) -> Hypothesis:
    return Hypothesis(met=met, details=details)


def _above_turan(ctx: GraphContext, extra: int = 0) -> bool:
    return ctx.m > ctx.n * ctx.n // 4 + extra


class Mantel(BasePredicate):
    predicate_id = "P_MANTEL"
    description = "m > floor(n^2/4) => t >= 1"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _edge_hypothesis(_above_turan(ctx), m=ctx.m)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        return Conclusion(holds=ctx.triangles >= 1, slack=ctx.triangles - 1, details={"t": ctx.triangles})


class LovaszSimonovits(BasePredicate):
    """Instantiated at the strongest t0 = m - floor(n^2/4)."""

    predicate_id = "P_LS"
    description = "m >= floor(n^2/4) + t0, 1 <= t0 < n/2 => t >= t0 floor(n/2)"

    def _t0(self, ctx: GraphContext) -> int:
        return ctx.m - ctx.n * ctx.n // 4

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        t0 = self._t0(ctx)
        return _edge_hypothesis(1 <= t0 and 2 * t0 < ctx.n, t0=t0)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = self._t0(ctx) * (ctx.n // 2)
        return Conclusion(
            holds=ctx.triangles >= bound,
            slack=ctx.triangles - bound,
            details={"t": ctx.triangles, "bound": bound},
        )


class BollobasNikiforov(BasePredicate):
    """lambda^3 <= 3t + m lambda, with equality exactly for complete bipartite graphs plus isolated vertices."""

    predicate_id = "P_BN"
    description = "lambda^3 <= 3t + m lambda"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return Hypothesis(met=True)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        lam = ctx.lam
        slack = 3 * ctx.triangles + ctx.m * lam - lam**3
        scale = 1e-8 * max(1.0, ctx.m * lam)
        equality = abs(slack) <= scale
        details = {"lambda": lam, "t": ctx.triangles, "m": ctx.m, "equality": equality,
                   "complete_bipartite": ctx.complete_bipartite}
        holds = slack >= -scale and equality == ctx.complete_bipartite
        return Conclusion(holds=holds, slack=slack, details=details)

    def observe(self, ctx: GraphContext) -> dict[str, float]:
        return {"equality": 1.0 if abs(3 * ctx.triangles + ctx.m * ctx.lam - ctx.lam**3)
                <= 1e-8 * max(1.0, ctx.m * ctx.lam) else 0.0}


class MoonMoser(BasePredicate):
    predicate_id = "P_MM"
    description = "3t >= (4m/n)(m - n^2/4)"
    min_n = 1

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return Hypothesis(met=True)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        n, m, t = ctx.n, ctx.m, ctx.triangles
        # 3t >= 4m^2/n - mn  <=>  3tn >= 4m^2 - mn^2
        holds = 3 * t * n >= 4 * m * m - m * n * n
        slack = 3 * t - (4 * m / n) * (m - n * n / 4)
        return Conclusion(holds=holds, slack=slack, details={"t": t, "m": m})


class MoonMoserSupersaturation(BasePredicate):
    predicate_id = "P_MM_SUP"
    description = "m >= n^2/4 + eps n^2 (eps > 0) => t > (eps/3) n^3"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _edge_hypothesis(4 * ctx.m > ctx.n * ctx.n, m=ctx.m)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        n, m, t = ctx.n, ctx.m, ctx.triangles
        # eps = (m - n^2/4)/n^2, so (eps/3) n^3 = (4m - n^2) n / 12
        holds = 12 * t > (4 * m - n * n) * n
        slack = t - (4 * m - n * n) * n / 12
        return Conclusion(holds=holds, slack=slack, details={"t": t, "m": m})


class FarFromBipartite(BasePredicate):
    """Evaluated with eps = D(G), the strongest admissible value; needs exact D."""

    predicate_id = "P_FAR"
    description = "t >= (n/6)(m + D(G) - n^2/4)"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        distance = ctx.bipartite_distance
        if distance is None or not distance.exact:
            return Hypothesis(met=False, details={"reason": "exact D(G) unavailable"})
        return Hypothesis(met=True, details={"D": distance.value})

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        n, m, t = ctx.n, ctx.m, ctx.triangles
        d = ctx.bipartite_distance.value  # type: ignore[union-attr]
        # 24 t >= n (4m + 4D - n^2)
        holds = 24 * t >= n * (4 * m + 4 * d - n * n)
        slack = t - n * (4 * m + 4 * d - n * n) / 24
        return Conclusion(holds=holds, slack=slack, details={"t": t, "m": m, "D": d})


class ErdosGallai(BasePredicate):
    """Checked for every k >= 1 with n >= (5k+3)/2."""

    predicate_id = "P_EG"
    description = "m > k(n-k) + C(k,2), n >= (5k+3)/2 => matching of size k+1"

    def _triggered(self, ctx: GraphContext) -> list[int]:
        out = []
        k = 1
        while 2 * ctx.n >= 5 * k + 3:
            if ctx.m > k * (ctx.n - k) + comb(k, 2):
                out.append(k)
            k += 1
        return out

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        ks = self._triggered(ctx)
        return Hypothesis(met=bool(ks), details={"k": max(ks, default=0)})

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        nu = ctx.matching_number
        k = max(self._triggered(ctx))
        return Conclusion(holds=nu >= k + 1, slack=nu - (k + 1), details={"matching": nu, "k": k})


class AlonShikhelman(BasePredicate):
    """Evaluated at the smallest k >= 2 with G F_k-free."""

    predicate_id = "P_AS"
    description = "F_k-free => t < (9k - 15)(k + 1) n"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return Hypothesis(met=True)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        k = max(2, ctx.fk + 1)
        bound = (9 * k - 15) * (k + 1) * ctx.n
        return Conclusion(
            holds=ctx.triangles < bound, slack=bound - ctx.triangles, details={"k": k, "t": ctx.triangles}
        )


class NingZhaiSpectral(BasePredicate):
    predicate_id = "P_NZ_n"
    description = "lambda >= lambda(T_{n,2}) => t >= floor(n/2) - 1 unless G = T_{n,2}"
    min_n = 1

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _spectral_hypothesis(ctx.compare(turan_reference(ctx.n)), strict=False)

    def exception(self, ctx: GraphContext) -> str | None:
        return "T_{n,2}" if ctx.is_turan else None

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = ctx.n // 2 - 1
        return Conclusion(holds=ctx.triangles >= bound, slack=ctx.triangles - bound, details={"t": ctx.triangles})


class XiaoKatona(BasePredicate):
    predicate_id = "P_XK"
    description = "m > floor(n^2/4), tau3 >= 2 => t >= n - 2"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        if not _above_turan(ctx):
            return _edge_hypothesis(False, m=ctx.m)
        return _edge_hypothesis(ctx.tau3 >= 2, m=ctx.m, tau3=ctx.tau3)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = ctx.n - 2
        return Conclusion(holds=ctx.triangles >= bound, slack=ctx.triangles - bound, details={"t": ctx.triangles})


class SpectralTriangleCover(BasePredicate):
    predicate_id = "P_MAIN1"
    description = "lambda >= lambda(T_{n,2}), tau3 >= 2 => t >= n - 3"
    threshold = 113
    min_n = 1

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        hyp = _spectral_hypothesis(ctx.compare(turan_reference(ctx.n)), strict=False)
        if hyp.met is False:
            return hyp
        if ctx.tau3 < 2:
            return Hypothesis(met=False, resolution=hyp.resolution, details={"tau3": ctx.tau3})
        return hyp

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = ctx.n - 3
        return Conclusion(holds=ctx.triangles >= bound, slack=ctx.triangles - bound, details={"t": ctx.triangles})


class BowtieTuran(BasePredicate):
    predicate_id = "P_EFGG"
    description = "F_2-free, n >= 5 => m <= floor(n^2/4) + 1"
    min_n = 5

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return Hypothesis(met=ctx.bowties == 0)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = ctx.n * ctx.n // 4 + 1
        return Conclusion(holds=ctx.m <= bound, slack=bound - ctx.m, details={"m": ctx.m})

    def observe(self, ctx: GraphContext) -> dict[str, float]:
        return {"m": float(ctx.m)}


class BowtieSpectral(BasePredicate):
    predicate_id = "P_LLP"
    description = "F_2-free, n >= 7 => lambda <= lambda(K^+) with equality iff G = K^+"
    min_n = 7

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return Hypothesis(met=ctx.bowties == 0)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        c = ctx.compare(kplus_reference(ctx.n))
        details = {"lambda_minus_reference": c.difference}
        if c.sign is None:
            iso = ctx.is_isomorphic_to(kplus(ctx.n))
            return Conclusion(holds=iso, slack=-c.difference, details=details, borderline=not iso,
                              resolution=c.resolution)
        if c.sign > 0:
            return Conclusion(holds=False, slack=-c.difference, details=details, resolution=c.resolution)
        if c.sign == 0:
            iso = ctx.is_isomorphic_to(kplus(ctx.n))
            details["isomorphic_to_extremal"] = iso
            return Conclusion(holds=iso, slack=0.0, details=details, resolution=c.resolution)
        return Conclusion(holds=True, slack=-c.difference, details=details, resolution=c.resolution)

    def observe(self, ctx: GraphContext) -> dict[str, float]:
        return {"lambda": ctx.lam}


class SpectralBowties(BasePredicate):
    """At least floor(n/2) bowties, and exactly floor(n/2) only for K^{+2} itself."""

    predicate_id = "P_MAIN2"
    description = "lambda >= lambda(K^{+2}) => bowties >= floor(n/2), K^{+2} unique extremal"
    threshold = 8_800_000
    min_n = 7

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _spectral_hypothesis(ctx.compare(kplus2_reference(ctx.n)), strict=False)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = ctx.n // 2
        bowties = ctx.bowties
        details = {"bowties": bowties}
        if bowties > bound:
            return Conclusion(holds=True, slack=bowties - bound, details=details)
        if bowties == bound:
            iso = ctx.is_isomorphic_to(kplus2(ctx.n))
            details["isomorphic_to_extremal"] = iso
            return Conclusion(holds=iso, slack=0.0, details=details)
        return Conclusion(holds=False, slack=bowties - bound, details=details)


class Nosal(BasePredicate):
    predicate_id = "P_NOSAL"
    description = "lambda > sqrt(m) => t >= 1"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _spectral_hypothesis(ctx.compare(sqrt_reference(ctx.m)), strict=True)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        return Conclusion(holds=ctx.triangles >= 1, slack=ctx.triangles - 1, details={"t": ctx.triangles})


class NingZhaiEdges(BasePredicate):
    predicate_id = "P_NZ_m"
    description = "lambda >= sqrt(m) => t >= floor((sqrt(m) - 1)/2) unless complete bipartite"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _spectral_hypothesis(ctx.compare(sqrt_reference(ctx.m)), strict=False)

    def exception(self, ctx: GraphContext) -> str | None:
        return "complete bipartite" if ctx.complete_bipartite else None

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        # floor((sqrt(m) - 1)/2) is the largest k with (2k + 1)^2 <= m
        bound = (isqrt(ctx.m) - 1) // 2
        return Conclusion(holds=ctx.triangles >= bound, slack=ctx.triangles - bound,
                          details={"t": ctx.triangles, "bound": bound})


class SqrtMTriangles(BasePredicate):
    """Open statement: the slack t - sqrt(m) is recorded, never failed."""

    predicate_id = "P_CONJ71"
    description = "lambda > sqrt(m), tau3 >= 2 => t >= sqrt(m) - C (report only)"
    report_only = True

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        hyp = _spectral_hypothesis(ctx.compare(sqrt_reference(ctx.m)), strict=True)
        if hyp.met is False:
            return hyp
        if ctx.tau3 < 2:
            return Hypothesis(met=False, details={"tau3": ctx.tau3})
        return hyp

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        slack = ctx.triangles - ctx.m**0.5
        return Conclusion(holds=True, slack=slack, details={"t": ctx.triangles, "m": ctx.m})


class TriangularEdges(BasePredicate):
    predicate_id = "P_STAR_TRI"
    description = "m > floor(n^2/4) => triangular edges >= 2 floor(n/2) + 1"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _edge_hypothesis(_above_turan(ctx), m=ctx.m)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bound = 2 * (ctx.n // 2) + 1
        value = ctx.triangular_edges
        return Conclusion(holds=value >= bound, slack=value - bound, details={"triangular_edges": value})


class BookSize(BasePredicate):
    predicate_id = "P_STAR_BOOK"
    description = "m > floor(n^2/4) => bk > n/6"

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _edge_hypothesis(_above_turan(ctx), m=ctx.m)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bk = ctx.booksize
        return Conclusion(holds=6 * bk > ctx.n, slack=bk - ctx.n / 6, details={"booksize": bk})


class BowtieExists(BasePredicate):
    predicate_id = "P_STAR_BOW"
    description = "m > floor(n^2/4) + 1, n >= 5 => bowties >= 1"
    min_n = 5

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _edge_hypothesis(_above_turan(ctx, 1), m=ctx.m)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        return Conclusion(holds=ctx.bowties >= 1, slack=ctx.bowties - 1, details={"bowties": ctx.bowties})


class SpectralBook(BasePredicate):
    predicate_id = "P_ZL"
    description = "lambda >= lambda(T_{n,2}) => bk > 2n/13 unless G = T_{n,2}"
    min_n = 1

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _spectral_hypothesis(ctx.compare(turan_reference(ctx.n)), strict=False)

    def exception(self, ctx: GraphContext) -> str | None:
        return "T_{n,2}" if ctx.is_turan else None

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bk = ctx.booksize
        return Conclusion(holds=13 * bk > 2 * ctx.n, slack=bk - 2 * ctx.n / 13, details={"booksize": bk})


class SpectralBookProblem(BasePredicate):
    """Open problem: the slack bk - n/6 is recorded, never failed."""

    predicate_id = "P_PROB_ZL"
    description = "lambda > lambda(T_{n,2}) => bk > n/6 (report only)"
    report_only = True
    min_n = 1

    def hypothesis(self, ctx: GraphContext) -> Hypothesis:
        return _spectral_hypothesis(ctx.compare(turan_reference(ctx.n)), strict=True)

    def conclusion(self, ctx: GraphContext) -> Conclusion:
        bk = ctx.booksize
        return Conclusion(holds=6 * bk > ctx.n, slack=bk - ctx.n / 6, details={"booksize": bk})

    def observe(self, ctx: GraphContext) -> dict[str, float]:
        return {"violations": 0.0 if 6 * ctx.booksize > ctx.n else 1.0}


ALL_PREDICATES: tuple[type[BasePredicate], ...] = (
    Mantel,
    LovaszSimonovits,
    BollobasNikiforov,
    MoonMoser,
    MoonMoserSupersaturation,
    FarFromBipartite,
    ErdosGallai,
    AlonShikhelman,
    NingZhaiSpectral,
    XiaoKatona,
    SpectralTriangleCover,
    BowtieTuran,
    BowtieSpectral,
    SpectralBowties,
    Nosal,
    NingZhaiEdges,
    SqrtMTriangles,
    TriangularEdges,
    BookSize,
    BowtieExists,
    SpectralBook,
    SpectralBookProblem,
)
