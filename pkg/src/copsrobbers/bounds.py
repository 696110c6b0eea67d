"""Closed-form cop-number and genus bounds, with provenance labels.

Every bound value carries one of three labels: proven (a theorem applied at
face value), conjectural (computed but never used in any certificate), or
asymptotic-indicator (a formula whose guarantee is only asymptotic; at
finite n it is reported as a number to eyeball, not a claim).

All density arithmetic is exact rational: the strict inequality
(alpha-3)n/6 < g is converted to the integer bound floor((alpha-3)n/6) + 1,
and float rounding can never off-by-one a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphMetrics, components, metrics

PROVEN = "proven"
CONJECTURAL = "conjectural"
ASYMPTOTIC = "asymptotic-indicator"

SRC_GIRTH5_COP = (
    "girth >= 5 forces c(G) >= min degree: each cop guards at most one "
    "neighbor of the robber"
)
SRC_DENSITY_GENUS = (
    "Euler-formula density bounds: (alpha-3)n/6 < genus <= (alpha-1)n for "
    "connected graphs with alpha = e/n > 3"
)
SRC_DENSITY_NONORIENTABLE = (
    "Euler-formula density bounds, nonorientable: (alpha-3)n/3 < crosscap "
    "number <= (alpha-1)n"
)
SRC_GIRTH5_GENUS = (
    "girth-5 Euler bound: genus >= (3*delta/10 - 1)*n and n >= 1 + delta^2"
)
SRC_2G3 = "two cops guard a shortest noncontractible cycle: c <= 2*genus + 3"
SRC_SCHRODER = "Schroeder's theorem: c <= floor(3*genus/2) + 3"
SRC_SCHRODER_CONJ = "Schroeder's conjecture: c <= genus + 3"
SRC_BKL = (
    "Bollobas-Kun-Leader random-graph theorem: (np)^-2 * n^(1/2-o(1)) <= "
    "c(G(n,p)) <= 160000*sqrt(n)*log(n) a.a.s., for p >= 2.1*log(n)/n"
)


@dataclass(frozen=True)
class Bound:
    """One labeled bound value; value is None when inapplicable."""

    value: int | float | None
    provenance: str
    source: str
    applicable: bool = True

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "provenance": self.provenance,
            "applicable": self.applicable,
            "source": self.source,
        }


def girth5_cop_lower(m: GraphMetrics) -> int | None:
    """Min degree as a cop-number lower bound; only valid at girth >= 5."""
    return m.min_degree if m.girth >= 5 else None


@dataclass(frozen=True)
class DensityGenusBounds:
    """Genus brackets from edge density alone (exact integers)."""

    genus_lower: int
    genus_upper: int
    nonorientable_lower: int
    nonorientable_upper: int


def genus_bounds_from_density(n: int, e: int) -> DensityGenusBounds:
    """Bracket the genus of a connected graph from (n, e) only.

    Lower bounds are vacuous (0) at alpha <= 3, the upper bound at
    alpha <= 1; the hypothesis is a connected simple graph.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    alpha = Fraction(e, n)
    if alpha > 1:
        upper = math.floor((alpha - 1) * n)
    else:
        upper = 0
    if alpha > 3:
        lower = math.floor((alpha - 3) * n / 6) + 1
        nonor_lower = math.floor((alpha - 3) * n / 3) + 1
    else:
        lower = 0
        nonor_lower = 0
    upper = max(upper, lower, nonor_lower)
    return DensityGenusBounds(
        genus_lower=lower,
        genus_upper=upper,
        nonorientable_lower=nonor_lower,
        nonorientable_upper=upper,
    )


def genus_lower_girth5(n: int, delta: int, girth_value: int | float) -> int | None:
    """Cubic-in-delta genus lower bound; only meaningful at girth >= 5."""
    if girth_value < 5:
        return None
    by_n = math.ceil(Fraction(3 * delta - 10, 10) * n)
    by_cubic = math.ceil(Fraction(3 * delta**3 - 10 * delta**2, 10))
    return max(by_n, by_cubic, 0)


@dataclass(frozen=True)
class CopUppers:
    """The three cop-number upper bounds at a given genus."""

    two_g_plus_3: int
    schroder: int
    conjectured: int


def cop_upper_from_genus(genus: int) -> CopUppers:
    """(2g+3, floor(3g/2)+3, g+3); the last is conjectural only."""
    if genus < 0:
        raise ValueError(f"genus must be >= 0, got {genus}")
    return CopUppers(
        two_g_plus_3=2 * genus + 3,
        schroder=(3 * genus) // 2 + 3,
        conjectured=genus + 3,
    )


@dataclass(frozen=True)
class BklIndicators:
    """Finite-n evaluations of the random-graph cop-number bounds.

    The o(1) and a.a.s. qualifiers are dropped, so these are indicators,
    never guarantees; hypothesis_ok records whether p >= 2.1*ln(n)/n.
    Logarithms are natural.
    """

    lower: float
    upper: float
    hypothesis_ok: bool


def bkl_indicators(n: int, p: float) -> BklIndicators:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0 < p <= 1:
        raise ValueError(f"p must be in (0, 1], got {p}")
    return BklIndicators(
        lower=(n * p) ** -2 * math.sqrt(n),
        upper=160000.0 * math.sqrt(n) * math.log(n),
        hypothesis_ok=p >= 2.1 * math.log(n) / n,
    )


@dataclass
class BoundReport:
    """Every closed-form bound evaluated on one graph."""

    n: int
    e: int
    alpha: Fraction
    delta: int
    girth: int | float
    connected: bool
    components_summed: bool
    c_lower_girth5: Bound
    genus_lower: Bound
    genus_upper: Bound
    nonorientable_lower: Bound
    nonorientable_upper: Bound
    genus_lower_girth5: Bound
    c_upper_2g3: Bound
    c_upper_schroder: Bound
    c_upper_conjectured: Bound
    bkl_lower_indicator: Bound
    bkl_upper_indicator: Bound
    cop_upper_basis: str  # "known-genus" | "genus-upper-bound"
    bkl_hypothesis_ok: bool | None
    certificate: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "alpha": {"num": self.alpha.numerator, "den": self.alpha.denominator},
            "delta": self.delta,
            "girth": None if math.isinf(self.girth) else self.girth,
            "connected": self.connected,
            "components_summed": self.components_summed,
            "bounds": {
                "c_lower_girth5": self.c_lower_girth5.to_json(),
                "genus_lower": self.genus_lower.to_json(),
                "genus_upper": self.genus_upper.to_json(),
                "nonorientable_lower": self.nonorientable_lower.to_json(),
                "nonorientable_upper": self.nonorientable_upper.to_json(),
                "genus_lower_girth5": self.genus_lower_girth5.to_json(),
                "c_upper_2g3": self.c_upper_2g3.to_json(),
                "c_upper_schroder": self.c_upper_schroder.to_json(),
                "c_upper_conjectured": self.c_upper_conjectured.to_json(),
                "bkl_lower_indicator": self.bkl_lower_indicator.to_json(),
                "bkl_upper_indicator": self.bkl_upper_indicator.to_json(),
            },
            "cop_upper_basis": self.cop_upper_basis,
            "bkl_hypothesis_ok": self.bkl_hypothesis_ok,
            "log_base": "natural",
            "certificate": self.certificate,
        }


def full_report(
    g: Graph,
    known_genus: int | None = None,
    p: float | None = None,
) -> BoundReport:
    """Evaluate all bounds on g.

    Density bounds assume a connected graph; on a disconnected input they
    are applied per component and summed (genus is additive over
    components), flagged via components_summed.  Cop-number uppers use
    known_genus when supplied, otherwise the density genus upper bound.
    The certificate checks internal consistency of the proven bounds; the
    conjectural and indicator values never participate.
    """
    m = metrics(g)
    if m.connected:
        density = genus_bounds_from_density(g.n, g.edge_count)
        summed = False
    else:
        parts = [genus_bounds_from_density(c.n, c.edge_count) for c, _ in components(g)]
        density = DensityGenusBounds(
            genus_lower=sum(x.genus_lower for x in parts),
            genus_upper=sum(x.genus_upper for x in parts),
            nonorientable_lower=sum(x.nonorientable_lower for x in parts),
            nonorientable_upper=sum(x.nonorientable_upper for x in parts),
        )
        summed = True

    c_lower = girth5_cop_lower(m)
    g5_genus = genus_lower_girth5(g.n, m.min_degree, m.girth)

    if known_genus is not None:
        basis_genus = known_genus
        basis = "known-genus"
    else:
        basis_genus = density.genus_upper
        basis = "genus-upper-bound"
    uppers = cop_upper_from_genus(basis_genus)

    if p is not None:
        bkl = bkl_indicators(g.n, p)
        bkl_lower = Bound(bkl.lower, ASYMPTOTIC, SRC_BKL)
        bkl_upper = Bound(bkl.upper, ASYMPTOTIC, SRC_BKL)
        hypothesis_ok: bool | None = bkl.hypothesis_ok
    else:
        bkl_lower = Bound(None, ASYMPTOTIC, SRC_BKL, applicable=False)
        bkl_upper = Bound(None, ASYMPTOTIC, SRC_BKL, applicable=False)
        hypothesis_ok = None

    certificate = (
        density.genus_lower <= density.genus_upper
        and density.nonorientable_lower <= density.nonorientable_upper
    )
    if c_lower is not None:
        certificate = certificate and c_lower <= min(
            uppers.two_g_plus_3, uppers.schroder
        )

    return BoundReport(
        n=g.n,
        e=g.edge_count,
        alpha=m.alpha,
        delta=m.min_degree,
        girth=m.girth,
        connected=m.connected,
        components_summed=summed,
        c_lower_girth5=(
            Bound(c_lower, PROVEN, SRC_GIRTH5_COP)
            if c_lower is not None
            else Bound(None, PROVEN, SRC_GIRTH5_COP, applicable=False)
        ),
        genus_lower=Bound(density.genus_lower, PROVEN, SRC_DENSITY_GENUS),
        genus_upper=Bound(density.genus_upper, PROVEN, SRC_DENSITY_GENUS),
        nonorientable_lower=Bound(
            density.nonorientable_lower, PROVEN, SRC_DENSITY_NONORIENTABLE
        ),
        nonorientable_upper=Bound(
            density.nonorientable_upper, PROVEN, SRC_DENSITY_NONORIENTABLE
        ),
        genus_lower_girth5=(
            Bound(g5_genus, PROVEN, SRC_GIRTH5_GENUS)
            if g5_genus is not None
            else Bound(None, PROVEN, SRC_GIRTH5_GENUS, applicable=False)
        ),
        c_upper_2g3=Bound(uppers.two_g_plus_3, PROVEN, SRC_2G3),
        c_upper_schroder=Bound(uppers.schroder, PROVEN, SRC_SCHRODER),
        c_upper_conjectured=Bound(uppers.conjectured, CONJECTURAL, SRC_SCHRODER_CONJ),
        bkl_lower_indicator=bkl_lower,
        bkl_upper_indicator=bkl_upper,
        cop_upper_basis=basis,
        bkl_hypothesis_ok=hypothesis_ok,
        certificate=certificate,
    )
