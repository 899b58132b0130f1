"""Rank-difference classification of mixed graphs.

For a mixed graph with Hermitian rank rk, underlying rank r and cycle-space
dimension d, the difference rk - r always lies in [-2d, 2d].  The extremes
admit purely structural characterizations; this module evaluates both the
rank-based and the condition-based verdicts so they can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import MixedGraph, UnderlyingGraph, components, underlying
from .linalg import (
    GI_I,
    adjacency_matrix,
    exact_rank,
    hermitian_matrix,
    skew_adjacency_matrix,
)
from .structure import (
    ContractionPair,
    CycleSet,
    DeltaTrace,
    contract_cycles,
    crucial_subgraph_exists,
    cycle_space_dim,
    detect_cycles,
    matching_number,
    traversal_counts,
)


def h_rank(g: MixedGraph) -> int:
    """Rank of the Hermitian adjacency matrix."""
    return exact_rank(hermitian_matrix(g))


def graph_rank(g: UnderlyingGraph) -> int:
    """Rank of the 0/1 adjacency matrix."""
    return exact_rank(adjacency_matrix(g))


def cycle_h_rank_formula(l: int, eta: int) -> int:
    """Closed form for the Hermitian rank of a single cycle of length ``l``
    with signature ``eta``."""
    if l < 3:
        raise ValueError(f"cycle length must be at least 3, got {l}")
    if not 0 <= eta <= l:
        raise ValueError(f"signature must lie in 0..{l}, got {eta}")
    if l % 2 == 1:
        return l - 1 if eta % 2 == 1 else l
    if eta % 2 == 1:
        return l
    return l - 2 if (l + eta) % 4 == 0 else l


def cycle_rank_formula(n: int) -> int:
    """Adjacency rank of the plain cycle C_n: n - 2 when 4 | n, else n."""
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    return n - 2 if n % 4 == 0 else n


@dataclass(frozen=True)
class UnderlyingProfile:
    """Orientation-independent invariants of an underlying graph.

    Computing these once lets a sweep reuse them across all orientations of
    the same graph.
    """

    graph: UnderlyingGraph
    r: int
    d: int
    m: int
    omega: int
    cycle_set: CycleSet
    delta_reachable: bool
    delta_trace: Optional[DeltaTrace]
    contraction: Optional[ContractionPair]
    m_contracted: Optional[int]
    m_bracket: Optional[int]


def underlying_profile(g: UnderlyingGraph) -> UnderlyingProfile:
    cs = detect_cycles(g)
    reachable, trace = crucial_subgraph_exists(g)
    contraction = None
    m_t = m_b = None
    if cs.pairwise_disjoint and cs.cycles:
        contraction = contract_cycles(g, cs)
        m_t = matching_number(contraction.t_graph)
        m_b = matching_number(contraction.bracket_graph)
    return UnderlyingProfile(
        graph=g,
        r=graph_rank(g),
        d=cycle_space_dim(g),
        m=matching_number(g),
        omega=len(components(g)),
        cycle_set=cs,
        delta_reachable=reachable,
        delta_trace=trace,
        contraction=contraction,
        m_contracted=m_t,
        m_bracket=m_b,
    )


@dataclass(frozen=True)
class CycleRecord:
    """Per-cycle data: length, arc counts, signature and class verdicts."""

    vertices: tuple[int, ...]
    length: int
    forward: int
    backward: int
    eta: int
    sign: Optional[int]  # +1/-1 when every cycle edge is an arc, else None
    upper_class_ok: bool  # length 0 mod 4 and eta odd or 2 mod 4
    lower_class_ok: bool  # length 2 mod 4 and eta 2 mod 4


@dataclass(frozen=True)
class ConditionDetail:
    """Per-clause breakdown of the structural characterizations."""

    cycles_disjoint: bool
    upper_cycle_classes: Optional[bool]  # None when cycles are not disjoint
    lower_cycle_classes: Optional[bool]
    delta_reachable: bool
    delta_trace: Optional[DeltaTrace]
    cycles: tuple[CycleRecord, ...]


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    rk: int
    r: int
    d: int
    m: int
    omega: int
    diff: int
    bound_ok: bool
    upper_by_rank: bool
    lower_by_rank: bool
    upper_by_conditions: bool
    lower_by_conditions: bool
    detail: ConditionDetail

    def to_dict(self) -> dict:
        return {
            "rk": self.rk,
            "r": self.r,
            "d": self.d,
            "m": self.m,
            "diff": self.diff,
            "upper_rank": self.upper_by_rank,
            "upper_cond": self.upper_by_conditions,
            "lower_rank": self.lower_by_rank,
            "lower_cond": self.lower_by_conditions,
            "cycles": [
                {"l": c.length, "eta": c.eta, "sign": c.sign}
                for c in self.detail.cycles
            ],
        }


def _cycle_record(g: MixedGraph, cyc: tuple[int, ...]) -> CycleRecord:
    f, b = traversal_counts(g, cyc)
    eta = abs(f - b)
    l = len(cyc)
    sign = (-1) ** b if f + b == l else None
    return CycleRecord(
        vertices=cyc,
        length=l,
        forward=f,
        backward=b,
        eta=eta,
        sign=sign,
        upper_class_ok=(l % 4 == 0 and (eta % 2 == 1 or eta % 4 == 2)),
        lower_class_ok=(l % 4 == 2 and eta % 4 == 2),
    )


def classify(g: MixedGraph, profile: Optional[UnderlyingProfile] = None) -> ClassificationReport:
    """Full invariant report with both rank-based and structural verdicts.

    ``profile`` may carry precomputed underlying-graph invariants (it must
    describe ``underlying(g)``); passing it amortizes the orientation-
    independent work across many orientations of one graph.
    """
    prof = profile if profile is not None else underlying_profile(underlying(g))
    rk = h_rank(g)
    diff = rk - prof.r
    disjoint = prof.cycle_set.pairwise_disjoint
    records = tuple(
        _cycle_record(g, cyc) for cyc in (prof.cycle_set.cycles if disjoint else ())
    )
    upper_classes = all(c.upper_class_ok for c in records) if disjoint else None
    lower_classes = all(c.lower_class_ok for c in records) if disjoint else None
    detail = ConditionDetail(
        cycles_disjoint=disjoint,
        upper_cycle_classes=upper_classes,
        lower_cycle_classes=lower_classes,
        delta_reachable=prof.delta_reachable,
        delta_trace=prof.delta_trace,
        cycles=records,
    )
    return ClassificationReport(
        n=g.n,
        rk=rk,
        r=prof.r,
        d=prof.d,
        m=prof.m,
        omega=prof.omega,
        diff=diff,
        bound_ok=-2 * prof.d <= diff <= 2 * prof.d,
        upper_by_rank=diff == 2 * prof.d,
        lower_by_rank=diff == -2 * prof.d,
        upper_by_conditions=bool(disjoint and upper_classes and prof.delta_reachable),
        lower_by_conditions=bool(disjoint and lower_classes and prof.delta_reachable),
        detail=detail,
    )


@dataclass(frozen=True)
class OrientedReport:
    """Classification of a fully oriented graph plus skew-rank verdicts."""

    report: ClassificationReport
    sr: int
    upper_by_corollary: bool
    lower_by_corollary: bool


def classify_oriented(
    g: MixedGraph, profile: Optional[UnderlyingProfile] = None
) -> OrientedReport:
    """Classification specialized to oriented graphs (no undirected edges).

    Verifies H = i*S entrywise and that the skew rank equals the Hermitian
    rank; a mismatch would mean broken arithmetic and raises.  The corollary
    verdicts restate the structural conditions through cycle signs: a cycle
    is oddly (evenly) oriented when the product of its skew entries along
    the traversal is negative (positive).
    """
    if not g.is_oriented():
        raise ValueError("graph is not fully oriented")
    report = classify(g, profile)
    skew = skew_adjacency_matrix(g)
    if hermitian_matrix(g) != skew.scalar_mul(GI_I):
        raise ArithmeticError("Hermitian matrix does not equal i times skew matrix")
    sr = exact_rank(skew)
    if sr != report.rk:
        raise ArithmeticError("skew rank disagrees with Hermitian rank")
    disjoint = report.detail.cycles_disjoint
    upper = lower = False
    if disjoint:
        upper = report.detail.delta_reachable and all(
            c.sign == -1 and c.length % 4 == 0 for c in report.detail.cycles
        )
        lower = report.detail.delta_reachable and all(
            c.sign == 1 and c.length % 4 == 2 for c in report.detail.cycles
        )
    return OrientedReport(
        report=report,
        sr=sr,
        upper_by_corollary=upper,
        lower_by_corollary=lower,
    )
