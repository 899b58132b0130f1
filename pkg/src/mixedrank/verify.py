"""Brute-force oracles and exhaustive verification sweeps.

Everything the rest of the package computes cleverly is recomputed here the
dumb way: ranks by minor search, matchings by edge-subset recursion,
characteristic-polynomial coefficients by subgraph sums.  The sweep driver
enumerates small graphs with every one of their 3^|E| orientations and
tallies each structural identity, recording failing instances by graph6
string plus orientation code.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from multiprocessing import Pool
from typing import Iterator, Optional

from .classify import (
    ClassificationReport,
    UnderlyingProfile,
    classify,
    classify_oriented,
    cycle_h_rank_formula,
    h_rank,
    underlying_profile,
)
from .graphs import (
    MixedGraph,
    UnderlyingGraph,
    components,
    delete_vertices,
    encode_graph6,
    pendant_vertices,
    quasi_pendant_vertices,
    underlying,
)
from .linalg import (
    GaussianInt,
    GaussianMatrix,
    adjacency_matrix,
    char_poly,
    exact_rank,
    hermitian_matrix,
)
from .structure import (
    cycle_space_dim,
    matching_number,
    signature,
    vertex_cycle_classes,
)


class EdgeCapExceededError(ValueError):
    """Enumeration request beyond the configured edge cap."""


# ---------------------------------------------------------------------------
# Orientation codes and instance enumeration
# ---------------------------------------------------------------------------

def sorted_edges(g: UnderlyingGraph) -> list[tuple[int, int]]:
    return sorted(g.edges)


def encode_orientation(g: MixedGraph) -> str:
    """Base-3 digit string over the sorted underlying edges.

    0 = undirected, 1 = arc min->max, 2 = arc max->min.
    """
    digits = []
    for u, v in sorted_edges(underlying(g)):
        if (u, v) in g.undirected_edges:
            digits.append("0")
        elif (u, v) in g.arcs:
            digits.append("1")
        else:
            digits.append("2")
    return "".join(digits)


def decode_orientation(g: UnderlyingGraph, code: str) -> MixedGraph:
    edges = sorted_edges(g)
    if len(code) != len(edges):
        raise ValueError(f"orientation code needs {len(edges)} digits, got {len(code)}")
    undirected = []
    arcs = []
    for digit, (u, v) in zip(code, edges):
        if digit == "0":
            undirected.append((u, v))
        elif digit == "1":
            arcs.append((u, v))
        elif digit == "2":
            arcs.append((v, u))
        else:
            raise ValueError(f"orientation digit must be 0, 1 or 2, got {digit!r}")
    return MixedGraph(g.n, frozenset(undirected), frozenset(arcs))


def _orientations_with_codes(
    g: UnderlyingGraph, cap_edges: int = 20
) -> Iterator[tuple[str, MixedGraph]]:
    edges = sorted_edges(g)
    if len(edges) > cap_edges:
        raise EdgeCapExceededError(
            f"{len(edges)} edges exceeds enumeration cap of {cap_edges}"
        )
    n = g.n
    for digits in product("012", repeat=len(edges)):
        undirected = []
        arcs = []
        for digit, (u, v) in zip(digits, edges):
            if digit == "0":
                undirected.append((u, v))
            elif digit == "1":
                arcs.append((u, v))
            else:
                arcs.append((v, u))
        yield "".join(digits), MixedGraph(n, frozenset(undirected), frozenset(arcs))


def enumerate_orientations(g: UnderlyingGraph, cap_edges: int = 20) -> Iterator[MixedGraph]:
    """All 3^|E| mixed graphs over g, in orientation-code order."""
    for _, mixed in _orientations_with_codes(g, cap_edges):
        yield mixed


def all_labeled_graphs(n: int) -> Iterator[UnderlyingGraph]:
    """Every labeled simple graph on vertices 0..n-1, by edge-subset mask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        yield UnderlyingGraph(n, edges)


def random_underlying_graph(n: int, rng: random.Random) -> UnderlyingGraph:
    edges = frozenset(p for p in combinations(range(n), 2) if rng.random() < 0.5)
    return UnderlyingGraph(n, edges)


def random_orientation_code(edge_count: int, rng: random.Random) -> str:
    return "".join(rng.choice("012") for _ in range(edge_count))


# ---------------------------------------------------------------------------
# Unlabeled trees, by leaf extension with a canonical-form filter
# ---------------------------------------------------------------------------

def _tree_canonical(g: UnderlyingGraph) -> str:
    adj = g.adjacency()
    if g.n == 1:
        return "()"
    deg = {v: len(adj[v]) for v in range(g.n)}
    alive = set(range(g.n))
    leaves = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in leaves:
            alive.discard(v)
            for u in adj[v]:
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        leaves = nxt

    def encode(v: int, parent: int) -> str:
        subs = sorted(encode(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, -1) for c in alive)


def unlabeled_trees(n_max: int) -> dict[int, list[UnderlyingGraph]]:
    """All trees up to isomorphism, keyed by order, grown leaf by leaf."""
    out: dict[int, list[UnderlyingGraph]] = {1: [UnderlyingGraph(1, frozenset())]}
    for n in range(2, n_max + 1):
        seen: set[str] = set()
        level: list[UnderlyingGraph] = []
        for base in out[n - 1]:
            for v in range(base.n):
                edges = set(base.edges)
                edges.add((v, n - 1))
                cand = UnderlyingGraph(n, frozenset(edges))
                key = _tree_canonical(cand)
                if key not in seen:
                    seen.add(key)
                    level.append(cand)
        out[n] = level
    return out


# ---------------------------------------------------------------------------
# Subgraph-sum coefficient oracles
# ---------------------------------------------------------------------------

def _cycle_covers(adj: list[int], arc_set, n: int, track_eta: bool):
    """Cover-sum function over vertex bitmasks.

    Returns f where f(mask) is the signed weighted sum over partitions of
    mask into single edges and cycles (even signature only when track_eta).
    Weights per component: edge -1; cycle -2, except +2 for signature
    2 mod 4 in the Hermitian case.
    """
    memo: dict[int, int] = {0: 1}

    def arc_delta(w: int, u: int) -> int:
        if (w, u) in arc_set:
            return 1
        if (u, w) in arc_set:
            return -1
        return 0

    def f(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        total = 0
        m = adj[v] & rest
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            total -= f(rest & ~(1 << u))
        # Simple cycles through v inside mask: grow a path v -> a -> ... -> w
        # and close when w is adjacent to v.  Each cycle is seen once per
        # direction, so keep only traversals with first step a < endpoint w.
        starts = adj[v] & rest
        while starts:
            a = (starts & -starts).bit_length() - 1
            starts &= starts - 1
            stack = [(a, (1 << v) | (1 << a), arc_delta(v, a) if track_eta else 0)]
            while stack:
                w, used, bal = stack.pop()
                if w > a and used.bit_count() >= 3 and adj[w] >> v & 1:
                    eta = abs(bal + arc_delta(w, v)) if track_eta else 0
                    if not (track_eta and eta % 2 == 1):
                        weight = 2 if eta % 4 == 2 else -2
                        total += weight * f(mask & ~used)
                nxt = adj[w] & rest & ~used
                while nxt:
                    u = (nxt & -nxt).bit_length() - 1
                    nxt &= nxt - 1
                    nb = (bal + arc_delta(w, u)) if track_eta else 0
                    stack.append((u, used | (1 << u), nb))
        memo[mask] = total
        return total

    return f


def basic_subgraph_coefficient(g: MixedGraph, j: int) -> int:
    """Signed sum over subgraphs on j vertices whose components are single
    edges or even-signature cycles; equals the j-th characteristic
    coefficient of the Hermitian matrix."""
    if not 1 <= j <= g.n:
        raise ValueError(f"order must lie in 1..{g.n}, got {j}")
    und = underlying(g)
    f = _cycle_covers(und.adjacency_masks(), g.arcs, g.n, track_eta=True)
    return sum(
        f(sum(1 << v for v in sub)) for sub in combinations(range(g.n), j)
    )


def elementary_subgraph_coefficient(g: UnderlyingGraph, j: int) -> int:
    """Signed sum over subgraphs on j vertices whose components are single
    edges or cycles; equals the j-th adjacency characteristic coefficient."""
    if not 1 <= j <= g.n:
        raise ValueError(f"order must lie in 1..{g.n}, got {j}")
    f = _cycle_covers(g.adjacency_masks(), frozenset(), g.n, track_eta=False)
    return sum(
        f(sum(1 << v for v in sub)) for sub in combinations(range(g.n), j)
    )


# ---------------------------------------------------------------------------
# Independent brute-force oracles
# ---------------------------------------------------------------------------

def brute_force_matching_number(g: UnderlyingGraph, max_edges: int = 25) -> int:
    """Maximum matching by include/exclude recursion over the edge list."""
    edges = sorted_edges(g)
    if len(edges) > max_edges:
        raise EdgeCapExceededError(
            f"{len(edges)} edges exceeds brute-force cap of {max_edges}"
        )

    def rec(idx: int, used: int) -> int:
        best = 0
        for k in range(idx, len(edges)):
            u, v = edges[k]
            if used >> u & 1 or used >> v & 1:
                continue
            cand = 1 + rec(k + 1, used | 1 << u | 1 << v)
            if cand > best:
                best = cand
        return best

    return rec(0, 0)


def count_maximum_matchings(g: UnderlyingGraph) -> int:
    """Number of maximum matchings, by exhaustive enumeration."""
    if g.n > 16:
        raise EdgeCapExceededError("matching count oracle capped at 16 vertices")
    adj = g.adjacency_masks()
    memo: dict[int, dict[int, int]] = {}

    def counts(mask: int) -> dict[int, int]:
        while mask:
            v = (mask & -mask).bit_length() - 1
            if adj[v] & mask:
                break
            mask &= mask - 1
        else:
            return {0: 1}
        hit = memo.get(mask)
        if hit is not None:
            return hit
        rest = mask & ~(1 << v)
        acc = dict(counts(rest))
        m = adj[v] & mask
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            for size, cnt in counts(rest & ~(1 << u)).items():
                acc[size + 1] = acc.get(size + 1, 0) + cnt
        memo[mask] = acc
        return acc

    table = counts((1 << g.n) - 1) if g.n else {0: 1}
    return table[max(table)]


def gaussian_determinant(M: GaussianMatrix) -> GaussianInt:
    """Determinant by Laplace expansion; independent of the elimination path."""
    if not M.is_square():
        raise ValueError("determinant needs a square matrix")

    def det(rows: list[list[GaussianInt]]) -> GaussianInt:
        k = len(rows)
        if k == 0:
            return GaussianInt(1, 0)
        if k == 1:
            return rows[0][0]
        total = GaussianInt(0, 0)
        for col in range(k):
            a = rows[0][col]
            if not a:
                continue
            minor = [r[:col] + r[col + 1:] for r in rows[1:]]
            term = a * det(minor)
            total = total + term if col % 2 == 0 else total - term
        return total

    return det([list(row) for row in M.entries])


def minor_rank(M: GaussianMatrix) -> int:
    """Largest k with a nonzero k-by-k minor, by exhaustive search."""
    for k in range(min(M.rows, M.cols), 0, -1):
        for rows_idx in combinations(range(M.rows), k):
            for cols_idx in combinations(range(M.cols), k):
                sub = GaussianMatrix.from_rows(
                    [[M.entry(i, j) for j in cols_idx] for i in rows_idx]
                )
                if gaussian_determinant(sub):
                    return k
    return 0


def random_hermitian_matrix(n: int, rng: random.Random) -> GaussianMatrix:
    """Random Hermitian matrix with entries from {0, +-1, +-i}."""
    grid = [[GaussianInt(0, 0)] * n for _ in range(n)]
    off = [
        GaussianInt(0, 0),
        GaussianInt(1, 0),
        GaussianInt(-1, 0),
        GaussianInt(0, 1),
        GaussianInt(0, -1),
    ]
    for i in range(n):
        grid[i][i] = GaussianInt(rng.choice((-1, 0, 1)), 0)
        for j in range(i + 1, n):
            x = rng.choice(off)
            grid[i][j] = x
            grid[j][i] = x.conjugate()
    return GaussianMatrix(n, n, tuple(tuple(row) for row in grid))


# ---------------------------------------------------------------------------
# Sweep harness
# ---------------------------------------------------------------------------

@dataclass
class Failure:
    check: str
    n: int
    graph6: str
    orientation: str
    detail: str


@dataclass
class SweepReport:
    mode: str
    n_max: int
    seed: int
    samples: int
    graphs: int = 0
    instances: int = 0
    tallies: dict = field(default_factory=dict)  # name -> [passed, failed]
    failures: list = field(default_factory=list)
    failures_truncated: bool = False
    wall_time: float = 0.0

    def all_passed(self) -> bool:
        return all(f == 0 for _, f in self.tallies.values())

    def failed_count(self) -> int:
        return sum(f for _, f in self.tallies.values())

    def to_text(self) -> str:
        lines = [
            f"sweep mode={self.mode} n_max={self.n_max} seed={self.seed} samples={self.samples}",
            f"graphs={self.graphs} instances={self.instances}",
        ]
        for name in sorted(self.tallies):
            p, f = self.tallies[name]
            lines.append(f"check {name}: pass={p} fail={f}")
        for rec in self.failures:
            lines.append(
                f"failure {rec.check} n={rec.n} graph6={rec.graph6} "
                f"orientation={rec.orientation} {rec.detail}"
            )
        if self.failures_truncated:
            lines.append("failure list truncated")
        lines.append("result: " + ("PASS" if self.all_passed() else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n_max": self.n_max,
            "seed": self.seed,
            "samples": self.samples,
            "graphs": self.graphs,
            "instances": self.instances,
            "checks": {k: {"pass": p, "fail": f} for k, (p, f) in sorted(self.tallies.items())},
            "failures": [
                {
                    "check": r.check,
                    "n": r.n,
                    "graph6": r.graph6,
                    "orientation": r.orientation,
                    "detail": r.detail,
                }
                for r in self.failures
            ],
            "failures_truncated": self.failures_truncated,
            "all_passed": self.all_passed(),
        }


class _Recorder:
    """Accumulates check outcomes; keeps every tally but few failure rows."""

    def __init__(self, limit: int = 50):
        self.tallies: dict[str, list[int]] = {}
        self.failures: list[Failure] = []
        self.limit = limit

    def record(self, check: str, ok: bool, n: int, g6: str, code: str, detail: str = ""):
        t = self.tallies.setdefault(check, [0, 0])
        if ok:
            t[0] += 1
        else:
            t[1] += 1
            if len(self.failures) < self.limit:
                self.failures.append(Failure(check, n, g6, code, detail))


@dataclass
class _GraphContext:
    """Per-underlying-graph precomputation shared by all orientations."""

    graph: UnderlyingGraph
    profile: UnderlyingProfile
    g6: str
    cycle_class: list[int]
    pendant_pairs: list[tuple[int, int]]
    quasi_pendants: set[int]
    component_vertices: list[list[int]]
    component_graphs: list[UnderlyingGraph]
    component_r: list[int]
    component_d: list[int]
    deletion_cache: dict[int, tuple[int, int]]  # x -> (r(G-x), d(G-x))


def _make_context(g: UnderlyingGraph) -> _GraphContext:
    prof = underlying_profile(g)
    adj = g.adjacency()
    pend = sorted(pendant_vertices(g))
    pend_pairs = [(x, next(iter(adj[x]))) for x in pend]
    comp_vertices: list[list[int]] = []
    comp_graphs: list[UnderlyingGraph] = []
    comp_r: list[int] = []
    comp_d: list[int] = []
    if prof.omega > 1:
        for comp in components(g):
            verts = sorted(comp)
            others = [v for v in range(g.n) if v not in comp]
            sub, _ = delete_vertices(g, others)
            comp_vertices.append(verts)
            comp_graphs.append(sub)
            comp_r.append(exact_rank(adjacency_matrix(sub)))
            comp_d.append(cycle_space_dim(sub))
    return _GraphContext(
        graph=g,
        profile=prof,
        g6=encode_graph6(g),
        cycle_class=vertex_cycle_classes(g),
        pendant_pairs=pend_pairs,
        quasi_pendants=quasi_pendant_vertices(g),
        component_vertices=comp_vertices,
        component_graphs=comp_graphs,
        component_r=comp_r,
        component_d=comp_d,
        deletion_cache={},
    )


def _graph_checks(ctx: _GraphContext, rec: _Recorder) -> None:
    g = ctx.graph
    prof = ctx.profile
    g6 = ctx.g6
    n, r, d, m = g.n, prof.r, prof.d, prof.m

    rec.record(
        "adjacency_matching_bounds",
        -2 * d <= r - 2 * m <= d,
        n, g6, "", f"r={r} m={m} d={d}",
    )

    disjoint = prof.cycle_set.pairwise_disjoint
    lengths = [len(c) for c in prof.cycle_set.cycles] if disjoint else []
    mt_eq = (prof.m_contracted == prof.m_bracket) if prof.contraction else True
    left_cond = disjoint and all(l % 4 == 0 for l in lengths) and mt_eq
    right_cond = disjoint and all(l % 2 == 1 for l in lengths) and mt_eq
    rec.record(
        "adjacency_matching_left_characterization",
        (r - 2 * m == -2 * d) == left_cond,
        n, g6, "", f"r={r} m={m} d={d}",
    )
    rec.record(
        "adjacency_matching_right_characterization",
        (r - 2 * m == d) == right_cond,
        n, g6, "", f"r={r} m={m} d={d}",
    )

    ok = True
    for v in range(n):
        sub, _ = delete_vertices(g, {v})
        if not m - 1 <= matching_number(sub) <= m:
            ok = False
            break
    rec.record("matching_vertex_deletion", ok, n, g6, "", "")

    ok = True
    for x, y in ctx.pendant_pairs:
        sub_y, _ = delete_vertices(g, {y})
        sub_xy, _ = delete_vertices(g, {x, y})
        if not (m == matching_number(sub_y) + 1 == matching_number(sub_xy) + 1):
            ok = False
            break
    rec.record("pendant_matching_reduction", ok, n, g6, "", "")

    ok = True
    for v in range(n):
        sub, _ = delete_vertices(g, {v})
        dv = cycle_space_dim(sub)
        cls = ctx.cycle_class[v]
        if cls == 0 and dv != d:
            ok = False
        elif cls >= 1 and dv > d - 1:
            ok = False
        elif cls == 3 and dv > d - 2:
            ok = False
        if not ok:
            break
    rec.record("cycle_space_vertex_deletion", ok, n, g6, "", "")

    if prof.contraction and mt_eq:
        clean = all(
            v not in ctx.quasi_pendants for cyc in prof.cycle_set.cycles for v in cyc
        )
        rec.record("quasi_pendant_exclusion", clean, n, g6, "", "")

    if prof.contraction and all(l % 2 == 1 for l in lengths):
        lhs = mt_eq
        rhs = m == sum(l // 2 for l in lengths) + prof.m_bracket
        rec.record("odd_cycle_matching_identity", lhs == rhs, n, g6, "", "")

    if n <= 6:
        psi = char_poly(adjacency_matrix(g))
        rec.record(
            "adjacency_rank_nullity",
            r == n - psi.zero_root_multiplicity(),
            n, g6, "", f"r={r}",
        )


def _deleted_underlying(ctx: _GraphContext, x: int) -> tuple[int, int]:
    hit = ctx.deletion_cache.get(x)
    if hit is None:
        sub, _ = delete_vertices(ctx.graph, {x})
        hit = (exact_rank(adjacency_matrix(sub)), cycle_space_dim(sub))
        ctx.deletion_cache[x] = hit
    return hit


def _orientation_checks(
    ctx: _GraphContext,
    mixed: MixedGraph,
    code: str,
    rec: _Recorder,
    idx: int,
    thorough: bool,
) -> None:
    g6 = ctx.g6
    prof = ctx.profile
    n = mixed.n
    report = classify(mixed, prof)
    rk, r, d, m = report.rk, report.r, report.d, report.m

    rec.record("bound", report.bound_ok, n, g6, code, f"rk={rk} r={r} d={d}")
    rec.record(
        "upper_equivalence",
        report.upper_by_rank == report.upper_by_conditions,
        n, g6, code,
        f"rank={report.upper_by_rank} cond={report.upper_by_conditions}",
    )
    rec.record(
        "lower_equivalence",
        report.lower_by_rank == report.lower_by_conditions,
        n, g6, code,
        f"rank={report.lower_by_rank} cond={report.lower_by_conditions}",
    )
    rec.record(
        "hermitian_matching_bounds",
        -2 * d <= rk - 2 * m <= d,
        n, g6, code, f"rk={rk} m={m} d={d}",
    )

    if d == 1:
        cyc = report.detail.cycles[0]
        l, eta = cyc.length, cyc.eta
        mt_eq = prof.m_contracted == prof.m_bracket
        rec.record(
            "unicyclic_rank_plus_one",
            (rk == 2 * m + 1) == (l % 2 == 1 and eta % 2 == 0 and mt_eq),
            n, g6, code, f"rk={rk} m={m} l={l} eta={eta}",
        )
        rec.record(
            "unicyclic_rank_minus_two",
            (rk == 2 * m - 2) == (l % 2 == 0 and (eta - l) % 4 == 0 and mt_eq),
            n, g6, code, f"rk={rk} m={m} l={l} eta={eta}",
        )

    if mixed.is_oriented():
        try:
            oriented = classify_oriented(mixed, prof)
            rec.record("oriented_skew_consistency", True, n, g6, code, "")
            rec.record(
                "corollary_upper_equivalence",
                oriented.upper_by_corollary == report.upper_by_rank,
                n, g6, code, "",
            )
            rec.record(
                "corollary_lower_equivalence",
                oriented.lower_by_corollary == report.lower_by_rank,
                n, g6, code, "",
            )
        except ArithmeticError as exc:
            rec.record("oriented_skew_consistency", False, n, g6, code, str(exc))

    if ctx.component_vertices:
        parts = []
        for verts in ctx.component_vertices:
            others = [v for v in range(n) if v not in set(verts)]
            sub, _ = delete_vertices(mixed, others)
            parts.append(h_rank(sub))
        rec.record(
            "component_rank_additivity",
            rk == sum(parts),
            n, g6, code, f"rk={rk} parts={parts}",
        )
        upper_all = all(
            parts[i] - ctx.component_r[i] == 2 * ctx.component_d[i]
            for i in range(len(parts))
        )
        lower_all = all(
            parts[i] - ctx.component_r[i] == -2 * ctx.component_d[i]
            for i in range(len(parts))
        )
        rec.record(
            "component_optimality",
            (report.upper_by_rank == upper_all) and (report.lower_by_rank == lower_all),
            n, g6, code, "",
        )

    if d >= 1 and (report.upper_by_rank or report.lower_by_rank):
        ok = True
        detail = ""
        for x in range(n):
            if ctx.cycle_class[x] == 0:
                continue
            sub, _ = delete_vertices(mixed, {x})
            rk_x = h_rank(sub)
            r_x, d_x = _deleted_underlying(ctx, x)
            good = (
                ctx.cycle_class[x] == 1
                and x not in ctx.quasi_pendants
                and d_x == d - 1
            )
            if report.upper_by_rank:
                good = good and rk_x == rk - 2 and r_x == r and rk_x - r_x == 2 * d_x
            else:
                good = good and rk_x == rk and r_x == r - 2 and rk_x - r_x == -2 * d_x
            if not good:
                ok = False
                detail = f"x={x}"
                break
        name = (
            "upper_optimal_deletion_properties"
            if report.upper_by_rank
            else "lower_optimal_deletion_properties"
        )
        rec.record(name, ok, n, g6, code, detail)

    if ctx.pendant_pairs:
        pairs = ctx.pendant_pairs if thorough else ctx.pendant_pairs[:1]
        ok = True
        for x, y in pairs:
            sub, _ = delete_vertices(mixed, {x, y})
            if h_rank(sub) + 2 != rk:
                ok = False
                break
        rec.record("pendant_rank_reduction", ok, n, g6, code, "")

    if n:
        targets = range(n) if thorough else (idx % n,)
        ok = True
        for x in targets:
            sub, _ = delete_vertices(mixed, {x})
            if not rk - 2 <= h_rank(sub) <= rk:
                ok = False
                break
        rec.record("vertex_deletion_rank", ok, n, g6, code, "")

    if thorough:
        phi = char_poly(hermitian_matrix(mixed))
        rec.record(
            "hermitian_rank_nullity",
            rk == n - phi.zero_root_multiplicity(),
            n, g6, code, f"rk={rk}",
        )


def _process_graph(args) -> tuple[int, dict, list, bool]:
    n, edges, codes = args
    g = UnderlyingGraph(n, frozenset(edges))
    ctx = _make_context(g)
    rec = _Recorder()
    _graph_checks(ctx, rec)
    thorough = n <= 4
    instances = 0
    if codes is None:
        for idx, (code, mixed) in enumerate(_orientations_with_codes(g)):
            _orientation_checks(ctx, mixed, code, rec, idx, thorough)
            instances += 1
    else:
        for idx, code in enumerate(codes):
            mixed = decode_orientation(g, code)
            _orientation_checks(ctx, mixed, code, rec, idx, thorough)
            instances += 1
    return instances, rec.tallies, rec.failures, len(rec.failures) >= rec.limit


def _process_samples(args) -> tuple[int, dict, list, bool]:
    specs = args
    rec = _Recorder()
    instances = 0
    for n, edges, code in specs:
        g = UnderlyingGraph(n, frozenset(edges))
        ctx = _make_context(g)
        _graph_checks(ctx, rec)
        mixed = decode_orientation(g, code)
        _orientation_checks(ctx, mixed, code, rec, 0, n <= 4)
        instances += 1
    return instances, rec.tallies, rec.failures, len(rec.failures) >= rec.limit


def _merge(report: SweepReport, results, graphs_per_task, failure_limit: int) -> None:
    for (instances, tallies, failures, truncated), gcount in zip(results, graphs_per_task):
        report.instances += instances
        report.graphs += gcount
        for name, (p, f) in tallies.items():
            t = report.tallies.setdefault(name, [0, 0])
            t[0] += p
            t[1] += f
        for rec in failures:
            if len(report.failures) < failure_limit:
                report.failures.append(rec)
            else:
                report.failures_truncated = True
        if truncated:
            report.failures_truncated = True


def sweep(
    n_max: int,
    mode: str = "exhaustive",
    seed: int = 0,
    samples: int = 10000,
    threads: int = 1,
    cap_edges: int = 20,
    failure_limit: int = 200,
) -> SweepReport:
    """Run every structural check over an instance family.

    Exhaustive mode covers every labeled graph on up to ``n_max`` vertices
    (capped at 5) with all of its orientations.  Sampled mode draws
    ``samples`` random (graph, orientation) instances on exactly ``n_max``
    vertices from the seeded generator.
    """
    start = time.perf_counter()
    if mode == "exhaustive":
        if n_max > 5:
            raise ValueError("exhaustive sweeps are capped at n_max=5")
        report = SweepReport(mode=mode, n_max=n_max, seed=seed, samples=0)
        tasks = []
        for n in range(1, n_max + 1):
            for g in all_labeled_graphs(n):
                if len(g.edges) > cap_edges:
                    raise EdgeCapExceededError("edge cap exceeded during enumeration")
                tasks.append((n, tuple(sorted_edges(g)), None))
        worker = _process_graph
        graphs_per_task = [1] * len(tasks)
    elif mode == "sampled":
        rng = random.Random(seed)
        specs = []
        for _ in range(samples):
            g = random_underlying_graph(n_max, rng)
            code = random_orientation_code(len(g.edges), rng)
            specs.append((n_max, tuple(sorted_edges(g)), code))
        report = SweepReport(mode=mode, n_max=n_max, seed=seed, samples=samples)
        chunk = 500
        tasks = [specs[i:i + chunk] for i in range(0, len(specs), chunk)]
        worker = _process_samples
        graphs_per_task = [len(t) for t in tasks]
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")

    if threads > 1 and len(tasks) > 1:
        with Pool(threads) as pool:
            results = pool.imap(worker, tasks, chunksize=1)
            _merge(report, results, graphs_per_task, failure_limit)
    else:
        _merge(report, map(worker, tasks), graphs_per_task, failure_limit)
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Dedicated check drivers used by the acceptance suite and the CLI
# ---------------------------------------------------------------------------

def cycle_graph(l: int) -> UnderlyingGraph:
    return UnderlyingGraph.from_edges(l, [(i, (i + 1) % l) for i in range(l)])


def check_cycle_rank_table(l_min: int = 3, l_max: int = 10):
    """Hermitian rank of every orientation of every cycle against the closed
    form; returns (instances, mismatches)."""
    mismatches = []
    instances = 0
    for l in range(l_min, l_max + 1):
        g = cycle_graph(l)
        seq = tuple(range(l))
        for mixed in enumerate_orientations(g):
            eta = signature(mixed, seq)
            expected = cycle_h_rank_formula(l, eta)
            got = h_rank(mixed)
            if got != expected:
                mismatches.append((l, encode_orientation(mixed), eta, got, expected))
            instances += 1
    return instances, mismatches


def check_tree_rank_identity(n_max: int = 8):
    """rk = 2m over every orientation of every tree up to ``n_max``."""
    mismatches = []
    instances = 0
    for n, trees in unlabeled_trees(n_max).items():
        for tree in trees:
            m = matching_number(tree)
            for mixed in enumerate_orientations(tree):
                if h_rank(mixed) != 2 * m:
                    mismatches.append((n, encode_graph6(tree), encode_orientation(mixed)))
                instances += 1
    return instances, mismatches


def check_tree_pruning_rank_drop(n_max: int = 9):
    """Deleting all pendant vertices of a tree strictly lowers its rank."""
    mismatches = []
    instances = 0
    for n, trees in unlabeled_trees(n_max).items():
        if n < 2:
            continue
        for tree in trees:
            pruned, _ = delete_vertices(tree, pendant_vertices(tree))
            r_full = exact_rank(adjacency_matrix(tree))
            r_pruned = exact_rank(adjacency_matrix(pruned))
            if not r_pruned < r_full:
                mismatches.append((n, encode_graph6(tree)))
            instances += 1
    return instances, mismatches


def _coefficients_match(mixed: MixedGraph) -> Optional[str]:
    und = underlying(mixed)
    phi = char_poly(hermitian_matrix(mixed))
    for j in range(1, mixed.n + 1):
        if phi.coefficient(j) != basic_subgraph_coefficient(mixed, j):
            return f"hermitian coefficient {j}"
    psi = char_poly(adjacency_matrix(und))
    for j in range(1, und.n + 1):
        if psi.coefficient(j) != elementary_subgraph_coefficient(und, j):
            return f"adjacency coefficient {j}"
    return None


def check_coefficient_formulas(
    exhaustive_n: int = 4,
    sampled: tuple = ((5, 10000), (6, 10000)),
    seed: int = 0,
):
    """Characteristic coefficients against subgraph sums; exhaustive for
    small orders, seeded random instances beyond."""
    mismatches = []
    instances = 0
    for n in range(1, exhaustive_n + 1):
        for g in all_labeled_graphs(n):
            for mixed in enumerate_orientations(g):
                bad = _coefficients_match(mixed)
                if bad:
                    mismatches.append((n, encode_graph6(g), encode_orientation(mixed), bad))
                instances += 1
    rng = random.Random(seed)
    for n, count in sampled:
        for _ in range(count):
            g = random_underlying_graph(n, rng)
            code = random_orientation_code(len(g.edges), rng)
            mixed = decode_orientation(g, code)
            bad = _coefficients_match(mixed)
            if bad:
                mismatches.append((n, encode_graph6(g), code, bad))
            instances += 1
    return instances, mismatches


def check_rank_oracle(count: int = 500, n_max: int = 6, seed: int = 0):
    """Fraction-free rank against the brute-force minor oracle."""
    rng = random.Random(seed)
    mismatches = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        M = random_hermitian_matrix(n, rng)
        fast = exact_rank(M)
        slow = minor_rank(M)
        if fast != slow:
            mismatches.append((n, fast, slow, M))
    return count, mismatches


# ---------------------------------------------------------------------------
# Single-instance verification (CLI `verify` verb)
# ---------------------------------------------------------------------------

def verify_single(mixed: MixedGraph) -> list[tuple[str, bool, str]]:
    """Run every applicable identity check on one mixed graph.

    Returns (check name, passed, detail) triples in a fixed order.
    """
    g = underlying(mixed)
    ctx = _make_context(g)
    rec = _Recorder(limit=10 ** 9)
    _graph_checks(ctx, rec)
    _orientation_checks(ctx, mixed, encode_orientation(mixed), rec, 0, thorough=True)

    extra: list[tuple[str, bool, str]] = []
    if g.n <= 8:
        bad = _coefficients_match(mixed)
        extra.append(("coefficient_formulas", bad is None, bad or ""))
    if len(g.edges) <= 22:
        bf = brute_force_matching_number(g)
        extra.append(
            ("matching_oracle", matching_number(g) == bf, f"bruteforce={bf}")
        )
    if g.n <= 7:
        H = hermitian_matrix(mixed)
        mr = minor_rank(H)
        extra.append(("rank_minor_oracle", exact_rank(H) == mr, f"minor_rank={mr}"))

    out = []
    failed_by_name = {}
    for f in rec.failures:
        failed_by_name.setdefault(f.check, f.detail)
    for name in sorted(rec.tallies):
        p, f = rec.tallies[name]
        out.append((name, f == 0, failed_by_name.get(name, "")))
    out.extend(extra)
    return out
