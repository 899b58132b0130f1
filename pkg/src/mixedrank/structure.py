"""Structural graph invariants: cycle space, matching, blocks, contractions.

Everything here is exact combinatorics on small graphs.  The searches
(maximum matching, pendant-deletion reachability) use per-call memo tables
keyed on vertex bitmasks, so calls are pure and safe to run in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .graphs import (
    MixedGraph,
    UnderlyingGraph,
    components,
    delete_vertices,
)


@dataclass(frozen=True)
class CycleSet:
    """Cycles of a graph plus the pairwise-vertex-disjointness verdict.

    When ``pairwise_disjoint`` is true the listed cycles are exactly the
    cycles of the graph, one per cyclic block, in canonical traversal order.
    Otherwise the list holds the fundamental cycles of a spanning forest and
    is diagnostic only.
    """

    cycles: tuple[tuple[int, ...], ...]
    pairwise_disjoint: bool


@dataclass(frozen=True)
class ContractionPair:
    """A graph with each cycle contracted to a marked vertex, and the rest.

    ``mapping[v]`` is the contracted-graph vertex that original vertex v
    collapsed into.  ``bracket_graph`` is the contracted graph with every
    marked vertex deleted.
    """

    t_graph: UnderlyingGraph
    marked: frozenset[int]
    bracket_graph: UnderlyingGraph
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class DeltaTrace:
    """A witness sequence of pendant-plus-neighbor deletions.

    Each step is (pendant vertex, its unique neighbor) in original ids; the
    terminal vertices induce a pendant-free subgraph.
    """

    steps: tuple[tuple[int, int], ...]
    terminal_vertices: tuple[int, ...]


def cycle_space_dim(g: UnderlyingGraph) -> int:
    """Number of independent cycles: |E| - |V| + number of components."""
    return len(g.edges) - g.n + len(components(g))


def matching_number(g: UnderlyingGraph) -> int:
    """Exact maximum matching size by branch and bound over vertex bitmasks."""
    if g.n == 0 or not g.edges:
        return 0
    adj = g.adjacency_masks()
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        while mask:
            v = (mask & -mask).bit_length() - 1
            avail = adj[v] & mask
            if avail:
                break
            mask &= mask - 1
        else:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        rest = mask & ~(1 << v)
        best = rec(rest)
        m = avail
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cand = 1 + rec(rest & ~(1 << u))
            if cand > best:
                best = cand
        memo[mask] = best
        return best

    return rec((1 << g.n) - 1)


def _biconnected_blocks(g: UnderlyingGraph) -> list[list[tuple[int, int]]]:
    """Blocks as edge lists (Hopcroft-Tarjan); bridges are one-edge blocks."""
    adj = g.adjacency()
    disc = [-1] * g.n
    low = [0] * g.n
    timer = [0]
    stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        skipped_parent = False
        for v in sorted(adj[u]):
            if v == parent and not skipped_parent:
                skipped_parent = True
                continue
            if disc[v] == -1:
                stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
            elif disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for s in range(g.n):
        if disc[s] == -1:
            dfs(s, -1)
    return blocks


def _block_as_cycle(block: list[tuple[int, int]]) -> Optional[tuple[int, ...]]:
    """Canonical traversal if the block is a single cycle, else None."""
    if len(block) < 3:
        return None
    nbrs: dict[int, list[int]] = {}
    for u, v in block:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if len(nbrs) != len(block):
        return None
    if any(len(ns) != 2 for ns in nbrs.values()):
        return None
    start = min(nbrs)
    cur = min(nbrs[start])
    seq = [start, cur]
    prev = start
    while cur != start:
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        if cur != start:
            seq.append(cur)
        if len(seq) > len(block):
            return None
    if len(seq) != len(nbrs):
        return None
    return tuple(seq)


def _fundamental_cycles(g: UnderlyingGraph) -> list[tuple[int, ...]]:
    """Cycles induced by the non-tree edges of a DFS forest (diagnostics)."""
    adj = g.adjacency()
    parent = [-1] * g.n
    depth = [-1] * g.n
    order: list[int] = []
    for s in range(g.n):
        if depth[s] != -1:
            continue
        depth[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            order.append(v)
            for u in sorted(adj[v], reverse=True):
                if depth[u] == -1:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    stack.append(u)
    tree = {(min(v, parent[v]), max(v, parent[v])) for v in range(g.n) if parent[v] != -1}
    cycles = []
    for u, v in sorted(g.edges):
        if (u, v) in tree:
            continue
        pu, pv = u, v
        path_u, path_v = [u], [v]
        while depth[pu] > depth[pv]:
            pu = parent[pu]
            path_u.append(pu)
        while depth[pv] > depth[pu]:
            pv = parent[pv]
            path_v.append(pv)
        while pu != pv:
            pu = parent[pu]
            pv = parent[pv]
            path_u.append(pu)
            path_v.append(pv)
        cycles.append(tuple(path_u + path_v[-2::-1]))
    return cycles


def detect_cycles(g: UnderlyingGraph) -> CycleSet:
    """All cycles if they are pairwise vertex-disjoint, else diagnostics.

    Pairwise disjointness holds exactly when every biconnected block is a
    single edge or a single cycle AND no vertex lies in two cyclic blocks
    (two cycles may meet in a cut vertex while each block is still a plain
    cycle, so the block-shape test alone is not enough).
    """
    cyclic: list[tuple[int, ...]] = []
    for block in _biconnected_blocks(g):
        if len(block) == 1:
            continue
        cyc = _block_as_cycle(block)
        if cyc is None:
            return CycleSet(tuple(_fundamental_cycles(g)), False)
        cyclic.append(cyc)
    seen: set[int] = set()
    for cyc in cyclic:
        if seen.intersection(cyc):
            return CycleSet(tuple(_fundamental_cycles(g)), False)
        seen.update(cyc)
    cyclic.sort(key=lambda c: c[0])
    if len(cyclic) != cycle_space_dim(g):
        raise RuntimeError("cycle count disagrees with cycle-space dimension")
    return CycleSet(tuple(cyclic), True)


def vertex_cycle_classes(g: UnderlyingGraph) -> list[int]:
    """Classify each vertex by how cycles pass through it.

    0 = on no cycle; 1 = on exactly one cycle; 2 = on several cycles that
    overlap beyond this vertex (one block with two or more independent
    cycles); 3 = on cycles from different blocks, which therefore share
    nothing but this vertex.  The distinction between 2 and 3 matters:
    deleting a class-3 vertex kills at least two independent cycles, while
    deleting a class-2 vertex may kill only one (the shared part survives).
    """
    blocks = [0] * g.n
    overlap = [False] * g.n
    for block in _biconnected_blocks(g):
        if len(block) < 2:
            continue
        verts = {v for e in block for v in e}
        d_block = len(block) - len(verts) + 1
        for v in verts:
            blocks[v] += 1
            if d_block >= 2:
                overlap[v] = True
    out = []
    for v in range(g.n):
        if blocks[v] >= 2:
            out.append(3)
        elif overlap[v]:
            out.append(2)
        else:
            out.append(blocks[v])
    return out


def _validate_cycle(g: MixedGraph, cycle) -> tuple[int, ...]:
    seq = tuple(cycle)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise ValueError("sequence is not a cycle")
    pairs = set(g.undirected_edges)
    pairs.update((min(u, v), max(u, v)) for u, v in g.arcs)
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        if (min(u, v), max(u, v)) not in pairs:
            raise ValueError(f"consecutive vertices {u},{v} are not adjacent")
    return seq


def traversal_counts(g: MixedGraph, cycle) -> tuple[int, int]:
    """(forward, backward) arc counts along the cycle as given."""
    seq = _validate_cycle(g, cycle)
    f = b = 0
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        if (u, v) in g.arcs:
            f += 1
        elif (v, u) in g.arcs:
            b += 1
    return f, b


def signature(g: MixedGraph, cycle) -> int:
    """|forward - backward| arc count along the cycle; direction-invariant."""
    f, b = traversal_counts(g, cycle)
    return abs(f - b)


def contract_cycles(g: UnderlyingGraph, cs: CycleSet) -> ContractionPair:
    """Collapse each cycle to one marked vertex, then also drop the marks.

    Requires pairwise vertex-disjoint cycles.  With genuinely disjoint
    cycles no parallel edges or chords can arise; both conditions are
    re-checked and violations raised as internal errors.
    """
    if not cs.pairwise_disjoint:
        raise ValueError("cycles are not pairwise vertex-disjoint")
    cycle_of: dict[int, int] = {}
    for idx, cyc in enumerate(cs.cycles):
        for v in cyc:
            if v in cycle_of or not (0 <= v < g.n):
                raise ValueError("cycle list inconsistent with graph")
            cycle_of[v] = idx
    plain = [v for v in range(g.n) if v not in cycle_of]
    mapping = [0] * g.n
    for new, old in enumerate(plain):
        mapping[old] = new
    base = len(plain)
    for v, idx in cycle_of.items():
        mapping[v] = base + idx
    t_n = base + len(cs.cycles)
    counts: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        mu, mv = mapping[u], mapping[v]
        if mu == mv:
            if _pos(cs.cycles[cycle_of[u]], u, v) == 1:
                continue  # the cycle's own edge disappears
            raise RuntimeError("chord inside a contracted cycle")
        key = (min(mu, mv), max(mu, mv))
        counts[key] = counts.get(key, 0) + 1
    for key, c in counts.items():
        if c > 1:
            raise RuntimeError(f"contraction produced parallel edges at {key}")
    t_graph = UnderlyingGraph(t_n, frozenset(counts))
    if cycle_space_dim(t_graph) != 0:
        raise RuntimeError("contracted graph is not a forest")
    marked = frozenset(range(base, t_n))
    bracket, _ = delete_vertices(t_graph, marked)
    return ContractionPair(t_graph, marked, bracket, tuple(mapping))


def _pos(cyc: tuple[int, ...], u: int, v: int) -> int:
    """Cyclic index distance of u and v on the cycle (1 when consecutive)."""
    k = len(cyc)
    iu, iv = cyc.index(u), cyc.index(v)
    diff = (iu - iv) % k
    return min(diff, k - diff)


def delta_transform(g: UnderlyingGraph, x: int) -> UnderlyingGraph:
    """Delete a pendant vertex together with its unique neighbor."""
    nbrs = [v for u, v in g.edges if u == x] + [u for u, v in g.edges if v == x]
    if len(nbrs) != 1:
        raise ValueError(f"vertex {x} is not pendant (degree {len(nbrs)})")
    sub, _ = delete_vertices(g, {x, nbrs[0]})
    return sub


def _mask_is_cycles_plus_isolated(adj: list[int], mask: int, expected_cycles: int) -> bool:
    """Does the induced subgraph consist of exactly `expected_cycles` cycles
    plus isolated vertices?"""
    cycles = 0
    todo = mask
    while todo:
        v = (todo & -todo).bit_length() - 1
        comp = 1 << v
        frontier = [v]
        while frontier:
            w = frontier.pop()
            nb = adj[w] & mask & ~comp
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                comp |= 1 << u
                frontier.append(u)
        verts = []
        m = comp
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            verts.append(u)
        degs = [bin(adj[u] & mask).count("1") for u in verts]
        if len(verts) == 1 and degs[0] == 0:
            pass  # isolated vertex
        elif all(dg == 2 for dg in degs):
            cycles += 1
        else:
            return False
        todo &= ~comp
    return cycles == expected_cycles


def crucial_subgraph_exists(
    g: UnderlyingGraph,
    target: Optional[Callable[[UnderlyingGraph], bool]] = None,
) -> tuple[bool, Optional[DeltaTrace]]:
    """Search all pendant-deletion orders for a terminal meeting ``target``.

    A terminal is any pendant-free induced subgraph reachable by repeatedly
    deleting a pendant vertex together with its neighbor.  Different
    deletion orders reach different terminals, so the search is exhaustive
    over pendant choices, memoized on the surviving-vertex bitmask.

    The default target asks for a disjoint union of exactly
    ``cycle_space_dim(g)`` cycles plus isolated vertices.
    """
    adj = g.adjacency_masks()
    want = cycle_space_dim(g)

    if target is None:
        def hit(mask: int) -> bool:
            return _mask_is_cycles_plus_isolated(adj, mask, want)
    else:
        def hit(mask: int) -> bool:
            dead = [v for v in range(g.n) if not mask >> v & 1]
            sub, _ = delete_vertices(g, dead)
            return target(sub)

    failed: set[int] = set()

    def search(mask: int) -> Optional[list[tuple[int, int]]]:
        pendants = []
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nb = adj[v] & mask
            if nb and nb & (nb - 1) == 0:
                pendants.append((v, nb.bit_length() - 1))
        if not pendants:
            return [] if hit(mask) else None
        for x, y in pendants:
            nxt = mask & ~(1 << x) & ~(1 << y)
            if nxt in failed:
                continue
            rest = search(nxt)
            if rest is not None:
                return [(x, y)] + rest
            failed.add(nxt)
        return None

    full = (1 << g.n) - 1
    steps = search(full)
    if steps is None:
        return False, None
    mask = full
    for x, y in steps:
        mask &= ~(1 << x) & ~(1 << y)
    terminal = tuple(v for v in range(g.n) if mask >> v & 1)
    return True, DeltaTrace(tuple(steps), terminal)
