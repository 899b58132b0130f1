"""Mixed graphs, their underlying simple graphs, and text codecs.

A mixed graph has vertices 0..n-1 and two kinds of adjacency: undirected
edges (unordered pairs) and arcs (ordered pairs).  Erasing every arc's
direction gives the underlying simple graph.  Both objects are immutable
value types; all operations here are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class MixedGraphParseError(ValueError):
    """Malformed graph text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _norm_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MixedGraph:
    """A loop-free simple mixed graph on vertices 0..n-1.

    For any vertex pair at most one of {u,v}, (u,v), (v,u) is present.
    Undirected edges are stored min-endpoint first; arcs keep their
    orientation as ordered pairs.
    """

    n: int
    undirected_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    arcs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in self.undirected_edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (u < v):
                raise ValueError(f"undirected edge ({u},{v}) not stored min-first")
            if v >= self.n or u < 0:
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            seen.add((u, v))
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")
            key = _norm_pair(u, v)
            if key in seen:
                raise ValueError(f"pair {key} present more than once")
            seen.add(key)

    @classmethod
    def from_edges(
        cls,
        n: int,
        undirected: Iterable[tuple[int, int]] = (),
        arcs: Iterable[tuple[int, int]] = (),
    ) -> "MixedGraph":
        """Build a graph, normalizing undirected pairs to min-first order."""
        return cls(
            n,
            frozenset(_norm_pair(u, v) for u, v in undirected),
            frozenset((u, v) for u, v in arcs),
        )

    @property
    def edge_count(self) -> int:
        return len(self.undirected_edges) + len(self.arcs)

    def is_oriented(self) -> bool:
        """True when every edge is an arc (no undirected edges)."""
        return not self.undirected_edges


@dataclass(frozen=True)
class UnderlyingGraph:
    """A simple loop-free undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (u < v):
                raise ValueError(f"edge ({u},{v}) not stored min-first")
            if v >= self.n or u < 0:
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "UnderlyingGraph":
        return cls(n, frozenset(_norm_pair(u, v) for u, v in edges))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_masks(self) -> list[int]:
        """Neighbor sets as bitmasks, for the bitset-based searches."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))


def underlying(g: MixedGraph) -> UnderlyingGraph:
    """Erase all orientations; idempotent on already-undirected input."""
    edges = set(g.undirected_edges)
    edges.update(_norm_pair(u, v) for u, v in g.arcs)
    return UnderlyingGraph(g.n, frozenset(edges))


def components(g: UnderlyingGraph) -> list[set[int]]:
    """Connected components as vertex sets, ordered by minimum vertex."""
    adj = g.adjacency()
    seen = [False] * g.n
    out: list[set[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.add(u)
                    stack.append(u)
        out.append(comp)
    return out


def pendant_vertices(g: UnderlyingGraph) -> set[int]:
    """Vertices of degree exactly 1."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return {v for v in range(g.n) if deg[v] == 1}


def quasi_pendant_vertices(g: UnderlyingGraph) -> set[int]:
    """Vertices adjacent to at least one pendant vertex."""
    pend = pendant_vertices(g)
    out: set[int] = set()
    for u, v in g.edges:
        if u in pend:
            out.add(v)
        if v in pend:
            out.add(u)
    return out


def delete_vertices(g, xs: Iterable[int]):
    """Induced subgraph on the complement of ``xs``.

    Works on both graph types.  Returns ``(subgraph, mapping)`` where
    ``mapping`` sends each surviving old vertex id to its new id; survivors
    keep their relative order.
    """
    drop = set(xs)
    for x in drop:
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} out of range")
    keep = [v for v in range(g.n) if v not in drop]
    mapping = {old: new for new, old in enumerate(keep)}
    if isinstance(g, MixedGraph):
        und = frozenset(
            (mapping[u], mapping[v])
            for u, v in g.undirected_edges
            if u in mapping and v in mapping
        )
        arcs = frozenset(
            (mapping[u], mapping[v])
            for u, v in g.arcs
            if u in mapping and v in mapping
        )
        return MixedGraph(len(keep), und, arcs), mapping
    edges = frozenset(
        (mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping
    )
    return UnderlyingGraph(len(keep), edges), mapping


# ---------------------------------------------------------------------------
# Text format: header "MG <n>", then "e u v" / "a u v" lines, "#" comments.
# ---------------------------------------------------------------------------

def parse_mixed_graph(text: str) -> MixedGraph:
    n = None
    undirected: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "MG" or len(parts) != 2:
                raise MixedGraphParseError("expected header 'MG <n>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise MixedGraphParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise MixedGraphParseError("vertex count must be non-negative", lineno)
            continue
        if parts[0] not in ("e", "a") or len(parts) != 3:
            raise MixedGraphParseError(f"expected 'e u v' or 'a u v', got {line!r}", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise MixedGraphParseError(f"bad vertex id in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise MixedGraphParseError(f"vertex out of range in {line!r}", lineno)
        if u == v:
            raise MixedGraphParseError(f"loop at vertex {u}", lineno)
        if parts[0] == "e":
            undirected.append(_norm_pair(u, v))
        else:
            arcs.append((u, v))
    if n is None:
        raise MixedGraphParseError("missing 'MG <n>' header", 1)
    try:
        return MixedGraph(n, frozenset(undirected), frozenset(arcs))
    except ValueError as exc:
        raise MixedGraphParseError(str(exc), 1) from None


def format_mixed_graph(g: MixedGraph) -> str:
    lines = [f"MG {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.undirected_edges))
    lines.extend(f"a {u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def load_mixed_graph(path) -> MixedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_mixed_graph(fh.read())


def save_mixed_graph(g: MixedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_mixed_graph(g))


# ---------------------------------------------------------------------------
# graph6: standard packed format for undirected graphs, one graph per line.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def decode_graph6(line: str) -> UnderlyingGraph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 character")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    else:
        raise ValueError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body length mismatch for n={n}")
    bits = []
    for b in body:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return UnderlyingGraph(n, frozenset(edges))


def encode_graph6(g: UnderlyingGraph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        raise ValueError("graph too large for graph6 encoding")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val)
    return "".join(chr(63 + b) for b in head + body)
