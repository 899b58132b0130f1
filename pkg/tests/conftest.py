"""Shared graph builders and hypothesis strategies."""

from itertools import combinations

from hypothesis import strategies as st

from mixedrank import MixedGraph, UnderlyingGraph
from mixedrank.verify import decode_orientation


def path_graph(n: int) -> UnderlyingGraph:
    return UnderlyingGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(l: int) -> UnderlyingGraph:
    return UnderlyingGraph.from_edges(l, [(i, (i + 1) % l) for i in range(l)])


def star_graph(leaves: int) -> UnderlyingGraph:
    return UnderlyingGraph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def complete_graph(n: int) -> UnderlyingGraph:
    return UnderlyingGraph.from_edges(n, combinations(range(n), 2))


def petersen_graph() -> UnderlyingGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UnderlyingGraph.from_edges(10, outer + spokes + inner)


@st.composite
def underlying_graphs(draw, min_n: int = 0, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return UnderlyingGraph(n, frozenset())
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return UnderlyingGraph.from_edges(n, chosen)


@st.composite
def mixed_graphs(draw, min_n: int = 0, max_n: int = 6):
    g = draw(underlying_graphs(min_n, max_n))
    code = "".join(
        draw(st.lists(st.sampled_from("012"), min_size=len(g.edges), max_size=len(g.edges)))
    )
    return decode_orientation(g, code)


@st.composite
def mixed_cycles(draw, min_l: int = 3, max_l: int = 8):
    l = draw(st.integers(min_l, max_l))
    code = "".join(draw(st.lists(st.sampled_from("012"), min_size=l, max_size=l)))
    return decode_orientation(cycle_graph(l), code), l


def gaussian_ints():
    return st.builds(
        lambda re, im: __import__("mixedrank").GaussianInt(re, im),
        st.integers(-50, 50),
        st.integers(-50, 50),
    )
