import hypothesis.strategies as st

from semistable_rank.augmented import AugmentedCurve
from semistable_rank.graph import Multigraph


@st.composite
def multigraphs(draw, max_vertices=4, max_extra_edges=3, loops=False):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(n)]
    edges = [(names[i], names[draw(st.integers(0, i - 1))]) for i in range(1, n)]
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda ab: ab[0] != ab[1]) if n > 1 else st.nothing()
    extra = draw(st.lists(pair, max_size=max_extra_edges)) if n > 1 or loops else []
    edges += [(names[a], names[b]) for a, b in extra]
    return Multigraph(tuple(names), tuple(edges))


def divisors(graph, low=-3, high=3):
    return st.lists(st.integers(low, high), min_size=graph.n, max_size=graph.n).map(graph.divisor)


def twists(graph, low=-4, high=4):
    return st.lists(st.integers(low, high), min_size=graph.n, max_size=graph.n).map(
        lambda vals: dict(zip(graph.vertices, vals))
    )


@st.composite
def graph_and_divisor(draw, low=-3, high=3, **kw):
    graph = draw(multigraphs(**kw))
    return graph, draw(divisors(graph, low, high))


@st.composite
def augmented_curves(draw, max_genus=2, **kw):
    graph = draw(multigraphs(**kw))
    genus = draw(st.lists(st.integers(0, max_genus), min_size=graph.n, max_size=graph.n))
    return AugmentedCurve(graph, tuple(genus))


def effective(graph: Multigraph, high=3):
    return st.lists(st.integers(0, high), min_size=graph.n, max_size=graph.n).map(graph.divisor)

