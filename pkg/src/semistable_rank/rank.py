"""Linear equivalence and Baker-Norine rank on multigraphs.

q-reduction is Dhar's burning algorithm, preceded by a layered firing pass
that makes the divisor non-negative away from q. Loops never enter: they
are invisible to the Laplacian.

Cost model for the rank: ``r(D) = 1 + min_v r(D - v)`` whenever D is
equivalent to an effective divisor, memoized on q-reduced forms. The work is
bounded by (number of visited classes) x |V| reductions, where the classes
visited have degree between deg D - r(D) - 1 and deg D. Per degree there
are at most (number of spanning trees) classes, so desk-scale graphs are
cheap; the naive quantification over all effective E of degree r would be
exponential in r.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache

from .graph import (
    GraphDivisor,
    Multigraph,
    Twist,
    Vertex,
    canonical_graph_divisor,
    graph_genus,
)


@dataclass(frozen=True)
class ReducedDivisor:
    divisor: GraphDivisor
    base_vertex: Vertex
    # D + laplacian(twist) == divisor
    twist: Twist


def _distances(graph: Multigraph, qi: int) -> list:
    dist = [-1] * graph.n
    dist[qi] = 0
    queue = deque([qi])
    while queue:
        i = queue.popleft()
        for j, m in enumerate(graph.adjacency[i]):
            if m and dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def _fire(adj, d, phi, inside, times):
    for i in inside:
        phi[i] += times
        for j, m in enumerate(adj[i]):
            if m and j not in inside:
                d[i] -= times * m
                d[j] += times * m


def reduce_vector(graph: Multigraph, vec, qi: int) -> tuple:
    """Return (q-reduced vector, twist vector) for the class of ``vec``."""
    adj = graph.adjacency
    n = graph.n
    d = list(vec)
    phi = [0] * n

    # Fire the ball of radius k enough times to lift layer k + 1, outermost first.
    dist = _distances(graph, qi)
    for k in range(max(dist) - 1, -1, -1):
        ball = {i for i in range(n) if dist[i] <= k}
        times = 0
        for v in range(n):
            if dist[v] == k + 1 and d[v] < 0:
                into = sum(adj[v][u] for u in ball)
                times = max(times, -(d[v] // into))
        if times:
            _fire(adj, d, phi, ball, times)

    while True:
        burnt = {qi}
        unburnt = set(range(n)) - burnt
        spreading = True
        while spreading:
            spreading = False
            for v in sorted(unburnt):
                if sum(adj[v][u] for u in burnt) > d[v]:
                    burnt.add(v)
                    unburnt.discard(v)
                    spreading = True
        if not unburnt:
            break
        times = min(
            d[v] // out
            for v in unburnt
            if (out := sum(adj[v][u] for u in burnt))
        )
        _fire(adj, d, phi, unburnt, times)
    return tuple(d), tuple(phi)


def q_reduce(graph: Multigraph, D: Mapping, q: Vertex) -> ReducedDivisor:
    qi = graph.index_of(q)
    vec, phi = reduce_vector(graph, graph.vector(D), qi)
    return ReducedDivisor(graph.divisor(vec), q, Twist(dict(zip(graph.vertices, phi))))


def is_linearly_equivalent(graph: Multigraph, D1: Mapping, D2: Mapping) -> bool:
    v1, v2 = graph.vector(D1), graph.vector(D2)
    if sum(v1) != sum(v2):
        return False
    return reduce_vector(graph, v1, 0)[0] == reduce_vector(graph, v2, 0)[0]


def is_equivalent_to_effective(graph: Multigraph, D: Mapping) -> bool:
    return reduce_vector(graph, graph.vector(D), 0)[0][0] >= 0


def effective_vectors(n: int, degree: int) -> Iterator[tuple]:
    """All non-negative integer vectors of length n summing to degree, colex order."""
    if degree < 0:
        return
    if n == 0:
        if degree == 0:
            yield ()
        return
    for last in range(degree + 1):
        for head in effective_vectors(n - 1, degree - last):
            yield head + (last,)


def effective_divisors(graph: Multigraph, degree: int) -> Iterator[GraphDivisor]:
    for vec in effective_vectors(graph.n, degree):
        yield graph.divisor(vec)


@dataclass(frozen=True)
class EffectiveTest:
    """Class predicate 'equivalent to an effective divisor' on 0-reduced vectors."""

    def __call__(self, graph: Multigraph, reduced: tuple) -> bool:
        return reduced[0] >= 0


@lru_cache(maxsize=256)
def _memo(graph: Multigraph, test) -> dict:
    return {}


def predicate_rank(graph: Multigraph, vec, test) -> int:
    """Largest r such that test holds for the class of vec - E for every
    effective E of degree r; -1 if it fails already for E = 0.

    ``test`` must be a hashable callable on 0-reduced vectors that is
    monotone (true for D - v implies true for D) and false in negative degree.
    """
    memo = _memo(graph, test)
    n = graph.n

    def rank_of(reduced: tuple) -> int:
        hit = memo.get(reduced)
        if hit is not None:
            return hit
        if not test(graph, reduced):
            r = -1
        else:
            r = 1 + min(
                rank_of(reduce_vector(graph, reduced[:i] + (reduced[i] - 1,) + reduced[i + 1:], 0)[0])
                for i in range(n)
            )
        memo[reduced] = r
        return r

    return rank_of(reduce_vector(graph, tuple(vec), 0)[0])


def predicate_witness(graph: Multigraph, vec, test, rank: int) -> GraphDivisor | None:
    """First effective E of degree rank + 1 (colex order) for which test fails on vec - E."""
    vec = tuple(vec)
    for e in effective_vectors(graph.n, rank + 1):
        diff = tuple(a - b for a, b in zip(vec, e))
        if not test(graph, reduce_vector(graph, diff, 0)[0]):
            return graph.divisor(e)
    return None


def graph_divisor_rank(graph: Multigraph, D: Mapping) -> int:
    return predicate_rank(graph, graph.vector(D), EffectiveTest())


def rank_witness(graph: Multigraph, D: Mapping) -> GraphDivisor | None:
    """Colex-first effective E of degree rank + 1 with D - E not equivalent to effective."""
    vec = graph.vector(D)
    return predicate_witness(graph, vec, EffectiveTest(), graph_divisor_rank(graph, D))


def graph_rr_defect(graph: Multigraph, D: Mapping) -> int:
    """r(D) - r(K - D) - (deg D + 1 - g); zero on loopless graphs."""
    D = GraphDivisor(D)
    K = canonical_graph_divisor(graph)
    return (
        graph_divisor_rank(graph, D)
        - graph_divisor_rank(graph, K - D)
        - (D.degree + 1 - graph_genus(graph))
    )


@dataclass(frozen=True)
class CliffordCheck:
    holds: bool
    vacuous: bool
    rank: int
    degree: int

    def __bool__(self):
        return self.holds


def graph_clifford_check(graph: Multigraph, D: Mapping) -> CliffordCheck:
    """rank(D) <= deg(D)/2 for effective special D; vacuously true otherwise."""
    D = GraphDivisor(D)
    rank = graph_divisor_rank(graph, D)
    special = D.is_effective() and graph_divisor_rank(graph, canonical_graph_divisor(graph) - D) >= 0
    if not special:
        return CliffordCheck(True, True, rank, D.degree)
    return CliffordCheck(2 * rank <= D.degree, False, rank, D.degree)
