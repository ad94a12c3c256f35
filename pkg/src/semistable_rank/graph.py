"""Multigraphs, divisors, twists and the graph Laplacian.

Vertices are arbitrary hashable identifiers (strings when read from files).
Everything here is immutable; vertex order is the declaration order and is
what every deterministic enumeration in the package follows.
"""
from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError

Vertex = Hashable


@dataclass(frozen=True)
class Multigraph:
    """Connected finite multigraph; loops and parallel edges allowed.

    ``edges`` is a multiset of unordered pairs. It is stored sorted by
    vertex position so that two graphs with the same multiset compare equal.
    """

    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if not vertices:
            raise InputError("a graph needs at least one vertex")
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise InputError(f"duplicate vertex id {v!r}")
            index[v] = i
        edges = []
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise InputError(f"edge {e!r} is not a pair")
            for end in pair:
                if end not in index:
                    raise InputError(f"edge {e!r} uses undeclared vertex {end!r}")
            a, b = sorted(pair, key=index.__getitem__)
            edges.append((a, b))
        edges.sort(key=lambda ab: (index[ab[0]], index[ab[1]]))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))
        if not self._is_connected():
            raise InputError("graph is not connected")

    def _is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        adj = self.adjacency
        while stack:
            i = stack.pop()
            for j, m in enumerate(adj[i]):
                if m and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple:
        """Edge multiplicities between distinct vertices (loops excluded)."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        rows = [[0] * len(self.vertices) for _ in self.vertices]
        for a, b in self.edges:
            i, j = idx[a], idx[b]
            if i != j:
                rows[i][j] += 1
                rows[j][i] += 1
        return tuple(tuple(r) for r in rows)

    @cached_property
    def loops(self) -> tuple:
        counts = [0] * self.n
        for a, b in self.edges:
            if a == b:
                counts[self.index[a]] += 1
        return tuple(counts)

    @cached_property
    def valence(self) -> tuple:
        """Number of edge ends at each vertex; a loop counts twice."""
        return tuple(sum(row) + 2 * lp for row, lp in zip(self.adjacency, self.loops))

    def index_of(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except (KeyError, TypeError):
            raise InputError(f"unknown vertex {v!r}") from None

    def vector(self, D: Mapping) -> tuple:
        """Coefficient vector of a divisor in declaration order."""
        vec = [0] * self.n
        for v, c in D.items():
            vec[self.index_of(v)] += c
        return tuple(vec)

    def divisor(self, vec: Iterable[int]) -> "GraphDivisor":
        return GraphDivisor(dict(zip(self.vertices, vec)))

    def without_loops(self) -> "Multigraph":
        return Multigraph(self.vertices, tuple(e for e in self.edges if e[0] != e[1]))

    def with_loop(self, v: Vertex) -> "Multigraph":
        self.index_of(v)
        return Multigraph(self.vertices, self.edges + ((v, v),))


class GraphDivisor(Mapping):
    """Formal integer combination of vertices. Absent vertices have coefficient 0."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping | Iterable = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        c = {}
        for v, k in items:
            if isinstance(k, bool) or not isinstance(k, int):
                raise InputError(f"coefficient of {v!r} must be an integer, got {k!r}")
            c[v] = c.get(v, 0) + k
        self._c = {v: k for v, k in c.items() if k}
        self._hash = None

    def __getitem__(self, v):
        return self._c.get(v, 0)

    def __contains__(self, v):
        return v in self._c

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, GraphDivisor):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self._c == {v: k for v, k in other.items() if k}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: Mapping) -> "GraphDivisor":
        out = dict(self._c)
        for v, k in other.items():
            out[v] = out.get(v, 0) + k
        return GraphDivisor(out)

    def __neg__(self) -> "GraphDivisor":
        return GraphDivisor({v: -k for v, k in self._c.items()})

    def __sub__(self, other: Mapping) -> "GraphDivisor":
        return self + GraphDivisor(other).__neg__()

    def __mul__(self, k: int) -> "GraphDivisor":
        return GraphDivisor({v: k * c for v, c in self._c.items()})

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        return sum(self._c.values())

    def is_effective(self) -> bool:
        return all(k >= 0 for k in self._c.values())

    def support(self) -> frozenset:
        return frozenset(self._c)

    def __repr__(self):
        return f"GraphDivisor({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for v, k in self._c.items():
            sign = "-" if k < 0 else "+"
            parts.append((sign, f"{abs(k)}*{v}"))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])


class Twist(Mapping):
    """Integer function on vertices modulo constants, stored with max value 0."""

    __slots__ = ("_v", "_hash")

    def __init__(self, values: Mapping):
        values = dict(values)
        for v, k in values.items():
            if isinstance(k, bool) or not isinstance(k, int):
                raise InputError(f"twist value at {v!r} must be an integer, got {k!r}")
        top = max(values.values(), default=0)
        self._v = {v: k - top for v, k in values.items()}
        self._hash = None

    @classmethod
    def zero(cls, graph: Multigraph) -> "Twist":
        return cls({v: 0 for v in graph.vertices})

    def __getitem__(self, v):
        return self._v[v]

    def __iter__(self):
        return iter(self._v)

    def __len__(self):
        return len(self._v)

    def __eq__(self, other):
        if isinstance(other, Twist):
            return self._v == other._v
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._v.items()))
        return self._hash

    def __add__(self, other: Mapping) -> "Twist":
        if set(other) != set(self._v):
            raise InputError("twists are defined on different vertex sets")
        return Twist({v: k + other[v] for v, k in self._v.items()})

    def vector(self, graph: Multigraph) -> tuple:
        return twist_vector(graph, self)

    def is_zero(self) -> bool:
        return not any(self._v.values())

    def __repr__(self):
        return f"Twist({self._v!r})"


def twist_vector(graph: Multigraph, phi: Mapping) -> tuple:
    unknown = [v for v in phi if v not in graph.index]
    if unknown:
        raise InputError(f"twist mentions unknown vertex {unknown[0]!r}")
    missing = [v for v in graph.vertices if v not in phi]
    if missing:
        raise InputError(f"twist undefined at vertex {missing[0]!r}")
    return tuple(phi[v] for v in graph.vertices)


def laplacian_vector(graph: Multigraph, phi: tuple) -> tuple:
    adj = graph.adjacency
    return tuple(
        sum(m * (phi[j] - phi[i]) for j, m in enumerate(row) if m)
        for i, row in enumerate(adj)
    )


def laplacian(graph: Multigraph, phi: Mapping) -> GraphDivisor:
    """Divisor whose coefficient at v is the sum over edges vw of phi(w) - phi(v)."""
    return graph.divisor(laplacian_vector(graph, twist_vector(graph, phi)))


def canonical_graph_divisor(graph: Multigraph) -> GraphDivisor:
    return graph.divisor(val - 2 for val in graph.valence)


def graph_genus(graph: Multigraph) -> int:
    """First Betti number |E| - |V| + 1 (loops included)."""
    return len(graph.edges) - graph.n + 1


def multidegree_identity_check(graph: Multigraph, phi: Mapping) -> bool:
    """Compare the Laplacian with the edge-by-edge restriction of the twist.

    Walks the edge list directly (loops included, where they contribute
    phi(v) - phi(v) = 0) instead of going through the adjacency matrix.
    """
    lap = laplacian(graph, phi)
    if lap.degree != 0:
        return False
    restricted = {v: 0 for v in graph.vertices}
    for a, b in graph.edges:
        restricted[a] += phi[b] - phi[a]
        if a != b:
            restricted[b] += phi[a] - phi[b]
        else:
            restricted[a] += phi[a] - phi[b]
    return GraphDivisor(restricted) == lap
