"""Rank functions on dual graphs whose vertices carry component genera.

Divisors are handled at the level of multidegrees. Sections on a component
of genus g are modelled by a degree-determined oracle: the pessimistic one is
a generic line bundle, the optimistic one is the Clifford / Riemann-Roch
envelope. Points are assumed to be in twist general position, so subtracting
E(v) generic points drops h0 on X_v by exactly E(v) (clamped at zero).
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ConsistencyError, InputError
from .graph import (
    GraphDivisor,
    Multigraph,
    Twist,
    Vertex,
    canonical_graph_divisor,
    graph_genus,
    laplacian_vector,
)
from .rank import (
    effective_vectors,
    graph_divisor_rank,
    predicate_rank,
    reduce_vector,
)


@dataclass(frozen=True)
class AugmentedCurve:
    """Dual graph of a semistable special fibre plus the genus of each component."""

    graph: Multigraph
    genus: tuple = ()

    def __post_init__(self):
        g = self.genus
        if isinstance(g, Mapping):
            for v in g:
                self.graph.index_of(v)
            g = tuple(g.get(v, 0) for v in self.graph.vertices)
        else:
            g = tuple(g) if g else (0,) * self.graph.n
        if len(g) != self.graph.n:
            raise InputError("one genus per vertex is required")
        for k in g:
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise InputError(f"component genus must be a non-negative integer, got {k!r}")
        object.__setattr__(self, "genus", g)

    def genus_of(self, v: Vertex) -> int:
        return self.genus[self.graph.index_of(v)]

    @property
    def total_genus(self) -> int:
        return graph_genus(self.graph) + sum(self.genus)

    @property
    def totally_degenerate(self) -> bool:
        return not any(self.genus)


@dataclass(frozen=True)
class SectionOracle:
    mode: str

    def __post_init__(self):
        if self.mode not in ("optimistic", "pessimistic"):
            raise InputError(f"unknown oracle mode {self.mode!r}")

    def section_exists(self, g: int, d: int) -> bool:
        return d >= 0 if self.mode == "optimistic" else d >= g

    def h0(self, g: int, d: int) -> int:
        if self.mode == "pessimistic":
            return max(0, d + 1 - g)
        if d < 0:
            return 0
        if d <= 2 * g - 2:
            return d // 2 + 1
        return d + 1 - g


OPTIMISTIC = SectionOracle("optimistic")
PESSIMISTIC = SectionOracle("pessimistic")


@dataclass(frozen=True)
class RankBounds:
    lower: int
    upper: int


@dataclass(frozen=True)
class CliffordCertificate:
    Q: GraphDivisor
    bound: int
    branch: str
    witness_twist_analysis: tuple = field(default=())

    def to_dict(self, graph: Multigraph) -> dict:
        return {
            "Q": {str(v): self.Q[v] for v in graph.vertices},
            "bound": self.bound,
            "branch": self.branch,
            "witness_twist_analysis": [
                {"twist": {str(v): phi[v] for v in graph.vertices}, "vertex": str(w)}
                for phi, w in self.witness_twist_analysis
            ],
        }


def canonical_multidegree(ac: AugmentedCurve) -> GraphDivisor:
    return ac.graph.divisor(
        2 * g + val - 2 for g, val in zip(ac.genus, ac.graph.valence)
    )


def effective_class(graph: Multigraph, vec) -> list:
    """Pairs (normalized twist vector, vec + laplacian(twist)) with effective
    right-hand side, sorted by twist vector.

    Starts from the reduced form and closes under legal set-firings; every
    effective member of a class is reachable that way.
    """
    vec = tuple(vec)
    reduced, phi = reduce_vector(graph, vec, 0)
    if reduced[0] < 0:
        return []
    n = graph.n
    subsets = [
        frozenset(s) for k in range(1, n) for s in combinations(range(n), k)
    ]
    firings = []
    for s in subsets:
        ind = tuple(1 if i in s else 0 for i in range(n))
        firings.append((ind, laplacian_vector(graph, ind)))
    top = max(phi)
    start = (tuple(x - top for x in phi), reduced)
    seen = {reduced: start[0]}
    stack = [reduced]
    while stack:
        F = stack.pop()
        base = seen[F]
        for ind, lap in firings:
            G = tuple(a + b for a, b in zip(F, lap))
            if min(G) < 0 or G in seen:
                continue
            raw = tuple(a + b for a, b in zip(base, ind))
            top = max(raw)
            seen[G] = tuple(x - top for x in raw)
            stack.append(G)
    return sorted(((phi_vec, F) for F, phi_vec in seen.items()))


def enumerate_effective_twists(graph: Multigraph, D: Mapping) -> tuple:
    """All twists phi, up to constants, with D + laplacian(phi) effective."""
    return tuple(
        Twist(dict(zip(graph.vertices, phi))) for phi, _ in effective_class(graph, graph.vector(D))
    )


@dataclass(frozen=True)
class SectionTest:
    """Class predicate: some twist leaves a section on every component."""

    genus: tuple
    oracle: SectionOracle

    def __call__(self, graph: Multigraph, reduced: tuple) -> bool:
        exists = self.oracle.section_exists
        return any(
            all(exists(g, d) for g, d in zip(self.genus, F))
            for _, F in effective_class(graph, reduced)
        )


def r_num(ac: AugmentedCurve, D: Mapping) -> int:
    return graph_divisor_rank(ac.graph, D)


def r_ab(ac: AugmentedCurve, D: Mapping, oracle: SectionOracle = PESSIMISTIC) -> int:
    return predicate_rank(ac.graph, ac.graph.vector(D), SectionTest(ac.genus, oracle))


def twist_general_position_profile(
    ac: AugmentedCurve,
    D: Mapping,
    E_multidegree: Mapping,
    oracle: SectionOracle = PESSIMISTIC,
) -> list:
    """For every phi in S_D: {v: max(0, h0(g_v, (D + lap phi)(v)) - E(v))}."""
    graph = ac.graph
    E = graph.vector(E_multidegree)
    if min(E) < 0:
        raise InputError("E must be effective")
    rows = []
    for phi, F in effective_class(graph, graph.vector(D)):
        rows.append((
            Twist(dict(zip(graph.vertices, phi))),
            {
                v: max(0, oracle.h0(g, d) - e)
                for v, g, d, e in zip(graph.vertices, ac.genus, F, E)
            },
        ))
    return rows


def rank_hierarchy(ac: AugmentedCurve, D: Mapping) -> RankBounds:
    lower = r_ab(ac, D, PESSIMISTIC)
    upper = r_ab(ac, D, OPTIMISTIC)
    if upper != r_num(ac, D):
        raise ConsistencyError("optimistic r_ab differs from r_num")
    if lower > upper:
        raise ConsistencyError("pessimistic r_ab exceeds optimistic r_ab")
    return RankBounds(lower, upper)


def clifford_certificate(ac: AugmentedCurve, D: Mapping) -> CliffordCertificate:
    """Blocking divisor Q with r_ab(K - D) <= deg Q - 1 <= g - deg(D)/2 - 1."""
    graph = ac.graph
    if any(graph.loops):
        raise InputError("certificate needs a loopless dual graph; apply subdivide_loops first")
    n = graph.n
    d_vec = graph.vector(D)
    if min(d_vec) < 0:
        raise InputError("D must be effective")
    deg_d = sum(d_vec)
    genus = ac.genus
    K = graph.vector(canonical_multidegree(ac))
    L = tuple(k - d for k, d in zip(K, d_vec))
    S = effective_class(graph, L)
    KG = graph.vector(canonical_graph_divisor(graph))

    if sum(KG) - deg_d < 0:
        branch = "negative-degree"
        if not S:
            return CliffordCertificate(graph.divisor([0] * n), -1, branch, ())
        cliff = {
            phi: frozenset(i for i in range(n) if F[i] < 2 * genus[i]) for phi, F in S
        }
        m = min(len(c) for c in cliff.values())
        best = None
        for phi, F in S:
            if len(cliff[phi]) != m:
                continue
            M = max(F[i] for i in cliff[phi])
            # S is sorted by twist, so strict > keeps the lexicographically smallest
            if best is None or M > best[1]:
                best = (phi, M, F)
        phi, M, F = best
        v_phi = min(i for i in cliff[phi] if F[i] == M)
        Q = [0 if i in cliff[phi] else genus[i] for i in range(n)]
        Q[v_phi] += M // 2 + 1
    else:
        branch = "graph-clifford"
        r = (2 * graph_genus(graph) - deg_d - 2) // 2
        size = max(r + 1, 0)
        base = tuple(k - d for k, d in zip(KG, d_vec))
        q_prime = _blocking_divisor(graph, base, size)
        if q_prime is None and size == 0:
            q_prime = _blocking_divisor(graph, base, 1)
        if q_prime is None:
            raise ConsistencyError("no blocking divisor for K_graph - D; graph Clifford violated")
        Q = [a + g for a, g in zip(q_prime, genus)]

    analysis = []
    for phi, F in S:
        dead = next(
            (i for i in range(n) if OPTIMISTIC.h0(genus[i], F[i]) - Q[i] <= 0),
            None,
        )
        if dead is None:
            raise ConsistencyError(f"twist {phi} keeps sections on every component after removing Q")
        analysis.append((Twist(dict(zip(graph.vertices, phi))), graph.vertices[dead]))

    bound = sum(Q) - 1
    if 2 * bound > 2 * ac.total_genus - deg_d - 2:
        raise ConsistencyError(f"certificate bound {bound} exceeds g - deg(D)/2 - 1")
    return CliffordCertificate(graph.divisor(Q), bound, branch, tuple(analysis))


def subdivide_loops(ac: AugmentedCurve) -> AugmentedCurve:
    """Replace each loop at v by a rational vertex joined to v by two edges.

    This is the dual graph after blowing up the self-node; the canonical
    multidegree on the old vertices and the total genus are unchanged.
    """
    graph = ac.graph
    vertices = list(graph.vertices)
    genus = list(ac.genus)
    edges = []
    for k, (a, b) in enumerate(graph.edges):
        if a != b:
            edges.append((a, b))
            continue
        new = f"{a}~{k}"
        if new in graph.index:
            raise InputError(f"cannot name subdivision vertex {new!r}: already in use")
        vertices.append(new)
        genus.append(0)
        edges += [(a, new), (a, new)]
    return AugmentedCurve(Multigraph(tuple(vertices), tuple(edges)), tuple(genus))


def _blocking_divisor(graph: Multigraph, base: tuple, size: int):
    for e in effective_vectors(graph.n, size):
        diff = tuple(a - b for a, b in zip(base, e))
        if reduce_vector(graph, diff, 0)[0][0] < 0:
            return e
    return None
