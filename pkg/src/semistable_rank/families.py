"""Small-instance generators: exhaustive multigraph families and seeded random curves."""
from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement, permutations

from .augmented import AugmentedCurve
from .errors import InputError
from .graph import GraphDivisor, Multigraph


def _names(n: int) -> tuple:
    return tuple(f"v{i}" for i in range(n))


def _connected(n: int, pairs) -> bool:
    seen = {0}
    grew = True
    while grew:
        grew = False
        for a, b in pairs:
            if (a in seen) != (b in seen):
                seen.update((a, b))
                grew = True
    return len(seen) == n


def _canonical(n: int, pairs) -> tuple:
    return min(
        tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in pairs))
        for perm in permutations(range(n))
    )


def connected_multigraphs(max_vertices: int, max_edges: int, loops: bool = False):
    """One representative per isomorphism class of connected multigraphs.

    Vertices are named v0, v1, ...; sizes are kept small (the isomorphism
    check runs over all vertex permutations).
    """
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        if loops:
            pairs += [(i, i) for i in range(n)]
        seen = set()
        for k in range(max(n - 1, 0), max_edges + 1):
            for chosen in combinations_with_replacement(pairs, k):
                if n > 1 and not _connected(n, chosen):
                    continue
                key = _canonical(n, chosen)
                if key in seen:
                    continue
                seen.add(key)
                names = _names(n)
                yield Multigraph(names, tuple((names[a], names[b]) for a, b in key))


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 4,
    max_edges: int = 5,
    loops: bool = False,
) -> Multigraph:
    if max_edges < max_vertices - 1:
        raise InputError("not enough edges to connect the requested vertices")
    n = rng.randint(1, max_vertices)
    names = _names(n)
    # random spanning tree, then extra edges
    edges = [(names[i], names[rng.randrange(i)]) for i in range(1, n)]
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b and not loops:
            if n == 1:
                continue
            b = (a + 1 + rng.randrange(n - 1)) % n
        edges.append((names[a], names[b]))
    return Multigraph(names, tuple(edges))


def random_divisor(
    rng: random.Random,
    graph: Multigraph,
    coefficient_range: int = 3,
    max_abs_degree: int = 5,
) -> GraphDivisor:
    while True:
        vec = [rng.randint(-coefficient_range, coefficient_range) for _ in graph.vertices]
        if abs(sum(vec)) <= max_abs_degree:
            return graph.divisor(vec)


def random_augmented_instances(
    seed: int,
    count: int,
    max_vertices: int = 4,
    max_edges: int = 5,
    max_genus: int = 2,
    max_abs_degree: int = 5,
    loops: bool = False,
):
    """Seeded stream of (AugmentedCurve, GraphDivisor) pairs."""
    rng = random.Random(seed)
    for _ in range(count):
        graph = random_multigraph(rng, max_vertices, max_edges, loops)
        genus = tuple(rng.randint(0, max_genus) for _ in graph.vertices)
        ac = AugmentedCurve(graph, genus)
        yield ac, random_divisor(rng, graph, 3, max_abs_degree)
