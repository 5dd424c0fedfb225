"""Explicit graphs: the 1-factor peel, the even-order extremal graphs with
their rainbow disconnection colorings, and small graphs of minimum size for
a prescribed rd."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, OneFactorization, one_factorize_complete_even
from .errors import DegreeOutOfRange, KOutOfRange, OddOrder
from .graph import Graph, build_graph, star_graph

PairLabel = tuple[int, int]  # (i, 1) or (i, 2): endpoint of the i-th removed matching edge


@dataclass(frozen=True)
class PeelResult:
    graph: Graph
    factorization: OneFactorization
    hub: int
    addable_matching: tuple[tuple[int, int], ...]
    pair_labels: dict[PairLabel, int]
    removed: tuple[int, ...]  # circle-method factor indices, in removal order

    def validate(self) -> None:
        g = self.graph
        k = g.degree(0) if g.n else 0
        if any(d != k for d in g.degrees):
            raise ValueError("peeled graph is not regular")
        self.factorization.validate()
        if len(self.factorization.matchings) != k:
            raise ValueError("factor count differs from the degree")
        nbrs = g.neighbors(self.hub)
        touched: set[int] = set()
        for a, b in self.addable_matching:
            if a not in nbrs or b not in nbrs or g.has_edge(a, b):
                raise ValueError(f"pair ({a}, {b}) cannot be added inside N(hub)")
            if {a, b} & touched:
                raise ValueError("addable pairs are not a matching")
            touched |= {a, b}
        if len(self.addable_matching) != k // 2:
            raise ValueError("wrong number of addable pairs")


def _intact_pairs(edges: set[frozenset[int]], hub: int, pairs: list[tuple[int, int]]) -> list[int]:
    nbrs = {x for e in edges if hub in e for x in e if x != hub}
    return [i for i, (a, b) in enumerate(pairs, 1) if a in nbrs and b in nbrs and frozenset((a, b)) not in edges]


def peel_factorable(N: int, k: int) -> PeelResult:
    """k-regular 1-factorable graph of even order N with ``k // 2`` addable
    matching edges inside the hub's neighbourhood.

    Start from the circle-method factorization of ``K_N``.  Round 0 supplies
    the pairs ``e_1..e_{N/2}`` with endpoints ``v_{i,1}, v_{i,2}``; the hub is
    ``v_{N/2,1}``.  Delete round 0, then at stage ``j = 2, 3, ...`` delete the
    factor holding the hub edge to ``v_{N/2 - j//2, 1}`` (``j`` even) or
    ``v_{N/2 - j//2, 2}`` (``j`` odd) until the graph is k-regular.  The
    number of surviving pairs is re-checked after every deletion.
    """
    if N % 2:
        raise OddOrder(f"peel needs an even order, got {N}")
    if not 1 <= k <= N - 2:
        raise DegreeOutOfRange(f"target degree must lie in 1..{N - 2}, got {k}")
    h = N // 2
    full = one_factorize_complete_even(N)
    pairs = list(full.matchings[0])
    labels: dict[PairLabel, int] = {}
    for i, (a, b) in enumerate(pairs, 1):
        labels[(i, 1)] = a
        labels[(i, 2)] = b
    hub = labels[(h, 1)]

    remaining = list(range(1, len(full.matchings)))
    removed = [0]
    edges = {frozenset(e) for r in remaining for e in full.matchings[r]}

    def check(j: int) -> None:
        # graph G_{j+1} after stage j
        degree = N - j - 1
        deg = [0] * N
        for e in edges:
            for x in e:
                deg[x] += 1
        if any(d != degree for d in deg):
            raise AssertionError(f"stage {j}: graph is not {degree}-regular")
        intact = _intact_pairs(edges, hub, pairs)
        expected = list(range(1, h - j // 2))
        if intact != expected or len(intact) != degree // 2:
            raise AssertionError(f"stage {j}: intact pairs {intact}, expected {expected}")

    check(1)
    for j in range(2, N - k):
        target = labels[(h - j // 2, 1 if j % 2 == 0 else 2)]
        r = next(r for r in remaining if any({hub, target} == set(p) for p in full.matchings[r]))
        remaining.remove(r)
        removed.append(r)
        edges -= {frozenset(e) for e in full.matchings[r]}
        check(j)

    graph = build_graph(N, [tuple(e) for e in edges])
    factorization = OneFactorization(graph, tuple(full.matchings[r] for r in remaining))
    addable = tuple(pairs[: k // 2])
    result = PeelResult(graph, factorization, hub, addable, labels, tuple(removed))
    result.validate()
    return result


@dataclass(frozen=True)
class ExtremalWitness:
    graph: Graph
    coloring: EdgeColoring
    hub: int
    size_formula_value: int


def extremal_size(n: int, k: int) -> int:
    return (k + 1) * (n - 1) // 2


def extremal_even(n: int, k: int) -> ExtremalWitness:
    """Graph of even order ``n`` with ``floor((k+1)(n-1)/2)`` edges and rd = k.

    ``k = 1`` gives the star centered at the hub and ``k = n - 1`` gives
    ``K_n`` colored by its circle-method factors.  Otherwise take the peel
    ``H`` with degree ``k - 1``, color its factors ``1..k-1``, and add the
    addable matching plus hub edges to every non-neighbour, all in color k.
    Every star except the hub's is then rainbow.
    """
    if n % 2:
        raise OddOrder(f"extremal_even needs an even order, got {n}")
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k must lie in 1..{n - 1}, got {k}")
    hub = n - 1
    if k == 1:
        graph = star_graph(n, center=hub)
        coloring = EdgeColoring.uniform(graph.m)
    elif k == n - 1:
        factorization = one_factorize_complete_even(n)
        graph, coloring = factorization.graph, factorization.to_coloring()
    else:
        peel = peel_factorable(n, k - 1)
        hub = peel.hub
        base = peel.factorization.to_coloring()
        far = [(hub, w) for w in range(n) if w not in peel.graph.closed_neighbors(hub)]
        graph = peel.graph.add_edges(list(peel.addable_matching) + far)
        colors = []
        for a, b in graph.edges:
            colors.append(base.colors[peel.graph.index_of(a, b)] if peel.graph.has_edge(a, b) else k)
        coloring = EdgeColoring(k, tuple(colors))
    return ExtremalWitness(graph, coloring, hub, extremal_size(n, k))


def min_size_rd(n: int, k: int) -> Graph:
    """Connected graph of order ``n`` with ``n + k - 2`` edges and rd = k.

    Vertices 0 and 1 are joined directly and through the middle vertices
    ``2..k``, which makes them k-edge-connected; vertices ``k+1..n-1`` hang
    off vertex 1 as a path.
    """
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k must lie in 1..{n - 1}, got {k}")
    edges = [(0, 1)]
    for x in range(2, k + 1):
        edges += [(0, x), (1, x)]
    prev = 1
    for x in range(k + 1, n):
        edges.append((prev, x))
        prev = x
    return build_graph(n, edges)

