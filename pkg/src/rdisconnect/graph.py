"""Simple undirected graphs on vertices ``0..n-1`` and small-order enumeration.

A :class:`Graph` is an immutable value: its edge list is stored in canonical
order (each pair ``(a, b)`` with ``a < b``, sorted lexicographically) and the
position of an edge in that list is its edge index.  Edge colorings and cut
certificates elsewhere in the package refer to edges by this index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DuplicateEdge, GraphError, LoopEdge, OrderTooLarge, VertexOutOfRange

Edge = tuple[int, int]

MAX_ENUMERATION_ORDER = 8


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        prev = None
        for a, b in edges:
            if a == b:
                raise LoopEdge(f"loop edge ({a}, {b})")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise VertexOutOfRange(f"edge ({a}, {b}) has an endpoint outside 0..{self.n - 1}")
            if a > b:
                raise GraphError(f"edge ({a}, {b}) is not stored with a < b")
            if prev is not None:
                if (a, b) == prev:
                    raise DuplicateEdge(f"duplicate edge ({a}, {b})")
                if (a, b) < prev:
                    raise GraphError(f"edge ({a}, {b}) breaks lexicographic order")
            prev = (a, b)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident with each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append(i)
            inc[b].append(i)
        return tuple(tuple(x) for x in inc)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def index_of(self, a: int, b: int) -> int:
        return self.edge_index[(a, b) if a < b else (b, a)]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u]

    def closed_neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency[u] | {u}

    def add_edges(self, extra: Iterable[Edge]) -> Graph:
        return build_graph(self.n, list(self.edges) + list(extra))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``x`` renamed to ``perm[x]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return build_graph(self.n, [(perm[a], perm[b]) for a, b in self.edges])


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical :class:`Graph` from edges given in any order/orientation.

    Raises :class:`LoopEdge`, :class:`DuplicateEdge` or
    :class:`VertexOutOfRange` naming the offending edge.
    """
    seen: set[Edge] = set()
    norm: list[Edge] = []
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a pair")
        a, b = int(pair[0]), int(pair[1])
        if a == b:
            raise LoopEdge(f"loop edge ({a}, {b})")
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge ({pair[0]}, {pair[1]})")
        seen.add(e)
        norm.append(e)
    return Graph(n, tuple(sorted(norm)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int, center: int = 0) -> Graph:
    """Star ``K_{1,n-1}`` on ``n`` vertices."""
    return build_graph(n, [(center, x) for x in range(n) if x != center])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


# -- canonical form ---------------------------------------------------------

def _refine(g: Graph) -> list[int]:
    """Colour refinement (1-WL) started from degrees.

    Colours are ranks of sorted signatures, so the resulting ordered
    partition is an isomorphism invariant.
    """
    colors = list(g.degrees)
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[x], tuple(sorted(colors[y] for y in g.adjacency[x]))) for x in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return new
        colors, ncolors = new, len(ranks)


def canonical_code(g: Graph) -> str:
    """Canonical bitstring of ``g``.

    The code lists the upper-triangular adjacency matrix column by column
    (pairs ``(0,1), (0,2), (1,2), (0,3), ...``) and is the lexicographic
    minimum over all relabelings that place the colour-refinement cells in
    increasing colour order.  Two graphs get equal codes iff they are
    isomorphic.
    """
    n = g.n
    if n <= 1:
        return ""
    colors = _refine(g)
    slot_color = sorted(colors)
    adj = g.adjacency_bits
    placed: list[int] = []
    used = [False] * n
    best: list[str] | None = None
    current: list[str] = []

    def search(pos: int) -> None:
        nonlocal best
        if pos == n:
            if best is None or current < best:
                best = current.copy()
            return
        want = slot_color[pos]
        # prune only while the prefix still ties with the best code found so far
        tight = best is not None and current == best[:pos]
        for x in range(n):
            if used[x] or colors[x] != want:
                continue
            ax = adj[x]
            col = "".join("1" if ax >> placed[i] & 1 else "0" for i in range(pos))
            if tight and col > best[pos]:
                continue
            used[x] = True
            placed.append(x)
            current.append(col)
            search(pos + 1)
            current.pop()
            placed.pop()
            used[x] = False
            if best is not None and not tight:
                tight = current == best[:pos]

    search(0)
    assert best is not None
    return "".join(best)


def graph_from_code(n: int, code: str) -> Graph:
    """Inverse of the column-major layout used by :func:`canonical_code`."""
    if len(code) != n * (n - 1) // 2:
        raise GraphError(f"code of length {len(code)} does not fit order {n}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if code[pos] == "1":
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs of order ``n`` up to isomorphism, connected or not.

    Built level by level: every class with ``m + 1`` edges arises by adding
    one edge to some class with ``m`` edges.
    """
    if n > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"enumeration is capped at order {MAX_ENUMERATION_ORDER}, got {n}")
    if n < 1:
        raise GraphError("order must be at least 1")
    level = {canonical_code(Graph(n)): Graph(n)}
    out: list[tuple[int, str, Graph]] = []
    pairs = list(combinations(range(n), 2))
    m = 0
    while level:
        out.extend((m, code, g) for code, g in level.items())
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for e in pairs:
                if g.has_edge(*e):
                    continue
                code = canonical_code(g.add_edges([e]))
                if code not in nxt:
                    nxt[code] = graph_from_code(n, code)
        level = nxt
        m += 1
    out.sort(key=lambda t: (t[0], t[1]))
    return [g for _, _, g in out]


def enumerate_connected(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Ordered by edge count, then canonical code.  Raises
    :class:`OrderTooLarge` for ``n > 8``.
    """
    return [g for g in enumerate_graphs(n) if is_connected(g)]
