"""Edge colorings: properness, Vizing (Misra-Gries) coloring, exact chromatic
index for small graphs, and the circle-method 1-factorization of ``K_n``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError, LengthMismatch, OddOrder, TooLarge
from .graph import Graph, complete_graph

MAX_EXACT_EDGES = 30


@dataclass(frozen=True)
class EdgeColoring:
    """Colors ``1..k`` indexed by the companion graph's edge order."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 0:
            raise GraphError(f"number of colors must be non-negative, got {self.k}")
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise GraphError(f"edge {i} has color {c} outside 1..{self.k}")

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def used(self) -> int:
        """Number of distinct colors actually present."""
        return len(set(self.colors))

    @classmethod
    def compact(cls, colors: Sequence[int]) -> EdgeColoring:
        """Renumber the colors present to ``1..used`` keeping their order."""
        ranks = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(len(ranks), tuple(ranks[c] for c in colors))

    @classmethod
    def uniform(cls, m: int, color: int = 1) -> EdgeColoring:
        return cls(color if m else 0, (color,) * m)


def _check_length(g: Graph, c: EdgeColoring) -> None:
    if len(c.colors) != g.m:
        raise LengthMismatch(f"coloring has {len(c.colors)} entries but the graph has {g.m} edges")


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    _check_length(g, c)
    for x in range(g.n):
        seen = set()
        for i in g.incident[x]:
            if c.colors[i] in seen:
                return False
            seen.add(c.colors[i])
    return True


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most ``max_degree + 1`` colors.

    Misra-Gries fan rotation with cd-path inversion.  Edges are colored in
    index order; fan extension takes the smallest eligible color, free colors
    are the smallest available.  The colors present are renumbered to a
    contiguous range, so ``result.k`` is the count actually used.
    """
    if g.m == 0:
        return EdgeColoring(0, ())
    palette = g.max_degree + 1
    color = [0] * g.m
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]

    def set_color(a: int, b: int, c: int) -> None:
        i = g.index_of(a, b)
        old = color[i]
        if old:
            del at[a][old]
            del at[b][old]
        color[i] = c
        if c:
            at[a][c] = b
            at[b][c] = a

    def free(x: int) -> int:
        for c in range(1, palette + 1):
            if c not in at[x]:
                return c
        raise AssertionError("no free color; palette too small")

    def is_free(x: int, c: int) -> bool:
        return c not in at[x]

    for idx, (u, v) in enumerate(g.edges):
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in sorted(at[u]):
                w = at[u][c]
                if w not in in_fan and is_free(last, c):
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = free(u)
        d = free(fan[-1])
        # invert the cd-path starting at u (it starts with a d-edge as c is free at u)
        if c != d:
            path = []
            x, want = u, d
            while want in at[x]:
                y = at[x][want]
                path.append((x, y, want))
                x = y
                want = c if want == d else d
            for a, b, _ in path:
                set_color(a, b, 0)
            for a, b, col in path:
                set_color(a, b, c if col == d else d)
        # shortest prefix of the fan that is still a fan and ends at a vertex missing d
        w = None
        for i, f in enumerate(fan):
            if i > 0 and not is_free(fan[i - 1], color[g.index_of(u, f)]):
                break
            if is_free(f, d):
                w = i
                break
        assert w is not None, "Misra-Gries invariant violated"
        shifted = [color[g.index_of(u, fan[i + 1])] for i in range(w)]
        for i in range(1, w + 1):
            set_color(u, fan[i], 0)
        for i in range(w):
            set_color(u, fan[i], shifted[i])
        set_color(u, fan[w], d)
    return EdgeColoring.compact(color)


def _edge_order(g: Graph) -> list[int]:
    """Edges grouped by a reversed degeneracy (min-degree elimination) order."""
    deg = list(g.degrees)
    alive = set(range(g.n))
    elim = []
    while alive:
        x = min(alive, key=lambda v: (deg[v], v))
        elim.append(x)
        alive.remove(x)
        for y in g.adjacency[x]:
            if y in alive:
                deg[y] -= 1
    rank = {x: i for i, x in enumerate(reversed(elim))}
    return sorted(range(g.m), key=lambda i: (max(rank[a] for a in g.edges[i]), min(rank[a] for a in g.edges[i])))


def _colorable(g: Graph, k: int) -> list[int] | None:
    """Proper ``k``-edge-coloring by backtracking, or None."""
    order = _edge_order(g)
    used = [0] * g.n
    color = [0] * g.m

    def go(pos: int, top: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        a, b = g.edges[i]
        blocked = used[a] | used[b]
        # a fresh color is interchangeable with every other unused one
        for c in range(1, min(top + 1, k) + 1):
            bit = 1 << c
            if blocked & bit:
                continue
            used[a] |= bit
            used[b] |= bit
            color[i] = c
            if go(pos + 1, max(top, c)):
                return True
            used[a] &= ~bit
            used[b] &= ~bit
        color[i] = 0
        return False

    return color if go(0, 0) else None


def chromatic_index_exact(g: Graph) -> int:
    """Exact chromatic index; decides Δ-colorability by backtracking."""
    if g.m > MAX_EXACT_EDGES:
        raise TooLarge(f"exact chromatic index is limited to {MAX_EXACT_EDGES} edges, got {g.m}")
    delta = g.max_degree
    if delta == 0:
        return 0
    # each color class is a matching of at most n // 2 edges
    if g.m > delta * (g.n // 2):
        return delta + 1
    return delta if _colorable(g, delta) is not None else delta + 1


@dataclass(frozen=True)
class OneFactorization:
    """Perfect matchings partitioning the edges of ``graph``.

    ``matchings`` keeps each pair in the orientation and order it was
    produced in; ``factors`` gives the same data as edge indices.
    """

    graph: Graph
    matchings: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def factors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.graph.index_of(a, b) for a, b in f) for f in self.matchings)

    def factor_containing(self, a: int, b: int) -> int:
        target = {a, b}
        for r, f in enumerate(self.matchings):
            if any({x, y} == target for x, y in f):
                return r
        raise KeyError(f"edge ({a}, {b}) is in no factor")

    def to_coloring(self) -> EdgeColoring:
        """Color each edge by ``1 + index of its factor``."""
        colors = [0] * self.graph.m
        for r, f in enumerate(self.factors):
            for i in f:
                colors[i] = r + 1
        return EdgeColoring(len(self.matchings), tuple(colors))

    def validate(self) -> None:
        """Raise ``ValueError`` unless this is a genuine 1-factorization."""
        g = self.graph
        seen: set[int] = set()
        for r, f in enumerate(self.matchings):
            covered = []
            for a, b in f:
                if not g.has_edge(a, b):
                    raise ValueError(f"factor {r}: ({a}, {b}) is not an edge")
                covered += [a, b]
            if sorted(covered) != list(range(g.n)):
                raise ValueError(f"factor {r} is not a perfect matching")
            idx = {g.index_of(a, b) for a, b in f}
            if idx & seen:
                raise ValueError(f"factor {r} overlaps an earlier factor")
            seen |= idx
        if len(seen) != g.m:
            raise ValueError("factors do not cover every edge")


def circle_method_pairs(n: int) -> list[list[tuple[int, int]]]:
    """Rounds of the circle method on ``n`` (even) vertices.

    Vertex ``n - 1`` is the fixed center.  Round ``r`` pairs
    ``(r + i) mod (n-1)`` with ``(r - i) mod (n-1)`` for ``i = 1..n/2-1``
    and lists the center pair ``(n - 1, r)`` last.
    """
    if n % 2 or n < 2:
        raise OddOrder(f"the circle method needs an even order >= 2, got {n}")
    q = n - 1
    rounds = []
    for r in range(q):
        pairs = [((r + i) % q, (r - i) % q) for i in range(1, n // 2)]
        pairs.append((q, r))
        rounds.append(pairs)
    return rounds


def one_factorize_complete_even(n: int) -> OneFactorization:
    rounds = circle_method_pairs(n)
    return OneFactorization(complete_graph(n), tuple(tuple(p) for p in rounds))
