"""Rainbow cuts, rainbow disconnection colorings and the exact solver for rd(G).

A set of edges separating ``u`` from ``v`` contains the full boundary of
``u``'s component after removal, so a ``u``-``v`` rainbow cut exists iff some
vertex bipartition separating them has a rainbow crossing set.  Every check
here enumerates bipartitions, which is exact but exponential in ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .coloring import EdgeColoring, _check_length, vizing_color
from .connectivity import lambda_global, lambda_plus, mader_lambda_plus_bound
from .errors import BudgetExceeded, Disconnected, OrderTooLarge, SameVertex, TrivialGraph
from .graph import Graph, is_connected, is_tree

MAX_CUT_ORDER = 20
DEFAULT_EDGE_BUDGET = 16

TREE_RULE = "tree-rule"
SANDWICH = "sandwich-collapse"
SEARCH = "search"


@dataclass(frozen=True)
class CutCertificate:
    side_a: frozenset[int]
    side_b: frozenset[int]
    crossing: frozenset[int]
    rainbow: bool

    def separates(self, u: int, v: int) -> bool:
        return (u in self.side_a) != (v in self.side_a)

    def validate(self, g: Graph, c: EdgeColoring) -> bool:
        """Recompute everything from scratch; True iff the certificate holds."""
        if self.side_a & self.side_b or (self.side_a | self.side_b) != frozenset(range(g.n)):
            return False
        if not self.side_a or not self.side_b:
            return False
        crossing = frozenset(i for i, (a, b) in enumerate(g.edges) if (a in self.side_a) != (b in self.side_a))
        if crossing != self.crossing:
            return False
        colors = [c.colors[i] for i in crossing]
        return self.rainbow == (len(colors) == len(set(colors)))


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise SameVertex(f"u and v are both {u}")
    if g.n > MAX_CUT_ORDER:
        raise OrderTooLarge(f"cut enumeration is capped at order {MAX_CUT_ORDER}, got {g.n}")


def find_rainbow_cut(g: Graph, c: EdgeColoring, u: int, v: int) -> CutCertificate | None:
    """First rainbow bipartition separating ``u`` and ``v``, or None.

    ``u`` is fixed in side A and ``v`` in side B; the remaining vertices are
    placed by counting a mask from 0 upward, a set bit sending the vertex to
    side B.
    """
    _check_pair(g, u, v)
    _check_length(g, c)
    others = [x for x in range(g.n) if x not in (u, v)]
    colors = c.colors
    edges = g.edges
    for mask in range(1 << len(others)):
        side_b = 1 << v
        for j, x in enumerate(others):
            if mask >> j & 1:
                side_b |= 1 << x
        seen = 0
        crossing = []
        ok = True
        for i, (a, b) in enumerate(edges):
            if (side_b >> a ^ side_b >> b) & 1:
                bit = 1 << colors[i]
                if seen & bit:
                    ok = False
                    break
                seen |= bit
                crossing.append(i)
        if ok:
            b_set = frozenset(x for x in range(g.n) if side_b >> x & 1)
            return CutCertificate(frozenset(range(g.n)) - b_set, b_set, frozenset(crossing), True)
    return None


def _rainbow_sides(g: Graph, colors: tuple[int, ...]):
    """Yield bitmask sides S (vertex 0 outside S) whose boundary is rainbow.

    Walks the subsets of vertices ``1..n-1`` in Gray-code order, keeping a
    per-color count of crossing edges.
    """
    n = g.n
    count: dict[int, int] = {}
    clashes = 0
    side = 0
    ends = g.edges
    inc = g.incident
    for step in range(1, 1 << (n - 1)):
        x = (step & -step).bit_length()  # vertex index 1..n-1 to flip
        side ^= 1 << x
        for i in inc[x]:
            a, b = ends[i]
            col = colors[i]
            if (side >> a ^ side >> b) & 1:
                k = count.get(col, 0) + 1
                count[col] = k
                if k == 2:
                    clashes += 1
            else:
                k = count[col] - 1
                count[col] = k
                if k == 1:
                    clashes -= 1
        if clashes == 0:
            yield side


def is_rd_coloring(g: Graph, c: EdgeColoring) -> bool:
    """True iff every pair of distinct vertices is separated by a rainbow cut."""
    _check_length(g, c)
    if g.n > MAX_CUT_ORDER:
        raise OrderTooLarge(f"cut enumeration is capped at order {MAX_CUT_ORDER}, got {g.n}")
    if not is_connected(g):
        raise Disconnected("rainbow disconnection is defined for connected graphs only")
    n = g.n
    if n < 2:
        return True
    full = (1 << n) - 1
    sep = [0] * n
    missing = n
    for side in _rainbow_sides(g, c.colors):
        other = full ^ side
        for x in range(n):
            before = sep[x]
            sep[x] |= other if side >> x & 1 else side
            if before != full ^ (1 << x) and sep[x] == full ^ (1 << x):
                missing -= 1
        if missing == 0:
            return True
    return False


def star_rd_check(g: Graph, c: EdgeColoring, u: int) -> bool:
    """True iff the star of every vertex other than ``u`` is rainbow.

    Each rainbow star ``E_x`` separates ``x`` from everything else, and any
    pair contains some ``x != u``, so this implies :func:`is_rd_coloring`.
    """
    _check_length(g, c)
    for x in range(g.n):
        if x == u:
            continue
        cols = [c.colors[i] for i in g.incident[x]]
        if len(cols) != len(set(cols)):
            return False
    return True


def _search_rd_coloring(g: Graph, k: int) -> tuple[int, ...] | None:
    """Rainbow disconnection coloring with colors ``1..k``, or None.

    Backtracking over edges; a new color may only be opened after all
    smaller ones.  Each bipartition whose boundary has at most ``k`` edges
    stays alive while its colored boundary edges are distinct, and a branch
    dies once some vertex pair has no alive bipartition left.
    """
    n, m = g.n, g.m
    parts: list[list[int]] = []
    pair_masks = [0] * (n * n)
    for side in range(1, 1 << (n - 1)):
        s = side << 1  # vertex 0 always outside
        crossing = [i for i, (a, b) in enumerate(g.edges) if (s >> a ^ s >> b) & 1]
        if len(crossing) > k:
            continue
        p = len(parts)
        parts.append(crossing)
        inside = [x for x in range(n) if s >> x & 1]
        outside = [x for x in range(n) if not s >> x & 1]
        for x in inside:
            for y in outside:
                a, b = (x, y) if x < y else (y, x)
                pair_masks[a * n + b] |= 1 << p
    pair_list = [pair_masks[a * n + b] for a in range(n) for b in range(a + 1, n)]
    alive = (1 << len(parts)) - 1
    if any(pm & alive == 0 for pm in pair_list):
        return None

    parts_of_edge: list[list[int]] = [[] for _ in range(m)]
    for p, crossing in enumerate(parts):
        for i in crossing:
            parts_of_edge[i].append(p)

    # edges on many small cuts first: they constrain the most
    order = sorted(range(m), key=lambda i: (-len(parts_of_edge[i]), i))
    used = [0] * len(parts)
    color = [0] * m

    def go(pos: int, top: int, alive: int) -> bool:
        if pos == m:
            return True
        e = order[pos]
        for c in range(1, min(top + 1, k) + 1):
            bit = 1 << c
            kill = 0
            touched = []
            for p in parts_of_edge[e]:
                if alive >> p & 1:
                    if used[p] & bit:
                        kill |= 1 << p
                    else:
                        touched.append(p)
            now = alive & ~kill
            if kill and any(pm & now == 0 for pm in pair_list):
                continue
            for p in touched:
                used[p] |= bit
            color[e] = c
            if go(pos + 1, max(top, c), now):
                return True
            for p in touched:
                used[p] &= ~bit
        color[e] = 0
        return False

    return tuple(color) if go(0, 0, alive) else None


@dataclass(frozen=True)
class RdReport:
    lambda_: int
    lambda_plus: int
    mader_bound: int
    chi_prime_upper: int
    max_degree: int
    rd: int | None
    coloring: EdgeColoring | None
    method: str | None

    @property
    def lower(self) -> int:
        return self.rd if self.rd is not None else max(self.lambda_plus, self.mader_bound)

    @property
    def upper(self) -> int:
        return self.rd if self.rd is not None else min(self.chi_prime_upper, self.max_degree + 1)

    def to_json(self) -> dict[str, Any]:
        return {
            "lambda": self.lambda_,
            "lambda_plus": self.lambda_plus,
            "mader_bound": self.mader_bound,
            "chi_prime_upper": self.chi_prime_upper,
            "rd": self.rd,
            "method": self.method,
            "coloring": None if self.coloring is None else {"k": self.coloring.k, "colors": list(self.coloring.colors)},
        }


def rd_exact(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET, strict: bool = False) -> RdReport:
    """Exact rainbow disconnection number with a witnessing coloring.

    Trees get rd = 1 directly.  Otherwise rd lies between the larger of
    lambda_plus and Mader's bound, and the number of colors of a Vizing
    coloring; when those meet nothing is searched.  A gap is closed by
    exhaustive search, provided the graph has at most ``edge_budget``
    edges.  Past the budget the report carries bounds only (``rd`` is None),
    or :class:`BudgetExceeded` is raised when ``strict``.
    """
    if g.n < 2:
        raise TrivialGraph("rd is defined for graphs with at least two vertices")
    if not is_connected(g):
        raise Disconnected("rd is defined for connected graphs only")
    lam = lambda_global(g)
    lp = lambda_plus(g)
    mb = mader_lambda_plus_bound(g)
    viz = vizing_color(g)
    delta = g.max_degree
    partial = dict(lambda_=lam, lambda_plus=lp, mader_bound=mb, chi_prime_upper=viz.k, max_degree=delta)
    if is_tree(g):
        return RdReport(**partial, rd=1, coloring=EdgeColoring.uniform(g.m), method=TREE_RULE)
    lb = max(lp, mb)
    ub = min(viz.k, delta + 1)
    assert lb <= ub, "lower bound above upper bound"
    if lb == ub:
        return RdReport(**partial, rd=ub, coloring=viz, method=SANDWICH)
    if g.m > edge_budget:
        if strict:
            raise BudgetExceeded(f"{g.m} edges exceed the search budget of {edge_budget} (rd in [{lb}, {ub}])")
        return RdReport(**partial, rd=None, coloring=None, method=None)
    for k in range(lb, ub):
        found = _search_rd_coloring(g, k)
        if found is not None:
            return RdReport(**partial, rd=k, coloring=EdgeColoring(k, found), method=SEARCH)
    return RdReport(**partial, rd=ub, coloring=viz, method=SEARCH)
