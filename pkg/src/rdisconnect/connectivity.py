"""Edge connectivity via unit-capacity max-flow, and Mader's lower bound on
the upper edge-connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, SameVertex, TrivialGraph
from .graph import Graph, is_connected


@dataclass(frozen=True)
class ConnectivityProfile:
    lambda_global: int
    lambda_plus: int
    witness_pair_min: tuple[int, int]
    witness_pair_max: tuple[int, int]


def _max_flow(g: Graph, s: int, t: int) -> tuple[int, list[bool]]:
    """Edmonds-Karp on the graph with every edge a pair of unit arcs.

    Returns the flow value and the source side of a minimum cut.
    """
    # flow[i] > 0: one unit travels a->b along edge i; < 0: b->a.
    flow = [0] * g.m
    ends = g.edges
    inc = g.incident
    value = 0
    while True:
        prev_edge = [-1] * g.n
        seen = [False] * g.n
        seen[s] = True
        queue = deque([s])
        while queue and not seen[t]:
            x = queue.popleft()
            for i in inc[x]:
                a, b = ends[i]
                y = b if x == a else a
                if seen[y]:
                    continue
                # residual capacity from x to y
                direction = 1 if x == a else -1
                if flow[i] == direction:
                    continue
                seen[y] = True
                prev_edge[y] = i
                queue.append(y)
        if not seen[t]:
            return value, seen
        y = t
        while y != s:
            i = prev_edge[y]
            a, b = ends[i]
            x = a if y == b else b
            flow[i] += 1 if x == a else -1
            y = x
        value += 1


def local_edge_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of edge-disjoint ``u``-``v`` paths (0 if disconnected)."""
    if u == v:
        raise SameVertex(f"u and v are both {u}")
    return _max_flow(g, u, v)[0]


def local_min_cut(g: Graph, u: int, v: int) -> tuple[int, frozenset[int], frozenset[int]]:
    """Minimum ``u``-``v`` edge cut as ``(size, side containing u, edge indices)``."""
    if u == v:
        raise SameVertex(f"u and v are both {u}")
    value, side = _max_flow(g, u, v)
    side_a = frozenset(x for x in range(g.n) if side[x])
    crossing = frozenset(i for i, (a, b) in enumerate(g.edges) if side[a] != side[b])
    return value, side_a, crossing


def lambda_global(g: Graph) -> int:
    return _lambda_global_witness(g)[0]


def _lambda_global_witness(g: Graph) -> tuple[int, tuple[int, int]]:
    if g.n < 2:
        raise TrivialGraph("edge connectivity needs at least two vertices")
    best, pair = None, (0, 1)
    for v in range(1, g.n):
        val = local_edge_connectivity(g, 0, v)
        if best is None or val < best:
            best, pair = val, (0, v)
            if best == 0:
                break
    return best, pair


def _lambda_plus_witness(g: Graph) -> tuple[int, tuple[int, int]]:
    if g.n < 2:
        raise TrivialGraph("edge connectivity needs at least two vertices")
    if not is_connected(g):
        raise Disconnected("lambda_plus is defined for connected graphs only")
    deg = g.degrees
    # lambda(u, v) <= min(deg u, deg v): visit pairs by that bound, stop once it cannot win
    pairs = sorted(
        ((min(deg[a], deg[b]), a, b) for a in range(g.n) for b in range(a + 1, g.n)),
        key=lambda t: (-t[0], t[1], t[2]),
    )
    best, pair = 0, (0, 1)
    for bound, a, b in pairs:
        if bound <= best:
            break
        val = local_edge_connectivity(g, a, b)
        if val > best:
            best, pair = val, (a, b)
    return best, pair


def lambda_plus(g: Graph) -> int:
    """Maximum local edge-connectivity over all vertex pairs."""
    return _lambda_plus_witness(g)[0]


def connectivity_profile(g: Graph) -> ConnectivityProfile:
    lo, lo_pair = _lambda_global_witness(g)
    hi, hi_pair = _lambda_plus_witness(g)
    return ConnectivityProfile(lo, hi, lo_pair, hi_pair)


def sigma_k(g: Graph, k: int) -> int:
    """Total degree deficiency ``sum(k - d(x))`` over vertices with ``d(x) <= k``."""
    return sum(k - d for d in g.degrees if d <= k)


def mader_condition(g: Graph, k: int) -> bool:
    """Whether Mader's edge-count condition certifies ``lambda_plus >= k + 1``.

    Exact integer form of ``e > (k+1)(n-1)/2 - sigma_k/2``; only defined
    for ``n >= k + 2 >= 3``, and false outside that range.
    """
    n = g.n
    if k < 1 or n < k + 2:
        return False
    return 2 * g.m > (k + 1) * (n - 1) - sigma_k(g, k)


def mader_lambda_plus_bound(g: Graph) -> int:
    """Largest ``k + 1`` certified by :func:`mader_condition`, or 1."""
    best = 1
    for k in range(1, g.n - 1):
        if mader_condition(g, k):
            best = k + 1
    return best
