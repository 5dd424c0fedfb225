import pytest

from rdisconnect.coloring import is_proper
from rdisconnect.connectivity import lambda_plus
from rdisconnect.constructions import extremal_even, extremal_size, min_size_rd, peel_factorable
from rdisconnect.errors import DegreeOutOfRange, KOutOfRange, OddOrder
from rdisconnect.graph import build_graph, canonical_code, complete_graph, cycle_graph, is_connected, is_tree
from rdisconnect.rainbow import is_rd_coloring, rd_exact, star_rd_check

EVEN = range(4, 41, 2)


def test_peel_4_2_is_c4():
    p = peel_factorable(4, 2)
    assert canonical_code(p.graph) == canonical_code(cycle_graph(4))
    assert len(p.addable_matching) == 1
    a, b = p.addable_matching[0]
    assert {a, b} == set(p.graph.neighbors(p.hub))


def test_peel_6_3():
    p = peel_factorable(6, 3)
    assert set(p.graph.degrees) == {3}
    assert len(p.factorization.matchings) == 3
    assert len(p.addable_matching) == 1


def test_peel_8_6():
    p = peel_factorable(8, 6)
    p.validate()
    assert set(p.graph.degrees) == {6}
    assert len(p.factorization.matchings) == 6
    assert len(p.addable_matching) == 3


def test_peel_traces_the_removal_rule():
    # order 6, round 0 = (1,4), (2,3), (5,0): e_1, e_2, e_3 and hub v_{3,1} = 5.
    # stage 2 removes the factor with hub edge to v_{2,1} = 2 (round 2),
    # stage 3 to v_{2,2} = 3 (round 3), stage 4 to v_{1,1} = 1 (round 1).
    p = peel_factorable(6, 1)
    assert p.pair_labels[(1, 1)] == 1 and p.pair_labels[(3, 1)] == 5
    assert p.hub == 5
    assert p.removed == (0, 2, 3, 1)
    assert p.graph.edges == ((0, 3), (1, 2), (4, 5))
    assert p.addable_matching == ()


def test_peel_errors():
    with pytest.raises(OddOrder):
        peel_factorable(7, 2)
    with pytest.raises(DegreeOutOfRange):
        peel_factorable(6, 5)
    with pytest.raises(DegreeOutOfRange):
        peel_factorable(6, 0)


@pytest.mark.parametrize("N", EVEN)
def test_peel_invariants(N):
    for k in range(1, N - 1):
        p = peel_factorable(N, k)
        p.validate()
        assert len(p.addable_matching) == k // 2
        assert p.addable_matching == tuple(
            (p.pair_labels[(i, 1)], p.pair_labels[(i, 2)]) for i in range(1, k // 2 + 1)
        )


@pytest.mark.parametrize("n, k, m", [(6, 3, 10), (6, 1, 5), (6, 5, 15)])
def test_extremal_examples(n, k, m):
    w = extremal_even(n, k)
    assert w.graph.m == m == w.size_formula_value
    assert star_rd_check(w.graph, w.coloring, w.hub)
    assert rd_exact(w.graph).rd == k


def test_extremal_k1_is_tree():
    w = extremal_even(6, 1)
    assert is_tree(w.graph)
    assert w.coloring.colors == (1,) * 5


def test_extremal_complete_is_proper():
    w = extremal_even(8, 7)
    assert w.graph == complete_graph(8)
    assert is_proper(w.graph, w.coloring)


def test_extremal_errors():
    with pytest.raises(OddOrder):
        extremal_even(5, 2)
    with pytest.raises(KOutOfRange):
        extremal_even(6, 6)


@pytest.mark.parametrize("n", EVEN)
def test_extremal_invariants(n):
    for k in range(1, n):
        w = extremal_even(n, k)
        g = w.graph
        assert is_connected(g)
        assert g.m == extremal_size(n, k)
        assert w.coloring.used == k
        assert star_rd_check(g, w.coloring, w.hub)
        assert lambda_plus(g) >= k


@pytest.mark.parametrize("n", [4, 6])
def test_extremal_rd_by_exact_solver(n):
    for k in range(1, n):
        assert rd_exact(extremal_even(n, k).graph).rd == k


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_extremal_full_verification(n):
    for k in range(1, n):
        w = extremal_even(n, k)
        assert is_rd_coloring(w.graph, w.coloring)


def test_min_size_examples():
    for n in range(2, 8):
        g = min_size_rd(n, 1)
        assert is_tree(g) and rd_exact(g).rd == 1
    g = min_size_rd(4, 3)
    assert g.m == 5
    k4_minus_edge = build_graph(4, [e for e in complete_graph(4).edges if e != (2, 3)])
    assert canonical_code(g) == canonical_code(k4_minus_edge)
    assert rd_exact(g).rd == 3
    g = min_size_rd(5, 2)
    assert g.m == 5 and rd_exact(g).rd == 2


def test_min_size_errors():
    with pytest.raises(KOutOfRange):
        min_size_rd(4, 4)
    with pytest.raises(KOutOfRange):
        min_size_rd(4, 0)
