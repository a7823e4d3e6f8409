import pytest

from qdu_typeb_hecke.Coxeter.signed_permutation import SignedPermutation
from qdu_typeb_hecke.Coxeter.weak_order import (
    IntervalR,
    NotComparableError,
    comparable_pairs,
    convex_hull,
    geodesic_closure,
    interval_R,
    is_convex,
    permutohedron_graph,
    upper_covers,
)

S = SignedPermutation


def test_full_interval():
    interval = IntervalR(S.identity(2), S.longest(2))
    assert len(interval) == 8
    assert set(interval) == set(S.all(2))


def test_incomparable_endpoints():
    with pytest.raises(NotComparableError):
        IntervalR(S((2, 1)), S((-1, 2)))
    with pytest.raises(NotComparableError):
        interval_R(S((2, 1)), S((-1, 2)))


def test_membership():
    interval = IntervalR(S((-1, 2)), S((2, -1)))
    assert S((-1, 2)) in interval
    assert S((2, -1)) in interval
    assert S((1, 2)) not in interval
    assert S((1,)) not in interval
    assert str(interval) == "[[-1,2], [2,-1]]_R"


def test_upper_covers():
    assert sorted(upper_covers(S.identity(2))) == [S((-1, 2)), S((2, 1))]
    assert upper_covers(S.longest(2)) == []


def test_comparable_pairs_rank_one():
    pairs = list(comparable_pairs(1))
    assert len(pairs) == 3
    assert IntervalR(S((1,)), S((-1,))) in pairs


def test_permutohedron():
    graph = permutohedron_graph(2)
    assert graph.number_of_nodes() == 8
    assert graph.number_of_edges() == 8
    assert graph.nodes[S.longest(2)]["length"] == 4


@pytest.mark.slow
def test_intervals_are_convex_hulls_of_their_endpoints():
    graph = permutohedron_graph(2)
    for interval in comparable_pairs(2):
        ends = {interval.bottom, interval.top}
        assert convex_hull(ends) == frozenset(interval.elements)
        assert geodesic_closure(ends, graph) == frozenset(interval.elements)
        assert is_convex(interval.elements, graph)


def test_non_convex_pair():
    ends = {S.identity(2), S.longest(2)}
    assert not is_convex(ends)
    assert len(geodesic_closure(ends)) == 8


def test_mixed_ranks_rejected():
    with pytest.raises(ValueError):
        geodesic_closure([S((1,)), S((1, 2))])
