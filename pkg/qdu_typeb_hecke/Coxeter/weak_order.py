"""
Right weak Bruhat order on B_n, its intervals and the type-B permutohedron.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional

import networkx as nx

from .signed_permutation import MAX_RANK, SignedPermutation, _check_rank

log = logging.getLogger(__name__)


class NotComparableError(ValueError):
    pass


def leq_weak_R(sigma: SignedPermutation, rho: SignedPermutation) -> bool:
    """sigma ⪯_R rho, by containment of inversion sets."""
    return sigma.leq_weak_R(rho)


def upper_covers(sigma: SignedPermutation) -> list[SignedPermutation]:
    descents = sigma.right_descents()
    return [sigma.times_simple(i) for i in range(sigma.n) if i not in descents]


def interval_R(u: SignedPermutation, w: SignedPermutation) -> frozenset[SignedPermutation]:
    """
    The interval [u, w]_R, by breadth-first search upwards from u.

    Raises:
        NotComparableError: if u is not below w.
    """
    _check_rank(u, w)
    if not u.leq_weak_R(w):
        raise NotComparableError(f"{u} is not below {w} in the right weak order")
    seen = {u}
    queue = deque([u])
    while queue:
        current = queue.popleft()
        for nxt in upper_covers(current):
            if nxt not in seen and nxt.leq_weak_R(w):
                seen.add(nxt)
                queue.append(nxt)
    log.debug(f"interval [{u}, {w}]_R has {len(seen)} elements")
    return frozenset(seen)


@dataclass(frozen=True)
class IntervalR:
    """A right weak Bruhat interval [bottom, top]_R."""

    bottom: SignedPermutation
    top: SignedPermutation

    def __post_init__(self) -> None:
        _check_rank(self.bottom, self.top)
        if not self.bottom.leq_weak_R(self.top):
            raise NotComparableError(
                f"{self.bottom} is not below {self.top} in the right weak order"
            )

    @property
    def n(self) -> int:
        return self.bottom.n

    @cached_property
    def elements(self) -> tuple[SignedPermutation, ...]:
        return tuple(sorted(interval_R(self.bottom, self.top)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SignedPermutation]:
        return iter(self.elements)

    def __contains__(self, gamma: object) -> bool:
        if not isinstance(gamma, SignedPermutation) or gamma.n != self.n:
            return False
        return self.bottom.leq_weak_R(gamma) and gamma.leq_weak_R(self.top)

    def __str__(self) -> str:
        return f"[{self.bottom}, {self.top}]_R"


def comparable_pairs(n: int, max_rank: int = MAX_RANK) -> Iterator[IntervalR]:
    """Every interval of B_n, bottoms in lexicographic order."""
    group = SignedPermutation.all(n, max_rank=max_rank)
    for u in group:
        for w in group:
            if u.leq_weak_R(w):
                yield IntervalR(u, w)


def permutohedron_graph(n: int, max_rank: int = MAX_RANK) -> nx.Graph:
    """
    The type-B permutohedron: vertices B_n, an edge sigma -- sigma s_i for
    every generator, labelled by ``generator = i``.
    """
    graph = nx.Graph()
    for sigma in SignedPermutation.all(n, max_rank=max_rank):
        graph.add_node(sigma, length=sigma.length)
        for i in range(n):
            graph.add_edge(sigma, sigma.times_simple(i), generator=i)
    log.debug(f"permutohedron of B_{n}: {graph.number_of_nodes()} vertices, "
              f"{graph.number_of_edges()} edges")
    return graph


def _uniform_rank(elements: Iterable[SignedPermutation]) -> tuple[list[SignedPermutation], int]:
    items = sorted(set(elements))
    if not items:
        raise ValueError("expected a non-empty set of signed permutations")
    n = items[0].n
    for sigma in items[1:]:
        _check_rank(items[0], sigma)
    return items, n


def geodesic_closure(elements: Iterable[SignedPermutation],
                     graph: Optional[nx.Graph] = None) -> frozenset[SignedPermutation]:
    """
    Smallest superset closed under taking shortest paths in the permutohedron.
    """
    items, n = _uniform_rank(elements)
    if graph is None:
        graph = permutohedron_graph(n)
    distance = dict(nx.all_pairs_shortest_path_length(graph))
    closed = set(items)
    changed = True
    while changed:
        changed = False
        for a, b in combinations(sorted(closed), 2):
            d = distance[a][b]
            between = {v for v in graph.nodes
                       if distance[a][v] + distance[v][b] == d}
            if not between <= closed:
                closed |= between
                changed = True
    return frozenset(closed)


def is_convex(elements: Iterable[SignedPermutation],
              graph: Optional[nx.Graph] = None) -> bool:
    items = frozenset(elements)
    return geodesic_closure(items, graph) == items


def convex_hull(elements: Iterable[SignedPermutation]) -> frozenset[SignedPermutation]:
    """Conv(U) computed as the type-B linear extensions of poset(U)."""
    from ..Posets.bn_poset import linear_extensions_B, poset_of

    items, _ = _uniform_rank(elements)
    return frozenset(linear_extensions_B(poset_of(items)))
