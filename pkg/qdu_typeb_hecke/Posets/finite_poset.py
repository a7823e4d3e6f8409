"""
Finite posets on sets of integers.

A poset keeps its sorted ground set together with the reflexive and
transitive relation matrix ``relation[a, b] = (x_a ⪯ x_b)``. Type-A
posets on [n] get linear extensions, P-partitions and K_P here.
"""

from __future__ import annotations

import logging
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from ..Coxeter.compositions import CompositionA
from ..Coxeter.signed_permutation import Permutation
from ..QSym.qsym_elements import QSymElement
from ..QSym.truncated import TruncatedPoly

log = logging.getLogger(__name__)

Pair = tuple[int, int]


class BnPosetException(ValueError):
    """A relation that is not a partial order, or breaks the B_n symmetry."""

    def __init__(self, message: str, pair: Optional[Pair] = None) -> None:
        super().__init__(message)
        self.pair = pair


def transitive_closure(relation: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean matrix, by Warshall."""
    closed = np.array(relation, dtype=bool) | np.eye(len(relation), dtype=bool)
    for k in range(len(closed)):
        closed |= closed[:, k, None] & closed[None, k, :]
    return closed


class FinitePoset:
    """Partial order on a finite set of integers."""

    __slots__ = ("elements", "relation", "_index")

    def __init__(self, elements: Iterable[int], relation: np.ndarray) -> None:
        self.elements: tuple[int, ...] = tuple(elements)
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError(f"ground set {self.elements} must be sorted without repeats")
        matrix = np.array(relation, dtype=bool)
        k = len(self.elements)
        if matrix.shape != (k, k):
            raise ValueError(f"relation has shape {matrix.shape}, expected {(k, k)}")
        closed = transitive_closure(matrix)
        strict = closed & closed.T & ~np.eye(k, dtype=bool)
        if strict.any():
            a, b = (int(v) for v in np.argwhere(strict)[0])
            x, y = self.elements[a], self.elements[b]
            raise BnPosetException(f"relation has a cycle through {x} and {y}", pair=(x, y))
        closed.flags.writeable = False
        self.relation = closed
        self._index = {x: a for a, x in enumerate(self.elements)}

    @classmethod
    def from_pairs(cls, elements: Iterable[int], pairs: Iterable[Pair]) -> "FinitePoset":
        """The poset generated by ``x ⪯ y`` for each pair (x, y)."""
        ground = tuple(sorted(set(elements)))
        index = {x: a for a, x in enumerate(ground)}
        matrix = np.zeros((len(ground), len(ground)), dtype=bool)
        for x, y in pairs:
            if x not in index or y not in index:
                raise ValueError(f"pair {(x, y)} leaves the ground set {ground}")
            matrix[index[x], index[y]] = True
        return cls._from_closed(ground, matrix)

    @classmethod
    def _from_closed(cls, elements: Sequence[int], relation: np.ndarray) -> "FinitePoset":
        return FinitePoset(elements, relation)

    @classmethod
    def antichain(cls, elements: Iterable[int]) -> "FinitePoset":
        return cls.from_pairs(elements, [])

    @classmethod
    def chain(cls, order: Sequence[int]) -> "FinitePoset":
        """The total order order[0] ≺ order[1] ≺ ..."""
        return cls.from_pairs(order, zip(order, order[1:]))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return (self.elements == other.elements
                and np.array_equal(self.relation, other.relation))

    def __hash__(self) -> int:
        return hash((self.elements, self.relation.tobytes()))

    def __repr__(self) -> str:
        covers = ", ".join(f"{x}<{y}" for x, y in self.covers())
        return f"{type(self).__name__}({list(self.elements)}; {covers})"

    def index(self, x: int) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"{x} is not an element of {list(self.elements)}") from None

    def leq(self, x: int, y: int) -> bool:
        return bool(self.relation[self.index(x), self.index(y)])

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def strict_pairs(self) -> list[Pair]:
        return [(self.elements[a], self.elements[b])
                for a, b in np.argwhere(self.relation) if a != b]

    def below(self, x: int) -> list[int]:
        """Elements strictly below x."""
        column = self.relation[:, self.index(x)]
        return [y for y, flag in zip(self.elements, column) if flag and y != x]

    def above(self, x: int) -> list[int]:
        row = self.relation[self.index(x)]
        return [y for y, flag in zip(self.elements, row) if flag and y != x]

    def hasse_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from(self.strict_pairs())
        reduced = nx.transitive_reduction(graph)
        reduced.add_nodes_from(self.elements)
        return reduced

    def covers(self) -> list[Pair]:
        """Cover pairs (x, y), x ⋖ y, sorted."""
        return sorted(self.hasse_graph().edges())

    def minimal_elements(self, subset: Optional[Iterable[int]] = None) -> list[int]:
        pool = set(self.elements if subset is None else subset)
        return sorted(x for x in pool if not any(self.lt(y, x) for y in pool))

    def down_closure(self, subset: Iterable[int]) -> frozenset[int]:
        chosen = [self.index(x) for x in subset]
        if not chosen:
            return frozenset()
        mask = self.relation[:, chosen].any(axis=1)
        return frozenset(x for x, flag in zip(self.elements, mask) if flag)

    def up_closure(self, subset: Iterable[int]) -> frozenset[int]:
        chosen = [self.index(x) for x in subset]
        if not chosen:
            return frozenset()
        mask = self.relation[chosen, :].any(axis=0)
        return frozenset(x for x, flag in zip(self.elements, mask) if flag)

    def induced(self, subset: Iterable[int]) -> "FinitePoset":
        ground = tuple(sorted(set(subset)))
        rows = [self.index(x) for x in ground]
        return FinitePoset(ground, self.relation[np.ix_(rows, rows)])

    def dual(self) -> "FinitePoset":
        """P*: x ⪯ y in P* iff y ⪯ x in P."""
        return self._from_closed(self.elements, self.relation.T)

    def reverse(self) -> "FinitePoset":
        """
        P̄: with x_1 < ... < x_k the ground set, x_j ⪯ x_l in P̄ iff
        x_{k+1-j} ⪯ x_{k+1-l} in P. The ground set is unchanged.
        """
        return self._from_closed(self.elements, self.relation[::-1, ::-1])

    def negate(self) -> "FinitePoset":
        """-U: the ground set {-x}, with -x ⪯ -y iff x ⪯ y."""
        ground = tuple(-x for x in reversed(self.elements))
        return self._from_closed(ground, self.relation[::-1, ::-1])

    def standardize(self) -> "FinitePoset":
        """st(U): relabel the ground set x_1 < ... < x_k by 1..k."""
        return FinitePoset(range(1, len(self) + 1), self.relation)

    def is_on_range(self) -> bool:
        return self.elements == tuple(range(1, len(self) + 1))

    def _require_on_range(self) -> None:
        if not self.is_on_range():
            raise ValueError(f"expected a poset on [1,{len(self)}], got {list(self.elements)}")

    def linear_orders(self) -> list[tuple[int, ...]]:
        if not self.elements:
            return [()]
        return sorted(tuple(order) for order in nx.all_topological_sorts(self.hasse_graph()))

    def linear_extensions(self) -> list[Permutation]:
        """Sigma_R(P): the permutations gamma with gamma(1) ≺ ... ≺ gamma(n) linear."""
        self._require_on_range()
        return [Permutation(order) for order in self.linear_orders()]

    def is_regular(self) -> bool:
        """
        For x < y < z: x ≺ z forces x ≺ y or y ≺ z, and z ≺ x forces
        z ≺ y or y ≺ x.
        """
        return self.regularity_witness() is None

    def regularity_witness(self) -> Optional[tuple[int, int, int]]:
        for x, y, z in combinations(self.elements, 3):
            if self.lt(x, z) and not (self.lt(x, y) or self.lt(y, z)):
                return (x, y, z)
            if self.lt(z, x) and not (self.lt(z, y) or self.lt(y, x)):
                return (x, y, z)
        return None

    def is_p_partition(self, values: Sequence[int]) -> bool:
        """values[a] is f(x_a); x ⪯ y gives f(x) <= f(y), strictly when x > y."""
        for a, b in np.argwhere(self.relation):
            if a == b:
                continue
            if values[a] > values[b]:
                return False
            if self.elements[a] > self.elements[b] and values[a] == values[b]:
                return False
        return True

    def p_partitions_bounded(self, V: int) -> list[tuple[int, ...]]:
        """All P-partitions with values in [1, V], listed by ground-set order."""
        return [values for values in product(range(1, V + 1), repeat=len(self))
                if self.is_p_partition(values)]

    def kp_truncated(self, V: int) -> TruncatedPoly:
        return TruncatedPoly.from_index_words(V, "A", self.p_partitions_bounded(V))

    def kp(self) -> QSymElement:
        """K_P = sum of F_{Des(gamma)} over the linear extensions gamma."""
        self._require_on_range()
        n = len(self)
        terms: dict[CompositionA, int] = {}
        for gamma in self.linear_extensions():
            comp = CompositionA.from_set(gamma.right_descents(), n)
            terms[comp] = terms.get(comp, 0) + 1
        return QSymElement(terms, "fundamental")

    def to_dict(self) -> dict:
        return {"elements": list(self.elements),
                "covers": [list(pair) for pair in self.covers()]}


def dualize(poset: FinitePoset) -> FinitePoset:
    return poset.dual()


def reverse(poset: FinitePoset) -> FinitePoset:
    return poset.reverse()


def linear_poset_A(gamma: Permutation) -> FinitePoset:
    """P(gamma) on [n]: i ≺ j iff gamma^{-1}(i) < gamma^{-1}(j)."""
    return FinitePoset.chain(gamma.window)


def disjoint_union_A(first: FinitePoset, second: FinitePoset) -> FinitePoset:
    """P1 ⊔ P2 on [m+n], the second factor shifted by m."""
    first._require_on_range()
    second._require_on_range()
    m = len(first)
    pairs = first.strict_pairs() + [(x + m, y + m) for x, y in second.strict_pairs()]
    return FinitePoset.from_pairs(range(1, m + len(second) + 1), pairs)


def all_posets(n: int) -> list[FinitePoset]:
    """Every partial order on [n], for n <= 3."""
    if n > 3:
        raise ValueError(f"exhaustive poset enumeration is limited to n <= 3, got {n}")
    ground = tuple(range(1, n + 1))
    candidates = [(x, y) for x in ground for y in ground if x != y]
    found = set()
    for k in range(len(candidates) + 1):
        for chosen in combinations(candidates, k):
            pairs = set(chosen)
            if any((y, x) in pairs for x, y in pairs):
                continue
            if any((x, z) not in pairs
                   for x, y in pairs for y2, z in pairs if y == y2 and x != z):
                continue
            found.add(FinitePoset.from_pairs(ground, pairs))
    log.debug(f"{len(found)} posets on [{n}]")
    return sorted(found, key=lambda p: (len(p.strict_pairs()), p.strict_pairs()))
