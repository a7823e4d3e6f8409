"""
B_n posets: partial orders on [-n, n] with i ⪯ j iff -j ⪯ -i.

Type-B linear extensions, type-B P-partitions and the enumerator K^B_P
live here, with the JSON format the command line reads and writes.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from ..Coxeter.compositions import CompositionB
from ..Coxeter.signed_permutation import SignedPermutation, _check_rank
from ..QSym.qsym_elements import QSymBElement
from ..QSym.truncated import TruncatedPoly, expand_truncated
from .finite_poset import BnPosetException, FinitePoset, Pair

log = logging.getLogger(__name__)


class PosetFormatError(ValueError):
    pass


class BnPoset(FinitePoset):
    """A B_n poset on the ground set [-n, n]."""

    __slots__ = ("n",)

    def __init__(self, n: int, relation: np.ndarray) -> None:
        if n < 0:
            raise ValueError(f"rank must be non-negative, got {n}")
        self.n = n
        super().__init__(range(-n, n + 1), relation)
        mirrored = self.relation[::-1, ::-1].T
        broken = self.relation & ~mirrored
        if broken.any():
            a, b = (int(v) for v in np.argwhere(broken)[0])
            x, y = a - n, b - n
            raise BnPosetException(f"{x} ⪯ {y} holds but {-y} ⪯ {-x} does not", pair=(x, y))

    @classmethod
    def _from_closed(cls, elements: Sequence[int], relation: np.ndarray) -> FinitePoset:
        elements = tuple(elements)
        k = len(elements) // 2
        if elements == tuple(range(-k, k + 1)):
            return BnPoset(k, relation)
        return FinitePoset(elements, relation)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Pair], symmetrize: bool = False) -> "BnPoset":
        """
        The B_n poset generated by the given pairs.

        Args:
            n: rank
            covers: pairs (x, y) meaning x ⪯ y
            symmetrize: add (-y, -x) for each pair instead of rejecting
                relations that break the symmetry
        """
        pairs = [(int(x), int(y)) for x, y in covers]
        for x, y in pairs:
            if not (-n <= x <= n and -n <= y <= n):
                raise BnPosetException(f"pair {(x, y)} leaves [-{n},{n}]", pair=(x, y))
        if symmetrize:
            pairs += [(-y, -x) for x, y in pairs]
        matrix = np.zeros((2 * n + 1, 2 * n + 1), dtype=bool)
        for x, y in pairs:
            matrix[x + n, y + n] = True
        return cls(n, matrix)


def validate_bn(relation: np.ndarray) -> BnPoset:
    """Close a square relation matrix on [-n, n] and check the B_n axioms."""
    matrix = np.asarray(relation, dtype=bool)
    size = matrix.shape[0]
    if matrix.ndim != 2 or matrix.shape != (size, size) or size % 2 == 0:
        raise BnPosetException(f"expected a square matrix of odd size, got {matrix.shape}")
    return BnPoset(size // 2, matrix)


def linear_poset_B(gamma: SignedPermutation) -> BnPoset:
    """L_gamma = P(gamma): x ⪯ y iff gamma^{-1}(x) <= gamma^{-1}(y)."""
    pos = gamma.positions()
    return BnPoset(gamma.n, pos[:, None] <= pos[None, :])


def poset_of(permutations: Iterable[SignedPermutation]) -> BnPoset:
    """poset(U), the intersection of the orders L_sigma for sigma in U."""
    items = list(permutations)
    if not items:
        raise ValueError("poset of an empty set of signed permutations")
    for sigma in items[1:]:
        _check_rank(items[0], sigma)
    relation = np.ones((2 * items[0].n + 1,) * 2, dtype=bool)
    for sigma in items:
        pos = sigma.positions()
        relation &= pos[:, None] <= pos[None, :]
    return BnPoset(items[0].n, relation)


@lru_cache(maxsize=4096)
def linear_extensions_B(poset: BnPoset) -> tuple[SignedPermutation, ...]:
    """
    Sigma^B_R(P), sorted.

    The elements below 0 in a type-B linear extension are placed from the
    bottom, one element per absolute value, each only after everything
    below it. The elements above 0 then follow by symmetry.
    """
    n = poset.n
    below = {x: frozenset(poset.below(x)) for x in poset.elements}
    found: list[SignedPermutation] = []
    chosen: list[int] = []
    used: set[int] = set()

    def grow() -> None:
        if len(chosen) == n:
            found.append(SignedPermutation(tuple(-c for c in reversed(chosen))))
            return
        placed = set(chosen)
        for c in poset.elements:
            if c == 0 or abs(c) in used or not below[c] <= placed:
                continue
            chosen.append(c)
            used.add(abs(c))
            grow()
            chosen.pop()
            used.discard(abs(c))

    grow()
    log.debug(f"{len(found)} type-B linear extensions of a B_{n} poset")
    return tuple(sorted(found))


@dataclass(frozen=True)
class TypeBPartition:
    """A map f on [-n, n] with f(-i) = -f(i), stored as (f(1), ..., f(n))."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        return self.values[i - 1] if i > 0 else -self.values[-i - 1]

    def index_word(self) -> tuple[int, ...]:
        """Variable indices of x_{|f(1)|} ... x_{|f(n)|}."""
        return tuple(abs(v) for v in self.values)

    def is_partition_of(self, poset: BnPoset) -> bool:
        if poset.n != self.n:
            return False
        for i, j in poset.strict_pairs():
            fi, fj = self(i), self(j)
            if fi > fj or (i > j and fi == fj):
                return False
        return True


def p_partitions_bounded(poset: BnPoset, V: int) -> list[TypeBPartition]:
    """All type-B P-partitions with values in [-V, V]."""
    if V < 0:
        raise ValueError(f"bound must be non-negative, got {V}")
    candidates = (TypeBPartition(values)
                  for values in product(range(-V, V + 1), repeat=poset.n))
    return [f for f in candidates if f.is_partition_of(poset)]


def type_b_partition_extension(f: TypeBPartition, poset: BnPoset) -> SignedPermutation:
    """The type-B linear extension gamma of P with f a P(gamma)-partition."""
    if not f.is_partition_of(poset):
        raise ValueError(f"{f.values} is not a type-B P-partition")
    matches = [gamma for gamma in linear_extensions_B(poset)
               if f.is_partition_of(linear_poset_B(gamma))]
    if len(matches) != 1:
        raise BnPosetException(
            f"{f.values} belongs to {len(matches)} type-B linear extensions, expected one"
        )
    return matches[0]


def kbp(poset: BnPoset) -> QSymBElement:
    """K^B_P in the fundamental basis, from the type-B linear extensions."""
    terms: dict[CompositionB, int] = {}
    for gamma in linear_extensions_B(poset):
        comp = CompositionB.from_set(gamma.right_descents(), poset.n)
        terms[comp] = terms.get(comp, 0) + 1
    return QSymBElement(terms, "fundamental")


def kbp_truncated(poset: BnPoset, V: int) -> TruncatedPoly:
    """The defining series of K^B_P over x_0..x_V, from bounded P-partitions."""
    words = (f.index_word() for f in p_partitions_bounded(poset, V))
    return TruncatedPoly.from_index_words(V, "B", words)


def kbp_oracle(poset: BnPoset, V: int) -> bool:
    return expand_truncated(kbp(poset), V) == kbp_truncated(poset, V)


def poset_to_dict(poset: BnPoset) -> dict:
    return {"n": poset.n, "covers": [list(pair) for pair in poset.covers()]}


def poset_from_dict(data: object, source: str = "<data>") -> BnPoset:
    if not isinstance(data, dict):
        raise PosetFormatError(f"{source}: expected a JSON object")
    for key in ("n", "covers"):
        if key not in data:
            raise PosetFormatError(f"{source}: missing key {key!r}")
    n, covers = data["n"], data["covers"]
    if not isinstance(n, int) or n < 0:
        raise PosetFormatError(f"{source}: 'n' must be a non-negative integer, got {n!r}")
    if not isinstance(covers, list) or any(
            not isinstance(c, list) or len(c) != 2 or not all(isinstance(v, int) for v in c)
            for c in covers):
        raise PosetFormatError(f"{source}: 'covers' must be a list of integer pairs")
    try:
        return BnPoset.from_covers(n, covers, symmetrize=bool(data.get("symmetrize", False)))
    except BnPosetException as err:
        raise PosetFormatError(f"{source}: {err}") from err


def load_poset(path: Union[str, Path]) -> BnPoset:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise PosetFormatError(f"{path}, line {err.lineno}: {err.msg}") from err
    poset = poset_from_dict(data, str(path))
    log.debug(f"loaded a B_{poset.n} poset from {path}")
    return poset


def dump_poset(poset: BnPoset, path: Optional[Union[str, Path]] = None) -> str:
    text = json.dumps(poset_to_dict(poset), indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
