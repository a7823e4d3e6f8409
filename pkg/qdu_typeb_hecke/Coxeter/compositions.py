"""
Compositions of type A and type B and their descent-set bijections.

A type-B composition may start with a zero part. The empty composition is
the only composition of 0 in both types; ``(0,)`` is read as the empty one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, chain, combinations
from typing import Iterable, Iterator, Sequence


class CompositionException(ValueError):
    pass


def subsets(ground: Sequence[int]) -> Iterator[frozenset[int]]:
    """All subsets of ``ground`` by increasing size."""
    items = tuple(ground)
    for subset in chain.from_iterable(combinations(items, k)
                                      for k in range(len(items) + 1)):
        yield frozenset(subset)


def _parse_parts(text: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError as err:
        raise CompositionException(f"cannot read a composition from {text!r}") from err


def _from_cuts(cuts: Iterable[int], n: int) -> tuple[int, ...]:
    ordered = sorted(cuts)
    bounds = [0, *ordered, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@dataclass(frozen=True, order=True)
class CompositionA:
    """A composition (a_1, ..., a_k) of n with positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise CompositionException(f"{parts} has a non-positive part")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def to_set(self) -> frozenset[int]:
        """set(alpha), the partial sums other than the total."""
        return frozenset(accumulate(self.parts[:-1]))

    @classmethod
    def from_set(cls, subset: Iterable[int], n: int) -> "CompositionA":
        """comp(I) for I a subset of [n-1]."""
        cuts = set(subset)
        if any(not 1 <= i < n for i in cuts):
            raise CompositionException(
                f"{sorted(cuts)} is not a subset of [1,{n - 1}]"
            )
        if n == 0:
            return cls(())
        return cls(_from_cuts(cuts, n))

    def concatenate(self, other: "CompositionA") -> "CompositionA":
        return CompositionA(self.parts + other.parts)

    def near_concatenate(self, other: "CompositionA") -> "CompositionA":
        """alpha ⊙ beta, merging the last part of alpha with the first of beta."""
        if not self.parts or not other.parts:
            raise CompositionException("near-concatenation needs two non-empty compositions")
        return CompositionA(self.parts[:-1] + (self.parts[-1] + other.parts[0],)
                            + other.parts[1:])

    def refines(self, other: "CompositionA") -> bool:
        """True when set(other) is contained in set(self)."""
        return self.size == other.size and other.to_set() <= self.to_set()

    def refinements(self) -> list["CompositionA"]:
        n = self.size
        base = self.to_set()
        rest = [i for i in range(1, n) if i not in base]
        return sorted(CompositionA.from_set(base | extra, n) for extra in subsets(rest))

    @classmethod
    def all(cls, n: int) -> list["CompositionA"]:
        return sorted(cls.from_set(s, n) for s in subsets(range(1, n)))

    @classmethod
    def parse(cls, text: str) -> "CompositionA":
        return cls(_parse_parts(text))


@dataclass(frozen=True, order=True)
class CompositionB:
    """A type-B composition: first part may be 0, the others are positive."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if parts == (0,):
            parts = ()
        object.__setattr__(self, "parts", parts)
        if parts and (parts[0] < 0 or any(p < 1 for p in parts[1:])):
            raise CompositionException(f"{parts} is not a type-B composition")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def to_set(self) -> frozenset[int]:
        """set_B(alpha), the partial sums other than the total."""
        return frozenset(accumulate(self.parts[:-1]))

    @classmethod
    def from_set(cls, subset: Iterable[int], n: int) -> "CompositionB":
        """comp_B(I) for I a subset of [0, n-1]."""
        cuts = set(subset)
        if any(not 0 <= i < n for i in cuts):
            raise CompositionException(
                f"{sorted(cuts)} is not a subset of [0,{n - 1}]"
            )
        if n == 0:
            return cls(())
        return cls(_from_cuts(cuts, n))

    def refines(self, other: "CompositionB") -> bool:
        """alpha ⪯_B beta: set_B(beta) is contained in set_B(alpha)."""
        return self.size == other.size and other.to_set() <= self.to_set()

    def refinements(self) -> list["CompositionB"]:
        """All beta with beta ⪯_B alpha."""
        n = self.size
        base = self.to_set()
        rest = [i for i in range(n) if i not in base]
        return sorted(CompositionB.from_set(base | extra, n) for extra in subsets(rest))

    @classmethod
    def all(cls, n: int) -> list["CompositionB"]:
        return sorted(cls.from_set(s, n) for s in subsets(range(n)))

    @classmethod
    def parse(cls, text: str) -> "CompositionB":
        return cls(_parse_parts(text))
