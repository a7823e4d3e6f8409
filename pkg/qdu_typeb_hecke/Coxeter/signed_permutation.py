# -*- coding: utf-8 -*-
"""
Permutations of [n] and signed permutations of [-n, n] in window notation.

Products compose right to left, (a * b)(i) = a(b(i)). Multiplying by a
simple reflection on the right acts on positions, on the left it acts on
values. Signed permutations are stored by their window only; the values on
[-n, -1] and at 0 are computed from sigma(-i) = -sigma(i).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence, Union

import numpy as np

log = logging.getLogger(__name__)

# |B_6| = 46080, the largest group we are willing to enumerate
MAX_RANK = 6

Reflection = tuple[int, int]


class RankMismatchError(ValueError):
    pass


class SignedPermutationException(ValueError):
    pass


def _check_rank(a: Union["Permutation", "SignedPermutation"],
                b: Union["Permutation", "SignedPermutation"]) -> None:
    if a.n != b.n:
        raise RankMismatchError(
            f"rank mismatch: {a} has rank {a.n} but {b} has rank {b.n}"
        )


def _check_max_rank(n: int, max_rank: int) -> None:
    if n < 0:
        raise ValueError(f"rank must be non-negative, got {n}")
    if n > max_rank:
        raise ValueError(
            f"rank {n} exceeds the enumeration cap {max_rank}"
        )


def _parse_window(text: str) -> tuple[int, ...]:
    """
    Read a window such as ``[3,1,-2]``, ``<3, 1, -2>``, ``3 1 -2`` or ``132``.

    Args:
        text: window text

    Returns:
        the entries as integers
    """
    body = text.strip()
    for left, right in (("[", "]"), ("<", ">"), ("⟨", "⟩"), ("(", ")")):
        if body.startswith(left) and body.endswith(right):
            body = body[1:-1]
            break
    body = body.strip()
    if not body:
        return ()
    try:
        if "," in body:
            return tuple(int(tok) for tok in body.split(","))
        if any(ch.isspace() for ch in body):
            return tuple(int(tok) for tok in body.split())
        if body.isdigit():
            return tuple(int(ch) for ch in body)
        return (int(body),)
    except ValueError as err:
        raise SignedPermutationException(
            f"cannot read a window from {text!r}: {err}"
        ) from err


def standardize(word: Sequence[int]) -> "Permutation":
    """
    The permutation st(w) with st(w)(i) < st(w)(j) iff w_i <= w_j for i < j.
    """
    order = sorted(range(len(word)), key=lambda k: (word[k], k))
    window = [0] * len(word)
    for rank, k in enumerate(order, 1):
        window[k] = rank
    return Permutation(tuple(window))


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Element of the symmetric group S_n, given by (w(1), ..., w(n)).
    """

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise SignedPermutationException(
                f"{list(window)} is not a permutation of [{len(window)}]"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"{i} is outside [1,{self.n}]")
        return self.window[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        _check_rank(self, other)
        return Permutation(tuple(self.window[v - 1] for v in other.window))

    def __str__(self) -> str:
        if self.n == 0:
            return "[]"
        if self.n < 10:
            return "".join(str(v) for v in self.window)
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.window, 1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def right_descents(self) -> frozenset[int]:
        w = self.window
        return frozenset(i for i in range(1, self.n) if w[i - 1] > w[i])

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    @cached_property
    def length(self) -> int:
        w = self.window
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n)
                   if w[i] > w[j])

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication by s_i, swapping positions i and i+1."""
        if not 1 <= i < self.n:
            raise ValueError(f"s_{i} is not a generator of S_{self.n}")
        w = list(self.window)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def simple_times(self, i: int) -> "Permutation":
        """Left multiplication by s_i, swapping the values i and i+1."""
        return Permutation.simple(self.n, i) * self

    def reduced_word(self) -> tuple[int, ...]:
        word = []
        w = self
        while True:
            descents = w.right_descents()
            if not descents:
                break
            i = min(descents)
            word.append(i)
            w = w.times_simple(i)
        return tuple(reversed(word))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        return cls.identity(n).times_simple(i)

    @classmethod
    def all(cls, n: int, max_rank: int = 8) -> tuple["Permutation", ...]:
        _check_max_rank(n, max_rank)
        return _all_permutations(n)

    @classmethod
    def with_descents(cls, descents: Iterable[int], n: int) -> "Permutation":
        """
        A permutation of [n] whose right descent set is exactly ``descents``.

        The blocks between consecutive descents increase and take the largest
        remaining values from left to right.
        """
        cuts = sorted(set(descents))
        if any(not 1 <= i < n for i in cuts):
            raise ValueError(f"descent set {cuts} is not a subset of [1,{n - 1}]")
        bounds = [0, *cuts, n]
        window: list[int] = []
        top = n
        for start, stop in zip(bounds, bounds[1:]):
            size = stop - start
            window.extend(range(top - size + 1, top + 1))
            top -= size
        return cls(tuple(window))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(_parse_window(text))


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(w) for w in permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def reflections(n: int) -> tuple[Reflection, ...]:
    """
    The n**2 reflections t_(i,j) = (i,j)(-i,-j) of B_n as canonical pairs.

    A pair (i, j) is canonical when 1 <= i < j <= n, or 1 <= i <= -j <= n.
    """
    refl: list[Reflection] = []
    for i in range(1, n + 1):
        refl.extend((i, j) for j in range(i + 1, n + 1))
        refl.extend((i, j) for j in range(-n, -i + 1))
    return tuple(refl)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """
    Element of the hyperoctahedral group B_n, given by (w(1), ..., w(n)).
    """

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise SignedPermutationException(
                f"{list(window)} is not a signed permutation of rank {len(window)}"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if abs(i) > self.n:
            raise ValueError(f"{i} is outside [-{self.n},{self.n}]")
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        _check_rank(self, other)
        return SignedPermutation(tuple(self(v) for v in other.window))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.window, 1):
            inv[abs(v) - 1] = pos if v > 0 else -pos
        return SignedPermutation(tuple(inv))

    def positions(self) -> np.ndarray:
        """
        Array ``p`` with ``p[x + n]`` the position of ``x`` in
        sigma(-n), ..., sigma(n), that is sigma^{-1}(x).
        """
        n = self.n
        pos = np.zeros(2 * n + 1, dtype=int)
        for i in range(-n, n + 1):
            pos[self(i) + n] = i
        return pos

    def right_descents(self) -> frozenset[int]:
        values = (0,) + self.window
        return frozenset(i for i in range(self.n) if values[i] > values[i + 1])

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    @cached_property
    def inversion_bits(self) -> int:
        """Bitset over ``reflections(n)`` of the inversion set."""
        inv = self.inverse()
        bits = 0
        for k, (i, j) in enumerate(reflections(self.n)):
            if j > 0:
                hit = inv(i) > inv(j)
            else:
                hit = inv(j) > inv(i)
            if hit:
                bits |= 1 << k
        return bits

    def inversions(self) -> frozenset[Reflection]:
        bits = self.inversion_bits
        return frozenset(t for k, t in enumerate(reflections(self.n))
                         if bits >> k & 1)

    @cached_property
    def length(self) -> int:
        return bin(self.inversion_bits).count("1")

    def times_simple(self, i: int) -> "SignedPermutation":
        """Right multiplication by s_i; s_0 negates the first entry."""
        if not 0 <= i < self.n:
            raise ValueError(f"s_{i} is not a generator of B_{self.n}")
        w = list(self.window)
        if i == 0:
            w[0] = -w[0]
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return SignedPermutation(tuple(w))

    def simple_times(self, i: int) -> "SignedPermutation":
        """Left multiplication by s_i."""
        return SignedPermutation.simple(self.n, i) * self

    def reduced_word(self) -> tuple[int, ...]:
        word = []
        w = self
        while True:
            descents = w.right_descents()
            if not descents:
                break
            i = min(descents)
            word.append(i)
            w = w.times_simple(i)
        return tuple(reversed(word))

    def leq_weak_R(self, other: "SignedPermutation") -> bool:
        _check_rank(self, other)
        return (self.inversion_bits & ~other.inversion_bits) == 0

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(-1, -n - 1, -1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "SignedPermutation":
        return cls.identity(n).times_simple(i)

    @classmethod
    def all(cls, n: int, max_rank: int = MAX_RANK) -> tuple["SignedPermutation", ...]:
        """All of B_n in lexicographic order of windows."""
        _check_max_rank(n, max_rank)
        return _all_signed_permutations(n)

    @classmethod
    def with_descents(cls, descents: Iterable[int], n: int) -> "SignedPermutation":
        """A signed permutation of rank n with right descent set ``descents``."""
        wanted = set(descents)
        if any(not 0 <= i < n for i in wanted):
            raise ValueError(f"descent set {sorted(wanted)} is not a subset of [0,{n - 1}]")
        if 0 not in wanted:
            return cls(Permutation.with_descents(wanted, n).window)
        # all entries negative: sigma(0) = 0 > sigma(1), and the remaining
        # descents are the ascents of the underlying permutation
        ascents = set(range(1, n)) - wanted
        return cls(tuple(-v for v in Permutation.with_descents(ascents, n).window))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        return cls(_parse_window(text))


@lru_cache(maxsize=None)
def _all_signed_permutations(n: int) -> tuple[SignedPermutation, ...]:
    elements = [
        SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))
        for perm in permutations(range(1, n + 1))
        for signs in product((1, -1), repeat=n)
    ]
    log.debug(f"enumerated {len(elements)} signed permutations of rank {n}")
    return tuple(sorted(elements))


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    return a * b


def descent_set_B(sigma: SignedPermutation) -> frozenset[int]:
    return sigma.right_descents()


def inversion_set_B(sigma: SignedPermutation) -> frozenset[Reflection]:
    return sigma.inversions()
