"""
Quasisymmetric functions restricted to finitely many variables.

Type-B series live in x_0, ..., x_V and type-A series in x_1, ..., x_V. A
polynomial is stored as a map from exponent vectors to integers.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterable, Literal, Mapping, Optional, Union

import numpy as np

from .qsym_elements import QSymBasisError, QSymBElement, QSymElement

Alphabet = Literal["A", "B"]


class TruncatedPoly:
    """Integer polynomial in the variables of a type-A or type-B alphabet."""

    __slots__ = ("V", "alphabet", "_terms")

    def __init__(self, V: int, alphabet: Alphabet,
                 terms: Optional[Mapping[tuple[int, ...], int]] = None) -> None:
        if V < 0:
            raise ValueError(f"truncation must be non-negative, got {V}")
        if alphabet not in ("A", "B"):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        self.V = V
        self.alphabet = alphabet
        collected: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != self.nvars:
                raise ValueError(f"exponent vector {key} does not have {self.nvars} entries")
            collected[key] = collected.get(key, 0) + int(coeff)
        self._terms = {k: v for k, v in collected.items() if v != 0}

    @property
    def nvars(self) -> int:
        return self.V + 1 if self.alphabet == "B" else self.V

    @property
    def first_index(self) -> int:
        return 0 if self.alphabet == "B" else 1

    @classmethod
    def from_index_words(cls, V: int, alphabet: Alphabet,
                         words: Iterable[Iterable[int]]) -> "TruncatedPoly":
        """Sum of the monomials x_{i_1} ... x_{i_n} over the given index words."""
        poly = cls(V, alphabet)
        first = poly.first_index
        terms: dict[tuple[int, ...], int] = {}
        for word in words:
            idx = np.asarray(list(word), dtype=int) - first
            exps = tuple(np.bincount(idx, minlength=poly.nvars).tolist()) if idx.size \
                else (0,) * poly.nvars
            terms[exps] = terms.get(exps, 0) + 1
        return cls(V, alphabet, terms)

    def _check_compatible(self, other: "TruncatedPoly") -> None:
        if (self.V, self.alphabet) != (other.V, other.alphabet):
            raise ValueError(
                f"alphabets differ: ({self.alphabet}, V={self.V}) and "
                f"({other.alphabet}, V={other.V})"
            )

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_compatible(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) + v
        return TruncatedPoly(self.V, self.alphabet, terms)

    def __neg__(self) -> "TruncatedPoly":
        return TruncatedPoly(self.V, self.alphabet, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        return self + (-other)

    def scale(self, c: int) -> "TruncatedPoly":
        return TruncatedPoly(self.V, self.alphabet, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_compatible(other)
        terms: dict[tuple[int, ...], int] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                terms[key] = terms.get(key, 0) + va * vb
        return TruncatedPoly(self.V, self.alphabet, terms)

    def tensor(self, other: "TruncatedPoly") -> "TruncatedPoly":
        """
        Product in disjoint alphabets, the variables of ``other`` placed after
        those of ``self``. A type-B polynomial in x_0..x_V tensored with a
        type-A polynomial in y_1..y_W becomes a polynomial in x_0..x_{V+W}
        with y_j read as x_{V+j}.
        """
        if other.alphabet != "A":
            raise ValueError("the right tensor factor must use a type-A alphabet")
        terms: dict[tuple[int, ...], int] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                terms[ka + kb] = terms.get(ka + kb, 0) + va * vb
        return TruncatedPoly(self.V + other.V, self.alphabet, terms)

    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self._terms})

    def items(self):
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return (self.V, self.alphabet, self._terms) == (other.V, other.alphabet, other._terms)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        first = self.first_index
        pieces = []
        for exps, coeff in sorted(self._terms.items(), reverse=True):
            factors = [f"x{k + first}" + (f"^{e}" if e > 1 else "")
                       for k, e in enumerate(exps) if e]
            mono = "*".join(factors) or "1"
            pieces.append(mono if coeff == 1 else f"{coeff}*{mono}")
        return " + ".join(pieces)


def _strict_ok(word: tuple[int, ...], strict: frozenset[int], start: Optional[int]) -> bool:
    """
    Check i_j < i_{j+1} for each j in ``strict``. With ``start`` given, the
    word is read as i_1..i_n preceded by i_0 = start.
    """
    full = word if start is None else (start,) + word
    offset = 0 if start is not None else 1
    return all(full[j - offset] < full[j - offset + 1] for j in strict)


def _expand_monomial_B(parts: tuple[int, ...], V: int) -> TruncatedPoly:
    if not parts:
        return TruncatedPoly(V, "B", {(0,) * (V + 1): 1})
    terms: dict[tuple[int, ...], int] = {}
    for rest in combinations(range(1, V + 1), len(parts) - 1):
        exps = [0] * (V + 1)
        exps[0] += parts[0]
        for i, a in zip(rest, parts[1:]):
            exps[i] += a
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return TruncatedPoly(V, "B", terms)


def _expand_monomial_A(parts: tuple[int, ...], V: int) -> TruncatedPoly:
    terms: dict[tuple[int, ...], int] = {}
    for chosen in combinations(range(1, V + 1), len(parts)):
        exps = [0] * V
        for i, a in zip(chosen, parts):
            exps[i - 1] += a
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return TruncatedPoly(V, "A", terms)


def _expand_fundamental_B(descents: frozenset[int], n: int, V: int) -> TruncatedPoly:
    words = (w for w in combinations_with_replacement(range(0, V + 1), n)
             if _strict_ok(w, descents, start=0))
    return TruncatedPoly.from_index_words(V, "B", words)


def _expand_fundamental_A(descents: frozenset[int], n: int, V: int) -> TruncatedPoly:
    words = (w for w in combinations_with_replacement(range(1, V + 1), n)
             if _strict_ok(w, descents, start=None))
    return TruncatedPoly.from_index_words(V, "A", words)


def expand_truncated(f: Union[QSymElement, QSymBElement], V: int) -> TruncatedPoly:
    """
    The defining series of ``f`` restricted to variables of index at most V.

    Args:
        f: element in either basis
        V: largest variable index kept

    Returns:
        the truncated polynomial
    """
    if V < 1:
        raise ValueError(f"truncation must be at least 1, got {V}")
    if isinstance(f, QSymBElement):
        alphabet: Alphabet = "B"
    elif isinstance(f, QSymElement):
        alphabet = "A"
    else:
        raise QSymBasisError(f"cannot expand {type(f).__name__}")
    total = TruncatedPoly(V, alphabet)
    for comp, coeff in f.items():
        if alphabet == "B":
            piece = (_expand_fundamental_B(comp.to_set(), comp.size, V)
                     if f.basis == "fundamental" else _expand_monomial_B(comp.parts, V))
        else:
            piece = (_expand_fundamental_A(comp.to_set(), comp.size, V)
                     if f.basis == "fundamental" else _expand_monomial_A(comp.parts, V))
        total = total + piece.scale(coeff)
    return total
