"""
Elements of QSym and QSym^B with exact integer coefficients.

An element is a finite map from compositions to non-zero integers, tagged
with the basis it is written in. Graded pieces are read off the sizes of
the compositions.
"""

from __future__ import annotations

from typing import ClassVar, Iterable, Iterator, Literal, Mapping, Optional, Union

import pandas as pd

from ..Coxeter.compositions import CompositionA, CompositionB

BasisName = Literal["fundamental", "monomial"]
Composition = Union[CompositionA, CompositionB]


class QSymBasisError(ValueError):
    pass


class _QSymElement:
    """Shared arithmetic of type-A and type-B elements."""

    composition_type: ClassVar[type]
    symbols: ClassVar[dict[str, str]]
    tags: ClassVar[dict[str, str]]

    __slots__ = ("_terms", "basis")

    def __init__(self,
                 terms: Optional[Mapping[object, int]] = None,
                 basis: BasisName = "fundamental") -> None:
        if basis not in ("fundamental", "monomial"):
            raise QSymBasisError(f"unknown basis {basis!r}")
        collected: dict[Composition, int] = {}
        for key, coeff in (terms or {}).items():
            comp = self._coerce(key)
            collected[comp] = collected.get(comp, 0) + int(coeff)
        self._terms = {c: v for c, v in sorted(collected.items()) if v != 0}
        self.basis = basis

    @classmethod
    def _coerce(cls, key: object) -> Composition:
        if isinstance(key, cls.composition_type):
            return key
        if isinstance(key, (CompositionA, CompositionB)):
            raise QSymBasisError(
                f"{type(key).__name__} {key} cannot index a {cls.__name__}"
            )
        return cls.composition_type(tuple(key))

    @classmethod
    def F(cls, parts: Union[Composition, Iterable[int]]):
        """The fundamental basis element indexed by ``parts``."""
        return cls({cls._coerce(parts): 1}, "fundamental")

    @classmethod
    def M(cls, parts: Union[Composition, Iterable[int]]):
        """The monomial basis element indexed by ``parts``."""
        return cls({cls._coerce(parts): 1}, "monomial")

    @classmethod
    def F_set(cls, subset: Iterable[int], n: int):
        return cls.F(cls.composition_type.from_set(subset, n))

    @classmethod
    def one(cls):
        return cls.F(())

    @classmethod
    def zero(cls, basis: BasisName = "fundamental"):
        return cls({}, basis)

    @property
    def basis_tag(self) -> str:
        return self.tags[self.basis]

    def items(self) -> Iterator[tuple[Composition, int]]:
        return iter(self._terms.items())

    def coefficient(self, parts: Union[Composition, Iterable[int]]) -> int:
        return self._terms.get(self._coerce(parts), 0)

    def support(self) -> list[Composition]:
        return list(self._terms)

    def degrees(self) -> list[int]:
        return sorted({c.size for c in self._terms})

    def homogeneous_component(self, degree: int):
        return type(self)({c: v for c, v in self._terms.items() if c.size == degree},
                          self.basis)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check_compatible(self, other: object) -> None:
        if type(other) is not type(self):
            raise QSymBasisError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other.basis != self.basis:
            raise QSymBasisError(
                f"cannot combine the {self.basis} and {other.basis} bases"
            )

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self._terms)
        for c, v in other._terms.items():
            terms[c] = terms.get(c, 0) + v
        return type(self)(terms, self.basis)

    def __neg__(self):
        return type(self)({c: -v for c, v in self._terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)({c: scalar * v for c, v in self._terms.items()}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        symbol = self.symbols[self.basis]
        pieces = []
        for comp, coeff in self._terms.items():
            label = f"{symbol}[{comp}]"
            if coeff == 1:
                body = label
            elif coeff == -1:
                body = f"-{label}"
            else:
                body = f"{coeff}*{label}"
            pieces.append(body)
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def to_records(self) -> list[dict]:
        return [{"basis": self.basis_tag, "composition": list(comp.parts), "coeff": coeff}
                for comp, coeff in self._terms.items()]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.to_records(), columns=["basis", "composition", "coeff"])


class QSymElement(_QSymElement):
    """Element of QSym indexed by type-A compositions."""

    composition_type = CompositionA
    symbols = {"fundamental": "F", "monomial": "M"}
    tags = {"fundamental": "FundamentalA", "monomial": "MonomialA"}
    __slots__ = ()


class QSymBElement(_QSymElement):
    """Element of QSym^B indexed by type-B compositions."""

    composition_type = CompositionB
    symbols = {"fundamental": "F^B", "monomial": "M^B"}
    tags = {"fundamental": "FundamentalB", "monomial": "MonomialB"}
    __slots__ = ()


TensorTerm = tuple[Composition, CompositionA, int]


def combine_terms(terms: Iterable[TensorTerm]) -> list[TensorTerm]:
    """Collect equal pairs, drop zeros and sort."""
    total: dict[tuple[Composition, CompositionA], int] = {}
    for left, right, coeff in terms:
        total[(left, right)] = total.get((left, right), 0) + coeff
    return [(left, right, coeff) for (left, right), coeff in sorted(total.items()) if coeff]


def tensor_terms(left: _QSymElement, right: QSymElement) -> list[TensorTerm]:
    """The pure tensor left ⊗ right as a list of triples."""
    return combine_terms((a, b, ca * cb) for a, ca in left.items() for b, cb in right.items())
