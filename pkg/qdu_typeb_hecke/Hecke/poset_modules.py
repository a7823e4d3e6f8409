"""
0-Hecke modules spanned by ascent-compatible sets: poset modules, simple
modules and weak Bruhat interval modules, with their characteristics.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Union

from ..Coxeter.compositions import CompositionA, CompositionB
from ..Coxeter.signed_permutation import Permutation, SignedPermutation
from ..Coxeter.weak_order import IntervalR
from ..Posets.bn_poset import BnPoset, linear_extensions_B
from ..Posets.finite_poset import FinitePoset
from ..QSym.qsym_elements import QSymBElement, QSymElement
from .hecke_module import HeckeModule, HeckeModuleException, Row, generators_of

log = logging.getLogger(__name__)

Word = Union[SignedPermutation, Permutation]


def _coxeter_type(elements: list[Word]) -> str:
    if all(isinstance(x, SignedPermutation) for x in elements):
        return "B"
    if all(isinstance(x, Permutation) for x in elements):
        return "A"
    raise HeckeModuleException("expected signed permutations or permutations, not a mixture")


def _simple(w: Word, i: int) -> Word:
    return type(w).simple(w.n, i)


def is_ascent_compatible(elements: Iterable[Word]) -> bool:
    """
    For every aligned (u, v, s, t), meaning s and t are right ascents of u
    and v with u s u^{-1} = v t v^{-1}, us lies in X iff vt does.
    """
    X = sorted(set(elements))
    if not X:
        return True
    members = set(X)
    gens = generators_of(_coxeter_type(X), X[0].n)
    reflections: dict[object, list[bool]] = {}
    for u in X:
        descents = u.right_descents()
        for s in gens:
            if s in descents:
                continue
            t = u * _simple(u, s) * u.inverse()
            reflections.setdefault(t, []).append(u.times_simple(s) in members)
    return all(len(set(flags)) == 1 for flags in reflections.values())


def module_from_ascent_compatible(elements: Iterable[Word],
                                  variant: str = "bar",
                                  poset: object = None,
                                  name: str = "") -> HeckeModule:
    """
    The module CX. For 'bar', pi-bar_i sends x to -x on descents, to x s_i
    when that is again in X, and to 0 otherwise. For 'sf' the stored matrix
    is pi_i - 1, with pi_i fixing x on descents, sending it to x s_i when
    possible and to 0 otherwise.
    """
    X = sorted(set(elements))
    if not X:
        raise HeckeModuleException("cannot build a module on an empty set")
    if variant not in ("bar", "sf"):
        raise HeckeModuleException(f"unknown variant {variant!r}")
    coxeter_type = _coxeter_type(X)
    n = X[0].n
    index = {x: j for j, x in enumerate(X)}
    actions: dict[int, list[Row]] = {}
    for i in generators_of(coxeter_type, n):
        rows: list[Row] = []
        for j, x in enumerate(X):
            target = index.get(x.times_simple(i))
            if i in x.right_descents():
                row: Row = ((j, -1),) if variant == "bar" else ()
            elif target is not None:
                row = ((target, 1),) if variant == "bar" else ((j, -1), (target, 1))
            else:
                row = () if variant == "bar" else ((j, -1),)
            rows.append(row)
        actions[i] = rows
    module = HeckeModule(coxeter_type, n, X, actions, variant, poset, name)
    log.debug(f"built {module!r}")
    return module


def module_MBP(poset: BnPoset) -> HeckeModule:
    return module_from_ascent_compatible(linear_extensions_B(poset), "bar", poset, "M^B_P")


def module_sfMBP(poset: BnPoset) -> HeckeModule:
    return module_from_ascent_compatible(linear_extensions_B(poset), "sf", poset, "sfM^B_P")


def module_MP_typeA(poset: FinitePoset) -> HeckeModule:
    return module_from_ascent_compatible(poset.linear_extensions(), "bar", poset, "M_P")


def module_sfMP_typeA(poset: FinitePoset) -> HeckeModule:
    return module_from_ascent_compatible(poset.linear_extensions(), "sf", poset, "sfM_P")


def simple_module_B(alpha: CompositionB) -> HeckeModule:
    """F^B_alpha: pi-bar_i acts by -1 for i in set_B(alpha) and by 0 otherwise."""
    gamma = SignedPermutation.with_descents(alpha.to_set(), alpha.size)
    return module_from_ascent_compatible([gamma], name=f"F^B{alpha}")


def simple_module_A(alpha: CompositionA) -> HeckeModule:
    gamma = Permutation.with_descents(alpha.to_set(), alpha.size)
    return module_from_ascent_compatible([gamma], name=f"F{alpha}")


def wbim(interval: IntervalR) -> HeckeModule:
    """B(I): the interval spans a module under the 'bar' action."""
    return module_from_ascent_compatible(interval.elements, name=f"B({interval})")


@dataclass(frozen=True)
class GrothendieckClass:
    """The image of [M] under the characteristic, in the fundamental basis."""

    element: Union[QSymBElement, QSymElement]

    def __add__(self, other: "GrothendieckClass") -> "GrothendieckClass":
        return GrothendieckClass(self.element + other.element)

    def __str__(self) -> str:
        return str(self.element)


def characteristic(module: HeckeModule) -> GrothendieckClass:
    """
    Sum of F_{Des(x)} over the basis (F_{Asc(x)} for the 'sf' variant).

    Raises:
        HeckeModuleException: if the module was not built from an
            ascent-compatible set.
    """
    if module.variant not in ("bar", "sf") or not all(
            isinstance(x, (SignedPermutation, Permutation)) for x in module.basis):
        raise HeckeModuleException(
            f"characteristic needs a module on an ascent-compatible set, got {module!r}"
        )
    gens = set(generators_of(module.coxeter_type, module.rank))
    n = module.rank
    composition = CompositionB if module.coxeter_type == "B" else CompositionA
    element_type = QSymBElement if module.coxeter_type == "B" else QSymElement
    terms: dict = {}
    for x in module.basis:
        descents = x.right_descents()
        chosen = descents if module.variant == "bar" else gens - descents
        comp = composition.from_set(chosen, n)
        terms[comp] = terms.get(comp, 0) + 1
    return GrothendieckClass(element_type(terms, "fundamental"))


def class_of_compositions(compositions: Iterable[CompositionB]) -> GrothendieckClass:
    terms: dict[CompositionB, int] = {}
    for alpha in compositions:
        terms[alpha] = terms.get(alpha, 0) + 1
    return GrothendieckClass(QSymBElement(terms, "fundamental"))

