"""
Distinguished and regular B_n posets.

A B_n poset is distinguished when every x comparable to -x is also
comparable to 0. Regular posets are distinguished posets satisfying the
betweenness condition; their type-B linear extensions form the right weak
interval [sigma_P, rho_P]_R.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Optional, Union

from ..Coxeter.signed_permutation import SignedPermutation
from .bn_poset import BnPoset, linear_extensions_B, poset_of
from .finite_poset import FinitePoset

log = logging.getLogger(__name__)

Witness = tuple[int, ...]


class NotRegularError(ValueError):
    """Carries ``witness``: (x,) for a non-distinguished x, else a triple."""

    def __init__(self, message: str, witness: Witness) -> None:
        super().__init__(message)
        self.witness = witness


def is_distinguished(poset: BnPoset) -> bool:
    return distinguished_witness(poset) is None


def distinguished_witness(poset: BnPoset) -> Optional[int]:
    for x in range(1, poset.n + 1):
        if poset.comparable(x, -x) and not poset.comparable(x, 0):
            return x
    return None


def regularity_witness(poset: Union[BnPoset, FinitePoset]) -> Optional[Witness]:
    """The first obstruction to regularity, or None for a regular poset."""
    if isinstance(poset, BnPoset):
        x = distinguished_witness(poset)
        if x is not None:
            return (x,)
    return poset.regularity_witness()


def is_regular(poset: Union[BnPoset, FinitePoset]) -> bool:
    return regularity_witness(poset) is None


def distinguished_representative(poset: BnPoset) -> BnPoset:
    """The distinguished poset with the same type-B linear extensions."""
    return poset_of(linear_extensions_B(poset))


def sigma_rho_endpoints(poset: BnPoset) -> tuple[SignedPermutation, SignedPermutation]:
    """
    (sigma_P, rho_P) for a regular B_n poset.

    Starting from the elements above 0 together with the positive (for
    sigma) or negative (for rho) elements incomparable to 0, repeatedly
    remove the smallest (for sigma) or largest (for rho) minimal element.

    Raises:
        NotRegularError: if P is not regular.
    """
    witness = regularity_witness(poset)
    if witness is not None:
        raise NotRegularError(f"poset is not regular, witness {witness}", witness)
    n = poset.n
    above_zero = {x for x in poset.elements if poset.lt(0, x)}
    loose = {x for x in poset.elements if x != 0 and not poset.comparable(x, 0)}
    first = above_zero | {x for x in loose if x > 0}
    second = above_zero | {x for x in loose if x < 0}
    a, b = [], []
    for _ in range(n):
        low = min(poset.minimal_elements(first))
        high = max(poset.minimal_elements(second))
        a.append(low)
        b.append(high)
        first.discard(low)
        second.discard(high)
    sigma, rho = SignedPermutation(tuple(a)), SignedPermutation(tuple(b))
    log.debug(f"regular poset has endpoints {sigma} and {rho}")
    return sigma, rho


def _symmetric_orbits(n: int) -> list[frozenset[tuple[int, int]]]:
    ground = range(-n, n + 1)
    orbits = {frozenset({(x, y), (-y, -x)}) for x in ground for y in ground if x != y}
    return sorted(orbits, key=sorted)


def all_bn_posets(n: int) -> list[BnPoset]:
    """Every B_n poset, for n <= 2, by filtering unions of symmetric pair orbits."""
    if n > 2:
        raise ValueError(f"exhaustive B_n poset enumeration is limited to n <= 2, got {n}")
    orbits = _symmetric_orbits(n)
    found = []
    for k in range(len(orbits) + 1):
        for chosen in combinations(orbits, k):
            pairs = frozenset().union(*chosen)
            if any((y, x) in pairs for x, y in pairs):
                continue
            if any((x, z) not in pairs
                   for x, y in pairs for y2, z in pairs if y == y2 and x != z):
                continue
            found.append(BnPoset.from_covers(n, pairs))
    log.debug(f"{len(found)} B_{n} posets")
    return found
