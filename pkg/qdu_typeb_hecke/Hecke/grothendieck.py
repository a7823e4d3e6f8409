"""
Composition factors of poset modules and weak Bruhat interval modules.

Adding a relation (u, v) swapped between two linear extensions splits
M^B_P through the short exact sequence
0 -> M^B_{P_(v,u)} -> M^B_P -> M^B_{P_(u,v)} -> 0, and a right weak
interval splits into a lower interval and an upper one spanning a
submodule. Repeating either step down to one-element sets gives the
simple factors.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Optional, Sequence

from ..Coxeter.compositions import CompositionB
from ..Coxeter.weak_order import IntervalR
from ..Posets.bn_poset import BnPoset, linear_extensions_B
from ..Posets.finite_poset import Pair
from ..Posets.surgery import extend_pair, incB
from .hecke_module import HeckeModuleException
from .poset_modules import GrothendieckClass, class_of_compositions, wbim

log = logging.getLogger(__name__)

PairChooser = Callable[[Sequence[Pair]], Pair]


def _first_pair(pairs: Sequence[Pair]) -> Pair:
    return pairs[0]


def grothendieck_decompose(poset: BnPoset,
                           chooser: Optional[PairChooser] = None) -> Counter:
    """
    Multiset of descent compositions of the simple factors of M^B_P.

    Args:
        poset: a B_n poset
        chooser: picks the pair (u, v), u < v, to split on next from the
            sorted candidates. The result does not depend on it.

    Returns:
        Counter of CompositionB
    """
    choose = chooser or _first_pair
    factors: Counter = Counter()
    stack = [poset]
    while stack:
        current = stack.pop()
        candidates = sorted((u, v) for u, v in incB(current) if u < v)
        if not candidates:
            (gamma,) = linear_extensions_B(current)
            factors[CompositionB.from_set(gamma.right_descents(), current.n)] += 1
            continue
        u, v = choose(candidates)
        stack.append(extend_pair(current, u, v))
        stack.append(extend_pair(current, v, u))
    log.debug(f"{sum(factors.values())} composition factors for a poset of rank {poset.n}")
    return factors


def decomposition_class(factors: Counter) -> GrothendieckClass:
    return class_of_compositions(factors.elements())


def split_interval(interval: IntervalR) -> tuple[IntervalR, IntervalR]:
    """
    Split [sigma, rho]_R by the smallest left descent k of sigma^{-1} rho.

    Returns:
        (lower, upper): the elements sigma gamma with k not a left descent
        of gamma, and those with k a left descent. The upper part holds rho.

    Raises:
        HeckeModuleException: for a one-element interval.
    """
    sigma, rho = interval.bottom, interval.top
    if sigma == rho:
        raise HeckeModuleException(f"cannot split the one-element interval {interval}")
    sigma_inv = sigma.inverse()
    k = min((sigma_inv * rho).left_descents())
    # the lower part is an interval, so its longest element is its top
    top = max((x for x in interval.elements if k not in (sigma_inv * x).left_descents()),
              key=lambda x: x.length)
    lower = IntervalR(sigma, top)
    upper = IntervalR(sigma.times_simple(k), rho)
    return lower, upper


def decompose_interval(interval: IntervalR) -> Counter:
    """Descent compositions of the simple factors of B(I)."""
    factors: Counter = Counter()
    stack = [interval]
    while stack:
        current = stack.pop()
        if current.bottom == current.top:
            gamma = current.bottom
            factors[CompositionB.from_set(gamma.right_descents(), gamma.n)] += 1
        else:
            stack.extend(split_interval(current))
    return factors


def top_part_is_submodule(interval: IntervalR) -> bool:
    """Whether the part of the split holding the top spans a submodule of B(I)."""
    _, upper = split_interval(interval)
    return wbim(interval).is_submodule(upper.elements)
