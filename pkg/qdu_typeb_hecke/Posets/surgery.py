"""
Cutting and gluing B_n posets.

Covers the pairs swapped between linear extensions and the splitting of a
poset along such a pair, the type-B disjoint union with a poset on [n] and
the matching product of signed permutations, minimal coset representatives
for the parabolic subgroup B_m x S_n, and the decomposition of a B_n poset
into lower and upper subposets behind the coaction on K^B_P.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

import numpy as np

from ..Coxeter.signed_permutation import Permutation, SignedPermutation, standardize
from ..QSym.qsym_elements import TensorTerm, combine_terms, tensor_terms
from .bn_poset import BnPoset, kbp, linear_extensions_B
from .finite_poset import BnPosetException, FinitePoset, Pair

log = logging.getLogger(__name__)


def incB(poset: BnPoset) -> frozenset[Pair]:
    """
    Ordered pairs (u, v) with u below v in one type-B linear extension and
    above it in another.
    """
    extensions = linear_extensions_B(poset)
    if len(extensions) < 2:
        return frozenset()
    pos = np.stack([gamma.positions() for gamma in extensions])
    ever_below = np.any(pos[:, :, None] < pos[:, None, :], axis=0)
    swapped = ever_below & ever_below.T
    n = poset.n
    return frozenset((int(a) - n, int(b) - n) for a, b in np.argwhere(swapped))


def extend_pair(poset: BnPoset, u: int, v: int) -> BnPoset:
    """P_(u,v): add u ≺ v and -v ≺ -u, then close."""
    if (u, v) not in incB(poset):
        raise BnPosetException(f"({u}, {v}) is not swapped between linear extensions",
                               pair=(u, v))
    covers = poset.covers() + [(u, v), (-v, -u)]
    return BnPoset.from_covers(poset.n, covers)


def disjoint_union_B(first: BnPoset, second: FinitePoset) -> BnPoset:
    """
    P1 ⊔_B P2 on [-(m+n), m+n]. The middle block [-m, m] carries P1, the
    block [m+1, m+n] carries P2 shifted by m, and [-(m+n), -(m+1)] carries
    its mirror image.
    """
    if len(second) and not second.is_on_range():
        raise ValueError(f"expected a poset on [1,{len(second)}], got {list(second.elements)}")
    m, n = first.n, len(second)
    pairs = first.strict_pairs()
    for x, y in second.strict_pairs():
        pairs.append((x + m, y + m))
        pairs.append((-(y + m), -(x + m)))
    return BnPoset.from_covers(m + n, pairs)


def bullet_B(sigma: SignedPermutation, rho: Permutation) -> SignedPermutation:
    """sigma ·_B rho: sigma on [-m, m] and rho shifted by m on [m+1, m+n]."""
    m = sigma.n
    return SignedPermutation(sigma.window + tuple(r + m for r in rho.window))


def is_minimal_coset_representative(delta: SignedPermutation, m: int) -> bool:
    """0 < delta^{-1}(1) < ... < delta^{-1}(m) and delta^{-1}(m+1) < ... < delta^{-1}(m+n)."""
    inv = delta.inverse().window
    head, tail = inv[:m], inv[m:]
    return (all(v > 0 for v in head)
            and all(a < b for a, b in zip(head, head[1:]))
            and all(a < b for a, b in zip(tail, tail[1:])))


def minimal_coset_representatives(m: int, n: int) -> list[SignedPermutation]:
    """
    Minimal length representatives of the cosets (B_m x S_n) delta in
    B_{m+n}; there are C(m+n, m) 2^n of them.
    """
    total = m + n
    reps = []
    for head in combinations(range(1, total + 1), m):
        rest = [v for v in range(1, total + 1) if v not in head]
        for signs in product((1, -1), repeat=n):
            tail = sorted(s * v for s, v in zip(signs, rest))
            reps.append(SignedPermutation(tuple(head) + tuple(tail)).inverse())
    log.debug(f"{len(reps)} minimal coset representatives for m={m}, n={n}")
    return sorted(reps)


def shuffle_B_coset(sigma: SignedPermutation, rho: Permutation) -> frozenset[SignedPermutation]:
    """sigma ⧢_B rho: (sigma ·_B rho) delta over the minimal coset representatives."""
    base = bullet_B(sigma, rho)
    return frozenset(base * delta for delta in minimal_coset_representatives(sigma.n, rho.n))


def coset_factorization(gamma: SignedPermutation, m: int) -> tuple[SignedPermutation, Permutation, SignedPermutation]:
    """
    Split gamma as (gamma1 ·_B gamma2) delta with delta a minimal coset
    representative.

    Returns:
        (gamma1, gamma2, delta)
    """
    n = gamma.n
    if not 0 <= m <= n:
        raise ValueError(f"split point {m} is outside [0,{n}]")
    gamma1 = SignedPermutation(tuple(v for v in gamma.window if abs(v) <= m))
    large = [gamma(y) - m for y in range(-n, n + 1) if y != 0 and m < gamma(y)]
    gamma2 = Permutation(tuple(large))
    delta = bullet_B(gamma1, gamma2).inverse() * gamma
    return gamma1, gamma2, delta


# lower and upper subposets

def is_type_B_subset(subset: frozenset[int]) -> bool:
    return 0 in subset and all(-x in subset for x in subset)


def lower_subposets_B(poset: BnPoset, m: int) -> list[FinitePoset]:
    """
    LS^B(P; m): type-B subposets Q with 2m+1 elements such that every y
    with -x ⪯ y ⪯ x for some x in Q lies in Q.
    """
    n = poset.n
    if not 0 <= m <= n:
        raise ValueError(f"size {m} is outside [0,{n}]")
    found = []
    for values in combinations(range(1, n + 1), m):
        ground = frozenset({0} | set(values) | {-v for v in values})
        closed = all(y in ground
                     for x in ground
                     for y in poset.elements
                     if poset.leq(-x, y) and poset.leq(y, x))
        if closed:
            found.append(poset.induced(ground))
    log.debug(f"{len(found)} lower subposets of size {2 * m + 1}")
    return found


def upper_subposets(poset: BnPoset, lower: FinitePoset) -> list[FinitePoset]:
    """
    upper(Q): subposets U of P minus the down-closure of Q holding one
    element of each absolute value outside Q, closed upwards inside it.
    U has n - m elements; a Q whose complement misses some absolute value
    has no upper subposet.
    """
    rest = [x for x in poset.elements if x not in poset.down_closure(lower.elements)]
    by_value: dict[int, list[int]] = {}
    for x in rest:
        by_value.setdefault(abs(x), []).append(x)
    rest_set = set(rest)
    expected = poset.n - (len(lower) - 1) // 2
    found = []
    for choice in product(*by_value.values()):
        chosen = set(choice)
        if len(chosen) != expected:
            continue
        if all(y in chosen for x in chosen for y in poset.above(x) if y in rest_set):
            found.append(poset.induced(chosen))
    if not found:
        log.warning(f"no upper subposet over {list(lower.elements)}")
    return found


def standardize_B(lower: FinitePoset) -> BnPoset:
    """st_B(Q): relabel x^Q_{-m} < ... < x^Q_m by -m..m."""
    if not is_type_B_subset(frozenset(lower.elements)):
        raise ValueError(f"{list(lower.elements)} is not a type-B subset")
    return BnPoset((len(lower) - 1) // 2, lower.relation)


def standardize_A(upper: FinitePoset) -> FinitePoset:
    """st(U): relabel y_1 < ... < y_k by 1..k."""
    return upper.standardize()


def st_plus(gamma: SignedPermutation, m: int) -> SignedPermutation:
    if not 0 <= m <= gamma.n:
        raise ValueError(f"split point {m} is outside [0,{gamma.n}]")
    head = gamma.window[:m]
    return SignedPermutation(tuple(
        (1 if v > 0 else -1) * sum(1 for w in head if abs(w) <= abs(v)) for v in head
    ))


def st_minus(gamma: SignedPermutation, m: int) -> Permutation:
    if not 0 <= m <= gamma.n:
        raise ValueError(f"split point {m} is outside [0,{gamma.n}]")
    return standardize(gamma.window[m:])


def conc(lower: FinitePoset, upper: FinitePoset,
         gamma1: SignedPermutation, gamma2: Permutation) -> SignedPermutation:
    """Inverse of the restriction map: x^Q_{gamma1(i)} then y^U_{gamma2(i-m)}."""
    m = gamma1.n
    xs = lower.elements
    ys = upper.elements
    head = tuple(xs[gamma1(i) + m] for i in range(1, m + 1))
    tail = tuple(ys[gamma2(i) - 1] for i in range(1, gamma2.n + 1))
    return SignedPermutation(head + tail)


@dataclass(frozen=True)
class Restriction:
    """Image of one extension under the restriction bijection."""

    lower: FinitePoset
    upper: FinitePoset
    gamma1: SignedPermutation
    gamma2: Permutation


class RestrictionBijection:
    """
    Sigma^B_R(P) against the disjoint union over Q in LS^B(P; m) and U in
    upper(Q) of Sigma^B_R(st_B(Q)) x Sigma_R(st(U)).
    """

    def __init__(self, poset: BnPoset, m: int) -> None:
        if not 0 <= m <= poset.n:
            raise ValueError(f"split point {m} is outside [0,{poset.n}]")
        self.poset = poset
        self.m = m

    def forward(self, gamma: SignedPermutation) -> Restriction:
        m, n = self.m, self.poset.n
        lower = self.poset.induced(gamma(i) for i in range(-m, m + 1))
        upper = self.poset.induced(gamma(i) for i in range(m + 1, n + 1))
        return Restriction(lower, upper, st_plus(gamma, m), st_minus(gamma, m))

    def inverse(self, image: Restriction) -> SignedPermutation:
        return conc(image.lower, image.upper, image.gamma1, image.gamma2)

    def domain(self) -> tuple[SignedPermutation, ...]:
        return linear_extensions_B(self.poset)

    def codomain(self) -> Iterator[Restriction]:
        for lower in lower_subposets_B(self.poset, self.m):
            left = linear_extensions_B(standardize_B(lower))
            for upper in upper_subposets(self.poset, lower):
                for gamma1 in left:
                    for gamma2 in standardize_A(upper).linear_extensions():
                        yield Restriction(lower, upper, gamma1, gamma2)

    def check(self) -> bool:
        """Both composites are identities and the images land in the codomain."""
        images = {gamma: self.forward(gamma) for gamma in self.domain()}
        targets = set(self.codomain())
        if set(images.values()) != targets:
            return False
        return all(self.inverse(image) == gamma for gamma, image in images.items())


def restriction_bijection(poset: BnPoset, m: int) -> RestrictionBijection:
    return RestrictionBijection(poset, m)


def coaction_of_poset(poset: BnPoset) -> list[TensorTerm]:
    """Sum over m, Q and U of K^B_{st_B(Q)} ⊗ K_{st(U)}."""
    terms: list[TensorTerm] = []
    for m in range(poset.n + 1):
        for lower in lower_subposets_B(poset, m):
            left = kbp(standardize_B(lower))
            for upper in upper_subposets(poset, lower):
                terms.extend(tensor_terms(left, standardize_A(upper).kp()))
    return combine_terms(terms)
