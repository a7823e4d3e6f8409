"""
Seeded random posets for the property checks.
"""

from __future__ import annotations

import logging

import numpy as np

from ..Coxeter.signed_permutation import SignedPermutation
from .bn_poset import BnPoset, poset_of
from .finite_poset import BnPosetException, FinitePoset

log = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000


def random_signed_permutation(n: int, rng: np.random.Generator) -> SignedPermutation:
    values = rng.permutation(n) + 1
    signs = rng.choice((-1, 1), size=n)
    return SignedPermutation(tuple(int(s * v) for s, v in zip(signs, values)))


def random_bn_poset(n: int, rng: np.random.Generator,
                    distinguished: bool = True, density: float = 0.3) -> BnPoset:
    """
    A random B_n poset.

    Args:
        n: rank
        rng: numpy generator, e.g. ``np.random.default_rng(seed)``
        distinguished: intersect one to three random linear orders L_sigma,
            which always gives a distinguished poset. Otherwise close a random
            symmetric relation, redrawing until it is antisymmetric.
        density: probability of each pair in the non-distinguished case
    """
    if distinguished:
        count = int(rng.integers(1, 4))
        return poset_of(random_signed_permutation(n, rng) for _ in range(count))
    ground = range(-n, n + 1)
    pairs = [(x, y) for x in ground for y in ground if x != y]
    for attempt in range(MAX_ATTEMPTS):
        chosen = [pair for pair, keep in zip(pairs, rng.random(len(pairs)) < density) if keep]
        try:
            return BnPoset.from_covers(n, chosen, symmetrize=True)
        except BnPosetException:
            continue
    log.warning(f"no antisymmetric relation after {MAX_ATTEMPTS} draws, using an antichain")
    return BnPoset.from_covers(n, [])


def random_poset(n: int, rng: np.random.Generator) -> FinitePoset:
    """Intersection of one to three random linear orders on [n]."""
    count = int(rng.integers(1, 4))
    relation = np.ones((n, n), dtype=bool)
    for _ in range(count):
        order = rng.permutation(n)
        pos = np.empty(n, dtype=int)
        pos[order] = np.arange(n)
        relation &= pos[:, None] <= pos[None, :]
    return FinitePoset(range(1, n + 1), relation)
