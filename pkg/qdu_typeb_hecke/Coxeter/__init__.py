from .compositions import CompositionA, CompositionB, CompositionException
from .signed_permutation import (
    MAX_RANK,
    Permutation,
    RankMismatchError,
    SignedPermutation,
    SignedPermutationException,
    standardize,
)
from .weak_order import IntervalR, NotComparableError, interval_R, leq_weak_R

__all__ = [
    "MAX_RANK",
    "CompositionA",
    "CompositionB",
    "CompositionException",
    "IntervalR",
    "NotComparableError",
    "Permutation",
    "RankMismatchError",
    "SignedPermutation",
    "SignedPermutationException",
    "interval_R",
    "leq_weak_R",
    "standardize",
]
