"""
Basis changes and the algebraic structure maps of QSym and QSym^B.

Products, coproducts, the right action of QSym on QSym^B and the coaction
are computed in the fundamental bases. Tensor-valued results are sorted
lists of ``(left, right, coeff)`` triples.
"""

from __future__ import annotations

import logging
from itertools import combinations, product
from typing import Iterable, Union

from ..Coxeter.compositions import CompositionA, CompositionB
from ..Coxeter.signed_permutation import Permutation, SignedPermutation, standardize
from .qsym_elements import (
    QSymBasisError,
    QSymBElement,
    QSymElement,
    TensorTerm,
    combine_terms,
)
from .truncated import TruncatedPoly, expand_truncated

log = logging.getLogger(__name__)


def _require(f: object, kind: type, basis: str) -> None:
    if not isinstance(f, kind):
        raise QSymBasisError(f"expected a {kind.__name__}, got {type(f).__name__}")
    if f.basis != basis:
        raise QSymBasisError(f"expected the {basis} basis, got {f.basis}")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# basis changes

def fundamental_to_monomial_B(f: QSymBElement) -> QSymBElement:
    """F^B_alpha = sum of M^B_beta over the refinements beta of alpha."""
    _require(f, QSymBElement, "fundamental")
    terms: dict[CompositionB, int] = {}
    for alpha, c in f.items():
        for beta in alpha.refinements():
            terms[beta] = terms.get(beta, 0) + c
    return QSymBElement(terms, "monomial")


def monomial_to_fundamental_B(f: QSymBElement) -> QSymBElement:
    _require(f, QSymBElement, "monomial")
    terms: dict[CompositionB, int] = {}
    for alpha, c in f.items():
        base = len(alpha.to_set())
        for beta in alpha.refinements():
            terms[beta] = terms.get(beta, 0) + _sign(len(beta.to_set()) - base) * c
    return QSymBElement(terms, "fundamental")


def fundamental_to_monomial_A(f: QSymElement) -> QSymElement:
    _require(f, QSymElement, "fundamental")
    terms: dict[CompositionA, int] = {}
    for alpha, c in f.items():
        for beta in alpha.refinements():
            terms[beta] = terms.get(beta, 0) + c
    return QSymElement(terms, "monomial")


def monomial_to_fundamental_A(f: QSymElement) -> QSymElement:
    _require(f, QSymElement, "monomial")
    terms: dict[CompositionA, int] = {}
    for alpha, c in f.items():
        for beta in alpha.refinements():
            terms[beta] = terms.get(beta, 0) + _sign(beta.length - alpha.length) * c
    return QSymElement(terms, "fundamental")


def to_basis(f: Union[QSymElement, QSymBElement], basis: str):
    """Rewrite ``f`` in ``basis``, a no-op when it is already there."""
    if f.basis == basis:
        return f
    if isinstance(f, QSymBElement):
        return (fundamental_to_monomial_B(f) if basis == "monomial"
                else monomial_to_fundamental_B(f))
    return (fundamental_to_monomial_A(f) if basis == "monomial"
            else monomial_to_fundamental_A(f))


# type A Hopf structure

def shuffles(first: tuple[int, ...], second: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """All interleavings of two words."""
    total = len(first) + len(second)
    for spots in combinations(range(total), len(second)):
        chosen = set(spots)
        a, b = iter(first), iter(second)
        yield tuple(next(b) if k in chosen else next(a) for k in range(total))


def product_A(f: QSymElement, g: QSymElement) -> QSymElement:
    """
    Product in the fundamental basis of QSym.

    F_alpha F_beta is the sum of F_{Des(w)} over the shuffles w of a
    permutation u with descent set set(alpha) and the shift by |alpha| of a
    permutation v with descent set set(beta).
    """
    _require(f, QSymElement, "fundamental")
    _require(g, QSymElement, "fundamental")
    terms: dict[CompositionA, int] = {}
    for alpha, a in f.items():
        m = alpha.size
        u = Permutation.with_descents(alpha.to_set(), m)
        for beta, b in g.items():
            n = beta.size
            v = Permutation.with_descents(beta.to_set(), n)
            shifted = tuple(x + m for x in v.window)
            for word in shuffles(u.window, shifted):
                comp = CompositionA.from_set(Permutation(word).right_descents(), m + n)
                terms[comp] = terms.get(comp, 0) + a * b
    return QSymElement(terms, "fundamental")


def _split_A(descents: frozenset[int], i: int, n: int) -> CompositionA:
    return CompositionA.from_set({j - i for j in descents if j > i}, n - i)


def coproduct_A(f: QSymElement) -> list[TensorTerm]:
    """Delta(F_I) = sum over cuts 0 <= i <= n of F_{I below i} ⊗ F_{I above i, shifted}."""
    _require(f, QSymElement, "fundamental")
    out: list[TensorTerm] = []
    for alpha, c in f.items():
        n, descents = alpha.size, alpha.to_set()
        for i in range(n + 1):
            left = CompositionA.from_set({j for j in descents if j < i}, i)
            out.append((left, _split_A(descents, i, n), c))
    return combine_terms(out)


def counit(f: Union[QSymElement, QSymBElement]) -> int:
    """Coefficient of the degree-0 basis element."""
    return f.coefficient(())


def apply_counit_right(terms: Iterable[TensorTerm], left_type: type) -> Union[QSymElement, QSymBElement]:
    """(id ⊗ counit) applied to a list of tensor triples."""
    out: dict = {}
    for left, right, c in terms:
        if right.size == 0:
            out[left] = out.get(left, 0) + c
    return left_type(out, "fundamental")


# type B action and coaction

def shuffle_B_huang(u: SignedPermutation, v: Permutation) -> frozenset[SignedPermutation]:
    """
    u ⧢^B v: the signed permutations w of rank m+n whose letters of absolute
    value at most m read u, and whose hat word restricted to the large
    values standardizes to v. The hat word lists the negated negative
    letters from right to left, then the positive letters from left to right.

    Built by choosing positions and signs of the n large letters; there are
    C(m+n, n) 2^n of them.
    """
    m, n = u.n, v.n
    out = set()
    for big in combinations(range(m + n), n):
        big_set = set(big)
        small = [p for p in range(m + n) if p not in big_set]
        for signs in product((1, -1), repeat=n):
            sign_at = dict(zip(big, signs))
            negatives = [p for p in big if sign_at[p] < 0]
            positives = [p for p in big if sign_at[p] > 0]
            window = [0] * (m + n)
            for p, value in zip(small, u.window):
                window[p] = value
            for k, p in enumerate(negatives[::-1] + positives):
                window[p] = sign_at[p] * (m + v.window[k])
            out.add(SignedPermutation(tuple(window)))
    log.debug(f"shuffle of {u} and {v}: {len(out)} signed permutations")
    return frozenset(out)


def hat_word(w: SignedPermutation) -> tuple[int, ...]:
    negatives = [-x for x in w.window if x < 0]
    positives = [x for x in w.window if x > 0]
    return tuple(negatives[::-1] + positives)


def shuffle_B_by_definition(u: SignedPermutation, v: Permutation) -> frozenset[SignedPermutation]:
    """u ⧢^B v by filtering all of B_{m+n} through the defining conditions."""
    m, n = u.n, v.n
    out = set()
    for w in SignedPermutation.all(m + n):
        restricted = tuple(x for x in w.window if abs(x) <= m)
        if restricted != u.window:
            continue
        large = tuple(x for x in hat_word(w) if x > m)
        if standardize(large) == v:
            out.add(w)
    return frozenset(out)


def odot_representatives(u: SignedPermutation, v: Permutation) -> QSymBElement:
    """Sum of F^B_{Des_R(w)} over w in u ⧢^B v."""
    total = u.n + v.n
    terms: dict[CompositionB, int] = {}
    for w in shuffle_B_huang(u, v):
        comp = CompositionB.from_set(w.right_descents(), total)
        terms[comp] = terms.get(comp, 0) + 1
    return QSymBElement(terms, "fundamental")


def action_odotB(f: QSymBElement, g: QSymElement) -> QSymBElement:
    """
    f ⊙^B g in the fundamental bases, extended bilinearly from
    F^B_I ⊙^B F_J computed with the representatives of smallest length.
    """
    _require(f, QSymBElement, "fundamental")
    _require(g, QSymElement, "fundamental")
    total = QSymBElement.zero()
    for alpha, a in f.items():
        u = SignedPermutation.with_descents(alpha.to_set(), alpha.size)
        for beta, b in g.items():
            v = Permutation.with_descents(beta.to_set(), beta.size)
            total = total + (a * b) * odot_representatives(u, v)
    return total


def coaction_deltaB(f: QSymBElement) -> list[TensorTerm]:
    """
    delta^B(F^B_I) = sum over 0 <= i <= n of
    F^B_{comp_B(I ∩ [0, i-1], i)} ⊗ F_{comp((I ∩ [i+1, n-1]) - i, n-i)}.
    """
    _require(f, QSymBElement, "fundamental")
    out: list[TensorTerm] = []
    for alpha, c in f.items():
        n, descents = alpha.size, alpha.to_set()
        for i in range(n + 1):
            left = CompositionB.from_set({j for j in descents if j < i}, i)
            out.append((left, _split_A(descents, i, n), c))
    return combine_terms(out)


def expand_tensor(terms: Iterable[TensorTerm], V: int, W: int) -> TruncatedPoly:
    """Sum of c * expand(left, V) ⊗ expand(right, W), left in type B."""
    total = TruncatedPoly(V + W, "B")
    for left, right, c in terms:
        lhs = expand_truncated(QSymBElement.F(left), V)
        rhs = expand_truncated(QSymElement.F(right), W)
        total = total + lhs.tensor(rhs).scale(c)
    return total


def coaction_oracle(f: QSymBElement, V: int, W: int) -> bool:
    """
    Compare delta^B(f) with f(X_{>=0} + Y_{>0}): expand f over x_0..x_{V+W}
    reading x_{V+j} as y_j.
    """
    substituted = expand_truncated(f, V + W)
    split = expand_tensor(coaction_deltaB(f), V, W)
    if substituted != split:
        log.warning(f"coaction of {f} disagrees with substitution at V={V}, W={W}")
        return False
    return True
