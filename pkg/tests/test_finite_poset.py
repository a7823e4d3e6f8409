import numpy as np
import pytest

from qdu_typeb_hecke.Coxeter.compositions import CompositionA
from qdu_typeb_hecke.Coxeter.signed_permutation import Permutation
from qdu_typeb_hecke.Posets.finite_poset import (
    BnPosetException,
    FinitePoset,
    all_posets,
    disjoint_union_A,
    linear_poset_A,
    transitive_closure,
)
from qdu_typeb_hecke.QSym.operations import product_A
from qdu_typeb_hecke.QSym.qsym_elements import QSymElement
from qdu_typeb_hecke.QSym.truncated import expand_truncated


def test_closure():
    relation = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=bool)
    closed = transitive_closure(relation)
    assert closed[0, 2]
    assert closed.diagonal().all()


def test_cycle_rejected():
    with pytest.raises(BnPosetException) as err:
        FinitePoset.from_pairs([1, 2], [(1, 2), (2, 1)])
    assert set(err.value.pair) == {1, 2}


def test_unsorted_ground_set_rejected():
    with pytest.raises(ValueError):
        FinitePoset((2, 1), np.eye(2, dtype=bool))


def test_chain_queries():
    chain = FinitePoset.chain([1, 2, 3])
    assert chain.covers() == [(1, 2), (2, 3)]
    assert chain.lt(1, 3) and not chain.lt(3, 1)
    assert chain.below(3) == [1, 2]
    assert chain.above(1) == [2, 3]
    assert chain.minimal_elements() == [1]
    assert chain.down_closure([2]) == frozenset({1, 2})
    assert chain.up_closure([2]) == frozenset({2, 3})
    assert chain.linear_extensions() == [Permutation((1, 2, 3))]
    with pytest.raises(ValueError):
        chain.leq(1, 4)


def test_antichain_extensions():
    assert len(FinitePoset.antichain([1, 2, 3]).linear_extensions()) == 6
    assert FinitePoset.antichain([]).linear_orders() == [()]


def test_extensions_need_the_standard_ground_set():
    with pytest.raises(ValueError):
        FinitePoset.chain([2, 5]).linear_extensions()


def test_dual_reverse_negate():
    poset = FinitePoset.chain([2, 1])
    assert poset.dual() == FinitePoset.chain([1, 2])
    assert poset.reverse() == FinitePoset.chain([1, 2])
    negated = FinitePoset.chain([1, 3]).negate()
    assert negated.elements == (-3, -1)
    assert negated.lt(-1, -3)
    assert FinitePoset.chain([3, 5]).standardize() == FinitePoset.chain([1, 2])


def test_regularity():
    assert FinitePoset.chain([3, 1, 2]).is_regular()
    gap = FinitePoset.from_pairs([1, 2, 3], [(1, 3)])
    assert not gap.is_regular()
    assert gap.regularity_witness() == (1, 2, 3)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 3), (3, 19)])
def test_all_posets(n, count):
    assert len(all_posets(n)) == count


def test_all_posets_cap():
    with pytest.raises(ValueError):
        all_posets(4)


def test_kp_of_two_element_posets():
    F = QSymElement.F
    assert FinitePoset.antichain([1, 2]).kp() == F((2,)) + F((1, 1))
    assert FinitePoset.chain([2, 1]).kp() == F((1, 1))
    assert FinitePoset.chain([1, 2]).kp() == F((2,))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kp_counts_p_partitions(n):
    for poset in all_posets(n):
        assert expand_truncated(poset.kp(), 3) == poset.kp_truncated(3)


def test_kp_of_disjoint_union_is_product():
    for first in all_posets(2):
        for second in all_posets(1) + all_posets(2):
            union = disjoint_union_A(first, second)
            assert len(union) == len(first) + len(second)
            assert union.kp() == product_A(first.kp(), second.kp())


def test_linear_poset_A():
    gamma = Permutation((2, 3, 1))
    assert linear_poset_A(gamma).linear_extensions() == [gamma]
    descents = gamma.right_descents()
    assert linear_poset_A(gamma).kp() == QSymElement.F(CompositionA.from_set(descents, 3))


def test_to_dict():
    assert FinitePoset.chain([2, 1]).to_dict() == {"elements": [1, 2], "covers": [[2, 1]]}
