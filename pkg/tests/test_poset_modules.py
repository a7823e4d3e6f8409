import numpy as np
import pytest

from qdu_typeb_hecke.Coxeter.compositions import CompositionA, CompositionB
from qdu_typeb_hecke.Coxeter.signed_permutation import SignedPermutation
from qdu_typeb_hecke.Coxeter.weak_order import IntervalR
from qdu_typeb_hecke.Hecke.hecke_module import HeckeModuleException, direct_sum
from qdu_typeb_hecke.Hecke.poset_modules import (
    characteristic,
    class_of_compositions,
    is_ascent_compatible,
    module_from_ascent_compatible,
    module_MBP,
    module_MP_typeA,
    module_sfMBP,
    simple_module_A,
    simple_module_B,
    wbim,
)
from qdu_typeb_hecke.Posets.bn_poset import kbp, linear_extensions_B
from qdu_typeb_hecke.Posets.distinguished import all_bn_posets
from qdu_typeb_hecke.Posets.finite_poset import FinitePoset, all_posets
from qdu_typeb_hecke.QSym.qsym_elements import QSymBElement

S = SignedPermutation


@pytest.mark.parametrize("n", [1, 2])
def test_characteristic_is_the_enumerator(n):
    for poset in all_bn_posets(n):
        assert is_ascent_compatible(linear_extensions_B(poset))
        assert characteristic(module_MBP(poset)).element == kbp(poset)


@pytest.mark.parametrize("n", [1, 2])
def test_sf_modules_satisfy_the_relations(n):
    for poset in all_bn_posets(n):
        module = module_sfMBP(poset)
        module.check_relations()
        assert module.variant == "sf"


def test_sf_module_of_vee(vee_2):
    module = module_sfMBP(vee_2)
    np.testing.assert_array_equal(module.matrix(0), [[0, 0], [0, -1]])
    np.testing.assert_array_equal(module.matrix(1), [[-1, 1], [0, 0]])
    assert characteristic(module).element == QSymBElement.F((1, 1)) + QSymBElement.F((0, 2))


def test_set_that_is_not_ascent_compatible():
    X = [S((1, 2)), S((-1, 2)), S((1, -2))]
    assert not is_ascent_compatible(X)
    assert is_ascent_compatible([])


def test_module_needs_elements_of_one_kind():
    with pytest.raises(HeckeModuleException):
        module_from_ascent_compatible([])
    with pytest.raises(HeckeModuleException):
        module_from_ascent_compatible([S((1,))], variant="dual")


def test_simple_modules():
    simple = simple_module_B(CompositionB((0, 2)))
    assert simple.dim == 1
    np.testing.assert_array_equal(simple.matrix(0), [[-1]])
    np.testing.assert_array_equal(simple.matrix(1), [[0]])
    simple_a = simple_module_A(CompositionA((1, 2)))
    np.testing.assert_array_equal(simple_a.matrix(1), [[-1]])
    np.testing.assert_array_equal(simple_a.matrix(2), [[0]])


def test_full_interval_module():
    module = wbim(IntervalR(S.identity(2), S.longest(2)))
    assert module.dim == 8
    ch = characteristic(module).element
    assert ch.coefficient((2,)) == 1
    assert ch.coefficient((0, 1, 1)) == 1
    assert ch.coefficient((0, 2)) == 3
    assert ch.coefficient((1, 1)) == 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_type_A_characteristic(n):
    for poset in all_posets(n):
        assert characteristic(module_MP_typeA(poset)).element == poset.kp()


def test_characteristic_needs_a_poset_style_module(vee_2):
    with pytest.raises(HeckeModuleException):
        characteristic(direct_sum(module_MBP(vee_2)))


def test_class_of_compositions():
    cls = class_of_compositions([CompositionB((0, 2)), CompositionB((0, 2)), CompositionB((1, 1))])
    assert cls.element == 2 * QSymBElement.F((0, 2)) + QSymBElement.F((1, 1))
    assert str(cls + cls) == "4*F^B[(0,2)] + 2*F^B[(1,1)]"
