import numpy as np
import pytest

from qdu_typeb_hecke.Coxeter.signed_permutation import SignedPermutation
from qdu_typeb_hecke.Hecke.hecke_module import (
    HeckeModule,
    HeckeModuleException,
    HeckeRelationError,
    coxeter_m,
    direct_sum,
    generators_of,
    tensor,
)
from qdu_typeb_hecke.Hecke.poset_modules import module_MBP, module_MP_typeA

S = SignedPermutation


def test_generators_and_orders():
    assert generators_of("B", 3) == [0, 1, 2]
    assert generators_of("A", 3) == [1, 2]
    assert coxeter_m("B", 0, 1) == 4
    assert coxeter_m("A", 1, 2) == 3
    assert coxeter_m("B", 0, 2) == 2
    with pytest.raises(HeckeModuleException):
        generators_of("D", 3)


def test_matrices_of_vee(vee_2):
    module = module_MBP(vee_2)
    assert module.basis == (S((-1, 2)), S((2, -1)))
    np.testing.assert_array_equal(module.matrix(0), [[-1, 0], [0, 0]])
    np.testing.assert_array_equal(module.matrix(1), [[0, 1], [0, -1]])


def test_quadratic_relation_failure():
    with pytest.raises(HeckeRelationError) as err:
        HeckeModule("B", 1, ["a"], {0: [{0: 1}]})
    assert err.value.relation == "quadratic"
    assert err.value.generators == (0,)


def test_commutation_failure():
    actions = {1: [{0: -1, 1: 1}, {}], 3: [{}, {1: -1}]}
    with pytest.raises(HeckeRelationError) as err:
        HeckeModule("A", 4, ["a", "b"], actions)
    assert err.value.relation == "commutation"
    assert err.value.generators == (1, 3)


def test_malformed_modules():
    with pytest.raises(HeckeModuleException):
        HeckeModule("B", 1, ["a"], {1: [{}]})
    with pytest.raises(HeckeModuleException):
        HeckeModule("B", 1, ["a", "b"], {0: [{}]})
    with pytest.raises(HeckeModuleException):
        HeckeModule("B", 1, ["a", "a"], {0: [{}, {}]})
    with pytest.raises(HeckeModuleException):
        HeckeModule("B", 1, ["a"], {0: [{3: 1}]})
    with pytest.raises(HeckeModuleException):
        HeckeModule("B", 1, ["a"], {0: [{}]}, variant="dual")


def test_action_on_vectors(vee_2):
    module = module_MBP(vee_2)
    assert module.act({0: 1}, 1) == {1: 1}
    assert module.act_word({0: 1}, [1, 1]) == {1: -1}
    assert module.act({0: 1, 1: 1}, 0) == {0: -1}


def test_submodules(vee_2):
    module = module_MBP(vee_2)
    assert module.is_submodule([S((2, -1))])
    assert not module.is_submodule([S((-1, 2))])
    with pytest.raises(HeckeModuleException):
        module.index(S((1, 2)))


def test_restricted_drops_a_generator(vee_2):
    module = module_MBP(vee_2).restricted(1)
    assert module.generators == [0]
    with pytest.raises(HeckeModuleException):
        module.matrix(1)


def test_json_round_trip(vee_2, tmp_path):
    module = module_MBP(vee_2)
    path = tmp_path / "module.json"
    module.to_json(path)
    loaded = HeckeModule.from_json(path.read_text())
    assert loaded.basis == module.basis
    assert loaded.actions == module.actions
    assert loaded.variant == "bar"


def test_malformed_dump():
    with pytest.raises(HeckeModuleException):
        HeckeModule.from_dict({"type": "B", "rank": 1, "basis": ["[1]"]})


def test_empty_module_cannot_be_dumped():
    with pytest.raises(HeckeModuleException):
        HeckeModule("B", 1, [], {0: []}).to_dict()


def test_tensor_and_direct_sum(vee_2, down_pair):
    left, right = module_MBP(vee_2), module_MP_typeA(down_pair)
    product = tensor(left, right)
    assert product.dim == left.dim * right.dim
    assert product.generators == [0, 1, 3]
    product.check_relations()
    total = direct_sum(left, left)
    assert total.dim == 4
    assert total.basis[2] == (1, S((-1, 2)))
    total.check_relations()
    with pytest.raises(HeckeModuleException):
        tensor(right, left)
    with pytest.raises(HeckeModuleException):
        direct_sum(left, right)
    with pytest.raises(HeckeModuleException):
        direct_sum()
