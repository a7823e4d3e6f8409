import numpy as np
import pytest

from qdu_typeb_hecke.Coxeter.signed_permutation import Permutation, SignedPermutation
from qdu_typeb_hecke.Hecke.functors import (
    TWISTS,
    induce,
    induce_general,
    induction_basis_map,
    restrict,
    restriction_map,
    twist_chi,
    twist_phi,
    twist_theta,
)
from qdu_typeb_hecke.Hecke.hecke_module import HeckeModuleException
from qdu_typeb_hecke.Hecke.poset_modules import module_MBP, module_MP_typeA
from qdu_typeb_hecke.Posets.bn_poset import linear_extensions_B
from qdu_typeb_hecke.Posets.distinguished import all_bn_posets
from qdu_typeb_hecke.Posets.finite_poset import FinitePoset
from qdu_typeb_hecke.Posets.surgery import disjoint_union_B

S = SignedPermutation


def test_theta_is_an_involution(vee_2):
    module = module_MBP(vee_2)
    twisted = twist_theta(module)
    for i in module.generators:
        np.testing.assert_array_equal(twisted.matrix(i), -(module.matrix(i) + np.eye(2, dtype=int)))
    assert twist_theta(twisted).actions == module.actions


def test_chi_transposes_and_relabels(vee_2):
    module = module_MBP(vee_2)
    twisted = twist_chi(module)
    for i in module.generators:
        np.testing.assert_array_equal(twisted.matrix(i), module.matrix(i).T)
    assert twisted.basis == (S((1, -2)), S((-2, 1)))


def test_phi(vee_2):
    module = module_MBP(vee_2)
    assert twist_phi(module) is module
    typeA = module_MP_typeA(FinitePoset.from_pairs([1, 2, 3], [(1, 2)]))
    flipped = twist_phi(typeA)
    np.testing.assert_array_equal(flipped.matrix(1), typeA.matrix(2))
    np.testing.assert_array_equal(flipped.matrix(2), typeA.matrix(1))
    w0 = Permutation.longest(3)
    assert flipped.basis == tuple(w0 * b * w0 for b in typeA.basis)


@pytest.mark.parametrize("name", sorted(TWISTS))
def test_twists_preserve_the_relations(name):
    for poset in all_bn_posets(2):
        TWISTS[name](module_MBP(poset)).check_relations()


def test_induce_glues_the_posets(cross_2, point):
    induced = induce(module_MBP(cross_2), module_MP_typeA(point))
    assert induced.dim == 12
    assert S((1, -2, -3)) in induced.basis
    assert induced.poset == disjoint_union_B(cross_2, point)


def test_induce_needs_poset_modules(vee_2, point):
    with pytest.raises(HeckeModuleException):
        induce(twist_theta(module_MBP(vee_2)), module_MP_typeA(point))
    with pytest.raises(HeckeModuleException):
        induce(module_MP_typeA(point), module_MBP(vee_2))


def test_general_induction(cross_2, point):
    induced = induce_general(module_MBP(cross_2), module_MP_typeA(point))
    assert induced.dim == 2 * 1 * 6
    assert induced.rank == 3
    assert induced.generators == [0, 1, 2]


def test_general_induction_needs_full_modules(vee_2, point):
    with pytest.raises(HeckeModuleException):
        induce_general(module_MBP(vee_2).restricted(1), module_MP_typeA(point))


def test_induction_basis_map_is_a_bijection(cross_2, point):
    images = induction_basis_map(cross_2, point)
    assert len(images) == 12
    assert set(images.values()) == set(linear_extensions_B(disjoint_union_B(cross_2, point)))


def test_restriction_summands(split_3):
    module = module_MBP(split_3)
    for m in range(4):
        summands = restrict(module, m)
        assert sum(s.left.dim * s.right.dim for s in summands) == module.dim
    assert len(restrict(module, 1)) == 5
    with pytest.raises(HeckeModuleException):
        restrict(module, 4)


def test_restriction_map_is_a_permutation(split_3):
    source, target, rows = restriction_map(split_3, 1)
    assert source.generators == [0, 2]
    assert target.generators == [0, 2]
    images = [k for row in rows.values() for k in row]
    assert sorted(images) == list(range(target.dim))


def test_restriction_summands_have_full_rank(wedge_3):
    module = module_MBP(wedge_3)
    summands = restrict(module, 2)
    assert {s.lower.elements for s in summands} == {(-3, -1, 0, 1, 3), (-2, -1, 0, 1, 2)}
    assert all(s.left.rank == 2 and s.right.rank == 1 for s in summands)
    assert sum(s.left.dim * s.right.dim for s in summands) == module.dim
