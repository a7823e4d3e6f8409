import pytest

from qdu_typeb_hecke.Coxeter.compositions import CompositionA, CompositionB, CompositionException
from qdu_typeb_hecke.QSym.operations import to_basis
from qdu_typeb_hecke.QSym.qsym_elements import QSymBasisError, QSymBElement, QSymElement, tensor_terms

FB, MB = QSymBElement.F, QSymBElement.M


def test_terms_collect_and_cancel():
    f = FB((0, 2)) + FB((0, 2))
    assert f.coefficient((0, 2)) == 2
    assert not (f - 2 * FB((0, 2)))
    assert len(FB((1,)) + FB((0, 1))) == 2


def test_zero_part_key_is_the_unit():
    assert FB((0,)) == QSymBElement.one()
    assert QSymBElement.one().degrees() == [0]


def test_str():
    assert str(FB((0, 2)) + FB((1, 1))) == "F^B[(0,2)] + F^B[(1,1)]"
    assert str(FB((1,)) - 3 * FB((0, 1))) == "-3*F^B[(0,1)] + F^B[(1)]"
    assert str(QSymElement.M((2, 1))) == "M[(2,1)]"
    assert str(QSymBElement.zero()) == "0"


def test_bases_do_not_mix():
    with pytest.raises(QSymBasisError):
        FB((1,)) + MB((1,))
    with pytest.raises(QSymBasisError):
        FB((1,)) + QSymElement.F((1,))
    with pytest.raises(QSymBasisError):
        QSymBElement({CompositionA((1,)): 1})
    with pytest.raises(QSymBasisError):
        QSymBElement({}, "power")


def test_type_A_keys_are_validated():
    with pytest.raises(CompositionException):
        QSymElement.F((0, 1))


def test_fundamental_of_one_box_has_two_monomials():
    assert to_basis(FB((1,)), "monomial") == MB((1,)) + MB((0, 1))
    assert to_basis(FB((0, 1)), "monomial") == MB((0, 1))


@pytest.mark.parametrize("n", range(4))
def test_basis_changes_are_inverse(n):
    for alpha in CompositionB.all(n):
        f = FB(alpha)
        assert to_basis(to_basis(f, "monomial"), "fundamental") == f
    for alpha in CompositionA.all(n):
        f = QSymElement.F(alpha)
        assert to_basis(to_basis(f, "monomial"), "fundamental") == f


def test_homogeneous_components():
    f = FB((0, 2)) + FB((1,)) + QSymBElement.one()
    assert f.degrees() == [0, 1, 2]
    assert not f.is_homogeneous()
    assert f.homogeneous_component(2) == FB((0, 2))


def test_records_and_frame():
    f = FB((0, 2)) + 2 * FB((1, 1))
    assert f.to_records() == [
        {"basis": "FundamentalB", "composition": [0, 2], "coeff": 1},
        {"basis": "FundamentalB", "composition": [1, 1], "coeff": 2},
    ]
    frame = f.to_frame()
    assert list(frame.columns) == ["basis", "composition", "coeff"]
    assert frame["coeff"].sum() == 3


def test_tensor_terms():
    terms = tensor_terms(FB((1,)) + FB((0, 1)), QSymElement.F((1,)))
    assert terms == [
        (CompositionB((0, 1)), CompositionA((1,)), 1),
        (CompositionB((1,)), CompositionA((1,)), 1),
    ]
