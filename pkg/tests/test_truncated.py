import pytest

from qdu_typeb_hecke.Coxeter.compositions import CompositionA, CompositionB
from qdu_typeb_hecke.QSym.operations import to_basis
from qdu_typeb_hecke.QSym.qsym_elements import QSymBElement, QSymElement
from qdu_typeb_hecke.QSym.truncated import TruncatedPoly, expand_truncated


def test_one_box():
    # x_0 + x_1 + x_2
    expected = TruncatedPoly(2, "B", {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert expand_truncated(QSymBElement.F((1,)), 2) == expected
    assert expand_truncated(QSymBElement.M((1,)), 2) == TruncatedPoly(2, "B", {(1, 0, 0): 1})


def test_zero_first_part_avoids_x0():
    expected = TruncatedPoly(2, "B", {(0, 1, 0): 1, (0, 0, 1): 1})
    assert expand_truncated(QSymBElement.F((0, 1)), 2) == expected


def test_type_A_strict_pair():
    assert expand_truncated(QSymElement.F((1, 1)), 2) == TruncatedPoly(2, "A", {(1, 1): 1})
    assert str(expand_truncated(QSymElement.F((2,)), 1)) == "x1^2"


@pytest.mark.parametrize("n", range(4))
def test_fundamental_and_monomial_expansions_agree(n):
    for alpha in CompositionB.all(n):
        f = QSymBElement.F(alpha)
        assert expand_truncated(f, 3) == expand_truncated(to_basis(f, "monomial"), 3)
    for alpha in CompositionA.all(n):
        f = QSymElement.F(alpha)
        assert expand_truncated(f, 3) == expand_truncated(to_basis(f, "monomial"), 3)


def test_polynomial_arithmetic():
    x = TruncatedPoly(1, "B", {(1, 0): 1})
    y = TruncatedPoly(1, "B", {(0, 1): 1})
    assert (x + y) * (x + y) == TruncatedPoly(1, "B", {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert not (x - x)
    assert (x + y).scale(3).degrees() == [1]


def test_tensor_places_the_second_alphabet_after_the_first():
    x0 = TruncatedPoly(1, "B", {(1, 0): 1})
    y1 = TruncatedPoly(2, "A", {(1, 0): 1})
    assert x0.tensor(y1) == TruncatedPoly(3, "B", {(1, 0, 1, 0): 1})
    with pytest.raises(ValueError):
        x0.tensor(x0)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        expand_truncated(QSymBElement.F((1,)), 0)
    with pytest.raises(ValueError):
        TruncatedPoly(1, "C")
    with pytest.raises(ValueError):
        TruncatedPoly(1, "B", {(1,): 1})
    with pytest.raises(ValueError):
        TruncatedPoly(1, "B") + TruncatedPoly(2, "B")
