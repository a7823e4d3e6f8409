import pytest
import sympy

import qdu_typeb_hecke.Hecke.certify as certify_module
from qdu_typeb_hecke.Coxeter.compositions import CompositionB
from qdu_typeb_hecke.Hecke.certify import (
    CertificationInconclusiveError,
    certify_isomorphism,
    chi_certificate,
    induction_certificate,
    label_map,
    restriction_certificate,
    theta_certificate,
    theta_chi_certificate,
    twisted_induction_certificate,
)
from qdu_typeb_hecke.Hecke.hecke_module import HeckeModuleException, direct_sum
from qdu_typeb_hecke.Hecke.poset_modules import module_MBP, simple_module_B
from qdu_typeb_hecke.Posets.distinguished import all_bn_posets


@pytest.mark.parametrize("certify", [theta_certificate, chi_certificate, theta_chi_certificate])
def test_twist_certificates(certify, vee_2, cross_2):
    for poset in [*all_bn_posets(1), vee_2, cross_2]:
        certificate = certify(poset)
        assert certificate is not None
        assert certificate.is_valid()


def test_solver_finds_the_identity_class(vee_2):
    module = module_MBP(vee_2)
    certificate = certify_isomorphism(module, module)
    assert certificate is not None
    assert certificate.method.startswith("solver")
    assert certificate.is_valid()


def test_non_isomorphic_simples():
    first = simple_module_B(CompositionB((0, 2)))
    second = simple_module_B(CompositionB((1, 1)))
    assert certify_isomorphism(first, second) is None


def test_singular_intertwiners_mean_not_isomorphic(vee_2):
    # the only intertwiners are multiples of one rank-one matrix
    source = module_MBP(vee_2)
    target = direct_sum(simple_module_B(CompositionB((0, 2))), simple_module_B(CompositionB((1, 1))))
    assert len(certify_module._intertwiner_space(source, target)) == 1
    assert certify_isomorphism(source, target) is None


def test_exact_fallback_without_draws(vee_2):
    module = module_MBP(vee_2)
    certificate = certify_isomorphism(module, module, seeds=())
    assert certificate.method == "generic determinant"
    assert certificate.is_valid()


def test_fallback_above_its_dimension_is_inconclusive(vee_2, monkeypatch):
    monkeypatch.setattr(certify_module, "GENERIC_MAX_DIM", 1)
    module = module_MBP(vee_2)
    with pytest.raises(CertificationInconclusiveError):
        certify_isomorphism(module, module, seeds=())


def test_wrong_basis_map_is_rejected(vee_2):
    source = module_MBP(vee_2)
    swap = {0: {1: 1}, 1: {0: 1}}
    assert certify_isomorphism(source, source, swap) is None
    assert certify_isomorphism(source, source, label_map(source, source)) is not None


def test_shape_checks(vee_2):
    module = module_MBP(vee_2)
    with pytest.raises(HeckeModuleException):
        certify_isomorphism(module, simple_module_B(CompositionB((0, 2))))
    with pytest.raises(HeckeModuleException):
        certify_isomorphism(module, module, max_dim=1)
    with pytest.raises(HeckeModuleException):
        certify_isomorphism(module, module.restricted(1))


def test_certificate_algebra(vee_2):
    certificate = theta_certificate(vee_2)
    assert certificate.inverse().is_valid()
    assert certificate.dual().is_valid()
    assert certificate.theta().is_valid()
    loop = certificate.compose(certificate.inverse())
    assert loop.is_valid()
    assert loop.matrix.to_Matrix() == sympy.eye(2)


def test_induction_certificate(cross_2, point, down_pair, chain_1):
    assert induction_certificate(cross_2, point).is_valid()
    assert induction_certificate(chain_1, down_pair).is_valid()


@pytest.mark.slow
@pytest.mark.parametrize("twist", ["theta", "chi"])
def test_twisted_induction_certificate(twist, chain_1, down_pair):
    certificate = twisted_induction_certificate(chain_1, down_pair, twist)
    assert certificate is not None
    assert certificate.is_valid()


def test_twisted_induction_rejects_unknown_twist(chain_1, point):
    with pytest.raises(ValueError):
        twisted_induction_certificate(chain_1, point, "phi")


@pytest.mark.parametrize("twist", [None, "theta", "chi"])
def test_restriction_certificate(twist, split_3, wedge_3):
    for poset in (split_3, wedge_3):
        for m in range(4):
            certificate = restriction_certificate(poset, m, twist)
            assert certificate is not None
            assert certificate.is_valid()
