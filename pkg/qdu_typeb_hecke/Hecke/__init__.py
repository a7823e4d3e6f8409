from .certify import (
    CertificationInconclusiveError,
    IsomorphismCertificate,
    certify_isomorphism,
    chi_certificate,
    induction_certificate,
    restriction_certificate,
    theta_certificate,
    theta_chi_certificate,
    twisted_induction_certificate,
)
from .functors import (
    TWISTS,
    induce,
    induce_general,
    restrict,
    restriction_map,
    twist_chi,
    twist_phi,
    twist_theta,
)
from .grothendieck import (
    decompose_interval,
    grothendieck_decompose,
    split_interval,
    top_part_is_submodule,
)
from .hecke_module import (
    HeckeModule,
    HeckeModuleException,
    HeckeRelationError,
    direct_sum,
    tensor,
)
from .poset_modules import (
    GrothendieckClass,
    characteristic,
    is_ascent_compatible,
    module_from_ascent_compatible,
    module_MBP,
    module_MP_typeA,
    module_sfMBP,
    module_sfMP_typeA,
    simple_module_A,
    simple_module_B,
    wbim,
)

__all__ = [
    "TWISTS",
    "GrothendieckClass",
    "HeckeModule",
    "HeckeModuleException",
    "HeckeRelationError",
    "CertificationInconclusiveError",
    "IsomorphismCertificate",
    "certify_isomorphism",
    "characteristic",
    "chi_certificate",
    "decompose_interval",
    "direct_sum",
    "grothendieck_decompose",
    "induce",
    "induce_general",
    "induction_certificate",
    "is_ascent_compatible",
    "module_MBP",
    "module_MP_typeA",
    "module_from_ascent_compatible",
    "module_sfMBP",
    "module_sfMP_typeA",
    "restrict",
    "restriction_certificate",
    "restriction_map",
    "simple_module_A",
    "simple_module_B",
    "split_interval",
    "tensor",
    "theta_certificate",
    "theta_chi_certificate",
    "top_part_is_submodule",
    "twist_chi",
    "twist_phi",
    "twist_theta",
    "twisted_induction_certificate",
    "wbim",
]
